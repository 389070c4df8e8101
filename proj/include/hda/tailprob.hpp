#pragma once

#include "hda/fit.hpp"

namespace hda {

enum class QueryMode { Joint, Marginal2 };

struct TailQuery {
  double u = 0.0;
  double v = 0.0;
  QueryMode mode = QueryMode::Joint;
};

enum class TailMethod {
  NonparametricE0,
  SemiparametricE0,
  NonparametricSqcap,
  SemiparametricSqcap,
};

struct TailEstimate {
  double probability = 0.0;
  TailMethod method = TailMethod::NonparametricE0;
  int k = 0;
  //! Set when the raw estimate fell outside [0,1]; such queries sit below
  //! the fitted level and the tail approximation is not meaningful there.
  bool clamped = false;
};

enum class MethodChoice { Auto, Nonparametric, Semiparametric };

//! P(X1 > u, X2 > v) approximated as (k/n) times the fitted measure of the
//! normalized upper rectangle. Auto picks the semi-parametric route when the
//! spectral sample has at least 50 points.
TailEstimate joint_tail(const HdaModel& model, const BivariateSample& sample,
                        const TailQuery& q, MethodChoice choice = MethodChoice::Auto);

//! P(X2 > v) from a Sqcap fit: (k/n) / psi((v - location)/scale).
TailEstimate marginal2_tail(const HdaModel& sqcap_model, double v);

}  // namespace hda
