#pragma once

#include <optional>

#include "hda/evt.hpp"
#include "hda/sample.hpp"
#include "hda/spectral.hpp"

namespace hda {

enum class CategoryKind {
  ZeroSecondMarginal,
  ZeroFirstMarginal,
  BothAxes,
  NoAsymptoticIndependence,
};

//! Classification of the asymptotic-independence structure together with
//! the boundary-mass evidence it was based on.
struct Category {
  CategoryKind kind = CategoryKind::NoAsymptoticIndependence;
  double m0 = 0.0;
  double m1 = 0.0;
  double interior = 0.0;
};

enum class Cone { StandardE0, NonStandardSqcap, NonStandardE0 };

//! Fitted hidden-tail model: cone label, tail fit of the driving series,
//! and the empirical standardized spectral sample.
struct HdaModel {
  Cone cone = Cone::StandardE0;
  EvtFit evt;
  SpectralSample spectral;
  int k = 0;
  Eigen::Index n = 0;
};

//! Boundary-concentration rule over the detection spectral sample.
//! BothAxes when both boundary masses reach theta; a single boundary needs
//! 2*theta; otherwise no evidence of asymptotic independence.
Category classify(const SpectralSample& detection, double delta = 0.05,
                  double theta = 0.35);

//! Tail fit of the min series plus the standard spectral sample.
HdaModel fit_standard(const BivariateSample& s, int k);

struct NonstandardFit {
  HdaModel sqcap;
  std::optional<HdaModel> e0;
  //! Non-parametric joint mass at the origin rectangle, the statistic that
  //! decided whether the second-stage fit ran.
  double sqcap_joint_mass = 0.0;
};

//! Tail fit of the second component plus the non-standard spectral sample.
//! When the fitted measure puts (nearly) no mass on the joint upper quadrant
//! (origin mass < joint_threshold), a second-stage fit on the min series is
//! attached. Callers handling a zero *first* marginal swap components first.
NonstandardFit fit_nonstandard(const BivariateSample& s, int k,
                               double joint_threshold = 0.05);

enum class ConeMode { E0, Sqcap };
enum class RectForm { UpperRect, SecondMarginalStrip };

//! Empirical measure of ((x,inf] x (y,inf]) after location/scale
//! normalization: count / k. Sqcap mode also answers strip queries
//! [-inf, x] x (y, inf].
double nu_nonparametric(const BivariateSample& s, const EvtFit& evt, double x,
                        double y, ConeMode mode,
                        RectForm form = RectForm::UpperRect);

//! Standardized-measure mass of (a,inf] x (b,inf] (a, b > 0) from the
//! spectral sample; NonStandard models also answer strip queries
//! [0,a] x (b,inf]. Exactly homogeneous: value(c*a, c*b) = value(a, b)/c.
double tilde_nu_from_spectral(const HdaModel& m, double a, double b,
                              RectForm form = RectForm::UpperRect);

//! Model-based measure of ((x,inf] x (y,inf]) in the fitted location/scale
//! coordinates: the standardized mass evaluated at the psi images of the
//! rectangle corners.
double nu_semiparametric(const HdaModel& m, double x, double y);

//! Rectangle-mass view over either estimation route.
class TailMeasure {
 public:
  enum class Kind {
    NonparametricE0,
    NonparametricSqcap,
    SemiparametricE0,
    SemiparametricSqcap,
  };

  static TailMeasure nonparametric(const BivariateSample& s, const EvtFit& evt,
                                   ConeMode mode);
  static TailMeasure semiparametric(const HdaModel& m);

  double upper(double x, double y) const;
  //! Second-marginal strip [.., x] x (y, inf]; Sqcap kinds only.
  double strip(double x, double y) const;
  Kind kind() const { return kind_; }

 private:
  TailMeasure() = default;
  Kind kind_ = Kind::NonparametricE0;
  const BivariateSample* sample_ = nullptr;
  EvtFit evt_;
  std::optional<HdaModel> model_;
};

}  // namespace hda
