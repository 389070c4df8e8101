#pragma once

#include <Eigen/Dense>
#include <utility>

#include "hda/sample.hpp"

namespace hda {

//! Indices with |gamma| below this use the exponential (index-zero) branch
//! of the normalized tail functions and of the scale estimator.
inline constexpr double kGammaZeroTol = 1e-8;

//! One-dimensional tail fit at level n/k: extreme value index gamma plus
//! the location/scale pair anchoring the normalized tail function at the
//! empirical 1 - k/n quantile.
struct EvtFit {
  double gamma = 0.0;
  double scale = 1.0;
  double location = 0.0;
  int k = 0;
  Eigen::Index n = 0;
};

//! Selects a branch of the canonical psi family.
struct PsiForm {
  double gamma = 0.0;
};

//! Descending order statistics: out[0] >= out[1] >= ... (ties preserved).
Eigen::ArrayXd order_statistics(const UnivariateSeries& series);
Eigen::ArrayXd order_statistics(const Eigen::ArrayXd& values);

//! Pickands estimate of the extreme value index from descending order
//! statistics, using blocks of size m = ceil(k/4). Location and scale
//! invariant; admits gamma of any sign.
double pickands_gamma(const Eigen::ArrayXd& ordered, int k);

//! (scale, location) at level n/k: location = X_(k), scale from the
//! X_(k) - X_(2k) spacing normalized by gamma. Both equivariant under
//! affine maps of the data.
std::pair<double, double> scale_location(const Eigen::ArrayXd& ordered, int k,
                                         double gamma);

//! Convenience: order statistics + pickands_gamma + scale_location.
EvtFit fit_evt(const Eigen::ArrayXd& values, int k);

//! Canonical normalized tail function indexed by gamma; extended-real
//! codomain. Non-decreasing in y for every gamma.
double psi(PsiForm form, double y);

//! Left-continuous inverse of psi on (0, infinity).
double psi_inverse(PsiForm form, double s);

//! psi evaluated after the affine change that anchors its canonical form
//! at the fitted location/scale, i.e. (1 + gamma*y)^(1/gamma) on its
//! support. Continuous in gamma; equals exp(y) at gamma == 0.
double psi_unified(double gamma, double y);

}  // namespace hda
