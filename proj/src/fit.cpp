#include "hda/fit.hpp"

#include <cmath>
#include <limits>

#include "hda/errors.hpp"

namespace hda {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Mean over standard spectral points of min(w1/a, w2/b), where
// (w1, w2) is the angular point with min coordinate 1 recovered from t.
// a, b in [0, inf); IEEE division gives w/0 = inf, so a zero coordinate
// drops its constraint (the "w/0 = inf" convention).
double standard_upper(const Eigen::ArrayXd& t, double a, double b) {
  double acc = 0.0;
  const Eigen::Index m = t.size();
  for (Eigen::Index i = 0; i < m; ++i) {
    const double ti = t[i];
    const double w1 = ti <= 0.5 ? (1.0 - ti) / ti : 1.0;
    const double w2 = ti >= 0.5 ? ti / (1.0 - ti) : 1.0;
    acc += std::min(w1 / a, w2 / b);
  }
  return acc / static_cast<double>(m);
}

// Mean of min(s/a, 1/b) with s = t/(1-t) in [0, inf]; s == 0 contributes
// nothing to an open upper rectangle.
double nonstandard_upper(const Eigen::ArrayXd& t, double a, double b) {
  double acc = 0.0;
  const Eigen::Index m = t.size();
  for (Eigen::Index i = 0; i < m; ++i) {
    const double s = t[i] >= 1.0 ? kInf : t[i] / (1.0 - t[i]);
    if (s == 0.0) continue;
    acc += std::min(s / a, 1.0 / b);
  }
  return acc / static_cast<double>(m);
}

// Mean of max(1/b - s/a, 0) for the strip [0,a] x (b,inf].
double nonstandard_strip(const Eigen::ArrayXd& t, double a, double b) {
  if (std::isinf(a)) return 1.0 / b;  // every direction lies in [0, inf]
  double acc = 0.0;
  const Eigen::Index m = t.size();
  for (Eigen::Index i = 0; i < m; ++i) {
    const double s = t[i] >= 1.0 ? kInf : t[i] / (1.0 - t[i]);
    if (s == 0.0) {
      acc += 1.0 / b;  // the zero direction always lies in [0, a]
      continue;
    }
    acc += std::max(1.0 / b - s / a, 0.0);
  }
  return acc / static_cast<double>(m);
}

double tilde_nu_eval(const HdaModel& m, double a, double b, RectForm form) {
  if (m.spectral.selected() < 1)
    throw Error(ErrorCode::DegenerateData, "empty spectral sample");
  if (m.spectral.variant == SpectralVariant::NonStandard) {
    return form == RectForm::UpperRect ? nonstandard_upper(m.spectral.points, a, b)
                                       : nonstandard_strip(m.spectral.points, a, b);
  }
  if (form != RectForm::UpperRect)
    throw Error(ErrorCode::InvalidConfig,
                "strip queries are defined for non-standard models only");
  return standard_upper(m.spectral.points, a, b);
}

}  // namespace

Category classify(const SpectralSample& detection, double delta, double theta) {
  if (detection.variant != SpectralVariant::Detection)
    throw Error(ErrorCode::InvalidConfig, "classify expects a detection spectral sample");
  const BoundaryMass bm = boundary_mass(detection, delta);
  Category out;
  out.m0 = bm.m0;
  out.m1 = bm.m1;
  out.interior = bm.interior;
  if (bm.m0 >= theta && bm.m1 >= theta)
    out.kind = CategoryKind::BothAxes;
  else if (bm.m0 >= 2.0 * theta)
    out.kind = CategoryKind::ZeroSecondMarginal;
  else if (bm.m1 >= 2.0 * theta)
    out.kind = CategoryKind::ZeroFirstMarginal;
  else
    out.kind = CategoryKind::NoAsymptoticIndependence;
  return out;
}

HdaModel fit_standard(const BivariateSample& s, int k) {
  HdaModel m;
  m.cone = Cone::StandardE0;
  m.evt = fit_evt(derive_series(s, SeriesRole::Min).values, k);
  m.spectral = standard_spectral(antiranks(s, RankReference::MinRef), k);
  m.k = k;
  m.n = s.n();
  return m;
}

NonstandardFit fit_nonstandard(const BivariateSample& s, int k,
                               double joint_threshold) {
  NonstandardFit out;
  out.sqcap.cone = Cone::NonStandardSqcap;
  out.sqcap.evt = fit_evt(s.x2, k);
  out.sqcap.spectral = nonstandard_spectral(antiranks(s, RankReference::SecondCompRef), k);
  out.sqcap.k = k;
  out.sqcap.n = s.n();
  out.sqcap_joint_mass =
      nu_nonparametric(s, out.sqcap.evt, 0.0, 0.0, ConeMode::Sqcap);
  if (out.sqcap_joint_mass < joint_threshold) {
    HdaModel e0 = fit_standard(s, k);
    e0.cone = Cone::NonStandardE0;
    out.e0 = std::move(e0);
  }
  return out;
}

double nu_nonparametric(const BivariateSample& s, const EvtFit& evt, double x,
                        double y, ConeMode mode, RectForm form) {
  if (form == RectForm::SecondMarginalStrip && mode != ConeMode::Sqcap)
    throw Error(ErrorCode::InvalidConfig, "strip queries need Sqcap mode");
  const double d = evt.location;
  const double c = evt.scale;
  Eigen::Index count = 0;
  for (Eigen::Index i = 0; i < s.n(); ++i) {
    const double z1 = (s.x1[i] - d) / c;
    const double z2 = (s.x2[i] - d) / c;
    const bool hit = form == RectForm::UpperRect ? (z1 > x && z2 > y)
                                                 : (z1 <= x && z2 > y);
    if (hit) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(evt.k);
}

double tilde_nu_from_spectral(const HdaModel& m, double a, double b,
                              RectForm form) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw Error(ErrorCode::InvalidConfig, "rectangle coordinates must be finite and > 0");
  return tilde_nu_eval(m, a, b, form);
}

double nu_semiparametric(const HdaModel& m, double x, double y) {
  const double a = psi_unified(m.evt.gamma, x);
  const double b = psi_unified(m.evt.gamma, y);
  if (std::isinf(a) || std::isinf(b)) return 0.0;
  return tilde_nu_eval(m, a, b, RectForm::UpperRect);
}

TailMeasure TailMeasure::nonparametric(const BivariateSample& s, const EvtFit& evt,
                                       ConeMode mode) {
  TailMeasure t;
  t.kind_ = mode == ConeMode::E0 ? Kind::NonparametricE0 : Kind::NonparametricSqcap;
  t.sample_ = &s;
  t.evt_ = evt;
  return t;
}

TailMeasure TailMeasure::semiparametric(const HdaModel& m) {
  TailMeasure t;
  t.kind_ = m.cone == Cone::NonStandardSqcap ? Kind::SemiparametricSqcap
                                             : Kind::SemiparametricE0;
  t.model_ = m;
  t.evt_ = m.evt;
  return t;
}

double TailMeasure::upper(double x, double y) const {
  switch (kind_) {
    case Kind::NonparametricE0:
      return nu_nonparametric(*sample_, evt_, x, y, ConeMode::E0);
    case Kind::NonparametricSqcap:
      return nu_nonparametric(*sample_, evt_, x, y, ConeMode::Sqcap);
    default:
      return nu_semiparametric(*model_, x, y);
  }
}

double TailMeasure::strip(double x, double y) const {
  if (kind_ == Kind::NonparametricSqcap)
    return nu_nonparametric(*sample_, evt_, x, y, ConeMode::Sqcap,
                            RectForm::SecondMarginalStrip);
  if (kind_ == Kind::SemiparametricSqcap) {
    const double a = psi_unified(model_->evt.gamma, x);
    const double b = psi_unified(model_->evt.gamma, y);
    if (std::isinf(b)) return 0.0;
    return tilde_nu_eval(*model_, a, b, RectForm::SecondMarginalStrip);
  }
  throw Error(ErrorCode::InvalidConfig, "strip queries are Sqcap-only");
}

}  // namespace hda
