#include "hda/spectral.hpp"

#include <cmath>
#include <vector>

#include "hda/errors.hpp"

namespace hda {

namespace {

void check_reference(const AntirankSet& ar, RankReference want, const char* who) {
  if (ar.reference != want)
    throw Error(ErrorCode::InvalidConfig,
                std::string(who) + ": anti-ranks computed against the wrong reference");
}

void check_k(const AntirankSet& ar, int k) {
  if (k < 1 || static_cast<Eigen::Index>(k) > ar.n())
    throw Error(ErrorCode::InvalidConfig, "need 1 <= k <= n");
}

template <typename Select, typename Point>
SpectralSample build(const AntirankSet& ar, int k, SpectralVariant variant,
                     Select select, Point point) {
  std::vector<double> pts;
  for (Eigen::Index i = 0; i < ar.n(); ++i) {
    const double r1 = ar.r1[i];
    const double r2 = ar.r2[i];
    if (select(r1, r2)) pts.push_back(point(r1, r2));
  }
  if (pts.empty())
    throw Error(ErrorCode::DegenerateData, "no observations selected at this k");
  SpectralSample out;
  out.variant = variant;
  out.k = k;
  out.points =
      Eigen::Map<const Eigen::ArrayXd>(pts.data(), static_cast<Eigen::Index>(pts.size()));
  return out;
}

}  // namespace

SpectralSample standard_spectral(const AntirankSet& ar, int k) {
  check_reference(ar, RankReference::MinRef, "standard_spectral");
  check_k(ar, k);
  return build(
      ar, k, SpectralVariant::Standard,
      [&](double r1, double r2) { return std::max(r1, r2) <= k; },
      [](double r1, double r2) { return r1 / (r1 + r2); });
}

SpectralSample nonstandard_spectral(const AntirankSet& ar, int k) {
  check_reference(ar, RankReference::SecondCompRef, "nonstandard_spectral");
  check_k(ar, k);
  // r1 == 0 gives t = r2/r2 = 1, the image of an infinite ratio.
  return build(
      ar, k, SpectralVariant::NonStandard,
      [&](double, double r2) { return r2 <= k; },
      [](double r1, double r2) { return r2 / (r1 + r2); });
}

SpectralSample detection_spectral(const AntirankSet& ar, int k) {
  check_reference(ar, RankReference::MaxRef, "detection_spectral");
  check_k(ar, k);
  return build(
      ar, k, SpectralVariant::Detection,
      [&](double r1, double r2) { return std::min(r1, r2) <= k; },
      [](double r1, double r2) { return r1 / (r1 + r2); });
}

DensityEstimate kde(const SpectralSample& sp, std::optional<double> bandwidth,
                    int gridsize) {
  const Eigen::Index m = sp.selected();
  if (m < 2)
    throw Error(ErrorCode::DegenerateData, "kde needs at least 2 spectral points");
  if (gridsize < 2) throw Error(ErrorCode::InvalidConfig, "gridsize must be >= 2");

  double bw;
  if (bandwidth) {
    bw = *bandwidth;
    if (!(bw > 0.0)) throw Error(ErrorCode::InvalidConfig, "bandwidth must be > 0");
  } else {
    const double mean = sp.points.mean();
    const double var = (sp.points - mean).square().sum() / static_cast<double>(m - 1);
    const double sd = std::sqrt(std::max(var, 0.0));
    bw = std::max(1.06 * sd * std::pow(static_cast<double>(m), -0.2), 0.01);
  }

  DensityEstimate out;
  out.bandwidth = bw;
  out.grid = Eigen::ArrayXd::LinSpaced(gridsize, 0.0, 1.0);
  out.density = Eigen::ArrayXd::Zero(gridsize);
  const double norm = 1.0 / (static_cast<double>(m) * bw * std::sqrt(2.0 * M_PI));
  for (Eigen::Index g = 0; g < gridsize; ++g) {
    const double x = out.grid[g];
    double acc = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
      const double t = sp.points[i];
      // reflect mass leaking past 0 and past 1 back inside
      const double z0 = (x - t) / bw;
      const double z1 = (x + t) / bw;
      const double z2 = (x - 2.0 + t) / bw;
      acc += std::exp(-0.5 * z0 * z0) + std::exp(-0.5 * z1 * z1) +
             std::exp(-0.5 * z2 * z2);
    }
    out.density[g] = norm * acc;
  }
  return out;
}

BoundaryMass boundary_mass(const SpectralSample& sp, double delta) {
  if (sp.selected() < 1)
    throw Error(ErrorCode::DegenerateData, "boundary_mass of empty spectral sample");
  if (!(delta > 0.0 && delta < 0.5))
    throw Error(ErrorCode::InvalidConfig, "delta must lie in (0, 0.5)");
  const Eigen::Index m = sp.selected();
  Eigen::Index c0 = 0;
  Eigen::Index c1 = 0;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (sp.points[i] <= delta) ++c0;
    if (sp.points[i] >= 1.0 - delta) ++c1;
  }
  BoundaryMass out;
  out.m0 = static_cast<double>(c0) / static_cast<double>(m);
  out.m1 = static_cast<double>(c1) / static_cast<double>(m);
  out.interior = static_cast<double>(m - c0 - c1) / static_cast<double>(m);
  return out;
}

double trapezoid_mass(const DensityEstimate& d) {
  double acc = 0.0;
  for (Eigen::Index i = 1; i < d.grid.size(); ++i)
    acc += 0.5 * (d.density[i] + d.density[i - 1]) * (d.grid[i] - d.grid[i - 1]);
  return acc;
}

}  // namespace hda
