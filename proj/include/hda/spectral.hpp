#pragma once

#include <Eigen/Dense>
#include <optional>

#include "hda/sample.hpp"

namespace hda {

enum class SpectralVariant { Detection, Standard, NonStandard };

//! Empirical spectral measure mapped to [0,1]; each point carries weight
//! 1/selected, so the total mass is exactly 1.
struct SpectralSample {
  SpectralVariant variant = SpectralVariant::Detection;
  Eigen::ArrayXd points;
  int k = 0;

  Eigen::Index selected() const { return points.size(); }
};

//! Density on an equispaced grid over [0,1].
struct DensityEstimate {
  Eigen::ArrayXd grid;
  Eigen::ArrayXd density;
  double bandwidth = 0.0;
};

struct BoundaryMass {
  double m0 = 0.0;
  double m1 = 0.0;
  double interior = 0.0;
};

//! Points t_i = r1/(r1+r2) over observations whose min coordinate is in the
//! top k of the min series (r1 v r2 <= k). Requires MinRef anti-ranks.
SpectralSample standard_spectral(const AntirankSet& ar, int k);

//! Points t_i = r2/(r1+r2) over observations with second-component anti-rank
//! <= k; r1 == 0 lands at t = 1. Requires SecondCompRef anti-ranks.
SpectralSample nonstandard_spectral(const AntirankSet& ar, int k);

//! Points t_i = r1/(r1+r2) over observations whose max coordinate is in the
//! top k of the max series (r1 ^ r2 <= k). Requires MaxRef anti-ranks.
SpectralSample detection_spectral(const AntirankSet& ar, int k);

//! Gaussian kernel density with reflection at 0 and 1. Default bandwidth is
//! Silverman's rule 1.06 * sd * m^(-1/5), floored at 0.01.
DensityEstimate kde(const SpectralSample& sp,
                    std::optional<double> bandwidth = std::nullopt,
                    int gridsize = 512);

//! Fractions of spectral mass within delta of 0 and of 1.
BoundaryMass boundary_mass(const SpectralSample& sp, double delta = 0.05);

//! Trapezoid integral of a density estimate over [0,1].
double trapezoid_mass(const DensityEstimate& d);

}  // namespace hda
