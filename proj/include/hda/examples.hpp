#pragma once

#include <vector>

#include "hda/fit.hpp"
#include "hda/rng.hpp"
#include "hda/sample.hpp"
#include "hda/spectral.hpp"

namespace hda {

//! Built-in reference distributions with known limit measures, used as
//! ground truth by the verification suites.
//!   Ex21: mixture pairing a unit-index Pareto coordinate with a unit
//!         exponential one, fair coin choosing the order.
//!   Ex22: (1/U, 1/(1-U)) for U uniform on (0,1).
//!   Ex31: independent exponentials with rates 1 and 2.
//!   Ex32: fair mixture of (E1, E3/3) and (E2/2, E2/2), E_i iid unit
//!         exponentials.
enum class ExampleId { Ex21, Ex22, Ex31, Ex32 };

//! Deterministic sample: same (id, n, seed) always yields the same values.
BivariateSample simulate(ExampleId id, Eigen::Index n, rng::Seed seed);

//! Closed-form both-coordinates-large limit mass of (x,inf] x (y,inf],
//! in the normalization where the min-series tail function is canonical
//! (marginal mass at (y,y) equals e^-y for the index-zero cases, -y for
//! the bounded-tail case). Defined for Ex21, Ex22, Ex31.
double oracle_nu0(ExampleId id, double x, double y);

//! Closed-form second-coordinate-large limit mass, normalized so the
//! second-component marginal mass at level y is e^-y. Defined for Ex31
//! and Ex32; form selects the upper rectangle or the strip [-inf,x] x (y,inf].
double oracle_nusqcap(ExampleId id, double x, double y, RectForm form);

//! Limit distribution of a spectral sample on [0,1]: point masses, or a
//! numeric CDF where the limit is continuous.
struct SpectralOracle {
  struct Atom {
    double location = 0.0;
    double mass = 0.0;
  };
  std::vector<Atom> atoms;
  Eigen::ArrayXd cdf_grid;   // empty for purely atomic limits
  Eigen::ArrayXd cdf_values;

  double cdf(double t) const;
};

SpectralOracle oracle_spectral(ExampleId id, SpectralVariant variant);

}  // namespace hda
