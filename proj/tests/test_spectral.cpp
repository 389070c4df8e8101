#include <doctest.h>

#include <cmath>

#include "hda/errors.hpp"
#include "hda/rng.hpp"
#include "hda/sample.hpp"
#include "hda/spectral.hpp"

using namespace hda;

namespace {

BivariateSample make(std::initializer_list<std::pair<double, double>> pairs) {
  BivariateSample s;
  s.x1.resize(static_cast<Eigen::Index>(pairs.size()));
  s.x2.resize(static_cast<Eigen::Index>(pairs.size()));
  Eigen::Index i = 0;
  for (auto [a, b] : pairs) {
    s.x1[i] = a;
    s.x2[i] = b;
    ++i;
  }
  return s;
}

SpectralSample from_points(std::initializer_list<double> pts, SpectralVariant v) {
  SpectralSample sp;
  sp.variant = v;
  sp.k = static_cast<int>(pts.size());
  sp.points.resize(static_cast<Eigen::Index>(pts.size()));
  Eigen::Index i = 0;
  for (double p : pts) sp.points[i++] = p;
  return sp;
}

const BivariateSample kSample = make({{3, 1}, {2, 5}, {4, 4}});

}  // namespace

TEST_CASE("standard_spectral on the three-point sample") {
  AntirankSet ar = antiranks(kSample, RankReference::MinRef);
  SpectralSample all = standard_spectral(ar, 3);
  REQUIRE(all.selected() == 3);
  CHECK(all.points[0] == 0.25);
  CHECK(all.points[1] == 1.0);
  CHECK(all.points[2] == 0.5);
  CHECK(all.variant == SpectralVariant::Standard);

  SpectralSample one = standard_spectral(ar, 1);
  REQUIRE(one.selected() == 1);
  CHECK(one.points[0] == 0.5);

  CHECK_THROWS_AS(standard_spectral(antiranks(kSample, RankReference::MaxRef), 2), Error);
}

TEST_CASE("nonstandard_spectral on the three-point sample") {
  AntirankSet ar = antiranks(kSample, RankReference::SecondCompRef);
  SpectralSample two = nonstandard_spectral(ar, 2);
  REQUIRE(two.selected() == 2);
  CHECK(two.points[0] == doctest::Approx(1.0 / 3.0));
  CHECK(two.points[1] == 0.5);

  SpectralSample all = nonstandard_spectral(ar, 3);
  REQUIRE(all.selected() == 3);
  CHECK(all.points[0] == 0.6);
  CHECK(all.points[1] == doctest::Approx(1.0 / 3.0));
  CHECK(all.points[2] == 0.5);
}

TEST_CASE("nonstandard_spectral maps a zero first anti-rank to t = 1") {
  BivariateSample s = make({{10, 1}, {0, 2}});
  AntirankSet ar = antiranks(s, RankReference::SecondCompRef);
  CHECK(ar.r1[0] == 0);
  SpectralSample sp = nonstandard_spectral(ar, 1);
  REQUIRE(sp.selected() == 1);
  CHECK(sp.points[0] == doctest::Approx(1.0 / 3.0));

  // at k = 2 the r1 == 0 observation is selected and lands exactly at 1
  SpectralSample sp2 = nonstandard_spectral(ar, 2);
  REQUIRE(sp2.selected() == 2);
  CHECK(sp2.points[0] == 1.0);
}

TEST_CASE("detection_spectral on the three-point sample") {
  AntirankSet ar = antiranks(kSample, RankReference::MaxRef);
  SpectralSample one = detection_spectral(ar, 1);
  REQUIRE(one.selected() == 1);
  CHECK(one.points[0] == 0.75);

  SpectralSample two = detection_spectral(ar, 2);
  REQUIRE(two.selected() == 2);
  CHECK(two.points[0] == 0.75);
  CHECK(two.points[1] == 0.5);

  SpectralSample all = detection_spectral(ar, 3);
  REQUIRE(all.selected() == 3);
  CHECK(all.points[0] == 0.5);
  CHECK(all.points[1] == 0.75);
  CHECK(all.points[2] == 0.5);
}

TEST_CASE("selection count equals k on tie-free data") {
  const Eigen::Index n = 300;
  BivariateSample s;
  s.x1.resize(n);
  s.x2.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    s.x1[i] = rng::uniform_open({3}, 0, static_cast<std::uint64_t>(i));
    s.x2[i] = rng::uniform_open({3}, 1, static_cast<std::uint64_t>(i));
  }
  for (int k : {1, 7, 150, 300}) {
    CHECK(standard_spectral(antiranks(s, RankReference::MinRef), k).selected() == k);
    CHECK(nonstandard_spectral(antiranks(s, RankReference::SecondCompRef), k).selected() == k);
    CHECK(detection_spectral(antiranks(s, RankReference::MaxRef), k).selected() == k);
  }
}

TEST_CASE("spectral points stay in [0,1] under heavy ties") {
  const Eigen::Index n = 500;
  BivariateSample s;
  s.x1.resize(n);
  s.x2.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    s.x1[i] = std::round(8 * rng::uniform_open({9}, 0, static_cast<std::uint64_t>(i)));
    s.x2[i] = std::round(8 * rng::uniform_open({9}, 1, static_cast<std::uint64_t>(i)));
  }
  // ~60 copies of each lattice value: k large enough that ties still select
  for (int k : {150, 250, 500}) {
    for (auto sp : {standard_spectral(antiranks(s, RankReference::MinRef), k),
                    nonstandard_spectral(antiranks(s, RankReference::SecondCompRef), k),
                    detection_spectral(antiranks(s, RankReference::MaxRef), k)}) {
      CHECK((sp.points >= 0.0).all());
      CHECK((sp.points <= 1.0).all());
    }
  }
  // with ties this small a k can select nothing: that is the documented error
  CHECK_THROWS_AS(
      nonstandard_spectral(antiranks(s, RankReference::SecondCompRef), 10), Error);
}

TEST_CASE("kde of a point mass peaks there and integrates to one") {
  SpectralSample sp = from_points({0.5, 0.5, 0.5, 0.5}, SpectralVariant::Standard);
  DensityEstimate d = kde(sp, 0.05, 512);
  CHECK(d.bandwidth == 0.05);
  CHECK(std::abs(trapezoid_mass(d) - 1.0) < 1e-3);
  Eigen::Index peak;
  d.density.maxCoeff(&peak);
  CHECK(std::abs(d.grid[peak] - 0.5) < 0.01);
}

TEST_CASE("kde of boundary atoms is symmetric with half mass on each side") {
  SpectralSample sp = from_points({0.0, 1.0}, SpectralVariant::Detection);
  DensityEstimate d = kde(sp, 0.05, 513);
  CHECK(std::abs(trapezoid_mass(d) - 1.0) < 1e-3);
  double left = 0.0;
  for (Eigen::Index i = 1; i < d.grid.size(); ++i) {
    if (d.grid[i] > 0.5 + 1e-12) break;
    left += 0.5 * (d.density[i] + d.density[i - 1]) * (d.grid[i] - d.grid[i - 1]);
  }
  CHECK(left == doctest::Approx(0.5).epsilon(0.01));
  // symmetry of the grid values
  const Eigen::Index m = d.grid.size();
  for (Eigen::Index i = 0; i < m / 2; i += 16)
    CHECK(d.density[i] == doctest::Approx(d.density[m - 1 - i]).epsilon(1e-9));
}

TEST_CASE("kde of an equispaced fill is flat away from the boundary") {
  SpectralSample sp;
  sp.variant = SpectralVariant::Standard;
  sp.k = 1000;
  sp.points = Eigen::ArrayXd::LinSpaced(1000, 0.0, 1.0);
  DensityEstimate d = kde(sp, std::nullopt, 512);
  CHECK(std::abs(trapezoid_mass(d) - 1.0) < 1e-3);
  for (Eigen::Index i = 0; i < d.grid.size(); ++i) {
    if (d.grid[i] < 0.1 || d.grid[i] > 0.9) continue;
    CHECK(std::abs(d.density[i] - 1.0) < 0.1);
  }
}

TEST_CASE("kde rejects degenerate inputs") {
  SpectralSample sp = from_points({0.5}, SpectralVariant::Standard);
  CHECK_THROWS_AS(kde(sp, std::nullopt, 512), Error);
  SpectralSample two = from_points({0.25, 0.75}, SpectralVariant::Standard);
  CHECK_THROWS_AS(kde(two, -0.1, 512), Error);
  CHECK_THROWS_AS(kde(two, std::nullopt, 1), Error);
}

TEST_CASE("silverman bandwidth is floored for degenerate spreads") {
  SpectralSample sp = from_points({0.5, 0.5, 0.5}, SpectralVariant::Standard);
  CHECK(kde(sp, std::nullopt, 64).bandwidth == 0.01);
}

TEST_CASE("boundary_mass counts and sums to one") {
  SpectralSample sp = from_points({0.01, 0.99, 0.5}, SpectralVariant::Detection);
  BoundaryMass bm = boundary_mass(sp, 0.05);
  CHECK(bm.m0 == doctest::Approx(1.0 / 3.0));
  CHECK(bm.m1 == doctest::Approx(1.0 / 3.0));
  CHECK(bm.interior == doctest::Approx(1.0 / 3.0));

  BoundaryMass zeros = boundary_mass(from_points({0, 0, 0}, SpectralVariant::Detection), 0.05);
  CHECK(zeros.m0 == 1.0);
  CHECK(zeros.m1 == 0.0);
  CHECK(zeros.interior == 0.0);

  BoundaryMass mid = boundary_mass(from_points({0.5}, SpectralVariant::Detection), 0.05);
  CHECK(mid.m0 == 0.0);
  CHECK(mid.m1 == 0.0);
  CHECK(mid.interior == 1.0);

  for (int rep = 0; rep < 50; ++rep) {
    const int m = 1 + static_cast<int>(rng::bits({13}, 0, rep) % 40);
    SpectralSample r;
    r.variant = SpectralVariant::Detection;
    r.k = m;
    r.points.resize(m);
    for (int i = 0; i < m; ++i)
      r.points[i] = rng::uniform_open({13}, 1, static_cast<std::uint64_t>(rep * 64 + i));
    BoundaryMass bm2 = boundary_mass(r, 0.2);
    CHECK(std::abs(bm2.m0 + bm2.m1 + bm2.interior - 1.0) <= 2e-16);
  }

  CHECK_THROWS_AS(boundary_mass(sp, 0.0), Error);
  CHECK_THROWS_AS(boundary_mass(sp, 0.5), Error);
}

TEST_CASE("spectral samples are invariant under strictly increasing maps") {
  const Eigen::Index n = 200;
  BivariateSample s;
  s.x1.resize(n);
  s.x2.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    s.x1[i] = 2.0 * rng::uniform_open({21}, 0, static_cast<std::uint64_t>(i)) + 0.5;
    s.x2[i] = 2.0 * rng::uniform_open({21}, 1, static_cast<std::uint64_t>(i)) + 0.5;
  }
  auto spectra = [](const BivariateSample& t) {
    return std::array<SpectralSample, 3>{
        standard_spectral(antiranks(t, RankReference::MinRef), 50),
        nonstandard_spectral(antiranks(t, RankReference::SecondCompRef), 50),
        detection_spectral(antiranks(t, RankReference::MaxRef), 50)};
  };
  auto base = spectra(s);
  BivariateSample cubed;
  cubed.x1 = s.x1.cube();
  cubed.x2 = s.x2.cube();
  auto got = spectra(cubed);
  for (int v = 0; v < 3; ++v) {
    REQUIRE(got[v].selected() == base[v].selected());
    for (Eigen::Index i = 0; i < base[v].selected(); ++i)
      CHECK(got[v].points[i] == base[v].points[i]);  // bit-identical
  }
}
