#include <doctest.h>

#include <cmath>
#include <limits>

#include "hda/errors.hpp"
#include "hda/evt.hpp"
#include "hda/rng.hpp"

using namespace hda;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// exact upper quantile sequences X_(i), i = 1..n, descending
Eigen::ArrayXd pareto_quantiles(int n) {
  Eigen::ArrayXd q(n);
  for (int i = 1; i <= n; ++i) q[i - 1] = static_cast<double>(n) / i;
  return q;
}

Eigen::ArrayXd exp_quantiles(int n) {
  Eigen::ArrayXd q(n);
  for (int i = 1; i <= n; ++i) q[i - 1] = std::log(static_cast<double>(n) / i);
  return q;
}

Eigen::ArrayXd uniform_quantiles(int n) {
  Eigen::ArrayXd q(n);
  for (int i = 1; i <= n; ++i) q[i - 1] = 1.0 - static_cast<double>(i) / n;
  return q;
}

}  // namespace

TEST_CASE("order_statistics sorts descending, keeps ties, rejects empty") {
  UnivariateSeries s;
  s.values.resize(3);
  s.values << 1, 2, 4;
  Eigen::ArrayXd d = order_statistics(s);
  CHECK(d[0] == 4);
  CHECK(d[1] == 2);
  CHECK(d[2] == 1);

  s.values << 5, 5, 1;
  d = order_statistics(s);
  CHECK(d[0] == 5);
  CHECK(d[1] == 5);
  CHECK(d[2] == 1);

  s.values.resize(0);
  CHECK_THROWS_AS(order_statistics(s), Error);
}

TEST_CASE("pickands_gamma on exact quantile sequences") {
  const int n = 4096;
  for (int k : {16, 100, 1000}) {
    CHECK(pickands_gamma(pareto_quantiles(n), k) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pickands_gamma(exp_quantiles(n), k) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(pickands_gamma(uniform_quantiles(n), k) == doctest::Approx(-1.0).epsilon(1e-12));
  }
}

TEST_CASE("pickands_gamma error paths") {
  Eigen::ArrayXd flat = Eigen::ArrayXd::Constant(100, 3.0);
  CHECK_THROWS_AS(pickands_gamma(flat, 16), Error);          // tied quantiles
  CHECK_THROWS_AS(pickands_gamma(pareto_quantiles(16), 32), Error);  // k too large
}

TEST_CASE("pickands_gamma is exactly location and scale invariant") {
  const int n = 512;
  Eigen::ArrayXd base(n);
  for (int i = 0; i < n; ++i)
    base[i] = -std::log(rng::uniform_open({5}, 0, static_cast<std::uint64_t>(i)));
  std::sort(base.data(), base.data() + n, std::greater<double>());
  const double g = pickands_gamma(base, 64);
  for (double a : {0.5, 3.0}) {
    for (double b : {-7.0, 0.0, 11.0}) {
      Eigen::ArrayXd shifted = a * base + b;
      // ratio of spacings: affine maps cancel exactly up to fp rounding
      CHECK(pickands_gamma(shifted, 64) == doctest::Approx(g).epsilon(1e-9));
    }
  }
}

TEST_CASE("scale_location on exact quantile sequences") {
  const int n = 4096;
  const int k = 256;
  {
    auto [scale, loc] = scale_location(pareto_quantiles(n), k, 1.0);
    CHECK(loc == doctest::Approx(n / static_cast<double>(k)));
    CHECK(scale == doctest::Approx(n / static_cast<double>(k)));
  }
  {
    auto [scale, loc] = scale_location(exp_quantiles(n), k, 0.0);
    CHECK(loc == doctest::Approx(std::log(n / static_cast<double>(k))));
    CHECK(scale == doctest::Approx(1.0));
  }
  {
    auto [scale, loc] = scale_location(uniform_quantiles(n), k, -1.0);
    CHECK(loc == doctest::Approx(1.0 - k / static_cast<double>(n)));
    CHECK(scale == doctest::Approx(k / static_cast<double>(n)));
  }
}

TEST_CASE("scale_location equivariance and error paths") {
  const int n = 1024;
  const int k = 64;
  Eigen::ArrayXd q = exp_quantiles(n);
  auto [s0, l0] = scale_location(q, k, 0.3);
  auto [s1, l1] = scale_location((2.5 * q + 4.0).eval(), k, 0.3);
  CHECK(s1 == doctest::Approx(2.5 * s0));
  CHECK(l1 == doctest::Approx(2.5 * l0 + 4.0));

  Eigen::ArrayXd flat = Eigen::ArrayXd::Constant(100, 1.0);
  CHECK_THROWS_AS(scale_location(flat, 10, 0.0), Error);
  CHECK_THROWS_AS(scale_location(q, n, 0.0), Error);  // needs 2k <= n
}

TEST_CASE("psi branch values") {
  CHECK(psi({0.0}, 0.0) == 1.0);
  CHECK(psi({1.0}, 2.0) == 2.0);
  CHECK(psi({1.0}, -1.0) == 0.0);
  CHECK(psi({-1.0}, -2.0) == 0.5);
  CHECK(psi({-1.0}, 0.1) == kInf);
  CHECK(psi({0.5}, 4.0) == doctest::Approx(16.0));
  CHECK(psi({2.0}, 0.0) == 0.0);
}

TEST_CASE("psi_inverse values and domain") {
  CHECK(psi_inverse({0.0}, 1.0) == 0.0);
  CHECK(psi_inverse({1.0}, 4.0) == 4.0);
  CHECK(psi_inverse({-1.0}, 2.0) == -0.5);
  CHECK_THROWS_AS(psi_inverse({0.0}, 0.0), Error);
  CHECK_THROWS_AS(psi_inverse({1.0}, -3.0), Error);
}

TEST_CASE("psi is non-decreasing and round-trips with psi_inverse") {
  for (int rep = 0; rep < 200; ++rep) {
    // |gamma| >= 0.05 keeps y^(1/gamma) inside the representable range
    double gamma = 4.0 * rng::uniform_open({77}, 0, rep) - 2.0;
    if (std::abs(gamma) < 0.05) gamma = 0.0;
    PsiForm form{gamma};
    // strictly increasing finite region of this branch
    double y;
    if (gamma > kGammaZeroTol) y = 5.0 * rng::uniform_open({77}, 1, rep) + 1e-3;
    else if (gamma < -kGammaZeroTol) y = -5.0 * rng::uniform_open({77}, 1, rep) - 1e-3;
    else y = 10.0 * rng::uniform_open({77}, 1, rep) - 5.0;
    const double s = psi(form, y);
    REQUIRE(s > 0.0);
    CHECK(psi_inverse(form, s) == doctest::Approx(y).epsilon(1e-10));

    const double y2 = y + 0.25;
    CHECK(psi(form, y2) >= s);
  }
}

TEST_CASE("psi_unified matches the exponential branch at gamma 0 and is continuous") {
  for (double y : {-2.0, -0.5, 0.0, 0.5, 2.0, 4.5}) {
    CHECK(psi_unified(0.0, y) == std::exp(y));
    // small-gamma evaluations stay near the gamma-0 branch
    CHECK(psi_unified(1e-6, y) == doctest::Approx(std::exp(y)).epsilon(1e-4));
    CHECK(psi_unified(-1e-6, y) == doctest::Approx(std::exp(y)).epsilon(1e-4));
  }
  CHECK(psi_unified(0.0, 0.0) == 1.0);
  CHECK(psi_unified(0.7, 0.0) == 1.0);
  CHECK(psi_unified(-0.7, 0.0) == 1.0);
}

TEST_CASE("psi_unified equals canonical psi after the affine anchor change") {
  for (int rep = 0; rep < 100; ++rep) {
    double gamma = 3.0 * rng::uniform_open({31}, 0, rep) - 1.5;
    if (std::abs(gamma) < 0.05) gamma += 0.1;
    const double y = 8.0 * rng::uniform_open({31}, 1, rep) - 4.0;
    const double z = gamma > 0 ? 1.0 + gamma * y : -(1.0 + gamma * y);
    const double expect = psi({gamma}, z);
    const double got = psi_unified(gamma, y);
    if (std::isinf(expect)) {
      CHECK(std::isinf(got));
    } else if (expect == 0.0) {
      CHECK(got == 0.0);
    } else {
      CHECK(got == doctest::Approx(expect).epsilon(1e-12));
    }
  }
}

TEST_CASE("fit_evt recovers gamma on simulated exponential data") {
  // consistency smoke check at moderate scale; the acceptance suite covers
  // the full Monte-Carlo contract
  const Eigen::Index n = 100000;
  Eigen::ArrayXd v(n);
  std::vector<double> gammas;
  for (int seed = 0; seed < 5; ++seed) {
    for (Eigen::Index i = 0; i < n; ++i)
      v[i] = -std::log(rng::uniform_open({static_cast<std::uint64_t>(seed)}, 3,
                                         static_cast<std::uint64_t>(i)));
    EvtFit fit = fit_evt(v, 2000);
    gammas.push_back(fit.gamma);
    CHECK(fit.scale > 0.0);
    CHECK(fit.k == 2000);
    CHECK(fit.n == n);
  }
  std::sort(gammas.begin(), gammas.end());
  CHECK(std::abs(gammas[2]) <= 0.15);
}
