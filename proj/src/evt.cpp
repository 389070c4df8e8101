#include "hda/evt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hda/errors.hpp"

namespace hda {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Eigen::ArrayXd order_statistics(const Eigen::ArrayXd& values) {
  if (values.size() < 1) throw Error(ErrorCode::DegenerateData, "empty series");
  std::vector<double> v(values.data(), values.data() + values.size());
  std::sort(v.begin(), v.end(), std::greater<double>());
  return Eigen::Map<const Eigen::ArrayXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Eigen::ArrayXd order_statistics(const UnivariateSeries& series) {
  return order_statistics(series.values);
}

double pickands_gamma(const Eigen::ArrayXd& ordered, int k) {
  const Eigen::Index n = ordered.size();
  if (k < 1) throw Error(ErrorCode::InvalidConfig, "k must be positive");
  const Eigen::Index m = (k + 3) / 4;  // ceil(k/4)
  if (4 * m > n)
    throw Error(ErrorCode::InvalidConfig,
                "k too large: need 4*ceil(k/4) <= n");
  const double a = ordered[m - 1];
  const double b = ordered[2 * m - 1];
  const double c = ordered[4 * m - 1];
  if (!(a > b) || !(b > c))
    throw Error(ErrorCode::DegenerateData,
                "degenerate spacing in order statistics (tied quantiles)");
  return std::log((a - b) / (b - c)) / std::log(2.0);
}

std::pair<double, double> scale_location(const Eigen::ArrayXd& ordered, int k,
                                         double gamma) {
  const Eigen::Index n = ordered.size();
  if (k < 1 || 2 * static_cast<Eigen::Index>(k) > n)
    throw Error(ErrorCode::InvalidConfig, "scale_location needs 2k <= n");
  const double location = ordered[k - 1];
  const double spacing = ordered[k - 1] - ordered[2 * k - 1];
  if (!(spacing > 0.0))
    throw Error(ErrorCode::DegenerateData, "degenerate spacing: X_(k) == X_(2k)");
  double scale;
  if (std::abs(gamma) < kGammaZeroTol) {
    scale = spacing / std::log(2.0);
  } else {
    scale = gamma * spacing / (1.0 - std::exp2(-gamma));
  }
  return {scale, location};
}

EvtFit fit_evt(const Eigen::ArrayXd& values, int k) {
  Eigen::ArrayXd ordered = order_statistics(values);
  EvtFit fit;
  fit.gamma = pickands_gamma(ordered, k);
  auto [scale, location] = scale_location(ordered, k, fit.gamma);
  fit.scale = scale;
  fit.location = location;
  fit.k = k;
  fit.n = values.size();
  return fit;
}

double psi(PsiForm form, double y) {
  const double g = form.gamma;
  if (std::abs(g) < kGammaZeroTol) return std::exp(y);
  if (g > 0.0) return y > 0.0 ? std::pow(y, 1.0 / g) : 0.0;
  return y > 0.0 ? kInf : std::pow(-y, 1.0 / g);
}

double psi_inverse(PsiForm form, double s) {
  if (!(s > 0.0))
    throw Error(ErrorCode::InvalidConfig, "psi_inverse requires s > 0");
  const double g = form.gamma;
  if (std::abs(g) < kGammaZeroTol) return std::log(s);
  if (g > 0.0) return std::pow(s, g);
  return -std::pow(s, g);
}

double psi_unified(double gamma, double y) {
  if (std::abs(gamma) < kGammaZeroTol) return std::exp(y);
  const double gy = gamma * y;
  if (gy > -1.0) return std::exp(std::log1p(gy) / gamma);
  return gamma > 0.0 ? 0.0 : kInf;
}

}  // namespace hda
