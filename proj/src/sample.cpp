#include "hda/sample.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "hda/errors.hpp"

namespace hda {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view field, double& out) {
  field = trim(field);
  if (field.empty()) return false;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

BivariateSample load_sample(std::istream& in) {
  std::vector<double> c1;
  std::vector<double> c2;
  std::string line;
  long line_no = 0;
  bool saw_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty()) continue;
    auto comma = view.find(',');
    if (comma == std::string_view::npos)
      throw Error(ErrorCode::ParseFailure,
                  "line " + std::to_string(line_no) + ": expected two comma-separated fields");
    std::string_view f1 = view.substr(0, comma);
    std::string_view rest = view.substr(comma + 1);
    if (rest.find(',') != std::string_view::npos)
      throw Error(ErrorCode::ParseFailure,
                  "line " + std::to_string(line_no) + ": expected exactly two fields");
    double a = 0.0;
    double b = 0.0;
    if (!parse_double(f1, a) || !parse_double(rest, b)) {
      // a single leading header line is allowed
      if (!saw_data && c1.empty()) continue;
      throw Error(ErrorCode::ParseFailure,
                  "line " + std::to_string(line_no) + ": malformed numeric field");
    }
    if (!std::isfinite(a) || !std::isfinite(b))
      throw Error(ErrorCode::ParseFailure,
                  "line " + std::to_string(line_no) + ": non-finite value");
    saw_data = true;
    c1.push_back(a);
    c2.push_back(b);
  }
  if (c1.size() < 2)
    throw Error(ErrorCode::ParseFailure, "need at least 2 records, got " +
                                             std::to_string(c1.size()));
  BivariateSample s;
  s.x1 = Eigen::Map<const Eigen::ArrayXd>(c1.data(), static_cast<Eigen::Index>(c1.size()));
  s.x2 = Eigen::Map<const Eigen::ArrayXd>(c2.data(), static_cast<Eigen::Index>(c2.size()));
  return s;
}

BivariateSample load_sample_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path);
  return load_sample(in);
}

void write_csv(const BivariateSample& s, std::ostream& out) {
  out.precision(17);
  for (Eigen::Index i = 0; i < s.n(); ++i) out << s.x1[i] << ',' << s.x2[i] << '\n';
}

BivariateSample swap_components(const BivariateSample& s) {
  return BivariateSample{s.x2, s.x1};
}

UnivariateSeries derive_series(const BivariateSample& s, SeriesRole role) {
  UnivariateSeries out;
  out.role = role;
  switch (role) {
    case SeriesRole::Component1: out.values = s.x1; break;
    case SeriesRole::Component2: out.values = s.x2; break;
    case SeriesRole::Min: out.values = s.x1.min(s.x2); break;
    case SeriesRole::Max: out.values = s.x1.max(s.x2); break;
  }
  return out;
}

AntirankSet antiranks(const BivariateSample& s, RankReference reference) {
  const Eigen::Index n = s.n();
  if (n < 1) throw Error(ErrorCode::DegenerateData, "empty sample");

  Eigen::ArrayXd ref;
  switch (reference) {
    case RankReference::MinRef: ref = s.x1.min(s.x2); break;
    case RankReference::MaxRef: ref = s.x1.max(s.x2); break;
    case RankReference::SecondCompRef: ref = s.x2; break;
  }
  std::vector<double> sorted(ref.data(), ref.data() + n);
  std::sort(sorted.begin(), sorted.end());

  // #{j: ref_j >= v} = n - #{j: ref_j < v}
  auto count_ge = [&](double v) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    return static_cast<int>(n - (it - sorted.begin()));
  };

  AntirankSet out;
  out.reference = reference;
  out.r1.resize(n);
  out.r2.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.r1[i] = count_ge(s.x1[i]);
    out.r2[i] = count_ge(s.x2[i]);
  }
  return out;
}

}  // namespace hda
