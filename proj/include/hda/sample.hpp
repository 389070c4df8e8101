#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>

namespace hda {

//! Bivariate observations. Index order is preserved by every derived
//! quantity, so anti-ranks and spectral selections align positionally
//! with the sample.
struct BivariateSample {
  Eigen::ArrayXd x1;
  Eigen::ArrayXd x2;

  Eigen::Index n() const { return x1.size(); }
};

enum class SeriesRole { Component1, Component2, Min, Max };

struct UnivariateSeries {
  Eigen::ArrayXd values;
  SeriesRole role = SeriesRole::Component1;
};

//! Reference series against which anti-ranks are counted.
enum class RankReference { MinRef, MaxRef, SecondCompRef };

//! Per-observation counts r1_i = #{j: ref_j >= x1_i}, r2_i = #{j: ref_j >= x2_i}.
//! Ties count via literal >=; no midranks.
struct AntirankSet {
  RankReference reference = RankReference::MinRef;
  Eigen::ArrayXi r1;
  Eigen::ArrayXi r2;

  Eigen::Index n() const { return r1.size(); }
};

//! Parse two-column CSV (comma separated, '.' decimal, optional single
//! header line). Errors carry the offending line number.
BivariateSample load_sample(std::istream& in);
BivariateSample load_sample_file(const std::string& path);

void write_csv(const BivariateSample& s, std::ostream& out);

BivariateSample swap_components(const BivariateSample& s);

UnivariateSeries derive_series(const BivariateSample& s, SeriesRole role);

//! Anti-ranks of both components against the chosen reference series,
//! O(n log n) via sort + binary search; equals brute-force >= counting.
AntirankSet antiranks(const BivariateSample& s, RankReference reference);

}  // namespace hda
