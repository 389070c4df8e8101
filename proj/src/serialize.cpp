#include "hda/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hda/errors.hpp"

namespace hda {

std::string cone_name(Cone c) {
  switch (c) {
    case Cone::StandardE0: return "standard_e0";
    case Cone::NonStandardSqcap: return "nonstandard_sqcap";
    case Cone::NonStandardE0: return "nonstandard_e0";
  }
  return "?";
}

Cone cone_from_name(const std::string& name) {
  if (name == "standard_e0") return Cone::StandardE0;
  if (name == "nonstandard_sqcap") return Cone::NonStandardSqcap;
  if (name == "nonstandard_e0") return Cone::NonStandardE0;
  throw Error(ErrorCode::ParseFailure, "unknown cone: " + name);
}

std::string category_name(CategoryKind c) {
  switch (c) {
    case CategoryKind::ZeroSecondMarginal: return "zero_second_marginal";
    case CategoryKind::ZeroFirstMarginal: return "zero_first_marginal";
    case CategoryKind::BothAxes: return "both_axes";
    case CategoryKind::NoAsymptoticIndependence: return "no_asymptotic_independence";
  }
  return "?";
}

std::string method_name(TailMethod m) {
  switch (m) {
    case TailMethod::NonparametricE0: return "nonparametric_e0";
    case TailMethod::SemiparametricE0: return "semiparametric_e0";
    case TailMethod::NonparametricSqcap: return "nonparametric_sqcap";
    case TailMethod::SemiparametricSqcap: return "semiparametric_sqcap";
  }
  return "?";
}

nlohmann::json model_to_json(const HdaModel& m) {
  nlohmann::json j;
  j["cone"] = cone_name(m.cone);
  j["gamma"] = m.evt.gamma;
  j["scale"] = m.evt.scale;
  j["location"] = m.evt.location;
  j["k"] = m.k;
  j["n"] = m.n;
  auto& pts = j["spectral_points"] = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.spectral.selected(); ++i)
    pts.push_back(m.spectral.points[i]);
  return j;
}

HdaModel model_from_json(const nlohmann::json& j) {
  try {
    HdaModel m;
    m.cone = cone_from_name(j.at("cone").get<std::string>());
    m.evt.gamma = j.at("gamma").get<double>();
    m.evt.scale = j.at("scale").get<double>();
    m.evt.location = j.at("location").get<double>();
    m.k = j.at("k").get<int>();
    m.n = j.at("n").get<Eigen::Index>();
    m.evt.k = m.k;
    m.evt.n = m.n;
    const auto& pts = j.at("spectral_points");
    m.spectral.variant = m.cone == Cone::NonStandardSqcap
                             ? SpectralVariant::NonStandard
                             : SpectralVariant::Standard;
    m.spectral.k = m.k;
    m.spectral.points.resize(static_cast<Eigen::Index>(pts.size()));
    Eigen::Index i = 0;
    for (const auto& p : pts) m.spectral.points[i++] = p.get<double>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseFailure, std::string("bad model JSON: ") + e.what());
  }
}

nlohmann::json density_to_json(const DensityEstimate& d) {
  nlohmann::json j;
  j["bandwidth"] = d.bandwidth;
  auto& g = j["grid"] = nlohmann::json::array();
  auto& v = j["density"] = nlohmann::json::array();
  for (Eigen::Index i = 0; i < d.grid.size(); ++i) {
    g.push_back(d.grid[i]);
    v.push_back(d.density[i]);
  }
  return j;
}

nlohmann::json estimate_to_json(const TailEstimate& e) {
  nlohmann::json j;
  j["probability"] = e.probability;
  j["method"] = method_name(e.method);
  j["k"] = e.k;
  j["clamped"] = e.clamped;
  return j;
}

void atomic_write_text(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + tmp);
    out << text;
    if (!out.good()) throw Error(ErrorCode::IoFailure, "write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error(ErrorCode::IoFailure, "cannot rename " + tmp + " to " + path);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json read_json(const std::string& path) {
  try {
    return nlohmann::json::parse(read_text(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseFailure, path + ": " + e.what());
  }
}

}  // namespace hda
