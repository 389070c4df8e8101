#pragma once

#include <string>

#include <json.hpp>

#include "hda/fit.hpp"
#include "hda/spectral.hpp"
#include "hda/tailprob.hpp"

namespace hda {

std::string cone_name(Cone c);
Cone cone_from_name(const std::string& name);
std::string category_name(CategoryKind c);
std::string method_name(TailMethod m);

//! Model JSON: {cone, gamma, scale, location, k, n, spectral_points}.
//! Numeric fields round-trip bit-exactly.
nlohmann::json model_to_json(const HdaModel& m);
HdaModel model_from_json(const nlohmann::json& j);

nlohmann::json density_to_json(const DensityEstimate& d);
nlohmann::json estimate_to_json(const TailEstimate& e);

//! Write via temp file + rename so readers never observe a partial file.
void atomic_write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);
nlohmann::json read_json(const std::string& path);

}  // namespace hda
