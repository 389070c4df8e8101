#pragma once

#include <stdexcept>
#include <string>

namespace hda {

//! Error category, mapped to distinct CLI exit codes.
enum class ErrorCode {
  InvalidConfig,
  IoFailure,
  ParseFailure,
  DegenerateData,
  NoAsymptoticIndependence,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hda
