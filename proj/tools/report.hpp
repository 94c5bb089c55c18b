#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "spincalc/kernel/scalar.hpp"

namespace spincalc::cli {

using Json = nlohmann::ordered_json;

enum class Format { json, text };

/// One command's output. JSON carries no timing so that identical inputs
/// give identical bytes; text adds the elapsed time.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  std::vector<std::string> assumptions;
  std::vector<std::string> warnings;

  std::string render(Format format, double elapsed_ms) const;
};

inline Json scalar(const Scalar& s) { return s.str(); }
inline Json bigint(const BigInt& b) { return b.get_str(); }

}  // namespace spincalc::cli
