#include "report.hpp"

#include <iomanip>
#include <sstream>

namespace spincalc::cli {

namespace {

void text_value(std::ostringstream& os, const Json& v, int indent);

void text_object(std::ostringstream& os, const Json& obj, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : obj.items()) {
    os << pad << key << ':';
    if (value.is_object() && !value.empty()) {
      os << '\n';
      text_object(os, value, indent + 2);
    } else {
      os << ' ';
      text_value(os, value, indent);
      os << '\n';
    }
  }
}

void text_value(std::ostringstream& os, const Json& v, int indent) {
  if (v.is_string()) {
    os << v.get<std::string>();
  } else if (v.is_array()) {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ", ";
      text_value(os, v[i], indent);
    }
    os << ']';
  } else if (v.is_object() && v.empty()) {
    os << "{}";
  } else {
    os << v.dump();
  }
}

}  // namespace

std::string Report::render(Format format, double elapsed_ms) const {
  if (format == Format::json) {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["result"] = result;
    j["assumptions"] = assumptions;
    j["warnings"] = warnings;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "command: " << command << '\n';
  if (!inputs.empty()) {
    os << "inputs:\n";
    text_object(os, inputs, 2);
  }
  os << "result:\n";
  text_object(os, result, 2);
  for (const auto& a : assumptions) os << "assumption: " << a << '\n';
  for (const auto& w : warnings) os << "warning: " << w << '\n';
  os << "elapsed: " << std::fixed << std::setprecision(3) << elapsed_ms << " ms\n";
  return os.str();
}

}  // namespace spincalc::cli
