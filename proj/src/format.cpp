#include "sympcliff/format.hpp"

namespace sympcliff {

std::string format_combination(const std::vector<std::pair<Rational, std::string>>& terms) {
  std::string out;
  for (const auto& [c, name] : terms) {
    if (c.is_zero()) continue;
    bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Rational a = c.abs();
    if (name.empty()) {
      out += a.to_string();
      continue;
    }
    if (a.num() != 1) out += a.num().get_str() + "*";
    out += name;
    if (a.den() != 1) out += "/" + a.den().get_str();
  }
  return out.empty() ? "0" : out;
}

}  // namespace sympcliff
