#include "awez/linear.hpp"

namespace awez {

std::string format_combination(const Tensor& t, const std::function<std::string(const Word&)>& word) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : t) {
    std::string coeff = c.str();
    bool neg = coeff[0] == '-';
    if (neg) coeff.erase(0, 1);
    std::string body = coeff == "1" ? word(w) : coeff + "·" + word(w);
    if (first)
      out += (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace awez
