#pragma once

#include <cstdint>
#include <string>

namespace awez {

// Outcome of one verification. A failing report always names a concrete
// witness and both evaluated sides.
struct CheckReport {
  std::string name;
  std::string instance;
  int hdeg = -1;  // homological budget, -1 when not applicable
  int gdeg = -1;  // internal-degree budget, -1 when not applicable
  bool pass = true;
  std::string witness;
  std::string lhs;
  std::string rhs;
  std::string detail;  // free-form summary (counts, ranks, ...)
  double seconds = 0;
  std::uint64_t seed = 0;

  void fail(std::string w, std::string l, std::string r) {
    if (!pass) return;
    pass = false;
    witness = std::move(w);
    lhs = std::move(l);
    rhs = std::move(r);
  }
};

}  // namespace awez
