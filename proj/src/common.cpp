#include "awplan/common.hpp"

#include <algorithm>
#include <cctype>

namespace awplan {

std::string_view to_string(Modulation m) {
  return m == Modulation::BPSK ? "BPSK" : "QPSK";
}

Modulation parse_modulation(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "BPSK") return Modulation::BPSK;
  if (upper == "QPSK") return Modulation::QPSK;
  throw Error("unknown modulation '" + std::string(text) + "' (expected BPSK or QPSK)");
}

}  // namespace awplan
