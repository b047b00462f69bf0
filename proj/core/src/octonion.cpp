#include "octoe6/octonion.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace octoe6 {

int unit_index(std::string_view name) {
  for (int u = 0; u < kNumUnits; ++u)
    if (kUnitNames[u] == name) return u;
  throw std::invalid_argument("unknown octonion unit: '" + std::string(name) + "'");
}

std::array<std::array<int, 3>, 7> quaternionic_triples() {
  std::array<std::array<int, 3>, 7> out{};
  std::size_t n = 0;
  for (const auto& d : detail::kDefiningProducts) {
    std::array<int, 3> t = {d.p, d.q, d.r};
    std::sort(t.begin(), t.end());
    bool seen = false;
    for (std::size_t s = 0; s < n; ++s) seen = seen || out[s] == t;
    if (!seen) {
      if (n == out.size()) throw std::logic_error("more than 7 quaternionic triples");
      out[n++] = t;
    }
  }
  if (n != out.size()) throw std::logic_error("fewer than 7 quaternionic triples");
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace octoe6
