#include "octoe6/jordan.hpp"

#include <stdexcept>

namespace octoe6 {

namespace {

void check_type(int type) {
  if (type < 1 || type > 3) throw std::out_of_range("type must be 1, 2 or 3");
}

// Which x-octonion carries the vector block / first spinor slot per type.
// Type 1 sees (d1, d2 | x3), spinor (x2, x1), corner d3; types 2 and 3 are
// the cyclic shifts of that reading.
constexpr int kVectorOct[4] = {0, 3, 1, 2};
constexpr int kVectorDiagA[4] = {0, 1, 2, 3};  // 1-based d index of the upper slot
constexpr int kVectorDiagB[4] = {0, 2, 3, 1};
constexpr int kCorner[4] = {0, 3, 1, 2};  // 1-based d index of the corner

}  // namespace

std::array<int, 10> vector_block_indices(int type) {
  check_type(type);
  std::array<int, 10> out{};
  out[0] = diag_index(kVectorDiagA[type]);
  out[1] = diag_index(kVectorDiagB[type]);
  for (int u = 0; u < kNumUnits; ++u) out[2 + u] = oct_index(kVectorOct[type], u);
  return out;
}

std::array<int, 16> spinor_indices(int type) {
  check_type(type);
  std::array<int, 16> out{};
  int n = 0;
  for (int w = 1; w <= 3; ++w) {
    if (w == kVectorOct[type]) continue;
    for (int u = 0; u < kNumUnits; ++u) out[n++] = oct_index(w, u);
  }
  return out;
}

int corner_index(int type) {
  check_type(type);
  return diag_index(kCorner[type]);
}

}  // namespace octoe6
