#include "octoe6/structure.hpp"

#include "octoe6/octonion.hpp"
#include "octoe6/parallel.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace octoe6 {

namespace {

constexpr int kGeneratorCount = 135;

[[nodiscard]] std::array<int, 4> key_of(const GeneratorName& g) {
  return {static_cast<int>(g.kind), g.type, g.u1, g.u2};
}

[[nodiscard]] GeneratorName named(GenKind kind, int type, int u1 = 0) {
  return GeneratorName{kind, type, u1, 0};
}

}  // namespace

const Algebra& Algebra::get() {
  static const Algebra instance;
  return instance;
}

Algebra::Algebra() {
  build_tangents();
  verify_dependencies();
  run_staged_reduction();
  build_basis();
  build_table();
  build_killing();
}

void Algebra::build_tangents() {
  generators_ = canonical_generators();
  if (static_cast<int>(generators_.size()) != kGeneratorCount) {
    throw std::logic_error("Algebra: generator catalogue size is not 135");
  }
  tangents_.resize(generators_.size());
  parallel_for(static_cast<int>(generators_.size()), [&](int i) {
    tangents_[i] = tangent_of(build_generator(generators_[i]), /*check_assoc=*/true);
  });
  for (int i = 0; i < static_cast<int>(generators_.size()); ++i) {
    generator_index_.emplace(key_of(generators_[i]), i);
  }
}

const TangentMap& Algebra::tangent(const GeneratorName& name) const {
  const auto it = generator_index_.find(key_of(name));
  if (it == generator_index_.end()) {
    throw std::invalid_argument("Algebra::tangent: not a catalogued generator: " + to_string(name));
  }
  return tangents_[it->second];
}

void Algebra::verify_dependencies() const {
  const auto require = [](bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("Algebra: dependency identity failed: ") + what);
  };
  const Rational half = rat(1, 2);
  for (int q = 1; q < 8; ++q) {
    const TangentMap& a1 = tangent(named(GenKind::A, 1, q));
    require(a1 == tangent(named(GenKind::A, 2, q)), "A type independence (1 vs 2)");
    require(a1 == tangent(named(GenKind::A, 3, q)), "A type independence (1 vs 3)");
    const TangentMap& g1 = tangent(named(GenKind::G, 1, q));
    require(g1 == tangent(named(GenKind::G, 2, q)), "G type independence (1 vs 2)");
    require(g1 == tangent(named(GenKind::G, 3, q)), "G type independence (1 vs 3)");

    const TangentMap& s1 = tangent(named(GenKind::S, 1, q));
    const TangentMap& s2 = tangent(named(GenKind::S, 2, q));
    const TangentMap& s3 = tangent(named(GenKind::S, 3, q));
    require(is_zero(s1 + s2 + s3), "S1 + S2 + S3 = 0");

    const TangentMap& r1 = tangent(named(GenKind::Rxq, 1, q));
    const TangentMap& r2 = tangent(named(GenKind::Rxq, 2, q));
    const TangentMap& r3 = tangent(named(GenKind::Rxq, 3, q));
    require(is_zero(r1 + r2 + r3), "Rxq type sum = 0");
    require(r2 == -(half * r1) - half * s1, "Rxq2 = -Rxq1/2 - S1/2");
    require(s2 == rat(3, 2) * r1 - half * s1, "S2 = 3 Rxq1/2 - S1/2");
    require(s1 == r3 - r2, "S1 = Rxq3 - Rxq2");
  }
  require(is_zero(tangent(named(GenKind::Btz, 1)) + tangent(named(GenKind::Btz, 2)) +
                  tangent(named(GenKind::Btz, 3))),
          "Btz type sum = 0");
}

void Algebra::run_staged_reduction() {
  // Stage boundaries: drop the duplicate A/G copies and S^3 (135 -> 100),
  // then the planar-rotation relations R^2_xq, R^3_xq, S^2 (100 -> 79), then
  // the boost sum B^3_tz (79 -> 78). Each survivor set must span the same
  // 78-dimensional space, and every dropped tangent must lie inside it.
  const auto dropped_stage1 = [](const GeneratorName& g) {
    return ((g.kind == GenKind::A || g.kind == GenKind::G) && g.type != 1) ||
           (g.kind == GenKind::S && g.type == 3);
  };
  const auto dropped_stage2 = [&](const GeneratorName& g) {
    return dropped_stage1(g) || (g.kind == GenKind::Rxq && g.type != 1) ||
           (g.kind == GenKind::S && g.type == 2);
  };
  const auto dropped_stage3 = [&](const GeneratorName& g) {
    return dropped_stage2(g) || (g.kind == GenKind::Btz && g.type == 3);
  };

  const auto rank_of = [&](auto&& dropped, int& count_out) {
    RowSpace space(kJordanDim * kJordanDim);
    int count = 0;
    for (int i = 0; i < static_cast<int>(generators_.size()); ++i) {
      if (dropped(generators_[i])) continue;
      ++count;
      space.insert(flatten(tangents_[i]));
    }
    count_out = count;
    return space.rank();
  };

  int count_all = 0;
  stages_.rank_all = rank_of([](const GeneratorName&) { return false; }, count_all);
  stages_.rank_stage1 = rank_of(dropped_stage1, stages_.count_stage1);
  stages_.rank_stage2 = rank_of(dropped_stage2, stages_.count_stage2);
  stages_.rank_stage3 = rank_of(dropped_stage3, stages_.count_stage3);

  const bool counts_ok = count_all == 135 && stages_.count_stage1 == 100 &&
                         stages_.count_stage2 == 79 && stages_.count_stage3 == 78;
  const bool ranks_ok = stages_.rank_all == kDim && stages_.rank_stage1 == kDim &&
                        stages_.rank_stage2 == kDim && stages_.rank_stage3 == kDim;
  if (!counts_ok || !ranks_ok) {
    throw std::logic_error("Algebra: staged reduction did not reach 135 -> 100 -> 79 -> 78");
  }

  RowSpace survivors(kJordanDim * kJordanDim);
  for (int i = 0; i < static_cast<int>(generators_.size()); ++i) {
    if (!dropped_stage3(generators_[i])) survivors.insert(flatten(tangents_[i]));
  }
  for (int i = 0; i < static_cast<int>(generators_.size()); ++i) {
    if (dropped_stage3(generators_[i]) && !survivors.contains(flatten(tangents_[i]))) {
      throw std::logic_error("Algebra: eliminated tangent escapes the surviving span: " +
                             to_string(generators_[i]));
    }
  }
}

void Algebra::build_basis() {
  basis_.reserve(kDim);
  const auto push = [&](std::string name, TangentMap map) {
    BasisElement e;
    e.index = static_cast<int>(basis_.size());
    e.name = std::move(name);
    e.map = std::move(map);
    basis_.push_back(std::move(e));
  };
  const auto unit = [](int u) { return std::string(kUnitNames[u]); };

  for (int q = 1; q < 8; ++q) push("A_" + unit(q), tangent(named(GenKind::A, 1, q)));
  for (int q = 1; q < 8; ++q) push("G_" + unit(q), tangent(named(GenKind::G, 1, q)));
  for (int q = 1; q < 8; ++q) push("S1_" + unit(q), tangent(named(GenKind::S, 1, q)));
  for (int q = 1; q < 8; ++q) push("R1_x" + unit(q), tangent(named(GenKind::Rxq, 1, q)));
  for (int a = 1; a <= 3; ++a) {
    push("R" + std::to_string(a) + "_xz", tangent(named(GenKind::Rxz, a)));
  }
  for (int a = 1; a <= 3; ++a) {
    for (int q = 1; q < 8; ++q) {
      push("R" + std::to_string(a) + "_z" + unit(q), tangent(named(GenKind::Rzq, a, q)));
    }
  }
  for (int a = 1; a <= 3; ++a) {
    push("B" + std::to_string(a) + "_tx", tangent(named(GenKind::Btx, a)));
  }
  for (int a = 1; a <= 3; ++a) {
    for (int q = 1; q < 8; ++q) {
      push("B" + std::to_string(a) + "_t" + unit(q), tangent(named(GenKind::Btq, a, q)));
    }
  }
  push("B1_tz", tangent(named(GenKind::Btz, 1)));
  push("B2_tz-B3_tz", tangent(named(GenKind::Btz, 2)) - tangent(named(GenKind::Btz, 3)));

  if (static_cast<int>(basis_.size()) != kDim) {
    throw std::logic_error("Algebra: basis layout does not have 78 elements");
  }
  for (const auto& e : basis_) {
    if (!name_index_.emplace(e.name, e.index).second) {
      throw std::logic_error("Algebra: duplicate basis name " + e.name);
    }
  }

  span_ = std::make_unique<RowSpace>(kJordanDim * kJordanDim);
  for (const auto& e : basis_) {
    if (!span_->insert(flatten(e.map))) {
      throw std::logic_error("Algebra: basis element is dependent: " + e.name);
    }
  }

  cartan_ = {index_of("B1_tz"), index_of("B2_tz-B3_tz"), index_of("R1_xl"),
             index_of("A_l"),   index_of("G_l"),         index_of("S1_l")};
}

int Algebra::index_of(std::string_view name) const {
  const auto it = name_index_.find(name);
  if (it == name_index_.end()) {
    throw std::invalid_argument("Algebra: unknown basis name: " + std::string(name));
  }
  return it->second;
}

int Algebra::pair_slot(int i, int j) {
  return i * (2 * kDim - i - 1) / 2 + (j - i - 1);
}

void Algebra::build_table() {
  const int pairs = kDim * (kDim - 1) / 2;
  table_.resize(pairs);
  parallel_for(pairs, [&](int slot) {
    // Invert slot -> (i, j): scan is cheap relative to the bracket itself.
    int i = 0;
    while (pair_slot(i + 1, i + 2) <= slot && i + 1 < kDim - 1) ++i;
    const int j = slot - pair_slot(i, i + 1) + i + 1;
    const TangentMap bracket = matrix_commutator(basis_[i].map, basis_[j].map);
    const auto coords = span_->express(flatten(bracket));
    if (!coords.has_value()) {
      throw std::logic_error("Algebra: bracket fails to close: [" + basis_[i].name + ", " +
                             basis_[j].name + "]");
    }
    std::vector<BracketTerm> terms;
    for (int k = 0; k < kDim; ++k) {
      if (!is_zero((*coords)[k])) terms.push_back(BracketTerm{k, (*coords)[k]});
    }
    table_[slot] = std::move(terms);
  });
}

const std::vector<BracketTerm>& Algebra::bracket_table(int i, int j) const {
  if (i < 0 || j < 0 || i >= kDim || j >= kDim || i >= j) {
    throw std::invalid_argument("Algebra::bracket_table: need 0 <= i < j < 78");
  }
  return table_[pair_slot(i, j)];
}

RatVector Algebra::bracket_basis(int i, int j) const {
  RatVector out(kDim, Rational(0));
  if (i == j) return out;
  const bool flip = i > j;
  const auto& terms = bracket_table(flip ? j : i, flip ? i : j);
  for (const auto& t : terms) out[t.k] = flip ? -t.c : t.c;
  return out;
}

RatVector Algebra::bracket_vector(const RatVector& x, const RatVector& y) const {
  if (static_cast<int>(x.size()) != kDim || static_cast<int>(y.size()) != kDim) {
    throw std::invalid_argument("Algebra::bracket_vector: expected 78-dim coordinates");
  }
  std::vector<int> sx, sy;
  for (int i = 0; i < kDim; ++i) {
    if (!is_zero(x[i])) sx.push_back(i);
  }
  for (int i = 0; i < kDim; ++i) {
    if (!is_zero(y[i])) sy.push_back(i);
  }
  RatVector out(kDim, Rational(0));
  for (const int a : sx) {
    for (const int b : sy) {
      if (a == b) continue;
      const Rational w = x[a] * y[b];
      const auto& terms = bracket_table(std::min(a, b), std::max(a, b));
      if (a < b) {
        for (const auto& t : terms) out[t.k] += w * t.c;
      } else {
        for (const auto& t : terms) out[t.k] -= w * t.c;
      }
    }
  }
  return out;
}

bool Algebra::jacobi_holds(int i, int j, int k) const {
  const auto bracket_with = [&](const RatVector& a, int m) {
    RatVector out(kDim, Rational(0));
    for (int s = 0; s < kDim; ++s) {
      if (is_zero(a[s]) || s == m) continue;
      const auto& terms = bracket_table(std::min(s, m), std::max(s, m));
      if (s < m) {
        for (const auto& t : terms) out[t.k] += a[s] * t.c;
      } else {
        for (const auto& t : terms) out[t.k] -= a[s] * t.c;
      }
    }
    return out;
  };
  RatVector total = bracket_with(bracket_basis(i, j), k);
  {
    const RatVector jk_i = bracket_with(bracket_basis(j, k), i);
    const RatVector ki_j = bracket_with(bracket_basis(k, i), j);
    for (int s = 0; s < kDim; ++s) total[s] += jk_i[s] + ki_j[s];
  }
  return std::all_of(total.begin(), total.end(), [](const Rational& c) { return is_zero(c); });
}

void Algebra::build_killing() {
  // Sparse adjoint matrices: ad_i entries (row k, column m, value c) with
  // [e_i, e_m] = sum_k c e_k.
  std::vector<std::vector<std::array<int, 2>>> positions(kDim);
  std::vector<std::vector<Rational>> values(kDim);
  for (int i = 0; i < kDim; ++i) {
    for (int j = i + 1; j < kDim; ++j) {
      for (const auto& t : table_[pair_slot(i, j)]) {
        positions[i].push_back({t.k, j});
        values[i].push_back(t.c);
        positions[j].push_back({t.k, i});
        values[j].push_back(-t.c);
      }
    }
  }

  killing_.assign(kDim, RatVector(kDim, Rational(0)));
  parallel_for(kDim, [&](int j) {
    RatMatrix dense(kDim, RatVector(kDim, Rational(0)));
    for (std::size_t t = 0; t < positions[j].size(); ++t) {
      dense[positions[j][t][0]][positions[j][t][1]] += values[j][t];
    }
    for (int i = 0; i <= j; ++i) {
      Rational sum(0);
      for (std::size_t t = 0; t < positions[i].size(); ++t) {
        // trace(ad_i ad_j) = sum over entries ad_i[k][m] * ad_j[m][k].
        sum += values[i][t] * dense[positions[i][t][1]][positions[i][t][0]];
      }
      killing_[i][j] = sum;
      killing_[j][i] = std::move(sum);
    }
  });

  for (int i = 0; i < kDim; ++i) {
    if (is_zero(killing_[i][i])) {
      throw std::logic_error("Algebra: Killing form degenerate on basis element " + basis_[i].name);
    }
    for (int j = 0; j < kDim; ++j) {
      if (i != j && !is_zero(killing_[i][j])) {
        throw std::logic_error("Algebra: Killing form not diagonal at (" + basis_[i].name + ", " +
                               basis_[j].name + ")");
      }
    }
  }
}

Rational Algebra::killing(const RatVector& x, const RatVector& y) const {
  if (static_cast<int>(x.size()) != kDim || static_cast<int>(y.size()) != kDim) {
    throw std::invalid_argument("Algebra::killing: expected 78-dim coordinates");
  }
  Rational sum(0);
  for (int i = 0; i < kDim; ++i) {
    if (is_zero(x[i]) || is_zero(y[i])) continue;
    sum += killing_[i][i] * x[i] * y[i];
  }
  return sum;
}

std::optional<RatVector> Algebra::express_in_basis(const TangentMap& L) const {
  auto coords = span_->express(flatten(L));
  if (coords.has_value()) coords->resize(kDim, Rational(0));
  return coords;
}

TangentMap Algebra::realize(const RatVector& coords) const {
  if (static_cast<int>(coords.size()) != kDim) {
    throw std::invalid_argument("Algebra::realize: expected 78-dim coordinates");
  }
  TangentMap out;
  for (int k = 0; k < kDim; ++k) {
    if (is_zero(coords[k])) continue;
    for (std::size_t s = 0; s < out.a.size(); ++s) {
      if (is_zero(basis_[k].map.a[s])) continue;
      out.a[s] += coords[k] * basis_[k].map.a[s];
    }
  }
  return out;
}

int Algebra::cartan_centralizer_dimension() const {
  RowSpace rows(kDim);
  for (const int c : cartan_) {
    // Dense adjoint of the Cartan element: row k, column m.
    RatMatrix ad(kDim, RatVector(kDim, Rational(0)));
    for (int m = 0; m < kDim; ++m) {
      if (m == c) continue;
      const auto& terms = bracket_table(std::min(c, m), std::max(c, m));
      const bool flip = c > m;
      for (const auto& t : terms) ad[t.k][m] = flip ? -t.c : t.c;
    }
    for (int k = 0; k < kDim; ++k) rows.insert(ad[k]);
  }
  return kDim - rows.rank();
}

}  // namespace octoe6
