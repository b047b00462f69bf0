#include "octoe6/tangent.hpp"

#include <stdexcept>

namespace octoe6 {

bool operator==(const TangentMap& x, const TangentMap& y) { return x.a == y.a; }

bool is_zero(const TangentMap& x) {
  for (const auto& e : x.a) {
    if (!is_zero(e)) return false;
  }
  return true;
}

TangentMap operator+(const TangentMap& x, const TangentMap& y) {
  TangentMap out;
  for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = x.a[i] + y.a[i];
  return out;
}

TangentMap operator-(const TangentMap& x, const TangentMap& y) {
  TangentMap out;
  for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = x.a[i] - y.a[i];
  return out;
}

TangentMap operator-(const TangentMap& x) {
  TangentMap out;
  for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = -x.a[i];
  return out;
}

TangentMap operator*(const Rational& c, const TangentMap& x) {
  TangentMap out;
  for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = c * x.a[i];
  return out;
}

Coord27<Rational> apply(const TangentMap& L, const Coord27<Rational>& v) {
  Coord27<Rational> out;
  out.fill(Rational(0));
  for (int c = 0; c < kJordanDim; ++c) {
    if (is_zero(v[c])) continue;
    for (int r = 0; r < kJordanDim; ++r) {
      const Rational& e = L.at(r, c);
      if (is_zero(e)) continue;
      out[r] += e * v[c];
    }
  }
  return out;
}

JordanElement<Rational> apply(const TangentMap& L, const JordanElement<Rational>& X) {
  // Qualified call: plain `apply` on a std::array argument would pull
  // std::apply into the overload set and fail hard during substitution.
  return from_coords(octoe6::apply(L, coords(X)));
}

namespace {

/// C += A * B with zero-skipping; tangent maps are sparse.
void accumulate_product(const TangentMap& A, const TangentMap& B, TangentMap& C, bool negate) {
  for (int r = 0; r < kJordanDim; ++r) {
    for (int k = 0; k < kJordanDim; ++k) {
      const Rational& x = A.at(r, k);
      if (is_zero(x)) continue;
      for (int c = 0; c < kJordanDim; ++c) {
        const Rational& y = B.at(k, c);
        if (is_zero(y)) continue;
        if (negate) {
          C.at(r, c) -= x * y;
        } else {
          C.at(r, c) += x * y;
        }
      }
    }
  }
}

}  // namespace

TangentMap matrix_commutator(const TangentMap& L1, const TangentMap& L2) {
  TangentMap out;
  accumulate_product(L1, L2, out, /*negate=*/false);
  accumulate_product(L2, L1, out, /*negate=*/true);
  return out;
}

TangentMap tangent_of(const GroupAction& action, bool check_assoc) {
  TangentMap out;
  for (int k = 0; k < kJordanDim; ++k) {
    const auto image =
        apply_jet(action, constant_jets(basis_element<Rational>(k)), Rational(1), check_assoc);
    const auto value = coords(jet_part(image, 0));
    const auto basis = coords(basis_element<Rational>(k));
    if (value != basis) {
      throw std::logic_error("tangent_of: curve does not pass through the identity at 0");
    }
    const auto derivative = coords(jet_part(image, 1));
    for (int r = 0; r < kJordanDim; ++r) out.at(r, k) = derivative[r];
  }
  return out;
}

TangentMap tangent_of(const GeneratorName& name) { return tangent_of(build_generator(name)); }

TangentMap curve_commutator(const GroupAction& r1, const GroupAction& r2) {
  const Rational minus_half = rat(-1, 2);
  const Rational plus_half = rat(1, 2);
  GroupAction curve = scaled(r2, minus_half);
  curve = sequence(curve, scaled(r1, minus_half));
  curve = sequence(curve, scaled(r2, plus_half));
  curve = sequence(curve, scaled(r1, plus_half));

  TangentMap out;
  for (int k = 0; k < kJordanDim; ++k) {
    const auto image = apply_jet(curve, constant_jets(basis_element<Rational>(k)));
    if (!(jet_part(image, 0) == basis_element<Rational>(k))) {
      throw std::logic_error("curve_commutator: curve does not pass through the identity at 0");
    }
    if (!is_zero(jet_part(image, 1))) {
      throw std::logic_error("curve_commutator: first derivative of commutator curve is nonzero");
    }
    const auto second = coords(jet_part(image, 2));
    for (int r = 0; r < kJordanDim; ++r) out.at(r, k) = rat(1, 2) * second[r];
  }
  return out;
}

Rational det_directional_derivative(const TangentMap& L, const JordanElement<Rational>& X) {
  const auto value = coords(X);
  const auto derivative = octoe6::apply(L, value);
  Coord27<Jet2> curve;
  for (int k = 0; k < kJordanDim; ++k) {
    curve[k] = Jet2{value[k], derivative[k], Rational(0)};
  }
  return freudenthal_det(from_coords(curve)).f1;
}

Rational trace_functional_of_column(const TangentMap& L, int k) {
  return L.at(0, k) + L.at(1, k) + L.at(2, k);
}

std::vector<Rational> flatten(const TangentMap& x) {
  return std::vector<Rational>(x.a.begin(), x.a.end());
}

}  // namespace octoe6
