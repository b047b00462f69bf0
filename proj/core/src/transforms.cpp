#include "octoe6/transforms.hpp"

#include "octoe6/matrix3.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

namespace octoe6 {

namespace {

using Cell = std::vector<Term>;

Term term(long coeff, int unit, Func f, Rational freq) {
  return Term{rat(coeff), unit, f, std::move(freq)};
}

Step step4(Cell c00, Cell c01, Cell c10, Cell c11) {
  Step s;
  s.cell[0][0] = std::move(c00);
  s.cell[0][1] = std::move(c01);
  s.cell[1][0] = std::move(c10);
  s.cell[1][1] = std::move(c11);
  return s;
}

GroupAction one_step(Step s) {
  GroupAction a;
  a.steps.push_back(std::move(s));
  return a;
}

void require_imag(int u, const char* what) {
  if (u < 1 || u >= kNumUnits)
    throw std::invalid_argument(std::string(what) + ": unit index must be 1..7");
}

void require_type(int t) {
  if (t < 1 || t > 3) throw std::invalid_argument("type must be 1, 2 or 3");
}

// ---- type-1 constructors: 2x2 matrices in half-angle form ----------------

GroupAction boost_tz() {
  return one_step(step4({term(1, 0, Func::Exp, rat(1, 2))}, {}, {},
                        {term(1, 0, Func::Exp, rat(-1, 2))}));
}

GroupAction boost_tx() {
  return one_step(step4({term(1, 0, Func::Cosh, rat(1, 2))},
                        {term(1, 0, Func::Sinh, rat(1, 2))},
                        {term(1, 0, Func::Sinh, rat(1, 2))},
                        {term(1, 0, Func::Cosh, rat(1, 2))}));
}

GroupAction boost_tq(int q) {
  return one_step(step4({term(1, 0, Func::Cosh, rat(1, 2))},
                        {term(-1, q, Func::Sinh, rat(1, 2))},
                        {term(1, q, Func::Sinh, rat(1, 2))},
                        {term(1, 0, Func::Cosh, rat(1, 2))}));
}

GroupAction rot_xz() {
  return one_step(step4({term(1, 0, Func::Cos, rat(1, 2))},
                        {term(1, 0, Func::Sin, rat(1, 2))},
                        {term(-1, 0, Func::Sin, rat(1, 2))},
                        {term(1, 0, Func::Cos, rat(1, 2))}));
}

// diag(exp(-q a/2), exp(q a/2)) expanded into cos/sin terms
GroupAction rot_xq(int q) {
  return one_step(step4({term(1, 0, Func::Cos, rat(1, 2)), term(-1, q, Func::Sin, rat(1, 2))},
                        {}, {},
                        {term(1, 0, Func::Cos, rat(1, 2)), term(1, q, Func::Sin, rat(1, 2))}));
}

GroupAction rot_zq(int q) {
  return one_step(step4({term(1, 0, Func::Cos, rat(1, 2))},
                        {term(1, q, Func::Sin, rat(1, 2))},
                        {term(1, q, Func::Sin, rat(1, 2))},
                        {term(1, 0, Func::Cos, rat(1, 2))}));
}

// X -> M2 (M1 X M1~) M2~ with M1 = -p I and M2 = (cos(a/2) p + sin(a/2) q) I
GroupAction transverse1(int p, int q) {
  GroupAction a;
  a.steps.push_back(step4({term(-1, p, Func::One, rat(0))}, {}, {},
                          {term(-1, p, Func::One, rat(0))}));
  a.steps.push_back(step4({term(1, p, Func::Cos, rat(1, 2)), term(1, q, Func::Sin, rat(1, 2))},
                          {}, {},
                          {term(1, p, Func::Cos, rat(1, 2)), term(1, q, Func::Sin, rat(1, 2))}));
  return a;
}

GroupAction ags(GenKind kind, int q) {
  const auto planes = transverse_planes(q);
  const GroupAction r1 = transverse_rotation(planes[0][0], planes[0][1]);
  const GroupAction r2 = transverse_rotation(planes[1][0], planes[1][1]);
  const GroupAction r3 = transverse_rotation(planes[2][0], planes[2][1]);
  switch (kind) {
    case GenKind::A:  // r1(a) after r2(-a)
      return sequence(scaled(r2, rat(-1)), r1);
    case GenKind::G:  // r1(a) after r2(a) after r3(-2a)
      return sequence(sequence(scaled(r3, rat(-2)), r2), r1);
    case GenKind::S:  // r1(a) after r2(a) after r3(a)
      return sequence(sequence(r3, r2), r1);
    default:
      throw std::invalid_argument("ags: kind must be A, G or S");
  }
}

// ---- evaluation ----------------------------------------------------------

template <class S, class TermVal>
OctMatrix3<S> step_matrix(const Step& st, const TermVal& tv) {
  OctMatrix3<S> M;
  M.m[2][2] = Octonion<S>::unit(0);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (const Term& t : st.cell[r][c]) M.m[r][c].c[t.unit] = M.m[r][c].c[t.unit] + tv(t, st);
  return M;
}

// Read off a Hermitian matrix without the exactness check (float path: the
// two triangles agree only up to rounding).
JordanElement<double> read_hermitian(const OctMatrix3<double>& M) {
  JordanElement<double> X;
  X.d1 = real_part(M.m[0][0]);
  X.d2 = real_part(M.m[1][1]);
  X.d3 = real_part(M.m[2][2]);
  X.x1 = M.m[1][2];
  X.x2 = M.m[2][0];
  X.x3 = M.m[0][1];
  return X;
}

double max_abs_diff(const OctMatrix3<double>& a, const OctMatrix3<double>& b) {
  double worst = 0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      for (int u = 0; u < kNumUnits; ++u)
        worst = std::max(worst, std::abs(a.m[r][c].c[u] - b.m[r][c].c[u]));
  return worst;
}

}  // namespace

std::array<std::array<int, 2>, 3> transverse_planes(int q) {
  require_imag(q, "transverse_planes");
  std::array<std::array<int, 2>, 3> out{};
  int n = 0;
  for (const auto& d : detail::kDefiningProducts)
    if (d.r == q) out[n++] = {d.p, d.q};
  if (n != 3) throw std::logic_error("expected exactly three planes per unit");
  return out;
}

GroupAction transverse_rotation(int p, int q, int type) {
  require_imag(p, "transverse_rotation");
  require_imag(q, "transverse_rotation");
  require_type(type);
  if (p == q) throw std::invalid_argument("transverse_rotation: units must be distinct");
  return retype(transverse1(p, q), type);
}

GroupAction build_generator(const GeneratorName& name) {
  require_type(name.type);
  GroupAction base;
  switch (name.kind) {
    case GenKind::Btz: base = boost_tz(); break;
    case GenKind::Btx: base = boost_tx(); break;
    case GenKind::Btq:
      require_imag(name.u1, "Btq");
      base = boost_tq(name.u1);
      break;
    case GenKind::Rxz: base = rot_xz(); break;
    case GenKind::Rxq:
      require_imag(name.u1, "Rxq");
      base = rot_xq(name.u1);
      break;
    case GenKind::Rzq:
      require_imag(name.u1, "Rzq");
      base = rot_zq(name.u1);
      break;
    case GenKind::A:
    case GenKind::G:
    case GenKind::S:
      require_imag(name.u1, "A/G/S");
      base = ags(name.kind, name.u1);
      break;
    case GenKind::Transverse:
      return transverse_rotation(name.u1, name.u2, name.type);
  }
  return retype(base, name.type);
}

GroupAction scaled(const GroupAction& action, const Rational& s) {
  GroupAction out = action;
  for (Step& st : out.steps) st.param_scale = st.param_scale * s;
  return out;
}

GroupAction sequence(const GroupAction& first, const GroupAction& then) {
  GroupAction out = first;
  out.steps.insert(out.steps.end(), then.steps.begin(), then.steps.end());
  return out;
}

GroupAction retype(const GroupAction& action, int a) {
  require_type(a);
  GroupAction out = action;
  for (Step& st : out.steps) st.type = (st.type - 1 + a - 1) % 3 + 1;
  return out;
}

JordanElement<double> apply(const GroupAction& action, double alpha,
                            const JordanElement<double>& X, bool check_assoc,
                            double assoc_tol) {
  JordanElement<double> cur = X;
  for (const Step& st : action.steps) {
    JordanElement<double> Y = cur;
    for (int s = 1; s < st.type; ++s) Y = tunshift(Y);
    const OctMatrix3<double> M = step_matrix<double>(st, [&](const Term& t, const Step& stp) {
      return to_double(t.coeff) * eval(t.func, to_double(t.freq * stp.param_scale) * alpha);
    });
    const OctMatrix3<double> Md = dagger(M);
    const OctMatrix3<double> XM = to_matrix(Y);
    const OctMatrix3<double> Z = (M * XM) * Md;
    if (check_assoc) {
      const OctMatrix3<double> Z2 = M * (XM * Md);
      if (max_abs_diff(Z, Z2) > assoc_tol)
        throw AssociationError("parenthesizations of (M X) M-dagger disagree");
      if (max_abs_diff(Z, dagger(Z)) > assoc_tol)
        throw AssociationError("step result is not Hermitian within tolerance");
    }
    cur = read_hermitian(Z);
    for (int s = 1; s < st.type; ++s) cur = tshift(cur);
  }
  return cur;
}

JordanElement<Jet2> apply_jet(const GroupAction& action, const JordanElement<Jet2>& X,
                              const Rational& scale, bool check_assoc) {
  JordanElement<Jet2> cur = X;
  for (const Step& st : action.steps) {
    JordanElement<Jet2> Y = cur;
    for (int s = 1; s < st.type; ++s) Y = tunshift(Y);
    const OctMatrix3<Jet2> M = step_matrix<Jet2>(st, [&](const Term& t, const Step& stp) {
      return t.coeff * jet_of(t.func, t.freq * stp.param_scale * scale);
    });
    const OctMatrix3<Jet2> Md = dagger(M);
    const OctMatrix3<Jet2> XM = to_matrix(Y);
    const OctMatrix3<Jet2> Z = (M * XM) * Md;
    if (check_assoc && !(Z == M * (XM * Md)))
      throw AssociationError("parenthesizations of (M X) M-dagger disagree exactly");
    cur = from_matrix(Z);  // exact Hermiticity enforced
    for (int s = 1; s < st.type; ++s) cur = tshift(cur);
  }
  return cur;
}

std::string to_string(const GeneratorName& name) {
  const auto u = [](int idx) { return std::string(kUnitNames[idx]); };
  const std::string t = std::to_string(name.type);
  switch (name.kind) {
    case GenKind::Btz: return "B" + t + "_tz";
    case GenKind::Btx: return "B" + t + "_tx";
    case GenKind::Btq: return "B" + t + "_t" + u(name.u1);
    case GenKind::Rxz: return "R" + t + "_xz";
    case GenKind::Rxq: return "R" + t + "_x" + u(name.u1);
    case GenKind::Rzq: return "R" + t + "_z" + u(name.u1);
    case GenKind::A: return "A" + t + "_" + u(name.u1);
    case GenKind::G: return "G" + t + "_" + u(name.u1);
    case GenKind::S: return "S" + t + "_" + u(name.u1);
    case GenKind::Transverse: return "R" + t + "(" + u(name.u1) + "," + u(name.u2) + ")";
  }
  throw std::logic_error("unknown generator kind");
}

std::vector<GeneratorName> canonical_generators() {
  std::vector<GeneratorName> out;
  out.reserve(135);
  for (int type = 1; type <= 3; ++type) {
    for (GenKind kind : {GenKind::A, GenKind::G, GenKind::S})
      for (int q = 1; q < kNumUnits; ++q) out.push_back({kind, type, q, 0});
    out.push_back({GenKind::Rxz, type, 0, 0});
    for (int q = 1; q < kNumUnits; ++q) out.push_back({GenKind::Rxq, type, q, 0});
    for (int q = 1; q < kNumUnits; ++q) out.push_back({GenKind::Rzq, type, q, 0});
    out.push_back({GenKind::Btz, type, 0, 0});
    out.push_back({GenKind::Btx, type, 0, 0});
    for (int q = 1; q < kNumUnits; ++q) out.push_back({GenKind::Btq, type, q, 0});
  }
  return out;
}

}  // namespace octoe6
