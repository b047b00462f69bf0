// octo-e6: build, verify, export, and query the 78-dimensional real Lie
// algebra of determinant-preserving transformations of the exceptional
// Jordan algebra (the split real form e6(-26) realized as sl(3,O)).
//
// Exit codes: 0 all checks passed / export written, 1 at least one check
// failed, 2 internal error. Outputs are deterministic for identical flags;
// the environment variable OCTOE6_THREADS caps worker threads.

#include "CLI11.hpp"
#include "json.hpp"

#include "octoe6/jordan.hpp"
#include "octoe6/octonion.hpp"
#include "octoe6/parallel.hpp"
#include "octoe6/report.hpp"
#include "octoe6/rng.hpp"
#include "octoe6/structure.hpp"
#include "octoe6/subalgebras.hpp"
#include "octoe6/tangent.hpp"
#include "octoe6/transforms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace octoe6;

constexpr std::uint64_t kDefaultSeed = 0xC70E6;
constexpr int kKillingInvarianceTriples = 1000;

struct JacobiMode {
  bool full = false;
  int samples = 100000;
};

struct Config {
  double tol = 1e-10;
  int samples = 20;
  std::uint64_t seed = kDefaultSeed;
  JacobiMode jacobi;
  std::string format;
  std::string out_path;
};

struct SuiteReport {
  std::string name;
  std::vector<CheckResult> checks;
};

// =========================================================================
// Small helpers
// =========================================================================

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(cfg.out_path, std::ios::binary);
  if (!os) throw std::invalid_argument("cannot open output file: " + cfg.out_path);
  os << text;
  if (!os) throw std::runtime_error("write failed: " + cfg.out_path);
}

CheckResult check_of(std::string name, bool pass, std::string detail) {
  CheckResult out;
  out.name = std::move(name);
  out.pass = pass;
  out.detail = std::move(detail);
  return out;
}

std::string sci(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << x;
  return os.str();
}

Octonion<Rational> random_octonion(RatRng& rng) {
  Octonion<Rational> x;
  for (int u = 0; u < kNumUnits; ++u) x.c[u] = rng.next();
  return x;
}

JordanElement<Rational> random_element(RatRng& rng) {
  Coord27<Rational> v;
  for (int k = 0; k < kJordanDim; ++k) v[k] = rng.next();
  return from_coords(v);
}

JordanElement<double> random_float_element(RatRng& rng) {
  Coord27<double> v;
  for (int k = 0; k < kJordanDim; ++k) v[k] = rng.next_double(-1.0, 1.0);
  return from_coords(v);
}

double max_coord_diff(const JordanElement<double>& a, const JordanElement<double>& b) {
  const Coord27<double> va = coords(a);
  const Coord27<double> vb = coords(b);
  double m = 0.0;
  for (int k = 0; k < kJordanDim; ++k) m = std::max(m, std::abs(va[k] - vb[k]));
  return m;
}

bool is_rotation(const GeneratorName& name) {
  return name.kind != GenKind::Btz && name.kind != GenKind::Btx && name.kind != GenKind::Btq;
}

// =========================================================================
// Suite: octonion arithmetic
// =========================================================================

std::vector<CheckResult> suite_octonion(const Config& cfg) {
  std::vector<CheckResult> out;
  {
    bool ok = true;
    std::string why = "64 products";
    for (int p = 0; p < kNumUnits && ok; ++p) {
      for (int q = 0; q < kNumUnits && ok; ++q) {
        const UnitProduct r = unit_mul(p, q);
        ok = (r.sign == 1 || r.sign == -1) && r.unit >= 0 && r.unit < kNumUnits;
        if (ok && p == 0) ok = r.sign == 1 && r.unit == q;
        if (ok && q == 0) ok = r.sign == 1 && r.unit == p;
        if (ok && p == q && p > 0) ok = r.sign == -1 && r.unit == 0;
        if (ok && p != q && p > 0 && q > 0) {
          const UnitProduct s = unit_mul(q, p);
          ok = s.unit == r.unit && s.sign == -r.sign;
        }
        if (!ok) {
          why = std::string("offending pair (") + std::string(kUnitNames[p]) + ", " +
                std::string(kUnitNames[q]) + ")";
        }
      }
    }
    out.push_back(check_of("unit table closes with anticommuting imaginary units", ok, why));
  }
  {
    RatRng rng(cfg.seed);
    bool ok = true;
    for (int t = 0; t < cfg.samples && ok; ++t) {
      const Octonion<Rational> x = random_octonion(rng);
      const Octonion<Rational> y = random_octonion(rng);
      ok = norm2(x * y) == norm2(x) * norm2(y);
    }
    out.push_back(check_of("norms are multiplicative", ok,
                           "exact over " + std::to_string(cfg.samples) + " random pairs"));
  }
  {
    RatRng rng(cfg.seed + 1);
    bool ok = true;
    for (int t = 0; t < cfg.samples && ok; ++t) {
      const Octonion<Rational> x = random_octonion(rng);
      const Octonion<Rational> y = random_octonion(rng);
      ok = (x * x) * y == x * (x * y) && (x * y) * y == x * (y * y);
    }
    out.push_back(check_of("alternative laws hold", ok,
                           "exact over " + std::to_string(cfg.samples) + " random pairs"));
  }
  {
    RatRng rng(cfg.seed + 2);
    bool ok = true;
    for (int t = 0; t < cfg.samples && ok; ++t) {
      const Octonion<Rational> x = random_octonion(rng);
      const Octonion<Rational> y = random_octonion(rng);
      ok = conj(x * y) == conj(y) * conj(x);
    }
    out.push_back(check_of("conjugation reverses products", ok,
                           "exact over " + std::to_string(cfg.samples) + " random pairs"));
  }
  {
    RatRng rng(cfg.seed + 3);
    bool ok = true;
    const auto assoc = [](const Octonion<Rational>& x, const Octonion<Rational>& y,
                          const Octonion<Rational>& z) { return (x * y) * z - x * (y * z); };
    for (int t = 0; t < cfg.samples && ok; ++t) {
      const Octonion<Rational> x = random_octonion(rng);
      const Octonion<Rational> y = random_octonion(rng);
      const Octonion<Rational> z = random_octonion(rng);
      const Octonion<Rational> a = assoc(x, y, z);
      ok = a == -assoc(y, x, z) && a == -assoc(x, z, y);
    }
    out.push_back(check_of("associator is alternating", ok,
                           "exact over " + std::to_string(cfg.samples) + " random triples"));
  }
  {
    bool ok = true;
    for (const std::array<int, 3>& t : quaternionic_triples()) {
      const Octonion<Rational> p = Octonion<Rational>::unit(t[0], Rational(1));
      const Octonion<Rational> q = Octonion<Rational>::unit(t[1], Rational(1));
      const Octonion<Rational> r = Octonion<Rational>::unit(t[2], Rational(1));
      ok = ok && (p * q) * r == p * (q * r);
    }
    out.push_back(check_of("quaternionic triples associate", ok, "all 7 triples, exact"));
  }
  return out;
}

// =========================================================================
// Suite: finite-angle group checks (floats)
// =========================================================================

std::vector<CheckResult> suite_group(const Config& cfg) {
  std::vector<CheckResult> out;
  {
    RatRng rng(cfg.seed);
    double worst = 0.0;
    int comparisons = 0;
    for (const GenKind kind : {GenKind::A, GenKind::G}) {
      for (int q = 1; q < kNumUnits; ++q) {
        const GroupAction t1 = build_generator({kind, 1, q, 0});
        const GroupAction t2 = build_generator({kind, 2, q, 0});
        const GroupAction t3 = build_generator({kind, 3, q, 0});
        for (int s = 0; s < cfg.samples; ++s) {
          const JordanElement<double> X = random_float_element(rng);
          const double alpha = rng.next_double(-2.0, 2.0);
          const JordanElement<double> out1 = apply(t1, alpha, X);
          worst = std::max(worst, max_coord_diff(out1, apply(t2, alpha, X)));
          worst = std::max(worst, max_coord_diff(out1, apply(t3, alpha, X)));
          comparisons += 2;
        }
      }
    }
    out.push_back(check_of("A and G composites are type independent at finite angle",
                           worst <= cfg.tol,
                           "max deviation " + sci(worst) + " over " +
                               std::to_string(comparisons) + " comparisons"));
  }
  {
    RatRng rng(cfg.seed + 1);
    double worst_det = 0.0;
    double worst_trace = 0.0;
    int applications = 0;
    for (const GeneratorName& name : canonical_generators()) {
      const GroupAction action = build_generator(name);
      for (int s = 0; s < cfg.samples; ++s) {
        const JordanElement<double> X = random_float_element(rng);
        const double alpha = rng.next_double(-2.0, 2.0);
        const JordanElement<double> Y = apply(action, alpha, X);
        worst_det = std::max(worst_det, std::abs(freudenthal_det(Y) - freudenthal_det(X)));
        if (is_rotation(name)) {
          worst_trace = std::max(worst_trace, std::abs(trace(Y) - trace(X)));
        }
        ++applications;
      }
    }
    out.push_back(check_of("every transformation preserves the determinant", worst_det <= cfg.tol,
                           "max drift " + sci(worst_det) + " over " +
                               std::to_string(applications) + " applications"));
    out.push_back(check_of("every rotation preserves the trace", worst_trace <= cfg.tol,
                           "max drift " + sci(worst_trace)));
  }
  {
    RatRng rng(cfg.seed + 2);
    const GroupAction r1 = build_generator({GenKind::Rxz, 1, 0, 0});
    const GroupAction r2 = build_generator({GenKind::Rxz, 2, 0, 0});
    const GroupAction r3 = build_generator({GenKind::Rxz, 3, 0, 0});
    const double pi = std::acos(-1.0);
    double worst = 0.0;
    for (int s = 0; s < cfg.samples; ++s) {
      const JordanElement<double> X = random_float_element(rng);
      const JordanElement<double> shifted = tshift(X);
      worst = std::max(worst, max_coord_diff(apply(sequence(r2, r1), -pi, X), shifted));
      worst = std::max(
          worst, max_coord_diff(apply(sequence(sequence(sequence(r1, r2), r1), r2), pi, X),
                                shifted));
      worst = std::max(
          worst, max_coord_diff(apply(sequence(sequence(sequence(r1, r2), r3), r1), pi, X),
                                shifted));
    }
    out.push_back(check_of("cyclic relabeling equals its three rotation-product forms",
                           worst <= cfg.tol, "max deviation " + sci(worst) + " at angle pi"));
  }
  {
    RatRng rng(cfg.seed + 3);
    bool ok = true;
    for (int s = 0; s < cfg.samples && ok; ++s) {
      const JordanElement<Rational> X = random_element(rng);
      ok = tshift(tshift(tshift(X))) == X &&
           freudenthal_det(tshift(X)) == freudenthal_det(X) && trace(tshift(X)) == trace(X);
    }
    out.push_back(check_of("cyclic relabeling cubes to the identity and preserves det and trace",
                           ok, "exact over " + std::to_string(cfg.samples) + " random elements"));
  }
  {
    RatRng rng(cfg.seed + 4);
    bool ok = true;
    for (int q = 1; q < kNumUnits && ok; ++q) {
      const GroupAction s3 = build_generator({GenKind::S, 3, q, 0});
      const GroupAction comp =
          sequence(scaled(build_generator({GenKind::S, 2, q, 0}), rat(-1)),
                   scaled(build_generator({GenKind::S, 1, q, 0}), rat(-1)));
      const JordanElement<Rational> X = random_element(rng);
      const JordanElement<Jet2> a = apply_jet(s3, constant_jets(X));
      const JordanElement<Jet2> b = apply_jet(comp, constant_jets(X));
      ok = jet_part(a, 0) == X && jet_part(b, 0) == X && jet_part(a, 1) == jet_part(b, 1);
    }
    out.push_back(check_of("type-3 phase flow is reachable from types 1 and 2 to first order",
                           ok, "exact jets, all 7 units"));
  }
  return out;
}

// =========================================================================
// Suite: basis, brackets, Killing form (exact)
// =========================================================================

std::vector<CheckResult> suite_structure(const Config& cfg) {
  const Algebra& alg = Algebra::get();
  std::vector<CheckResult> out;
  {
    const ReductionStages& st = alg.stages();
    const bool ok = st.rank_all == 78 && st.count_stage1 == 100 && st.rank_stage1 == 78 &&
                    st.count_stage2 == 79 && st.rank_stage2 == 78 && st.count_stage3 == 78 &&
                    st.rank_stage3 == 78;
    std::ostringstream os;
    os << "counts 135 -> " << st.count_stage1 << " -> " << st.count_stage2 << " -> "
       << st.count_stage3 << ", every stage at rank " << st.rank_stage3;
    out.push_back(check_of("staged eliminations keep rank 78", ok, os.str()));
  }
  {
    bool ok = true;
    for (int q = 1; q < kNumUnits && ok; ++q) {
      for (const GenKind kind : {GenKind::A, GenKind::G}) {
        const TangentMap& t1 = alg.tangent({kind, 1, q, 0});
        ok = ok && t1 == alg.tangent({kind, 2, q, 0}) && t1 == alg.tangent({kind, 3, q, 0});
      }
    }
    out.push_back(check_of("A and G tangents are type independent", ok, "exact, 14 identities"));
  }
  {
    bool ok = true;
    for (int q = 1; q < kNumUnits && ok; ++q) {
      ok = is_zero(alg.tangent({GenKind::S, 1, q, 0}) + alg.tangent({GenKind::S, 2, q, 0}) +
                   alg.tangent({GenKind::S, 3, q, 0}));
    }
    out.push_back(check_of("phase tangents of the three types sum to zero", ok,
                           "exact, all 7 units"));
  }
  {
    const bool ok = is_zero(alg.tangent({GenKind::Btz, 1, 0, 0}) +
                            alg.tangent({GenKind::Btz, 2, 0, 0}) +
                            alg.tangent({GenKind::Btz, 3, 0, 0}));
    out.push_back(check_of("timelike boost tangents of the three types sum to zero", ok,
                           "exact"));
  }
  {
    bool ok = true;
    for (int q = 1; q < kNumUnits && ok; ++q) {
      ok = alg.tangent({GenKind::S, 1, q, 0}) ==
           alg.tangent({GenKind::Rxq, 3, q, 0}) - alg.tangent({GenKind::Rxq, 2, q, 0});
    }
    out.push_back(check_of("phase tangent equals the difference of x-rotation tangents", ok,
                           "exact, all 7 units"));
  }
  {
    bool ok = true;
    for (int q = 1; q < kNumUnits && ok; ++q) {
      const std::array<std::array<int, 2>, 3> planes = transverse_planes(q);
      std::array<TangentMap, 3> r;
      for (int t = 0; t < 3; ++t) {
        r[t] = tangent_of(GeneratorName{GenKind::Transverse, 1, planes[t][0], planes[t][1]});
      }
      ok = alg.tangent({GenKind::A, 1, q, 0}) == r[0] - r[1] &&
           alg.tangent({GenKind::G, 1, q, 0}) == r[0] + r[1] - (rat(2) * r[2]) &&
           alg.tangent({GenKind::S, 1, q, 0}) == r[0] + r[1] + r[2];
    }
    out.push_back(check_of("composite tangents equal their transverse-plane combinations", ok,
                           "exact, all 7 units"));
  }
  {
    bool ok = true;
    int nonzero = 0;
    for (int i = 0; i < Algebra::kDim && ok; ++i) {
      for (int j = i + 1; j < Algebra::kDim && ok; ++j) {
        const RatVector forward = alg.bracket_basis(i, j);
        const RatVector backward = alg.bracket_basis(j, i);
        bool pair_zero = true;
        for (int k = 0; k < Algebra::kDim && ok; ++k) {
          if (!is_zero(forward[k] + backward[k])) ok = false;
          if (!is_zero(forward[k])) pair_zero = false;
        }
        if (!pair_zero) ++nonzero;
      }
    }
    out.push_back(check_of("brackets close in the basis and are antisymmetric", ok,
                           std::to_string(nonzero) + " of 3003 pairs nonzero, exact"));
  }
  {
    bool ok = true;
    std::string witness;
    long checked = 0;
    if (cfg.jacobi.full) {
      std::vector<std::array<int, 3>> failures(Algebra::kDim);
      std::vector<unsigned char> failed(Algebra::kDim, 0);
      parallel_for(Algebra::kDim, [&](int i) {
        for (int j = i + 1; j < Algebra::kDim; ++j) {
          for (int k = j + 1; k < Algebra::kDim; ++k) {
            if (!alg.jacobi_holds(i, j, k)) {
              if (!failed[i]) failures[i] = {i, j, k};
              failed[i] = 1;
            }
          }
        }
      });
      checked = 76076;
      for (int i = 0; i < Algebra::kDim; ++i) {
        if (failed[i]) {
          ok = false;
          witness = "triple (" + std::to_string(failures[i][0]) + ", " +
                    std::to_string(failures[i][1]) + ", " + std::to_string(failures[i][2]) + ")";
          break;
        }
      }
      if (ok) witness = "all 76076 basis triples, exact";
    } else {
      RatRng rng(cfg.seed + 10);
      std::vector<std::array<int, 3>> triples;
      triples.reserve(cfg.jacobi.samples);
      while (static_cast<int>(triples.size()) < cfg.jacobi.samples) {
        std::array<int, 3> t = {static_cast<int>(rng.next_index(Algebra::kDim)),
                                static_cast<int>(rng.next_index(Algebra::kDim)),
                                static_cast<int>(rng.next_index(Algebra::kDim))};
        std::sort(t.begin(), t.end());
        if (t[0] == t[1] || t[1] == t[2]) continue;
        triples.push_back(t);
      }
      std::vector<unsigned char> holds(triples.size(), 0);
      parallel_for(static_cast<int>(triples.size()), [&](int n) {
        holds[n] = alg.jacobi_holds(triples[n][0], triples[n][1], triples[n][2]) ? 1 : 0;
      });
      checked = static_cast<long>(triples.size());
      for (std::size_t n = 0; n < triples.size(); ++n) {
        if (!holds[n]) {
          ok = false;
          witness = "triple (" + std::to_string(triples[n][0]) + ", " +
                    std::to_string(triples[n][1]) + ", " + std::to_string(triples[n][2]) + ")";
          break;
        }
      }
      if (ok) witness = std::to_string(checked) + " seeded random triples, exact";
    }
    out.push_back(check_of("Jacobi identity holds", ok, witness));
  }
  {
    const RatMatrix& killing = alg.killing_matrix();
    bool diagonal = true;
    int negative = 0;
    int positive = 0;
    for (int i = 0; i < Algebra::kDim; ++i) {
      for (int j = 0; j < Algebra::kDim; ++j) {
        if (i != j && !is_zero(killing[i][j])) diagonal = false;
      }
      const int s = sign(killing[i][i]);
      if (s < 0) ++negative;
      if (s > 0) ++positive;
    }
    const bool ok = diagonal && negative == 52 && positive == 26;
    out.push_back(check_of("Killing form is diagonal with signature (52 negative, 26 positive)",
                           ok,
                           std::to_string(negative) + " negative, " + std::to_string(positive) +
                               " positive, exactly diagonal: " +
                               (diagonal ? "yes" : "no")));
  }
  {
    RatRng rng(cfg.seed + 11);
    const auto sparse = [&rng]() {
      RatVector v(Algebra::kDim, Rational(0));
      for (int t = 0; t < 4; ++t) v[rng.next_index(Algebra::kDim)] = rng.next();
      return v;
    };
    bool ok = true;
    for (int t = 0; t < kKillingInvarianceTriples && ok; ++t) {
      const RatVector x = sparse();
      const RatVector y = sparse();
      const RatVector z = sparse();
      ok = is_zero(alg.killing(alg.bracket_vector(x, y), z) +
                   alg.killing(y, alg.bracket_vector(x, z)));
    }
    out.push_back(check_of("Killing form is invariant under the adjoint action", ok,
                           "exact over " + std::to_string(kKillingInvarianceTriples) +
                               " random triples"));
  }
  {
    const std::array<int, 6>& cartan = alg.cartan_indices();
    bool commute = true;
    for (int a = 0; a < 6; ++a) {
      for (int b = a + 1; b < 6; ++b) {
        const RatVector v = alg.bracket_basis(cartan[a], cartan[b]);
        for (const Rational& c : v) {
          if (!is_zero(c)) commute = false;
        }
      }
    }
    const int centralizer = alg.cartan_centralizer_dimension();
    out.push_back(check_of("Cartan six-set commutes and is its own centralizer",
                           commute && centralizer == 6,
                           "centralizer dimension " + std::to_string(centralizer)));
  }
  return out;
}

// =========================================================================
// Suites from the subalgebra catalogue
// =========================================================================

std::vector<CheckResult> suite_chains(const Config&) {
  const Algebra& alg = Algebra::get();
  std::vector<CheckResult> out = verify_records(alg);
  for (auto& group : {verify_chain_annotations(alg), verify_direct_sums(alg),
                      verify_derivations(alg)}) {
    out.insert(out.end(), group.begin(), group.end());
  }
  return out;
}

std::vector<CheckResult> suite_stabilizers(const Config&) {
  return verify_stabilizers(Algebra::get());
}

// =========================================================================
// Report rendering
// =========================================================================

bool all_pass(const std::vector<SuiteReport>& suites) {
  for (const SuiteReport& s : suites) {
    for (const CheckResult& c : s.checks) {
      if (!c.pass) return false;
    }
  }
  return true;
}

std::string render_text(const std::vector<SuiteReport>& suites) {
  std::ostringstream os;
  int total = 0;
  int passed = 0;
  for (const SuiteReport& s : suites) {
    int suite_passed = 0;
    os << "== " << s.name << " ==\n";
    for (const CheckResult& c : s.checks) {
      os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
      if (!c.detail.empty()) os << " -- " << c.detail;
      os << '\n';
      if (c.pass) ++suite_passed;
    }
    os << s.name << ": " << suite_passed << "/" << s.checks.size() << " passed\n\n";
    total += static_cast<int>(s.checks.size());
    passed += suite_passed;
  }
  os << "total: " << passed << "/" << total << " passed\n";
  return os.str();
}

std::string render_json(const std::vector<SuiteReport>& suites) {
  nlohmann::ordered_json doc;
  doc["suites"] = nlohmann::ordered_json::array();
  for (const SuiteReport& s : suites) {
    nlohmann::ordered_json suite;
    suite["suite"] = s.name;
    suite["checks"] = nlohmann::ordered_json::array();
    int suite_passed = 0;
    for (const CheckResult& c : s.checks) {
      nlohmann::ordered_json item;
      item["name"] = c.name;
      item["status"] = c.pass ? "pass" : "fail";
      item["detail"] = c.detail;
      suite["checks"].push_back(std::move(item));
      if (c.pass) ++suite_passed;
    }
    suite["passed"] = suite_passed;
    suite["failed"] = static_cast<int>(s.checks.size()) - suite_passed;
    doc["suites"].push_back(std::move(suite));
  }
  doc["pass"] = all_pass(suites);
  return doc.dump() + "\n";
}

int render_and_exit(const Config& cfg, const std::vector<SuiteReport>& suites,
                    const std::string& default_format) {
  const std::string format = cfg.format.empty() ? default_format : cfg.format;
  if (format == "json") {
    emit(cfg, render_json(suites));
  } else if (format == "text") {
    emit(cfg, render_text(suites));
  } else {
    throw std::invalid_argument("unsupported format for reports: " + format);
  }
  return all_pass(suites) ? 0 : 1;
}

// =========================================================================
// Commands
// =========================================================================

int cmd_verify(const Config& cfg, const std::string& suite) {
  std::vector<SuiteReport> suites;
  const auto want = [&suite](const char* name) { return suite == "all" || suite == name; };
  if (want("octonion")) suites.push_back({"octonion", suite_octonion(cfg)});
  if (want("group")) suites.push_back({"group", suite_group(cfg)});
  if (want("structure")) suites.push_back({"structure", suite_structure(cfg)});
  if (want("chains")) suites.push_back({"chains", suite_chains(cfg)});
  if (want("stabilizers")) suites.push_back({"stabilizers", suite_stabilizers(cfg)});
  return render_and_exit(cfg, suites, "text");
}

int cmd_table(const Config& cfg) {
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  const StructureTable table = structure_table(Algebra::get());
  if (format == "json") {
    emit(cfg, to_json(table));
  } else if (format == "csv") {
    emit(cfg, to_csv(table));
  } else {
    throw std::invalid_argument("table supports formats json and csv, not " + format);
  }
  return 0;
}

int cmd_killing(const Config& cfg) {
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  const Algebra& alg = Algebra::get();
  if (format == "text") {
    emit(cfg, killing_text(alg));
  } else if (format == "json") {
    emit(cfg, killing_json(alg));
  } else if (format == "csv") {
    emit(cfg, killing_csv(alg));
  } else {
    throw std::invalid_argument("killing supports formats text, json and csv, not " + format);
  }
  return 0;
}

int cmd_basis(const Config& cfg) {
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  const Algebra& alg = Algebra::get();
  if (format == "text") {
    emit(cfg, basis_text(alg));
  } else if (format == "json") {
    emit(cfg, basis_json(alg));
  } else if (format == "csv") {
    emit(cfg, basis_csv(alg));
  } else {
    throw std::invalid_argument("basis supports formats text, json and csv, not " + format);
  }
  return 0;
}

int cmd_octonions(const Config& cfg) {
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  if (format == "text") {
    emit(cfg, octonion_table_text());
  } else if (format == "json") {
    emit(cfg, octonion_table_json());
  } else if (format == "csv") {
    emit(cfg, octonion_table_csv());
  } else {
    throw std::invalid_argument("octonions supports formats text, json and csv, not " + format);
  }
  return 0;
}

int cmd_closure(const Config& cfg, const std::vector<std::string>& gens) {
  const Algebra& alg = Algebra::get();
  Subspace span;
  for (const std::string& g : gens) span.insert(parse_element(alg, g));
  const int span_dim = span.dim();
  const Subspace closed = close(alg, span);
  const Inertia inertia = killing_inertia(alg, closed);
  const bool already_closed = closed.dim() == span_dim;

  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["generators"] = gens;
    doc["generator_span"] = span_dim;
    doc["closure_dimension"] = closed.dim();
    doc["already_closed"] = already_closed;
    doc["killing_inertia"]["negative"] = inertia.negative;
    doc["killing_inertia"]["positive"] = inertia.positive;
    doc["killing_inertia"]["zero"] = inertia.zero;
    emit(cfg, doc.dump() + "\n");
  } else if (format == "text") {
    std::ostringstream os;
    os << "generators (" << gens.size() << "):";
    for (const std::string& g : gens) os << ' ' << g;
    os << '\n';
    os << "generator span: " << span_dim << '\n';
    os << "closure dimension: " << closed.dim() << '\n';
    os << "already closed: " << (already_closed ? "yes" : "no") << '\n';
    os << "restricted Killing inertia: " << inertia.negative << " negative, "
       << inertia.positive << " positive, " << inertia.zero << " zero\n";
    emit(cfg, os.str());
  } else {
    throw std::invalid_argument("closure supports formats text and json, not " + format);
  }
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{
      "octo-e6: exact construction, verification, and export of the Lie algebra of\n"
      "determinant-preserving transformations of 3x3 Hermitian octonionic matrices\n"
      "(78 basis elements, 52 rotations + 26 boosts).\n"
      "Set OCTOE6_THREADS to cap worker threads."};
  app.require_subcommand(1);

  Config cfg;
  std::string jacobi_text = "rand:100000";
  app.add_option("--tol", cfg.tol, "tolerance for float group-level checks")
      ->capture_default_str();
  app.add_option("--samples", cfg.samples, "random samples per group-level check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--jacobi", jacobi_text, "Jacobi identity mode: full or rand:N")
      ->check(CLI::Validator(
          [](std::string& s) -> std::string {
            if (s == "full") return {};
            if (s.rfind("rand:", 0) == 0) {
              const std::string n = s.substr(5);
              if (!n.empty() && n.size() <= 8 &&
                  n.find_first_not_of("0123456789") == std::string::npos &&
                  std::stoi(n) > 0) {
                return {};
              }
            }
            return std::string("must be 'full' or 'rand:N', got '") + s + "'";
          },
          "full|rand:N"))
      ->capture_default_str();
  app.add_option("--format", cfg.format, "output format: text, json, or csv (default per command)")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("-o,--output", cfg.out_path, "write output to FILE instead of stdout");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  verify->add_option("--suite", suite, "octonion, group, structure, chains, stabilizers, or all")
      ->check(CLI::IsMember({"octonion", "group", "structure", "chains", "stabilizers", "all"}))
      ->capture_default_str();
  verify->fallthrough();

  CLI::App* table = app.add_subcommand("table", "export the structure-constant table");
  table->fallthrough();
  CLI::App* killing = app.add_subcommand("killing", "export the Killing form diagonal");
  killing->fallthrough();
  CLI::App* basis = app.add_subcommand("basis", "list the 78 basis elements");
  basis->fallthrough();
  CLI::App* octonions = app.add_subcommand("octonions", "print the unit multiplication table");
  octonions->fallthrough();

  CLI::App* closure = app.add_subcommand(
      "closure", "close the span of the given elements under the bracket");
  std::vector<std::string> gens;
  closure->add_option("--gens", gens,
                      "comma-separated element names or rational combinations, e.g. "
                      "A_k,G_l-S1_l,B2_tz-B3_tz")
      ->required()
      ->delimiter(',');
  closure->fallthrough();

  CLI::App* chains = app.add_subcommand(
      "chains", "verify the subalgebra catalogue: dimensions, signatures, inclusions");
  chains->fallthrough();

  CLI::App* group_check = app.add_subcommand(
      "group-check", "finite-angle float checks for every catalogued transformation");
  group_check->fallthrough();

  CLI11_PARSE(app, argc, argv);

  if (jacobi_text == "full") {
    cfg.jacobi.full = true;
  } else {
    cfg.jacobi.full = false;
    cfg.jacobi.samples = std::stoi(jacobi_text.substr(5));
  }

  if (verify->parsed()) return cmd_verify(cfg, suite);
  if (table->parsed()) return cmd_table(cfg);
  if (killing->parsed()) return cmd_killing(cfg);
  if (basis->parsed()) return cmd_basis(cfg);
  if (octonions->parsed()) return cmd_octonions(cfg);
  if (closure->parsed()) return cmd_closure(cfg, gens);
  if (chains->parsed()) {
    return render_and_exit(cfg, {{"chains", suite_chains(cfg)}}, "text");
  }
  if (group_check->parsed()) {
    return render_and_exit(cfg, {{"group", suite_group(cfg)}}, "text");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}
