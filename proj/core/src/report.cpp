#include "octoe6/report.hpp"

#include "json.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace octoe6 {

namespace {

using OrderedJson = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& why) { throw std::invalid_argument(why); }

/// Signed printable name of the product e_p * e_q.
std::string signed_unit_name(int p, int q) {
  const UnitProduct r = unit_mul(p, q);
  std::string out = r.sign < 0 ? "-" : "";
  out += kUnitNames[r.unit];
  return out;
}

OrderedJson parse_or_throw(const std::string& text) {
  OrderedJson doc = OrderedJson::parse(text, nullptr, false);
  if (doc.is_discarded()) bad("malformed JSON");
  return doc;
}

int int_field(const OrderedJson& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_number_integer()) {
    bad(std::string("missing integer field '") + key + "'");
  }
  return obj[key].get<int>();
}

std::string string_field(const OrderedJson& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_string()) {
    bad(std::string("missing string field '") + key + "'");
  }
  return obj[key].get<std::string>();
}

std::vector<Rational> rational_array(const OrderedJson& value, std::size_t size,
                                     const char* key) {
  if (!value.is_array() || value.size() != size) {
    bad(std::string("field '") + key + "' must be an array of " + std::to_string(size));
  }
  std::vector<Rational> out;
  out.reserve(size);
  for (const auto& item : value) {
    if (!item.is_string()) bad(std::string("field '") + key + "' must hold rational strings");
    out.push_back(parse_rational(item.get<std::string>()));
  }
  return out;
}

}  // namespace

// =========================================================================
// Structure-constant table
// =========================================================================

StructureTable structure_table(const Algebra& alg) {
  StructureTable out;
  out.basis_names.reserve(Algebra::kDim);
  for (const BasisElement& b : alg.basis()) out.basis_names.push_back(b.name);
  for (int i = 0; i < Algebra::kDim; ++i) {
    for (int j = i + 1; j < Algebra::kDim; ++j) {
      const std::vector<BracketTerm>& terms = alg.bracket_table(i, j);
      if (terms.empty()) continue;
      out.brackets.push_back(TableEntry{i, j, terms});
    }
  }
  return out;
}

std::string to_json(const StructureTable& table) {
  OrderedJson doc;
  doc["basis"] = OrderedJson::array();
  for (std::size_t k = 0; k < table.basis_names.size(); ++k) {
    OrderedJson item;
    item["index"] = static_cast<int>(k);
    item["name"] = table.basis_names[k];
    doc["basis"].push_back(std::move(item));
  }
  doc["brackets"] = OrderedJson::array();
  for (const TableEntry& e : table.brackets) {
    OrderedJson item;
    item["i"] = e.i;
    item["j"] = e.j;
    item["terms"] = OrderedJson::array();
    for (const BracketTerm& t : e.terms) {
      OrderedJson term;
      term["k"] = t.k;
      term["c"] = to_string(t.c);
      item["terms"].push_back(std::move(term));
    }
    doc["brackets"].push_back(std::move(item));
  }
  return doc.dump() + "\n";
}

std::string to_csv(const StructureTable& table) {
  std::ostringstream os;
  os << "i,j,k,c\n";
  for (const TableEntry& e : table.brackets) {
    for (const BracketTerm& t : e.terms) {
      os << e.i << ',' << e.j << ',' << t.k << ',' << to_string(t.c) << '\n';
    }
  }
  return os.str();
}

StructureTable table_from_json(const std::string& text) {
  const OrderedJson doc = parse_or_throw(text);
  if (!doc.is_object() || doc.size() != 2 || !doc.contains("basis") ||
      !doc.contains("brackets")) {
    bad("top level must be an object with exactly 'basis' and 'brackets'");
  }
  StructureTable out;
  if (!doc["basis"].is_array() || doc["basis"].empty()) bad("'basis' must be a nonempty array");
  for (const auto& item : doc["basis"]) {
    if (!item.is_object() || item.size() != 2) bad("basis entries must be {index,name}");
    const int index = int_field(item, "index");
    if (index != static_cast<int>(out.basis_names.size())) {
      bad("basis indices must ascend from 0 without gaps");
    }
    out.basis_names.push_back(string_field(item, "name"));
  }
  const int n = static_cast<int>(out.basis_names.size());
  if (!doc["brackets"].is_array()) bad("'brackets' must be an array");
  std::pair<int, int> prev{-1, -1};
  for (const auto& item : doc["brackets"]) {
    if (!item.is_object() || item.size() != 3) bad("bracket entries must be {i,j,terms}");
    TableEntry e;
    e.i = int_field(item, "i");
    e.j = int_field(item, "j");
    if (e.i < 0 || e.j >= n || e.i >= e.j) bad("bracket pair must satisfy 0 <= i < j < n");
    if (std::pair<int, int>{e.i, e.j} <= prev) bad("bracket pairs must ascend");
    prev = {e.i, e.j};
    if (!item.contains("terms") || !item["terms"].is_array() || item["terms"].empty()) {
      bad("'terms' must be a nonempty array");
    }
    int prev_k = -1;
    for (const auto& term : item["terms"]) {
      if (!term.is_object() || term.size() != 2) bad("terms must be {k,c}");
      BracketTerm t;
      t.k = int_field(term, "k");
      if (t.k < 0 || t.k >= n) bad("term index out of range");
      if (t.k <= prev_k) bad("term indices must strictly ascend");
      prev_k = t.k;
      t.c = parse_rational(string_field(term, "c"));
      if (is_zero(t.c)) bad("zero coefficients must be omitted");
      e.terms.push_back(std::move(t));
    }
    out.brackets.push_back(std::move(e));
  }
  return out;
}

std::vector<TableEntry> brackets_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "i,j,k,c") bad("CSV header must be 'i,j,k,c'");
  std::vector<TableEntry> out;
  int line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::array<std::string, 4> field;
    std::size_t start = 0;
    for (int f = 0; f < 4; ++f) {
      const std::size_t comma = line.find(',', start);
      const bool last = f == 3;
      if (last != (comma == std::string::npos)) {
        bad("line " + std::to_string(line_no) + ": expected 4 comma-separated fields");
      }
      field[f] = line.substr(start, last ? std::string::npos : comma - start);
      start = comma + 1;
    }
    BracketTerm t;
    int i = 0, j = 0;
    try {
      std::size_t used = 0;
      i = std::stoi(field[0], &used);
      if (used != field[0].size()) throw std::invalid_argument(field[0]);
      j = std::stoi(field[1], &used);
      if (used != field[1].size()) throw std::invalid_argument(field[1]);
      t.k = std::stoi(field[2], &used);
      if (used != field[2].size()) throw std::invalid_argument(field[2]);
    } catch (const std::exception&) {
      bad("line " + std::to_string(line_no) + ": indices must be integers");
    }
    t.c = parse_rational(field[3]);
    if (i < 0 || i >= j) bad("line " + std::to_string(line_no) + ": need 0 <= i < j");
    if (t.k < 0) bad("line " + std::to_string(line_no) + ": negative basis index");
    if (is_zero(t.c)) bad("line " + std::to_string(line_no) + ": zero coefficient");
    if (out.empty() || out.back().i != i || out.back().j != j) {
      const std::pair<int, int> prev =
          out.empty() ? std::pair<int, int>{-1, -1} : std::pair<int, int>{out.back().i, out.back().j};
      if (std::pair<int, int>{i, j} <= prev) {
        bad("line " + std::to_string(line_no) + ": pairs must ascend");
      }
      out.push_back(TableEntry{i, j, {}});
    }
    if (!out.back().terms.empty() && t.k <= out.back().terms.back().k) {
      bad("line " + std::to_string(line_no) + ": term indices must strictly ascend");
    }
    out.back().terms.push_back(std::move(t));
  }
  return out;
}

// =========================================================================
// Killing form
// =========================================================================

std::vector<KillingEntry> killing_diagonal(const Algebra& alg) {
  std::vector<KillingEntry> out;
  out.reserve(Algebra::kDim);
  const RatMatrix& killing = alg.killing_matrix();
  for (int k = 0; k < Algebra::kDim; ++k) {
    out.push_back(KillingEntry{k, alg.basis()[k].name, killing[k][k]});
  }
  return out;
}

namespace {

struct SignCounts {
  int negative = 0;
  int positive = 0;
  int zero = 0;
};

SignCounts count_signs(const std::vector<KillingEntry>& entries) {
  SignCounts c;
  for (const KillingEntry& e : entries) {
    const int s = sign(e.value);
    if (s < 0) {
      ++c.negative;
    } else if (s > 0) {
      ++c.positive;
    } else {
      ++c.zero;
    }
  }
  return c;
}

}  // namespace

std::string killing_json(const Algebra& alg) {
  const std::vector<KillingEntry> entries = killing_diagonal(alg);
  const SignCounts counts = count_signs(entries);
  OrderedJson doc;
  doc["killing"] = OrderedJson::array();
  for (const KillingEntry& e : entries) {
    OrderedJson item;
    item["index"] = e.index;
    item["name"] = e.name;
    item["value"] = to_string(e.value);
    doc["killing"].push_back(std::move(item));
  }
  doc["signature"]["negative"] = counts.negative;
  doc["signature"]["positive"] = counts.positive;
  doc["signature"]["zero"] = counts.zero;
  return doc.dump() + "\n";
}

std::string killing_csv(const Algebra& alg) {
  std::ostringstream os;
  os << "index,name,value\n";
  for (const KillingEntry& e : killing_diagonal(alg)) {
    os << e.index << ',' << e.name << ',' << to_string(e.value) << '\n';
  }
  return os.str();
}

std::string killing_text(const Algebra& alg) {
  const std::vector<KillingEntry> entries = killing_diagonal(alg);
  const SignCounts counts = count_signs(entries);
  std::ostringstream os;
  for (const KillingEntry& e : entries) {
    os << std::setw(2) << e.index << "  " << std::left << std::setw(13) << e.name
       << std::right << to_string(e.value) << '\n';
  }
  os << "signature: " << counts.negative << " negative, " << counts.positive
     << " positive, " << counts.zero << " zero\n";
  return os.str();
}

// =========================================================================
// Basis listing
// =========================================================================

namespace {

const char* kind_of(int index) {
  return index < Algebra::kBoostStart ? "rotation" : "boost";
}

}  // namespace

std::string basis_json(const Algebra& alg) {
  OrderedJson doc;
  doc["basis"] = OrderedJson::array();
  for (const BasisElement& b : alg.basis()) {
    OrderedJson item;
    item["index"] = b.index;
    item["name"] = b.name;
    item["kind"] = kind_of(b.index);
    doc["basis"].push_back(std::move(item));
  }
  return doc.dump() + "\n";
}

std::string basis_csv(const Algebra& alg) {
  std::ostringstream os;
  os << "index,name,kind\n";
  for (const BasisElement& b : alg.basis()) {
    os << b.index << ',' << b.name << ',' << kind_of(b.index) << '\n';
  }
  return os.str();
}

std::string basis_text(const Algebra& alg) {
  std::ostringstream os;
  for (const BasisElement& b : alg.basis()) {
    os << std::setw(2) << b.index << "  " << std::left << std::setw(13) << b.name
       << std::right << kind_of(b.index) << '\n';
  }
  return os.str();
}

// =========================================================================
// Octonion multiplication table
// =========================================================================

std::string octonion_table_json() {
  OrderedJson doc;
  doc["units"] = OrderedJson::array();
  for (const std::string_view name : kUnitNames) doc["units"].push_back(std::string(name));
  doc["products"] = OrderedJson::array();
  for (int p = 0; p < kNumUnits; ++p) {
    OrderedJson row = OrderedJson::array();
    for (int q = 0; q < kNumUnits; ++q) row.push_back(signed_unit_name(p, q));
    doc["products"].push_back(std::move(row));
  }
  return doc.dump() + "\n";
}

std::string octonion_table_csv() {
  std::ostringstream os;
  os << "p,q,product\n";
  for (int p = 0; p < kNumUnits; ++p) {
    for (int q = 0; q < kNumUnits; ++q) {
      os << kUnitNames[p] << ',' << kUnitNames[q] << ',' << signed_unit_name(p, q) << '\n';
    }
  }
  return os.str();
}

std::string octonion_table_text() {
  std::ostringstream os;
  os << std::setw(4) << ' ';
  for (const std::string_view name : kUnitNames) {
    os << std::setw(5) << name;
  }
  os << '\n';
  for (int p = 0; p < kNumUnits; ++p) {
    os << std::setw(4) << kUnitNames[p];
    for (int q = 0; q < kNumUnits; ++q) os << std::setw(5) << signed_unit_name(p, q);
    os << '\n';
  }
  return os.str();
}

// =========================================================================
// Jordan elements
// =========================================================================

std::string to_json(const JordanElement<Rational>& X) {
  OrderedJson doc;
  doc["d"] = OrderedJson::array({to_string(X.d1), to_string(X.d2), to_string(X.d3)});
  const auto oct = [](const Octonion<Rational>& x) {
    OrderedJson row = OrderedJson::array();
    for (int u = 0; u < kNumUnits; ++u) row.push_back(to_string(x.c[u]));
    return row;
  };
  doc["x1"] = oct(X.x1);
  doc["x2"] = oct(X.x2);
  doc["x3"] = oct(X.x3);
  return doc.dump() + "\n";
}

JordanElement<Rational> jordan_from_json(const std::string& text) {
  const OrderedJson doc = parse_or_throw(text);
  if (!doc.is_object() || doc.size() != 4 || !doc.contains("d") || !doc.contains("x1") ||
      !doc.contains("x2") || !doc.contains("x3")) {
    bad("top level must be an object with exactly d, x1, x2, x3");
  }
  const std::vector<Rational> d = rational_array(doc["d"], 3, "d");
  JordanElement<Rational> X;
  X.d1 = d[0];
  X.d2 = d[1];
  X.d3 = d[2];
  const auto oct = [&](const char* key) {
    const std::vector<Rational> v = rational_array(doc[key], kNumUnits, key);
    Octonion<Rational> x;
    for (int u = 0; u < kNumUnits; ++u) x.c[u] = v[u];
    return x;
  };
  X.x1 = oct("x1");
  X.x2 = oct("x2");
  X.x3 = oct("x3");
  return X;
}

}  // namespace octoe6
