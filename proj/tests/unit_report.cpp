#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "octoe6/report.hpp"
#include "octoe6/rng.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

using namespace octoe6;

TEST_CASE("structure table snapshot has the fixed shape") {
  const Algebra& alg = Algebra::get();
  const StructureTable table = structure_table(alg);

  REQUIRE(table.basis_names.size() == 78);
  CHECK(table.basis_names[0] == "A_i");
  CHECK(table.basis_names[7] == "G_i");
  CHECK(table.basis_names[52] == "B1_tx");
  CHECK(table.basis_names[77] == "B2_tz-B3_tz");

  CHECK_FALSE(table.brackets.empty());
  std::pair<int, int> prev{-1, -1};
  for (const TableEntry& e : table.brackets) {
    CAPTURE(e.i);
    CAPTURE(e.j);
    CHECK(e.i < e.j);
    CHECK(std::pair<int, int>{e.i, e.j} > prev);
    prev = {e.i, e.j};
    REQUIRE_FALSE(e.terms.empty());
    int prev_k = -1;
    for (const BracketTerm& t : e.terms) {
      CHECK(t.k > prev_k);
      prev_k = t.k;
      CHECK_FALSE(is_zero(t.c));
    }
  }

  // Every nonvanishing pair appears, and matches the live table.
  std::size_t nonzero_pairs = 0;
  for (int i = 0; i < Algebra::kDim; ++i) {
    for (int j = i + 1; j < Algebra::kDim; ++j) {
      if (!alg.bracket_table(i, j).empty()) ++nonzero_pairs;
    }
  }
  CHECK(table.brackets.size() == nonzero_pairs);
  for (const TableEntry& e : table.brackets) {
    CHECK(e.terms == alg.bracket_table(e.i, e.j));
  }
}

TEST_CASE("structure table JSON is canonical and round-trips") {
  const Algebra& alg = Algebra::get();
  const StructureTable table = structure_table(alg);

  const std::string text = to_json(table);
  CHECK(text == to_json(table));  // byte-stable
  const std::string prefix = "{\"basis\":[{\"index\":0,\"name\":\"A_i\"},";
  CHECK(text.substr(0, prefix.size()) == prefix);
  CHECK(text.back() == '\n');

  const StructureTable parsed = table_from_json(text);
  CHECK(parsed == table);
  CHECK(to_json(parsed) == text);
}

TEST_CASE("structure table CSV is canonical and round-trips") {
  const Algebra& alg = Algebra::get();
  const StructureTable table = structure_table(alg);

  const std::string text = to_csv(table);
  CHECK(text == to_csv(table));
  CHECK(text.substr(0, 8) == "i,j,k,c\n");

  const std::vector<TableEntry> parsed = brackets_from_csv(text);
  CHECK(parsed == table.brackets);
}

TEST_CASE("table JSON parser accepts a small valid table") {
  const std::string text =
      "{\"basis\":[{\"index\":0,\"name\":\"a\"},{\"index\":1,\"name\":\"b\"}],"
      "\"brackets\":[{\"i\":0,\"j\":1,\"terms\":[{\"k\":0,\"c\":\"1/2\"}]}]}";
  const StructureTable parsed = table_from_json(text);
  REQUIRE(parsed.basis_names.size() == 2);
  CHECK(parsed.basis_names[1] == "b");
  REQUIRE(parsed.brackets.size() == 1);
  CHECK(parsed.brackets[0].i == 0);
  CHECK(parsed.brackets[0].j == 1);
  REQUIRE(parsed.brackets[0].terms.size() == 1);
  CHECK(parsed.brackets[0].terms[0].k == 0);
  CHECK(parsed.brackets[0].terms[0].c == Rational(1) / 2);
}

TEST_CASE("table JSON parser rejects malformed input") {
  const auto rejects = [](const std::string& text) {
    CAPTURE(text);
    CHECK_THROWS_AS(static_cast<void>(table_from_json(text)), std::invalid_argument);
  };
  rejects("");
  rejects("[]");
  rejects("{\"basis\":[],\"brackets\":[]}");
  // Basis indices must ascend from zero.
  rejects("{\"basis\":[{\"index\":1,\"name\":\"a\"}],\"brackets\":[]}");
  // Pair index out of range.
  rejects(
      "{\"basis\":[{\"index\":0,\"name\":\"a\"}],"
      "\"brackets\":[{\"i\":0,\"j\":1,\"terms\":[{\"k\":0,\"c\":\"1\"}]}]}");
  // Zero coefficients must be omitted.
  rejects(
      "{\"basis\":[{\"index\":0,\"name\":\"a\"},{\"index\":1,\"name\":\"b\"}],"
      "\"brackets\":[{\"i\":0,\"j\":1,\"terms\":[{\"k\":0,\"c\":\"0\"}]}]}");
  // Pairs must ascend.
  rejects(
      "{\"basis\":[{\"index\":0,\"name\":\"a\"},{\"index\":1,\"name\":\"b\"},"
      "{\"index\":2,\"name\":\"c\"}],"
      "\"brackets\":[{\"i\":0,\"j\":2,\"terms\":[{\"k\":0,\"c\":\"1\"}]},"
      "{\"i\":0,\"j\":1,\"terms\":[{\"k\":0,\"c\":\"1\"}]}]}");
  // Empty term lists must be omitted entirely.
  rejects(
      "{\"basis\":[{\"index\":0,\"name\":\"a\"},{\"index\":1,\"name\":\"b\"}],"
      "\"brackets\":[{\"i\":0,\"j\":1,\"terms\":[]}]}");
}

TEST_CASE("table CSV parser rejects malformed input") {
  const auto rejects = [](const std::string& text) {
    CAPTURE(text);
    CHECK_THROWS_AS(static_cast<void>(brackets_from_csv(text)), std::invalid_argument);
  };
  rejects("");
  rejects("i;j;k;c\n");
  rejects("i,j,k,c\n0,1,2\n");
  rejects("i,j,k,c\n0,1,2,0.5\n");
  rejects("i,j,k,c\n1,0,2,1\n");          // needs i < j
  rejects("i,j,k,c\n0,1,2,0\n");          // zero coefficient
  rejects("i,j,k,c\n0,1,2,1\n0,1,1,1\n");  // term order
  rejects("i,j,k,c\n0,2,1,1\n0,1,1,1\n");  // pair order
  CHECK(brackets_from_csv("i,j,k,c\n").empty());
}

TEST_CASE("killing exports carry 78 diagonal entries and the signature") {
  const Algebra& alg = Algebra::get();
  const std::vector<KillingEntry> entries = killing_diagonal(alg);
  REQUIRE(entries.size() == 78);
  int negative = 0;
  int positive = 0;
  for (const KillingEntry& e : entries) {
    CHECK(e.name == alg.basis()[e.index].name);
    CHECK(e.value == alg.killing_matrix()[e.index][e.index]);
    const int s = sign(e.value);
    CHECK(s != 0);
    (s < 0 ? negative : positive) += 1;
  }
  CHECK(negative == 52);
  CHECK(positive == 26);

  const std::string json_text = killing_json(alg);
  CHECK(json_text == killing_json(alg));
  const auto doc = nlohmann::json::parse(json_text);
  CHECK(doc.at("killing").size() == 78);
  CHECK(doc.at("signature").at("negative") == 52);
  CHECK(doc.at("signature").at("positive") == 26);
  CHECK(doc.at("signature").at("zero") == 0);

  const std::string csv_text = killing_csv(alg);
  CHECK(csv_text.substr(0, 17) == "index,name,value\n");
  std::istringstream csv(csv_text);
  std::string line;
  int lines = 0;
  while (std::getline(csv, line)) ++lines;
  CHECK(lines == 79);

  const std::string text = killing_text(alg);
  CHECK(text.find("signature: 52 negative, 26 positive, 0 zero\n") != std::string::npos);
}

TEST_CASE("basis listings split rotations from boosts at index 52") {
  const Algebra& alg = Algebra::get();
  const auto doc = nlohmann::json::parse(basis_json(alg));
  REQUIRE(doc.at("basis").size() == 78);
  CHECK(doc.at("basis").at(51).at("kind") == "rotation");
  CHECK(doc.at("basis").at(52).at("kind") == "boost");
  CHECK(doc.at("basis").at(0).at("name") == "A_i");

  const std::string csv_text = basis_csv(alg);
  CHECK(csv_text.substr(0, 16) == "index,name,kind\n");
  CHECK(csv_text.find("52,B1_tx,boost\n") != std::string::npos);
  CHECK(basis_text(alg).find("A_i") != std::string::npos);
}

TEST_CASE("octonion table exports agree with unit multiplication") {
  const auto doc = nlohmann::json::parse(octonion_table_json());
  REQUIRE(doc.at("units").size() == 8);
  CHECK(doc.at("units").at(0) == "1");
  // Row and column 0 are the identity; imaginary squares are -1.
  for (int q = 0; q < 8; ++q) {
    CHECK(doc.at("products").at(0).at(q) == doc.at("units").at(q));
    CHECK(doc.at("products").at(q).at(0) == doc.at("units").at(q));
    if (q > 0) CHECK(doc.at("products").at(q).at(q) == "-1");
  }
  CHECK(doc.at("products").at(1).at(2) == "k");
  CHECK(doc.at("products").at(2).at(1) == "-k");

  const std::string csv_text = octonion_table_csv();
  CHECK(csv_text.substr(0, 12) == "p,q,product\n");
  std::istringstream csv(csv_text);
  std::string line;
  int lines = 0;
  while (std::getline(csv, line)) ++lines;
  CHECK(lines == 65);
  CHECK(csv_text.find("i,j,k\n") != std::string::npos);
  CHECK(csv_text.find("j,i,-k\n") != std::string::npos);

  const std::string text = octonion_table_text();
  CHECK(text == octonion_table_text());
  CHECK(text.find("-1") != std::string::npos);
  CHECK(text.find("kl") != std::string::npos);
}

TEST_CASE("jordan element JSON round-trips and pins the identity") {
  const JordanElement<Rational> id = JordanElement<Rational>::identity();
  const std::string zeros = "[\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\"]";
  CHECK(to_json(id) == "{\"d\":[\"1\",\"1\",\"1\"],\"x1\":" + zeros + ",\"x2\":" + zeros +
                           ",\"x3\":" + zeros + "}\n");

  RatRng rng(2024);
  for (int trial = 0; trial < 5; ++trial) {
    Coord27<Rational> v;
    for (int k = 0; k < kJordanDim; ++k) v[k] = rng.next();
    const JordanElement<Rational> X = from_coords(v);
    const JordanElement<Rational> back = jordan_from_json(to_json(X));
    CHECK(back == X);
  }
}

TEST_CASE("jordan element JSON parser rejects malformed input") {
  const auto rejects = [](const std::string& text) {
    CAPTURE(text);
    CHECK_THROWS_AS(static_cast<void>(jordan_from_json(text)), std::invalid_argument);
  };
  rejects("");
  rejects("{}");
  rejects("{\"d\":[\"1\",\"1\"],\"x1\":[],\"x2\":[],\"x3\":[]}");
  const std::string zeros = "[\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\",\"0\"]";
  rejects("{\"d\":[\"1\",\"1\",\"x\"],\"x1\":" + zeros + ",\"x2\":" + zeros + ",\"x3\":" +
          zeros + "}");
  rejects("{\"d\":[1,1,1],\"x1\":" + zeros + ",\"x2\":" + zeros + ",\"x3\":" + zeros + "}");
}
