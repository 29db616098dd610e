#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "glconj/fixtures.hpp"
#include "glconj/io.hpp"
#include "test_support.hpp"

using namespace glconj;

TEST_CASE("matrix text format") {
  auto a = parse_matrix("2 3\n1 -2 3\n4 5 -60000000000000000000000\n");
  CHECK(a.rows() == 2);
  CHECK(a.cols() == 3);
  CHECK(a(1, 2) == Integer("-60000000000000000000000"));
  CHECK(parse_matrix(format_matrix(a)) == a);
  CHECK(format_matrix(IntMatrix{{1, 0}, {0, 1}}) == "2 2\n1 0\n0 1\n");
  // Entries may be laid out freely after the header.
  CHECK(parse_matrix("\n2 2 \n 1 2 3\n4") == IntMatrix{{1, 2}, {3, 4}});
  CHECK(parse_matrix("2 2\n+1 2\n3 4\n") == IntMatrix{{1, 2}, {3, 4}});
  CHECK(parse_matrix("0 0\n").rows() == 0);

  CHECK_THROWS_AS(parse_matrix(""), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 2\n1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 2\n1 2 3 4 5\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 2\n1 2 x 4\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 2\n1 2 1.5 4\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 -2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 2 2\n1 2 3 4\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 2\n1 - 3 4\n"), ParseError);
}

TEST_CASE("matrix JSON format") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    IntMatrix a = glconj::testing::random_matrix(rng, 1 + i % 4, 1 + i % 5, -1000, 1000);
    a(0, 0) = Integer("123456789012345678901234567890") * (i % 2 ? 1 : -1);
    Json j = to_json(a);
    CHECK(j["entries"][0][0].is_string());
    CHECK(matrix_from_json(j) == a);
    CHECK(parse_matrix(j.dump()) == a);
    CHECK(matrix_from_json(Json::parse(j.dump())) == a);
  }
  CHECK(parse_matrix(R"({"rows": 1, "cols": 2, "entries": [["3", "-4"]]})") == IntMatrix{{3, -4}});
  CHECK_THROWS_AS(parse_matrix(R"({"rows": 1, "cols": 2, "entries": [["3"]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"rows": 2, "cols": 1, "entries": [["3"]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"rows": 1, "cols": 1, "entries": [["a"]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"rows": 1, "cols": 1})"), ParseError);
  CHECK_THROWS_AS(parse_matrix("{not json"), ParseError);
}

TEST_CASE("assumption report round trip") {
  for (const auto& x : {IntMatrix{{1, 2}, {0, 6}}, IntMatrix{{0, 0}, {0, 1}}, IntMatrix::identity(3)}) {
    auto r = check_assumption(x);
    Json j = to_json(r);
    auto back = assumption_from_json(Json::parse(j.dump()));
    CHECK(back.clause_a == r.clause_a);
    CHECK(back.clause_b == r.clause_b);
    CHECK(back.witness_index_for_b == r.witness_index_for_b);
    REQUIRE(back.per_index.size() == r.per_index.size());
    for (std::size_t i = 0; i < r.per_index.size(); ++i) {
      CHECK(back.per_index[i].eigenvalue == r.per_index[i].eigenvalue);
      CHECK(back.per_index[i].q == r.per_index[i].q);
      CHECK(back.per_index[i].smith_exponent == r.per_index[i].smith_exponent);
      CHECK(back.per_index[i].rank == r.per_index[i].rank);
    }
    CHECK(to_json(back) == j);
    CHECK(j["per_index"][0]["q"].is_string());
  }
}

TEST_CASE("verdict round trip") {
  std::vector<std::pair<IntMatrix, IntMatrix>> cases{
      {{{0, 2}, {-3, 0}}, {{0, 1}, {-6, 0}}},
      {{{1, 2}, {0, 6}}, {{1, 1}, {0, 6}}},
      {{{1, 2}, {0, 6}}, {{1, 2}, {0, 6}}},
      {{{0, 0}, {0, 5}}, {{0, 1}, {0, 5}}},
      {{{1, 2}, {0, 6}}, {{1, 0}, {0, 7}}},
      {{{0, -1}, {1, 0}}, {{1, -2}, {1, -1}}},
      {{{1, 0}, {0, -1}}, {{1, 1}, {0, -1}}},
      {{{0, 0, 2}, {1, 0, 0}, {0, 1, 0}}, {{1, -1, 2}, {1, -1, 0}, {0, 1, 0}}},
  };
  std::mt19937_64 rng(8);
  for (int i = 0; i < 10; ++i) {
    IntMatrix x = glconj::testing::random_split_matrix(rng, 2 + i % 4);
    auto [u, uinv] = glconj::testing::random_unimodular_pair(rng, x.rows(), 6, 1);
    cases.emplace_back(x, u * x * uinv);
  }
  for (const auto& [x, y] : cases) {
    auto v = decide(x, y);
    Json j = to_json(v);
    CAPTURE(j.dump());
    CHECK(j.contains("status"));
    CHECK(j.contains("reason"));
    CHECK(j["certificates"].contains("local"));
    auto back = verdict_from_json(Json::parse(j.dump()));
    CHECK(back.status == v.status);
    CHECK(back.reason == v.reason);
    CHECK(back.conjugator == v.conjugator);
    CHECK(back.local.size() == v.local.size());
    CHECK(back.unsupported == v.unsupported);
    CHECK(to_json(back) == j);
  }
  CHECK_THROWS_AS(verdict_from_json(Json::parse(R"({"status": "MAYBE", "reason": "x", "certificates": {"local": []}})")),
                  ParseError);
}

TEST_CASE("report serialization is deterministic and string-valued") {
  auto lemma = to_json(verify_smith_lemma(3));
  CHECK(lemma["pass"] == true);
  CHECK(lemma["entries"].size() == 4);
  CHECK(lemma["entries"][0]["invariant_counts"]["9"] == 1);
  CHECK(Json::parse(lemma.dump()) == lemma);

  auto jac = to_json(jacobi_report(3));
  CHECK(jac["records"].size() == 3);
  CHECK(jac["records"][0]["alpha"][0].is_string());
  CHECK(jac["pass"] == true);
  CHECK(Json::parse(jac.dump()) == jac);

  auto sp = to_json(split_spectrum(IntMatrix{{1, 2}, {0, 6}}), true);
  CHECK(sp["eigenspaces"][1]["q"] == "5");
  CHECK(matrix_from_json(sp["eigenspaces"][0]["E"]) == IntMatrix{{5, -2}, {0, 0}});
  CHECK(to_json(split_spectrum(IntMatrix{{1, 2}, {0, 6}}), true).dump() == sp.dump());

  auto s = to_json(snf(IntMatrix{{2, 4}, {6, 8}}));
  CHECK(s["invariants"] == Json::array({"2", "4"}));
}

TEST_CASE("fixture corpus loads and re-verifies") {
  auto corpus = load_fixtures();
  CHECK(corpus.pairs.size() == 4);
  const auto& ex1 = corpus.at("ex1");
  REQUIRE(ex1.local.size() == 3);
  CHECK(ex1.local[0].T == IntMatrix{{0, -1}, {3, 0}});
  CHECK(ex1.local[1].T == IntMatrix{{1, 0}, {0, 2}});
  const auto& p9 = corpus.at("paley9");
  REQUIRE(p9.conjugator);
  CHECK(verify_conjugator(*p9.conjugator, p9.X, p9.Y));
  CHECK(corpus.at("paley49").X.rows() == 49);
  CHECK_THROWS_AS(corpus.at("nope"), FixtureError);
  CHECK_THROWS_AS(load_fixtures("/nonexistent"), FixtureError);
}
