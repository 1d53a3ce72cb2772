#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <random>

#include "json.hpp"
#include "stylic/monoid.hpp"

using namespace stylic;

TEST_CASE("closure sizes match the recorded golden values") {
  std::ifstream in(std::string(STYLIC_TEST_DATA) + "/monoid_sizes.json");
  REQUIRE(in.good());
  nlohmann::json golden = nlohmann::json::parse(in);
  for (auto& [rank_text, size] : golden.items()) {
    int rank = std::stoi(rank_text);
    CHECK(enumerate_monoid(rank).size() == size.get<int>());
  }
  CHECK(enumerate_monoid(1).size() == 2);
  CHECK(enumerate_monoid(2).size() == 5);
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(enumerate_monoid(7), std::runtime_error);
  CHECK_NOTHROW(enumerate_monoid(4, 4));
  CHECK_THROWS_AS(enumerate_monoid(5, 4), std::runtime_error);
  CHECK_THROWS_AS(enumerate_monoid(0), std::invalid_argument);
}

TEST_CASE("table structure") {
  for (int rank = 1; rank <= 3; ++rank) {
    MonoidTable m = enumerate_monoid(rank);
    REQUIRE(m.size() > 0);
    CHECK(m.elements[m.identity_index].empty());
    CHECK(m.zero_index >= 0);
    CHECK(m.elements[m.zero_index] == absorbing_element(rank));

    for (int e = 0; e < m.size(); ++e) {
      // stored canonical words reproduce their elements
      CHECK(n_tableau(m.canonical[e]) == m.elements[e]);
      CHECK(m.product[m.identity_index][e] == e);
      CHECK(m.product[e][m.identity_index] == e);
      CHECK(m.product[m.zero_index][e] == m.zero_index);
      CHECK(m.product[e][m.zero_index] == m.zero_index);
      for (Letter a = 1; a <= rank; ++a) {
        CHECK(m.gen_action[e][a - 1] == m.index_of(insert_letter(m.elements[e], a)));
      }
    }

    // the filled product table agrees with tableau multiplication
    for (int i = 0; i < m.size(); ++i) {
      for (int j = 0; j < m.size(); ++j) {
        CHECK(m.product[i][j] == m.index_of(multiply(m.elements[i], m.elements[j])));
      }
    }
  }
}

TEST_CASE("associativity") {
  MonoidTable m2 = enumerate_monoid(2);
  for (int a = 0; a < m2.size(); ++a) {
    for (int b = 0; b < m2.size(); ++b) {
      for (int c = 0; c < m2.size(); ++c) {
        CHECK(m2.product[m2.product[a][b]][c] == m2.product[a][m2.product[b][c]]);
      }
    }
  }
  MonoidTable m4 = enumerate_monoid(4);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> pick(0, m4.size() - 1);
  for (int t = 0; t < 20000; ++t) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    CHECK(m4.product[m4.product[a][b]][c] == m4.product[a][m4.product[b][c]]);
  }
}

TEST_CASE("involution is an involutive anti-automorphism") {
  for (int rank = 1; rank <= 3; ++rank) {
    MonoidTable m = enumerate_monoid(rank);
    for (int e = 0; e < m.size(); ++e) {
      CHECK(m.involution[m.involution[e]] == e);
      CHECK(m.elements[m.involution[e]] == n_tableau(complement_reverse(m.canonical[e])));
    }
    for (int i = 0; i < m.size(); ++i) {
      for (int j = 0; j < m.size(); ++j) {
        CHECK(m.involution[m.product[i][j]] == m.product[m.involution[j]][m.involution[i]]);
      }
    }
    CHECK(m.involution[m.identity_index] == m.identity_index);
    CHECK(m.involution[m.zero_index] == m.zero_index);
  }
}

TEST_CASE("principal two-sided ideals are distinct") {
  for (int rank = 1; rank <= 3; ++rank) {
    CHECK(is_j_trivial(enumerate_monoid(rank)));
  }
}

TEST_CASE("index lookup") {
  MonoidTable m = enumerate_monoid(2);
  CHECK(m.index_of(NTableau(2)) == m.identity_index);
  CHECK(m.index_of(n_tableau(Word::parse("12121", 2))) >= 0);
  CHECK(m.index_of(NTableau({{1, 2, 3}, {2, 3}, {3}}, 3)) == -1);  // foreign rank's zero
}
