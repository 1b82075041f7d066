// Unit tests for the reflection-representation core: group elements, words,
// lengths, descents, Demazure products and Bruhat order.
// SPDX-License-Identifier: MIT
#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "core/coxeter.hpp"
#include "doctest.h"

using coxcell::CoxeterSystem;
using coxcell::GroupElement;
using coxcell::InputError;
using coxcell::Word;

namespace {

std::vector<std::int64_t> flat(const GroupElement& g) {
  std::vector<std::int64_t> v;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) v.push_back(g.at(i, j));
  return v;
}

// Independent length oracle: breadth-first search over the Cayley graph.
std::map<GroupElement, int> bfs_lengths(const CoxeterSystem& sys) {
  std::map<GroupElement, int> dist;
  std::queue<GroupElement> q;
  dist[sys.identity()] = 0;
  q.push(sys.identity());
  while (!q.empty()) {
    GroupElement w = q.front();
    q.pop();
    const int d = dist[w];
    for (int i = 0; i < sys.rank(); ++i) {
      GroupElement v = sys.mul_simple(w, i);
      if (dist.emplace(v, d + 1).second) q.push(v);
    }
  }
  return dist;
}

// Independent Demazure oracle: the product is the unique length-maximal
// element among all subword products.
GroupElement demazure_oracle(const CoxeterSystem& sys, const Word& w) {
  REQUIRE(w.size() <= 16);
  GroupElement best = sys.identity();
  int best_len = 0;
  for (size_t mask = 0; mask < (size_t{1} << w.size()); ++mask) {
    GroupElement g = sys.identity();
    for (size_t k = 0; k < w.size(); ++k)
      if (mask & (size_t{1} << k)) g = sys.mul_simple(g, w[k]);
    const int l = sys.length(g);
    if (l > best_len) {
      best_len = l;
      best = g;
    }
  }
  return best;
}

// Independent Bruhat oracle: u <= w iff u arises as a subword product of a
// reduced word for w.
std::set<GroupElement> subword_products(const CoxeterSystem& sys, const GroupElement& w) {
  const Word wr = sys.canonical_word(w);
  std::set<GroupElement> out;
  for (size_t mask = 0; mask < (size_t{1} << wr.size()); ++mask) {
    GroupElement g = sys.identity();
    for (size_t k = 0; k < wr.size(); ++k)
      if (mask & (size_t{1} << k)) g = sys.mul_simple(g, wr[k]);
    out.insert(g);
  }
  return out;
}

}  // namespace

TEST_CASE("rank-2 reflection matrices match hand-computed values") {
  auto sys = CoxeterSystem::from_type('A', 2);
  CHECK(sys.rank() == 2);
  CHECK(flat(sys.simple(0)) == std::vector<std::int64_t>{-1, 1, 0, 1});
  CHECK(flat(sys.simple(1)) == std::vector<std::int64_t>{1, 0, 1, -1});
  GroupElement s1s2 = sys.mul_simple(sys.simple(0), 1);
  CHECK(flat(s1s2) == std::vector<std::int64_t>{0, -1, 1, -1});
  GroupElement w0 = sys.mul_simple(s1s2, 0);
  CHECK(flat(w0) == std::vector<std::int64_t>{0, -1, -1, 0});
  CHECK(sys.length(w0) == 3);
  CHECK(sys.mul_simple(w0, 0) == s1s2);  // s_i is an involution
}

TEST_CASE("column multiplication agrees with full matrix product") {
  for (const char* code : {"A3", "B3", "G2"}) {
    auto sys = CoxeterSystem::from_type(code[0], code[1] - '0');
    GroupElement w = sys.evaluate_word(Word{0, 1, 0, 1});
    for (int i = 0; i < sys.rank(); ++i)
      CHECK(sys.mul_simple(w, i) == w.mul(sys.simple(i)));
  }
}

TEST_CASE("named systems have the expected positive root counts") {
  CHECK(CoxeterSystem::from_type('A', 1).positive_roots().size() == 1);
  CHECK(CoxeterSystem::from_type('A', 2).positive_roots().size() == 3);
  CHECK(CoxeterSystem::from_type('A', 3).positive_roots().size() == 6);
  CHECK(CoxeterSystem::from_type('B', 2).positive_roots().size() == 4);
  CHECK(CoxeterSystem::from_type('B', 3).positive_roots().size() == 9);
  CHECK(CoxeterSystem::from_type('C', 3).positive_roots().size() == 9);
  CHECK(CoxeterSystem::from_type('D', 4).positive_roots().size() == 12);
  CHECK(CoxeterSystem::from_type('G', 2).positive_roots().size() == 6);
  CHECK(CoxeterSystem::from_type('F', 4).positive_roots().size() == 24);
  CHECK(CoxeterSystem::from_type('E', 6).positive_roots().size() == 36);
}

TEST_CASE("integer pairing matrix uses the pinned orientation") {
  auto b3 = CoxeterSystem::from_type('B', 3);
  CHECK(b3.cartan(1, 2) == -2);  // last simple root short
  CHECK(b3.cartan(2, 1) == -1);
  auto c3 = CoxeterSystem::from_type('C', 3);
  CHECK(c3.cartan(1, 2) == -1);  // last simple root long
  CHECK(c3.cartan(2, 1) == -2);
  auto g2 = CoxeterSystem::from_type('G', 2);
  CHECK(g2.cartan(0, 1) == -1);
  CHECK(g2.cartan(1, 0) == -3);
  auto f4 = CoxeterSystem::from_type('F', 4);
  CHECK(f4.cartan(1, 2) == -2);
  CHECK(f4.cartan(2, 1) == -1);
  // Raw matrices orient every bond from lower index to higher.
  auto raw = CoxeterSystem::from_matrix({{1, 4}, {4, 1}});
  CHECK(raw.cartan(0, 1) == -1);
  CHECK(raw.cartan(1, 0) == -2);
}

TEST_CASE("constructors reject invalid input") {
  CHECK_THROWS_AS(CoxeterSystem::from_type('A', 0), InputError);
  CHECK_THROWS_AS(CoxeterSystem::from_type('B', 1), InputError);
  CHECK_THROWS_AS(CoxeterSystem::from_type('D', 3), InputError);
  CHECK_THROWS_AS(CoxeterSystem::from_type('E', 9), InputError);
  CHECK_THROWS_AS(CoxeterSystem::from_type('F', 3), InputError);
  CHECK_THROWS_AS(CoxeterSystem::from_type('G', 3), InputError);
  CHECK_THROWS_AS(CoxeterSystem::from_type('H', 3), InputError);
  CHECK_THROWS_AS(CoxeterSystem::from_matrix({{1, 3}, {4, 1}}), InputError);
  CHECK_THROWS_AS(CoxeterSystem::from_matrix({{2, 3}, {3, 1}}), InputError);
  CHECK_THROWS_AS(CoxeterSystem::from_matrix({{1, 3, 3}, {3, 1, 3}}), InputError);
  try {
    CoxeterSystem::from_matrix({{1, 5}, {5, 1}});
    FAIL("expected InputError for m=5");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("non-crystallographic m=5 unsupported") !=
          std::string::npos);
  }
}

TEST_CASE("matrix text parsing round-trips and rejects malformed input") {
  auto sys = CoxeterSystem::from_text("3\n1 3 2\n3 1 4\n2 4 1\n");
  CHECK(sys.rank() == 3);
  CHECK(sys.m(0, 1) == 3);
  CHECK(sys.m(1, 2) == 4);
  CHECK(sys.m(0, 2) == 2);
  CHECK_THROWS_AS(CoxeterSystem::from_text(""), InputError);
  CHECK_THROWS_AS(CoxeterSystem::from_text("2\n1 3 3"), InputError);      // short
  CHECK_THROWS_AS(CoxeterSystem::from_text("2\n1 3\n3 1\n7"), InputError);  // trailing
  CHECK_THROWS_AS(CoxeterSystem::from_file("/nonexistent/file"), InputError);
}

TEST_CASE("unbounded root generation is detected and reported") {
  // A triangle of order-3 bonds generates an infinite group.
  CHECK_THROWS_AS(
      CoxeterSystem::from_matrix({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}}).positive_roots(),
      InputError);
}

TEST_CASE("length equals Cayley-graph distance") {
  for (const char* code : {"A3", "B2", "G2"}) {
    auto sys = CoxeterSystem::from_type(code[0], code[1] - '0');
    auto dist = bfs_lengths(sys);
    for (const auto& [w, d] : dist) CHECK(sys.length(w) == d);
  }
  CHECK(bfs_lengths(CoxeterSystem::from_type('A', 3)).size() == 24);
  CHECK(bfs_lengths(CoxeterSystem::from_type('B', 2)).size() == 8);
}

TEST_CASE("longest element has full length and is an involution") {
  for (const char* code : {"A3", "B3", "G2", "D4"}) {
    auto sys = CoxeterSystem::from_type(code[0], code[1] - '0');
    GroupElement w0 = sys.longest_element();
    CHECK(sys.length(w0) == static_cast<int>(sys.positive_roots().size()));
    CHECK(w0.mul(w0) == sys.identity());
    for (int i = 0; i < sys.rank(); ++i) CHECK(sys.right_descent(w0, i));
  }
  CHECK(CoxeterSystem::from_type('A', 3).length(
            CoxeterSystem::from_type('A', 3).longest_element()) == 6);
  CHECK(CoxeterSystem::from_type('B', 3).length(
            CoxeterSystem::from_type('B', 3).longest_element()) == 9);
  CHECK(CoxeterSystem::from_type('G', 2).length(
            CoxeterSystem::from_type('G', 2).longest_element()) == 6);
}

TEST_CASE("descent predicates agree with length comparison") {
  auto sys = CoxeterSystem::from_type('B', 2);
  for (const auto& [w, d] : bfs_lengths(sys)) {
    for (int i = 0; i < sys.rank(); ++i) {
      CHECK(sys.right_descent(w, i) == (sys.length(sys.mul_simple(w, i)) < d));
      CHECK(sys.left_descent(w, i) == (sys.length(sys.simple(i).mul(w)) < d));
    }
  }
}

TEST_CASE("reducedness matches the length criterion") {
  auto sys = CoxeterSystem::from_type('A', 3);
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> letter(0, 2), len(0, 8);
  for (int t = 0; t < 300; ++t) {
    Word w(static_cast<size_t>(len(rng)));
    for (int& x : w) x = letter(rng);
    const bool expect = sys.length(sys.evaluate_word(w)) == static_cast<int>(w.size());
    CHECK(sys.is_reduced(w) == expect);
  }
  CHECK(sys.is_reduced(Word{}));
  CHECK(sys.is_reduced(Word{0, 1, 0}));
  CHECK_FALSE(sys.is_reduced(Word{0, 0}));
  CHECK_FALSE(sys.is_reduced(Word{0, 1, 0, 1}));
  CHECK_THROWS_AS(sys.is_reduced(Word{0, 3}), InputError);
  CHECK_THROWS_AS(sys.is_reduced(Word{-1}), InputError);
}

TEST_CASE("associative absorbing product agrees with the subword oracle") {
  auto a3 = CoxeterSystem::from_type('A', 3);
  CHECK(a3.demazure(Word{0, 0}) == a3.simple(0));
  CHECK(a3.demazure(Word{0, 1, 0, 1}) == a3.evaluate_word(Word{0, 1, 0}));
  std::mt19937 rng(67890);
  std::uniform_int_distribution<int> letter(0, 2), len(0, 9);
  for (int t = 0; t < 200; ++t) {
    Word w(static_cast<size_t>(len(rng)));
    for (int& x : w) x = letter(rng);
    CHECK(a3.demazure(w) == demazure_oracle(a3, w));
  }
  auto g2 = CoxeterSystem::from_type('G', 2);
  std::uniform_int_distribution<int> letter2(0, 1), len2(0, 10);
  for (int t = 0; t < 100; ++t) {
    Word w(static_cast<size_t>(len2(rng)));
    for (int& x : w) x = letter2(rng);
    CHECK(g2.demazure(w) == demazure_oracle(g2, w));
  }
}

TEST_CASE("canonical word is the lexicographically least reduced word") {
  for (const char* code : {"A3", "B2"}) {
    auto sys = CoxeterSystem::from_type(code[0], code[1] - '0');
    for (const auto& [w, d] : bfs_lengths(sys)) {
      auto words = sys.all_reduced_words(w);
      CHECK(!words.empty());
      CHECK(std::is_sorted(words.begin(), words.end()));
      CHECK(sys.canonical_word(w) == words.front());
      for (const Word& u : words) {
        CHECK(static_cast<int>(u.size()) == d);
        CHECK(sys.is_reduced(u));
        CHECK(sys.evaluate_word(u) == w);
      }
    }
  }
  // Word counts for the rank-3 symmetric-group longest element.
  auto a2 = CoxeterSystem::from_type('A', 2);
  CHECK(a2.all_reduced_words(a2.longest_element()).size() == 2);
}

TEST_CASE("order comparison matches the frozen rank-2 table") {
  auto sys = CoxeterSystem::from_type('A', 2);
  const GroupElement e = sys.identity();
  const GroupElement s1 = sys.simple(0), s2 = sys.simple(1);
  const GroupElement s12 = sys.evaluate_word(Word{0, 1});
  const GroupElement s21 = sys.evaluate_word(Word{1, 0});
  const GroupElement w0 = sys.longest_element();
  const std::vector<GroupElement> all{e, s1, s2, s12, s21, w0};
  // Row u, column w: is u <= w?
  const bool table[6][6] = {
      {true, true, true, true, true, true},     // e
      {false, true, false, true, true, true},   // s1
      {false, false, true, true, true, true},   // s2
      {false, false, false, true, false, true}, // s1 s2
      {false, false, false, false, true, true}, // s2 s1
      {false, false, false, false, false, true} // w0
  };
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      CHECK(sys.bruhat_leq(all[static_cast<size_t>(a)], all[static_cast<size_t>(b)]) ==
            table[a][b]);
}

TEST_CASE("order comparison agrees with the subword oracle and is word-independent") {
  auto sys = CoxeterSystem::from_type('A', 3);
  std::vector<GroupElement> elems;
  for (const auto& [w, d] : bfs_lengths(sys)) elems.push_back(w);
  REQUIRE(elems.size() == 24);
  for (const GroupElement& w : elems) {
    auto below = subword_products(sys, w);
    for (const GroupElement& u : elems) {
      const bool expect = below.count(u) > 0;
      CHECK(sys.bruhat_leq(u, w) == expect);
      for (const Word& wr : sys.all_reduced_words(w))
        CHECK(sys.bruhat_leq_via(u, wr) == expect);
    }
  }
}

TEST_CASE("interval enumeration is sorted, complete and deterministic") {
  auto sys = CoxeterSystem::from_type('A', 2);
  const GroupElement e = sys.identity();
  const GroupElement w0 = sys.longest_element();
  auto full = sys.bruhat_interval(e, w0);
  CHECK(full.size() == 6);
  for (size_t k = 1; k < full.size(); ++k)
    CHECK(sys.length(full[k - 1]) <= sys.length(full[k]));
  auto upper = sys.bruhat_interval(sys.simple(0), w0);
  CHECK(upper.size() == 4);
  CHECK(upper.front() == sys.simple(0));
  CHECK(upper.back() == w0);
  CHECK(sys.bruhat_interval(w0, w0).size() == 1);
  auto again = sys.bruhat_interval(e, w0);
  CHECK(std::equal(full.begin(), full.end(), again.begin(), again.end()));
}

TEST_CASE("group element value semantics") {
  auto sys = CoxeterSystem::from_type('A', 3);
  GroupElement a = sys.evaluate_word(Word{0, 1, 2});
  GroupElement b = sys.evaluate_word(Word{0, 1, 2});
  GroupElement c = sys.evaluate_word(Word{2, 1, 0});
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  CHECK(a != c);
  CHECK((a < c || c < a));
  CHECK_FALSE(a < b);
}

TEST_CASE("word rendering uses one-based comma-separated letters") {
  CHECK(coxcell::word_to_string(Word{0, 1, 0}) == "1,2,1");
  CHECK(coxcell::word_to_string(Word{}) == "");
  CHECK(coxcell::word_to_string(Word{9}) == "10");
}
