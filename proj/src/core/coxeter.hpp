// coxcell — Coxeter group elements in the integer reflection representation.
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxcell {

// Raised for malformed user input (bad word letters, invalid Coxeter data,
// out-of-scope requests). The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A word in the generators, letters 0-based in [0, rank).
using Word = std::vector<int>;

// Coordinates of a root in the simple-root basis.
using Root = std::vector<std::int64_t>;

// Group element as an integer matrix acting on simple-root coordinates
// (column j = image of the j-th simple root). Equality is matrix equality.
class GroupElement {
 public:
  GroupElement() : n_(0) {}
  static GroupElement identity(int n);

  int dim() const { return n_; }
  std::int64_t at(int r, int c) const { return m_[static_cast<size_t>(r) * n_ + c]; }
  std::int64_t& at(int r, int c) { return m_[static_cast<size_t>(r) * n_ + c]; }

  bool operator==(const GroupElement& o) const { return n_ == o.n_ && m_ == o.m_; }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  // Lexicographic order on (dim, entries); used for deterministic sorting.
  bool operator<(const GroupElement& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return m_ < o.m_;
  }

  GroupElement mul(const GroupElement& o) const;
  Root apply(const Root& v) const;

  size_t hash() const;

 private:
  explicit GroupElement(int n) : n_(n), m_(static_cast<size_t>(n) * n, 0) {}
  int n_;
  std::vector<std::int64_t> m_;
  friend class CoxeterSystem;
};

struct GroupElementHash {
  size_t operator()(const GroupElement& g) const { return g.hash(); }
};

// A finite crystallographic Coxeter system: Coxeter matrix with off-diagonal
// entries in {2,3,4,6} plus a compatible integer Cartan matrix.
class CoxeterSystem {
 public:
  // Named types A,B,C,D,E,F,G with the usual rank bounds.
  static CoxeterSystem from_type(char type, int rank);
  // From an explicit Coxeter matrix (m[i][i]=1, m[i][j] in {2,3,4,6}).
  static CoxeterSystem from_matrix(const std::vector<std::vector<int>>& m);
  // File format: first line is the rank n, then n lines of n integers m(i,j).
  static CoxeterSystem from_file(const std::string& path);
  static CoxeterSystem from_text(const std::string& text);  // same format as from_file

  int rank() const { return rank_; }
  // Coxeter matrix entry m(i,j), 0-based indices.
  int m(int i, int j) const { return cox_[static_cast<size_t>(i) * rank_ + j]; }
  // Integer Cartan matrix entry a(i,j), 0-based indices.
  int cartan(int i, int j) const { return cart_[static_cast<size_t>(i) * rank_ + j]; }
  const std::string& label() const { return label_; }

  GroupElement identity() const { return GroupElement::identity(rank_); }
  const GroupElement& simple(int i) const { return simples_[static_cast<size_t>(i)]; }

  // Right multiplication w * s_i.
  GroupElement mul_simple(const GroupElement& w, int i) const;
  // True iff l(w s_i) < l(w), i.e. w sends the i-th simple root negative.
  bool right_descent(const GroupElement& w, int i) const;
  // True iff l(s_i w) < l(w).
  bool left_descent(const GroupElement& w, int i) const;

  // All positive roots (computed once, cached). Throws InputError if the
  // root system exceeds the finiteness cap (the group is infinite or huge).
  const std::vector<Root>& positive_roots() const;
  // Inversion count: number of positive roots sent negative by w.
  int length(const GroupElement& w) const;

  // Validates letters and multiplies them out.
  GroupElement evaluate_word(const Word& w) const;
  // Linear-time reducedness test: a word is reduced iff no prefix sends the
  // next letter's simple root negative.
  bool is_reduced(const Word& w) const;

  // 0-Hecke (Demazure) product of the word: multiply by s_i when the length
  // rises, absorb the letter when it would fall.
  GroupElement demazure(const Word& w) const;

  // Lexicographically smallest reduced word for w.
  Word canonical_word(const GroupElement& w) const;
  // All reduced words of w, in lexicographic order.
  std::vector<Word> all_reduced_words(const GroupElement& w) const;
  // The longest element (exists: the root system is finite or we threw).
  GroupElement longest_element() const;

  // Bruhat order via the greedy subword scan over one fixed reduced word
  // of w (the canonical word); the result is independent of that choice.
  bool bruhat_leq(const GroupElement& u, const GroupElement& w) const;
  // As above but scanning the given reduced word of w.
  bool bruhat_leq_via(const GroupElement& u, const Word& w_reduced) const;
  // All z with u <= z <= w, sorted by (length, matrix entries).
  std::vector<GroupElement> bruhat_interval(const GroupElement& u,
                                            const GroupElement& w) const;

  void validate_word(const Word& w) const;

 private:
  CoxeterSystem() = default;
  void build_from_coxeter(const std::vector<std::vector<int>>& m,
                          std::string label);
  void set_cartan_entry(int i, int j, int aij, int aji);

  int rank_ = 0;
  std::vector<int> cox_;
  std::vector<int> cart_;
  std::vector<GroupElement> simples_;
  std::string label_;
  mutable std::vector<Root> pos_roots_;  // lazy cache
};

// Formats a word with 1-based letters, e.g. "1,2,1".
std::string word_to_string(const Word& w);

}  // namespace coxcell
