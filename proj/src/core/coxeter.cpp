// coxcell — Coxeter group elements in the integer reflection representation.
// SPDX-License-Identifier: MIT
#include "core/coxeter.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace coxcell {

namespace {

// Finiteness guard for root generation; every finite type of rank <= 8 has
// at most 240 positive roots, so this cap only trips for infinite systems.
constexpr size_t kRootCap = 4096;

constexpr size_t kIntervalWordCap = 16;  // subword enumeration guard

}  // namespace

// ------------------------------------------------------------ elements ---

GroupElement GroupElement::identity(int n) {
  GroupElement g(n);
  for (int i = 0; i < n; ++i) g.at(i, i) = 1;
  return g;
}

GroupElement GroupElement::mul(const GroupElement& o) const {
  GroupElement r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const std::int64_t a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < n_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

Root GroupElement::apply(const Root& v) const {
  Root r(static_cast<size_t>(n_), 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
  return r;
}

size_t GroupElement::hash() const {
  size_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(n_));
  for (std::int64_t v : m_) mix(static_cast<std::uint64_t>(v));
  return h;
}

// -------------------------------------------------------------- systems ---

void CoxeterSystem::set_cartan_entry(int i, int j, int aij, int aji) {
  cart_[static_cast<size_t>(i) * rank_ + j] = aij;
  cart_[static_cast<size_t>(j) * rank_ + i] = aji;
}

void CoxeterSystem::build_from_coxeter(const std::vector<std::vector<int>>& m,
                                       std::string label) {
  const int n = static_cast<int>(m.size());
  if (n <= 0) throw InputError("rank must be positive");
  rank_ = n;
  label_ = std::move(label);
  cox_.assign(static_cast<size_t>(n) * n, 0);
  cart_.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[static_cast<size_t>(i)].size()) != n)
      throw InputError("Coxeter matrix is not square");
    for (int j = 0; j < n; ++j) {
      const int v = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (i == j) {
        if (v != 1) throw InputError("Coxeter matrix diagonal entries must be 1");
      } else {
        if (m[static_cast<size_t>(j)][static_cast<size_t>(i)] != v)
          throw InputError("Coxeter matrix must be symmetric");
        if (v != 2 && v != 3 && v != 4 && v != 6)
          throw InputError("non-crystallographic m=" + std::to_string(v) +
                           " unsupported (off-diagonal entries must be 2, 3, 4 or 6)");
      }
      cox_[static_cast<size_t>(i) * n + j] = v;
    }
  }
  // Default Cartan orientation for raw matrices: for i<j the entry a(i,j)
  // is -1 and a(j,i) carries the multiplicity (-1,-2,-3 for m=3,4,6).
  for (int i = 0; i < n; ++i) cart_[static_cast<size_t>(i) * n + i] = 2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      switch (this->m(i, j)) {
        case 2: set_cartan_entry(i, j, 0, 0); break;
        case 3: set_cartan_entry(i, j, -1, -1); break;
        case 4: set_cartan_entry(i, j, -1, -2); break;
        case 6: set_cartan_entry(i, j, -1, -3); break;
        default: break;
      }
    }
  simples_.clear();
  simples_.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    GroupElement s = GroupElement::identity(n);
    for (int j = 0; j < n; ++j) s.at(i, j) -= cartan(i, j);
    simples_.push_back(std::move(s));
  }
}

CoxeterSystem CoxeterSystem::from_matrix(const std::vector<std::vector<int>>& m) {
  CoxeterSystem sys;
  sys.build_from_coxeter(m, "matrix(" + std::to_string(m.size()) + ")");
  return sys;
}

CoxeterSystem CoxeterSystem::from_type(char type, int rank) {
  auto chain = [&](int n, int edge_m, int edge_pos) {
    std::vector<std::vector<int>> m(static_cast<size_t>(n),
                                    std::vector<int>(static_cast<size_t>(n), 2));
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    for (int i = 0; i + 1 < n; ++i) {
      const int v = (i == edge_pos) ? edge_m : 3;
      m[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = v;
      m[static_cast<size_t>(i + 1)][static_cast<size_t>(i)] = v;
    }
    return m;
  };
  CoxeterSystem sys;
  const std::string label = std::string(1, type) + std::to_string(rank);
  switch (type) {
    case 'A': {
      if (rank < 1) throw InputError("type A requires rank >= 1");
      sys.build_from_coxeter(chain(rank, 3, -1), label);
      return sys;
    }
    case 'B':
    case 'C': {
      if (rank < 2) throw InputError("type B/C requires rank >= 2");
      sys.build_from_coxeter(chain(rank, 4, rank - 2), label);
      // Bourbaki orientation: in B the last simple root is short, in C long.
      if (type == 'B')
        sys.set_cartan_entry(rank - 2, rank - 1, -2, -1);
      else
        sys.set_cartan_entry(rank - 2, rank - 1, -1, -2);
      // Rebuild reflection matrices with the adjusted Cartan entries.
      for (int i = 0; i < rank; ++i) {
        GroupElement s = GroupElement::identity(rank);
        for (int j = 0; j < rank; ++j) s.at(i, j) -= sys.cartan(i, j);
        sys.simples_[static_cast<size_t>(i)] = std::move(s);
      }
      return sys;
    }
    case 'D': {
      if (rank < 4) throw InputError("type D requires rank >= 4");
      auto m = chain(rank - 1, 3, -1);
      for (auto& row : m) row.push_back(2);
      m.emplace_back(static_cast<size_t>(rank), 2);
      m.back()[static_cast<size_t>(rank - 1)] = 1;
      m.back()[static_cast<size_t>(rank - 3)] = 3;
      m[static_cast<size_t>(rank - 3)][static_cast<size_t>(rank - 1)] = 3;
      sys.build_from_coxeter(m, label);
      return sys;
    }
    case 'E': {
      if (rank < 6 || rank > 8) throw InputError("type E requires rank 6, 7 or 8");
      std::vector<std::vector<int>> m(static_cast<size_t>(rank),
                                      std::vector<int>(static_cast<size_t>(rank), 2));
      for (int i = 0; i < rank; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
      auto link = [&m](int a, int b) {
        m[static_cast<size_t>(a)][static_cast<size_t>(b)] = 3;
        m[static_cast<size_t>(b)][static_cast<size_t>(a)] = 3;
      };
      link(0, 2);
      link(1, 3);
      link(2, 3);
      for (int i = 3; i + 1 < rank; ++i) link(i, i + 1);
      sys.build_from_coxeter(m, label);
      return sys;
    }
    case 'F': {
      if (rank != 4) throw InputError("type F requires rank 4");
      sys.build_from_coxeter(chain(4, 4, 1), label);
      sys.set_cartan_entry(1, 2, -2, -1);
      for (int i = 0; i < 4; ++i) {
        GroupElement s = GroupElement::identity(4);
        for (int j = 0; j < 4; ++j) s.at(i, j) -= sys.cartan(i, j);
        sys.simples_[static_cast<size_t>(i)] = std::move(s);
      }
      return sys;
    }
    case 'G': {
      if (rank != 2) throw InputError("type G requires rank 2");
      sys.build_from_coxeter(chain(2, 6, 0), label);
      return sys;
    }
    default:
      throw InputError(std::string("unknown Coxeter type '") + type +
                       "' (expected one of A,B,C,D,E,F,G)");
  }
}

CoxeterSystem CoxeterSystem::from_text(const std::string& text) {
  std::istringstream in(text);
  long long n = 0;
  if (!(in >> n) || n <= 0 || n > 64)
    throw InputError("Coxeter matrix file: first token must be the rank (1..64)");
  std::vector<std::vector<int>> m(static_cast<size_t>(n),
                                  std::vector<int>(static_cast<size_t>(n), 0));
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j) {
      long long v = 0;
      if (!(in >> v))
        throw InputError("Coxeter matrix file: expected " + std::to_string(n * n) +
                         " entries after the rank");
      if (v < -1000000 || v > 1000000)
        throw InputError("Coxeter matrix file: entry out of range");
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int>(v);
    }
  long long extra = 0;
  if (in >> extra) throw InputError("Coxeter matrix file: trailing data after matrix");
  return from_matrix(m);
}

CoxeterSystem CoxeterSystem::from_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open Coxeter matrix file: " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return from_text(buf.str());
}

// ------------------------------------------------------------ group ops ---

GroupElement CoxeterSystem::mul_simple(const GroupElement& w, int i) const {
  // (w * s_i) column j = column j of w  -  a(i,j) * column i of w.
  GroupElement r = w;
  for (int j = 0; j < rank_; ++j) {
    const int a = cartan(i, j);
    if (a == 0 && j != i) continue;
    for (int row = 0; row < rank_; ++row)
      r.at(row, j) = w.at(row, j) - a * w.at(row, i);
  }
  return r;
}

namespace {
// Sign of a root coordinate vector; roots are sign-coherent.
bool is_negative_rootvec(const Root& v) {
  bool has_neg = false;
  for (std::int64_t x : v) {
    if (x > 0) return false;
    if (x < 0) has_neg = true;
  }
  return has_neg;
}
}  // namespace

bool CoxeterSystem::right_descent(const GroupElement& w, int i) const {
  // w(alpha_i) is column i of w.
  bool has_neg = false;
  for (int row = 0; row < rank_; ++row) {
    const std::int64_t x = w.at(row, i);
    if (x > 0) return false;
    if (x < 0) has_neg = true;
  }
  return has_neg;
}

bool CoxeterSystem::left_descent(const GroupElement& w, int i) const {
  return length(simple(i).mul(w)) < length(w);
}

const std::vector<Root>& CoxeterSystem::positive_roots() const {
  if (!pos_roots_.empty()) return pos_roots_;
  std::set<Root> seen;
  std::vector<Root> work;
  for (int i = 0; i < rank_; ++i) {
    Root e(static_cast<size_t>(rank_), 0);
    e[static_cast<size_t>(i)] = 1;
    seen.insert(e);
    work.push_back(std::move(e));
  }
  while (!work.empty()) {
    Root r = std::move(work.back());
    work.pop_back();
    for (int j = 0; j < rank_; ++j) {
      Root img = simples_[static_cast<size_t>(j)].apply(r);
      if (seen.insert(img).second) {
        if (seen.size() > kRootCap)
          throw InputError(
              "root system exceeds the finiteness cap; "
              "infinite Coxeter groups are unsupported");
        work.push_back(std::move(img));
      }
    }
  }
  for (const Root& r : seen)
    if (!is_negative_rootvec(r)) pos_roots_.push_back(r);
  return pos_roots_;
}

int CoxeterSystem::length(const GroupElement& w) const {
  int inv = 0;
  for (const Root& r : positive_roots())
    if (is_negative_rootvec(w.apply(r))) ++inv;
  return inv;
}

void CoxeterSystem::validate_word(const Word& w) const {
  for (int letter : w)
    if (letter < 0 || letter >= rank_)
      throw InputError("word letter " + std::to_string(letter + 1) +
                       " out of range 1.." + std::to_string(rank_));
}

GroupElement CoxeterSystem::evaluate_word(const Word& w) const {
  validate_word(w);
  GroupElement g = identity();
  for (int letter : w) g = mul_simple(g, letter);
  return g;
}

bool CoxeterSystem::is_reduced(const Word& w) const {
  validate_word(w);
  GroupElement g = identity();
  for (int letter : w) {
    if (right_descent(g, letter)) return false;  // prefix sends the next simple root negative
    g = mul_simple(g, letter);
  }
  return true;
}

GroupElement CoxeterSystem::demazure(const Word& w) const {
  validate_word(w);
  GroupElement g = identity();
  for (int letter : w)
    if (!right_descent(g, letter)) g = mul_simple(g, letter);
  return g;
}

Word CoxeterSystem::canonical_word(const GroupElement& w) const {
  Word out;
  GroupElement cur = w;
  int len = length(cur);
  while (len > 0) {
    bool moved = false;
    for (int i = 0; i < rank_; ++i) {
      GroupElement cand = simple(i).mul(cur);
      const int cl = length(cand);
      if (cl < len) {
        out.push_back(i);
        cur = std::move(cand);
        len = cl;
        moved = true;
        break;
      }
    }
    if (!moved)
      throw InputError("element of positive length has no left descent (corrupt matrix?)");
  }
  return out;
}

std::vector<Word> CoxeterSystem::all_reduced_words(const GroupElement& w) const {
  if (length(w) == 0) return {Word{}};
  std::vector<Word> out;
  for (int i = 0; i < rank_; ++i) {
    if (!right_descent(w, i)) continue;
    for (Word u : all_reduced_words(mul_simple(w, i))) {
      u.push_back(i);
      out.push_back(std::move(u));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GroupElement CoxeterSystem::longest_element() const {
  const int total = static_cast<int>(positive_roots().size());
  GroupElement w = identity();
  int len = 0;
  while (len < total) {
    bool moved = false;
    for (int i = 0; i < rank_; ++i) {
      if (!right_descent(w, i)) {
        w = mul_simple(w, i);
        ++len;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return w;
}

bool CoxeterSystem::bruhat_leq_via(const GroupElement& u, const Word& w_reduced) const {
  GroupElement v = u;
  for (size_t j = w_reduced.size(); j-- > 0;) {
    const int i = w_reduced[j];
    if (right_descent(v, i)) v = mul_simple(v, i);
  }
  return v == identity();
}

bool CoxeterSystem::bruhat_leq(const GroupElement& u, const GroupElement& w) const {
  return bruhat_leq_via(u, canonical_word(w));
}

std::vector<GroupElement> CoxeterSystem::bruhat_interval(const GroupElement& u,
                                                         const GroupElement& w) const {
  const Word wr = canonical_word(w);
  if (wr.size() > kIntervalWordCap)
    throw InputError("interval word length " + std::to_string(wr.size()) +
                     " exceeds the enumeration cap " + std::to_string(kIntervalWordCap));
  std::set<GroupElement> elems;
  const size_t nmask = size_t{1} << wr.size();
  for (size_t mask = 0; mask < nmask; ++mask) {
    GroupElement g = identity();
    for (size_t k = 0; k < wr.size(); ++k)
      if (mask & (size_t{1} << k)) g = mul_simple(g, wr[k]);
    elems.insert(std::move(g));
  }
  std::vector<GroupElement> out;
  for (const GroupElement& z : elems)
    if (bruhat_leq(u, z)) out.push_back(z);
  std::sort(out.begin(), out.end(), [this](const GroupElement& a, const GroupElement& b) {
    const int la = length(a), lb = length(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  return out;
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(w[k] + 1);
  }
  return s;
}

}  // namespace coxcell
