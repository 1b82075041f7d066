// coxcell — finite graded posets: reachability, Möbius function, covering
// relation, structural battery (gradedness, thinness, Euler condition,
// interval connectivity) and DOT export.
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "core/coxeter.hpp"  // InputError

namespace coxcell {

class GradedPoset {
 public:
  // Builds the poset generated by `relations` (pairs u < v of indices into
  // `labels`).  The transitive closure is computed; a cycle raises
  // InputError.  `ranks` is caller-supplied and is what the structural
  // checks test against.
  GradedPoset(std::vector<std::string> labels, std::vector<int> ranks,
              const std::vector<std::pair<int, int>>& relations);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int v) const { return labels_[static_cast<size_t>(v)]; }
  int rank(int v) const { return ranks_[static_cast<size_t>(v)]; }
  bool leq(int u, int v) const;         // reflexive-transitive order
  bool less(int u, int v) const { return u != v && leq(u, v); }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  std::int64_t mobius(int u, int v) const;  // 0 when u is not below v
  std::string to_dot() const;               // deterministic rank-layered digraph

 private:
  std::vector<std::string> labels_;
  std::vector<int> ranks_;
  std::vector<std::vector<std::uint64_t>> up_;  // row u: bitset of {v : u <= v}
  std::vector<std::pair<int, int>> covers_;
  mutable std::map<std::pair<int, int>, std::int64_t> mobius_memo_;
};

struct CwReport {
  bool graded_by_covers = true;   // every cover raises rank by exactly one
  bool thin = true;               // closed length-2 intervals have 4 elements
  bool eulerian = true;           // mobius(u,v) == (-1)^(rank(v)-rank(u))
  bool intervals_connected = true;  // open intervals of length > 2 connected
  std::vector<std::string> messages;
  bool all_ok() const { return graded_by_covers && thin && eulerian && intervals_connected; }
};

// Runs the structural battery.  These are the checkable order-theoretic
// requirements for a regular cell structure; shellability is out of scope
// and deliberately not attempted.
CwReport check_cw_conditions(const GradedPoset& p);

}  // namespace coxcell
