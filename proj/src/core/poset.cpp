// coxcell — finite graded poset implementation.
// SPDX-License-Identifier: MIT
#include "core/poset.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace coxcell {

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

GradedPoset::GradedPoset(std::vector<std::string> labels, std::vector<int> ranks,
                         const std::vector<std::pair<int, int>>& relations)
    : labels_(std::move(labels)), ranks_(std::move(ranks)) {
  const int n = static_cast<int>(labels_.size());
  if (static_cast<int>(ranks_.size()) != n)
    throw InputError("poset labels and ranks must have equal length");
  const size_t words = (static_cast<size_t>(n) + 63) / 64;
  up_.assign(static_cast<size_t>(n), std::vector<std::uint64_t>(words, 0));
  for (int v = 0; v < n; ++v)
    up_[static_cast<size_t>(v)][static_cast<size_t>(v) / 64] |= 1ull << (v % 64);
  std::vector<std::vector<int>> succ(static_cast<size_t>(n));
  for (const auto& [u, v] : relations) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw InputError("poset relation out of range");
    if (u == v) throw InputError("poset relation must be strict");
    succ[static_cast<size_t>(u)].push_back(v);
  }
  // Propagate reachability to a fixed point (n is small everywhere we are
  // used, so the quadratic sweep is fine and deterministic).
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < n; ++u)
      for (int v : succ[static_cast<size_t>(u)])
        for (size_t k = 0; k < words; ++k) {
          const std::uint64_t add =
              up_[static_cast<size_t>(v)][k] & ~up_[static_cast<size_t>(u)][k];
          if (add) {
            up_[static_cast<size_t>(u)][k] |= add;
            changed = true;
          }
        }
  }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && leq(u, v) && leq(v, u))
        throw InputError("poset relations contain a cycle through '" +
                         labels_[static_cast<size_t>(u)] + "'");
  // Covering relation: u < v with nothing strictly between.
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (!less(u, v)) continue;
      bool cover = true;
      for (int z = 0; z < n && cover; ++z)
        if (z != u && z != v && less(u, z) && less(z, v)) cover = false;
      if (cover) covers_.emplace_back(u, v);
    }
  std::sort(covers_.begin(), covers_.end());
}

bool GradedPoset::leq(int u, int v) const {
  return (up_[static_cast<size_t>(u)][static_cast<size_t>(v) / 64] >> (v % 64)) & 1;
}

std::int64_t GradedPoset::mobius(int u, int v) const {
  if (!leq(u, v)) return 0;
  if (u == v) return 1;
  const auto key = std::make_pair(u, v);
  const auto it = mobius_memo_.find(key);
  if (it != mobius_memo_.end()) return it->second;
  std::int64_t sum = 0;
  for (int z = 0; z < size(); ++z)
    if (leq(u, z) && less(z, v)) sum += mobius(u, z);
  const std::int64_t value = -sum;
  mobius_memo_[key] = value;
  return value;
}

std::string GradedPoset::to_dot() const {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n  node [shape=box];\n";
  std::vector<int> order(static_cast<size_t>(size()));
  for (int v = 0; v < size(); ++v) order[static_cast<size_t>(v)] = v;
  std::stable_sort(order.begin(), order.end(),
                   [this](int a, int b) { return rank(a) < rank(b); });
  size_t i = 0;
  while (i < order.size()) {
    size_t j = i;
    out << "  { rank=same;";
    while (j < order.size() && rank(order[j]) == rank(order[i])) {
      out << " n" << order[j] << " [label=\"" << dot_escape(label(order[j])) << "\"];";
      ++j;
    }
    out << " }\n";
    i = j;
  }
  for (const auto& [u, v] : covers_) out << "  n" << u << " -> n" << v << ";\n";
  out << "}\n";
  return out.str();
}

CwReport check_cw_conditions(const GradedPoset& p) {
  CwReport rep;
  const int n = p.size();
  for (const auto& [u, v] : p.covers())
    if (p.rank(v) != p.rank(u) + 1) {
      rep.graded_by_covers = false;
      rep.messages.push_back("cover " + p.label(u) + " -> " + p.label(v) +
                             " changes rank by " + std::to_string(p.rank(v) - p.rank(u)));
    }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (!p.leq(u, v)) continue;
      const int gap = p.rank(v) - p.rank(u);
      if (gap == 2) {
        std::vector<int> interval;
        for (int z = 0; z < n; ++z)
          if (p.leq(u, z) && p.leq(z, v)) interval.push_back(z);
        if (interval.size() != 4) {
          rep.thin = false;
          std::string members;
          for (int z : interval) {
            if (!members.empty()) members += ", ";
            members += p.label(z);
          }
          rep.messages.push_back("interval [" + p.label(u) + ", " + p.label(v) + "] has " +
                                 std::to_string(interval.size()) + " elements: {" +
                                 members + "}");
        }
      }
      const std::int64_t mu = p.mobius(u, v);
      const std::int64_t expect = (gap % 2 == 0) ? 1 : -1;
      if (mu != expect) {
        rep.eulerian = false;
        rep.messages.push_back("mobius(" + p.label(u) + ", " + p.label(v) + ") = " +
                               std::to_string(mu) + ", expected " + std::to_string(expect));
      }
      if (gap > 2) {
        std::vector<int> open;
        for (int z = 0; z < n; ++z)
          if (z != u && z != v && p.leq(u, z) && p.leq(z, v)) open.push_back(z);
        bool connected = !open.empty();
        if (connected) {
          std::vector<int> comp(open.size());
          for (size_t k = 0; k < open.size(); ++k) comp[k] = static_cast<int>(k);
          std::function<int(int)> find = [&](int x) {
            while (comp[static_cast<size_t>(x)] != x) {
              comp[static_cast<size_t>(x)] = comp[static_cast<size_t>(comp[static_cast<size_t>(x)])];
              x = comp[static_cast<size_t>(x)];
            }
            return x;
          };
          for (size_t a = 0; a < open.size(); ++a)
            for (size_t b = a + 1; b < open.size(); ++b)
              if (p.leq(open[a], open[b]) || p.leq(open[b], open[a])) {
                const int ra = find(static_cast<int>(a)), rb = find(static_cast<int>(b));
                if (ra != rb) comp[static_cast<size_t>(ra)] = rb;
              }
          const int root = find(0);
          for (size_t k = 1; k < open.size() && connected; ++k)
            if (find(static_cast<int>(k)) != root) connected = false;
        }
        if (!connected) {
          rep.intervals_connected = false;
          rep.messages.push_back("open interval (" + p.label(u) + ", " + p.label(v) +
                                 ") is not connected");
        }
      }
    }
  return rep;
}

}  // namespace coxcell
