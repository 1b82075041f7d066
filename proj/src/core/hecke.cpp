// coxcell — word combinatorics on faces: deletion pairs, omittable pairs,
// minimal braid scripts, presence replays and prefix reflections.
// SPDX-License-Identifier: MIT
#include "core/hecke.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <set>
#include <string>

namespace coxcell {

namespace {

constexpr size_t kSearchCap = 2000000;  // node budget for arrangement searches

using Encoding = std::vector<std::pair<int, int>>;  // (kind, slot) per move

struct ArrangementKey {
  std::vector<int> letters;
  int marker;
  bool operator<(const ArrangementKey& o) const {
    if (letters != o.letters) return letters < o.letters;
    return marker < o.marker;
  }
};

int index_in_face(const Face& f, int pos) {
  const auto it = std::lower_bound(f.begin(), f.end(), pos);
  if (it == f.end() || *it != pos) throw InputError("pair endpoint is not in the face");
  return static_cast<int>(it - f.begin());
}

void check_face(const Word& w, const Face& f) {
  int prev = -1;
  for (int p : f) {
    if (p <= prev) throw InputError("face positions must be strictly increasing");
    if (p < 0 || p >= static_cast<int>(w.size()))
      throw InputError("face position " + std::to_string(p + 1) + " out of range");
    prev = p;
  }
}

}  // namespace

bool operator==(const Move& a, const Move& b) {
  return a.kind == b.kind && a.slot == b.slot && a.len == b.len;
}

Word face_word(const Word& w, const Face& f) {
  check_face(w, f);
  Word out;
  out.reserve(f.size());
  for (int p : f) out.push_back(w[static_cast<size_t>(p)]);
  return out;
}

std::vector<PosPair> deletion_pairs(const CoxeterSystem& sys, const Word& w, const Face& f) {
  check_face(w, f);
  sys.validate_word(w);
  std::vector<PosPair> out;
  const int n = static_cast<int>(f.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Word seg;
      for (int k = a; k <= b; ++k) seg.push_back(w[static_cast<size_t>(f[static_cast<size_t>(k)])]);
      if (sys.is_reduced(seg)) continue;
      Word drop_left(seg.begin() + 1, seg.end());
      Word drop_right(seg.begin(), seg.end() - 1);
      if (sys.is_reduced(drop_left) && sys.is_reduced(drop_right))
        out.emplace_back(f[static_cast<size_t>(a)], f[static_cast<size_t>(b)]);
    }
  std::sort(out.begin(), out.end(), [](const PosPair& x, const PosPair& y) {
    if (x.second != y.second) return x.second < y.second;
    return x.second - x.first < y.second - y.first;
  });
  return out;
}

bool commutation_joinable(const CoxeterSystem& sys, const Word& w, const Face& f,
                          PosPair pr) {
  check_face(w, f);
  sys.validate_word(w);
  const int l = pr.first, r = pr.second;
  if (l >= r) throw InputError("pair must satisfy left < right");
  if (w[static_cast<size_t>(l)] != w[static_cast<size_t>(r)]) return false;
  const int ia = index_in_face(f, l), ib = index_in_face(f, r);
  std::vector<int> seg;
  for (int k = ia; k < ib; ++k) seg.push_back(w[static_cast<size_t>(f[static_cast<size_t>(k)])]);
  const int L = static_cast<int>(seg.size());
  std::set<ArrangementKey> seen;
  std::deque<ArrangementKey> queue;
  ArrangementKey start{seg, 0};
  seen.insert(start);
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    ArrangementKey cur = std::move(queue.front());
    queue.pop_front();
    if (cur.marker == L - 1) return true;
    for (int k = 0; k + 1 < L; ++k) {
      if (sys.m(cur.letters[static_cast<size_t>(k)], cur.letters[static_cast<size_t>(k + 1)]) != 2)
        continue;
      ArrangementKey nxt = cur;
      std::swap(nxt.letters[static_cast<size_t>(k)], nxt.letters[static_cast<size_t>(k + 1)]);
      if (nxt.marker == k)
        nxt.marker = k + 1;
      else if (nxt.marker == k + 1)
        nxt.marker = k;
      if (seen.insert(nxt).second) {
        if (seen.size() > kSearchCap)
          throw InputError("commutation search exceeded the node budget");
        queue.push_back(std::move(nxt));
      }
    }
  }
  return false;
}

std::vector<PosPair> omittable_pairs(const CoxeterSystem& sys, const Word& w, const Face& f) {
  check_face(w, f);
  sys.validate_word(w);
  std::vector<PosPair> out;
  const int n = static_cast<int>(f.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const int l = f[static_cast<size_t>(a)], r = f[static_cast<size_t>(b)];
      if (w[static_cast<size_t>(l)] != w[static_cast<size_t>(r)]) continue;
      if (commutation_joinable(sys, w, f, {l, r})) out.emplace_back(l, r);
    }
  std::sort(out.begin(), out.end(), [](const PosPair& x, const PosPair& y) {
    if (x.second != y.second) return x.second < y.second;
    return x.second - x.first < y.second - y.first;
  });
  return out;
}

namespace {

// Shared uniform-cost search over (arrangement, marked slot) states.  Cost
// counts braid moves; ties are resolved by the lexicographically least
// sequence of (kind, slot) encodings, which makes the result deterministic
// and, because extending a path only appends encodings, keeps the priority
// monotone along search edges.
PairScript search_script(const CoxeterSystem& sys, const Word& w, const Face& f,
                         PosPair pr, bool allow_braids) {
  check_face(w, f);
  sys.validate_word(w);
  const int l = pr.first, r = pr.second;
  if (l >= r) throw InputError("pair must satisfy left < right");
  const int ia = index_in_face(f, l), ib = index_in_face(f, r);
  const int goal_letter = w[static_cast<size_t>(r)];
  std::vector<int> seg;
  for (int k = ia; k < ib; ++k) seg.push_back(w[static_cast<size_t>(f[static_cast<size_t>(k)])]);
  const int L = static_cast<int>(seg.size());

  struct Node {
    int cost;
    Encoding path;
    std::vector<int> letters;
    int marker;
  };
  auto worse = [](const Node& a, const Node& b) {
    if (a.cost != b.cost) return a.cost > b.cost;
    return a.path > b.path;
  };
  std::priority_queue<Node, std::vector<Node>, decltype(worse)> open(worse);
  std::set<ArrangementKey> closed;
  open.push(Node{0, {}, seg, 0});
  size_t pops = 0;
  while (!open.empty()) {
    Node cur = open.top();
    open.pop();
    if (!closed.insert(ArrangementKey{cur.letters, cur.marker}).second) continue;
    if (++pops > kSearchCap) throw InputError("script search exceeded the node budget");
    if (cur.marker == L - 1 && cur.letters[static_cast<size_t>(cur.marker)] == goal_letter) {
      PairScript out;
      out.pair = pr;
      out.seg_begin = ia;
      out.seg_end = ib;
      out.braid_count = cur.cost;
      for (const auto& [kind, slot] : cur.path) out.moves.push_back(Move{kind, ia + slot, 0});
      // Recover run lengths by replaying the path.
      SegmentState st{seg, 0};
      for (Move& mv : out.moves) {
        const int k = mv.slot - ia;
        if (mv.kind == 0) {
          mv.len = 2;
        } else {
          mv.len = sys.m(st.letters[static_cast<size_t>(k)],
                         st.letters[static_cast<size_t>(k + 1)]);
        }
        apply_move(sys, st, mv, ia);
      }
      return out;
    }
    // Commutation moves, slot ascending.
    for (int k = 0; k + 1 < L; ++k) {
      if (sys.m(cur.letters[static_cast<size_t>(k)], cur.letters[static_cast<size_t>(k + 1)]) != 2)
        continue;
      Node nxt = cur;
      std::swap(nxt.letters[static_cast<size_t>(k)], nxt.letters[static_cast<size_t>(k + 1)]);
      if (nxt.marker == k)
        nxt.marker = k + 1;
      else if (nxt.marker == k + 1)
        nxt.marker = k;
      if (closed.count(ArrangementKey{nxt.letters, nxt.marker})) continue;
      nxt.path.emplace_back(0, k);
      open.push(std::move(nxt));
    }
    if (!allow_braids) continue;
    // Braid-run flips, slot ascending.
    for (int k = 0; k + 1 < L; ++k) {
      const int a = cur.letters[static_cast<size_t>(k)];
      const int b = cur.letters[static_cast<size_t>(k + 1)];
      const int m = sys.m(a, b);
      if (m != 3 && m != 4 && m != 6) continue;
      if (k + m > L) continue;
      bool alternating = true;
      for (int t = 2; t < m; ++t)
        if (cur.letters[static_cast<size_t>(k + t)] != (t % 2 == 0 ? a : b)) {
          alternating = false;
          break;
        }
      if (!alternating) continue;
      if (cur.marker > k && cur.marker < k + m - 1) continue;  // marked slot inside run
      Node nxt = cur;
      for (int t = 0; t < m; ++t)
        nxt.letters[static_cast<size_t>(k + t)] = (t % 2 == 0) ? b : a;
      if (nxt.marker == k)
        nxt.marker = k + m - 1;
      else if (nxt.marker == k + m - 1)
        nxt.marker = k;
      if (closed.count(ArrangementKey{nxt.letters, nxt.marker})) continue;
      nxt.cost += 1;
      nxt.path.emplace_back(1, k);
      open.push(std::move(nxt));
    }
  }
  throw InputError("no script reaches the pair's right endpoint");
}

}  // namespace

PairScript min_long_braids(const CoxeterSystem& sys, const Word& w, const Face& f,
                           PosPair pr) {
  return search_script(sys, w, f, pr, true);
}

PairScript commutation_script(const CoxeterSystem& sys, const Word& w, const Face& f,
                              PosPair pr) {
  return search_script(sys, w, f, pr, false);
}

void apply_move(const CoxeterSystem& sys, SegmentState& st, const Move& mv, int seg_begin) {
  const int L = static_cast<int>(st.letters.size());
  const int k = mv.slot - seg_begin;
  if (mv.kind == 0) {
    if (k < 0 || k + 1 >= L) throw InputError("swap slot out of range");
    if (sys.m(st.letters[static_cast<size_t>(k)], st.letters[static_cast<size_t>(k + 1)]) != 2)
      throw InputError("swap of non-commuting letters");
    std::swap(st.letters[static_cast<size_t>(k)], st.letters[static_cast<size_t>(k + 1)]);
    if (st.marker == k)
      st.marker = k + 1;
    else if (st.marker == k + 1)
      st.marker = k;
    return;
  }
  if (mv.kind != 1) throw InputError("unknown move kind");
  if (k < 0 || k + mv.len > L) throw InputError("braid run out of range");
  if (mv.len < 3) throw InputError("braid run too short");
  const int a = st.letters[static_cast<size_t>(k)];
  const int b = st.letters[static_cast<size_t>(k + 1)];
  if (sys.m(a, b) != mv.len) throw InputError("braid run length does not match the bond");
  for (int t = 2; t < mv.len; ++t)
    if (st.letters[static_cast<size_t>(k + t)] != (t % 2 == 0 ? a : b))
      throw InputError("braid run is not alternating");
  if (st.marker > k && st.marker < k + mv.len - 1)
    throw InputError("marked slot strictly inside a braid run");
  for (int t = 0; t < mv.len; ++t)
    st.letters[static_cast<size_t>(k + t)] = (t % 2 == 0) ? b : a;
  if (st.marker == k)
    st.marker = k + mv.len - 1;
  else if (st.marker == k + mv.len - 1)
    st.marker = k;
}

bool sweep_replay(const std::vector<Move>& moves, int seg_begin, std::vector<char> present) {
  const int L = static_cast<int>(present.size());
  for (const Move& mv : moves) {
    const int k = mv.slot - seg_begin;
    if (mv.kind == 0) {
      if (k < 0 || k + 1 >= L) throw InputError("swap slot out of range");
      std::swap(present[static_cast<size_t>(k)], present[static_cast<size_t>(k + 1)]);
    } else {
      if (k < 0 || k + mv.len > L) throw InputError("braid run out of range");
      for (int t = 0; t < mv.len; ++t)
        if (!present[static_cast<size_t>(k + t)]) return false;
    }
  }
  return true;
}

std::vector<GroupElement> prefix_reflections(const CoxeterSystem& sys, const Word& w) {
  sys.validate_word(w);
  std::vector<GroupElement> out;
  out.reserve(w.size());
  GroupElement p = sys.identity();      // plain product of the processed prefix
  GroupElement p_inv = sys.identity();  // its inverse
  GroupElement d = sys.identity();      // absorbing product of the processed prefix
  for (size_t k = 0; k < w.size(); ++k) {
    const int i = w[k];
    if (!sys.right_descent(d, i)) {
      out.push_back(p.mul(sys.simple(i)).mul(p_inv));
      d = sys.mul_simple(d, i);
    } else {
      if (k == 0) throw InputError("absorbing product cannot stall on the first letter");
      // Scan k' = k-1 down to 0, growing both plain subword products by one
      // letter on the left each iteration.
      GroupElement lhs = sys.simple(w[k - 1]);  // product of letters k'..k-1
      GroupElement rhs = sys.simple(w[k]);      // product of letters k'+1..k
      bool found = false;
      for (size_t kp = k - 1;; --kp) {
        if (kp != k - 1) {
          lhs = sys.simple(w[kp]).mul(lhs);
          rhs = sys.simple(w[kp + 1]).mul(rhs);
        }
        if (lhs == rhs) {
          out.push_back(out[kp]);
          found = true;
          break;
        }
        if (kp == 0) break;
      }
      if (!found)
        throw InputError("no earlier prefix matches the stalled letter; unsupported word");
    }
    p = sys.mul_simple(p, i);
    p_inv = sys.simple(i).mul(p_inv);
  }
  return out;
}

}  // namespace coxcell
