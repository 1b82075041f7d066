// coxcell — collapse engine, replay checks, quotient order and JSON trace.
// SPDX-License-Identifier: MIT
#include "core/collapse.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace coxcell {

namespace {

using Mask = std::uint32_t;

constexpr int kMaxLetters = 12;  // the face complex is enumerated explicitly

Face mask_to_face(Mask m) {
  Face f;
  for (int p = 0; m >> p; ++p)
    if ((m >> p) & 1) f.push_back(p);
  return f;
}

Mask face_to_mask(const Face& f) {
  Mask m = 0;
  for (int p : f) m |= Mask{1} << p;
  return m;
}

int popcount(Mask m) { return __builtin_popcount(m); }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) {
    for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  // The smaller root index wins, which keeps representatives deterministic.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[static_cast<size_t>(b)] = a;
  }
};

// Cached per-face data; the letters of a face never change, so pairs and
// scripts are computed once.
struct FaceInfo {
  bool has_pair = false;
  PosPair pair{-1, -1};
  int braid_count = 0;
  int seg_begin = 0, seg_end = 0;
  std::vector<Move> moves;
};

// Union-find state shared by the collapse run and the verification replays.
struct State {
  UnionFind ident;  // identifications only; retirement status lives here
  UnionFind cls;    // identifications plus retirement merges
  std::vector<char> dead_root;  // indexed by face mask, meaningful at ident roots
  explicit State(size_t n) : ident(n), cls(n), dead_root(n, 0) {}
  bool dead(Mask f) { return dead_root[static_cast<size_t>(ident.find(static_cast<int>(f)))]; }
  void ident_unite(Mask a, Mask b) {
    const bool d = dead(a) || dead(b);
    ident.unite(static_cast<int>(a), static_cast<int>(b));
    if (d) dead_root[static_cast<size_t>(ident.find(static_cast<int>(a)))] = 1;
  }
  void kill(Mask f) { dead_root[static_cast<size_t>(ident.find(static_cast<int>(f)))] = 1; }
  // One swept face: identify the two shadows, absorb tau into the right
  // shadow, retire tau.
  void apply_sweep(Mask tau, int l, int r) {
    const Mask sigma = tau & ~(Mask{1} << l);
    const Mask sigma_prime = tau & ~(Mask{1} << r);
    ident_unite(sigma, sigma_prime);
    cls.unite(static_cast<int>(sigma), static_cast<int>(sigma_prime));
    cls.unite(static_cast<int>(tau), static_cast<int>(sigma_prime));
    kill(tau);
  }
};

FaceInfo compute_face_info(const CoxeterSystem& sys, const Word& w, CollapseMode mode,
                           Mask mask) {
  FaceInfo info;
  const Face f = mask_to_face(mask);
  const auto pairs = (mode == CollapseMode::Full) ? deletion_pairs(sys, w, f)
                                                  : omittable_pairs(sys, w, f);
  if (pairs.empty()) return info;
  info.has_pair = true;
  info.pair = pairs.front();
  const PairScript sc = (mode == CollapseMode::Full)
                            ? min_long_braids(sys, w, f, info.pair)
                            : commutation_script(sys, w, f, info.pair);
  info.braid_count = sc.braid_count;
  info.seg_begin = sc.seg_begin;
  info.seg_end = sc.seg_end;
  info.moves = sc.moves;
  return info;
}

void check_word_size(const Word& w) {
  if (static_cast<int>(w.size()) > kMaxLetters)
    throw InputError("expression length " + std::to_string(w.size()) + " exceeds the cap " +
                     std::to_string(kMaxLetters));
}

std::string face_label(const Face& f) {
  std::string s = "{";
  for (size_t k = 0; k < f.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(f[k] + 1);
  }
  return s + "}";
}

// Swept candidates of a step face, largest first, then by position list.
std::vector<Mask> sweep_candidates(Mask fmask, int l, int r) {
  const Mask fixed = (Mask{1} << l) | (Mask{1} << r);
  const Mask free = fmask & ~fixed;
  std::vector<Mask> taus;
  Mask sub = free;
  while (true) {
    taus.push_back(fixed | sub);
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
  std::sort(taus.begin(), taus.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) > popcount(b);
    return mask_to_face(a) < mask_to_face(b);
  });
  return taus;
}

std::vector<char> presence_flags(const Face& step_face, int seg_begin, int seg_end,
                                 Mask tau) {
  std::vector<char> flags;
  for (int k = seg_begin; k < seg_end; ++k)
    flags.push_back(static_cast<char>((tau >> step_face[static_cast<size_t>(k)]) & 1));
  return flags;
}

}  // namespace

CollapseTrace run_collapse(const CoxeterSystem& sys, const Word& w, CollapseMode mode) {
  sys.validate_word(w);
  check_word_size(w);
  const int n = static_cast<int>(w.size());
  const Mask full = (Mask{1} << n) - 1;
  State st(size_t{1} << n);
  std::vector<std::optional<FaceInfo>> cache(size_t{1} << n);
  auto info_of = [&](Mask m) -> const FaceInfo& {
    auto& slot = cache[static_cast<size_t>(m)];
    if (!slot) slot = compute_face_info(sys, w, mode, m);
    return *slot;
  };

  CollapseTrace trace;
  trace.word = w;
  trace.mode = mode;

  while (true) {
    // Candidate selection: min (right end, span, braid count, -dimension),
    // then lexicographically least support.
    bool found = false;
    Mask best = 0;
    std::tuple<int, int, int, int, Face> best_key;
    for (Mask m = 1; m <= full; ++m) {
      if (st.dead(m)) continue;
      const FaceInfo& info = info_of(m);
      if (!info.has_pair) continue;
      std::tuple<int, int, int, int, Face> key{info.pair.second,
                                               info.pair.second - info.pair.first,
                                               info.braid_count, -popcount(m),
                                               mask_to_face(m)};
      if (!found || key < best_key) {
        found = true;
        best = m;
        best_key = key;
      }
    }
    if (!found) break;

    const FaceInfo& info = info_of(best);
    CollapseStep step;
    step.face = mask_to_face(best);
    step.pair = info.pair;
    step.braid_count = info.braid_count;
    step.seg_begin = info.seg_begin;
    step.seg_end = info.seg_end;
    step.moves = info.moves;

    for (Mask tau : sweep_candidates(best, info.pair.first, info.pair.second)) {
      if (st.dead(tau)) continue;
      if (!sweep_replay(info.moves, info.seg_begin,
                        presence_flags(step.face, info.seg_begin, info.seg_end, tau)))
        continue;
      SweptFace sf;
      sf.tau = mask_to_face(tau);
      sf.sigma = mask_to_face(tau & ~(Mask{1} << info.pair.first));
      sf.sigma_prime = mask_to_face(tau & ~(Mask{1} << info.pair.second));
      sf.early = (tau != best) && info_of(tau).has_pair;
      step.swept.push_back(std::move(sf));
      st.apply_sweep(tau, info.pair.first, info.pair.second);
    }
    trace.steps.push_back(std::move(step));
  }

  for (Mask m = 1; m <= full; ++m)
    if (st.dead(m)) trace.collapsed.push_back(mask_to_face(m));
  std::sort(trace.collapsed.begin(), trace.collapsed.end());

  std::map<int, std::vector<Face>> grouped;
  for (Mask m = 1; m <= full; ++m)
    grouped[st.cls.find(static_cast<int>(m))].push_back(mask_to_face(m));
  for (auto& [root, faces] : grouped) {
    std::sort(faces.begin(), faces.end());
    trace.classes.push_back(std::move(faces));
  }
  std::sort(trace.classes.begin(), trace.classes.end(),
            [](const std::vector<Face>& a, const std::vector<Face>& b) {
              return a.front() < b.front();
            });
  return trace;
}

std::vector<std::string> check_termination(const CoxeterSystem& sys,
                                           const CollapseTrace& trace) {
  std::vector<std::string> out;
  const Word& w = trace.word;
  const int n = static_cast<int>(w.size());
  const Mask full = (Mask{1} << n) - 1;
  std::set<Face> dead(trace.collapsed.begin(), trace.collapsed.end());
  for (Mask m = 1; m <= full; ++m) {
    const Face f = mask_to_face(m);
    bool expect;
    if (trace.mode == CollapseMode::Full)
      expect = !sys.is_reduced(face_word(w, f));
    else
      expect = !omittable_pairs(sys, w, f).empty();
    const bool got = dead.count(f) > 0;
    if (expect && !got)
      out.push_back("face " + face_label(f) + " should be retired but survives");
    if (!expect && got)
      out.push_back("face " + face_label(f) + " was retired but should survive");
  }
  for (const auto& cls : trace.classes) {
    std::vector<const Face*> live;
    for (const Face& f : cls)
      if (!dead.count(f)) live.push_back(&f);
    if (live.empty()) {
      out.push_back("class of " + face_label(cls.front()) + " has no live member");
      continue;
    }
    const size_t rank = live.front()->size();
    for (const Face* f : live)
      if (f->size() != rank)
        out.push_back("class of " + face_label(cls.front()) +
                      " mixes live support sizes " + std::to_string(rank) + " and " +
                      std::to_string(f->size()));
    const GroupElement d0 = sys.demazure(face_word(w, cls.front()));
    for (const Face& f : cls)
      if (sys.demazure(face_word(w, f)) != d0)
        out.push_back("class of " + face_label(cls.front()) +
                      " has non-constant absorbing product at " + face_label(f));
  }
  return out;
}

std::vector<std::string> verify_conditions(const CoxeterSystem& sys,
                                           const CollapseTrace& trace) {
  std::vector<std::string> out;
  const Word& w = trace.word;
  sys.validate_word(w);
  check_word_size(w);
  const int n = static_cast<int>(w.size());
  const Mask full = (Mask{1} << n) - 1;
  State st(size_t{1} << n);

  for (size_t t = 0; t < trace.steps.size(); ++t) {
    const CollapseStep& step = trace.steps[t];
    const int l = step.pair.first, r = step.pair.second;
    const std::string where = "step " + std::to_string(t + 1);

    // Snapshot the cell order just before this step: cells are the classes
    // with live members; one cell is below another when some member face of
    // the first is contained in some member face of the second, closed
    // transitively.
    std::map<int, std::vector<Mask>> members;
    std::map<int, std::vector<Mask>> live_members;
    for (Mask m = 1; m <= full; ++m) {
      const int root = st.cls.find(static_cast<int>(m));
      members[root].push_back(m);
      if (!st.dead(m)) live_members[root].push_back(m);
    }
    std::vector<int> cells;  // roots of cells alive before the step
    for (const auto& [root, live] : live_members) cells.push_back(root);
    std::map<int, int> cell_index;
    for (size_t i = 0; i < cells.size(); ++i) cell_index[cells[i]] = static_cast<int>(i);
    const size_t nc = cells.size();
    std::vector<std::vector<char>> below(nc, std::vector<char>(nc, 0));
    for (size_t a = 0; a < nc; ++a) below[a][a] = 1;
    for (size_t a = 0; a < nc; ++a)
      for (size_t b = 0; b < nc; ++b) {
        if (a == b) continue;
        bool le = false;
        for (Mask x : members[cells[a]]) {
          for (Mask y : members[cells[b]])
            if ((x & y) == x && x != y) {
              le = true;
              break;
            }
          if (le) break;
        }
        if (le) below[a][b] = 1;
      }
    for (size_t k = 0; k < nc; ++k)
      for (size_t a = 0; a < nc; ++a)
        if (below[a][k])
          for (size_t b = 0; b < nc; ++b)
            if (below[k][b]) below[a][b] = 1;

    // Collect minimal upper bounds to re-check after the step applies.
    std::vector<std::pair<int, Face>> pending;  // (cell root, tau for message)

    for (const SweptFace& sf : step.swept) {
      const Mask tau = face_to_mask(sf.tau);
      const Mask sigma = face_to_mask(sf.sigma);
      const Mask sigma_prime = face_to_mask(sf.sigma_prime);
      const std::string at = where + ", swept " + face_label(sf.tau);
      bool endpoints_ok = true;
      if (sf.sigma.size() + 1 != sf.tau.size() || sf.sigma_prime.size() + 1 != sf.tau.size()) {
        out.push_back(at + ": identified faces are not one dimension down");
        endpoints_ok = false;
      }
      if (st.dead(tau)) {
        out.push_back(at + ": swept face is already retired");
        endpoints_ok = false;
      }
      if (st.dead(sigma)) {
        out.push_back(at + ": identified face " + face_label(sf.sigma) + " is retired");
        endpoints_ok = false;
      }
      if (st.dead(sigma_prime)) {
        out.push_back(at + ": identified face " + face_label(sf.sigma_prime) + " is retired");
        endpoints_ok = false;
      }
      if (endpoints_ok &&
          st.cls.find(static_cast<int>(sigma)) == st.cls.find(static_cast<int>(sigma_prime)))
        out.push_back(at + ": identified faces already share a cell");

      if (endpoints_ok) {
        const auto ia = cell_index.find(st.cls.find(static_cast<int>(sigma)));
        const auto ib = cell_index.find(st.cls.find(static_cast<int>(sigma_prime)));
        if (ia != cell_index.end() && ib != cell_index.end()) {
          std::vector<int> uppers;
          for (size_t u = 0; u < nc; ++u)
            if (below[static_cast<size_t>(ia->second)][u] &&
                below[static_cast<size_t>(ib->second)][u])
              uppers.push_back(static_cast<int>(u));
          for (int u : uppers) {
            bool minimal = true;
            for (int v : uppers)
              if (v != u && below[static_cast<size_t>(v)][static_cast<size_t>(u)])
                minimal = false;
            if (minimal && static_cast<size_t>(u) < nc)
              pending.emplace_back(cells[static_cast<size_t>(u)], sf.tau);
          }
        }
      }
      st.apply_sweep(tau, l, r);
    }

    for (const auto& [root, tau_face] : pending)
      for (Mask m : live_members[root])
        if (!st.dead(m))
          out.push_back(where + ": minimal upper bound cell containing " +
                        face_label(mask_to_face(m)) + " (above the pair of " +
                        face_label(tau_face) + ") survives the step");
  }
  return out;
}

GradedPoset quotient_poset(const CoxeterSystem& sys, const CollapseTrace& trace,
                           std::vector<GroupElement>* survivors) {
  const Word& w = trace.word;
  const int n = static_cast<int>(w.size());
  const Mask full = (Mask{1} << n) - 1;
  (void)full;
  std::set<Face> dead(trace.collapsed.begin(), trace.collapsed.end());

  struct Cell {
    std::vector<Face> members;
    std::vector<Face> live;
  };
  std::vector<Cell> cellv;
  for (const auto& cls : trace.classes) {
    Cell c;
    c.members = cls;
    for (const Face& f : cls)
      if (!dead.count(f)) c.live.push_back(f);
    if (c.live.empty())
      throw InputError("trace class of " + face_label(cls.front()) + " has no live member");
    const size_t rank = c.live.front().size();
    for (const Face& f : c.live)
      if (f.size() != rank)
        throw InputError("trace class of " + face_label(cls.front()) +
                         " mixes live support sizes");
    cellv.push_back(std::move(c));
  }
  std::sort(cellv.begin(), cellv.end(), [](const Cell& a, const Cell& b) {
    if (a.live.front().size() != b.live.front().size())
      return a.live.front().size() < b.live.front().size();
    return a.live.front() < b.live.front();
  });

  std::vector<std::string> labels{"e"};
  std::vector<int> ranks{0};
  for (const Cell& c : cellv) {
    labels.push_back(face_label(c.live.front()));
    ranks.push_back(static_cast<int>(c.live.front().size()));
  }
  std::vector<std::pair<int, int>> rels;
  for (size_t i = 0; i < cellv.size(); ++i) rels.emplace_back(0, static_cast<int>(i) + 1);
  for (size_t a = 0; a < cellv.size(); ++a)
    for (size_t b = 0; b < cellv.size(); ++b) {
      if (a == b) continue;
      bool le = false;
      for (const Face& x : cellv[a].members) {
        for (const Face& y : cellv[b].members) {
          const Mask mx = face_to_mask(x), my = face_to_mask(y);
          if (mx != my && (mx & my) == mx) {
            le = true;
            break;
          }
        }
        if (le) break;
      }
      if (le) rels.emplace_back(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
    }
  if (survivors) {
    survivors->clear();
    survivors->push_back(sys.identity());
    for (const Cell& c : cellv)
      survivors->push_back(sys.demazure(face_word(w, c.live.front())));
  }
  return GradedPoset(std::move(labels), std::move(ranks), rels);
}

std::vector<std::string> check_interval_isomorphism(const CoxeterSystem& sys,
                                                    const CollapseTrace& trace) {
  std::vector<std::string> out;
  std::vector<GroupElement> survivors;
  GradedPoset q = quotient_poset(sys, trace, &survivors);
  const GroupElement target = sys.demazure(trace.word);
  const auto interval = sys.bruhat_interval(sys.identity(), target);
  if (static_cast<int>(interval.size()) != q.size())
    out.push_back("quotient has " + std::to_string(q.size() - 1) +
                  " cells but the order ideal has " + std::to_string(interval.size() - 1) +
                  " elements above the identity");
  std::set<GroupElement> interval_set(interval.begin(), interval.end());
  std::set<GroupElement> seen;
  for (int i = 0; i < q.size(); ++i) {
    const GroupElement& g = survivors[static_cast<size_t>(i)];
    if (!seen.insert(g).second)
      out.push_back("survivor of " + q.label(i) + " duplicates another cell's element");
    if (!interval_set.count(g))
      out.push_back("survivor of " + q.label(i) + " lies outside the order ideal");
    if (sys.length(g) != q.rank(i))
      out.push_back("cell " + q.label(i) + " has rank " + std::to_string(q.rank(i)) +
                    " but its element has length " + std::to_string(sys.length(g)));
  }
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j) {
      const bool qo = q.leq(i, j);
      const bool bo = sys.bruhat_leq(survivors[static_cast<size_t>(i)],
                                     survivors[static_cast<size_t>(j)]);
      if (qo != bo)
        out.push_back("order disagrees between " + q.label(i) + " and " + q.label(j) +
                      ": quotient says " + (qo ? "below" : "not below") +
                      ", group order says " + (bo ? "below" : "not below"));
    }
  return out;
}

std::string trace_to_json(const CoxeterSystem& sys, const CollapseTrace& trace,
                          bool with_checks, bool with_quotient) {
  using nlohmann::json;
  auto face1 = [](const Face& f) {
    json a = json::array();
    for (int p : f) a.push_back(p + 1);
    return a;
  };
  json j;
  json letters = json::array();
  for (int x : trace.word) letters.push_back(x + 1);
  j["letters"] = letters;
  j["mode"] = trace.mode == CollapseMode::Full ? "full" : "commutation";
  json steps = json::array();
  for (const CollapseStep& st : trace.steps) {
    json s;
    s["face"] = face1(st.face);
    s["pair"] = json::array({st.pair.first + 1, st.pair.second + 1});
    s["braids"] = st.braid_count;
    json moves = json::array();
    for (const Move& mv : st.moves) {
      json m;
      m["kind"] = mv.kind == 0 ? "swap" : "braid";
      m["slot"] = mv.slot + 1;
      m["len"] = mv.len;
      moves.push_back(m);
    }
    s["moves"] = moves;
    json swept = json::array();
    for (const SweptFace& sf : st.swept) {
      json t;
      t["face"] = face1(sf.tau);
      t["identified"] = json::array({face1(sf.sigma), face1(sf.sigma_prime)});
      t["early"] = sf.early;
      swept.push_back(t);
    }
    s["swept"] = swept;
    steps.push_back(s);
  }
  j["steps"] = steps;
  json collapsed = json::array();
  for (const Face& f : trace.collapsed) collapsed.push_back(face1(f));
  j["collapsed"] = collapsed;
  json classes = json::array();
  for (const auto& cls : trace.classes) {
    json c = json::array();
    for (const Face& f : cls) c.push_back(face1(f));
    classes.push_back(c);
  }
  j["classes"] = classes;
  if (with_checks) {
    json checks;
    auto term = check_termination(sys, trace);
    auto cond = verify_conditions(sys, trace);
    checks["termination"] = term;
    checks["conditions"] = cond;
    checks["ok"] = term.empty() && cond.empty();
    j["checks"] = checks;
  }
  if (with_quotient) {
    std::vector<GroupElement> survivors;
    GradedPoset q = quotient_poset(sys, trace, &survivors);
    json qq;
    json qlabels = json::array(), qranks = json::array(), qcovers = json::array(),
         qsurv = json::array();
    for (int i = 0; i < q.size(); ++i) {
      qlabels.push_back(q.label(i));
      qranks.push_back(q.rank(i));
      const Word cw = sys.canonical_word(survivors[static_cast<size_t>(i)]);
      qsurv.push_back(cw.empty() ? std::string("e") : word_to_string(cw));
    }
    for (const auto& [u, v] : q.covers()) qcovers.push_back(json::array({u, v}));
    qq["labels"] = qlabels;
    qq["ranks"] = qranks;
    qq["covers"] = qcovers;
    qq["survivors"] = qsurv;
    if (trace.mode == CollapseMode::Full)
      qq["interval_check"] = check_interval_isomorphism(sys, trace);
    j["quotient"] = qq;
  }
  return j.dump(2);
}

}  // namespace coxcell
