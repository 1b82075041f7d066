// coxcell acceptance suite.  Runs nine end-to-end criteria, printing one
// PASS/FAIL line per criterion and exiting nonzero when any fails.
//
// Usage: acceptance --cli <path-to-coxcell-binary> --workdir <scratch-dir>
#include <array>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "core/collapse.hpp"
#include "core/coxeter.hpp"
#include "core/hecke.hpp"
#include "core/poset.hpp"
#include "core/tnn.hpp"

using namespace coxcell;
namespace fs = std::filesystem;

namespace {

std::string g_cli;
std::string g_workdir;

std::string plural(size_t n, const char* noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

// ------------------------------------------------------------------ 1 ----
// Every reduced word of every element of the rank-2 chain group collapses
// cleanly, and the quotient matches the group's order ideal.
std::string criterion_small_group() {
  const CoxeterSystem sys = CoxeterSystem::from_type('A', 2);
  const std::vector<GroupElement> elems =
      sys.bruhat_interval(sys.identity(), sys.longest_element());
  if (elems.size() != 6) return "expected 6 elements, found " + std::to_string(elems.size());
  size_t words = 0;
  for (const GroupElement& g : elems) {
    for (const Word& w : sys.all_reduced_words(g)) {
      ++words;
      const CollapseTrace tr = run_collapse(sys, w, CollapseMode::Full);
      for (const std::string& v : check_termination(sys, tr))
        return "termination on " + word_to_string(w) + ": " + v;
      for (const std::string& v : verify_conditions(sys, tr))
        return "step conditions on " + word_to_string(w) + ": " + v;
      for (const std::string& v : check_interval_isomorphism(sys, tr))
        return "quotient mismatch on " + word_to_string(w) + ": " + v;
      if (w == Word{0, 1, 0} && tr.classes.size() != 5)
        return "the length-3 alternating word should leave 5 classes, found " +
               std::to_string(tr.classes.size());
    }
  }
  if (words != 7) return "expected 7 reduced words in total, found " + std::to_string(words);
  return "";
}

// ------------------------------------------------------------------ 2 ----
// All sixteen reduced words of the rank-3 longest element collapse cleanly.
std::string criterion_longest_element() {
  const CoxeterSystem sys = CoxeterSystem::from_type('A', 3);
  const GroupElement w0 = sys.longest_element();
  if (sys.length(w0) != 6)
    return "longest element should have length 6, found " + std::to_string(sys.length(w0));
  const std::vector<Word> words = sys.all_reduced_words(w0);
  if (words.size() != 16)
    return "expected 16 reduced words, found " + std::to_string(words.size());
  for (const Word& w : words) {
    const CollapseTrace tr = run_collapse(sys, w, CollapseMode::Full);
    for (const std::string& v : check_termination(sys, tr))
      return "termination on " + word_to_string(w) + ": " + v;
    for (const std::string& v : verify_conditions(sys, tr))
      return "step conditions on " + word_to_string(w) + ": " + v;
    for (const std::string& v : check_interval_isomorphism(sys, tr))
      return "quotient mismatch on " + word_to_string(w) + ": " + v;
  }
  return "";
}

// ------------------------------------------------------------------ 3 ----
// Every order interval of two rank-3 groups passes the structural battery.
std::string criterion_interval_battery() {
  size_t intervals = 0;
  for (const char type : {'A', 'B'}) {
    const CoxeterSystem sys = CoxeterSystem::from_type(type, 3);
    const std::vector<GroupElement> elems =
        sys.bruhat_interval(sys.identity(), sys.longest_element());
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<char>> leq(static_cast<size_t>(n),
                                       std::vector<char>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        leq[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            sys.bruhat_leq(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(j)]);
    for (int lo = 0; lo < n; ++lo)
      for (int hi = 0; hi < n; ++hi) {
        if (!leq[static_cast<size_t>(lo)][static_cast<size_t>(hi)]) continue;
        std::vector<int> members;
        for (int z = 0; z < n; ++z)
          if (leq[static_cast<size_t>(lo)][static_cast<size_t>(z)] &&
              leq[static_cast<size_t>(z)][static_cast<size_t>(hi)])
            members.push_back(z);
        std::vector<std::string> labels;
        std::vector<int> ranks;
        const int base = sys.length(elems[static_cast<size_t>(lo)]);
        for (int z : members) {
          const Word cw = sys.canonical_word(elems[static_cast<size_t>(z)]);
          labels.push_back(cw.empty() ? "e" : word_to_string(cw));
          ranks.push_back(sys.length(elems[static_cast<size_t>(z)]) - base);
        }
        std::vector<std::pair<int, int>> rels;
        for (size_t a = 0; a < members.size(); ++a)
          for (size_t b = 0; b < members.size(); ++b)
            if (a != b && leq[static_cast<size_t>(members[a])][static_cast<size_t>(members[b])])
              rels.emplace_back(static_cast<int>(a), static_cast<int>(b));
        const GradedPoset p(labels, ranks, rels);
        const CwReport rep = check_cw_conditions(p);
        ++intervals;
        if (!rep.all_ok())
          return std::string(1, type) + "3 interval [" + labels.front() + ", " +
                 labels.back() + "]: " +
                 (rep.messages.empty() ? "battery failed" : rep.messages.front());
      }
  }
  if (intervals < 24 + 48) return "suspiciously few intervals: " + std::to_string(intervals);
  return " (" + plural(intervals, "interval") + ")";
}

// ------------------------------------------------------------------ 4 ----
// The battery localizes the defect of a pinched complex and clears a clean
// one.
std::string criterion_battery_detects_pinch() {
  const std::vector<std::string> labels{"v1",  "v2",  "v3",  "v4",  "v5",  "e12",
                                        "e13", "e23", "e34", "e35", "e45", "sigma"};
  const std::vector<int> ranks{0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 2};
  std::vector<std::pair<int, int>> rels{
      {0, 5}, {0, 6}, {1, 5}, {1, 7}, {2, 6}, {2, 7}, {2, 8},
      {2, 9}, {3, 8}, {3, 10}, {4, 9}, {4, 10}};
  for (int edge = 5; edge <= 10; ++edge) rels.emplace_back(edge, 11);
  const GradedPoset pinched(labels, ranks, rels);
  const CwReport rep = check_cw_conditions(pinched);
  if (rep.thin) return "the pinched complex was not flagged as non-thin";
  bool pointed = false;
  for (const std::string& msg : rep.messages)
    if (msg.find("[v3, sigma]") != std::string::npos) pointed = true;
  if (!pointed) return "no message names the pinch interval [v3, sigma]";

  // Clean reference: the Boolean lattice on three atoms.
  std::vector<std::string> blab;
  std::vector<int> brank;
  std::vector<std::pair<int, int>> brel;
  for (int s = 0; s < 8; ++s) {
    std::string name = "{";
    for (int b = 0; b < 3; ++b)
      if ((s >> b) & 1) name += std::to_string(b + 1) + ",";
    if (name.size() > 1) name.pop_back();
    blab.push_back(name + "}");
    brank.push_back(__builtin_popcount(static_cast<unsigned>(s)));
  }
  for (int s = 0; s < 8; ++s)
    for (int t = 0; t < 8; ++t)
      if (s != t && (s & t) == s) brel.emplace_back(s, t);
  const GradedPoset cube(blab, brank, brel);
  if (!check_cw_conditions(cube).all_ok())
    return "the Boolean lattice should pass the battery";
  return "";
}

// ------------------------------------------------------------------ 5 ----
// The generator relations hold as exact matrix identities, and the
// three-letter transform preserves the parameter sums.
std::string criterion_matrix_relations() {
  const std::array<Rational, 5> grid{Rational(1), Rational(1) / 2, Rational(2),
                                     Rational(1) / 3, Rational(3)};
  size_t checks = 0;
  for (const Rational& t1 : grid)
    for (const Rational& t2 : grid)
      for (const Rational& t3 : grid) {
        const auto tr = braid3_transform(t1, t2, t3);
        for (int i : {0, 1}) {
          const int j = 1 - i;
          const RationalMatrix lhs = chevalley_x(3, i, t1)
                                         .mul(chevalley_x(3, j, t2))
                                         .mul(chevalley_x(3, i, t3));
          const RationalMatrix rhs = chevalley_x(3, j, tr[0])
                                         .mul(chevalley_x(3, i, tr[1]))
                                         .mul(chevalley_x(3, j, tr[2]));
          ++checks;
          if (!(lhs == rhs))
            return "three-letter identity fails at (" + t1.str() + "," + t2.str() + "," +
                   t3.str() + ")";
        }
        if (tr[0] + tr[1] + tr[2] != t1 + t2 + t3 || tr[1] != t1 + t3 ||
            tr[0] + tr[2] != t2)
          return "sum preservation fails at (" + t1.str() + "," + t2.str() + "," +
                 t3.str() + ")";
        const auto back = braid3_transform(tr[0], tr[1], tr[2]);
        if (back[0] != t1 || back[1] != t2 || back[2] != t3)
          return "the transform is not an involution at (" + t1.str() + "," + t2.str() +
                 "," + t3.str() + ")";
      }
  for (const Rational& t1 : grid)
    for (const Rational& t2 : grid) {
      ++checks;
      if (!(chevalley_x(4, 0, t1).mul(chevalley_x(4, 2, t2)) ==
            chevalley_x(4, 2, t2).mul(chevalley_x(4, 0, t1))))
        return "distant letters fail to commute at (" + t1.str() + "," + t2.str() + ")";
      ++checks;
      if (!(chevalley_x(2, 0, t1).mul(chevalley_x(2, 0, t2)) ==
            chevalley_x(2, 0, t1 + t2)))
        return "equal letters fail to merge at (" + t1.str() + "," + t2.str() + ")";
    }
  return " (" + plural(checks, "identity check") + ")";
}

// ------------------------------------------------------------------ 6 ----
// Sampled parameter points transport across every collapse identification
// with the same matrix image, and each sampled face lands in the cell of
// its absorbing product.
std::string criterion_fiber_transport() {
  size_t faces = 0, words = 0;
  for (const int rank : {2, 3}) {
    const CoxeterSystem sys = CoxeterSystem::from_type('A', rank);
    const int n = rank + 1;
    for (const Word& w : sys.all_reduced_words(sys.longest_element())) {
      ++words;
      const CollapseTrace tr = run_collapse(sys, w, CollapseMode::Full);
      const std::vector<std::string> rep = verify_fibers(sys, w, tr);
      if (!rep.empty()) return "on " + word_to_string(w) + ": " + rep.front();
      const int d = static_cast<int>(w.size());
      for (int mask = 0; mask < (1 << d); ++mask) {
        ParamPoint p(static_cast<size_t>(d), Rational(0));
        Face f;
        for (int k = 0; k < d; ++k)
          if ((mask >> k) & 1) {
            p[static_cast<size_t>(k)] = 1;
            f.push_back(k);
          }
        ++faces;
        if (cell_of(sys, lusztig_eval(w, p, n)) != sys.demazure(face_word(w, f)))
          return "face of " + word_to_string(w) + " lands in the wrong cell";
      }
    }
  }
  return " (" + plural(words, "word") + ", " + plural(faces, "sampled face") + ")";
}

// ------------------------------------------------------------------ 7 ----
// The deletion-pair lemmas hold for every word of length one through six
// in two rank-3 systems.
std::string criterion_deletion_lemmas() {
  size_t checks = 0;
  for (const char type : {'A', 'B'}) {
    const CoxeterSystem sys = CoxeterSystem::from_type(type, 3);
    const int rank = sys.rank();
    for (int len = 1; len <= 6; ++len) {
      Word w(static_cast<size_t>(len), 0);
      while (true) {
        const std::string tag = std::string(1, type) + "3 word " + word_to_string(w);
        Face full(w.size());
        for (size_t k = 0; k < w.size(); ++k) full[k] = static_cast<int>(k);
        const bool red = sys.is_reduced(w);
        const std::vector<PosPair> dels = deletion_pairs(sys, w, full);
        auto drop = [&](const Word& src, size_t at) {
          Word out;
          for (size_t k = 0; k < src.size(); ++k)
            if (k != at) out.push_back(src[k]);
          return out;
        };

        if (red) {
          // Reduced deletions of a reduced word give pairwise distinct
          // elements.
          std::vector<GroupElement> seen;
          for (size_t u = 0; u < w.size(); ++u) {
            const Word d = drop(w, u);
            if (!sys.is_reduced(d)) continue;
            const GroupElement g = sys.evaluate_word(d);
            for (const GroupElement& h : seen)
              if (g == h) return tag + ": two reduced deletions coincide";
            seen.push_back(g);
            ++checks;
          }
          // A letter whose simple reflection matches the final prefix
          // reflection extends the word to one with the endpoint pair.
          const std::vector<GroupElement> refl = prefix_reflections(sys, w);
          for (int i0 = 0; i0 < rank; ++i0) {
            if (!(refl.back() == sys.simple(i0))) continue;
            Word f{i0};
            f.insert(f.end(), w.begin(), w.end());
            ++checks;
            if (sys.is_reduced(f)) return tag + ": extended word should not be reduced";
            if (!sys.is_reduced(drop(f, f.size() - 1)))
              return tag + ": extended word minus its last letter should be reduced";
          }
        } else {
          // Every letter whose deletion makes a non-reduced word reduced is
          // an endpoint of some deletion pair.
          for (size_t u = 0; u < w.size(); ++u) {
            if (!sys.is_reduced(drop(w, u))) continue;
            bool endpoint = false;
            for (const PosPair& pr : dels)
              if (pr.first == static_cast<int>(u) || pr.second == static_cast<int>(u))
                endpoint = true;
            ++checks;
            if (!endpoint) return tag + ": a reducing deletion is not a pair endpoint";
          }
        }

        if (w.size() >= 2) {
          // When dropping the first letter and dropping the last agree,
          // both agree with the whole word's absorbing product.
          const GroupElement dl = sys.demazure(drop(w, 0));
          const GroupElement dr = sys.demazure(drop(w, w.size() - 1));
          ++checks;
          if (dl == dr && !(sys.demazure(w) == dl))
            return tag + ": matching one-sided deletions disagree with the word";
        }

        for (const PosPair& pr : dels) {
          // Interior deletions of a pair's segment stay non-reduced.
          Word seg(w.begin() + pr.first, w.begin() + pr.second + 1);
          for (size_t u = 1; u + 1 < seg.size(); ++u) {
            ++checks;
            if (sys.is_reduced(drop(seg, u)))
              return tag + ": an interior deletion of a pair segment is reduced";
          }
          // An endpoint pair pins the absorbing product on three of the
          // four boundary deletions.
          if (pr.first == 0 && pr.second == len - 1 && len >= 2) {
            const GroupElement d0 = sys.demazure(w);
            ++checks;
            if (!(sys.demazure(drop(w, 0)) == d0) ||
                !(sys.demazure(drop(w, w.size() - 1)) == d0))
              return tag + ": endpoint deletions change the absorbing product";
            Word both(w.begin() + 1, w.end() - 1);
            if (sys.demazure(both) == d0)
              return tag + ": deleting both endpoints should drop the product";
          }
          // Chained pairs concatenate: (r,s) and (s,t) force [r..t] minus
          // the shared middle to be non-reduced.
          for (const PosPair& qr : dels) {
            if (qr.first != pr.second) continue;
            Word span;
            for (int k = pr.first; k <= qr.second; ++k)
              if (k != pr.second) span.push_back(w[static_cast<size_t>(k)]);
            ++checks;
            if (sys.is_reduced(span)) return tag + ": chained pairs leave a reduced span";
          }
        }

        // Next word in lexicographic order.
        int pos = len - 1;
        while (pos >= 0 && w[static_cast<size_t>(pos)] == rank - 1) {
          w[static_cast<size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++w[static_cast<size_t>(pos)];
      }
    }
  }
  return " (" + plural(checks, "check") + ")";
}

// ------------------------------------------------------------------ 8 ----
// Rewrite moves preserve the absorbing product, and the product is
// monotone along face containment.
std::string criterion_rewrites_and_monotonicity() {
  std::mt19937 rng(20260818u);
  size_t braid_checks = 0, nil_checks = 0, cover_checks = 0;
  const std::array<std::pair<char, int>, 3> types{{{'A', 3}, {'B', 3}, {'G', 2}}};
  const std::array<int, 3> counts{334, 333, 333};
  for (size_t ty = 0; ty < types.size(); ++ty) {
    const CoxeterSystem sys = CoxeterSystem::from_type(types[ty].first, types[ty].second);
    const std::vector<GroupElement> elems =
        sys.bruhat_interval(sys.identity(), sys.longest_element());
    std::map<GroupElement, int> index;
    for (size_t i = 0; i < elems.size(); ++i)
      index[elems[i]] = static_cast<int>(i);
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<char>> leq(static_cast<size_t>(n),
                                       std::vector<char>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        leq[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            sys.bruhat_leq(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(j)]);

    std::uniform_int_distribution<int> len_dist(1, 8);
    std::uniform_int_distribution<int> letter_dist(0, sys.rank() - 1);
    for (int trial = 0; trial < counts[ty]; ++trial) {
      const int len = len_dist(rng);
      Word w(static_cast<size_t>(len));
      for (int k = 0; k < len; ++k) w[static_cast<size_t>(k)] = letter_dist(rng);
      const std::string tag =
          sys.label() + " word " + word_to_string(w);
      const GroupElement delta = sys.demazure(w);

      // Braid moves: flip any alternating run of length m(a, b).
      for (int k = 0; k < len; ++k) {
        const int a = w[static_cast<size_t>(k)];
        for (int b = 0; b < sys.rank(); ++b) {
          if (b == a) continue;
          const int m = sys.m(a, b);
          if (k + m > len) continue;
          bool alternating = true;
          for (int q = 0; q < m; ++q)
            if (w[static_cast<size_t>(k + q)] != (q % 2 == 0 ? a : b)) alternating = false;
          if (!alternating) continue;
          Word flipped = w;
          for (int q = 0; q < m; ++q)
            flipped[static_cast<size_t>(k + q)] = (q % 2 == 0 ? b : a);
          ++braid_checks;
          if (!(sys.demazure(flipped) == delta))
            return tag + ": a braid flip changed the absorbing product";
        }
      }
      // Nil moves: drop one of two equal adjacent letters.
      for (int k = 0; k + 1 < len; ++k) {
        if (w[static_cast<size_t>(k)] != w[static_cast<size_t>(k + 1)]) continue;
        Word dropped;
        for (int q = 0; q < len; ++q)
          if (q != k) dropped.push_back(w[static_cast<size_t>(q)]);
        ++nil_checks;
        if (!(sys.demazure(dropped) == delta))
          return tag + ": a nil move changed the absorbing product";
      }
      // Monotonicity along face containment: for every face and every
      // deleted position, the smaller face's product stays below.
      std::vector<int> idx(static_cast<size_t>(1) << len);
      for (int mask = 0; mask < (1 << len); ++mask) {
        Word fw;
        for (int k = 0; k < len; ++k)
          if ((mask >> k) & 1) fw.push_back(w[static_cast<size_t>(k)]);
        idx[static_cast<size_t>(mask)] = index.at(sys.demazure(fw));
      }
      for (int mask = 1; mask < (1 << len); ++mask)
        for (int k = 0; k < len; ++k) {
          if (!((mask >> k) & 1)) continue;
          ++cover_checks;
          if (!leq[static_cast<size_t>(idx[static_cast<size_t>(mask & ~(1 << k))])]
                  [static_cast<size_t>(idx[static_cast<size_t>(mask)])])
            return tag + ": dropping a position broke monotonicity";
        }
    }
  }
  return " (" + plural(braid_checks, "braid flip") + ", " + plural(nil_checks, "nil move") +
         ", " + plural(cover_checks, "containment check") + ")";
}

// ------------------------------------------------------------------ 9 ----
// The command line produces byte-identical output across repeated runs.
std::string criterion_cli_determinism() {
  const fs::path work(g_workdir);
  fs::create_directories(work);
  const fs::path matrix_file = work / "g2_matrix.txt";
  {
    std::ofstream f(matrix_file, std::ios::binary);
    f << "2\n1 6\n6 1\n";
  }

  struct Invocation {
    std::string name;
    std::string args;          // {DIR} expands to the run directory
    bool expect_stdout = true;
  };
  const std::vector<Invocation> calls{
      {"build_file", "build --coxeter-file \"" + matrix_file.string() + "\""},
      {"word", "word --type A --rank 2 --word 1,2,1,2"},
      {"hecke", "hecke --type A --rank 3 --word 1,2,1,3,2,3"},
      {"collapse_full", "collapse --type A --rank 2 --word 1,2,1 --verify --quotient"},
      {"collapse_comm",
       "collapse --type A --rank 2 --word 1,2,1,2 --mode commutation --quotient "
       "--out \"{DIR}/trace.json\"",
       false},
      {"collapse_b2", "collapse --type B --rank 2 --word 1,2,1,2 --verify"},
      {"poset", "poset --type B --rank 2 --upper 1,2,1,2 --check --dot \"{DIR}/hasse.dot\""},
      {"tnn_eval", "tnn --type A --rank 2 --word 1,2,1 --params 1,1/2,3 --minors --cell"},
      {"tnn_fibers", "tnn --type A --rank 3 --word 1,2,1,3,2,3 --fibers"},
  };

  auto substitute = [](std::string s, const std::string& dir) {
    size_t at;
    while ((at = s.find("{DIR}")) != std::string::npos) s.replace(at, 5, dir);
    return s;
  };
  auto slurp = [](const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  };

  for (const std::string run : {"run1", "run2"}) {
    const fs::path dir = work / run;
    fs::remove_all(dir);
    fs::create_directories(dir);
    for (const Invocation& call : calls) {
      const std::string cmd = "\"" + g_cli + "\" " + substitute(call.args, dir.string()) +
                              " > \"" + (dir / (call.name + ".out")).string() + "\" 2> \"" +
                              (dir / (call.name + ".err")).string() + "\"";
      const int status = std::system(cmd.c_str());
      const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
      if (code != 0)
        return call.name + " exited with " + std::to_string(code) + " in " + run;
    }
  }

  size_t compared = 0;
  for (const Invocation& call : calls) {
    std::vector<std::string> names{call.name + ".out", call.name + ".err"};
    if (call.name == "collapse_comm") names.push_back("trace.json");
    if (call.name == "poset") names.push_back("hasse.dot");
    for (const std::string& f : names) {
      const std::string a = slurp(work / "run1" / f);
      const std::string b = slurp(work / "run2" / f);
      if (a != b) return f + " differs between runs";
      ++compared;
    }
    const std::string err = slurp(work / "run1" / (call.name + ".err"));
    if (!err.empty()) return call.name + " wrote to stderr: " + err;
    const std::string out = slurp(work / "run1" / (call.name + ".out"));
    if (call.expect_stdout && out.empty()) return call.name + " produced no output";
    if (!call.expect_stdout && !out.empty())
      return call.name + " should print nothing when writing to a file";
  }
  return " (" + plural(compared, "file") + " byte-compared)";
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--cli")
      g_cli = argv[i + 1];
    else if (flag == "--workdir")
      g_workdir = argv[i + 1];
  }
  if (g_cli.empty() || g_workdir.empty()) {
    std::cerr << "usage: acceptance --cli <coxcell-binary> --workdir <scratch-dir>\n";
    return 2;
  }

  struct Criterion {
    std::string name;
    std::function<std::string()> run;
    double limit_seconds;
  };
  const std::vector<Criterion> criteria{
      {"small group: every reduced word collapses to the group interval",
       criterion_small_group, 1.0},
      {"rank-3 longest element: all sixteen reduced words collapse cleanly",
       criterion_longest_element, 60.0},
      {"every order interval in two rank-3 groups passes the structural battery",
       criterion_interval_battery, 60.0},
      {"the battery pinpoints a pinched complex and clears the Boolean lattice",
       criterion_battery_detects_pinch, 60.0},
      {"generator relations hold as exact matrix identities",
       criterion_matrix_relations, 60.0},
      {"sampled fibers transport across every collapse identification",
       criterion_fiber_transport, 300.0},
      {"deletion-pair lemmas hold for all short words in two rank-3 systems",
       criterion_deletion_lemmas, 120.0},
      {"rewrite moves preserve the absorbing product and supports stay monotone",
       criterion_rewrites_and_monotonicity, 120.0},
      {"the command line is byte-deterministic across repeated runs",
       criterion_cli_determinism, 120.0},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool extra = !detail.empty() && detail[0] == ' ';
    bool ok = detail.empty() || extra;
    std::string note = extra ? detail : "";
    if (ok && secs > c.limit_seconds) {
      ok = false;
      detail = "exceeded the " + std::to_string(static_cast<int>(c.limit_seconds)) +
               "s budget";
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    if (ok)
      line << "PASS: " << c.name << note << " [" << secs << "s]";
    else
      line << "FAIL: " << c.name << " — " << detail << " [" << secs << "s]";
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
  }
  std::cout << (failures == 0 ? "acceptance: all 9 criteria passed"
                              : "acceptance: " + std::to_string(failures) + " of 9 failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
