// coxcell — exact-rational matrix oracle: implementation.
// SPDX-License-Identifier: MIT
#include "core/tnn.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace coxcell {

namespace {

std::string face_label(const Face& f) {
  std::string s = "{";
  for (size_t k = 0; k < f.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(f[k] + 1);
  }
  return s + "}";
}

int rank_of(std::vector<std::vector<Rational>> rows) {
  const size_t nr = rows.size();
  const size_t nc = nr ? rows[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < nc && r < nr; ++c) {
    size_t pivot = r;
    while (pivot < nr && rows[pivot][c] == 0) ++pivot;
    if (pivot == nr) continue;
    std::swap(rows[r], rows[pivot]);
    for (size_t k = r + 1; k < nr; ++k) {
      if (rows[k][c] == 0) continue;
      const Rational factor = rows[k][c] / rows[r][c];
      for (size_t c2 = c; c2 < nc; ++c2) rows[k][c2] -= factor * rows[r][c2];
    }
    ++r;
  }
  return static_cast<int>(r);
}

Rational det_of(std::vector<std::vector<Rational>> rows) {
  const size_t n = rows.size();
  Rational det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t pivot = c;
    while (pivot < n && rows[pivot][c] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != c) {
      std::swap(rows[c], rows[pivot]);
      det = -det;
    }
    det *= rows[c][c];
    for (size_t k = c + 1; k < n; ++k) {
      if (rows[k][c] == 0) continue;
      const Rational factor = rows[k][c] / rows[c][c];
      for (size_t c2 = c; c2 < n; ++c2) rows[k][c2] -= factor * rows[c][c2];
    }
  }
  return det;
}

bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int p = k - 1; p >= 0; --p) {
    if (idx[static_cast<size_t>(p)] < n - (k - p)) {
      ++idx[static_cast<size_t>(p)];
      for (int q = p + 1; q < k; ++q)
        idx[static_cast<size_t>(q)] = idx[static_cast<size_t>(q - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_chain_system(const CoxeterSystem& sys) {
  for (int i = 0; i < sys.rank(); ++i)
    for (int j = i + 1; j < sys.rank(); ++j)
      if (sys.m(i, j) != (j == i + 1 ? 3 : 2)) return false;
  return true;
}

Face support_of(const ParamPoint& p) {
  Face f;
  for (size_t k = 0; k < p.size(); ++k)
    if (p[k] != 0) f.push_back(static_cast<int>(k));
  return f;
}

Rational parse_rational(const std::string& text) {
  size_t pos = 0;
  auto digits = [&](size_t from) {
    size_t q = from;
    while (q < text.size() && text[q] >= '0' && text[q] <= '9') ++q;
    return q;
  };
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  const size_t num_end = digits(pos);
  if (num_end == pos) throw InputError("malformed rational '" + text + "'");
  size_t den_begin = num_end, den_end = num_end;
  if (num_end < text.size()) {
    if (text[num_end] != '/') throw InputError("malformed rational '" + text + "'");
    den_begin = num_end + 1;
    den_end = digits(den_begin);
    if (den_end == den_begin || den_end != text.size())
      throw InputError("malformed rational '" + text + "'");
  }
  // cpp_int's string constructor accepts '-' but not a leading '+'.
  const size_t num_begin = text[0] == '+' ? 1 : 0;
  const boost::multiprecision::cpp_int num(text.substr(num_begin, num_end - num_begin));
  boost::multiprecision::cpp_int den(1);
  if (den_begin != num_end) den = boost::multiprecision::cpp_int(text.substr(den_begin));
  if (den == 0) throw InputError("zero denominator in '" + text + "'");
  return Rational(num, den);
}

RationalMatrix::RationalMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, Rational(0)) {
  if (n <= 0) throw InputError("matrix size must be positive");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::mul(const RationalMatrix& rhs) const {
  if (n_ != rhs.n_) throw InputError("matrix size mismatch in product");
  RationalMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Rational& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n_; ++j) out.at(i, j) += aik * rhs.at(k, j);
    }
  return out;
}

std::string RationalMatrix::to_string() const {
  std::ostringstream ss;
  for (int i = 0; i < n_; ++i) {
    ss << '[';
    for (int j = 0; j < n_; ++j) {
      if (j) ss << ", ";
      ss << at(i, j);
    }
    ss << "]\n";
  }
  return ss.str();
}

RationalMatrix chevalley_x(int n, int i, const Rational& t) {
  if (i < 0 || i > n - 2)
    throw InputError("letter " + std::to_string(i + 1) + " out of range for size " +
                     std::to_string(n));
  RationalMatrix m = RationalMatrix::identity(n);
  m.at(i, i + 1) = t;
  return m;
}

RationalMatrix lusztig_eval(const Word& w, const ParamPoint& params, int n) {
  if (w.size() != params.size())
    throw InputError("expression has " + std::to_string(w.size()) + " letters but " +
                     std::to_string(params.size()) + " parameters");
  RationalMatrix acc = RationalMatrix::identity(n);
  for (size_t k = 0; k < w.size(); ++k) acc = acc.mul(chevalley_x(n, w[k], params[k]));
  return acc;
}

std::array<Rational, 3> braid3_transform(const Rational& t1, const Rational& t2,
                                         const Rational& t3) {
  const Rational outer = t1 + t3;
  if (outer == 0)
    throw InputError("three-letter transform is singular: outer parameters sum to zero");
  return {t2 * t3 / outer, outer, t1 * t2 / outer};
}

bool is_tnn(const RationalMatrix& m) {
  const int n = m.size();
  for (int k = 1; k <= n; ++k) {
    std::vector<int> rows(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) rows[static_cast<size_t>(i)] = i;
    do {
      std::vector<int> cols(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i) cols[static_cast<size_t>(i)] = i;
      do {
        std::vector<std::vector<Rational>> sub(static_cast<size_t>(k),
                                               std::vector<Rational>(static_cast<size_t>(k)));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j)
            sub[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                m.at(rows[static_cast<size_t>(i)], cols[static_cast<size_t>(j)]);
        if (det_of(std::move(sub)) < 0) return false;
      } while (next_combination(cols, n));
    } while (next_combination(rows, n));
  }
  return true;
}

GroupElement cell_of(const CoxeterSystem& sys, const RationalMatrix& m) {
  const int n = m.size();
  for (int i = 0; i < n; ++i) {
    if (m.at(i, i) != 1) throw InputError("matrix is not upper unitriangular");
    for (int j = 0; j < i; ++j)
      if (m.at(i, j) != 0) throw InputError("matrix is not upper unitriangular");
  }
  if (!is_chain_system(sys) || sys.rank() != n - 1)
    throw InputError("system does not match the matrix: need the chain system of rank " +
                     std::to_string(n - 1));

  // r(i, j) = rank of the first i rows restricted to columns j..n (1-based).
  auto corner_rank = [&](int i, int j) {
    std::vector<std::vector<Rational>> sub;
    for (int row = 0; row < i; ++row) {
      std::vector<Rational> r;
      for (int col = j - 1; col < n; ++col) r.push_back(m.at(row, col));
      sub.push_back(std::move(r));
    }
    return rank_of(std::move(sub));
  };
  std::vector<int> perm(static_cast<size_t>(n), 0);  // 1-based images
  for (int i = 1; i <= n; ++i) {
    int u = 0;
    for (int j = 1; j <= n; ++j)
      if (corner_rank(i, j) - corner_rank(i - 1, j) == 1) u = j;
    if (u == 0) throw InputError("rank table did not produce a permutation");
    perm[static_cast<size_t>(i - 1)] = u;
  }
  {
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
      if (sorted[static_cast<size_t>(i)] != i + 1)
        throw InputError("rank table did not produce a permutation");
  }

  // The rank table reads off where each row places its pivot, which is the
  // INVERSE of the cell's permutation.  Sorting the one-line form back to
  // the identity by adjacent swaps records letters p1..pk with
  // perm = s_{pk}...s_{p1}, so the unreversed letters spell perm^{-1} —
  // the element we want.
  Word letters;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int p = 0; p + 1 < n; ++p) {
      if (perm[static_cast<size_t>(p)] > perm[static_cast<size_t>(p + 1)]) {
        letters.push_back(p);
        std::swap(perm[static_cast<size_t>(p)], perm[static_cast<size_t>(p + 1)]);
        moved = true;
        break;
      }
    }
  }
  return sys.evaluate_word(letters);
}

std::vector<std::string> verify_fibers(const CoxeterSystem& sys, const Word& w,
                                       const CollapseTrace& trace) {
  std::vector<std::string> out;
  if (!is_chain_system(sys))
    throw InputError("fiber verification needs a chain system: only length-3 runs have a "
                     "parameter transform");
  sys.validate_word(w);
  if (trace.word != w) throw InputError("trace was computed for a different expression");
  const int n = sys.rank() + 1;
  const int d = static_cast<int>(w.size());
  const std::array<Rational, 5> grid{Rational(1), Rational(1) / 2, Rational(2),
                                     Rational(1) / 3, Rational(3)};

  for (size_t t = 0; t < trace.steps.size(); ++t) {
    const CollapseStep& step = trace.steps[t];
    const Face& F = step.face;
    const int l = step.pair.first, r = step.pair.second;
    const int sb = step.seg_begin, se = step.seg_end;
    const std::string where = "step " + std::to_string(t + 1);
    if (sb < 0 || se <= sb || se >= static_cast<int>(F.size()) ||
        F[static_cast<size_t>(sb)] != l || F[static_cast<size_t>(se)] != r) {
      out.push_back(where + ": malformed segment bounds");
      continue;
    }
    const int seg_count = se - sb;
    std::vector<int> seg_letters0(static_cast<size_t>(seg_count));
    for (int k = 0; k < seg_count; ++k)
      seg_letters0[static_cast<size_t>(k)] = w[static_cast<size_t>(F[static_cast<size_t>(sb + k)])];
    const int first_pos = F[static_cast<size_t>(sb)];
    const int last_pos = F[static_cast<size_t>(se - 1)];

    auto eval_arrangement = [&](const std::vector<int>& letters,
                                const std::vector<Rational>& values,
                                const ParamPoint& params) {
      RationalMatrix acc = RationalMatrix::identity(n);
      for (int p = 0; p < first_pos; ++p)
        acc = acc.mul(chevalley_x(n, w[static_cast<size_t>(p)], params[static_cast<size_t>(p)]));
      for (size_t k = 0; k < letters.size(); ++k)
        acc = acc.mul(chevalley_x(n, letters[k], values[k]));
      for (int p = last_pos + 1; p < d; ++p)
        acc = acc.mul(chevalley_x(n, w[static_cast<size_t>(p)], params[static_cast<size_t>(p)]));
      return acc;
    };

    for (const SweptFace& sf : step.swept) {
      for (int family = 0; family < 2; ++family) {
        const Face& support = family == 0 ? sf.tau : sf.sigma;
        const std::string fam_name = family == 0 ? "interior" : "shadow";
        std::int64_t total = 1;
        for (size_t k = 0; k < support.size() && total < 32; ++k) total *= 5;
        const std::int64_t npoints = std::min<std::int64_t>(32, total);
        for (std::int64_t idx = 0; idx < npoints; ++idx) {
          const std::string at = where + ", swept " + face_label(sf.tau) + ", " + fam_name +
                                 " sample " + std::to_string(idx);
          ParamPoint params(static_cast<size_t>(d), Rational(0));
          std::int64_t rest = idx;
          for (int p : support) {
            params[static_cast<size_t>(p)] = grid[static_cast<size_t>(rest % 5)];
            rest /= 5;
          }
          const RationalMatrix M = lusztig_eval(w, params, n);
          const GroupElement delta_in = sys.demazure(face_word(w, support));
          if (cell_of(sys, M) != delta_in) {
            out.push_back(at + ": sampled point is not in the cell of its support's "
                                "absorbing product");
            continue;
          }

          // Transport through the script.
          std::vector<int> letters = seg_letters0;
          std::vector<Rational> values(static_cast<size_t>(seg_count));
          for (int k = 0; k < seg_count; ++k)
            values[static_cast<size_t>(k)] =
                params[static_cast<size_t>(F[static_cast<size_t>(sb + k)])];
          int marker = 0;
          bool ok = true;
          auto apply_one = [&](const Move& mv) {
            const int s = mv.slot - sb;
            if (mv.kind == 0) {
              if (mv.len != 2 || s < 0 || s + 1 >= seg_count ||
                  sys.m(letters[static_cast<size_t>(s)], letters[static_cast<size_t>(s + 1)]) != 2) {
                out.push_back(at + ": malformed swap move");
                return false;
              }
              std::swap(letters[static_cast<size_t>(s)], letters[static_cast<size_t>(s + 1)]);
              std::swap(values[static_cast<size_t>(s)], values[static_cast<size_t>(s + 1)]);
              if (marker == s)
                marker = s + 1;
              else if (marker == s + 1)
                marker = s;
              return true;
            }
            if (mv.len != 3) {
              out.push_back(at + ": no parameter transform for a run of length " +
                            std::to_string(mv.len));
              return false;
            }
            if (s < 0 || s + 2 >= seg_count || marker == s + 1 ||
                letters[static_cast<size_t>(s)] != letters[static_cast<size_t>(s + 2)] ||
                sys.m(letters[static_cast<size_t>(s)], letters[static_cast<size_t>(s + 1)]) != 3) {
              out.push_back(at + ": malformed three-letter run move");
              return false;
            }
            std::array<Rational, 3> tr;
            try {
              tr = braid3_transform(values[static_cast<size_t>(s)],
                                    values[static_cast<size_t>(s + 1)],
                                    values[static_cast<size_t>(s + 2)]);
            } catch (const InputError& e) {
              out.push_back(at + ": " + e.what());
              return false;
            }
            values[static_cast<size_t>(s)] = tr[0];
            values[static_cast<size_t>(s + 1)] = tr[1];
            values[static_cast<size_t>(s + 2)] = tr[2];
            std::swap(letters[static_cast<size_t>(s)], letters[static_cast<size_t>(s + 1)]);
            letters[static_cast<size_t>(s + 2)] = letters[static_cast<size_t>(s)];
            if (marker == s)
              marker = s + 2;
            else if (marker == s + 2)
              marker = s;
            return true;
          };

          for (const Move& mv : step.moves) {
            if (!(ok = apply_one(mv))) break;
            if (eval_arrangement(letters, values, params) != M) {
              out.push_back(at + ": a script move changed the product matrix");
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          if (marker != seg_count - 1 ||
              letters[static_cast<size_t>(marker)] != w[static_cast<size_t>(r)]) {
            out.push_back(at + ": script does not end with the marked letter adjacent to "
                               "the pair's right letter");
            continue;
          }
          // Merge the adjacent equal letters: the marked slot absorbs the
          // right position's parameter.
          values[static_cast<size_t>(marker)] += params[static_cast<size_t>(r)];
          params[static_cast<size_t>(r)] = 0;
          if (eval_arrangement(letters, values, params) != M) {
            out.push_back(at + ": merging the equal adjacent letters changed the product");
            continue;
          }
          for (auto it = step.moves.rbegin(); it != step.moves.rend(); ++it) {
            if (!(ok = apply_one(*it))) break;
            if (eval_arrangement(letters, values, params) != M) {
              out.push_back(at + ": an inverse script move changed the product matrix");
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          if (letters != seg_letters0) {
            out.push_back(at + ": inverse replay did not restore the letter order");
            continue;
          }
          for (int k = 0; k < seg_count; ++k)
            params[static_cast<size_t>(F[static_cast<size_t>(sb + k)])] =
                values[static_cast<size_t>(k)];
          if (lusztig_eval(w, params, n) != M) {
            out.push_back(at + ": transported point has a different image");
            continue;
          }

          // The landing support must be exactly the right shadow of tau.
          Face expect;
          for (int p : sf.tau)
            if (p != r) expect.push_back(p);
          bool support_ok = true;
          for (int p = 0; p < d; ++p) {
            const bool want =
                std::binary_search(expect.begin(), expect.end(), p);
            const Rational& v = params[static_cast<size_t>(p)];
            if (want && !(v > 0)) support_ok = false;
            if (!want && v != 0) support_ok = false;
          }
          if (!support_ok) {
            out.push_back(at + ": transported point does not land on the right shadow's "
                               "support");
            continue;
          }
          const GroupElement delta_out = sys.demazure(face_word(w, expect));
          if (delta_out != delta_in)
            out.push_back(at + ": absorbing product differs across the identification");
        }
      }
    }
  }
  return out;
}

}  // namespace coxcell
