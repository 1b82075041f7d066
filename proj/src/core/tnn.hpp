// coxcell — exact-rational matrix oracle for the type-A elementary
// one-parameter subgroups: products, the three-letter parameter transform,
// total-nonnegativity tests, cell membership via rank tables, and fiber
// verification of collapse traces.
// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "core/collapse.hpp"

namespace coxcell {

using Rational = boost::multiprecision::cpp_rational;

// A nonnegative parameter tuple; position k weights the k-th letter of an
// ambient word.  Its support is the set of positions with nonzero entry.
using ParamPoint = std::vector<Rational>;

Face support_of(const ParamPoint& p);

// True when the system is the simply-laced chain A_n: adjacent generators
// braid with order 3, all others commute.  Only those systems have
// elementary matrices here.
bool is_chain_system(const CoxeterSystem& sys);

// Parses "7", "-2", "1/3" into an exact rational; rejects anything else.
Rational parse_rational(const std::string& text);

// Dense square matrix over exact rationals.
class RationalMatrix {
 public:
  explicit RationalMatrix(int n);  // zero matrix
  static RationalMatrix identity(int n);

  int size() const { return n_; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i * n_ + j)]; }
  Rational& at(int i, int j) { return a_[static_cast<size_t>(i * n_ + j)]; }
  RationalMatrix mul(const RationalMatrix& rhs) const;
  bool operator==(const RationalMatrix& rhs) const { return n_ == rhs.n_ && a_ == rhs.a_; }

  // One bracketed row per line, entries as exact fractions.
  std::string to_string() const;

 private:
  int n_;
  std::vector<Rational> a_;
};

// Identity plus t in entry (i, i+1), size n; 0-based letter i <= n-2.
RationalMatrix chevalley_x(int n, int i, const Rational& t);

// Product of the elementary matrices of `w` at the given parameters
// (one parameter per letter; letters are 0-based and must be < n-1).
RationalMatrix lusztig_eval(const Word& w, const ParamPoint& params, int n);

// Parameter transform realizing x_i(t1) x_j(t2) x_i(t3) =
// x_j(t1') x_i(t2') x_j(t3') for adjacent i, j:
// (t2*t3/(t1+t3), t1+t3, t1*t2/(t1+t3)).  An involution; requires
// t1 + t3 != 0 and throws InputError otherwise.
std::array<Rational, 3> braid3_transform(const Rational& t1, const Rational& t2,
                                         const Rational& t3);

// True iff every minor (all equal-size row/column subsets) is nonnegative.
// Enumerates all minors exactly, which is exponential in the size: intended
// for matrices of size at most 6.
bool is_tnn(const RationalMatrix& m);

// The permutation cell containing an upper unitriangular matrix, read off
// the northeast rank table r(i, j) = rank of rows 1..i, columns j..n via
// u(i) = max{ j : r(i, j) - r(i-1, j) = 1 }.  `sys` must be the chain
// system of rank size-1 whose elements the result lives in.  For positive
// parameters on a reduced word this inverts lusztig_eval onto the word's
// group element.
GroupElement cell_of(const CoxeterSystem& sys, const RationalMatrix& m);

// Replays every identification recorded in a collapse trace on exact
// sample points: for each step and each swept face, grid points on the
// face (and on its left shadow) are transported through the step's script
// (parameter swaps, three-letter transforms, and the final merge of equal
// adjacent letters), and the transported point must evaluate to the same
// matrix, land on the right shadow's support, and sit in the cell of the
// absorbing product of its support word.  Returns human-readable
// violations; empty means every sampled identification is exact.  The
// grid draws coordinates from {1, 1/2, 2, 1/3, 3}, at most 32 points per
// face per family.  Requires a chain (simply-laced path) system: only
// length-3 runs have a parameter transform.
std::vector<std::string> verify_fibers(const CoxeterSystem& sys, const Word& w,
                                       const CollapseTrace& trace);

}  // namespace coxcell
