// coxcell — stepwise collapse of the face complex of an expression.  Each
// step picks the face whose best pair minimizes (right end, span, braid
// count, -dimension) with lexicographically least support as the final tie
// break, certifies the pair with a minimal script, sweeps the sub-faces on
// which the script restricts, identifies the two deletion shadows of every
// swept face and retires the swept face itself.  Class bookkeeping uses two
// union-finds: identifications alone (where the retired status lives) and
// identifications together with retirement merges (the final trace classes).
// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "core/coxeter.hpp"
#include "core/hecke.hpp"
#include "core/poset.hpp"

namespace coxcell {

enum class CollapseMode { Full, Commutation };

struct SweptFace {
  Face tau;          // the swept face; loses its cell
  Face sigma;        // tau minus the pair's left position
  Face sigma_prime;  // tau minus the pair's right position; absorbs tau
  bool early;        // tau carried a pair of its own and is retired out of turn
};

struct CollapseStep {
  Face face;  // the step face
  PosPair pair;
  int braid_count;
  int seg_begin, seg_end;  // face-slot range the script acts on
  std::vector<Move> moves;
  std::vector<SweptFace> swept;  // step face first, then by (size desc, lex)
};

struct CollapseTrace {
  Word word;
  CollapseMode mode;
  std::vector<CollapseStep> steps;
  std::vector<Face> collapsed;             // faces whose cells are gone
  std::vector<std::vector<Face>> classes;  // final classes over all faces
};

// Runs the collapse to exhaustion.  Words are capped at 12 letters (the face
// complex is enumerated explicitly).
CollapseTrace run_collapse(const CoxeterSystem& sys, const Word& w, CollapseMode mode);

// Whole-run invariants: the retired faces are exactly the non-reduced faces
// (full mode) or exactly the faces carrying an omittable pair (commutation
// mode); classes keep live members of one common size; the absorbing product
// is constant on each class's live members.  Returns violation messages.
std::vector<std::string> check_termination(const CoxeterSystem& sys,
                                           const CollapseTrace& trace);

// Step-by-step replay checks: (a) every minimal upper bound of an identified
// pair in the cell order just before the step is retired within the step,
// (b) the two identified cells are distinct beforehand, (c) both are alive
// beforehand and sit one dimension below the swept face.  Returns violation
// messages; an empty result means the trace is coherent.
std::vector<std::string> verify_conditions(const CoxeterSystem& sys,
                                           const CollapseTrace& trace);

// Quotient cell order: one element per surviving class plus a bottom cell.
// Containment holds when some member face of one class is a subset of some
// member face of the other; ranks are the common live support sizes.  When
// `survivors` is non-null it receives, per poset index, the common absorbing
// product of the class (identity at the bottom).
GradedPoset quotient_poset(const CoxeterSystem& sys, const CollapseTrace& trace,
                           std::vector<GroupElement>* survivors = nullptr);

// Checks that the quotient order is isomorphic, as a graded poset, to the
// order ideal (identity, D] for the word's absorbing product D, matching
// classes to group elements by their absorbing products.
std::vector<std::string> check_interval_isomorphism(const CoxeterSystem& sys,
                                                    const CollapseTrace& trace);

// Deterministic JSON rendering (1-based letters and positions, two-space
// indent, keys sorted).  Optionally embeds the check results and quotient.
std::string trace_to_json(const CoxeterSystem& sys, const CollapseTrace& trace,
                          bool with_checks, bool with_quotient);

}  // namespace coxcell
