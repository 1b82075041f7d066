// coxcell — word combinatorics on faces of a fixed expression: deletion
// pairs, commutation-omittable pairs, minimal braid scripts and prefix
// reflection sequences.
// SPDX-License-Identifier: MIT
#pragma once

#include <utility>
#include <vector>

#include "core/coxeter.hpp"

namespace coxcell {

// A face is a strictly increasing list of 0-based positions into an ambient
// word; its word is the subsequence of letters at those positions.
using Face = std::vector<int>;
using PosPair = std::pair<int, int>;  // (left, right) ambient positions, left < right

Word face_word(const Word& w, const Face& f);

// One rewriting move on a contiguous run of slots.  Slots index the sorted
// face; `slot` is the leftmost slot touched.  kind 0 is an adjacent swap of
// commuting letters (len == 2); kind 1 flips an alternating braid run of
// length len == m(a, b) in {3, 4, 6}.
struct Move {
  int kind;
  int slot;
  int len;
};
bool operator==(const Move& a, const Move& b);

// Mutable segment of a face word together with a marked slot.  `letters`
// holds the segment's letters; `marker` is segment-local.
struct SegmentState {
  std::vector<int> letters;
  int marker;
};

// Deletion pairs of a face: (l, r) in the face such that the face word
// restricted to [l..r] is not reduced but dropping either endpoint makes it
// reduced.  Returned sorted by (r, r - l).
std::vector<PosPair> deletion_pairs(const CoxeterSystem& sys, const Word& w, const Face& f);

// True when positions l and r of the face carry equal letters that can be
// made adjacent using commutation moves only (breadth-first search over
// arrangements of the enclosed segment).
bool commutation_joinable(const CoxeterSystem& sys, const Word& w, const Face& f,
                          PosPair pr);

// All pairs (l, r) of equal-letter face positions that are commutation
// joinable, sorted by (r, r - l).
std::vector<PosPair> omittable_pairs(const CoxeterSystem& sys, const Word& w, const Face& f);

// A certified move script for a pair of a face.  The script acts on the
// segment of face slots [seg_begin, seg_end) covering the face positions
// [pair.first .. pair.second - 1]; the marked letter starts on the pair's
// left position and ends on the final segment slot carrying the letter of
// the pair's right position.  braid_count is the number of kind-1 moves.
struct PairScript {
  PosPair pair;
  int seg_begin;
  int seg_end;
  int braid_count;
  std::vector<Move> moves;
};

// Minimal script for a deletion pair: uniform-cost search over
// (arrangement, marked slot) states where commutation moves are free and
// braid runs cost one; ties are broken by the lexicographically least move
// encoding, so the result is deterministic.  The marked slot may sit at an
// extreme of a flipped braid run (it jumps to the opposite extreme) but
// never strictly inside one.
PairScript min_long_braids(const CoxeterSystem& sys, const Word& w, const Face& f,
                           PosPair pr);

// Same search restricted to commutation moves; braid_count is always 0.
// Valid precisely for omittable pairs.
PairScript commutation_script(const CoxeterSystem& sys, const Word& w, const Face& f,
                              PosPair pr);

// Applies one move to a segment (seg_begin maps face-relative slots to
// segment-local indices).  Throws InputError when the move is inapplicable:
// out of range, non-commuting swap, non-alternating run, or a marked slot
// strictly inside a braid run.
void apply_move(const CoxeterSystem& sys, SegmentState& st, const Move& mv, int seg_begin);

// Replays only the presence flags of a sub-face through a script: adjacent
// swaps exchange flags, braid runs require every touched slot to be present.
// Returns true when all braid moves act on fully present runs.
bool sweep_replay(const std::vector<Move>& moves, int seg_begin, std::vector<char> present);

// Reflection attached to each prefix of a word.  When the absorbing product
// of the length-j prefix is longer than that of the length-(j-1) prefix, the
// j-th entry is p s p^{-1} for the plain group product p of the first j-1
// letters; otherwise the entry is copied from the largest j' < j whose
// letters satisfy s_{i_j'} ... s_{i_{j-1}} = s_{i_{j'+1}} ... s_{i_j}, and
// InputError is thrown when no such j' exists.
std::vector<GroupElement> prefix_reflections(const CoxeterSystem& sys, const Word& w);

}  // namespace coxcell
