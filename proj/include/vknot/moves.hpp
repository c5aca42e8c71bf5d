// Reidemeister moves and the welded forbidden move as Gauss-code rewrites.
#pragma once

#include <string>
#include <vector>

#include "vknot/gauss.hpp"

namespace vknot {

struct PatternMismatch : Error {
  using Error::Error;
};
struct InvalidSite : Error {
  using Error::Error;
};

enum class MoveKind { R1Insert, R1Delete, R2Insert, R2Delete, R3, Forbidden };

std::string to_string(MoveKind k);
MoveKind move_kind_from_string(const std::string& s);

// A gap is an insertion point: position p inserts before token p (cyclically);
// an empty component has the single gap 0. For token-addressed sites,
// `position` is the index of the first token of the adjacent pair.
struct GapRef {
  int component = 0;
  int position = 0;
  friend bool operator==(const GapRef&, const GapRef&) = default;
};

struct MoveInstance {
  MoveKind kind = MoveKind::R1Insert;

  // R1Insert: site = gap; sign + over_first pick the kink type.
  // R1Delete: site = first token of the chord's adjacent passage pair.
  // R2Insert: site = over-strand gap, under_site = under-strand gap; sign is
  //   the first crossing's sign (second gets the opposite); parallel selects
  //   the relative strand orientation; when both gaps coincide the four
  //   tokens nest in one gap (antiparallel only) and over_first picks whether
  //   the over pair comes first.
  // R2Delete: site = first token of the adjacent over-passage pair.
  // R3: site/pair2/pair3 = first tokens of the three adjacent pairs; across
  //   names the crossing being slid over/under (the pair not touching it is
  //   the sliding strand).
  // Forbidden: site = first of two adjacent Over passages, which swap.
  GapRef site;
  GapRef under_site;
  GapRef pair2, pair3;
  int across = 0;
  int sign = +1;
  bool parallel = true;
  bool over_first = true;
};

// Applies the move; throws PatternMismatch / InvalidSite if the site does not
// match the structural pattern required by the kind.
GaussCode apply_move(const GaussCode& code, const MoveInstance& m);

// Every site at which each move kind applies, insert kinds at every gap with
// both sign (and token-order) choices. apply_move succeeds on each result.
std::vector<MoveInstance> enumerate_moves(const GaussCode& code);

// The instance that undoes `m` when applied to apply_move(code, m).
MoveInstance inverse_of(const GaussCode& code, const MoveInstance& m);

}  // namespace vknot
