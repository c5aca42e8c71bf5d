// Ribbon presentations of n-knots as combinatorial ribbon data: bases plus
// handles with signed base-passage sequences, the stable-equivalence moves,
// the quandle presentation they carry, and Satoh's Tube map from welded
// knot codes.
#pragma once

#include <string>
#include <vector>

#include "vknot/gauss.hpp"
#include "vknot/presentation.hpp"

namespace vknot {

struct BasePass {
  int base = 0;  // 1..num_bases
  int sign = +1;
  friend bool operator==(const BasePass&, const BasePass&) = default;
};

struct Handle {
  int start = 0;
  std::vector<BasePass> passes;
  int end = 0;
  friend bool operator==(const Handle&, const Handle&) = default;
};

struct RibbonData {
  int num_bases = 0;
  std::vector<Handle> handles;
  friend bool operator==(const RibbonData&, const RibbonData&) = default;
};

struct InvalidRibbonData : Error {
  using Error::Error;
};
struct BadBaseId : Error {
  using Error::Error;
};
struct NotIncident : Error {
  using Error::Error;
};
struct SelfSlide : Error {
  using Error::Error;
};
struct MultiComponent : Error {
  using Error::Error;
};

std::vector<std::string> ribbon_violations(const RibbonData& r);
void require_valid(const RibbonData& r);

// |H| - |B| + 1 (the knot is an n-sphere with that many 1-handles attached).
int genus(const RibbonData& r);

// Generators = bases; one relation per handle: b_end = b_start conjugated by
// the passage word, where a positive passage through b contributes ^b-bar and
// a negative passage contributes ^b.
Presentation ribbon_quandle(const RibbonData& r);

// Stable-equivalence move 1: a fresh base joined to attach_to by a pass-free
// handle.
RibbonData add_trivial_base(const RibbonData& r, int attach_to);

enum class HandleEnd { Start, End };

// Stable-equivalence move 3: reattach one end of handle `slide` from its
// current base across handle `along` to the other endpoint. The slid end
// drags along `along`'s passage word: the word is appended as a prefix
// (Start) or suffix (End), read in the direction that walks from the new
// attachment back into the old handle body; traversing `along` against its
// stored orientation reverses the word and flips the passage signs.
RibbonData handle_slide(const RibbonData& r, int slide, int along, HandleEnd which_end);

// Stable-equivalence move 2 is invisible at the ribbon-data level: passage
// sequences are unchanged, so this is the identity (kept for API parity).
RibbonData handle_pass(const RibbonData& r);

// Passage sequences are defined only up to reversal; this normalization swaps
// a handle's endpoints and reverses its word with flipped signs.
RibbonData reverse_handle(const RibbonData& r, int handle);

// Satoh's Tube map on a one-component code read as a welded knot: arcs become
// bases; each crossing becomes a handle from the incoming-under arc's base to
// the outgoing-under arc's base with a single pass through the over arc's
// base. A crossingless circle yields one base with a pass-free self-handle,
// so |B| = |H| always.
RibbonData tube(const GaussCode& code);

}  // namespace vknot
