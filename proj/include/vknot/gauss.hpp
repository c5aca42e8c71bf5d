// Gauss codes for virtual link diagrams: data model, text format, canonical
// form, validation, and the supporting-genus computation.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vknot {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at offset " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

struct InvalidCodeError : Error {
  using Error::Error;
};

enum class Role : std::uint8_t { Over, Under };

// One passage of a strand through a classical crossing. Virtual crossings
// are never recorded; the code itself is the state.
struct Passage {
  int crossing = 0;  // positive id, not necessarily contiguous
  Role role = Role::Over;
  int sign = +1;  // +1 or -1, shared by both passages of a crossing

  friend bool operator==(const Passage&, const Passage&) = default;
};

// A component is a cyclic sequence of passages; an empty vector is a
// crossingless circle.
using Component = std::vector<Passage>;

struct GaussCode {
  std::vector<Component> components;

  friend bool operator==(const GaussCode&, const GaussCode&) = default;

  int passage_count() const;
  int crossing_count() const;
  int max_crossing_id() const;
  // Locates the unique passage of `crossing` with the given role.
  std::optional<std::pair<int, int>> find(int crossing, Role role) const;
};

enum class ViolationKind {
  UnpairedCrossing,  // id appears once (or more than twice)
  DuplicateRole,     // id appears twice with the same role
  SignMismatch,      // the two passages carry different signs
  BadCrossingId,     // id < 1
  BadSign,           // sign not in {+1,-1}
};

struct Violation {
  ViolationKind kind;
  int crossing = 0;
  std::string message;
};

std::vector<Violation> validate(const GaussCode& code);
bool is_valid(const GaussCode& code);
// Throws InvalidCodeError listing all violations.
void require_valid(const GaussCode& code);

// Text grammar:
//   code := component (';' component)* ; component := '(' ')' | token (' ' token)* ;
//   token := ('O'|'U') id sign ; id := positive decimal integer ; sign := '+'|'-'.
// Whitespace around ';' is ignored. Empty input parses as one crossingless circle.
GaussCode parse_gauss(const std::string& text);

// Emits the canonical form: lexicographically least serialization over all
// component rotations, component orderings, and relabelings of crossing ids
// by first appearance.
std::string serialize_gauss(const GaussCode& code);
GaussCode canonicalize(const GaussCode& code);
bool canonically_equal(const GaussCode& a, const GaussCode& b);

// Verbatim (non-canonical) text of the code as stored.
std::string raw_string(const GaussCode& code);

struct GenusReport {
  int total_genus = 0;
  bool disconnected = false;       // underlying 4-valent graph is not connected
  std::vector<int> component_genera;  // one entry per connected graph piece
};

// Genus of the closed orientable surface obtained by thickening the code's
// underlying 4-valent graph (crossings = vertices, strand segments = bands)
// and capping the traced boundary circles. Rotation at a positive crossing:
// (under-in, over-in, under-out, over-out); a negative crossing mirrors the
// over strand. Computed per connected graph piece and summed.
GenusReport genus_report(const GaussCode& code);
int supporting_genus(const GaussCode& code);
bool is_realizable(const GaussCode& code);

}  // namespace vknot
