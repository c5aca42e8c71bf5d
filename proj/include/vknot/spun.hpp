// The spinning map S_T from one-component codes to the double-point-curve
// data of the spun torus, and the sheet biquandle presentation carried by
// such data. Spinning a diagram crosses it with a circle: each semi-arc
// becomes a sheet and each classical crossing a closed double point curve
// meeting the same four sheets, so the biquandle presentation transports
// verbatim.
#pragma once

#include <string>
#include <vector>

#include "vknot/gauss.hpp"
#include "vknot/presentation.hpp"

namespace vknot {

struct DoublePointCurve {
  int over_in = 0, over_out = 0, under_in = 0, under_out = 0;  // sheet indices
  int sign = +1;
  friend bool operator==(const DoublePointCurve&, const DoublePointCurve&) = default;
};

struct DoublePointData {
  std::vector<std::string> sheets;
  std::vector<DoublePointCurve> curves;
  // True only for data produced by spin(); hand-built data is accepted by
  // sheet_biquandle but nothing certifies it comes from an embedded surface.
  bool from_spin = false;
};

struct InvalidData : Error {
  using Error::Error;
};

std::vector<std::string> double_point_violations(const DoublePointData& d);
void require_valid(const DoublePointData& d);

// Sheets = semi-arcs of the code; one curve per classical crossing with the
// crossing's incident semi-arcs in the four slots and the sign copied.
DoublePointData spin(const GaussCode& code);

// Generators = sheets; a positive curve yields under_out = under_in ^ over_in
// and over_out = over_in _ under_in; a negative curve uses the barred ops.
Presentation sheet_biquandle(const DoublePointData& d);

}  // namespace vknot
