#include "vknot/spun.hpp"

#include "vknot/ribbon.hpp"

namespace vknot {

std::vector<std::string> double_point_violations(const DoublePointData& d) {
  std::vector<std::string> out;
  int ns = static_cast<int>(d.sheets.size());
  for (std::size_t i = 0; i < d.curves.size(); ++i) {
    const DoublePointCurve& c = d.curves[i];
    for (int slot : {c.over_in, c.over_out, c.under_in, c.under_out})
      if (slot < 0 || slot >= ns) {
        out.push_back("curve " + std::to_string(i + 1) + " references a missing sheet");
        break;
      }
    if (c.sign != 1 && c.sign != -1)
      out.push_back("curve " + std::to_string(i + 1) + " has sign " + std::to_string(c.sign));
  }
  return out;
}

void require_valid(const DoublePointData& d) {
  auto v = double_point_violations(d);
  if (v.empty()) return;
  std::string msg = "invalid double point data:";
  for (const auto& s : v) msg += " " + s + ";";
  throw InvalidData(msg);
}

DoublePointData spin(const GaussCode& code) {
  require_valid(code);
  if (code.components.size() != 1)
    throw MultiComponent("spin: expected a one-component (knot) code");
  SemiarcStructure semi = semiarc_structure(code);
  DoublePointData out;
  for (int i = 1; i <= semi.semiarc_count; ++i) out.sheets.push_back("s" + std::to_string(i));
  for (const auto& cr : semi.crossings)
    out.curves.push_back({cr.over_in, cr.over_out, cr.under_in, cr.under_out, cr.sign});
  out.from_spin = true;
  return out;
}

Presentation sheet_biquandle(const DoublePointData& d) {
  require_valid(d);
  Presentation pres;
  pres.kind = PresKind::Biquandle;
  pres.generators = d.sheets;
  for (const DoublePointCurve& c : d.curves) {
    Relation under_rel, over_rel;
    under_rel.lhs = c.under_out;
    under_rel.base = c.under_in;
    under_rel.steps = {{c.sign > 0 ? StepOp::Up : StepOp::UpBar, c.over_in}};
    over_rel.lhs = c.over_out;
    over_rel.base = c.over_in;
    over_rel.steps = {{c.sign > 0 ? StepOp::Down : StepOp::DownBar, c.under_in}};
    pres.relations.push_back(under_rel);
    pres.relations.push_back(over_rel);
  }
  return pres;
}

}  // namespace vknot
