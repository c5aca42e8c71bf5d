#include "vknot/ribbon.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace vknot {

std::vector<std::string> ribbon_violations(const RibbonData& r) {
  std::vector<std::string> out;
  if (r.num_bases < 1) {
    out.push_back("no bases");
    return out;
  }
  auto in_range = [&](int b) { return b >= 1 && b <= r.num_bases; };
  for (std::size_t h = 0; h < r.handles.size(); ++h) {
    const Handle& handle = r.handles[h];
    if (!in_range(handle.start) || !in_range(handle.end))
      out.push_back("handle " + std::to_string(h + 1) + " endpoint out of range");
    for (const BasePass& pass : handle.passes) {
      if (!in_range(pass.base))
        out.push_back("handle " + std::to_string(h + 1) + " passes through a missing base");
      if (pass.sign != 1 && pass.sign != -1)
        out.push_back("handle " + std::to_string(h + 1) + " has a pass with sign " +
                      std::to_string(pass.sign));
    }
  }
  if (!out.empty()) return out;
  // Connectivity of the base/handle graph (passes do not connect).
  std::vector<int> parent(r.num_bases + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Handle& h : r.handles) parent[find(h.start)] = find(h.end);
  int root = find(1);
  for (int b = 2; b <= r.num_bases; ++b)
    if (find(b) != root) {
      out.push_back("base/handle graph is disconnected");
      break;
    }
  if (static_cast<int>(r.handles.size()) - r.num_bases + 1 < 0)
    out.push_back("genus |H|-|B|+1 is negative");
  return out;
}

void require_valid(const RibbonData& r) {
  auto v = ribbon_violations(r);
  if (v.empty()) return;
  std::string msg = "invalid ribbon data:";
  for (const auto& s : v) msg += " " + s + ";";
  throw InvalidRibbonData(msg);
}

int genus(const RibbonData& r) {
  require_valid(r);
  return static_cast<int>(r.handles.size()) - r.num_bases + 1;
}

Presentation ribbon_quandle(const RibbonData& r) {
  require_valid(r);
  Presentation pres;
  pres.kind = PresKind::Quandle;
  for (int b = 1; b <= r.num_bases; ++b) pres.generators.push_back("b" + std::to_string(b));
  for (const Handle& h : r.handles) {
    Relation rel;
    rel.lhs = h.end - 1;
    rel.base = h.start - 1;
    for (const BasePass& pass : h.passes)
      rel.steps.push_back({pass.sign > 0 ? StepOp::UpBar : StepOp::Up, pass.base - 1});
    pres.relations.push_back(rel);
  }
  return pres;
}

RibbonData add_trivial_base(const RibbonData& r, int attach_to) {
  require_valid(r);
  if (attach_to < 1 || attach_to > r.num_bases)
    throw BadBaseId("add_trivial_base: base " + std::to_string(attach_to) + " out of range");
  RibbonData out = r;
  out.num_bases += 1;
  out.handles.push_back({out.num_bases, {}, attach_to});
  return out;
}

namespace {

// Passage word of `h` traversed from one endpoint to the other; traversal
// against the stored orientation reverses the order and flips the signs.
std::vector<BasePass> walk(const Handle& h, bool from_start) {
  if (from_start) return h.passes;
  std::vector<BasePass> out(h.passes.rbegin(), h.passes.rend());
  for (BasePass& p : out) p.sign = -p.sign;
  return out;
}

}  // namespace

RibbonData handle_slide(const RibbonData& r, int slide, int along, HandleEnd which_end) {
  require_valid(r);
  int nh = static_cast<int>(r.handles.size());
  if (slide < 0 || slide >= nh || along < 0 || along >= nh)
    throw NotIncident("handle_slide: handle index out of range");
  if (slide == along) throw SelfSlide("handle_slide: a handle cannot slide along itself");
  const Handle& al = r.handles[along];
  RibbonData out = r;
  Handle& sl = out.handles[slide];
  int old_base = which_end == HandleEnd::Start ? sl.start : sl.end;
  bool from_start_of_along;
  if (old_base == al.start)
    from_start_of_along = true;  // travel start -> end
  else if (old_base == al.end)
    from_start_of_along = false;  // travel end -> start
  else
    throw NotIncident("handle_slide: the chosen end is not on an endpoint of `along`");
  int new_base = from_start_of_along ? al.end : al.start;
  if (which_end == HandleEnd::Start) {
    // Walking the slid handle from its new start first retraces the slide
    // path back to the old attachment: the word from new_base to old_base.
    std::vector<BasePass> prefix = walk(al, !from_start_of_along);
    prefix.insert(prefix.end(), sl.passes.begin(), sl.passes.end());
    sl.passes = std::move(prefix);
    sl.start = new_base;
  } else {
    // The handle now continues past the old attachment along the slide path.
    std::vector<BasePass> suffix = walk(al, from_start_of_along);
    sl.passes.insert(sl.passes.end(), suffix.begin(), suffix.end());
    sl.end = new_base;
  }
  return out;
}

RibbonData handle_pass(const RibbonData& r) {
  require_valid(r);
  return r;
}

RibbonData reverse_handle(const RibbonData& r, int handle) {
  require_valid(r);
  if (handle < 0 || handle >= static_cast<int>(r.handles.size()))
    throw InvalidRibbonData("reverse_handle: handle index out of range");
  RibbonData out = r;
  Handle& h = out.handles[handle];
  std::swap(h.start, h.end);
  h.passes = walk(r.handles[handle], false);
  return out;
}

RibbonData tube(const GaussCode& code) {
  require_valid(code);
  if (code.components.size() != 1)
    throw MultiComponent("tube: expected a one-component (knot) code");
  ArcStructure arcs = arc_structure(code);
  RibbonData out;
  out.num_bases = arcs.arc_count;
  if (arcs.crossings.empty()) {
    // A crossingless circle: one base, one pass-free self-handle (|B|=|H|).
    out.handles.push_back({1, {}, 1});
    return out;
  }
  for (const auto& cr : arcs.crossings) {
    Handle h;
    h.start = cr.under_in_arc + 1;
    h.end = cr.under_out_arc + 1;
    // One pass through the over arc's base. The pass sign is the negated
    // crossing sign so that the handle relation b_end = b_start^(word)
    // coincides with the Wirtinger relation of the crossing.
    h.passes.push_back({cr.over_arc + 1, -cr.sign});
    out.handles.push_back(h);
  }
  return out;
}

}  // namespace vknot
