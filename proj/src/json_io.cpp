#include "vknot/json_io.hpp"

namespace vknot {

namespace {

Table table_from_json(const Json& j) {
  Table t;
  for (const auto& row : j) t.push_back(row.get<std::vector<int>>());
  return t;
}

int find_generator(const Presentation& p, const std::string& name) {
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    if (p.generators[i] == name) return static_cast<int>(i);
  throw Error("relation references undeclared generator '" + name + "'");
}

}  // namespace

Json to_json(const FiniteQuandle& q) {
  return Json{{"n", q.n}, {"op", q.op}, {"inv_op", q.inv_op}};
}

Json to_json(const FiniteBiquandle& b) {
  return Json{{"n", b.n},
              {"up", b.up},
              {"down", b.down},
              {"up_bar", b.up_bar},
              {"down_bar", b.down_bar}};
}

Json to_json(const FiniteGroup& g) { return Json{{"n", g.n}, {"mul", g.mul}}; }

FiniteQuandle quandle_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  Table op = table_from_json(j.at("op"));
  if (j.contains("inv_op")) {
    Table inv = table_from_json(j.at("inv_op"));
    auto v = quandle_violations(n, op, inv);
    if (!v.empty()) throw AxiomError("not a quandle: " + v.front().message, v);
    return FiniteQuandle{n, op, inv, "table"};
  }
  return make_quandle(op, "table");
}

FiniteBiquandle biquandle_from_json(const Json& j) {
  return validate_biquandle(table_from_json(j.at("up")), table_from_json(j.at("down")),
                            table_from_json(j.at("up_bar")),
                            table_from_json(j.at("down_bar")), "table");
}

FiniteGroup group_from_json(const Json& j) {
  return make_group(table_from_json(j.at("mul")), "group");
}

Json to_json(const Presentation& p) {
  Json rels = Json::array();
  for (const auto& rel : p.relations) {
    Json ops = Json::array();
    for (const auto& step : rel.steps)
      ops.push_back(Json{{"op", to_string(step.op)}, {"arg", p.generators[step.arg]}});
    rels.push_back(Json{{"lhs", p.generators[rel.lhs]},
                        {"rhs", Json{{"base", p.generators[rel.base]}, {"ops", ops}}}});
  }
  return Json{{"kind", to_string(p.kind)}, {"generators", p.generators}, {"relations", rels}};
}

Presentation presentation_from_json(const Json& j) {
  Presentation p;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "quandle")
    p.kind = PresKind::Quandle;
  else if (kind == "group")
    p.kind = PresKind::Group;
  else if (kind == "biquandle")
    p.kind = PresKind::Biquandle;
  else
    throw Error("unknown presentation kind: " + kind);
  p.generators = j.at("generators").get<std::vector<std::string>>();
  for (const auto& rel : j.at("relations")) {
    Relation r;
    r.lhs = find_generator(p, rel.at("lhs").get<std::string>());
    r.base = find_generator(p, rel.at("rhs").at("base").get<std::string>());
    for (const auto& op : rel.at("rhs").at("ops"))
      r.steps.push_back({step_op_from_string(op.at("op").get<std::string>()),
                         find_generator(p, op.at("arg").get<std::string>())});
    p.relations.push_back(std::move(r));
  }
  return p;
}

Json to_json(const ColoringCount& c) {
  return Json{{"target", c.target},
              {"total", c.total},
              {"surjective", c.surjective},
              {"constant", c.constant}};
}

Json to_json(const Abelianization& a) {
  return Json{{"free_rank", a.free_rank}, {"torsion", a.torsion}};
}

Json to_json(const RibbonData& r) {
  Json handles = Json::array();
  for (const auto& h : r.handles) {
    Json passes = Json::array();
    for (const auto& p : h.passes) passes.push_back(Json::array({p.base, p.sign}));
    handles.push_back(Json{{"start", h.start}, {"passes", passes}, {"end", h.end}});
  }
  return Json{{"bases", r.num_bases}, {"handles", handles}};
}

RibbonData ribbon_from_json(const Json& j) {
  RibbonData r;
  r.num_bases = j.at("bases").get<int>();
  for (const auto& h : j.at("handles")) {
    Handle handle;
    handle.start = h.at("start").get<int>();
    handle.end = h.at("end").get<int>();
    for (const auto& p : h.at("passes"))
      handle.passes.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
    r.handles.push_back(std::move(handle));
  }
  require_valid(r);
  return r;
}

Json to_json(const DoublePointData& d) {
  Json curves = Json::array();
  for (const auto& c : d.curves)
    curves.push_back(Json{{"over_in", d.sheets[c.over_in]},
                          {"over_out", d.sheets[c.over_out]},
                          {"under_in", d.sheets[c.under_in]},
                          {"under_out", d.sheets[c.under_out]},
                          {"sign", c.sign}});
  return Json{{"sheets", d.sheets}, {"curves", curves}};
}

DoublePointData double_point_from_json(const Json& j) {
  DoublePointData d;
  d.sheets = j.at("sheets").get<std::vector<std::string>>();
  auto sheet_index = [&](const std::string& name) {
    for (std::size_t i = 0; i < d.sheets.size(); ++i)
      if (d.sheets[i] == name) return static_cast<int>(i);
    throw Error("curve references undeclared sheet '" + name + "'");
  };
  for (const auto& c : j.at("curves"))
    d.curves.push_back({sheet_index(c.at("over_in").get<std::string>()),
                        sheet_index(c.at("over_out").get<std::string>()),
                        sheet_index(c.at("under_in").get<std::string>()),
                        sheet_index(c.at("under_out").get<std::string>()),
                        c.at("sign").get<int>()});
  d.from_spin = false;  // provenance is not serialized
  require_valid(d);
  return d;
}

Json to_json(const MoveInstance& m) {
  Json j{{"kind", to_string(m.kind)}};
  auto site = [](const GapRef& g) {
    return Json{{"component", g.component}, {"position", g.position}};
  };
  switch (m.kind) {
    case MoveKind::R1Insert:
      j["site"] = site(m.site);
      j["sign"] = m.sign;
      j["over_first"] = m.over_first;
      break;
    case MoveKind::R1Delete:
    case MoveKind::R2Delete:
    case MoveKind::Forbidden:
      j["site"] = site(m.site);
      break;
    case MoveKind::R2Insert:
      j["over"] = site(m.site);
      j["under"] = site(m.under_site);
      j["sign"] = m.sign;
      j["parallel"] = m.parallel;
      if (m.site == m.under_site) j["over_first"] = m.over_first;
      break;
    case MoveKind::R3:
      j["pairs"] = Json::array({site(m.site), site(m.pair2), site(m.pair3)});
      j["across"] = m.across;
      break;
  }
  return j;
}

MoveInstance move_from_json(const Json& j) {
  MoveInstance m;
  m.kind = move_kind_from_string(j.at("kind").get<std::string>());
  auto gap = [](const Json& g) {
    return GapRef{g.at("component").get<int>(), g.at("position").get<int>()};
  };
  switch (m.kind) {
    case MoveKind::R1Insert:
      m.site = gap(j.at("site"));
      m.sign = j.value("sign", +1);
      m.over_first = j.value("over_first", true);
      break;
    case MoveKind::R1Delete:
    case MoveKind::R2Delete:
    case MoveKind::Forbidden:
      m.site = gap(j.at("site"));
      break;
    case MoveKind::R2Insert:
      m.site = gap(j.at("over"));
      m.under_site = gap(j.at("under"));
      m.sign = j.value("sign", +1);
      m.parallel = j.value("parallel", true);
      m.over_first = j.value("over_first", true);
      break;
    case MoveKind::R3: {
      const Json& pairs = j.at("pairs");
      m.site = gap(pairs.at(0));
      m.pair2 = gap(pairs.at(1));
      m.pair3 = gap(pairs.at(2));
      m.across = j.at("across").get<int>();
      break;
    }
  }
  return m;
}

}  // namespace vknot
