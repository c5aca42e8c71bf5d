#include "vknot/cli.hpp"

#include <CLI11.hpp>
#include <deque>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "vknot/catalog.hpp"
#include "vknot/json_io.hpp"

namespace vknot::cli {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool file_exists(const std::string& path) { return std::ifstream(path).good(); }

// CODE arguments name a catalog entry, a file holding code text, or a
// Gauss-code literal, tried in that order.
GaussCode resolve_code(const std::string& arg) {
  if (auto entry = catalog_lookup(arg)) return entry->code;
  if (file_exists(arg)) return parse_gauss(slurp(arg));
  return parse_gauss(arg);
}

FiniteGroup resolve_group(const std::string& arg) {
  for (const auto& g : groups_up_to_order_12())
    if (g.name == arg) return g;
  return group_from_json(Json::parse(slurp(arg)));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

struct Target {
  std::string spec;
  bool is_biquandle = false;
  FiniteQuandle quandle;
  FiniteBiquandle biquandle;
};

// Grammar: dihedral:n | conj:GROUP | coset:GROUP:P-elements:m |
// alexander:p,s,t | table:FILE. GROUP is a built-in group name or a JSON
// file; P-elements are comma-separated element indices.
Target parse_target(const std::string& spec) {
  Target t;
  t.spec = spec;
  auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  auto want = [&](std::size_t n) {
    if (parts.size() != n) throw Error("malformed target spec: " + spec);
  };
  if (kind == "dihedral") {
    want(2);
    t.quandle = dihedral_quandle(std::stoi(parts[1]));
  } else if (kind == "conj") {
    want(2);
    t.quandle = conjugation_quandle(resolve_group(parts[1]));
  } else if (kind == "coset") {
    want(4);
    FiniteGroup g = resolve_group(parts[1]);
    std::vector<int> p;
    for (const auto& e : split(parts[2], ',')) p.push_back(std::stoi(e));
    t.quandle = coset_quandle(g, p, std::stoi(parts[3]));
  } else if (kind == "alexander") {
    want(2);
    auto nums = split(parts[1], ',');
    if (nums.size() != 3) throw Error("alexander target needs p,s,t: " + spec);
    t.is_biquandle = true;
    t.biquandle = alexander_biquandle(std::stoi(nums[0]), std::stoi(nums[1]),
                                      std::stoi(nums[2]));
  } else if (kind == "table") {
    want(2);
    Json j = Json::parse(slurp(parts[1]));
    if (j.contains("up")) {
      t.is_biquandle = true;
      t.biquandle = biquandle_from_json(j);
    } else {
      t.quandle = quandle_from_json(j);
    }
  } else {
    throw Error("unknown target kind: " + kind);
  }
  return t;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

Json genus_json(const GaussCode& code) {
  GenusReport report = genus_report(code);
  return Json{{"input", serialize_gauss(code)},
              {"supporting_genus", report.total_genus},
              {"realizable", report.total_genus == 0},
              {"disconnected", report.disconnected},
              {"component_genera", report.component_genera}};
}

Json invariants_json(const GaussCode& code, const std::vector<std::string>& target_specs) {
  GenusReport report = genus_report(code);
  Json colorings = Json::object();
  Presentation wq = wirtinger_quandle(code);
  Presentation sb = semiarc_biquandle(code);
  for (const auto& spec : target_specs) {
    Target t = parse_target(spec);
    ColoringCount count = t.is_biquandle ? count_biquandle_colorings(sb, t.biquandle)
                                         : count_quandle_colorings(wq, t.quandle);
    colorings[spec] = to_json(count);
  }
  return Json{{"input", serialize_gauss(code)},
              {"supporting_genus", report.total_genus},
              {"realizable", report.total_genus == 0},
              {"disconnected", report.disconnected},
              {"abelianization", to_json(abelianization(wirtinger_group(code)))},
              {"colorings", colorings}};
}

Json orbit_json(const GaussCode& code, int depth, bool welded, long long max_nodes) {
  std::string start = serialize_gauss(code);
  std::set<std::string> seen{start};
  std::deque<std::pair<std::string, int>> queue{{start, 0}};
  bool truncated = false;
  while (!queue.empty()) {
    auto [cur, d] = queue.front();
    queue.pop_front();
    if (d >= depth) continue;
    GaussCode cur_code = parse_gauss(cur);
    for (const MoveInstance& m : enumerate_moves(cur_code)) {
      if (!welded && m.kind == MoveKind::Forbidden) continue;
      std::string next = serialize_gauss(apply_move(cur_code, m));
      if (seen.count(next)) continue;
      if (static_cast<long long>(seen.size()) >= max_nodes) {
        truncated = true;
        break;
      }
      seen.insert(next);
      queue.emplace_back(next, d + 1);
    }
    if (truncated) break;
  }
  return Json{{"start", start},
              {"depth", depth},
              {"welded", welded},
              {"count", seen.size()},
              {"truncated", truncated},
              {"members", std::vector<std::string>(seen.begin(), seen.end())}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gauss codes, welded moves, and quandle/biquandle invariants"};
  app.require_subcommand(1);

  std::string code_arg, kind_arg, site_arg, file_arg, name_arg;
  std::vector<std::string> target_specs;
  int depth = 1;
  bool welded = false;
  long long max_nodes = 100000;

  Json result;
  bool have_result = false;
  auto finish = [&](Json j) {
    result = std::move(j);
    have_result = true;
  };

  auto* validate_cmd = app.add_subcommand("validate", "check a code against the invariants");
  validate_cmd->add_option("code", code_arg, "catalog name, file, or code literal")
      ->required();
  validate_cmd->callback([&] {
    std::string text;
    if (auto entry = catalog_lookup(code_arg))
      text = raw_string(entry->code);
    else if (file_exists(code_arg))
      text = slurp(code_arg);
    else
      text = code_arg;
    Json violations = Json::array();
    std::string parsed;
    try {
      GaussCode code = parse_gauss(text);
      parsed = serialize_gauss(code);
    } catch (const ParseError& e) {
      finish(Json{{"input", text}, {"valid", false},
                  {"violations", Json::array({Json{{"kind", "syntax"}, {"message", e.what()}}})}});
      return;
    } catch (const InvalidCodeError& e) {
      finish(Json{{"input", text}, {"valid", false},
                  {"violations", Json::array({Json{{"kind", "semantic"}, {"message", e.what()}}})}});
      return;
    }
    finish(Json{{"input", parsed}, {"valid", true}, {"violations", violations}});
  });

  auto* genus_cmd = app.add_subcommand("genus", "supporting genus and realizability");
  genus_cmd->add_option("code", code_arg)->required();
  genus_cmd->callback([&] { finish(genus_json(resolve_code(code_arg))); });

  auto* inv_cmd = app.add_subcommand("invariants", "full invariant report");
  inv_cmd->add_option("code", code_arg)->required();
  inv_cmd->add_option("--targets", target_specs, "coloring targets (dihedral:n, conj:G, "
                      "coset:G:P:m, alexander:p,s,t, table:FILE)");
  inv_cmd->callback([&] { finish(invariants_json(resolve_code(code_arg), target_specs)); });

  auto* present_cmd = app.add_subcommand("present", "presentation extracted from a code");
  present_cmd->add_option("code", code_arg)->required();
  present_cmd->add_option("--kind", kind_arg, "quandle|group|biquandle")->required();
  present_cmd->callback([&] {
    GaussCode code = resolve_code(code_arg);
    if (kind_arg == "quandle")
      finish(to_json(wirtinger_quandle(code)));
    else if (kind_arg == "group")
      finish(to_json(wirtinger_group(code)));
    else if (kind_arg == "biquandle")
      finish(to_json(semiarc_biquandle(code)));
    else
      throw Error("unknown presentation kind: " + kind_arg);
  });

  auto* abel_cmd = app.add_subcommand("abelianize", "abelianization of the Wirtinger group");
  abel_cmd->add_option("code", code_arg)->required();
  abel_cmd->callback([&] {
    GaussCode code = resolve_code(code_arg);
    Json j = to_json(abelianization(wirtinger_group(code)));
    j["input"] = serialize_gauss(code);
    finish(j);
  });

  auto* move_cmd = app.add_subcommand("move", "apply moves or search the move orbit");
  move_cmd->require_subcommand(1);
  auto* apply_cmd = move_cmd->add_subcommand("apply", "apply one move");
  apply_cmd->add_option("code", code_arg)->required();
  apply_cmd->add_option("--kind", kind_arg, "R1_insert|R1_delete|R2_insert|R2_delete|R3|Forbidden")
      ->required();
  apply_cmd->add_option("--site", site_arg, "site JSON (see move JSON schema)")->required();
  apply_cmd->callback([&] {
    GaussCode code = resolve_code(code_arg);
    Json site = Json::parse(site_arg);
    site["kind"] = kind_arg;
    MoveInstance m = move_from_json(site);
    GaussCode moved = apply_move(code, m);
    finish(Json{{"input", serialize_gauss(code)},
                {"move", to_json(m)},
                {"result", serialize_gauss(moved)}});
  });
  auto* orbit_cmd = move_cmd->add_subcommand("orbit", "breadth-first move orbit");
  orbit_cmd->add_option("code", code_arg)->required();
  orbit_cmd->add_option("--depth", depth, "breadth-first depth")->required();
  orbit_cmd->add_flag("--welded", welded, "also allow the forbidden move");
  orbit_cmd->add_option("--max-nodes", max_nodes, "node cap (default 100000)");
  orbit_cmd->callback(
      [&] { finish(orbit_json(resolve_code(code_arg), depth, welded, max_nodes)); });

  auto* tube_cmd = app.add_subcommand("tube", "Satoh tube map: welded knot to ribbon data");
  tube_cmd->add_option("code", code_arg)->required();
  tube_cmd->callback([&] { finish(to_json(tube(resolve_code(code_arg)))); });

  auto* rq_cmd = app.add_subcommand("ribbon-quandle", "quandle presentation of ribbon data");
  rq_cmd->add_option("file", file_arg, "ribbon data JSON file")->required();
  rq_cmd->callback(
      [&] { finish(to_json(ribbon_quandle(ribbon_from_json(Json::parse(slurp(file_arg)))))); });

  auto* spin_cmd = app.add_subcommand("spin", "double point data of the spun torus");
  spin_cmd->add_option("code", code_arg)->required();
  spin_cmd->callback([&] { finish(to_json(spin(resolve_code(code_arg)))); });

  auto* catalog_cmd = app.add_subcommand("catalog", "built-in named codes");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "list catalog entries");
  list_cmd->callback([&] {
    Json entries = Json::array();
    for (const auto& entry : vknot::catalog())
      entries.push_back(Json{{"name", entry.name},
                             {"code", raw_string(entry.code)},
                             {"notes", entry.notes}});
    finish(entries);
  });
  auto* show_cmd = catalog_cmd->add_subcommand("show", "show one catalog entry");
  show_cmd->add_option("name", name_arg)->required();
  show_cmd->callback([&] {
    auto entry = catalog_lookup(name_arg);
    if (!entry) throw Error("no catalog entry named '" + name_arg + "'");
    finish(Json{{"name", entry->name},
                {"code", raw_string(entry->code)},
                {"canonical", serialize_gauss(entry->code)},
                {"notes", entry->notes}});
  });

  std::vector<const char*> argv;
  argv.push_back("vknot");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    emit(out, Json{{"error", e.what()}});
    return 1;
  } catch (const nlohmann::json::exception& e) {
    emit(out, Json{{"error", e.what()}});
    return 1;
  } catch (const std::exception& e) {
    emit(out, Json{{"error", e.what()}});
    return 1;
  }
  if (have_result) emit(out, result);
  return 0;
}

}  // namespace vknot::cli
