#include "vknot/gauss.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace vknot {

int GaussCode::passage_count() const {
  int n = 0;
  for (const auto& comp : components) n += static_cast<int>(comp.size());
  return n;
}

int GaussCode::crossing_count() const { return passage_count() / 2; }

int GaussCode::max_crossing_id() const {
  int m = 0;
  for (const auto& comp : components)
    for (const auto& p : comp) m = std::max(m, p.crossing);
  return m;
}

std::optional<std::pair<int, int>> GaussCode::find(int crossing, Role role) const {
  for (int c = 0; c < static_cast<int>(components.size()); ++c)
    for (int p = 0; p < static_cast<int>(components[c].size()); ++p)
      if (components[c][p].crossing == crossing && components[c][p].role == role)
        return std::make_pair(c, p);
  return std::nullopt;
}

std::vector<Violation> validate(const GaussCode& code) {
  std::vector<Violation> out;
  struct Seen {
    int over = 0, under = 0;
    int first_sign = 0;
    bool sign_clash = false;
  };
  std::map<int, Seen> seen;
  for (const auto& comp : code.components) {
    for (const auto& pass : comp) {
      if (pass.crossing < 1)
        out.push_back({ViolationKind::BadCrossingId, pass.crossing,
                       "crossing id " + std::to_string(pass.crossing) + " is not positive"});
      if (pass.sign != 1 && pass.sign != -1)
        out.push_back({ViolationKind::BadSign, pass.crossing,
                       "crossing " + std::to_string(pass.crossing) + " has sign " +
                           std::to_string(pass.sign)});
      Seen& s = seen[pass.crossing];
      (pass.role == Role::Over ? s.over : s.under)++;
      if (s.first_sign == 0)
        s.first_sign = pass.sign;
      else if (s.first_sign != pass.sign)
        s.sign_clash = true;
    }
  }
  for (const auto& [id, s] : seen) {
    if (s.over > 1)
      out.push_back({ViolationKind::DuplicateRole, id,
                     "id " + std::to_string(id) + " appears " + std::to_string(s.over) +
                         " times as Over"});
    if (s.under > 1)
      out.push_back({ViolationKind::DuplicateRole, id,
                     "id " + std::to_string(id) + " appears " + std::to_string(s.under) +
                         " times as Under"});
    if (s.over != 1 || s.under != 1)
      if (s.over <= 1 && s.under <= 1)
        out.push_back({ViolationKind::UnpairedCrossing, id,
                       "id " + std::to_string(id) + " appears " +
                           std::to_string(s.over + s.under) + " time(s) in total"});
    if (s.sign_clash)
      out.push_back({ViolationKind::SignMismatch, id,
                     "the two passages of id " + std::to_string(id) +
                         " carry different signs"});
  }
  return out;
}

bool is_valid(const GaussCode& code) { return validate(code).empty(); }

void require_valid(const GaussCode& code) {
  auto v = validate(code);
  if (v.empty()) return;
  std::string msg = "invalid Gauss code:";
  for (const auto& viol : v) msg += " " + viol.message + ";";
  throw InvalidCodeError(msg);
}

namespace {

void append_token(std::string& out, const Passage& p) {
  out += (p.role == Role::Over ? 'O' : 'U');
  out += std::to_string(p.crossing);
  out += (p.sign > 0 ? '+' : '-');
}

}  // namespace

std::string raw_string(const GaussCode& code) {
  std::string out;
  for (std::size_t c = 0; c < code.components.size(); ++c) {
    if (c) out += "; ";
    if (code.components[c].empty()) {
      out += "()";
      continue;
    }
    for (std::size_t p = 0; p < code.components[c].size(); ++p) {
      if (p) out += ' ';
      append_token(out, code.components[c][p]);
    }
  }
  if (code.components.empty()) out = "()";
  return out;
}

GaussCode parse_gauss(const std::string& text) {
  GaussCode code;
  // Split on ';', tracking offsets for error messages.
  std::vector<std::pair<std::string, std::size_t>> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t semi = text.find(';', start);
    parts.emplace_back(text.substr(start, semi - start), start);
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  for (auto& [part, offset] : parts) {
    std::size_t lead = part.find_first_not_of(" \t\r\n");
    if (lead == std::string::npos) {
      part.clear();
    } else {
      std::size_t tail = part.find_last_not_of(" \t\r\n");
      offset += lead;
      part = part.substr(lead, tail - lead + 1);
    }
  }
  // Whole-input empty: the crossingless unknot.
  if (parts.size() == 1 && parts[0].first.empty()) {
    code.components.emplace_back();
    return code;
  }
  for (const auto& [part, offset] : parts) {
    if (part.empty())
      throw ParseError("empty component (expected tokens or \"()\")", offset);
    if (part == "()") {
      code.components.emplace_back();
      continue;
    }
    Component comp;
    std::size_t i = 0;
    while (i < part.size()) {
      while (i < part.size() && std::isspace(static_cast<unsigned char>(part[i]))) ++i;
      if (i >= part.size()) break;
      Passage pass;
      char roleChar = part[i];
      if (roleChar == 'O')
        pass.role = Role::Over;
      else if (roleChar == 'U')
        pass.role = Role::Under;
      else
        throw ParseError(std::string("expected 'O' or 'U', found '") + roleChar + "'",
                         offset + i);
      ++i;
      std::size_t digitsStart = i;
      while (i < part.size() && std::isdigit(static_cast<unsigned char>(part[i]))) ++i;
      if (i == digitsStart)
        throw ParseError("expected a crossing id", offset + i);
      long id = 0;
      for (std::size_t d = digitsStart; d < i; ++d) {
        id = id * 10 + (part[d] - '0');
        if (id > 1000000) throw ParseError("crossing id too large", offset + digitsStart);
      }
      if (id < 1) throw ParseError("crossing id must be positive", offset + digitsStart);
      pass.crossing = static_cast<int>(id);
      if (i >= part.size())
        throw ParseError("expected '+' or '-' after crossing id", offset + i);
      if (part[i] == '+')
        pass.sign = +1;
      else if (part[i] == '-')
        pass.sign = -1;
      else
        throw ParseError(std::string("expected '+' or '-', found '") + part[i] + "'",
                         offset + i);
      ++i;
      comp.push_back(pass);
    }
    if (comp.empty())
      throw ParseError("empty component (expected tokens or \"()\")", offset);
    code.components.push_back(std::move(comp));
  }
  require_valid(code);
  return code;
}

namespace {

// Serializes one arrangement (component order + rotations), relabeling ids
// by first appearance.
std::string arrangement_string(const GaussCode& code, const std::vector<int>& order,
                               const std::vector<int>& rotations) {
  std::string out;
  std::map<int, int> relabel;
  int next_id = 1;
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    if (oi) out += "; ";
    const Component& comp = code.components[order[oi]];
    if (comp.empty()) {
      out += "()";
      continue;
    }
    int m = static_cast<int>(comp.size());
    int rot = rotations[order[oi]];
    for (int p = 0; p < m; ++p) {
      if (p) out += ' ';
      Passage pass = comp[(p + rot) % m];
      auto it = relabel.find(pass.crossing);
      if (it == relabel.end()) it = relabel.emplace(pass.crossing, next_id++).first;
      pass.crossing = it->second;
      append_token(out, pass);
    }
  }
  if (order.empty()) out = "()";
  return out;
}

}  // namespace

std::string serialize_gauss(const GaussCode& code) {
  int nc = static_cast<int>(code.components.size());
  if (nc == 0) return "()";
  std::vector<int> order(nc);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> rotations(nc, 0);
  std::string best;
  // Enumerate component orderings and rotations; keep the least string.
  std::sort(order.begin(), order.end());
  do {
    std::fill(rotations.begin(), rotations.end(), 0);
    while (true) {
      std::string s = arrangement_string(code, order, rotations);
      if (best.empty() || s < best) best = std::move(s);
      // Odometer over rotations.
      int k = 0;
      for (; k < nc; ++k) {
        int m = std::max<std::size_t>(code.components[k].size(), 1);
        if (++rotations[k] < m) break;
        rotations[k] = 0;
      }
      if (k == nc) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

GaussCode canonicalize(const GaussCode& code) { return parse_gauss(serialize_gauss(code)); }

bool canonically_equal(const GaussCode& a, const GaussCode& b) {
  return serialize_gauss(a) == serialize_gauss(b);
}

namespace {

// Half-edge machinery for boundary-circle tracing. Slots at a crossing, in
// rotation order for a positive crossing; a negative crossing swaps the over
// slots (mirror of the over strand).
enum Slot { UnderIn = 0, OverIn = 1, UnderOut = 2, OverOut = 3 };

struct EdgeEnd {
  int edge = -1;
  bool at_end = false;  // true: this is the edge's head attachment
};

}  // namespace

GenusReport genus_report(const GaussCode& code) {
  require_valid(code);
  GenusReport report;

  // Map crossing ids to vertex indices.
  std::map<int, int> vertex_of;
  for (const auto& comp : code.components)
    for (const auto& p : comp)
      if (!vertex_of.count(p.crossing))
        vertex_of.emplace(p.crossing, static_cast<int>(vertex_of.size()));
  int V = static_cast<int>(vertex_of.size());

  // Edges: one per consecutive token pair within each nonempty component.
  // attach[v][slot] describes which edge end occupies that slot.
  struct Edge {
    int tail_vertex, head_vertex;
  };
  std::vector<Edge> edges;
  std::vector<std::array<EdgeEnd, 4>> attach(V);
  int circles = 0;  // crossingless components
  for (const auto& comp : code.components) {
    int m = static_cast<int>(comp.size());
    if (m == 0) {
      ++circles;
      continue;
    }
    for (int p = 0; p < m; ++p) {
      const Passage& from = comp[p];
      const Passage& to = comp[(p + 1) % m];
      int e = static_cast<int>(edges.size());
      int vt = vertex_of[from.crossing];
      int vh = vertex_of[to.crossing];
      edges.push_back({vt, vh});
      Slot out_slot = from.role == Role::Under ? UnderOut : OverOut;
      Slot in_slot = to.role == Role::Under ? UnderIn : OverIn;
      attach[vt][out_slot] = {e, false};
      attach[vh][in_slot] = {e, true};
    }
  }
  int E = static_cast<int>(edges.size());

  // Rotation order per vertex.
  std::map<int, int> sign_of;
  for (const auto& comp : code.components)
    for (const auto& p : comp) sign_of[p.crossing] = p.sign;
  std::vector<std::array<int, 4>> rotation(V);
  for (const auto& [id, v] : vertex_of) {
    if (sign_of[id] > 0)
      rotation[v] = {UnderIn, OverIn, UnderOut, OverOut};
    else
      rotation[v] = {UnderIn, OverOut, UnderOut, OverIn};
  }

  // Darts: 2*e (toward head), 2*e+1 (toward tail). Face successor: arrive at
  // (v, slot), step to the rotation-next slot, leave along its edge.
  auto arrival = [&](int dart) -> std::pair<int, Slot> {
    int e = dart / 2;
    bool toward_head = (dart % 2) == 0;
    int v = toward_head ? edges[e].head_vertex : edges[e].tail_vertex;
    // Find which slot of v this dart's attachment occupies.
    for (int s = 0; s < 4; ++s) {
      const EdgeEnd& ee = attach[v][s];
      if (ee.edge == e && ee.at_end == toward_head) return {v, static_cast<Slot>(s)};
    }
    throw Error("internal: dart attachment not found");
  };
  auto successor = [&](int dart) -> int {
    auto [v, slot] = arrival(dart);
    int idx = 0;
    while (rotation[v][idx] != slot) ++idx;
    int next_slot = rotation[v][(idx + 1) % 4];
    const EdgeEnd& ee = attach[v][next_slot];
    // Leave v along ee.edge: if the occupant is the head attachment, travel
    // head->tail (dart 2e+1), else tail->head (dart 2e).
    return ee.at_end ? 2 * ee.edge + 1 : 2 * ee.edge;
  };

  // Connected pieces of the 4-valent graph.
  std::vector<int> parent(V);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find_root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) parent[find_root(e.tail_vertex)] = find_root(e.head_vertex);

  // Count faces per piece.
  std::map<int, int> piece_faces, piece_vertices, piece_edges;
  for (int v = 0; v < V; ++v) piece_vertices[find_root(v)]++;
  for (const auto& e : edges) piece_edges[find_root(e.tail_vertex)]++;
  std::vector<char> visited(2 * E, 0);
  for (int d = 0; d < 2 * E; ++d) {
    if (visited[d]) continue;
    int cur = d;
    do {
      visited[cur] = 1;
      cur = successor(cur);
    } while (cur != d);
    piece_faces[find_root(edges[d / 2].tail_vertex)]++;
  }

  for (const auto& [root, nv] : piece_vertices) {
    int chi = nv - piece_edges[root] + piece_faces[root];
    if ((2 - chi) % 2 != 0 || chi > 2)
      throw Error("internal: boundary trace produced chi=" + std::to_string(chi));
    report.component_genera.push_back((2 - chi) / 2);
  }
  for (int i = 0; i < circles; ++i) report.component_genera.push_back(0);
  report.total_genus = std::accumulate(report.component_genera.begin(),
                                       report.component_genera.end(), 0);
  report.disconnected = report.component_genera.size() > 1;
  return report;
}

int supporting_genus(const GaussCode& code) { return genus_report(code).total_genus; }

bool is_realizable(const GaussCode& code) { return supporting_genus(code) == 0; }

}  // namespace vknot
