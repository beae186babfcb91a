#include "kostant/diagram.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

namespace kostant {

std::vector<int> members(NodeSet s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1)
    if (s & 1u) out.push_back(i);
  return out;
}

NodeSet Component::nodes() const {
  NodeSet s = 0;
  for (int i : bourbaki) s |= bit(i);
  return s;
}

int Component::bourbaki_number(int index) const {
  for (std::size_t k = 0; k < bourbaki.size(); ++k)
    if (bourbaki[k] == index) return static_cast<int>(k) + 1;
  return 0;
}

namespace {

std::vector<std::vector<int>> cartan_from_bonds(int n, const std::vector<Bond>& bonds) {
  std::vector<std::vector<int>> c(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  for (const Bond& b : bonds) {
    c[static_cast<std::size_t>(b.a)][static_cast<std::size_t>(b.b)] = -1;
    c[static_cast<std::size_t>(b.b)][static_cast<std::size_t>(b.a)] = -b.multiplicity;
  }
  return c;
}

// Bonds of the Bourbaki diagram X_n with 0-based node indices.
std::vector<Bond> standard_bonds(char type, int n) {
  std::vector<Bond> b;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) b.push_back({i, i + 1, 1});
  };
  switch (type) {
    case 'A':
      if (n < 1) break;
      chain(n);
      return b;
    case 'B':
      if (n < 1) break;
      chain(n - 1);
      if (n >= 2) b.push_back({n - 2, n - 1, 2});
      return b;
    case 'C':
      if (n < 1) break;
      chain(n - 1);
      if (n >= 2) b.push_back({n - 1, n - 2, 2});
      return b;
    case 'D':
      if (n < 2) break;
      chain(n - 1);
      if (n >= 3) b.push_back({n - 3, n - 1, 1});
      return b;
    case 'E':
      if (n < 6 || n > 8) break;
      b.push_back({0, 2, 1});
      for (int i = 2; i + 1 < n; ++i) b.push_back({i, i + 1, 1});
      b.push_back({1, 3, 1});
      return b;
    case 'F':
      if (n != 4) break;
      b = {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}};
      return b;
    case 'G':
      if (n != 2) break;
      b = {{1, 0, 3}};
      return b;
    default:
      break;
  }
  throw DiagramError(std::string("unsupported Dynkin type ") + type + std::to_string(n));
}

// Diagram automorphisms of a Bourbaki-numbered type as permutations of
// 1-based node numbers (index 0 unused).
std::vector<std::vector<int>> automorphisms(char type, int n) {
  std::vector<int> id(static_cast<std::size_t>(n) + 1);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> out{id};
  if (type == 'A' && n >= 2) {
    auto r = id;
    for (int k = 1; k <= n; ++k) r[static_cast<std::size_t>(k)] = n + 1 - k;
    out.push_back(r);
  } else if (type == 'D' && n == 4) {
    std::array<int, 3> legs{1, 3, 4};
    std::array<int, 3> p = legs;
    while (std::next_permutation(p.begin(), p.end())) {
      auto r = id;
      for (int k = 0; k < 3; ++k) r[static_cast<std::size_t>(legs[static_cast<std::size_t>(k)])] = p[static_cast<std::size_t>(k)];
      out.push_back(r);
    }
  } else if (type == 'D' && n >= 5) {
    auto r = id;
    std::swap(r[static_cast<std::size_t>(n - 1)], r[static_cast<std::size_t>(n)]);
    out.push_back(r);
  } else if (type == 'E' && n == 6) {
    auto r = id;
    r[1] = 6;
    r[6] = 1;
    r[3] = 5;
    r[5] = 3;
    out.push_back(r);
  }
  return out;
}

std::string bond_desc(const MarkedDiagram& d, int a, int b) {
  return "bond " + std::to_string(d.id(a)) + "-" + std::to_string(d.id(b));
}

// Type recognition of one connected component given as a node set.
Component recognize(const MarkedDiagram& d, NodeSet comp) {
  const std::vector<int> nodes = members(comp);
  const int n = static_cast<int>(nodes.size());
  Component c;
  c.rank = n;
  if (n == 1) {
    c.type = 'A';
    c.bourbaki = nodes;
    return c;
  }

  int bond_count = 0;
  std::vector<std::pair<int, int>> multi;  // (long, short) ends of multiple bonds
  int triple = 0;
  for (int i : nodes) {
    for (int j : nodes) {
      if (j <= i || d.cartan(i, j) == 0) continue;
      ++bond_count;
      const int m = d.cartan(i, j) * d.cartan(j, i);
      if (m < 1 || m > 3) throw DiagramError(bond_desc(d, i, j) + " has unsupported multiplicity");
      if (m > 1) {
        const int lng = d.cartan(i, j) == -1 ? i : j;
        multi.push_back({lng, lng == i ? j : i});
        if (m == 3) ++triple;
      }
    }
  }
  if (bond_count != n - 1) {
    throw DiagramError("component containing node " + std::to_string(d.id(nodes[0])) +
                       " contains a cycle; not a finite Dynkin diagram");
  }
  auto degree = [&](int i) { return popcount(d.neighbours(i) & comp); };
  for (int i : nodes)
    if (degree(i) > 3) throw DiagramError("node " + std::to_string(d.id(i)) + " has degree > 3");

  // Chain walk from an endpoint.
  auto chain_from = [&](int start) {
    std::vector<int> order{start};
    int prev = -1;
    int cur = start;
    while (true) {
      int next = -1;
      for (int j : members(d.neighbours(cur) & comp))
        if (j != prev) next = j;
      if (next < 0) break;
      prev = cur;
      cur = next;
      order.push_back(cur);
    }
    return order;
  };

  const bool is_chain = std::all_of(nodes.begin(), nodes.end(), [&](int i) { return degree(i) <= 2; });

  if (!multi.empty()) {
    if (multi.size() > 1) throw DiagramError("component containing node " + std::to_string(d.id(nodes[0])) + " has several multiple bonds");
    if (!is_chain) throw DiagramError("multiple bond at a branched component; node " + std::to_string(d.id(multi[0].first)));
    const auto [lng, sht] = multi[0];
    if (triple) {
      if (n != 2) throw DiagramError("triple " + bond_desc(d, lng, sht) + " in a component of rank != 2");
      c.type = 'G';
      c.bourbaki = {sht, lng};
      return c;
    }
    if (n == 2) {
      c.type = 'B';
      c.bourbaki = {lng, sht};
      return c;
    }
    const bool lend = degree(lng) == 1;
    const bool send = degree(sht) == 1;
    if (send) {
      c.type = 'B';
      auto ord = chain_from(sht);
      std::reverse(ord.begin(), ord.end());
      c.bourbaki = ord;
      return c;
    }
    if (lend) {
      c.type = 'C';
      auto ord = chain_from(lng);
      std::reverse(ord.begin(), ord.end());
      c.bourbaki = ord;
      return c;
    }
    if (n == 4) {
      // Middle double bond: F4 with the long side first.
      int lend_node = -1;
      for (int j : members(d.neighbours(lng) & comp))
        if (j != sht) lend_node = j;
      c.type = 'F';
      c.bourbaki = chain_from(lend_node);
      return c;
    }
    throw DiagramError("multiple " + bond_desc(d, lng, sht) + " is not at a valid position");
  }

  if (is_chain) {
    int start = -1;
    for (int i : nodes)
      if (degree(i) == 1) {
        start = i;
        break;
      }
    c.type = 'A';
    c.bourbaki = chain_from(start);
    return c;
  }

  std::vector<int> branch;
  for (int i : nodes)
    if (degree(i) == 3) branch.push_back(i);
  if (branch.size() != 1) throw DiagramError("component containing node " + std::to_string(d.id(nodes[0])) + " has several branch nodes");
  const int center = branch[0];
  // Arms as node lists starting next to the centre.
  std::vector<std::vector<int>> arms;
  for (int j : members(d.neighbours(center) & comp)) {
    std::vector<int> arm{j};
    int prev = center;
    int cur = j;
    while (true) {
      int next = -1;
      for (int k : members(d.neighbours(cur) & comp))
        if (k != prev) next = k;
      if (next < 0) break;
      prev = cur;
      cur = next;
      arm.push_back(cur);
    }
    arms.push_back(arm);
  }
  std::stable_sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.back() < y.back();
  });
  const std::size_t p = arms[0].size(), q = arms[1].size(), r = arms[2].size();
  if (p == 1 && q == 1) {
    c.type = 'D';
    // D4: take the smallest-index leg as alpha_1
    if (r == 1) std::rotate(arms.begin(), arms.begin() + 1, arms.end());
    std::vector<int> ord(arms[2].rbegin(), arms[2].rend());
    ord.push_back(center);
    ord.push_back(arms[0][0]);
    ord.push_back(arms[1][0]);
    c.bourbaki = ord;
    return c;
  }
  if (p == 1 && q == 2 && r >= 2 && r <= 4) {
    c.type = 'E';
    c.bourbaki = {arms[1][1], arms[0][0], arms[1][0], center};
    for (int k : arms[2]) c.bourbaki.push_back(k);
    return c;
  }
  throw DiagramError("branched component at node " + std::to_string(d.id(center)) + " is not of type D or E");
}

}  // namespace

MarkedDiagram::MarkedDiagram(std::vector<int> ids, std::vector<std::vector<int>> cartan)
    : ids_(std::move(ids)), labels_(ids_.size()), cartan_(std::move(cartan)) {
  if (ids_.size() > static_cast<std::size_t>(kMaxRank)) throw DiagramError("diagram rank exceeds " + std::to_string(kMaxRank));
  std::set<int> seen;
  for (int id : ids_)
    if (!seen.insert(id).second) throw DiagramError("duplicate node id " + std::to_string(id));
  validate_cartan();
}

void MarkedDiagram::validate_cartan() const {
  const std::size_t n = ids_.size();
  if (cartan_.size() != n) throw DiagramError("Cartan matrix has wrong dimension");
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan_[i].size() != n) throw DiagramError("Cartan matrix has wrong dimension");
    if (cartan_[i][i] != 2) throw DiagramError("diagonal Cartan entry at node " + std::to_string(ids_[i]) + " is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const int a = cartan_[i][j], b = cartan_[j][i];
      if (a > 0 || (a == 0) != (b == 0))
        throw DiagramError("invalid Cartan entries on bond " + std::to_string(ids_[i]) + "-" + std::to_string(ids_[j]));
      if (a != 0 && a != -1 && b != -1)
        throw DiagramError("bond " + std::to_string(ids_[i]) + "-" + std::to_string(ids_[j]) + " is not a Dynkin bond");
    }
  }
}

MarkedDiagram MarkedDiagram::standard(char type, int rank) {
  auto bonds = standard_bonds(type, rank);
  std::vector<int> ids(static_cast<std::size_t>(rank));
  std::iota(ids.begin(), ids.end(), 1);
  return MarkedDiagram(std::move(ids), cartan_from_bonds(rank, bonds));
}

MarkedDiagram MarkedDiagram::from_type_string(std::string_view s) {
  std::vector<std::pair<char, int>> parts;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const char t = static_cast<char>(std::toupper(static_cast<unsigned char>(s[pos])));
    if (t < 'A' || t > 'G') throw DiagramError("cannot parse diagram type '" + std::string(s) + "'");
    ++pos;
    int r = 0;
    const auto res = std::from_chars(s.data() + pos, s.data() + s.size(), r);
    if (res.ec != std::errc() || r <= 0) throw DiagramError("cannot parse rank in '" + std::string(s) + "'");
    pos = static_cast<std::size_t>(res.ptr - s.data());
    parts.push_back({t, r});
    if (pos < s.size()) {
      if (s[pos] != 'x' && s[pos] != 'X' && s[pos] != '*') throw DiagramError("cannot parse diagram type '" + std::string(s) + "'");
      ++pos;
    }
  }
  if (parts.empty()) throw DiagramError("empty diagram type");
  int n = 0;
  for (auto [t, r] : parts) n += r;
  std::vector<Bond> bonds;
  int off = 0;
  for (auto [t, r] : parts) {
    for (Bond b : standard_bonds(t, r)) bonds.push_back({b.a + off, b.b + off, b.multiplicity});
    off += r;
  }
  std::vector<int> ids(static_cast<std::size_t>(n));
  std::iota(ids.begin(), ids.end(), 1);
  return MarkedDiagram(std::move(ids), cartan_from_bonds(n, bonds));
}

namespace {

std::vector<int> parse_refs(const MarkedDiagram& d, const nlohmann::json& arr, const char* what) {
  std::vector<int> out;
  if (arr.is_null()) return out;
  if (!arr.is_array()) throw DiagramError(std::string("'") + what + "' must be an array");
  for (const auto& x : arr) {
    if (x.is_number_integer()) {
      out.push_back(d.index_of(x.get<int>()));
    } else if (x.is_string()) {
      out.push_back(d.resolve(x.get<std::string>()));
    } else {
      throw DiagramError(std::string("bad node reference in '") + what + "'");
    }
  }
  return out;
}

}  // namespace

MarkedDiagram MarkedDiagram::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DiagramError("diagram JSON must be an object");
  MarkedDiagram d;
  if (j.contains("type")) {
    std::string t = j.at("type").get<std::string>();
    if (j.contains("rank")) t += std::to_string(j.at("rank").get<int>());
    d = from_type_string(t);
  } else if (j.contains("nodes")) {
    std::vector<int> ids = j.at("nodes").get<std::vector<int>>();
    MarkedDiagram tmp(ids, cartan_from_bonds(static_cast<int>(ids.size()), {}));
    std::vector<Bond> bonds;
    if (j.contains("edges")) {
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3) throw DiagramError("edge must be [a,b] or [a,b,multiplicity]");
        const int a = tmp.index_of(e[0].get<int>());
        const int b = tmp.index_of(e[1].get<int>());
        const int m = e.size() == 3 ? e[2].get<int>() : 1;
        if (a == b) throw DiagramError("loop at node " + std::to_string(e[0].get<int>()));
        if (m < 1 || m > 3) throw DiagramError("edge " + std::to_string(e[0].get<int>()) + "-" + std::to_string(e[1].get<int>()) + " has unsupported multiplicity");
        bonds.push_back({a, b, m});
      }
    }
    d = MarkedDiagram(std::move(ids), cartan_from_bonds(static_cast<int>(tmp.size()), bonds));
  } else {
    throw DiagramError("diagram JSON needs 'type' or 'nodes'");
  }
  if (j.contains("labels")) {
    for (const auto& [k, v] : j.at("labels").items()) {
      int id = 0;
      const auto res = std::from_chars(k.data(), k.data() + k.size(), id);
      if (res.ec != std::errc()) throw DiagramError("label key '" + k + "' is not a node id");
      d.set_label(d.index_of(id), v.get<std::string>());
    }
  }
  NodeSet crossed = 0, singular = 0;
  for (int i : parse_refs(d, j.value("crossed", nlohmann::json()), "crossed")) crossed |= bit(i);
  for (int i : parse_refs(d, j.value("singular", nlohmann::json()), "singular")) singular |= bit(i);
  d.crossed_ = crossed;
  d.singular_ = singular;
  d.components();  // validates finite type
  return d;
}

int MarkedDiagram::index_of(int id) const {
  if (auto i = find(id)) return *i;
  throw DiagramError("no node with id " + std::to_string(id));
}

std::optional<int> MarkedDiagram::find(int id) const {
  for (std::size_t i = 0; i < ids_.size(); ++i)
    if (ids_[i] == id) return static_cast<int>(i);
  return std::nullopt;
}

int MarkedDiagram::resolve(std::string_view ref) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (!labels_[i].empty() && labels_[i] == ref) return static_cast<int>(i);
  int id = 0;
  const auto res = std::from_chars(ref.data(), ref.data() + ref.size(), id);
  if (res.ec == std::errc() && res.ptr == ref.data() + ref.size()) return index_of(id);
  throw DiagramError("unknown node reference '" + std::string(ref) + "'");
}

std::vector<Bond> MarkedDiagram::bonds() const {
  std::vector<Bond> out;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) {
      if (cartan(i, j) == 0) continue;
      const int m = cartan(i, j) * cartan(j, i);
      if (m == 1) out.push_back({i, j, 1});
      else if (cartan(i, j) == -1) out.push_back({i, j, m});
      else out.push_back({j, i, m});
    }
  return out;
}

NodeSet MarkedDiagram::neighbours(int i) const {
  NodeSet s = 0;
  for (int j = 0; j < size(); ++j)
    if (j != i && cartan(i, j) != 0) s |= bit(j);
  return s;
}

bool MarkedDiagram::simply_laced() const {
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (i != j && cartan(i, j) < -1) return false;
  return true;
}

MarkedDiagram MarkedDiagram::with_crossed(NodeSet c) const {
  MarkedDiagram d = *this;
  d.crossed_ = c & all();
  return d;
}

MarkedDiagram MarkedDiagram::with_singular(NodeSet j) const {
  MarkedDiagram d = *this;
  d.singular_ = j & all();
  return d;
}

MarkedDiagram MarkedDiagram::with_crossed_ids(const std::vector<int>& ids) const {
  NodeSet c = 0;
  for (int id : ids) c |= bit(index_of(id));
  return with_crossed(c);
}

MarkedDiagram MarkedDiagram::with_singular_ids(const std::vector<int>& ids) const {
  NodeSet s = 0;
  for (int id : ids) s |= bit(index_of(id));
  return with_singular(s);
}

std::vector<NodeSet> MarkedDiagram::connected_components() const {
  std::vector<NodeSet> out;
  NodeSet seen = 0;
  for (int i = 0; i < size(); ++i) {
    if (contains(seen, i)) continue;
    NodeSet comp = bit(i), frontier = bit(i);
    while (frontier) {
      NodeSet next = 0;
      for (int k : members(frontier)) next |= neighbours(k);
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

std::vector<Component> MarkedDiagram::components() const {
  std::vector<Component> out;
  for (NodeSet comp : connected_components()) {
    Component c = recognize(*this, comp);
    // The recognized numbering must reproduce the standard Cartan matrix.
    const MarkedDiagram ref = standard(c.type, c.rank);
    for (int a = 0; a < c.rank; ++a)
      for (int b = 0; b < c.rank; ++b)
        if (cartan(c.bourbaki[static_cast<std::size_t>(a)], c.bourbaki[static_cast<std::size_t>(b)]) != ref.cartan(a, b))
          throw DiagramError("component " + c.name() + " at node " + std::to_string(id(c.bourbaki[0])) +
                             " has an inconsistent bond orientation");
    out.push_back(std::move(c));
  }
  return out;
}

bool MarkedDiagram::finite_type() const {
  try {
    components();
    return true;
  } catch (const DiagramError&) {
    return false;
  }
}

std::string MarkedDiagram::type_name() const {
  std::string s;
  for (const Component& c : components()) {
    if (!s.empty()) s += "x";
    s += c.name();
  }
  return s;
}

std::string MarkedDiagram::signature() const {
  if (empty()) return "empty";
  std::vector<std::string> parts;
  for (const Component& c : components()) {
    std::vector<int> marked;
    for (int k = 1; k <= c.rank; ++k)
      if (contains(crossed_, c.bourbaki[static_cast<std::size_t>(k - 1)])) marked.push_back(k);
    std::vector<int> best;
    bool first = true;
    for (const auto& perm : automorphisms(c.type, c.rank)) {
      std::vector<int> img;
      for (int k : marked) img.push_back(perm[static_cast<std::size_t>(k)]);
      std::sort(img.begin(), img.end());
      if (first || img < best) best = img;
      first = false;
    }
    std::string s = c.name() + "[";
    for (std::size_t i = 0; i < best.size(); ++i) s += (i ? "," : "") + std::to_string(best[i]);
    parts.push_back(s + "]");
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "x") + p;
  return out;
}

nlohmann::json MarkedDiagram::to_json() const {
  nlohmann::json j;
  j["nodes"] = ids_;
  j["cartan"] = cartan_;
  std::vector<int> c, s;
  for (int i : members(crossed_)) c.push_back(id(i));
  for (int i : members(singular_)) s.push_back(id(i));
  j["crossed"] = c;
  j["singular"] = s;
  nlohmann::json labels = nlohmann::json::object();
  for (int i = 0; i < size(); ++i)
    if (!label(i).empty()) labels[std::to_string(id(i))] = label(i);
  if (!labels.empty()) j["labels"] = labels;
  return j;
}

bool Subdiagram::has_s_trivial_component() const {
  return std::find(s_trivial.begin(), s_trivial.end(), true) != s_trivial.end();
}

Subdiagram subdiagram(const MarkedDiagram& d, NodeSet I) {
  I &= d.all();
  const std::vector<int> idx = members(I);
  std::vector<int> ids;
  std::vector<std::vector<int>> c;
  for (int i : idx) {
    ids.push_back(d.id(i));
    std::vector<int> row;
    for (int j : idx) row.push_back(d.cartan(i, j));
    c.push_back(std::move(row));
  }
  Subdiagram out;
  out.diagram = MarkedDiagram(std::move(ids), std::move(c));
  NodeSet cr = 0, sg = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    out.diagram.set_label(static_cast<int>(k), d.label(idx[k]));
    if (contains(d.crossed(), idx[k])) cr |= bit(static_cast<int>(k));
    if (contains(d.singular(), idx[k])) sg |= bit(static_cast<int>(k));
  }
  out.diagram = out.diagram.with_crossed(cr).with_singular(sg);
  for (NodeSet comp : out.diagram.connected_components()) {
    NodeSet parent = 0;
    for (int k : members(comp)) parent |= bit(idx[static_cast<std::size_t>(k)]);
    out.components.push_back(parent);
    out.s_trivial.push_back((parent & d.crossed()) == 0);
  }
  return out;
}

MarkedDiagram dual_diagram(const MarkedDiagram& d) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(d.size()), std::vector<int>(static_cast<std::size_t>(d.size())));
  for (int i = 0; i < d.size(); ++i)
    for (int j = 0; j < d.size(); ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d.cartan(j, i);
  MarkedDiagram out(d.ids(), std::move(t));
  for (int i = 0; i < d.size(); ++i) out.set_label(i, d.label(i));
  return out.with_crossed(d.crossed()).with_singular(d.singular());
}

MarkedDiagram simply_laced_cover(const MarkedDiagram& d) {
  if (!d.connected() || popcount(d.crossed()) != 1)
    throw DomainError("simply-laced cover needs a connected diagram with one crossed node");
  if (d.simply_laced()) throw DomainError("simply-laced cover requested for a simply-laced diagram " + d.type_name());
  const Component c = d.components().front();
  const int a = c.bourbaki_number(members(d.crossed()).front());
  const int n = c.rank;
  // Recognition reports B2 for B2 = C2, so (C2, alpha_1) arrives as (B2, alpha_2)
  // and is handled by the D3 = A3 branch.
  const bool is_c_alpha1 = c.type == 'C' && a == 1;
  const bool is_b_alphan = c.type == 'B' && a == n;
  if (is_c_alpha1) {
    MarkedDiagram out = MarkedDiagram::standard('A', 2 * n - 1);
    return out.with_crossed(bit(0));
  }
  if (is_b_alphan) {
    MarkedDiagram out = MarkedDiagram::standard('D', n + 1);
    return out.with_crossed(bit(n));
  }
  throw DomainError("no simply-laced cover is defined for " + d.signature());
}

MarkedDiagram cover_of_dual(const MarkedDiagram& d) { return simply_laced_cover(dual_diagram(d)); }

int canonical_crossed_number(const MarkedDiagram& d) {
  if (popcount(d.crossed()) != 1) throw DomainError("expected exactly one crossed node");
  const int idx = members(d.crossed()).front();
  for (const Component& c : d.components()) {
    if (!contains(c.nodes(), idx)) continue;
    const int k = c.bourbaki_number(idx);
    int best = k;
    for (const auto& perm : automorphisms(c.type, c.rank)) best = std::min(best, perm[static_cast<std::size_t>(k)]);
    return best;
  }
  throw DomainError("crossed node not found");
}

}  // namespace kostant
