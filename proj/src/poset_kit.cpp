#include "kostant/poset_kit.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace kostant {

IntPolynomial poincare_polynomial(const CosetPoset& p, const Bitset& ideal) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(p.max_length()) + 1, 0);
  for (std::size_t v = ideal.find_first(); v != Bitset::npos; v = ideal.find_next(v)) ++c[static_cast<std::size_t>(p.length(static_cast<std::uint32_t>(v)))];
  return IntPolynomial(std::move(c));
}

IntPolynomial poincare_polynomial(const CosetPoset& p, std::uint32_t w) { return poincare_polynomial(p, p.lower_ideal(w)); }

bool is_palindromic(const IntPolynomial& f) { return f.is_palindromic(); }

std::optional<int> GradedInterval::rank_of(std::uint32_t x) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), x);
  if (it == elements.end() || *it != x || !graded) return std::nullopt;
  return rank[static_cast<std::size_t>(it - elements.begin())];
}

namespace {

// Fill ranks and slices given min/max chain lengths from v for each element.
void finish_interval(GradedInterval& g, const std::vector<int>& lo, const std::vector<int>& hi) {
  g.graded = true;
  for (std::size_t k = 0; k < g.elements.size(); ++k) {
    if (lo[k] != hi[k]) {
      g.graded = false;
      std::ostringstream os;
      os << "element " << g.elements[k] << " is reached from " << g.v << " by maximal chains of lengths " << lo[k] << " and " << hi[k];
      g.witness = os.str();
      return;
    }
  }
  g.rank = lo;
  const int top = g.rank.empty() ? 0 : *std::max_element(g.rank.begin(), g.rank.end());
  g.slices.assign(static_cast<std::size_t>(top) + 1, {});
  for (std::size_t k = 0; k < g.elements.size(); ++k) g.slices[static_cast<std::size_t>(g.rank[k])].push_back(g.elements[k]);
}

}  // namespace

GradedInterval interval(const FinitePoset& order, std::uint32_t v, std::uint32_t w) {
  if (!order.leq(v, w)) throw DomainError("interval [" + std::to_string(v) + ", " + std::to_string(w) + "] is empty: v is not below w");
  GradedInterval g;
  g.v = v;
  g.w = w;
  const Bitset in = order.above(v) & order.below(w);
  for (std::size_t x = in.find_first(); x != Bitset::npos; x = in.find_next(x)) g.elements.push_back(static_cast<std::uint32_t>(x));
  std::vector<int> lo(g.elements.size(), 0), hi(g.elements.size(), 0);
  for (std::size_t k = 1; k < g.elements.size(); ++k) {
    int mn = -1, mx = -1;
    for (std::uint32_t y : order.covers_down(g.elements[k])) {
      if (!in.test(y)) continue;
      const auto j = static_cast<std::size_t>(std::lower_bound(g.elements.begin(), g.elements.end(), y) - g.elements.begin());
      mn = mn < 0 ? lo[j] + 1 : std::min(mn, lo[j] + 1);
      mx = std::max(mx, hi[j] + 1);
    }
    lo[k] = mn;
    hi[k] = mx;
  }
  finish_interval(g, lo, hi);
  return g;
}

GradedInterval interval(const CosetPoset& p, std::uint32_t v, std::uint32_t w) {
  if (!p.leq(v, w)) throw DomainError("interval [" + std::to_string(v) + ", " + std::to_string(w) + "] is empty: v is not below w");
  GradedInterval g;
  g.v = v;
  g.w = w;
  const Bitset ideal = p.lower_ideal(w);
  Bitset in(p.size());
  for (std::size_t x = ideal.find_first(); x != Bitset::npos; x = ideal.find_next(x))
    if (p.leq(v, static_cast<std::uint32_t>(x))) {
      in.set(x);
      g.elements.push_back(static_cast<std::uint32_t>(x));
    }
  std::vector<int> lo(g.elements.size(), 0), hi(g.elements.size(), 0);
  for (std::size_t k = 1; k < g.elements.size(); ++k) {
    int mn = -1, mx = -1;
    for (const Cover& c : p.covers_below(g.elements[k])) {
      if (!in.test(c.lo)) continue;
      const auto j = static_cast<std::size_t>(std::lower_bound(g.elements.begin(), g.elements.end(), c.lo) - g.elements.begin());
      mn = mn < 0 ? lo[j] + 1 : std::min(mn, lo[j] + 1);
      mx = std::max(mx, hi[j] + 1);
    }
    lo[k] = mn;
    hi[k] = mx;
  }
  finish_interval(g, lo, hi);
  return g;
}

std::string word_name(const CosetPoset& p, std::uint32_t x) {
  const auto word = p.reduced_word(x);
  if (word.empty()) return "e";
  const MarkedDiagram& d = p.diagram();
  bool multi = false;
  for (int i = 0; i < d.size(); ++i)
    if (d.label(i).size() > 1 || (d.label(i).empty() && d.id(i) >= 10)) multi = true;
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (multi && k) s += '.';
    const int g = word[k];
    s += d.label(g).empty() ? std::to_string(d.id(g)) : d.label(g);
  }
  return s;
}

namespace {

std::string edge_label(const CosetPoset& p, int label) {
  if (label < 0) return "";
  const MarkedDiagram& d = p.diagram();
  return d.label(label).empty() ? std::to_string(d.id(label)) : d.label(label);
}

}  // namespace

HasseView hasse_view(const CosetPoset& p) {
  HasseView v;
  v.title = p.diagram().signature();
  for (std::uint32_t x = 0; x < p.size(); ++x) v.nodes.push_back({x, p.length(x), word_name(p, x), false, ""});
  for (const Cover& c : p.covers()) v.edges.push_back({c.lo, c.hi, edge_label(p, c.label), false});
  return v;
}

HasseView hasse_view(const CosetPoset& p, const SingularSubposet& s) {
  HasseView v = hasse_view(p, s.ids, s.bruhat);
  v.title += " J=";
  for (int j : members(s.J)) v.title += std::to_string(p.diagram().id(j)) + ",";
  if (s.J) v.title.pop_back();
  return v;
}

HasseView hasse_view(const CosetPoset& p, const std::vector<std::uint32_t>& ids, const FinitePoset& order) {
  HasseView v;
  v.title = p.diagram().signature();
  for (std::uint32_t x : ids) v.nodes.push_back({x, p.length(x), word_name(p, x), false, ""});
  for (auto [a, b] : order.hasse()) {
    const std::uint32_t lo = ids[a], hi = ids[b];
    int label = -1;
    for (int i = 0; i < p.rank(); ++i)
      if (p.transition(lo, i) == static_cast<std::int32_t>(hi)) label = i;
    v.edges.push_back({lo, hi, edge_label(p, label), p.length(hi) - p.length(lo) > 1});
  }
  return v;
}

ExportFormat parse_export_format(const std::string& s) {
  if (s == "dot") return ExportFormat::Dot;
  if (s == "json") return ExportFormat::Json;
  throw DomainError("unknown export format '" + s + "' (expected dot or json)");
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const HasseView& v) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(v.title) << "\" {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (const auto& n : v.nodes) {
    os << "  n" << n.id << " [label=\"" << dot_escape(n.name);
    if (!n.note.empty()) os << "\\n" << dot_escape(n.note);
    os << "\"";
    if (n.circled) os << ", shape=circle";
    os << "];\n";
  }
  for (const auto& e : v.edges) {
    os << "  n" << e.lo << " -> n" << e.hi;
    std::vector<std::string> attrs;
    if (!e.label.empty()) attrs.push_back("label=\"" + dot_escape(e.label) + "\"");
    if (e.dashed) attrs.push_back("style=dashed");
    attrs.push_back("arrowhead=none");
    os << " [";
    for (std::size_t k = 0; k < attrs.size(); ++k) os << (k ? ", " : "") << attrs[k];
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_json(const HasseView& v) {
  nlohmann::json j;
  j["title"] = v.title;
  j["nodes"] = nlohmann::json::array();
  for (const auto& n : v.nodes) {
    nlohmann::json o{{"id", n.id}, {"len", n.length}, {"name", n.name}, {"circled", n.circled}};
    if (!n.note.empty()) o["note"] = n.note;
    j["nodes"].push_back(o);
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& e : v.edges) {
    nlohmann::json o{{"lo", e.lo}, {"hi", e.hi}};
    if (!e.label.empty()) o["label"] = e.label;
    if (e.dashed) o["dashed"] = true;
    j["edges"].push_back(o);
  }
  return j.dump(1) + "\n";
}

std::string export_view(const HasseView& v, ExportFormat f) { return f == ExportFormat::Dot ? to_dot(v) : to_json(v); }

std::string serialize_poset(const CosetPoset& p) {
  nlohmann::json j;
  j["schema"] = 1;
  j["diagram"] = p.diagram().to_json();
  nlohmann::json elems = nlohmann::json::array();
  nlohmann::json trans = nlohmann::json::array();
  for (std::uint32_t x = 0; x < p.size(); ++x) {
    const auto k = p.key(x);
    elems.push_back({{"id", x}, {"len", p.length(x)}, {"key", std::vector<int>(k.begin(), k.end())}});
    std::vector<std::int32_t> row;
    for (int i = 0; i < p.rank(); ++i) row.push_back(p.transition(x, i));
    trans.push_back(row);
  }
  j["elements"] = std::move(elems);
  j["transitions"] = std::move(trans);
  nlohmann::json cov = nlohmann::json::array();
  for (const Cover& c : p.covers()) {
    nlohmann::json o{{"lo", c.lo}, {"hi", c.hi}};
    if (c.label >= 0) o["label"] = p.diagram().id(c.label);
    cov.push_back(o);
  }
  j["covers"] = std::move(cov);
  return j.dump() + "\n";
}

}  // namespace kostant
