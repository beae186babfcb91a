#include "kostant/tables.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "kostant/kostant.hpp"

#ifndef KOSTANT_DATA_DIR
#define KOSTANT_DATA_DIR "data"
#endif

namespace kostant {

long eval_linear(const std::string& expr, const std::map<char, long>& vars) {
  long total = 0;
  std::size_t i = 0;
  bool any = false;
  auto fail = [&](const std::string& why) { throw ConfigError("bad expression '" + expr + "': " + why); };
  while (i < expr.size()) {
    long sign = 1;
    if (expr[i] == '+' || expr[i] == '-') {
      sign = expr[i] == '-' ? -1 : 1;
      ++i;
    } else if (any) {
      fail("expected + or - at position " + std::to_string(i));
    }
    long coeff = 1;
    bool digits = false;
    if (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) {
      coeff = 0;
      while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) coeff = coeff * 10 + (expr[i++] - '0');
      digits = true;
    }
    long value = coeff;
    if (i < expr.size() && std::isalpha(static_cast<unsigned char>(expr[i]))) {
      auto it = vars.find(expr[i]);
      if (it == vars.end()) fail(std::string("unknown variable ") + expr[i]);
      value = coeff * it->second;
      ++i;
    } else if (!digits) {
      fail("empty term");
    }
    total += sign * value;
    any = true;
  }
  if (!any) fail("empty");
  return total;
}

std::vector<Table2Row> parse_table2(const nlohmann::json& j) {
  if (j.value("schema", 0) != 1) throw ConfigError("table2: unsupported schema");
  std::vector<Table2Row> rows;
  try {
    for (const auto& r : j.at("rows")) {
      Table2Row row;
      row.family = r.at("family").get<std::string>();
      row.size = r.at("J").at("size").get<std::string>();
      row.kind = r.at("J").at("kind").get<std::string>();
      if (row.kind == "set") row.nodes = r.at("J").at("nodes").get<std::vector<std::string>>();
      if (!r.at("dprime").is_null()) {
        const std::string t = r.at("dprime").at("type").get<std::string>();
        if (t != "A" && t != "D") throw ConfigError("table2: dprime type must be A or D");
        row.out_type = t[0];
        row.out_rank = r.at("dprime").at("rank").get<std::string>();
        row.out_alpha = r.at("dprime").at("alpha").get<std::string>();
      }
      row.copies = r.at("copies").get<int>();
      rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("table2: ") + e.what());
  }
  return rows;
}

namespace {

std::string component_signature(const MarkedDiagram& d, int alpha) {
  for (NodeSet c : d.connected_components())
    if (contains(c, alpha)) return subdiagram(d, c).diagram.signature();
  return "empty";
}

bool row_matches(const Table2Row& row, const HSPair& hs, NodeSet J, const std::map<char, long>& vars) {
  if (row.family != family_name(hs.family)) return false;
  if (eval_linear(row.size, vars) != popcount(J)) return false;
  int long_roots = 0;
  if (!hs.diagram.simply_laced()) {
    const RootSystem rs(hs.diagram);
    for (int j : members(J)) long_roots += rs.symmetrizer(j) > 1;
  }
  if (row.kind == "any") return true;
  if (row.kind == "short") return long_roots == 0;
  if (row.kind == "long") return long_roots == 1;
  if (row.kind == "set") {
    NodeSet want = 0;
    for (const auto& e : row.nodes) {
      const long b = eval_linear(e, vars);
      if (b < 1 || b > hs.rank) return false;
      want |= bit(static_cast<int>(b - 1));
    }
    return want == J;
  }
  throw ConfigError("table2: unknown J kind '" + row.kind + "'");
}

std::string block_name(const HSPair& hs, NodeSet J) {
  std::string s = hs.name() + " J={";
  bool first = true;
  for (int j : members(J)) {
    s += (first ? "" : ",") + std::to_string(j + 1);
    first = false;
  }
  return s + "}";
}

}  // namespace

std::optional<Table2Prediction> predict_table2(const std::vector<Table2Row>& rows, const HSPair& hs, NodeSet J) {
  const std::map<char, long> vars = {{'n', hs.rank}, {'r', hs.alpha_number}, {'t', popcount(J)}};
  std::optional<Table2Prediction> out;
  for (const Table2Row& row : rows) {
    if (!row_matches(row, hs, J, vars)) continue;
    if (out) throw ConfigError("table2: two rows match " + block_name(hs, J));
    Table2Prediction p;
    p.row = &row;
    p.copies = row.copies;
    if (!row.out_type) {
      p.signature = "empty";
    } else {
      const long m = eval_linear(row.out_rank, vars), a = eval_linear(row.out_alpha, vars);
      if (*row.out_type == 'A') {
        p.signature = (m < 1 || a < 1 || a > m) ? "empty" : MarkedDiagram::standard('A', static_cast<int>(m)).with_crossed(bit(static_cast<int>(a - 1))).signature();
      } else if (m < 1) {
        p.in_domain = false;
      } else if (m == 1) {
        p.signature = "empty";
      } else {
        // D2 and D3 are A1xA1 and A3; keep the component of alpha'.
        p.signature = component_signature(MarkedDiagram::standard('D', static_cast<int>(m)).with_crossed(bit(static_cast<int>(a - 1))), static_cast<int>(a - 1));
      }
    }
    out = p;
  }
  return out;
}

Table2Comparison compare_table2(const std::vector<Table2Row>& rows, int max_rank) {
  Table2Comparison c;
  std::vector<bool> used(rows.size(), false);
  for (char t : {'A', 'B', 'C', 'D', 'E'})
    for (int n = 1; n <= max_rank; ++n) {
      if ((t == 'B' && n < 2) || (t == 'C' && n < 3) || (t == 'D' && n < 4) || (t == 'E' && (n < 6 || n > 8))) continue;
      const MarkedDiagram d = MarkedDiagram::standard(t, n);
      for (int a = 0; a < n; ++a) {
        const auto hs = hermitian_pair(d.with_crossed(bit(a)));
        if (!hs) continue;
        const CosetPoset p(hs->diagram);
        for (NodeSet J : independent_subsets(hs->diagram)) {
          if (J == 0 || !block_nonempty(p, J)) continue;
          ++c.blocks;
          const std::string name = block_name(*hs, J);
          const auto pred = predict_table2(rows, *hs, J);
          const DPrime dp = dprime(*hs, J);
          const std::string got = dp.signature() + " x" + std::to_string(dp.copies);
          if (!pred) {
            c.out_of_domain.push_back(name + ": no row, algorithm gives " + got);
            continue;
          }
          used[static_cast<std::size_t>(pred->row - rows.data())] = true;
          if (!pred->in_domain) {
            c.out_of_domain.push_back(name + ": D rank below 1, algorithm gives " + got);
            continue;
          }
          const std::string want = pred->signature + " x" + std::to_string(pred->copies);
          if (want == got) {
            ++c.matched;
          } else {
            c.mismatches.push_back(name + ": expected " + want + ", got " + got);
          }
        }
      }
    }
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!used[i]) c.unused_rows.push_back("row " + std::to_string(i + 1) + " (" + rows[i].family + ", |J|=" + rows[i].size + ") matched no block");
  return c;
}

std::filesystem::path default_golden_dir() { return std::filesystem::path(KOSTANT_DATA_DIR) / "golden"; }

std::vector<std::string> golden_names() { return {"E6", "E7", "E8", "table2", "figures", "resolution"}; }

namespace {

nlohmann::json load_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw ConfigError("cannot read golden file " + p.string());
  const nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ConfigError("golden file " + p.string() + " is not valid JSON");
  return j;
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

void expect(GoldenResult& r, const std::string& what, long want, long got) {
  if (want == got || !r.ok) {
    if (want != got) r.ok = false;
    return;
  }
  r.ok = false;
  r.divergence = what + ": expected " + std::to_string(want) + ", got " + std::to_string(got);
}

NodeSet node_set(const nlohmann::json& a) {
  NodeSet s = 0;
  for (int b : a.get<std::vector<int>>()) s |= bit(b - 1);
  return s;
}

GoldenResult table1(const std::string& type, const GoldenOptions& opt) {
  GoldenResult r;
  r.name = type;
  const nlohmann::json j = load_json(opt.golden_dir / "table1.json");
  const auto counts = j.at("counts").at(type).get<std::vector<long>>();
  const auto sizes = j.at("sizes").at(type).get<std::vector<long>>();
  std::vector<int> large;
  if (j.at("large").contains(type)) large = j.at("large").at(type).get<std::vector<int>>();
  const int n = type[1] - '0';
  std::vector<std::string> got;
  for (int k = 1; k <= n; ++k) {
    if (!opt.allow_large && std::find(large.begin(), large.end(), k) != large.end()) {
      got.push_back("-");
      continue;
    }
    const CosetPoset p(MarkedDiagram::standard('E', n).with_crossed(bit(k - 1)));
    ClassifyOptions co;
    co.jobs = opt.jobs;
    const KostantReport rep = classify_regular(p, co);
    expect(r, type + " r=" + std::to_string(k) + " size", sizes.at(static_cast<std::size_t>(k - 1)), static_cast<long>(p.size()));
    expect(r, type + " r=" + std::to_string(k), counts.at(static_cast<std::size_t>(k - 1)), static_cast<long>(rep.kostant_count));
    got.push_back(std::to_string(rep.kostant_count));
  }
  r.lines.push_back(join(got));
  return r;
}

GoldenResult table2(const GoldenOptions& opt) {
  GoldenResult r;
  r.name = "table2";
  const auto rows = parse_table2(load_json(opt.golden_dir / "table2.json"));
  const Table2Comparison c = compare_table2(rows, 7);
  r.ok = c.ok();
  if (!c.mismatches.empty()) r.divergence = c.mismatches.front();
  else if (!c.unused_rows.empty()) r.divergence = c.unused_rows.front();
  r.lines.push_back(std::to_string(c.matched) + " of " + std::to_string(c.blocks) + " nonempty singular blocks match, " + std::to_string(c.out_of_domain.size()) + " outside the table");
  for (const auto& s : c.out_of_domain) r.lines.push_back("  outside: " + s);
  for (const auto& s : c.mismatches) r.lines.push_back("  mismatch: " + s);
  for (const auto& s : c.unused_rows) r.lines.push_back("  unused: " + s);
  return r;
}

GoldenResult figures(const GoldenOptions& opt) {
  GoldenResult r;
  r.name = "figures";
  const nlohmann::json j = load_json(opt.golden_dir / "figures.json");
  for (const auto& f : j.at("regular")) {
    const std::string name = f.at("name").get<std::string>();
    const CosetPoset p(MarkedDiagram::from_type_string(f.at("type").get<std::string>()).with_crossed(node_set(f.at("crossed"))));
    ClassifyOptions co;
    co.method = Method::Both;
    co.jobs = opt.jobs;
    const KostantReport rep = classify_regular(p, co);
    expect(r, name + " elements", f.at("elements").get<long>(), static_cast<long>(p.size()));
    expect(r, name + " Kostant", f.at("kostant").get<long>(), static_cast<long>(rep.kostant_count));
    if (f.contains("standard")) expect(r, name + " standard", f.at("standard").get<long>(), static_cast<long>(rep.standard_count));
    expect(r, name + " methods agree", 1, rep.methods_agree);
    r.lines.push_back(name + ": " + std::to_string(p.size()) + " elements, " + std::to_string(rep.kostant_count) + " Kostant, " + std::to_string(rep.standard_count) +
                      " standard");
  }
  for (const auto& f : j.at("singular")) {
    const std::string name = f.at("name").get<std::string>();
    const CosetPoset p(MarkedDiagram::from_type_string(f.at("type").get<std::string>()).with_crossed(node_set(f.at("crossed"))));
    const auto hs = hermitian_pair(p.diagram());
    const KLTable kl(p, kCalibratedConvention, hs ? KLTable::Route::Quotient : KLTable::Route::Auto);
    const SingularSubposet s = singular_subposet(p, node_set(f.at("J")));
    expect(r, name + " elements", f.at("elements").get<long>(), static_cast<long>(s.size()));
    if (!r.ok) continue;
    const FinitePoset mu = mu_ordering(kl, s);
    if (f.value("bruhat_chain", false)) {
      bool chain = s.bruhat.hasse().size() + 1 == s.size();
      for (auto [lo, hi] : s.bruhat.hasse()) chain = chain && hi == lo + 1;
      expect(r, name + " Bruhat order is a chain", 1, chain);
    }
    if (f.contains("mu_covers")) {
      std::vector<std::vector<long>> covers;
      for (auto [lo, hi] : mu.hasse()) covers.push_back({static_cast<long>(lo) + 1, static_cast<long>(hi) + 1});
      std::sort(covers.begin(), covers.end());
      const auto want = f.at("mu_covers").get<std::vector<std::vector<long>>>();
      if (covers != want && r.ok) {
        r.ok = false;
        r.divergence = name + " mu covers differ";
      }
    }
    std::string summary = name + ": " + std::to_string(s.size()) + " elements";
    for (Ordering o : {Ordering::Bruhat, Ordering::Mu}) {
      const auto rep = classify_singular(kl, s, o == Ordering::Mu ? mu : s.bruhat, o);
      std::vector<long> ks;
      for (std::size_t i = 0; i < rep.entries.size(); ++i)
        if (rep.entries[i].kostant) ks.push_back(static_cast<long>(i) + 1);
      if (f.contains("kostant")) {
        const auto want = f.at("kostant").at(ordering_name(o)).get<std::vector<long>>();
        if (ks != want && r.ok) {
          r.ok = false;
          r.divergence = name + " Kostant set under " + ordering_name(o) + ": expected {" + join(want) + "}, got {" + join(ks) + "}";
        }
      }
      if (f.contains("kostant_count")) expect(r, name + " Kostant count under " + ordering_name(o), f.at("kostant_count").get<long>(), static_cast<long>(ks.size()));
      summary += ", " + ordering_name(o) + " Kostant {" + join(ks) + "}";
    }
    if (f.contains("cohomology")) {
      for (const auto& [w, degrees] : f.at("cohomology").items()) {
        const std::uint32_t wp = static_cast<std::uint32_t>(std::stoul(w) - 1);
        const auto h = singular_u_cohomology(kl, s, s.ids.at(wp));
        std::vector<std::vector<long>> got;
        for (const auto& [i, xs] : h) {
          if (i != static_cast<int>(got.size())) got.resize(static_cast<std::size_t>(i));
          std::vector<long> pos;
          for (std::uint32_t x : xs) pos.push_back(static_cast<long>(*s.position(x)) + 1);
          std::sort(pos.begin(), pos.end());
          got.push_back(pos);
        }
        if (got != degrees.get<std::vector<std::vector<long>>>() && r.ok) {
          r.ok = false;
          r.divergence = name + " u-cohomology of L_" + w + " differs";
        }
      }
    }
    r.lines.push_back(summary);
  }
  return r;
}

GoldenResult resolution(const GoldenOptions& opt) {
  GoldenResult r;
  r.name = "resolution";
  const nlohmann::json j = load_json(opt.golden_dir / "resolution_e7.json");
  const HSPair hs = require_hermitian(MarkedDiagram::from_type_string(j.at("pair").get<std::string>()).with_crossed(bit(6)));
  const CosetPoset p(hs.diagram);
  const ResolutionData d = minimal_resolution(p, hs, j.at("k").get<int>());
  const auto betti = j.at("betti").get<std::vector<long>>();
  expect(r, "length", static_cast<long>(betti.size()) - 1, d.length());
  for (std::size_t i = 0; r.ok && i < betti.size(); ++i) expect(r, "b_" + std::to_string(i), betti[i], static_cast<long>(d.betti[i]));
  const auto shifts = j.at("shifts");
  for (std::size_t i = 0; r.ok && i < shifts.size(); ++i) {
    std::map<int, std::uint64_t> want;
    for (const auto& e : shifts[i]) want[e.at(0).get<int>()] = e.at(1).get<std::uint64_t>();
    if (want != d.shifts[i]) {
      r.ok = false;
      r.divergence = "shifts of term " + std::to_string(i) + " differ";
    }
  }
  std::istringstream text(resolution_text(d));
  for (std::string line; std::getline(text, line);) r.lines.push_back(line);
  return r;
}

}  // namespace

GoldenResult run_golden(const std::string& name, const GoldenOptions& opt) {
  if (name == "E6" || name == "E7" || name == "E8") return table1(name, opt);
  if (name == "table2") return table2(opt);
  if (name == "figures") return figures(opt);
  if (name == "resolution") return resolution(opt);
  throw DomainError("unknown golden check '" + name + "' (expected one of E6, E7, E8, table2, figures, resolution)");
}

}  // namespace kostant
