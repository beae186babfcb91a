#include "kostant/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kostant/bgg.hpp"
#include "kostant/cache.hpp"
#include "kostant/hermitian.hpp"
#include "kostant/kostant.hpp"
#include "kostant/tables.hpp"

namespace kostant {

namespace {

struct Options {
  std::string type, diagram, crossed, J, pair;
  int rank = 0;
  std::string method = "palindromic";
  std::string ordering = "both";
  std::string format = "text";
  std::string kl_route = "auto";
  std::string cache_dir;
  std::size_t max_elements = CosetPoset::kDefaultMaxElements;
  unsigned jobs = 1;
  bool allow_large = false;
  bool verify_cache = false;
  long w = -1, x = -1;
  int k = 1;
  std::vector<std::string> only;
  std::string golden_dir;
};

/// Thrown for invalid flag values found after parsing.
struct BadFlag : Error {
  using Error::Error;
};

/// Thrown when a golden check diverges.
struct GoldenMismatch : Error {
  GoldenMismatch(const std::string& what, std::string report) : Error(what), partial(std::move(report)) {}
  std::string partial;  // report lines printed before the mismatch
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

NodeSet resolve_nodes(const MarkedDiagram& d, const std::string& refs) {
  NodeSet s = 0;
  for (const auto& r : split(refs, ',')) s |= bit(d.resolve(r));
  return s;
}

MarkedDiagram base_diagram(const Options& o) {
  if (!o.diagram.empty()) {
    std::string text = o.diagram;
    if (text.front() != '{') {
      std::ifstream in(o.diagram);
      if (!in) throw BadFlag("cannot read --diagram file " + o.diagram);
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    const nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw BadFlag("--diagram is not valid JSON");
    return MarkedDiagram::from_json(j);
  }
  if (o.type.empty()) throw BadFlag("one of --type or --diagram is required");
  if (o.rank > 0) {
    if (o.type.size() != 1) throw BadFlag("--rank needs a one-letter --type");
    return MarkedDiagram::standard(o.type[0], o.rank);
  }
  return MarkedDiagram::from_type_string(o.type);
}

MarkedDiagram marked_diagram(const Options& o) {
  MarkedDiagram d = base_diagram(o);
  if (!o.crossed.empty()) d = d.with_crossed(resolve_nodes(d, o.crossed));
  if (!o.J.empty()) d = d.with_singular(resolve_nodes(d, o.J));
  return d;
}

void check_size(const MarkedDiagram& d, const Options& o) {
  const RootSystem rs(d);
  const unsigned long long n = rs.group_order() / rs.parabolic_order(d.levi());
  if (n > kLargeQuotient && !o.allow_large)
    throw SizeLimitError(d.signature() + " has " + std::to_string(n) + " elements (above " + std::to_string(kLargeQuotient) + "); pass --allow-large");
}

KLTable::Route parse_route(const std::string& s) {
  if (s == "auto") return KLTable::Route::Auto;
  if (s == "full") return KLTable::Route::FullGroup;
  if (s == "quotient") return KLTable::Route::Quotient;
  throw BadFlag("unknown --kl-route '" + s + "'");
}

std::vector<std::string> formats(const Options& o, std::initializer_list<const char*> allowed) {
  std::vector<std::string> out = split(o.format, ',');
  if (out.empty()) throw BadFlag("--format is empty");
  for (const auto& f : out) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || f == a;
    if (!ok) throw BadFlag("format '" + f + "' is not supported by this command");
  }
  return out;
}

std::string nodes_text(const MarkedDiagram& d, NodeSet s) {
  std::string out = "{";
  bool first = true;
  for (int i : members(s)) {
    out += (first ? "" : ",") + (d.label(i).empty() ? std::to_string(d.id(i)) : d.label(i));
    first = false;
  }
  return out + "}";
}

nlohmann::json nodes_json(const MarkedDiagram& d, NodeSet s) {
  nlohmann::json a = nlohmann::json::array();
  for (int i : members(s)) a.push_back(d.id(i));
  return a;
}

/// Output of one command for a fixed input, possibly served from the cache.
class Runner {
public:
  explicit Runner(const Options& o) : opt_(o) {
    if (!o.cache_dir.empty()) cache_ = std::make_unique<Cache>(o.cache_dir);
    else if (auto env = Cache::from_environment()) cache_ = std::make_unique<Cache>(*env);
    if (o.verify_cache && !cache_) throw BadFlag("--verify-cache needs --cache-dir or KOSTANT_CACHE_DIR");
  }

  std::string run(const std::string& diagram, const std::string& operation, const std::function<std::string()>& compute) const {
    if (!cache_) return compute();
    const std::string key = Cache::make_key(diagram, operation, convention_name(kCalibratedConvention));
    if (auto hit = cache_->load(key)) {
      if (opt_.verify_cache) {
        const std::string fresh = compute();
        if (fresh != *hit) throw ConsistencyError("cache entry " + cache_->path_of(key).string() + " differs from recomputation");
      }
      return *hit;
    }
    const std::string payload = compute();
    cache_->store(key, diagram, operation, payload);
    return payload;
  }

private:
  const Options& opt_;
  std::unique_ptr<Cache> cache_;
};

std::string diagram_key(const MarkedDiagram& d) { return d.to_json().dump(); }

// ---- poset ----

std::string poset_text(const CosetPoset& p) {
  std::ostringstream os;
  os << p.diagram().signature() << ": " << p.size() << " elements, maximal length " << p.max_length() << "\n";
  for (std::uint32_t x = 0; x < p.size(); ++x) {
    os << std::setw(6) << x << std::setw(4) << p.length(x) << "  " << word_name(p, x);
    if (!p.covers_below(x).empty()) {
      os << "  covers";
      for (const Cover& c : p.covers_below(x)) os << " " << c.lo;
    }
    os << "\n";
  }
  return os.str();
}

std::string cmd_poset(const Options& o, const Runner& run) {
  const MarkedDiagram d = marked_diagram(o);
  check_size(d, o);
  const auto fs = formats(o, {"text", "json", "dot"});
  const std::string op = "poset J=" + std::to_string(d.singular()) + " ordering=" + o.ordering + " format=" + o.format;
  return run.run(diagram_key(d), op, [&] {
    const CosetPoset p(d, o.max_elements);
    std::string out;
    for (const auto& f : fs) {
      if (d.singular() == 0) {
        out += f == "text" ? poset_text(p) : export_view(hasse_view(p), parse_export_format(f));
        continue;
      }
      const SingularSubposet s = singular_subposet(p, d.singular());
      HasseView v = hasse_view(p, s);
      if (o.ordering == "mu") {
        const KLTable kl(p, kCalibratedConvention, parse_route(o.kl_route));
        v = hasse_view(p, s.ids, mu_ordering(kl, s));
      }
      if (f == "text") {
        std::ostringstream os;
        os << d.signature() << " J=" << nodes_text(d, d.singular()) << ": " << s.size() << " elements\n";
        for (const auto& e : v.edges) os << "  " << e.lo << " < " << e.hi << (e.dashed ? " (dashed)" : "") << "\n";
        out += os.str();
      } else {
        out += export_view(v, parse_export_format(f));
      }
    }
    return out;
  });
}

// ---- classify ----

std::string cmd_classify(const Options& o, const Runner& run) {
  const MarkedDiagram d = marked_diagram(o);
  if (d.singular()) throw BadFlag("classify works on regular blocks; use singular for --J");
  check_size(d, o);
  const Method m = parse_method(o.method);
  const auto fs = formats(o, {"text", "json"});
  const std::string op = "classify method=" + method_name(m) + " route=" + o.kl_route + " format=" + o.format;
  return run.run(diagram_key(d), op, [&] {
    const CosetPoset p(d, o.max_elements);
    std::unique_ptr<KLTable> kl;
    ClassifyOptions co;
    co.method = m;
    co.jobs = o.jobs;
    if (m != Method::Palindromic) {
      kl = std::make_unique<KLTable>(p, kCalibratedConvention, parse_route(o.kl_route));
      co.kl = kl.get();
    }
    const KostantReport r = classify_regular(p, co);
    std::string out;
    for (const auto& f : fs) {
      if (f == "text") {
        std::ostringstream os;
        os << p.size() << " elements, " << r.kostant_count << " Kostant, " << r.standard_count << " standard\n";
        os << "diagram " << r.signature << ", method " << method_name(r.method);
        if (!r.criterion.empty()) os << " (" << r.criterion << ")";
        if (m == Method::Both) os << ", methods " << (r.methods_agree ? "agree" : "DISAGREE");
        os << "\n";
        for (std::uint32_t w : r.kostant_elements()) {
          os << std::setw(6) << w << std::setw(4) << p.length(w) << "  " << word_name(p, w);
          if (r.entries[w].standard) os << "  standard " << nodes_text(d, *r.entries[w].standard);
          os << "\n";
        }
        out += os.str();
      } else {
        nlohmann::json j;
        j["signature"] = r.signature;
        j["elements"] = p.size();
        j["method"] = method_name(r.method);
        if (!r.criterion.empty()) j["criterion"] = r.criterion;
        j["pruning_applied"] = r.pruning_applied;
        j["kostant_count"] = r.kostant_count;
        j["standard_count"] = r.standard_count;
        j["methods_agree"] = r.methods_agree;
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& e : r.entries) {
          nlohmann::json x{{"id", e.id}, {"length", p.length(e.id)}, {"word", word_name(p, e.id)}, {"kostant", e.kostant}};
          if (e.pruned) x["pruned"] = true;
          if (e.palindromic) x["palindromic"] = *e.palindromic;
          if (e.kl_trivial) x["kl_trivial"] = *e.kl_trivial;
          if (e.standard) x["standard"] = nodes_json(d, *e.standard);
          entries.push_back(x);
        }
        j["entries"] = entries;
        out += j.dump(1) + "\n";
      }
    }
    return out;
  });
}

// ---- klpoly ----

std::string cmd_klpoly(const Options& o, const Runner& run) {
  const MarkedDiagram d = marked_diagram(o);
  check_size(d, o);
  if (o.w < 0) throw BadFlag("--w is required");
  const auto fs = formats(o, {"text", "json"});
  const std::string op = "klpoly w=" + std::to_string(o.w) + " x=" + std::to_string(o.x) + " J=" + std::to_string(d.singular()) + " route=" + o.kl_route +
                         " format=" + o.format;
  return run.run(diagram_key(d), op, [&] {
    const CosetPoset p(d, o.max_elements);
    const auto w = static_cast<std::uint32_t>(o.w);
    if (w >= p.size()) throw BadFlag("--w " + std::to_string(o.w) + " out of range (poset has " + std::to_string(p.size()) + " elements)");
    if (o.x >= static_cast<long>(p.size())) throw BadFlag("--x out of range");
    const NodeSet J = d.singular();
    if (J && !in_singular_subposet(p, J, w)) throw BadFlag("--w is not in ^S W^J");
    const KLTable kl(p, kCalibratedConvention, parse_route(o.kl_route));
    std::vector<std::uint32_t> xs;
    for (std::uint32_t x = 0; x <= w; ++x) {
      if (o.x >= 0 && x != static_cast<std::uint32_t>(o.x)) continue;
      if (!p.leq(x, w) || (J && !in_singular_subposet(p, J, x))) continue;
      xs.push_back(x);
    }
    std::string out;
    for (const auto& f : fs) {
      std::ostringstream os;
      nlohmann::json rows = nlohmann::json::array();
      for (std::uint32_t x : xs) {
        const IntPolynomial poly = J ? kl.singular(J, x, w) : kl.relative(x, w);
        if (f == "text") {
          os << "P(" << x << ", " << w << ") = " << poly.str('q') << "\n";
        } else {
          rows.push_back({{"x", x}, {"w", w}, {"coefficients", poly.coefficients()}});
        }
      }
      if (f == "json") os << nlohmann::json{{"signature", d.signature()}, {"convention", convention_name(kl.convention())}, {"polynomials", rows}}.dump(1) << "\n";
      out += os.str();
    }
    return out;
  });
}

// ---- singular ----

std::string cmd_singular(const Options& o, const Runner& run) {
  const MarkedDiagram d = marked_diagram(o);
  if (!d.singular()) throw BadFlag("--J is required");
  check_size(d, o);
  std::vector<Ordering> orders;
  if (o.ordering == "both") orders = {Ordering::Bruhat, Ordering::Mu};
  else orders = {parse_ordering(o.ordering)};
  const auto fs = formats(o, {"text", "json", "dot"});
  const std::string op = "singular ordering=" + o.ordering + " route=" + o.kl_route + " format=" + o.format;
  return run.run(diagram_key(d), op, [&] {
    const NodeSet J = d.singular();
    const MarkedDiagram plain = d.with_singular(0);
    const CosetPoset p(plain, o.max_elements);
    const auto hs = hermitian_pair(plain);
    std::optional<DPrime> dp;
    const bool nonempty = hs ? block_nonempty(p, J) : [&] {
      for (int j : members(J))
        if (plain.neighbours(j) & J) return false;
      return true;
    }();
    if (hs && nonempty) dp = dprime(*hs, J);
    const SingularSubposet s = singular_subposet(p, J);
    std::string out;
    if (s.size() == 0) {
      for (const auto& f : fs)
        out += f == "json" ? nlohmann::json{{"signature", plain.signature()}, {"J", nodes_json(d, J)}, {"empty", true}}.dump(1) + "\n"
                           : std::string(f == "dot" ? "digraph empty {}\n" : "empty block: ^S W^J has no elements\n");
      return out;
    }
    const KLTable kl(p, kCalibratedConvention, parse_route(o.kl_route));
    const FinitePoset mu = mu_ordering(kl, s);
    std::vector<SingularKostantReport> reps;
    for (Ordering ord : orders) reps.push_back(classify_singular(kl, s, ord == Ordering::Mu ? mu : s.bruhat, ord));
    for (const auto& f : fs) {
      if (f == "text") {
        std::ostringstream os;
        os << plain.signature() << " J=" << nodes_text(d, J) << ": " << s.size() << " elements\n";
        if (dp) os << "D' = " << dp->signature() << ", copies " << dp->copies << "\n";
        for (const auto& r : reps)
          os << ordering_name(r.ordering) << " (" << r.definition << "): " << r.kostant_count << " Kostant, " << r.components << " component"
             << (r.components == 1 ? "" : "s") << "\n";
        for (std::uint32_t i = 0; i < s.size(); ++i) {
          os << std::setw(4) << i + 1 << std::setw(7) << s.ids[i] << "  " << word_name(p, s.ids[i]);
          for (const auto& r : reps) os << "  " << ordering_name(r.ordering) << ":" << (r.entries[i].kostant ? "K" : "-");
          os << "\n";
        }
        out += os.str();
      } else if (f == "json") {
        nlohmann::json j;
        j["signature"] = plain.signature();
        j["J"] = nodes_json(d, J);
        j["elements"] = s.ids;
        if (dp) j["dprime"] = {{"signature", dp->signature()}, {"alpha", dp->alpha_number()}, {"copies", dp->copies}};
        nlohmann::json mu_covers = nlohmann::json::array();
        for (auto [lo, hi] : mu.hasse()) mu_covers.push_back({lo, hi});
        j["mu_covers"] = mu_covers;
        nlohmann::json out_reps = nlohmann::json::array();
        for (const auto& r : reps) {
          nlohmann::json e = nlohmann::json::array();
          for (const auto& x : r.entries) {
            nlohmann::json coh = nlohmann::json::object();
            for (const auto& [i, ids] : x.cohomology) coh[std::to_string(i)] = ids;
            nlohmann::json row{{"id", x.id}, {"kostant", x.kostant}, {"cohomology", coh}};
            if (x.v) row["v"] = *x.v;
            if (!x.reason.empty()) row["reason"] = x.reason;
            e.push_back(row);
          }
          out_reps.push_back({{"ordering", ordering_name(r.ordering)},
                              {"definition", r.definition},
                              {"kostant_count", r.kostant_count},
                              {"components", r.components},
                              {"entries", e}});
        }
        j["reports"] = out_reps;
        out += j.dump(1) + "\n";
      } else {
        const auto& r = reps.back();
        HasseView v = hasse_view(p, s.ids, r.ordering == Ordering::Mu ? mu : s.bruhat);
        for (std::size_t i = 0; i < v.nodes.size() && i < r.entries.size(); ++i) v.nodes[i].circled = r.entries[i].kostant;
        out += to_dot(v);
      }
    }
    return out;
  });
}

// ---- bgg ----

std::string cmd_bgg(const Options& o, const Runner& run) {
  const MarkedDiagram d = marked_diagram(o);
  check_size(d, o);
  const auto fs = formats(o, {"text", "json"});
  const std::string op = "bgg w=" + std::to_string(o.w) + " format=" + o.format;
  return run.run(diagram_key(d), op, [&] {
    const CosetPoset p(d, o.max_elements);
    const std::uint32_t w = o.w < 0 ? p.top() : static_cast<std::uint32_t>(o.w);
    if (w >= p.size()) throw BadFlag("--w out of range (poset has " + std::to_string(p.size()) + " elements)");
    const SignedComplex c = build_bgg(p, w);
    const ComplexVerdict v = verify_complex(c);
    std::string out;
    for (const auto& f : fs) {
      if (f == "text") {
        out += complex_summary(c);
        out += "squares " + std::to_string(v.squares_checked) + ", " + (v.ok ? "verified" : "VIOLATIONS") + "\n";
        for (const auto& s : v.violations) out += "  " + s + "\n";
      } else {
        out += complex_json(c);
      }
    }
    return out;
  });
}

// ---- resolution ----

std::string cmd_resolution(const Options& o, const Runner& run) {
  Options oo = o;
  if (!o.pair.empty()) oo.type = o.pair;
  MarkedDiagram d = marked_diagram(oo);
  if (o.crossed.empty()) {
    // the cominuscule node, when it is unique up to diagram automorphism
    std::optional<MarkedDiagram> pick;
    for (int a = 0; a < d.size(); ++a) {
      const MarkedDiagram c = d.with_crossed(bit(a));
      if (!is_hermitian(c)) continue;
      if (pick && pick->signature() != c.signature()) throw BadFlag(d.type_name() + " has several Hermitian pairs; give --crossed");
      if (!pick) pick = c;
    }
    if (!pick) throw BadFlag(d.type_name() + " has no Hermitian pair");
    d = *pick;
  }
  const HSPair hs = require_hermitian(d);
  check_size(d, o);
  const auto fs = formats(o, {"text", "json"});
  const std::string op = "resolution k=" + std::to_string(o.k) + " format=" + o.format;
  return run.run(diagram_key(d), op, [&] {
    const CosetPoset p(d, o.max_elements);
    const ResolutionData r = minimal_resolution(p, hs, o.k);
    std::string out;
    for (const auto& f : fs) out += f == "text" ? resolution_text(r) : resolution_json(r);
    return out;
  });
}

// ---- tables ----

std::string cmd_tables(const Options& o) {
  GoldenOptions g;
  g.golden_dir = o.golden_dir.empty() ? default_golden_dir() : std::filesystem::path(o.golden_dir);
  g.allow_large = o.allow_large;
  g.jobs = o.jobs;
  std::vector<std::string> names;
  for (const auto& s : o.only)
    for (const auto& n : split(s, ',')) names.push_back(n);
  const bool single = names.size() == 1;
  if (names.empty()) names = golden_names();
  std::string out;
  for (const auto& n : names) {
    const GoldenResult r = run_golden(n, g);
    if (!single) out += "== " + r.name + ": " + (r.ok ? "ok" : "MISMATCH") + "\n";
    for (const auto& line : r.lines) out += line + "\n";
    if (!r.ok) throw GoldenMismatch("golden mismatch in " + r.name + ": " + r.divergence, out);
  }
  return out;
}

void add_common(CLI::App* c, Options& o) {
  c->add_option("--type", o.type, "Diagram type, e.g. E7, F4, A2xA1, or a letter with --rank");
  c->add_option("--rank", o.rank, "Rank for a one-letter --type")->check(CLI::Range(1, kMaxRank));
  c->add_option("--diagram", o.diagram, "Diagram JSON (inline or a file path)");
  c->add_option("--crossed", o.crossed, "Crossed nodes (comma-separated ids or labels)");
  c->add_option("--J", o.J, "Singular nodes (comma-separated ids or labels)");
  c->add_option("--format", o.format, "Output format(s): text, json, dot (comma-separated)");
  c->add_option("--cache-dir", o.cache_dir, "Cache directory (default $KOSTANT_CACHE_DIR)");
  c->add_flag("--verify-cache", o.verify_cache, "Recompute cache hits and compare byte for byte");
  c->add_option("--max-elements", o.max_elements, "Cap on coset-poset elements");
  c->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  c->add_flag("--allow-large", o.allow_large, "Permit quotients above the large-size threshold");
  c->add_option("--kl-route", o.kl_route, "KL route: auto, full or quotient")->check(CLI::IsMember({"auto", "full", "quotient"}));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Kostant modules in parabolic category O"};
  app.name("kostant");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto* poset = app.add_subcommand("poset", "Hasse diagram of ^S W or ^S W^J");
  auto* classify = app.add_subcommand("classify", "Kostant modules of a regular block");
  auto* klpoly = app.add_subcommand("klpoly", "Relative or singular KLV polynomials");
  auto* singular = app.add_subcommand("singular", "Kostant modules of a singular block");
  auto* bgg = app.add_subcommand("bgg", "Signed BGG complex of [e, w]");
  auto* resolution = app.add_subcommand("resolution", "Minimal free resolution of a Wallach module");
  auto* tables = app.add_subcommand("tables", "Rerun the golden suite");
  for (auto* c : {poset, classify, klpoly, singular, bgg, resolution}) add_common(c, o);
  for (auto* c : {poset, singular}) c->add_option("--ordering", o.ordering, "bruhat, mu or both")->check(CLI::IsMember({"bruhat", "mu", "both"}));
  singular->add_option("--emit", o.format, "Alias of --format");
  classify->add_option("--method", o.method, "palindromic, kl or both")->check(CLI::IsMember({"palindromic", "kl", "both"}));
  for (auto* c : {klpoly, bgg}) c->add_option("--w", o.w, "Coset-poset id of w")->check(CLI::NonNegativeNumber);
  klpoly->add_option("--x", o.x, "Coset-poset id of x (default: all x <= w)")->check(CLI::NonNegativeNumber);
  resolution->add_option("--pair", o.pair, "Type of the Hermitian pair, e.g. E7");
  resolution->add_option("--k", o.k, "Wallach index")->check(CLI::NonNegativeNumber);
  tables->add_option("--only", o.only, "E6, E7, E8, table2, figures, resolution");
  tables->add_option("--golden-dir", o.golden_dir, "Directory of golden files");
  tables->add_flag("--allow-large", o.allow_large, "Include the large E8 quotients");
  tables->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadFlags;
  }

  try {
    std::string text;
    if (tables->parsed()) {
      text = cmd_tables(o);
    } else {
      const Runner runner(o);
      if (poset->parsed()) text = cmd_poset(o, runner);
      else if (classify->parsed()) text = cmd_classify(o, runner);
      else if (klpoly->parsed()) text = cmd_klpoly(o, runner);
      else if (singular->parsed()) text = cmd_singular(o, runner);
      else if (bgg->parsed()) text = cmd_bgg(o, runner);
      else text = cmd_resolution(o, runner);
    }
    out << text;
    return kExitOk;
  } catch (const GoldenMismatch& e) {
    out << e.partial;
    err << e.what() << "\n";
    return kExitGoldenMismatch;
  } catch (const BadFlag& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadFlags;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSizeCap;
  } catch (const DiagramError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadFlags;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadFlags;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace kostant
