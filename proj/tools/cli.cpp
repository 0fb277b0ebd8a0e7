#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "circlab/chromatic.hpp"
#include "circlab/dimacs.hpp"
#include "circlab/families.hpp"
#include "circlab/formulas.hpp"
#include "circlab/free_chromatic.hpp"
#include "circlab/free_constructions.hpp"
#include "circlab/hom_search.hpp"
#include "circlab/serialize.hpp"
#include "circlab/verify.hpp"

namespace circlab::cli {
namespace {

constexpr const char* kBudgetVariable = "CIRCLAB_NODE_BUDGET";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<std::uint64_t> env_budget() {
  const char* raw = std::getenv(kBudgetVariable);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const std::string text(raw);
  if (!std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw UsageError(std::string(kBudgetVariable) + " must be a non-negative integer");
  }
  return std::stoull(text);
}

SearchLimits limits() {
  SearchLimits out;
  if (auto budget = env_budget()) out.node_budget = *budget;
  return out;
}

std::string graph_name(const Graph& g, const std::string& path) {
  return g.provenance() ? g.provenance()->name() : path;
}

void emit_graph(const Graph& g, const std::string& path, std::ostream& out) {
  if (path == "-") {
    write_dimacs(out, g);
  } else {
    save_graph(g, path);
  }
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json big_json(const BigCount& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return to_string(value);
}

Json big_json(const BigRational& value) {
  return Json{{"num", big_json(boost::multiprecision::numerator(value))},
              {"den", big_json(boost::multiprecision::denominator(value))}};
}

std::string class_text(const Graph& g, const VertexSet& set) {
  std::string s = "{";
  bool first = true;
  set.for_each([&](Vertex v) {
    if (!first) s += ", ";
    s += g.label(v);
    first = false;
  });
  return s + "}";
}

void print_free_coloring(std::ostream& out, const Graph& g, const FreeColoring& fc) {
  out << "classes " << fc.class_count() << " (a=" << fc.a << ", b="
      << (fc.b == kUnboundedCap ? std::string("inf") : std::to_string(fc.b)) << ", undesignated "
      << fc.non_free_count() << ")\n";
  for (std::size_t i = 0; i < fc.class_count(); ++i) {
    out << "  " << class_text(g, fc.classes[i]);
    if (i < fc.designated_count()) {
      const Edge e = fc.support_edges[i];
      out << "  supp " << g.label(e.u) << " -- " << g.label(e.v);
    }
    out << '\n';
  }
}

// ------------------------------------------------------------------ gen

std::size_t family_arity(Family f) {
  switch (f) {
    case Family::gen_kneser: return 3;
    case Family::kneser:
    case Family::schrijver:
    case Family::circular: return 2;
    default: return 1;
  }
}

long long parse_int(const std::string& token) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size()) throw UsageError("expected an integer, got '" + token + "'");
  return value;
}

/// keyword params...; "mycielski t <spec>"; "product <spec> [x] <spec>".
FamilySpec parse_spec_tokens(const std::vector<std::string>& tokens, std::size_t& pos) {
  if (pos >= tokens.size()) throw UsageError("gen: missing family");
  const std::string& head = tokens[pos++];
  const auto family = parse_family_keyword(head);
  if (!family) {
    try {
      return parse_family_name(head);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("gen: ") + e.what());
    }
  }
  FamilySpec spec;
  spec.family = *family;
  auto next_int = [&] {
    if (pos >= tokens.size()) throw UsageError("gen " + head + ": missing parameter");
    return parse_int(tokens[pos++]);
  };
  if (*family == Family::mycielski) {
    spec.params.push_back(next_int());
    spec.operands.push_back(parse_spec_tokens(tokens, pos));
  } else if (*family == Family::product) {
    spec.operands.push_back(parse_spec_tokens(tokens, pos));
    if (pos < tokens.size() && tokens[pos] == "x") ++pos;
    spec.operands.push_back(parse_spec_tokens(tokens, pos));
  } else {
    for (std::size_t i = 0; i < family_arity(*family); ++i) spec.params.push_back(next_int());
  }
  return spec;
}

int cmd_gen(const std::vector<std::string>& tokens, const std::string& output, std::ostream& out) {
  std::size_t pos = 0;
  FamilySpec spec = parse_spec_tokens(tokens, pos);
  if (pos != tokens.size()) throw UsageError("gen: unexpected token '" + tokens[pos] + "'");
  emit_graph(build_family(spec), output, out);
  return kExitOk;
}

// ------------------------------------------------------------------ inv

struct InvOptions {
  std::string invariant;
  std::string path;
  std::size_t a = 0;
  std::size_t b = 2;
  bool json = false;
  bool timing = false;
};

int cmd_inv(const InvOptions& opt, std::ostream& out) {
  const Graph g = load_graph(opt.path);
  const SearchLimits lim = limits();
  const auto start = std::chrono::steady_clock::now();
  Json value;
  Json witness;
  std::string text;

  const std::string& inv = opt.invariant;
  if (inv == "chi") {
    auto r = chromatic_number(g, lim);
    value = r.value;
    witness = to_json(r.witness);
    text = std::to_string(r.value);
  } else if (inv == "chi-c") {
    auto r = circular_chromatic_number(g, lim);
    value = to_json(r.value);
    witness = to_json(r.witness);
    text = r.value.to_string();
  } else if (inv == "alpha") {
    const VertexSet s = maximum_independent_set(g, lim);
    value = s.size();
    witness = to_json(s);
    text = std::to_string(s.size());
  } else if (inv == "omega") {
    const std::size_t w = clique_number(g, lim);
    value = w;
    text = std::to_string(w);
  } else if (inv == "girth") {
    const NatOrInf gi = girth(g);
    value = to_json(gi);
    text = gi.to_string();
  } else if (inv == "phi" || inv == "phi-ab") {
    auto r = inv == "phi" ? free_chromatic_number(g, lim)
                          : ab_free_chromatic_number(g, opt.a, opt.b, lim);
    value = to_json(r.value);
    if (r.witness) witness = to_json(*r.witness);
    text = r.value.to_string();
  } else if (inv == "free") {
    const bool free = is_free_graph(g);
    value = free;
    text = free ? "true" : "false";
  } else if (inv == "alpha-bar") {
    const std::size_t ab = max_free_size(g, lim);
    value = ab;
    text = std::to_string(ab);
  } else if (inv == "d") {
    const std::size_t d = min_edge_span(g);
    value = d;
    witness = to_json(min_span_edge(g));
    text = std::to_string(d);
  } else {
    throw UsageError("inv: unknown invariant '" + inv + "'");
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();

  if (opt.json) {
    Json j{{"graph", graph_name(g, opt.path)}, {"invariant", inv}};
    if (inv == "phi-ab") j["params"] = Json{{"a", opt.a}, {"b", opt.b}};
    j["value"] = value;
    if (!witness.is_null()) j["witness"] = witness;
    if (opt.timing) j["elapsed_ms"] = ms;
    print_json(out, j);
  } else {
    out << text << '\n';
    if (opt.timing) out << "elapsed_ms " << ms << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------------ hom

struct HomOptions {
  std::string g;
  std::string h;
  std::vector<std::size_t> circular;
  bool onto = false;
  bool json = false;
};

int cmd_hom(const HomOptions& opt, std::ostream& out) {
  const Graph g = load_graph(opt.g);
  const SearchLimits lim = limits();
  HomResult r;
  if (!opt.circular.empty()) {
    if (!opt.h.empty()) throw UsageError("hom: give either a target graph or --circular, not both");
    if (opt.onto) throw UsageError("hom: --onto needs a target graph");
    r = circular_hom(g, opt.circular[0], opt.circular[1], lim);
  } else {
    if (opt.h.empty()) throw UsageError("hom: missing target graph (or --circular n d)");
    const Graph h = load_graph(opt.h);
    r = opt.onto ? exists_onto_edge_hom(g, h, lim) : exists_hom(g, h, lim);
  }
  if (opt.json) {
    Json j{{"status", std::string(to_string(r.status))}};
    if (r.witness) j["mapping"] = to_json(*r.witness);
    j["nodes"] = r.nodes;
    print_json(out, j);
  } else {
    out << to_string(r.status);
    if (r.witness) out << ' ' << to_json(*r.witness).dump();
    out << '\n';
  }
  return r.exhausted() ? kExitExhausted : kExitOk;
}

// --------------------------------------------------------------- derive

struct DeriveOptions {
  std::string kind;
  std::string path;
  std::vector<std::size_t> circular;
  bool two = false;
  std::string coloring;
  std::size_t a = 0;
  std::size_t b = 2;
  std::size_t t = 1;
  bool json = false;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return Json::parse(in);
}

int cmd_derive(const DeriveOptions& opt, std::ostream& out) {
  const Graph g = load_graph(opt.path);
  const SearchLimits lim = limits();
  const std::string& kind = opt.kind;

  if (kind == "pipeline") {
    const auto r = block_pushdown_pipeline(g, opt.t, lim);
    if (opt.json) {
      Json j{{"graph", graph_name(g, opt.path)}, {"t", opt.t}, {"applicable", r.applicable}};
      if (r.applicable) {
        j["chi_c"] = to_json(r.circular);
        j["chi"] = r.chromatic;
        j["witness"] = to_json(r.witness);
        Json stages = Json::array();
        for (const auto& st : r.stages) {
          stages.push_back(Json{{"level", st.level}, {"coloring", to_json(st.coloring)}});
        }
        j["stages"] = stages;
        j["p"] = r.p;
        j["cap"] = r.cap;
        j["root_incident"] = r.root_incident;
      }
      print_json(out, j);
    } else if (!r.applicable) {
      out << "not applicable: chi_c(M^" << opt.t << ") = chi = " << r.chromatic << '\n';
    } else {
      out << "chi_c(M^" << opt.t << ") = " << r.circular.to_string() << ", chi = " << r.chromatic
          << '\n';
      for (const auto& st : r.stages) {
        out << "level " << st.level << ": " << st.coloring.class_count() << " classes, a="
            << st.coloring.a << ", b=" << st.coloring.b << ", undesignated "
            << st.coloring.non_free_count() << '\n';
      }
      out << "p " << r.p << " cap " << r.cap << " root-incident " << r.root_incident << '\n';
      print_free_coloring(out, g, r.stages.back().coloring);
    }
    return kExitOk;
  }

  const Graph* target = &g;
  std::optional<MycielskiGraph> mg;
  FreeColoring fc;
  if (kind == "free-from-circular") {
    std::size_t n = 0;
    std::size_t d = 0;
    HomWitness w;
    if (!opt.circular.empty()) {
      n = opt.circular[0];
      d = opt.circular[1];
      const auto r = circular_hom(g, n, d, lim);
      if (r.exhausted()) throw BudgetExhausted("circular_hom", r.nodes);
      if (!r.found()) throw std::runtime_error("no homomorphism to K_" + std::to_string(n) + "/" +
                                               std::to_string(d));
      w = *r.witness;
    } else {
      const auto cc = circular_chromatic_number(g, lim);
      n = cc.n();
      d = cc.d();
      w = cc.witness;
    }
    if (d < 2) {
      throw std::runtime_error("chi_c = " + std::to_string(n) +
                               " is an integer; the block coloring needs d >= 2");
    }
    fc = free_coloring_from_circular(g, w, n, d);
  } else if (kind == "via-edge") {
    fc = free_coloring_via_edge(g, lim);
  } else if (kind == "girth") {
    fc = free_coloring_girth(g, opt.two ? GirthVariant::two : GirthVariant::four, lim);
  } else if (kind == "pushdown") {
    mg.emplace(mycielskian(g));
    FreeColoring upper;
    if (!opt.coloring.empty()) {
      upper = free_coloring_from_json(read_json_file(opt.coloring), mg->graph().order());
    } else {
      const auto r = ab_free_chromatic_number(mg->graph(), opt.a, opt.b, lim);
      if (!r.witness) {
        throw std::runtime_error("M(G) has no (" + std::to_string(opt.a) + "," +
                                 std::to_string(opt.b) + ")-free coloring");
      }
      upper = *r.witness;
    }
    fc = mycielski_pushdown(*mg, upper);
  } else {
    throw UsageError("derive: unknown construction '" + kind + "'");
  }

  const auto problems = validate(*target, fc);
  if (!problems.empty()) throw ConstructionFailure(kind + " produced an invalid coloring", fc, problems);
  if (opt.json) {
    Json j{{"graph", graph_name(g, opt.path)}, {"construction", kind}, {"coloring", to_json(fc)}};
    print_json(out, j);
  } else {
    print_free_coloring(out, *target, fc);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- bound

struct BoundSpec {
  std::size_t arity;
  std::function<Json(const std::vector<std::int64_t>&, KVariant)> eval;
};

const std::map<std::string, BoundSpec>& bound_table() {
  using P = const std::vector<std::int64_t>&;
  static const std::map<std::string, BoundSpec> table{
      {"binomial", {2, [](P p, KVariant) { return big_json(binomial(p[0], p[1])); }}},
      {"kneser-chi", {2, [](P p, KVariant) { return Json(kneser_chi(p[0], p[1])); }}},
      {"ekr", {2, [](P p, KVariant) { return big_json(ekr_bound(p[0], p[1])); }}},
      {"hilton-milner",
       {2, [](P p, KVariant) { return big_json(hilton_milner_free_bound(p[0], p[1])); }}},
      {"hilton-phi",
       {3, [](P p, KVariant) { return big_json(hilton_phi_lower_bound(p[0], p[1], p[2])); }}},
      {"frankl", {3, [](P p, KVariant) { return big_json(frankl_bound(p[0], p[1], p[2])); }}},
      {"genkneser-free",
       {3, [](P p, KVariant) { return big_json(genkneser_free_bound(p[0], p[1], p[2])); }}},
      {"genkneser-chi-upper",
       {3, [](P p, KVariant) { return big_json(genkneser_chi_upper(p[0], p[1], p[2])); }}},
      {"schrijver-count",
       {2, [](P p, KVariant) { return big_json(schrijver_count(p[0], p[1])); }}},
      {"threshold", {2, [](P p, KVariant) { return big_json(mycielski_threshold(p[0], p[1])); }}},
      {"k-value", {1, [](P p, KVariant v) { return big_json(k_value(p[0], v)); }}},
      {"final",
       {3,
        [](P p, KVariant v) {
          const auto r = final_inequality_check(p[0], p[1], p[2], v);
          return Json{{"main", r.main},
                      {"double_counting", r.double_counting},
                      {"needed", r.needed},
                      {"k", big_json(r.k)},
                      {"rhs", big_json(r.rhs)}};
        }}},
  };
  return table;
}

KVariant parse_variant(const std::string& text) {
  if (text == "proof") return KVariant::proof;
  if (text == "statement") return KVariant::statement;
  throw UsageError("unknown k variant '" + text + "' (proof|statement)");
}

Json eval_bound(const std::string& name, const std::vector<std::int64_t>& params, KVariant v) {
  const auto& table = bound_table();
  const auto it = table.find(name);
  if (it == table.end()) throw UsageError("bound: unknown bound '" + name + "'");
  if (params.size() != it->second.arity) {
    throw UsageError("bound " + name + " expects " + std::to_string(it->second.arity) +
                     " parameter(s)");
  }
  return it->second.eval(params, v);
}

std::string value_text(const Json& v) {
  if (v.is_object() && v.contains("num")) {
    const std::string den = v["den"].is_string() ? v["den"].get<std::string>() : v["den"].dump();
    const std::string num = v["num"].is_string() ? v["num"].get<std::string>() : v["num"].dump();
    return den == "1" ? num : num + "/" + den;
  }
  if (v.is_object()) {
    std::string s;
    for (const auto& [key, item] : v.items()) {
      if (!s.empty()) s += ' ';
      s += key + "=" + value_text(item);
    }
    return s;
  }
  return v.is_string() ? v.get<std::string>() : v.dump();
}

struct BoundOptions {
  std::string name;
  std::vector<std::string> params;
  std::string batch;
  std::string variant = "proof";
  bool json = false;
};

int cmd_bound(const BoundOptions& opt, std::ostream& out) {
  const KVariant variant = parse_variant(opt.variant);
  if (!opt.batch.empty()) {
    const Json requests = read_json_file(opt.batch);
    if (!requests.is_array()) throw UsageError("bound --batch: expected a JSON array");
    Json results = Json::array();
    for (const auto& req : requests) {
      const auto name = req.at("name").get<std::string>();
      const auto params = req.at("params").get<std::vector<std::int64_t>>();
      const KVariant v = req.contains("variant")
                             ? parse_variant(req["variant"].get<std::string>())
                             : variant;
      results.push_back(Json{{"name", name}, {"params", params}, {"value", eval_bound(name, params, v)}});
    }
    print_json(out, results);
    return kExitOk;
  }
  if (opt.name.empty()) throw UsageError("bound: missing bound name (or --batch file)");
  std::vector<std::int64_t> params;
  for (const auto& p : opt.params) params.push_back(parse_int(p));
  const Json value = eval_bound(opt.name, params, variant);
  if (opt.json) {
    print_json(out, Json{{"name", opt.name}, {"params", params}, {"value", value}});
  } else {
    out << value_text(value) << '\n';
  }
  return kExitOk;
}

// --------------------------------------------------------------- verify

struct VerifyOptions {
  bool all = false;
  std::string check;
  std::string profile = "quick";
  std::string json_out;
  std::vector<std::string> params;
  bool timing = false;
};

Json parse_param_value(const std::string& text) {
  try {
    return parse_int(text);
  } catch (const UsageError&) {
    return text;
  }
}

std::string result_line(const CheckResult& r, bool timing) {
  std::string line = std::string(to_string(r.status)) + " " + r.name + " " + r.params.dump();
  if (!r.lhs.is_null()) line += " lhs=" + r.lhs.dump();
  if (!r.rhs.is_null()) line += " rhs=" + r.rhs.dump();
  if (!r.note.empty() && r.status != CheckStatus::pass) line += " (" + r.note + ")";
  if (timing) line += " " + std::to_string(r.elapsed_ms) + "ms";
  return line;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  const auto profile = parse_profile(opt.profile);
  if (!profile) throw UsageError("verify: unknown profile '" + opt.profile + "' (quick|full)");
  if (opt.all == !opt.check.empty()) throw UsageError("verify: give exactly one of --all or <check>");
  if (!opt.check.empty() && !is_registered(opt.check)) {
    throw UsageError("verify: unknown check '" + opt.check + "'");
  }
  if (opt.all && !opt.params.empty()) throw UsageError("verify: --param needs a single check");
  const auto budget = env_budget();

  Report report;
  report.profile = *profile;
  if (!opt.params.empty()) {
    Json params = Json::object();
    for (const auto& kv : opt.params) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0) throw UsageError("verify: --param expects key=value");
      params[kv.substr(0, eq)] = parse_param_value(kv.substr(eq + 1));
    }
    report.results.push_back(run_check(opt.check, params, *profile, budget));
    const auto status = report.results.back().status;
    report.summary.pass += status == CheckStatus::pass;
    report.summary.fail += status == CheckStatus::fail;
    report.summary.skip += status == CheckStatus::skip;
    report.summary.exhausted += status == CheckStatus::exhausted;
  } else {
    report = run_all(*profile, opt.all ? std::vector<std::string>{}
                                       : std::vector<std::string>{opt.check},
                     budget);
  }

  const Json j = to_json(report, opt.timing);
  if (opt.json_out == "-") {
    print_json(out, j);
  } else {
    for (const auto& r : report.results) out << result_line(r, opt.timing) << '\n';
    out << "summary: " << report.summary.pass << " pass, " << report.summary.fail << " fail, "
        << report.summary.skip << " skip, " << report.summary.exhausted << " exhausted\n";
    if (!opt.json_out.empty()) {
      std::ofstream file(opt.json_out);
      if (!file) throw std::runtime_error("cannot write " + opt.json_out);
      file << j.dump(2) << '\n';
    }
  }
  return report.summary.fail > 0 ? kExitFail : kExitOk;
}

// --------------------------------------------------------------- export

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(to_json(e));
  Json j{{"order", g.order()}, {"size", g.size()}, {"edges", edges}};
  if (g.has_labels()) j["labels"] = g.labels();
  if (g.provenance()) {
    j["name"] = g.provenance()->name();
    j["provenance"] = to_json(*g.provenance());
  }
  return j;
}

int cmd_export(const std::string& path, const std::string& format, const std::string& output,
               std::ostream& out) {
  const Graph g = load_graph(path);
  if (format == "dimacs") {
    emit_graph(g, output, out);
  } else if (format == "json") {
    if (output == "-") {
      print_json(out, graph_json(g));
    } else {
      std::ofstream file(output);
      if (!file) throw std::runtime_error("cannot write " + output);
      file << graph_json(g).dump(2) << '\n';
    }
  } else {
    throw UsageError("export: unknown format '" + format + "' (dimacs|json)");
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"circlab: exact circular and free colouring computations"};
  app.name("circlab");
  app.require_subcommand(1, 1);

  std::function<int()> action;

  std::vector<std::string> gen_tokens;
  std::string gen_out = "-";
  auto* gen = app.add_subcommand("gen", "Generate a graph family member as DIMACS");
  gen->add_option("family", gen_tokens,
                  "Family tokens (kneser 5 2, mycielski 2 complete 2, product cycle 5 x complete "
                  "2) or a display name such as \"M(C5)\"")
      ->required();
  gen->add_option("-o,--output", gen_out, "Output file ('-' for stdout)");
  gen->callback([&] { action = [&] { return cmd_gen(gen_tokens, gen_out, out); }; });

  InvOptions inv_opt;
  auto* inv = app.add_subcommand("inv", "Compute an exact invariant");
  inv->add_option("invariant", inv_opt.invariant,
                  "chi|chi-c|alpha|omega|girth|phi|phi-ab|free|alpha-bar|d")
      ->required();
  inv->add_option("graph", inv_opt.path, "DIMACS file ('-' for stdin)")->required();
  inv->add_option("--a", inv_opt.a, "Undesignated class allowance for phi-ab");
  inv->add_option("--b", inv_opt.b, "Support-edge cap for phi-ab");
  inv->add_flag("--json", inv_opt.json, "Machine-readable output");
  inv->add_flag("--timing", inv_opt.timing, "Report elapsed time");
  inv->callback([&] { action = [&] { return cmd_inv(inv_opt, out); }; });

  HomOptions hom_opt;
  auto* hom = app.add_subcommand("hom", "Search for a homomorphism G -> H or G -> K_{n/d}");
  hom->add_option("source", hom_opt.g, "Source graph")->required();
  hom->add_option("target", hom_opt.h, "Target graph");
  hom->add_option("--circular", hom_opt.circular, "Circular complete target n d")
      ->expected(2);
  hom->add_flag("--onto", hom_opt.onto, "Require the edge image to be all of E(H)");
  hom->add_flag("--json", hom_opt.json, "Machine-readable output");
  hom->callback([&] { action = [&] { return cmd_hom(hom_opt, out); }; });

  DeriveOptions der_opt;
  auto* der = app.add_subcommand("derive", "Build a free colouring by a construction");
  der->add_option("construction", der_opt.kind,
                  "free-from-circular|via-edge|girth|pushdown|pipeline")
      ->required();
  der->add_option("graph", der_opt.path, "Input graph (pushdown: the base G of M(G))")->required();
  der->add_option("--circular", der_opt.circular, "Use a homomorphism to K_{n/d} instead of chi_c")
      ->expected(2);
  der->add_flag("--two", der_opt.two, "Two-special-class girth variant (girth >= 7)");
  der->add_option("--coloring", der_opt.coloring, "pushdown: JSON free colouring of M(G)");
  der->add_option("--a", der_opt.a, "pushdown: a for the optimal colouring of M(G)");
  der->add_option("--b", der_opt.b, "pushdown: b for the optimal colouring of M(G)");
  der->add_option("-t", der_opt.t, "pipeline: Mycielski iterations");
  der->add_flag("--json", der_opt.json, "Machine-readable output");
  der->callback([&] { action = [&] { return cmd_derive(der_opt, out); }; });

  BoundOptions bound_opt;
  auto* bound = app.add_subcommand("bound", "Evaluate a closed-form bound exactly");
  bound->add_option("name", bound_opt.name,
                    "binomial|kneser-chi|ekr|hilton-milner|hilton-phi|frankl|genkneser-free|"
                    "genkneser-chi-upper|schrijver-count|threshold|k-value|final");
  bound->add_option("params", bound_opt.params, "Integer parameters");
  bound->add_option("--batch", bound_opt.batch, "JSON array of {name, params[, variant]}");
  bound->add_option("--variant", bound_opt.variant, "k variant: proof|statement");
  bound->add_flag("--json", bound_opt.json, "Machine-readable output");
  bound->callback([&] { action = [&] { return cmd_bound(bound_opt, out); }; });

  std::string myc_path;
  std::size_t myc_t = 1;
  std::string myc_out = "-";
  auto* myc = app.add_subcommand("myc", "Iterated Mycielskian of a graph");
  myc->add_option("graph", myc_path, "Input graph")->required();
  myc->add_option("-t", myc_t, "Iterations");
  myc->add_option("-o,--output", myc_out, "Output file ('-' for stdout)");
  myc->callback([&] {
    action = [&] {
      emit_graph(iterated_mycielskian(load_graph(myc_path), myc_t).graph(), myc_out, out);
      return kExitOk;
    };
  });

  std::string prod_g;
  std::string prod_h;
  std::string prod_out = "-";
  auto* prod = app.add_subcommand("product", "Categorical product G x H");
  prod->add_option("first", prod_g, "First factor")->required();
  prod->add_option("second", prod_h, "Second factor")->required();
  prod->add_option("-o,--output", prod_out, "Output file ('-' for stdout)");
  prod->callback([&] {
    action = [&] {
      emit_graph(categorical_product(load_graph(prod_g), load_graph(prod_h)), prod_out, out);
      return kExitOk;
    };
  });

  VerifyOptions ver_opt;
  auto* ver = app.add_subcommand("verify", "Run the verification suite");
  ver->add_option("check", ver_opt.check, "A single registered check");
  ver->add_flag("--all", ver_opt.all, "Every registered check");
  ver->add_option("--profile", ver_opt.profile, "quick|full");
  ver->add_option("--json", ver_opt.json_out, "Write the JSON report ('-' for stdout)");
  ver->add_option("--param", ver_opt.params, "Instance parameter key=value (repeatable)");
  ver->add_flag("--timing", ver_opt.timing, "Include elapsed times");
  ver->callback([&] { action = [&] { return cmd_verify(ver_opt, out); }; });

  std::string exp_path;
  std::string exp_format = "dimacs";
  std::string exp_out = "-";
  auto* exp = app.add_subcommand("export", "Re-emit a graph as DIMACS or JSON");
  exp->add_option("graph", exp_path, "Input graph")->required();
  exp->add_option("--format", exp_format, "dimacs|json");
  exp->add_option("-o,--output", exp_out, "Output file ('-' for stdout)");
  exp->callback([&] { action = [&] { return cmd_export(exp_path, exp_format, exp_out, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExhausted& e) {
    err << "EXHAUSTED: " << e.what() << '\n';
    return kExitExhausted;
  } catch (const ConstructionFailure& e) {
    err << "FAIL: " << e.what() << '\n';
    for (const auto& p : e.problems()) err << "  " << p << '\n';
    err << to_json(e.coloring()).dump() << '\n';
    return kExitFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace circlab::cli
