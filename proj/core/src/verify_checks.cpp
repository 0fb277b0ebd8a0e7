#include <algorithm>
#include <array>
#include <limits>

#include "circlab/formulas.hpp"
#include "circlab/free_constructions.hpp"
#include "verify_internal.hpp"

namespace circlab::detail {

namespace {

using Names = std::vector<std::string>;

const Names& quick_corpus() {
  static const Names names{"K2",   "K3",      "K4",      "P4",      "C5",      "C7",   "K2xK3",
                           "KG(5,2)", "KG(4,2)", "SG(5,2)", "SG(6,2)", "M(K2)", "M(K3)", "M(C5)"};
  return names;
}

const Names& full_extras() {
  static const Names names{"KG(6,2)",   "KG(7,2)",  "KG(7,3)", "KG(6,3,1)",
                           "M^2(K2)", "M^2(K3)", "M(KG(5,2))"};
  return names;
}

Names corpus(Profile profile) {
  Names out = quick_corpus();
  if (profile == Profile::full) out.insert(out.end(), full_extras().begin(), full_extras().end());
  return out;
}

std::vector<Json> graph_instances(const Names& names) {
  std::vector<Json> out;
  for (const auto& n : names) out.push_back(Json{{"graph", n}});
  return out;
}

std::vector<Json> corpus_instances(Profile profile) { return graph_instances(corpus(profile)); }

// Corpus members small enough for exact phi in this profile.
std::vector<Json> phi_instances(Profile profile) {
  const std::size_t cap = profile_config(profile).max_phi_vertices;
  Names names;
  for (const auto& n : corpus(profile)) {
    if (build_family(n).order() <= cap) names.push_back(n);
  }
  return graph_instances(names);
}

Json integer(const BigCount& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return to_string(value);
}

CheckResult verdict(bool ok, Json lhs, Json rhs, std::string failure = {}) {
  CheckResult r;
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  if (!ok) r.note = std::move(failure);
  return r;
}

std::string name_of(const Json& params) { return params.at("graph").get<std::string>(); }

std::int64_t int_param(const Json& params, const char* key) {
  return params.at(key).get<std::int64_t>();
}

void require_phi_size(Memo& memo, const std::string& name) {
  const std::size_t order = memo.graph(name).order();
  if (order > memo.config().max_phi_vertices) {
    throw Inapplicable{name + " has " + std::to_string(order) +
                       " vertices, above the exact phi cap of " +
                       std::to_string(memo.config().max_phi_vertices)};
  }
}

void require_t(Memo& memo, std::size_t t) {
  if (t > memo.config().max_t) {
    throw Inapplicable{"t=" + std::to_string(t) + " above the profile cap " +
                       std::to_string(memo.config().max_t)};
  }
}

void require_free(Memo& memo, const std::string& name) {
  if (!is_free_graph(memo.graph(name))) throw Inapplicable{name + " is not a free graph"};
}

bool le(const NatOrInf& x, std::size_t bound) { return x.is_finite() && x.value() <= bound; }

// ---------------------------------------------------------------- checks

CheckResult myc_chi_omega(const Json& params, Memo& memo) {
  const std::string g = name_of(params);
  const std::string mg = tower_name(g, 1);
  memo.tower(g, 1);
  const Json lhs{{"chi", memo.chi(mg)}, {"omega", memo.omega(mg)}};
  const Json rhs{{"chi", memo.chi(g) + 1}, {"omega", memo.omega(g)}};
  return verdict(lhs == rhs, lhs, rhs, "chi(M(G)) or omega(M(G)) differs");
}

CheckResult chi_kneser(const Json& params, Memo& memo) {
  const auto m = int_param(params, "m");
  const auto n = int_param(params, "n");
  const std::string g = FamilySpec{Family::kneser, {m, n}, {}}.name();
  const std::size_t chi = memo.chi(g);
  const std::int64_t formula = kneser_chi(m, n);
  return verdict(static_cast<std::int64_t>(chi) == formula, chi, formula);
}

CheckResult chi_c_jhs(const Json& params, Memo& memo) {
  const auto m = int_param(params, "m");
  const auto n = int_param(params, "n");
  if (!(m <= 2 * n + 2 || n == 2)) throw Inapplicable{"needs m <= 2n+2 or n = 2"};
  const std::string g = FamilySpec{Family::kneser, {m, n}, {}}.name();
  const auto& cc = memo.chi_c(g);
  auto r = verdict(cc.value == Rational(static_cast<std::int64_t>(cc.chromatic)), to_json(cc.value),
                   to_json(Rational(static_cast<std::int64_t>(cc.chromatic))));
  r.witness = to_json(cc.witness);
  return r;
}

CheckResult simonyi_tardos_even(const Json& params, Memo& memo) {
  const auto n = int_param(params, "n");
  const auto t = int_param(params, "t");
  if ((n + t) % 2 != 0) throw Inapplicable{"needs n+t even"};
  require_t(memo, static_cast<std::size_t>(t));
  const std::string base = "K" + std::to_string(n);
  memo.tower(base, static_cast<std::size_t>(t));
  const auto& cc = memo.chi_c(tower_name(base, static_cast<std::size_t>(t)));
  auto r = verdict(cc.value == Rational(n + t), to_json(cc.value), to_json(Rational(n + t)));
  r.witness = to_json(cc.witness);
  return r;
}

CheckResult free_circular(const Json& params, Memo& memo) {
  const std::string g = name_of(params);
  const auto& cc = memo.chi_c(g);
  if (cc.d() < 2) throw Inapplicable{"chi_c(" + g + ") = chi, so d = 1"};
  const FreeColoring fc = free_coloring_from_circular(memo.graph(g), cc.witness, cc.n(), cc.d());
  const auto bound = static_cast<std::size_t>(
      (cc.value * Rational(static_cast<std::int64_t>(cc.d()), static_cast<std::int64_t>(cc.d() - 1)))
          .ceil());
  const std::size_t chi_bound = 2 * cc.chromatic - 1;
  Json lhs{{"classes", fc.class_count()}, {"cap", fc.b}};
  bool ok = fc.class_count() <= bound && bound <= chi_bound && fc.b == 2;
  if (memo.graph(g).order() <= memo.config().max_phi_vertices) {
    const NatOrInf phi = memo.phi(g).value;
    lhs["phi"] = to_json(phi);
    ok = ok && le(phi, bound);
  }
  auto r = verdict(ok, lhs, Json{{"bound", bound}, {"two_chi_minus_one", chi_bound}},
                   "block coloring or phi exceeds the bound");
  r.witness = to_json(fc);
  return r;
}

CheckResult phi_lower(const Json& params, Memo& memo) {
  const std::string g = name_of(params);
  require_phi_size(memo, g);
  require_free(memo, g);
  const Graph& graph = memo.graph(g);
  const std::size_t n = graph.order();
  const std::size_t abar = memo.alpha_bar(g);
  const std::size_t d = min_edge_span(graph);
  const NatOrInf phi = memo.phi(g).value;
  const bool first = phi.is_infinite() || phi.value() * abar >= n;
  const bool second = abar <= n - d;
  const Json rhs{{"n_over_alpha_bar", to_json(Rational(static_cast<std::int64_t>(n),
                                                       static_cast<std::int64_t>(abar)))},
                 {"n_over_n_minus_d", to_json(Rational(static_cast<std::int64_t>(n),
                                                       static_cast<std::int64_t>(n - d)))}};
  return verdict(first && second, to_json(phi), rhs, "phi below n/alpha_bar or alpha_bar > n-d");
}

CheckResult girth_upper(const Json& params, Memo& memo) {
  const std::string g = name_of(params);
  require_free(memo, g);
  const Graph& graph = memo.graph(g);
  const std::size_t chi = memo.chi(g);
  const std::size_t d = min_edge_span(graph);
  const NatOrInf gir = girth(graph);
  Json lhs = Json::object();
  Json rhs{{"chi_plus_d", chi + d}};
  bool ok = true;
  const FreeColoring via = free_coloring_via_edge(graph, memo.limits());
  lhs["via_edge_classes"] = via.class_count();
  ok = ok && via.class_count() <= chi + d;
  std::optional<NatOrInf> phi;
  if (graph.order() <= memo.config().max_phi_vertices) {
    phi = memo.phi(g).value;
    lhs["phi"] = to_json(*phi);
    ok = ok && le(*phi, chi + d);
  }
  if (NatOrInf(5) <= gir) {
    const FreeColoring four = free_coloring_girth(graph, GirthVariant::four, memo.limits());
    lhs["girth_classes"] = four.class_count();
    rhs["chi_plus_4"] = chi + 4;
    ok = ok && four.class_count() <= chi + 4 && (!phi || le(*phi, chi + 4));
  }
  if (NatOrInf(7) <= gir && gir.is_finite()) {
    const FreeColoring two = free_coloring_girth(graph, GirthVariant::two, memo.limits());
    lhs["girth7_classes"] = two.class_count();
    rhs["chi_plus_2"] = chi + 2;
    ok = ok && two.class_count() <= chi + 2 && (!phi || le(*phi, chi + 2));
  }
  return verdict(ok, lhs, rhs, "a construction or phi exceeds its bound");
}

CheckResult delta_corollary(const Json& params, Memo& memo) {
  const std::string g = name_of(params);
  require_phi_size(memo, g);
  require_free(memo, g);
  const Graph& graph = memo.graph(g);
  const std::size_t bound = memo.chi(g) + graph.max_degree() + graph.min_degree();
  const NatOrInf phi = memo.phi(g).value;
  return verdict(le(phi, bound) && min_edge_span(graph) <= graph.max_degree() + graph.min_degree(),
                 to_json(phi), bound);
}

CheckResult product_example(const Json& params, Memo& memo) {
  const auto m = int_param(params, "m");
  const std::string g = "K2xK" + std::to_string(m);
  require_phi_size(memo, g);
  const NatOrInf phi = memo.phi(g).value;
  const std::size_t chi = memo.chi(g);
  const std::size_t d = min_edge_span(memo.graph(g));
  const Json lhs{{"phi", to_json(phi)}, {"chi_plus_d", chi + d}};
  const Json rhs{{"phi", 2 * m}, {"chi_plus_d", 2 * m}};
  return verdict(lhs == rhs, lhs, rhs);
}

CheckResult chain_lemma(const Json& params, Memo& memo) {
  const std::string g = name_of(params);
  const Graph& graph = memo.graph(g);
  if (graph.order() > 8) throw Inapplicable{"chain lemma sweep is limited to 8 vertices"};
  const NatOrInf phi = memo.phi(g).value;
  std::vector<std::string> problems;

  // (a) phi^0_b >= phi, with equality once the cap cannot bind.
  for (std::size_t b = 1; b <= 4; ++b) {
    if (memo.phi_ab(g, 0, b).value < phi) problems.push_back("phi^0_" + std::to_string(b) + " < phi");
  }
  const std::size_t loose = std::max(graph.order(), graph.size());
  if (memo.phi_ab(g, 0, loose).value != phi) {
    problems.push_back("phi^0_" + std::to_string(loose) + " != phi");
  }

  // (b) monotone in both parameters.
  Json table = Json::array();
  for (std::size_t a = 0; a <= 3; ++a) {
    Json row = Json::array();
    for (std::size_t b = 1; b <= 4; ++b) {
      const NatOrInf here = memo.phi_ab(g, a, b).value;
      row.push_back(to_json(here));
      if (a > 0 && memo.phi_ab(g, a - 1, b).value < here) {
        problems.push_back("not monotone in a at a=" + std::to_string(a) + ", b=" + std::to_string(b));
      }
      if (b > 1 && memo.phi_ab(g, a, b - 1).value < here) {
        problems.push_back("not monotone in b at a=" + std::to_string(a) + ", b=" + std::to_string(b));
      }
    }
    table.push_back(row);
  }

  // (c) counting bound phi^a_b >= (|V| - a alpha) / alpha_bar.
  const std::size_t abar = memo.alpha_bar(g);
  const std::size_t alpha = memo.alpha(g);
  if (abar > 0) {
    for (std::size_t a = 0; a <= 3; ++a) {
      for (std::size_t b = 1; b <= 4; ++b) {
        const NatOrInf v = memo.phi_ab(g, a, b).value;
        const auto need = static_cast<std::int64_t>(graph.order()) -
                          static_cast<std::int64_t>(a * alpha);
        if (v.is_finite() && static_cast<std::int64_t>(v.value() * abar) < need) {
          problems.push_back("counting bound fails at a=" + std::to_string(a) +
                             ", b=" + std::to_string(b));
        }
      }
    }
  }
  Json rhs{{"phi", to_json(phi)}, {"alpha", alpha}, {"alpha_bar", abar}, {"loose_cap", loose}};
  auto r = verdict(problems.empty(), Json{{"phi_ab", table}}, rhs,
                   problems.empty() ? "" : problems.front());
  if (!problems.empty()) r.witness = problems;
  return r;
}

CheckResult phi2_contrapositive(const Json& params, Memo& memo) {
  const std::string g = name_of(params);
  require_phi_size(memo, g);
  const auto& cc = memo.chi_c(g);
  if (cc.d() == 1) throw Inapplicable{"chi_c(" + g + ") = chi"};
  const std::size_t bound = 2 * cc.chromatic - 1;
  Json values = Json::object();
  bool ok = true;
  for (std::size_t a = 0; a <= 2; ++a) {
    for (std::size_t b = 2; b <= 3; ++b) {
      const NatOrInf v = memo.phi_ab(g, a, b).value;
      values["a" + std::to_string(a) + "b" + std::to_string(b)] = to_json(v);
      ok = ok && le(v, bound);
    }
  }
  return verdict(ok, values, bound, "some phi^a_b reaches 2chi although chi_c != chi");
}

CheckResult onto_hom_monotone(const Json& params, Memo& memo) {
  const std::string g = name_of(params);
  const std::string h = params.at("target").get<std::string>();
  require_phi_size(memo, g);
  require_phi_size(memo, h);
  for (const auto& name : {g, h}) {
    if (!is_connected(memo.graph(name))) throw Inapplicable{name + " is not connected"};
    require_free(memo, name);
  }
  const HomResult hom = exists_onto_edge_hom(memo.graph(g), memo.graph(h), memo.limits());
  if (hom.exhausted()) throw BudgetExhausted("onto-edge homomorphism search", hom.nodes);
  if (!hom.found()) throw Inapplicable{"no onto-edge homomorphism " + g + " -> " + h};
  const NatOrInf pg = memo.phi(g).value;
  const NatOrInf ph = memo.phi(h).value;
  auto r = verdict(pg <= ph, to_json(pg), to_json(ph));
  r.witness = to_json(*hom.witness);
  return r;
}

CheckResult lemma_a_hom(const Json& params, Memo& memo) {
  const std::string g = name_of(params);
  const auto t = static_cast<std::size_t>(int_param(params, "t"));
  require_t(memo, t);
  if (t == 0) throw Inapplicable{"needs t >= 1"};
  const MycielskiGraph& mg = memo.tower(g, t);
  const auto& cc = memo.chi_c(tower_name(g, t));
  if (cc.d() < 2) throw Inapplicable{"chi_c(" + tower_name(g, t) + ") is an integer"};
  const HomResult hom = constrained_mycielski_hom(mg, cc.n(), cc.d(), memo.limits());
  if (hom.exhausted()) throw BudgetExhausted("constrained Mycielski homomorphism", hom.nodes);
  const bool ok = hom.found() &&
                  is_homomorphism(mg.graph(), circular_complete(static_cast<int>(cc.n()),
                                                                static_cast<int>(cc.d())),
                                  hom.witness->mapping) &&
                  satisfies_root_twin_condition(mg, hom.witness->mapping, cc.n(), cc.d());
  auto r = verdict(ok, hom.found() ? "FOUND" : "NONE", to_json(cc.value),
                   "no homomorphism with c(z)=0 and the twin condition");
  if (hom.found()) r.witness = to_json(*hom.witness);
  return r;
}

CheckResult mmm1(const Json& params, Memo& memo) {
  const std::string g = name_of(params);
  const auto t = static_cast<std::size_t>(int_param(params, "t"));
  std::size_t a = static_cast<std::size_t>(int_param(params, "a"));
  std::size_t b = static_cast<std::size_t>(int_param(params, "b"));
  require_t(memo, t);
  if (t == 0) throw Inapplicable{"needs t >= 1"};
  const MycielskiGraph& top = memo.tower(g, t);
  const std::string top_name = tower_name(g, t);
  require_phi_size(memo, top_name);
  const FreeChromatic& upper = memo.phi_ab(top_name, a, b);
  std::size_t a_low = a;
  std::size_t b_low = b;
  for (std::size_t i = 0; i < t; ++i) {
    a_low += b_low;
    b_low *= 2;
  }
  const NatOrInf lower = memo.phi_ab(g, a_low, b_low).value;
  bool ok = upper.value >= lower;
  Json lhs{{"phi", to_json(upper.value)}, {"a", a}, {"b", b}};
  if (upper.witness) {
    FreeColoring current = *upper.witness;
    const MycielskiGraph* level = &top;
    while (level->level() > 0) {
      current = mycielski_pushdown(*level, current);
      level = level->base().get();
    }
    lhs["pushed_classes"] = current.class_count();
    ok = ok && current.a == a_low && current.b == b_low && lower <= NatOrInf(current.class_count());
  }
  return verdict(ok, lhs, Json{{"phi", to_json(lower)}, {"a", a_low}, {"b", b_low}},
                 "phi^a_b(M^t(G)) below the pushed-down value");
}

CheckResult mmm11(const Json& params, Memo& memo) {
  const std::string g = name_of(params);
  const auto t = static_cast<std::size_t>(int_param(params, "t"));
  require_t(memo, t);
  memo.tower(g, t);
  const std::string top = tower_name(g, t);
  const auto& cc = memo.chi_c(top);
  const std::size_t chi_g = memo.chi(g);
  if (cc.chromatic != chi_g + t) {
    return verdict(false, cc.chromatic, chi_g + t, "chi(M^t(G)) != chi(G)+t");
  }
  if (cc.d() == 1) throw Inapplicable{"chi_c(" + top + ") = chi"};
  require_phi_size(memo, g);
  const std::size_t cap = std::size_t{2} << t;
  const NatOrInf v = memo.phi_ab(g, cap - 2, cap).value;
  const std::size_t bound = 2 * chi_g + 2 * t - 1;
  return verdict(le(v, bound), to_json(v), bound);
}

CheckResult mmm2(const Json& params, Memo& memo) {
  const std::string g = name_of(params);
  const auto t = static_cast<std::size_t>(int_param(params, "t"));
  require_t(memo, t);
  if (t == 0) throw Inapplicable{"needs t >= 1"};
  // Warm the cache so the pipeline's own chi_c call is the only search.
  memo.tower(g, t);
  const BlockPushdownResult run = block_pushdown_pipeline(memo.graph(g), t, memo.limits());
  if (!run.applicable) {
    throw Inapplicable{"chi_c(" + tower_name(g, t) + ") = " + run.circular.to_string() + " = chi"};
  }
  const std::size_t p_bound = (std::size_t{1} << t) + 3;
  const std::size_t cap = std::size_t{2} << t;
  const FreeColoring& last = run.stages.back().coloring;
  const std::size_t class_bound = 2 * run.chromatic - 1;
  bool ok = run.p <= p_bound && run.cap == cap && last.class_count() <= class_bound;
  Json lhs{{"p", run.p},
           {"root_incident_edges", run.root_incident},
           {"cap", run.cap},
           {"classes", last.class_count()}};
  if (memo.graph(g).order() <= memo.config().max_phi_vertices) {
    const NatOrInf exact = memo.phi_ab(g, p_bound, cap).value;
    lhs["phi_exact"] = to_json(exact);
    ok = ok && le(exact, class_bound);
  }
  auto r = verdict(ok, lhs,
                   Json{{"p", p_bound}, {"cap", cap}, {"classes", class_bound}},
                   "pipeline parameters exceed the lemma");
  Json stages = Json::array();
  for (const auto& s : run.stages) {
    stages.push_back(Json{{"level", s.level}, {"coloring", to_json(s.coloring)}});
  }
  r.witness = Json{{"chi_c", to_json(run.circular)}, {"mapping", to_json(run.witness)},
                   {"stages", stages}};
  return r;
}

CheckResult hilton_free(const Json& params, Memo& memo) {
  const auto m = int_param(params, "m");
  const auto n = int_param(params, "n");
  if (m <= 2 * n) throw Inapplicable{"needs m > 2n"};
  const std::string g = FamilySpec{Family::kneser, {m, n}, {}}.name();
  const std::size_t abar = memo.alpha_bar(g);
  const BigCount bound = hilton_milner_free_bound(m, n);
  return verdict(BigCount(abar) <= bound, abar, integer(bound));
}

CheckResult frankl_alpha(const Json& params, Memo& memo) {
  const auto m = int_param(params, "m");
  const auto n = int_param(params, "n");
  const auto s = int_param(params, "s");
  if (!frankl_domain(m, n, s)) throw Inapplicable{"needs n > s >= 0 and m >= (s+2)(n-s)"};
  const std::string g = FamilySpec{s == 0 ? Family::kneser : Family::gen_kneser,
                                   s == 0 ? std::vector<long long>{m, n}
                                          : std::vector<long long>{m, n, s},
                                   {}}
                            .name();
  const std::size_t alpha = memo.alpha(g);
  const BigCount bound = frankl_bound(m, n, s);
  return verdict(BigCount(alpha) <= bound, alpha, integer(bound));
}

CheckResult genkneser_coloring(const Json& params, Memo& memo) {
  const auto m = int_param(params, "m");
  const auto n = int_param(params, "n");
  const auto s = int_param(params, "s");
  const Coloring c = genkneser_greedy_coloring(static_cast<int>(m), static_cast<int>(n),
                                               static_cast<int>(s));
  std::vector<bool> used(c.k, false);
  for (std::size_t x : c.color) used[x] = true;
  const auto colors = static_cast<std::size_t>(std::count(used.begin(), used.end(), true));
  const std::string g = FamilySpec{Family::gen_kneser, {m, n, s}, {}}.name();
  const std::size_t abar = memo.alpha_bar(g);
  const BigCount palette = binomial(m, s + 1);
  const BigCount free_bound = genkneser_free_bound(m, n, s);
  const bool proper = is_proper_coloring(memo.graph(g), c);
  auto r = verdict(proper && BigCount(colors) <= palette && BigCount(abar) <= free_bound,
                   Json{{"colors", colors}, {"alpha_bar", abar}, {"proper", proper}},
                   Json{{"colors", integer(palette)}, {"alpha_bar", integer(free_bound)}});
  r.witness = to_json(c);
  return r;
}

CheckResult schrijver_count_critical(const Json& params, Memo& memo) {
  const auto m = int_param(params, "m");
  const auto n = int_param(params, "n");
  const std::string g = FamilySpec{Family::schrijver, {m, n}, {}}.name();
  const Graph& graph = memo.graph(g);
  const BigCount count = schrijver_count(m, n);
  const std::size_t chi = memo.chi(g);
  const std::int64_t expected_chi = kneser_chi(m, n);
  Json reduced = Json::array();
  bool critical = true;
  for (Vertex v = 0; v < graph.order(); ++v) {
    VertexSet keep = graph.vertices();
    keep.erase(v);
    const std::size_t c = chromatic_number(induced_subgraph(graph, keep), memo.limits()).value;
    reduced.push_back(c);
    critical = critical && c < chi;
  }
  const bool ok = BigCount(graph.order()) == count &&
                  static_cast<std::int64_t>(chi) == expected_chi && critical;
  return verdict(ok, Json{{"vertices", graph.order()}, {"chi", chi}, {"chi_minus_v", reduced}},
                 Json{{"vertices", integer(count)}, {"chi", expected_chi}},
                 "count, chromatic number or vertex-criticality mismatch");
}

// ---------------------------------------------------------------- instances

std::vector<Json> kneser_pairs(Profile profile, std::vector<std::pair<int, int>> quick,
                               std::vector<std::pair<int, int>> full) {
  if (profile == Profile::full) quick.insert(quick.end(), full.begin(), full.end());
  std::vector<Json> out;
  for (auto [m, n] : quick) out.push_back(Json{{"m", m}, {"n", n}});
  return out;
}

std::vector<Json> triples(Profile profile, std::vector<std::array<int, 3>> quick,
                          std::vector<std::array<int, 3>> full) {
  if (profile == Profile::full) quick.insert(quick.end(), full.begin(), full.end());
  std::vector<Json> out;
  for (auto [m, n, s] : quick) out.push_back(Json{{"m", m}, {"n", n}, {"s", s}});
  return out;
}

std::vector<Json> with_t(const Names& names, std::size_t t) {
  std::vector<Json> out;
  for (const auto& n : names) out.push_back(Json{{"graph", n}, {"t", t}});
  return out;
}

std::vector<Json> chi_kneser_instances(Profile p) {
  return kneser_pairs(p, {{3, 1}, {4, 2}, {5, 2}}, {{6, 2}, {7, 2}, {7, 3}});
}

std::vector<Json> chi_c_jhs_instances(Profile p) {
  return kneser_pairs(p, {{3, 1}, {4, 1}, {4, 2}, {5, 2}}, {{6, 2}, {7, 2}, {7, 3}});
}

std::vector<Json> simonyi_tardos_instances(Profile p) {
  std::vector<Json> out{Json{{"n", 2}, {"t", 0}}, Json{{"n", 3}, {"t", 1}}, Json{{"n", 5}, {"t", 1}}};
  if (p == Profile::full) {
    out.push_back(Json{{"n", 2}, {"t", 2}});
    out.push_back(Json{{"n", 4}, {"t", 2}});
  }
  return out;
}

std::vector<Json> product_instances(Profile p) {
  std::vector<Json> out;
  const int top = p == Profile::full ? 6 : 4;
  for (int m = 2; m <= top; ++m) out.push_back(Json{{"m", m}});
  return out;
}

std::vector<Json> chain_instances(Profile p) {
  Names names;
  for (const auto& n : corpus(p)) {
    if (build_family(n).order() <= 8) names.push_back(n);
  }
  return graph_instances(names);
}

std::vector<Json> onto_hom_instances(Profile p) {
  std::vector<std::pair<std::string, std::string>> pairs{
      {"C5", "C5"}, {"C7", "C5"}, {"SG(5,2)", "C5"}, {"M(K2)", "C5"}, {"KG(5,2)", "C5"},
      {"K2xK4", "K2xK3"}};
  if (p == Profile::full) {
    pairs.push_back({"C9", "C7"});
    pairs.push_back({"M(C5)", "K(7,2)"});
  }
  std::vector<Json> out;
  for (const auto& [g, h] : pairs) out.push_back(Json{{"graph", g}, {"target", h}});
  return out;
}

std::vector<Json> lemma_a_instances(Profile p) {
  auto out = with_t({"K2", "K3", "P4", "C5", "C7", "K2xK3"}, 1);
  if (p == Profile::full) {
    for (auto& j : with_t({"K2", "K3"}, 2)) out.push_back(j);
  }
  return out;
}

std::vector<Json> mmm1_instances(Profile p) {
  std::vector<Json> out;
  for (const char* g : {"K2", "K3", "P4", "C5"}) {
    out.push_back(Json{{"graph", g}, {"t", 1}, {"a", 0}, {"b", 2}});
  }
  for (const char* g : {"K2", "P4"}) {
    out.push_back(Json{{"graph", g}, {"t", 1}, {"a", 1}, {"b", 1}});
  }
  if (p == Profile::full) out.push_back(Json{{"graph", "K2"}, {"t", 2}, {"a", 0}, {"b", 2}});
  return out;
}

std::vector<Json> mmm11_instances(Profile p) {
  auto out = with_t({"K2", "K3", "P4", "C5"}, 1);
  if (p == Profile::full) {
    for (auto& j : with_t({"K2", "K3"}, 2)) out.push_back(j);
  }
  return out;
}

std::vector<Json> mmm2_instances(Profile p) { return mmm11_instances(p); }

std::vector<Json> hilton_instances(Profile p) {
  return kneser_pairs(p, {{4, 1}, {5, 1}, {5, 2}}, {{6, 2}, {7, 2}, {7, 3}, {8, 2}});
}

std::vector<Json> frankl_instances(Profile p) {
  return triples(p, {{4, 2, 0}, {5, 2, 0}, {5, 2, 1}}, {{6, 3, 1}, {7, 3, 1}, {6, 2, 0}, {7, 2, 0}});
}

std::vector<Json> genkneser_instances(Profile p) {
  return triples(p, {{5, 2, 0}, {4, 2, 1}, {5, 2, 1}}, {{6, 3, 1}, {7, 3, 1}, {6, 3, 0}});
}

std::vector<Json> schrijver_instances(Profile p) {
  return kneser_pairs(p, {{5, 2}, {6, 2}, {7, 3}}, {{7, 2}, {8, 2}, {8, 3}});
}

}  // namespace

const std::vector<CheckEntry>& check_table() {
  static const std::vector<CheckEntry> table{
      {{"myc-chi-omega", "chi(M(G)) = chi(G)+1 and omega(M(G)) = omega(G)"},
       myc_chi_omega, corpus_instances},
      {{"chi-kneser", "chi(KG(m,n)) = m-2n+2"}, chi_kneser, chi_kneser_instances},
      {{"chi-c-jhs", "chi_c(KG(m,n)) = chi(KG(m,n)) when m <= 2n+2 or n = 2"}, chi_c_jhs,
       chi_c_jhs_instances},
      {{"simonyi-tardos-even", "chi_c(M^t(K_n)) = n+t when n+t is even"}, simonyi_tardos_even,
       simonyi_tardos_instances},
      {{"free-circular", "phi(G) <= ceil(chi_c(G)(1+1/(d-1))) <= 2chi(G)-1 when d >= 2"},
       free_circular, corpus_instances},
      {{"phi-lower", "phi(G) >= n/alpha_bar(G) >= n/(n-d(G))"}, phi_lower, phi_instances},
      {{"girth-upper", "phi <= chi+d(G); phi <= chi+4 if g >= 5; phi <= chi+2 if g >= 7"},
       girth_upper, corpus_instances},
      {{"delta-corollary", "phi(G) <= chi(G)+Delta+delta"}, delta_corollary, phi_instances},
      {{"product-example", "phi(K2 x K_m) = 2m = chi + d"}, product_example, product_instances},
      {{"chain-lemma", "phi^0_b >= phi with equality for large b; monotone; counting bound"},
       chain_lemma, chain_instances},
      {{"phi2-contrapositive", "chi_c != chi implies phi^a_b <= 2chi-1 for b >= 2"},
       phi2_contrapositive, phi_instances},
      {{"onto-hom-monotone", "onto edge homomorphism G -> H implies phi(G) <= phi(H)"},
       onto_hom_monotone, onto_hom_instances},
      {{"lemma-a-hom", "a circular witness with c(z)=0 and the twin condition exists"},
       lemma_a_hom, lemma_a_instances},
      {{"mmm1", "phi^a_b(M(G)) >= phi^{a+b}_{2b}(G)"}, mmm1, mmm1_instances},
      {{"mmm11", "chi_c(M^t G) != chi implies phi^{2^{t+1}-2}_{2^{t+1}}(G) <= 2chi(G)+2t-1"},
       mmm11, mmm11_instances},
      {{"mmm2", "block coloring plus t pushdowns gives p <= 2^t+3 at cap 2^{t+1}"}, mmm2,
       mmm2_instances},
      {{"hilton-free", "alpha_bar(KG(m,n)) <= C(m-1,n-1) - C(m-n-1,n-1)"}, hilton_free,
       hilton_instances},
      {{"frankl-alpha", "alpha(KG(m,n,s)) <= C(m-s-1,n-s-1) when m >= (s+2)(n-s)"},
       frankl_alpha, frankl_instances},
      {{"genkneser-coloring", "least (s+1)-subset coloring is proper; alpha_bar bound"},
       genkneser_coloring, genkneser_instances},
      {{"schrijver-count-critical", "|V(SG(m,n))| = C(m-n-1,n-1)m/n; SG is vertex-critical"},
       schrijver_count_critical, schrijver_instances},
  };
  return table;
}

}  // namespace circlab::detail
