#include "chaincert/commands.hpp"

#include "chaincert/uvn.hpp"
#include "inputs.hpp"

#include <algorithm>
#include <sstream>

namespace chaincert {

using detail::Args;

namespace {

std::string show(const Chain& c) { return c.is_zero() ? "0" : c.to_string(); }

std::string order_text(const Integer& order) { return order == 0 ? "free" : "order " + order.str(); }

Json simplex_member_list(const std::map<Simplex, std::string>& m) {
  Json out = Json::array();
  for (const auto& [s, member] : m) out.push_back({{"simplex", simplex_json(s)}, {"member", member}});
  return out;
}

Json fill_log_json(const std::vector<FillRecord>& log) {
  Json out = Json::array();
  for (const auto& r : log) {
    out.push_back({{"simplex", simplex_json(r.simplex)},
                   {"level", r.level},
                   {"member", r.member},
                   {"cycle", chain_json(r.cycle)},
                   {"filling", chain_json(r.filling)}});
  }
  return out;
}

Json certificate(const std::string& command, const ProblemFile& p, const Json& args, Json result) {
  return {{"format", kCertificateFormat}, {"command", command},       {"ring", p.ring.to_string()},
          {"problem", to_json(p)},        {"args", args},             {"result", std::move(result)}};
}

struct Reply {
  std::ostringstream out;
  Json result = Json::object();
  int exit_code = exit_true;
};

CommandOutcome finish(Reply& r, const std::string& command, const ProblemFile& p, const Json& args) {
  return {r.exit_code, r.out.str(), certificate(command, p, args, std::move(r.result))};
}

void not_fillable(Reply& r, const NotFillable& e) {
  r.exit_code = exit_false;
  r.result = {{"status", "not-fillable"},
              {"simplex", simplex_json(e.simplex())},
              {"level", e.level()},
              {"cycle", chain_json(e.cycle())},
              {"regions", e.regions()}};
  r.out << "result: not fillable\n"
        << "  simplex " << format_simplex(e.simplex()) << " at level " << e.level() << "\n"
        << "  cycle " << show(e.cycle()) << "\n"
        << "  bounds in none of:";
  for (const auto& name : e.regions()) r.out << " " << name;
  r.out << "\n";
}

void report_fills(Reply& r, const std::vector<FillRecord>& log) {
  r.out << "filled " << log.size() << " simplex" << (log.size() == 1 ? "" : "es") << "\n";
  for (const auto& rec : log) {
    r.out << "  " << format_simplex(rec.simplex) << " at level " << rec.level << " in " << rec.member << "\n";
  }
}

int resolve_n(const CommandOptions& o, Args& a, std::optional<int> fallback) {
  int n = 0;
  if (o.n) {
    n = *o.n;
  } else if (a.has("n")) {
    n = a.integer("n");
  } else if (fallback) {
    n = *fallback;
  } else {
    throw InputError(a.path() + ".n: missing (pass --n)");
  }
  if (n < 0) throw InputError("n must be nonnegative");
  a.json()["n"] = n;
  return n;
}

CommandOutcome run_homology(const CommandOptions& o, Args& a) {
  const ProblemFile& p = a.problem();
  std::string name;
  if (a.has("complex")) {
    name = a.name("complex");
  } else if (p.complexes.size() == 1) {
    name = p.complexes.begin()->first;
    a.json()["complex"] = name;
  } else {
    throw InputError(a.path() + ".complex: missing and the file declares several complexes");
  }
  const ComplexRef& x = a.complex("complex");
  std::vector<int> degrees;
  if (o.dim || a.has("dim")) {
    const int d = o.dim ? *o.dim : a.integer("dim");
    if (d < 0) throw InputError("dim must be nonnegative");
    a.json()["dim"] = d;
    degrees.push_back(d);
  } else {
    for (int d = 0; d <= std::max(0, x->dimension()); ++d) degrees.push_back(d);
  }
  Reply r;
  r.out << "homology of " << name << " over " << p.ring.symbol() << "\n";
  Json groups = Json::array();
  for (int d : degrees) {
    auto h = homology(*x, d, p.ring);
    r.out << "H_" << d << " = " << h.describe() << "\n";
    Json gens = Json::array();
    for (std::size_t i = 0; i < h.generators.size(); ++i) {
      r.out << "  g" << i + 1 << " (" << order_text(h.orders[i]) << ") = " << show(h.generators[i]) << "\n";
      gens.push_back({{"order", h.orders[i].str()}, {"chain", chain_json(h.generators[i])}});
    }
    groups.push_back({{"degree", d}, {"group", h.describe()}, {"generators", gens}});
  }
  r.result = {{"status", "computed"}, {"groups", groups}};
  return finish(r, "homology", p, a.json());
}

void report_triviality(Reply& r, const TrivialityReport& t, const std::string& indent) {
  if (t.trivial) {
    r.out << indent << "degree " << t.degree << ": trivial, " << t.fillings.size() << " generator"
          << (t.fillings.size() == 1 ? "" : "s") << " filled\n";
  } else {
    r.out << indent << "degree " << t.degree << ": not trivial, witness " << show(*t.witness) << "\n";
  }
}

CommandOutcome run_uvn_map(const CommandOptions& o, Args& a, const std::string& command) {
  const bool identity = command == "check-lcn";
  auto in = detail::uvn_map_inputs(a, identity);
  const int n = resolve_n(o, a, in.tower.n());
  auto report = check_uvn_map(in.f, in.tower, n, a.problem().ring);
  Reply r;
  if (identity) {
    r.out << command << ": tower " << a.name("tower") << ", n = " << n << ", over " << a.problem().ring.symbol()
          << "\n";
  } else {
    r.out << command << ": map " << a.name("map") << ", tower " << a.name("tower") << ", n = " << n << ", over "
          << a.problem().ring.symbol() << "\n";
  }
  Json defects = Json::array(), obligations = Json::array();
  for (const auto& d : report.defects) {
    r.out << "defect: " << d.describe() << "\n";
    defects.push_back(d.describe());
  }
  for (const auto& ob : report.obligations) {
    if (!ob.result.trivial) {
      r.out << "level " << ob.level << " member " << ob.member << " into " << ob.paired << ": not trivial, witness "
            << show(*ob.result.witness) << "\n";
    }
    obligations.push_back({{"level", ob.level},
                           {"member", ob.member},
                           {"paired", ob.paired},
                           {"preimage_member", vertex_set_json(ob.preimage_member)},
                           {"preimage_paired", vertex_set_json(ob.preimage_paired)},
                           {"result", triviality_json(ob.result)}});
  }
  r.out << report.obligations.size() << " obligation" << (report.obligations.size() == 1 ? "" : "s") << " checked\n";
  r.out << "verdict: " << (report.ok ? "true" : "false") << "\n";
  r.exit_code = report.ok ? exit_true : exit_false;
  r.result = {{"status", "checked"},
              {"mode", identity ? "lcn" : "map"},
              {"ok", report.ok},
              {"defects", defects},
              {"obligations", obligations}};
  return finish(r, command, a.problem(), a.json());
}

CommandOutcome run_check_uvn(const CommandOptions& o, Args& a) {
  if (a.has("map")) return run_uvn_map(o, a, "check-uvn");
  const ComplexRef& v = a.complex("v");
  const ComplexRef& u = a.complex("u");
  const int n = resolve_n(o, a, std::nullopt);
  auto report = check_uvn_pair(*v, *u, n, a.problem().ring);
  Reply r;
  r.out << "check-uvn: " << a.name("v") << " in " << a.name("u") << ", n = " << n << ", over "
        << a.problem().ring.symbol() << "\n";
  Json degrees = Json::array();
  for (const auto& t : report.degrees) {
    report_triviality(r, t, "");
    degrees.push_back(triviality_json(t));
  }
  r.out << "verdict: " << (report.ok ? "true" : "false") << "\n";
  r.exit_code = report.ok ? exit_true : exit_false;
  r.result = {{"status", "checked"}, {"mode", "pair"}, {"ok", report.ok}, {"degrees", degrees}};
  return finish(r, "check-uvn", a.problem(), a.json());
}

CommandOutcome run_check_alcn(const CommandOptions& o, Args& a) {
  const ComplexRef& v = a.complex("v");
  const ComplexRef& w = a.complex("w");
  const ComplexRef& u = a.complex("u");
  const int n = resolve_n(o, a, std::nullopt);
  bool strict = true;
  if (o.strict_vertices) {
    strict = *o.strict_vertices;
  } else if (a.has("strict")) {
    if (!a.json().at("strict").is_boolean()) throw InputError(a.path() + ".strict: expected true or false");
    strict = a.json().at("strict").get<bool>();
  }
  a.json()["strict"] = strict;
  auto report = check_approx_lcn(*v, *w, *u, n, a.problem().ring, strict ? VertexMatch::strict : VertexMatch::relaxed);
  Reply r;
  r.out << "check-alcn: " << a.name("v") << " in " << a.name("w") << " in " << a.name("u") << ", n = " << n
        << ", " << (strict ? "strict" : "relaxed") << " vertices, over " << a.problem().ring.symbol() << "\n";
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    r.out << "degree " << e.degree << " cycle " << show(e.cycle) << ": ";
    if (e.ok) {
      r.out << "companion " << show(*e.companion) << " bounds\n";
    } else {
      r.out << "no companion bounds\n";
    }
    Json entry = {{"degree", e.degree}, {"cycle", chain_json(e.cycle)}, {"ok", e.ok}};
    entry["companion"] = e.companion ? chain_json(*e.companion) : Json();
    entry["filling"] = e.filling ? chain_json(*e.filling) : Json();
    entries.push_back(entry);
  }
  r.out << "verdict: " << (report.ok ? "true" : "false") << "\n";
  r.exit_code = report.ok ? exit_true : exit_false;
  r.result = {{"status", "checked"}, {"ok", report.ok}, {"entries", entries}};
  return finish(r, "check-alcn", a.problem(), a.json());
}

std::string source_of_map(const Args& a) { return a.problem().map(a.name("map")).source; }

CommandOutcome run_extend(const CommandOptions&, Args& a) {
  auto problem = detail::realization_inputs(a);
  Reply r;
  r.out << "extend-realization: " << a.name("k") << " from " << a.name("l") << " into " << source_of_map(a)
        << ", tower " << a.name("tower") << ", n = " << problem.tower.n() << "\n";
  try {
    auto cert = extend_realization(problem);
    report_fills(r, cert.fill_log);
    r.out << "result: extended\n";
    r.result = {{"status", "extended"}, {"extension", extension_json(cert, a.name("k"), source_of_map(a))}};
  } catch (const NotFillable& e) {
    not_fillable(r, e);
  }
  return finish(r, "extend-realization", a.problem(), a.json());
}

CommandOutcome run_lift(const CommandOptions&, Args& a) {
  auto in = detail::lift_inputs(a);
  const ProblemFile& p = a.problem();
  Reply r;
  r.out << "lift: " << a.name("phi") << " on " << a.name("k") << " through " << a.name("map") << ", tower "
        << a.name("tower") << "\n";
  try {
    auto lift = approximate_lift(in.k, in.l, in.phi_l, in.phi, in.f, in.tower, p.ring);
    report_fills(r, lift.extension.fill_log);
    r.out << "close for the top cover: yes\n";
    r.out << "result: lifted\n";
    r.result = {{"status", "lifted"},
                {"l", complex_json(*lift.l)},
                {"phi_l", assignment_json(lift.phi_l, "l", source_of_map(a))},
                {"extension", extension_json(lift.extension, a.name("k"), source_of_map(a))},
                {"closeness", close_json(lift.closeness)}};
  } catch (const NotFillable& e) {
    not_fillable(r, e);
  } catch (const CloseFail& e) {
    r.exit_code = exit_false;
    r.out << "result: not close\n";
    if (e.report().counterexample) {
      r.out << "  no top member holds the data on " << format_simplex(*e.report().counterexample) << "\n";
    }
    r.result = {{"status", "not-close"}, {"closeness", close_json(e.report())}};
  }
  return finish(r, "lift", p, a.json());
}

CommandOutcome run_build_homotopy(const CommandOptions&, Args& a) {
  auto problem = detail::homotopy_inputs(a);
  const ProblemFile& p = a.problem();
  Reply r;
  r.out << "build-homotopy: " << a.name("phi") << " to " << a.name("psi") << ", tower " << a.name("tower")
        << ", n = " << problem.tower.n() << "\n";
  try {
    auto cert = build_homotopy(problem);
    report_fills(r, cert.fill_log);
    r.out << "result: built\n";
    const auto& phi = p.morphism(a.name("phi"));
    r.result = {{"status", "built"},
                {"d", assignment_json(cert.d, phi.source, phi.target)},
                {"cover_assignment", simplex_member_list(cert.cover_assignment)},
                {"fill_log", fill_log_json(cert.fill_log)}};
  } catch (const NotFillable& e) {
    not_fillable(r, e);
  }
  return finish(r, "build-homotopy", p, a.json());
}

CommandOutcome run_dugundji(const CommandOptions&, Args& a) {
  auto problem = detail::dugundji_inputs(a);
  a.json()["radius"] = problem.radius;
  const ProblemFile& p = a.problem();
  Reply r;
  r.out << "dugundji-extend: " << a.name("phi") << " from A in " << a.name("m") << ", radius " << problem.radius
        << "\n";
  try {
    auto res = dugundji_extend(problem);
    r.out << "W has " << res.w->vertices().size() << " vertices\n";
    Json nearest = Json::object(), distance = Json::object();
    for (const auto& [v, d] : res.distance) distance[v] = d;
    for (const auto& [v, x] : res.nearest) {
      nearest[v] = x;
      r.out << "  " << v << " -> " << x << " (distance " << res.distance.at(v) << ")\n";
    }
    for (const auto& v : res.factor_two_failures) r.out << "  factor-two bound fails at " << v << "\n";
    report_fills(r, res.extension.fill_log);
    r.out << "result: extended\n";
    const std::string x = source_of_map(a);
    r.result = {{"status", "extended"},
                {"w", complex_json(*res.w)},
                {"nearest", nearest},
                {"distance", distance},
                {"factor_two_failures", res.factor_two_failures},
                {"l", complex_json(*res.problem.l)},
                {"phi_l", assignment_json(res.problem.phi_l, "l", x)},
                {"extension", extension_json(res.extension, "w", x)}};
  } catch (const NotFillable& e) {
    not_fillable(r, e);
  }
  return finish(r, "dugundji-extend", p, a.json());
}

CommandOutcome run_nerve(const CommandOptions&, Args& a) {
  auto in = detail::nerve_inputs(a);
  const ProblemFile& p = a.problem();
  Reply r;
  r.out << "nerve-factorize: " << a.name("y") << " with cover " << a.name("cover") << ", tower " << a.name("tower")
        << "\n";
  try {
    auto res = nerve_factorization(in.y, in.cover, in.f, in.tower, p.ring);
    r.out << "nerve has " << res.nerve->size() << " simplexes\n";
    Json kappa = Json::object();
    for (const auto& [v, m] : res.kappa) {
      kappa[v] = m;
      r.out << "  kappa(" << v << ") = " << m << "\n";
    }
    report_fills(r, res.big_phi.fill_log);
    r.out << "close for the top cover: " << (res.closeness.ok ? "yes" : "no") << "\n";
    r.out << "result: " << (res.closeness.ok ? "factored" : "not close") << "\n";
    const std::string x = source_of_map(a);
    r.exit_code = res.closeness.ok ? exit_true : exit_false;
    r.result = {{"status", res.closeness.ok ? "factored" : "not-close"},
                {"nerve", complex_json(*res.nerve)},
                {"l", complex_json(*res.problem.l)},
                {"phi_l", assignment_json(res.problem.phi_l, "l", x)},
                {"big_phi", extension_json(res.big_phi, "nerve", x)},
                {"kappa", kappa},
                {"lambda_kappa", assignment_json(res.lambda_kappa, a.name("y"), "nerve")},
                {"closeness", close_json(res.closeness)}};
  } catch (const NotFillable& e) {
    not_fillable(r, e);
  }
  return finish(r, "nerve-factorize", p, a.json());
}

CommandOutcome run_gen_instance(const CommandOptions& o) {
  auto inst = generate_instance(o.family, o.seed, o.ring.value_or(Ring::integers()));
  return {exit_true, serialize(problem_from_instance(inst)), std::nullopt};
}

CommandOutcome run_verify(const std::string& text) {
  Json cert;
  try {
    cert = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("certificate is not valid JSON: ") + e.what());
  }
  auto problems = verify_certificate(cert);
  std::ostringstream out;
  out << "certificate for " << cert.at("command").get<std::string>() << ": "
      << (problems.empty() ? "valid" : "invalid") << "\n";
  for (const auto& pr : problems) out << "  " << pr << "\n";
  return {problems.empty() ? exit_true : exit_false, out.str(), std::nullopt};
}

}  // namespace

std::vector<std::string> command_names() {
  return {"homology",         "check-uvn",       "check-lcn", "check-alcn",      "extend-realization",
          "lift",             "build-homotopy",  "dugundji-extend", "nerve-factorize", "verify-certificate",
          "gen-instance"};
}

std::string certificate_text(const Json& certificate) { return certificate.dump(2) + "\n"; }

Json extension_json(const ExtensionCertificate& cert, const std::string& k, const std::string& x) {
  return {{"phi", assignment_json(cert.phi, k, x)},
          {"cover_assignment", simplex_member_list(cert.cover_assignment)},
          {"fill_log", fill_log_json(cert.fill_log)}};
}

Json close_json(const CloseReport& r) {
  Json j = {{"ok", r.ok}, {"assignment", simplex_member_list(r.assignment)}};
  j["counterexample"] = r.counterexample ? simplex_json(*r.counterexample) : Json();
  j["counterexample_carrier"] = vertex_set_json(r.counterexample_carrier);
  return j;
}

Json triviality_json(const TrivialityReport& r) {
  Json gens = Json::array(), fills = Json::array();
  for (const auto& g : r.generators) gens.push_back(chain_json(g));
  for (const auto& f : r.fillings) fills.push_back(chain_json(f));
  Json j = {{"degree", r.degree}, {"trivial", r.trivial}, {"generators", gens}, {"fillings", fills}};
  j["witness"] = r.witness ? chain_json(*r.witness) : Json();
  return j;
}

CommandOutcome run_command(const CommandOptions& o, const std::string& input_text) {
  try {
    if (o.command == "gen-instance") return run_gen_instance(o);
    if (o.command == "verify-certificate") return run_verify(input_text);
    const auto names = command_names();
    if (std::find(names.begin(), names.end(), o.command) == names.end()) {
      throw InputError("unknown command '" + o.command + "'");
    }
    ProblemFile p = parse_problem(input_text, o.ring);
    Json args = Json::object();
    if (p.command_args.contains(o.command)) args = p.command_args.at(o.command);
    Args a(p, args, o.command);
    if (o.command == "homology") return run_homology(o, a);
    if (o.command == "check-uvn") return run_check_uvn(o, a);
    if (o.command == "check-lcn") return run_uvn_map(o, a, "check-lcn");
    if (o.command == "check-alcn") return run_check_alcn(o, a);
    if (o.command == "extend-realization") return run_extend(o, a);
    if (o.command == "lift") return run_lift(o, a);
    if (o.command == "build-homotopy") return run_build_homotopy(o, a);
    if (o.command == "dugundji-extend") return run_dugundji(o, a);
    return run_nerve(o, a);
  } catch (const InputError& e) {
    return {exit_bad_input, std::string("error: bad input: ") + e.what() + "\n", std::nullopt};
  } catch (const PreconditionFailure& e) {
    return {exit_bad_input, std::string("error: precondition failed: ") + e.what() + "\n", std::nullopt};
  } catch (const Json::exception& e) {
    return {exit_bad_input, std::string("error: bad input: ") + e.what() + "\n", std::nullopt};
  } catch (const std::exception& e) {
    return {exit_internal, std::string("internal error: ") + e.what() + "\n", std::nullopt};
  }
}

}  // namespace chaincert
