#include "chaincert/commands.hpp"

#include "chaincert/uvn.hpp"
#include "inputs.hpp"

#include <algorithm>
#include <deque>

namespace chaincert {

using detail::Args;

namespace {

using Problems = std::vector<std::string>;

std::map<Simplex, std::string> parse_simplex_members(const Json& j, const std::string& path) {
  std::map<Simplex, std::string> out;
  if (!j.is_array()) throw InputError(path + ": expected an array");
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string ep = path + "[" + std::to_string(i) + "]";
    out[parse_simplex(field(j[i], "simplex", ep), ep + ".simplex")] = string_field(j[i], "member", ep);
  }
  return out;
}

std::vector<FillRecord> parse_fill_log(const Json& j, const Ring& ring, int shift, const std::string& path) {
  std::vector<FillRecord> out;
  if (!j.is_array()) throw InputError(path + ": expected an array");
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string ep = path + "[" + std::to_string(i) + "]";
    FillRecord r;
    r.simplex = parse_simplex(field(j[i], "simplex", ep), ep + ".simplex");
    r.level = int_field(j[i], "level", ep);
    r.member = string_field(j[i], "member", ep);
    const int k = dimension_of(r.simplex) + shift;
    r.cycle = parse_chain(field(j[i], "cycle", ep), k - 1, ring, ep + ".cycle");
    r.filling = parse_chain(field(j[i], "filling", ep), k, ring, ep + ".filling");
    out.push_back(std::move(r));
  }
  return out;
}

template <class A>
A parse_assignment_object(const Json& j, const ComplexRef& source, const ComplexRef& target, const Ring& ring,
                          int shift, const std::string& path) {
  const int cap = int_field(j, "degree_cap", path);
  auto assignment = parse_assignment(field(j, "assignment", path), shift, ring, path + ".assignment");
  try {
    return A(source, target, cap, ring, std::move(assignment));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

bool bool_field(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = field(j, key, path);
  if (!v.is_boolean()) throw InputError(path + "." + key + ": expected true or false");
  return v.get<bool>();
}

std::optional<Chain> optional_chain(const Json& j, const std::string& key, int dim, const Ring& ring,
                                    const std::string& path) {
  const Json& v = field(j, key, path);
  if (v.is_null()) return std::nullopt;
  return parse_chain(v, dim, ring, path + "." + key);
}

void merge(Problems& into, const CertificateCheck& check, const std::string& prefix) {
  for (const auto& p : check.problems) into.push_back(prefix + p);
}

// Graph distances in the 1-skeleton, computed here rather than borrowed from
// the constructor.
std::map<Vertex, int> edge_distances(const SimplicialComplex& m, const VertexSet& sources) {
  std::map<Vertex, std::vector<Vertex>> adj;
  if (m.dimension() >= 1) {
    for (const auto& e : m.simplexes(1)) {
      adj[e[0]].push_back(e[1]);
      adj[e[1]].push_back(e[0]);
    }
  }
  std::map<Vertex, int> dist;
  std::deque<Vertex> queue;
  for (const auto& s : sources) {
    dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (const auto& w : adj[v]) {
      if (dist.emplace(w, dist[v] + 1).second) queue.push_back(w);
    }
  }
  return dist;
}

// One TrivialityReport: the filled generators are a prefix of the canonical
// generators of H_k(V), each filling is carried by U and has the right
// boundary, and a witness is the next generator and does not bound in U.
void check_triviality(const Json& j, const SimplicialComplex& v, const SimplicialComplex& u, int k,
                      const Ring& ring, const std::string& path, Problems& out) {
  if (int_field(j, "degree", path) != k) out.push_back(path + ": wrong degree");
  const bool trivial = bool_field(j, "trivial", path);
  const Json& gens = field(j, "generators", path);
  const Json& fills = field(j, "fillings", path);
  if (!gens.is_array() || !fills.is_array() || gens.size() != fills.size()) {
    throw InputError(path + ": generators and fillings must be arrays of one length");
  }
  auto expected = homology(v, k, ring).generators;
  if (gens.size() > expected.size()) {
    out.push_back(path + ": more generators than H_" + std::to_string(k) + " has");
    return;
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string gp = path + ".generators[" + std::to_string(i) + "]";
    Chain g = parse_chain(gens[i], k, ring, gp);
    Chain x = parse_chain(fills[i], k + 1, ring, path + ".fillings[" + std::to_string(i) + "]");
    if (!(g == expected[i])) out.push_back(gp + ": not the canonical generator");
    if (!carried_by(x, u)) out.push_back(gp + ": filling leaves U");
    if (!(boundary(x, ring) == g)) out.push_back(gp + ": filling has the wrong boundary");
  }
  auto witness = optional_chain(j, "witness", k, ring, path);
  if (trivial) {
    if (gens.size() != expected.size()) out.push_back(path + ": claims trivial but leaves generators unfilled");
    if (witness) out.push_back(path + ": trivial with a witness");
    return;
  }
  if (!witness) {
    out.push_back(path + ": not trivial but no witness");
    return;
  }
  if (gens.size() >= expected.size() || !(*witness == expected[gens.size()])) {
    out.push_back(path + ": witness is not the next generator");
    return;
  }
  if (fill_cycle(*witness, u, ring)) out.push_back(path + ": witness bounds in U");
}

Problems verify_homology(const Args& a, const Json& result) {
  Problems out;
  const Ring& ring = a.problem().ring;
  const ComplexRef& x = a.complex("complex");
  std::vector<int> degrees;
  if (a.has("dim")) {
    degrees.push_back(a.integer("dim"));
  } else {
    for (int d = 0; d <= std::max(0, x->dimension()); ++d) degrees.push_back(d);
  }
  const Json& groups = field(result, "groups", "result");
  if (!groups.is_array() || groups.size() != degrees.size()) {
    out.push_back("result.groups: wrong number of degrees");
    return out;
  }
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const std::string path = "result.groups[" + std::to_string(i) + "]";
    const int d = degrees[i];
    if (int_field(groups[i], "degree", path) != d) out.push_back(path + ": wrong degree");
    auto h = homology(*x, d, ring);
    if (string_field(groups[i], "group", path) != h.describe()) {
      out.push_back(path + ": group is " + h.describe());
    }
    const Json& gens = field(groups[i], "generators", path);
    if (!gens.is_array() || gens.size() != h.generators.size()) {
      out.push_back(path + ": wrong number of generators");
      continue;
    }
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const std::string gp = path + ".generators[" + std::to_string(g) + "]";
      Chain c = parse_chain(field(gens[g], "chain", gp), d, ring, gp + ".chain");
      if (!carried_by(c, *x) || !is_cycle(c, ring)) out.push_back(gp + ": not a cycle of the complex");
      if (!(c == h.generators[g])) out.push_back(gp + ": not the canonical generator");
      if (string_field(gens[g], "order", gp) != h.orders[g].str()) out.push_back(gp + ": wrong order");
      // order * c must bound
      if (h.orders[g] != 0 && fill_cycle(c.scaled(Scalar(h.orders[g]), ring), *x, ring) == std::nullopt) {
        out.push_back(gp + ": order times the generator does not bound");
      }
    }
  }
  return out;
}

Problems verify_uvn_pair(const Args& a, const Json& result) {
  Problems out;
  const Ring& ring = a.problem().ring;
  const ComplexRef& v = a.complex("v");
  const ComplexRef& u = a.complex("u");
  const int n = a.integer("n");
  if (!v->is_subcomplex_of(*u)) return {"v is not a subcomplex of u"};
  const Json& degrees = field(result, "degrees", "result");
  if (!degrees.is_array() || degrees.empty() || degrees.size() > static_cast<std::size_t>(n + 1)) {
    return {"result.degrees: wrong length"};
  }
  bool ok = true;
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    const std::string path = "result.degrees[" + std::to_string(k) + "]";
    check_triviality(degrees[k], *v, *u, static_cast<int>(k), ring, path, out);
    const bool trivial = bool_field(degrees[k], "trivial", path);
    if (!trivial && k + 1 != degrees.size()) out.push_back(path + ": checking went on after a failure");
    ok = ok && trivial;
  }
  if (ok && degrees.size() != static_cast<std::size_t>(n + 1)) out.push_back("result.degrees: degrees missing");
  if (bool_field(result, "ok", "result") != ok) out.push_back("result.ok disagrees with the degrees");
  return out;
}

Problems verify_uvn_map(const Args& a, const Json& result, bool identity) {
  Problems out;
  const Ring& ring = a.problem().ring;
  auto in = detail::uvn_map_inputs(a, identity);
  const int n = a.integer("n");
  const FiltrationTower& tower = in.tower;
  if (!(*tower.complex() == *in.f.target()) || tower.n() < n) return {"tower does not fit the map and n"};

  // Structural defects, recomputed by direct containment tests.
  std::vector<std::string> defects;
  for (int k = 0; k <= tower.n(); ++k) {
    const Cover& level = tower.level(static_cast<std::size_t>(k));
    for (const auto& m : level.members()) {
      VertexSet st;
      for (const auto& other : level.members()) {
        bool meets = false;
        for (const auto& x : other.vertices) meets = meets || m.vertices.count(x) > 0;
        if (meets) st.insert(other.vertices.begin(), other.vertices.end());
      }
      const CoverMember& w = tower.witness(static_cast<std::size_t>(k), m.name);
      if (!subset_of(st, w.vertices)) {
        defects.push_back(TowerDefect{TowerDefect::Kind::star_not_contained, static_cast<std::size_t>(k), m.name,
                                      w.name}.describe());
      }
      const CoverMember& p = tower.pair(static_cast<std::size_t>(k), m.name);
      if (!subset_of(m.vertices, p.vertices)) {
        defects.push_back(TowerDefect{TowerDefect::Kind::pair_not_nested, static_cast<std::size_t>(k), m.name,
                                      p.name}.describe());
      }
    }
  }
  std::vector<std::string> claimed;
  const Json& jd = field(result, "defects", "result");
  for (std::size_t i = 0; jd.is_array() && i < jd.size(); ++i) claimed.push_back(jd[i].get<std::string>());
  std::sort(claimed.begin(), claimed.end());
  std::sort(defects.begin(), defects.end());
  if (claimed != defects) out.push_back("result.defects: do not match the tower");

  const Json& obs = field(result, "obligations", "result");
  if (!obs.is_array()) throw InputError("result.obligations: expected an array");
  std::size_t i = 0;
  bool all_trivial = true;
  const SimplicialComplex& x = *in.f.source();
  for (int k = 0; k <= n; ++k) {
    for (const auto& m : tower.level(static_cast<std::size_t>(k)).members()) {
      const CoverMember& p = tower.pair(static_cast<std::size_t>(k), m.name);
      if (!subset_of(m.vertices, p.vertices)) continue;
      const std::string path = "result.obligations[" + std::to_string(i) + "]";
      if (i >= obs.size()) {
        out.push_back(path + ": missing for level " + std::to_string(k) + " member " + m.name);
        return out;
      }
      const Json& o = obs[i++];
      if (int_field(o, "level", path) != k || string_field(o, "member", path) != m.name ||
          string_field(o, "paired", path) != p.name) {
        out.push_back(path + ": out of order or misnamed");
        continue;
      }
      VertexSet pre_m, pre_p;
      for (const auto& v : x.vertices()) {
        if (m.vertices.count(in.f(v))) pre_m.insert(v);
        if (p.vertices.count(in.f(v))) pre_p.insert(v);
      }
      auto listed = [&](const std::string& key) {
        auto l = parse_vertex_list(field(o, key, path), path + "." + key);
        return VertexSet(l.begin(), l.end());
      };
      if (listed("preimage_member") != pre_m || listed("preimage_paired") != pre_p) {
        out.push_back(path + ": wrong preimages");
        continue;
      }
      const Json& r = field(o, "result", path);
      check_triviality(r, full_subcomplex(x, pre_m), full_subcomplex(x, pre_p), k, ring, path + ".result", out);
      all_trivial = all_trivial && bool_field(r, "trivial", path + ".result");
    }
  }
  if (i != obs.size()) out.push_back("result.obligations: extra entries");
  if (bool_field(result, "ok", "result") != (defects.empty() && all_trivial)) {
    out.push_back("result.ok disagrees with the obligations");
  }
  return out;
}

Problems verify_alcn(const Args& a, const Json& result) {
  Problems out;
  const Ring& ring = a.problem().ring;
  const ComplexRef& v = a.complex("v");
  const ComplexRef& w = a.complex("w");
  const ComplexRef& u = a.complex("u");
  const int n = a.integer("n");
  const bool strict = a.json().value("strict", true);
  // The list of cycles and which of them found a companion come from the
  // search itself; every companion and filling is then checked directly.
  auto rerun = check_approx_lcn(*v, *w, *u, n, ring, strict ? VertexMatch::strict : VertexMatch::relaxed);
  const Json& entries = field(result, "entries", "result");
  if (!entries.is_array() || entries.size() != rerun.entries.size()) return {"result.entries: wrong length"};
  bool ok = true;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string path = "result.entries[" + std::to_string(i) + "]";
    const Json& e = entries[i];
    const int k = int_field(e, "degree", path);
    Chain c = parse_chain(field(e, "cycle", path), k, ring, path + ".cycle");
    if (k != rerun.entries[i].degree || !(c == rerun.entries[i].cycle)) out.push_back(path + ": unexpected cycle");
    if (!carried_by(c, *v) || !is_cycle(c, ring)) out.push_back(path + ": cycle is not a cycle of V");
    const bool entry_ok = bool_field(e, "ok", path);
    if (entry_ok != rerun.entries[i].ok) out.push_back(path + ": verdict does not reproduce");
    ok = ok && entry_ok;
    if (!entry_ok) continue;
    auto companion = optional_chain(e, "companion", k, ring, path);
    auto filling = optional_chain(e, "filling", k + 1, ring, path);
    if (!companion || !filling) {
      out.push_back(path + ": ok without companion and filling");
      continue;
    }
    if (companion->is_zero() || !carried_by(*companion, *w) || !is_cycle(*companion, ring)) {
      out.push_back(path + ": companion is not a nonzero cycle of W");
    }
    VertexSet cv = carrier_vertices(c), dv = carrier_vertices(*companion);
    if (strict ? cv != dv : !subset_of(dv, cv)) out.push_back(path + ": companion has the wrong vertices");
    if (!carried_by(*filling, *u) || !(boundary(*filling, ring) == *companion)) {
      out.push_back(path + ": filling does not bound the companion in U");
    }
  }
  if (bool_field(result, "ok", "result") != ok) out.push_back("result.ok disagrees with the entries");
  return out;
}

// The claim of a NotFillable result: the cycle is a cycle, and it does not
// bound in the preimage of any listed region, each of which holds the image
// of the cycle's carrier.
Problems verify_not_fillable(const Json& result, const ComplexRef& source, const SimplicialMap& f,
                             const FiltrationTower& tower, const Ring& ring, int shift) {
  Problems out;
  Simplex s = parse_simplex(field(result, "simplex", "result"), "result.simplex");
  const int level = int_field(result, "level", "result");
  if (!source->contains(s)) out.push_back("result.simplex: not a simplex of the source");
  if (level < 0 || level >= static_cast<int>(tower.levels().size())) return {"result.level: out of range"};
  Chain cycle = parse_chain(field(result, "cycle", "result"), dimension_of(s) + shift - 1, ring, "result.cycle");
  const SimplicialComplex& x = *f.source();
  if (!carried_by(cycle, x) || !is_cycle(cycle, ring)) out.push_back("result.cycle: not a cycle of the source of f");
  auto regions = parse_vertex_list(field(result, "regions", "result"), "result.regions");
  if (regions.empty()) out.push_back("result.regions: empty");
  VertexSet image = f.image(carrier_vertices(cycle));
  const Cover& cover = tower.level(static_cast<std::size_t>(level));
  for (const auto& name : regions) {
    if (!cover.has_member(name)) {
      out.push_back("result.regions: no member " + name);
      continue;
    }
    const VertexSet& r = cover.member(name).vertices;
    if (!subset_of(image, r)) {
      out.push_back("result.regions: " + name + " does not hold the image of the cycle");
      continue;
    }
    auto region = full_subcomplex(x, f.preimage(r));
    if (carried_by(cycle, region) && fill_cycle(cycle, region, ring)) {
      out.push_back("result.regions: the cycle bounds over " + name);
    }
  }
  return out;
}

Problems verify_extend(const Args& a, const Json& result) {
  auto problem = detail::realization_inputs(a);
  const std::string status = string_field(result, "status", "result");
  if (status == "not-fillable") return verify_not_fillable(result, problem.k, problem.f, problem.tower, problem.ring, 0);
  if (status != "extended") throw InputError("result.status: unknown value '" + status + "'");
  auto cert = parse_extension(field(result, "extension", "result"), problem.k, problem.f.source(), problem.ring,
                              "result.extension");
  Problems out;
  merge(out, verify_extension(problem, cert), "");
  return out;
}

Problems verify_lift_result(const Args& a, const Json& result) {
  auto in = detail::lift_inputs(a);
  const Ring& ring = a.problem().ring;
  const std::string status = string_field(result, "status", "result");
  if (status != "lifted") {
    // A failed lift is confirmed by running the construction again.
    try {
      approximate_lift(in.k, in.l, in.phi_l, in.phi, in.f, in.tower, ring);
      return {"the lift succeeds, the certificate claims " + status};
    } catch (const NotFillable&) {
      return status == "not-fillable" ? Problems{} : Problems{"the lift fails with NotFillable instead"};
    } catch (const CloseFail&) {
      return status == "not-close" ? Problems{} : Problems{"the lift fails with CloseFail instead"};
    }
  }
  ComplexRef l = parse_complex(field(result, "l", "result"), "result.l");
  auto phi_l = parse_assignment_object<ChainMorphism>(field(result, "phi_l", "result"), l, in.f.source(), ring, 0,
                                                      "result.phi_l");
  auto ext = parse_extension(field(result, "extension", "result"), in.k, in.f.source(), ring, "result.extension");
  auto close = parse_close(field(result, "closeness", "result"), "result.closeness");
  Problems out;
  if (!in.l->is_subcomplex_of(*l)) out.push_back("result.l: does not contain the given L");
  for (const auto& s : in.l->all_simplexes()) {
    if (in.phi_l.defined_on(s) && !(phi_l.defined_on(s) && phi_l(s) == in.phi_l(s))) {
      out.push_back("result.phi_l: changes the given lift on " + format_simplex(s));
    }
  }
  LiftResult lift{std::move(ext), l, std::move(phi_l), std::move(close)};
  merge(out, verify_lift(in.k, in.phi, in.f, in.tower, lift), "");
  return out;
}

Problems verify_homotopy_result(const Args& a, const Json& result) {
  auto problem = detail::homotopy_inputs(a);
  const std::string status = string_field(result, "status", "result");
  if (status == "not-fillable") {
    return verify_not_fillable(result, problem.phi.source(), problem.f, problem.tower, problem.ring, 1);
  }
  if (status != "built") throw InputError("result.status: unknown value '" + status + "'");
  auto d = parse_assignment_object<ChainHomotopy>(field(result, "d", "result"), problem.phi.source(),
                                                  problem.phi.target(), problem.ring, 1, "result.d");
  HomotopyCertificate cert{std::move(d),
                           parse_simplex_members(field(result, "cover_assignment", "result"), "result.cover_assignment"),
                           parse_fill_log(field(result, "fill_log", "result"), problem.ring, 1, "result.fill_log")};
  Problems out;
  merge(out, verify_homotopy_certificate(problem, cert), "");
  return out;
}

Problems verify_dugundji(const Args& a, const Json& result) {
  auto p = detail::dugundji_inputs(a);
  const std::string status = string_field(result, "status", "result");
  if (status == "not-fillable") return verify_not_fillable(result, p.m, p.f, p.tower, p.ring, 0);
  if (status != "extended") throw InputError("result.status: unknown value '" + status + "'");
  Problems out;
  ComplexRef w = parse_complex(field(result, "w", "result"), "result.w");
  ComplexRef l = parse_complex(field(result, "l", "result"), "result.l");
  auto phi_l = parse_assignment_object<ChainMorphism>(field(result, "phi_l", "result"), l, p.f.source(), p.ring, 0,
                                                      "result.phi_l");
  auto ext = parse_extension(field(result, "extension", "result"), w, p.f.source(), p.ring, "result.extension");
  const int n = p.tower.n();

  if (!w->is_subcomplex_of(*p.m)) out.push_back("result.w: not a subcomplex of M");
  auto dist = edge_distances(*p.m, p.a);
  VertexSet expected_w;
  for (const auto& [v, d] : dist) {
    if (p.radius < 0 || d <= p.radius) expected_w.insert(v);
  }
  if (w->vertex_set() != expected_w) out.push_back("result.w: wrong vertex set for the radius");
  if (!(*w == full_subcomplex(*p.m, expected_w).skeleton(n + 1))) {
    out.push_back("result.w: not the full subcomplex on its vertices, cut at n + 1");
  }

  std::map<Vertex, Vertex> nearest;
  for (const auto& [v, x] : field(result, "nearest", "result").items()) nearest[v] = x.get<std::string>();
  std::vector<Vertex> factor_two;
  for (const auto& v : w->vertices()) {
    if (p.a.count(v)) continue;
    if (!nearest.count(v)) {
      out.push_back("result.nearest: no entry for " + v);
      continue;
    }
    auto from_v = edge_distances(*p.m, {v});
    int best = -1;
    for (const auto& x : p.a) {
      if (from_v.count(x) && (best < 0 || from_v[x] < best)) best = from_v[x];
    }
    const Vertex& chosen = nearest[v];
    if (!p.a.count(chosen) || !from_v.count(chosen) || from_v[chosen] != best) {
      out.push_back("result.nearest: " + v + " -> " + chosen + " is not a nearest vertex of A");
      continue;
    }
    for (const auto& x : p.a) {
      if (x < chosen && from_v.count(x) && from_v[x] == best) {
        out.push_back("result.nearest: " + v + " -> " + chosen + " is not the least nearest vertex");
        break;
      }
    }
    if (!(best < 2 * dist[v])) factor_two.push_back(v);
    if (!(l->contains({v}) && phi_l.defined_on({v}) && phi_l({v}) == p.phi({chosen}))) {
      out.push_back("result.phi_l: " + v + " is not sent where its nearest vertex goes");
    }
  }
  std::vector<Vertex> claimed = field(result, "factor_two_failures", "result").get<std::vector<Vertex>>();
  if (claimed != factor_two) out.push_back("result.factor_two_failures: do not match the distances");
  for (const auto& s : p.phi.source()->all_simplexes()) {
    if (dimension_of(s) > n + 1) continue;
    if (!(phi_l.defined_on(s) && phi_l(s) == p.phi(s))) {
      out.push_back("result.phi_l: differs from phi on " + format_simplex(s));
    }
  }
  RealizationProblem problem{w, l, std::move(phi_l), p.f, p.tower, p.ring, {}};
  merge(out, verify_extension(problem, ext), "");
  return out;
}

Problems verify_nerve(const Args& a, const Json& result) {
  auto in = detail::nerve_inputs(a);
  const Ring& ring = a.problem().ring;
  const std::string status = string_field(result, "status", "result");
  Problems out;
  ComplexRef k = parse_complex(field(result, "nerve", "result"), "result.nerve");
  if (status == "not-fillable") return verify_not_fillable(result, k, in.f, in.tower, ring, 0);
  if (status != "factored" && status != "not-close") {
    throw InputError("result.status: unknown value '" + status + "'");
  }
  const int n = in.tower.n();
  if (!(*k == nerve(in.cover, n + 1))) out.push_back("result.nerve: not the nerve of the cover");
  ComplexRef l = parse_complex(field(result, "l", "result"), "result.l");
  if (!(*l == k->skeleton(0))) out.push_back("result.l: not the vertices of the nerve");
  auto phi_l = parse_assignment_object<ChainMorphism>(field(result, "phi_l", "result"), l, in.f.source(), ring, 0,
                                                      "result.phi_l");
  for (const auto& m : in.cover.members()) {
    VertexSet pre = in.f.preimage(m.vertices);
    if (pre.empty() || !phi_l.defined_on({m.name}) || !(phi_l({m.name}) == Chain::elementary({*pre.begin()}, ring))) {
      out.push_back("result.phi_l: " + m.name + " is not sent to the least vertex over it");
    }
  }
  auto ext = parse_extension(field(result, "big_phi", "result"), k, in.f.source(), ring, "result.big_phi");
  RealizationProblem problem{k, l, phi_l, in.f, in.tower, ring, {}};
  merge(out, verify_extension(problem, ext), "");

  for (const auto& [v, m] : field(result, "kappa", "result").items()) {
    const std::string member = m.get<std::string>();
    if (!in.y->has_vertex(v) || !in.cover.has_member(member) || !in.cover.member(member).vertices.count(v)) {
      out.push_back("result.kappa: " + v + " -> " + member + " is not a member holding it");
    }
  }
  auto lambda = parse_assignment_object<ChainMorphism>(field(result, "lambda_kappa", "result"), in.y, k, ring, 0,
                                                       "result.lambda_kappa");
  auto law = verify_chain_morphism(lambda);
  if (!law.ok) out.push_back("result.lambda_kappa: not a chain morphism");
  auto through = compose(induced_morphism(in.f, std::max(in.f.source()->dimension(), 0), ring),
                         compose(ext.phi, lambda));
  auto inclusion = inclusion_morphism(in.y, in.f.target(), std::max(in.y->dimension(), 0), ring);
  auto close = is_close(inclusion, through, in.tower.level(in.tower.levels().size() - 1));
  const bool claimed = bool_field(field(result, "closeness", "result"), "ok", "result.closeness");
  if (close.ok != claimed) out.push_back("result.closeness: does not reproduce");
  if ((status == "factored") != close.ok) out.push_back("result.status disagrees with closeness");
  return out;
}

}  // namespace

ExtensionCertificate parse_extension(const Json& j, const ComplexRef& k, const ComplexRef& x, const Ring& ring,
                                     const std::string& path) {
  auto phi = parse_assignment_object<ChainMorphism>(field(j, "phi", path), k, x, ring, 0, path + ".phi");
  return {std::move(phi), parse_simplex_members(field(j, "cover_assignment", path), path + ".cover_assignment"),
          parse_fill_log(field(j, "fill_log", path), ring, 0, path + ".fill_log")};
}

CloseReport parse_close(const Json& j, const std::string& path) {
  CloseReport r;
  r.ok = bool_field(j, "ok", path);
  r.assignment = parse_simplex_members(field(j, "assignment", path), path + ".assignment");
  const Json& c = field(j, "counterexample", path);
  if (!c.is_null()) r.counterexample = parse_simplex(c, path + ".counterexample");
  auto carrier = parse_vertex_list(field(j, "counterexample_carrier", path), path + ".counterexample_carrier");
  r.counterexample_carrier = VertexSet(carrier.begin(), carrier.end());
  return r;
}

std::vector<std::string> verify_certificate(const Json& cert) {
  try {
    if (!cert.is_object()) throw InputError("certificate: expected an object");
    if (string_field(cert, "format", "") != kCertificateFormat) throw InputError("format: unsupported");
    const std::string command = string_field(cert, "command", "");
    Ring ring = Ring::parse(string_field(cert, "ring", ""));
    ProblemFile problem = parse_problem(field(cert, "problem", "").dump());
    if (!(problem.ring == ring)) throw InputError("ring: differs from the embedded problem");
    const Json& args = field(cert, "args", "");
    if (!args.is_object()) throw InputError("args: expected an object");
    const Json& result = field(cert, "result", "");
    Args a(problem, args, command);

    if (command == "homology") return verify_homology(a, result);
    if (command == "check-uvn") return a.has("map") ? verify_uvn_map(a, result, false) : verify_uvn_pair(a, result);
    if (command == "check-lcn") return verify_uvn_map(a, result, true);
    if (command == "check-alcn") return verify_alcn(a, result);
    if (command == "extend-realization") return verify_extend(a, result);
    if (command == "lift") return verify_lift_result(a, result);
    if (command == "build-homotopy") return verify_homotopy_result(a, result);
    if (command == "dugundji-extend") return verify_dugundji(a, result);
    if (command == "nerve-factorize") return verify_nerve(a, result);
    throw InputError("command: '" + command + "' has no certificate");
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  } catch (const PreconditionFailure& e) {
    return {std::string("inputs no longer satisfy the hypotheses: ") + e.what()};
  }
}

}  // namespace chaincert
