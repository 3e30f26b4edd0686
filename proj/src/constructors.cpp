#include "chaincert/constructors.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <set>
#include <tuple>

namespace chaincert {

namespace {

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

}  // namespace

NotFillable::NotFillable(Simplex simplex, Chain cycle, int level, std::vector<std::string> regions)
    : Error("cycle " + cycle.to_string() + " of " + format_simplex(simplex) + " bounds in no preimage of a level-" +
            std::to_string(level) + " member (tried " + (regions.empty() ? std::string("none") : join(regions)) +
            ")"),
      simplex_(std::move(simplex)),
      cycle_(std::move(cycle)),
      level_(level),
      regions_(std::move(regions)) {}

CloseFail::CloseFail(CloseReport report)
    : Error("lift is not close at " + (report.counterexample ? format_simplex(*report.counterexample) : "?") +
            ", carrier " + format_vertex_set(report.counterexample_carrier)),
      report_(std::move(report)) {}

namespace {

Chain signed_sum_over_facets(const Simplex& s, const std::map<Simplex, Chain>& values, int dim, const Ring& ring) {
  Chain out(dim);
  auto facets = boundary_faces(s);
  for (std::size_t i = 0; i < facets.size(); ++i) {
    out.add(values.at(facets[i]), Scalar(i % 2 == 0 ? 1 : -1), ring);
  }
  return out;
}

// Region selection and cached fills over preimages of tower members.
class RegionFinder {
 public:
  RegionFinder(const SimplicialMap& f, const FiltrationTower& tower, const Ring& ring)
      : f_(f), tower_(tower), ring_(ring) {}

  std::vector<std::string> candidates(int level, const VertexSet& image, const std::vector<std::string>& face_members,
                                      const VertexSet& prefer) const {
    std::vector<std::string> out;
    std::set<std::string> seen;
    auto push = [&](const CoverMember& m) {
      if (subset_of(image, m.vertices) && seen.insert(m.name).second) out.push_back(m.name);
    };
    if (level > 0) {
      for (const auto& v : tower_.level(level - 1).members()) {
        if (subset_of(image, v.vertices)) push(tower_.pair(level - 1, v.name));
      }
      for (const auto& name : face_members) push(tower_.pair(level - 1, name));
      for (const auto& name : face_members) push(tower_.witness(level - 1, name));
    }
    for (const auto& m : tower_.level(level).members()) push(m);
    if (!prefer.empty()) {
      const Cover& cover = tower_.level(level);
      std::stable_partition(out.begin(), out.end(),
                            [&](const std::string& n) { return subset_of(prefer, cover.member(n).vertices); });
    }
    return out;
  }

  std::optional<Chain> fill(int level, const std::string& member, const Chain& cycle) {
    const int k = cycle.dim();
    if (cycle.is_zero()) return Chain(k + 1);
    auto key = std::make_tuple(level, member, k);
    auto it = fillers_.find(key);
    if (it == fillers_.end()) {
      const SimplicialComplex& region = region_of(level, member);
      it = fillers_.emplace(key, std::make_unique<CycleFiller>(region, k, ring_)).first;
    }
    return it->second->fill(cycle);
  }

 private:
  const SimplicialComplex& region_of(int level, const std::string& member) {
    auto key = std::make_pair(level, member);
    auto it = regions_.find(key);
    if (it == regions_.end()) {
      VertexSet pre = f_.preimage(tower_.level(level).member(member).vertices);
      it = regions_.emplace(key, full_subcomplex(*f_.source(), pre)).first;
    }
    return it->second;
  }

  const SimplicialMap& f_;
  const FiltrationTower& tower_;
  Ring ring_;
  std::map<std::pair<int, std::string>, SimplicialComplex> regions_;
  std::map<std::tuple<int, std::string, int>, std::unique_ptr<CycleFiller>> fillers_;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionFailure(message);
}

void require_tower_on(const SimplicialMap& f, const FiltrationTower& tower) {
  require(*tower.complex() == *f.target(), "tower does not live on the target of f");
  require(f.is_vertex_surjective(), "f is not onto the target vertices");
  auto defects = tower_defects(tower);
  require(defects.empty(), defects.empty() ? "" : "tower defect: " + defects.front().describe());
}

const Cover& top_level(const FiltrationTower& tower) { return tower.level(tower.levels().size() - 1); }

VertexSet face_carriers(const Simplex& s, const ChainAssignment& a, bool proper_only) {
  VertexSet out;
  for (const auto& t : faces_of(s)) {
    if (proper_only && t.size() == s.size()) continue;
    if (!a.defined_on(t)) continue;
    auto c = carrier_vertices(a(t));
    out.insert(c.begin(), c.end());
  }
  return out;
}

}  // namespace

void check_realization_problem(const RealizationProblem& p) {
  require(p.k && p.l, "K and L must be given");
  require(p.l->is_subcomplex_of(*p.k), "L is not a subcomplex of K");
  for (const auto& v : p.k->vertices()) require(p.l->has_vertex(v), "L misses the vertex " + v + " of K");
  require(*p.phi_l.source() == *p.l, "phi_L is not defined on L");
  require(*p.phi_l.target() == *p.f.source(), "phi_L does not land in the source of f");
  require(p.phi_l.ring() == p.ring, "phi_L uses another coefficient ring");
  require(p.phi_l.top_degree() == p.l->dimension(), "phi_L is not defined in every dimension of L");
  auto law = verify_chain_morphism(p.phi_l);
  require(law.ok, law.ok ? "" : "phi_L is not a chain morphism at " + format_simplex(law.violations[0].simplex));
  require(is_correct(p.phi_l), "phi_L is not correct on vertices");
  require_tower_on(p.f, p.tower);
  require(p.k->dimension() <= p.tower.n() + 1, "dim K exceeds n + 1 for the tower");
  const Cover& base = p.tower.level(0);
  for (const auto& s : p.k->all_simplexes()) {
    VertexSet data;
    for (const auto& t : faces_of(s)) {
      if (!p.l->contains(t)) continue;
      auto c = carrier_vertices(p.phi_l(t));
      data.insert(c.begin(), c.end());
    }
    require(base.first_containing(p.f.image(data)) != nullptr,
            "phi_L on the faces of " + format_simplex(s) + " is not small for the level-0 cover");
  }
}

ExtensionCertificate extend_realization(const RealizationProblem& p) {
  check_realization_problem(p);
  const Ring& ring = p.ring;
  RegionFinder finder(p.f, p.tower, ring);
  std::map<Simplex, Chain> phi;
  std::map<Simplex, std::string> assigned;
  std::vector<FillRecord> log;
  static const VertexSet none;

  for (int k = 0; k <= p.k->dimension(); ++k) {
    for (const auto& s : p.k->simplexes(k)) {
      VertexSet carrier;
      for (const auto& t : faces_of(s)) {
        if (t.size() == s.size()) continue;
        auto c = carrier_vertices(phi.at(t));
        carrier.insert(c.begin(), c.end());
      }
      std::vector<std::string> face_members;
      if (k > 0) {
        for (const auto& t : boundary_faces(s)) face_members.push_back(assigned.at(t));
      }
      auto g = p.guide.find(s);
      const VertexSet& prefer = g == p.guide.end() ? none : g->second;

      if (p.l->contains(s)) {
        const Chain& value = p.phi_l(s);
        auto c = carrier_vertices(value);
        carrier.insert(c.begin(), c.end());
        auto cands = finder.candidates(k, p.f.image(carrier), face_members, prefer);
        require(!cands.empty(), "no level-" + std::to_string(k) + " member holds phi_L on the faces of " +
                                    format_simplex(s));
        phi.emplace(s, value);
        assigned.emplace(s, cands.front());
        continue;
      }

      Chain gamma = signed_sum_over_facets(s, phi, k - 1, ring);
      auto cands = finder.candidates(k, p.f.image(carrier), face_members, prefer);
      require(!cands.empty(),
              "no level-" + std::to_string(k) + " member holds the carrier of the faces of " + format_simplex(s));
      bool filled = false;
      for (const auto& name : cands) {
        if (auto x = finder.fill(k, name, gamma)) {
          log.push_back({s, k, name, gamma, *x});
          phi.emplace(s, std::move(*x));
          assigned.emplace(s, name);
          filled = true;
          break;
        }
      }
      if (!filled) throw NotFillable(s, gamma, k, cands);
    }
  }

  ChainMorphism out(p.k, p.f.source(), std::max(p.k->dimension(), 0), ring, std::move(phi));
  if (!is_small(out, preimage_cover(p.f, top_level(p.tower))).ok) {
    throw Error("extension is not small for the top cover despite a defect-free tower");
  }
  return {std::move(out), std::move(assigned), std::move(log)};
}

CertificateCheck verify_extension(const RealizationProblem& p, const ExtensionCertificate& cert) {
  CertificateCheck out;
  auto fail = [&](std::string msg) {
    out.ok = false;
    out.problems.push_back(std::move(msg));
  };
  const ChainMorphism& phi = cert.phi;
  if (!(*phi.source() == *p.k)) fail("morphism is not defined on K");
  if (!(*phi.target() == *p.f.source())) fail("morphism does not land in the source of f");
  if (!(phi.ring() == p.ring)) fail("coefficient ring differs");
  if (phi.top_degree() != p.k->dimension()) fail("morphism does not reach dim K");
  if (!out.ok) return out;

  for (int k = 0; k <= p.l->dimension(); ++k) {
    for (const auto& s : p.l->simplexes(k)) {
      if (!(phi(s) == p.phi_l(s))) fail("restriction to L differs at " + format_simplex(s));
    }
  }
  for (const auto& v : verify_chain_morphism(phi).violations) {
    fail("chain-morphism law fails at " + format_simplex(v.simplex) + ": " + v.message);
  }
  const int levels = static_cast<int>(p.tower.levels().size());
  for (const auto& s : p.k->all_simplexes()) {
    auto it = cert.cover_assignment.find(s);
    const int level = dimension_of(s);
    if (it == cert.cover_assignment.end()) {
      fail("no member recorded for " + format_simplex(s));
      continue;
    }
    if (level >= levels || !p.tower.level(level).has_member(it->second)) {
      fail("recorded member " + it->second + " of " + format_simplex(s) + " is not in level " +
           std::to_string(level));
      continue;
    }
    const VertexSet& member = p.tower.level(level).member(it->second).vertices;
    for (const auto& t : faces_of(s)) {
      if (!subset_of(p.f.image(carrier_vertices(phi(t))), member)) {
        fail("carrier on face " + format_simplex(t) + " of " + format_simplex(s) + " leaves the preimage of " +
             it->second);
        break;
      }
    }
  }
  for (const auto& r : cert.fill_log) {
    if (!(boundary(r.filling, p.ring) == r.cycle)) fail("logged filling of " + format_simplex(r.simplex) + " is wrong");
    if (!phi.defined_on(r.simplex) || !(phi(r.simplex) == r.filling)) {
      fail("logged filling of " + format_simplex(r.simplex) + " differs from the morphism");
    }
  }
  auto small = is_small(phi, preimage_cover(p.f, top_level(p.tower)));
  if (!small.ok) fail("not small for the top cover at " + format_simplex(*small.counterexample));
  return out;
}

namespace {

Chain push_forward(const SimplicialMap& f, const Chain& c, const Ring& ring) {
  Chain out(c.dim());
  for (const auto& [s, g] : c.terms()) {
    std::vector<Vertex> image;
    for (const auto& v : s) image.push_back(f(v));
    std::set<Vertex> distinct(image.begin(), image.end());
    if (distinct.size() < image.size()) continue;
    out.add(Chain::oriented(image, g, ring), Scalar(1), ring);
  }
  return out;
}

}  // namespace

LiftResult approximate_lift(const ComplexRef& k, const ComplexRef& l, const ChainMorphism& phi_l,
                            const ChainMorphism& phi, const SimplicialMap& f, const FiltrationTower& tower,
                            const Ring& ring) {
  require(*phi.source() == *k, "phi is not defined on K");
  require(*phi.target() == *f.target(), "phi does not land in the target of f");
  require(phi.top_degree() == k->dimension(), "phi is not defined in every dimension of K");
  require(is_correct(phi), "phi is not correct on vertices");
  require(*tower.complex() == *f.target(), "tower does not live on the target of f");
  auto small = is_small(phi, tower.level(0));
  require(small.ok, small.ok ? "" : "phi is not small for the level-0 cover at " +
                                        format_simplex(*small.counterexample));
  require(l->is_subcomplex_of(*k), "L is not a subcomplex of K");
  require(*phi_l.source() == *l, "phi_L is not defined on L");
  for (const auto& s : l->all_simplexes()) {
    if (!phi_l.defined_on(s)) continue;
    require(push_forward(f, phi_l(s), ring) == phi(s), "phi differs from f_# phi_L at " + format_simplex(s));
  }

  std::vector<std::vector<Vertex>> simplexes;
  for (const auto& s : l->all_simplexes()) simplexes.push_back(s);
  std::map<Simplex, Chain> lifted = phi_l.assignment();
  for (const auto& v : k->vertices()) {
    if (l->has_vertex(v)) continue;
    const auto& terms = phi({v}).terms();
    const Vertex& y = terms.begin()->first.front();
    VertexSet fiber = f.preimage({y});
    require(!fiber.empty(), "the fiber over " + y + " is empty");
    simplexes.push_back({v});
    lifted.emplace(Simplex{v}, Chain::elementary({*fiber.begin()}, ring));
  }
  ComplexRef l_full = share(validate_complex({}, simplexes));
  ChainMorphism phi_full(l_full, phi_l.target(), std::max(l_full->dimension(), 0), ring, std::move(lifted));

  RealizationProblem problem{k, l_full, phi_full, f, tower, ring, {}};
  for (const auto& s : k->all_simplexes()) problem.guide.emplace(s, face_carriers(s, phi, false));
  auto ext = extend_realization(problem);

  auto f_sharp = induced_morphism(f, std::max(f.source()->dimension(), 0), ring);
  auto close = is_close(phi, compose(f_sharp, ext.phi), top_level(tower));
  if (!close.ok) throw CloseFail(close);
  return {std::move(ext), l_full, std::move(phi_full), std::move(close)};
}

CertificateCheck verify_lift(const ComplexRef& k, const ChainMorphism& phi, const SimplicialMap& f,
                             const FiltrationTower& tower, const LiftResult& lift) {
  RealizationProblem problem{k, lift.l, lift.phi_l, f, tower, phi.ring(), {}};
  CertificateCheck out = verify_extension(problem, lift.extension);
  for (const auto& s : lift.l->all_simplexes()) {
    if (!(push_forward(f, lift.phi_l(s), phi.ring()) == phi(s))) {
      out.ok = false;
      out.problems.push_back("phi differs from f_# phi_L at " + format_simplex(s));
    }
  }
  if (!out.ok) return out;
  auto f_sharp = induced_morphism(f, std::max(f.source()->dimension(), 0), phi.ring());
  auto close = is_close(phi, compose(f_sharp, lift.extension.phi), top_level(tower));
  if (!close.ok) {
    out.ok = false;
    out.problems.push_back("lift is not close to phi at " + format_simplex(*close.counterexample));
  }
  return out;
}

std::optional<std::string> star_pair_failure(const SimplicialMap& f, const FiltrationTower& tower, int k,
                                             const Ring& ring) {
  const Cover& cover = tower.level(k);
  const SimplicialComplex& x = *f.source();
  for (const auto& m : cover.members()) {
    VertexSet st = star(m.vertices, cover);
    const CoverMember& paired = tower.pair(k, m.name);
    if (!subset_of(st, paired.vertices)) return m.name;
    auto from = full_subcomplex(x, f.preimage(st));
    auto into = full_subcomplex(x, f.preimage(paired.vertices));
    if (!is_trivial_induced(from, into, k, ring).trivial) return m.name;
  }
  return std::nullopt;
}

std::optional<std::string> degree_zero_star_failure(const SimplicialMap& f, const FiltrationTower& tower,
                                                    const Ring& ring) {
  return star_pair_failure(f, tower, 0, ring);
}

namespace {

bool is_empty(const ComplexRef& a) { return !a || a->vertices().empty(); }

}  // namespace

void check_homotopy_problem(const HomotopyProblem& p) {
  const ComplexRef& k = p.phi.source();
  require(*p.psi.source() == *k, "phi and psi have different sources");
  require(*p.phi.target() == *p.f.source() && *p.psi.target() == *p.f.source(),
          "phi and psi must land in the source of f");
  require(p.phi.ring() == p.ring && p.psi.ring() == p.ring, "coefficient ring differs");
  const int top = std::min(p.tower.n(), k->dimension());
  require(p.phi.top_degree() >= top && p.psi.top_degree() >= top, "phi and psi must be defined through degree n");
  require(verify_chain_morphism(p.phi).ok, "phi is not a chain morphism");
  require(verify_chain_morphism(p.psi).ok, "psi is not a chain morphism");
  require(is_correct(p.phi) && is_correct(p.psi), "phi and psi must be correct on vertices");
  require_tower_on(p.f, p.tower);
  Cover base = preimage_cover(p.f, p.tower.level(0));
  auto close = is_close(p.phi, p.psi, base);
  require(close.ok, close.ok ? "" : "phi and psi are not close for the level-0 cover at " +
                                        format_simplex(*close.counterexample));
  if (!is_empty(p.a)) {
    require(p.a->is_subcomplex_of(*k), "A is not a subcomplex of the source");
    require(p.d_a.has_value(), "A is nonempty but D_A is missing");
    require(*p.d_a->source() == *p.a, "D_A is not defined on A");
    require(*p.d_a->target() == *p.f.source(), "D_A does not land in the source of f");
    require(p.d_a->top_degree() >= std::min(p.tower.n(), p.a->dimension()), "D_A must be defined through degree n");
    auto rep = verify_homotopy(*p.d_a, restrict_to(p.phi, p.a), restrict_to(p.psi, p.a), &base);
    require(rep.ok, "D_A is not a homotopy between the restrictions");
    require(rep.smallness->ok, "D_A is not small for the level-0 cover");
  }
  auto bad = degree_zero_star_failure(p.f, p.tower, p.ring);
  require(!bad, bad ? "degree-0 star condition fails at level-0 member " + *bad : "");
}

HomotopyCertificate build_homotopy(const HomotopyProblem& p) {
  check_homotopy_problem(p);
  const Ring& ring = p.ring;
  const ComplexRef& k = p.phi.source();
  const int top = std::min(p.tower.n(), k->dimension());
  const bool has_a = !is_empty(p.a);
  RegionFinder finder(p.f, p.tower, ring);
  std::map<Simplex, Chain> d;
  std::map<Simplex, std::string> assigned;
  std::vector<FillRecord> log;

  for (int q = 0; q <= top; ++q) {
    for (const auto& s : k->simplexes(q)) {
      VertexSet carrier = face_carriers(s, p.phi, false);
      auto more = face_carriers(s, p.psi, false);
      carrier.insert(more.begin(), more.end());
      for (const auto& t : faces_of(s)) {
        if (t.size() == s.size()) continue;
        auto c = carrier_vertices(d.at(t));
        carrier.insert(c.begin(), c.end());
      }
      std::vector<std::string> face_members;
      if (q > 0) {
        for (const auto& t : boundary_faces(s)) face_members.push_back(assigned.at(t));
      }
      if (has_a && p.a->contains(s)) {
        const Chain& value = (*p.d_a)(s);
        auto c = carrier_vertices(value);
        carrier.insert(c.begin(), c.end());
        auto cands = finder.candidates(q + 1, p.f.image(carrier), face_members, {});
        require(!cands.empty(), "no level-" + std::to_string(q + 1) + " member holds D_A on the faces of " +
                                    format_simplex(s));
        d.emplace(s, value);
        assigned.emplace(s, cands.front());
        continue;
      }
      Chain gamma = p.phi(s).minus(p.psi(s), ring);
      if (q > 0) gamma = gamma.minus(signed_sum_over_facets(s, d, q, ring), ring);
      auto cands = finder.candidates(q + 1, p.f.image(carrier), face_members, {});
      require(!cands.empty(), "no level-" + std::to_string(q + 1) + " member holds the data on the faces of " +
                                  format_simplex(s));
      bool filled = false;
      for (const auto& name : cands) {
        if (auto x = finder.fill(q + 1, name, gamma)) {
          log.push_back({s, q + 1, name, gamma, *x});
          d.emplace(s, std::move(*x));
          assigned.emplace(s, name);
          filled = true;
          break;
        }
      }
      if (!filled) throw NotFillable(s, gamma, q + 1, cands);
    }
  }
  ChainHomotopy out(k, p.f.source(), std::max(top, 0), ring, std::move(d));
  Cover top_cover = preimage_cover(p.f, top_level(p.tower));
  auto rep = verify_homotopy(out, p.phi, p.psi, &top_cover);
  if (!rep.ok || !rep.smallness->ok) throw Error("constructed homotopy failed its own check");
  return {std::move(out), std::move(assigned), std::move(log)};
}

CertificateCheck verify_homotopy_certificate(const HomotopyProblem& p, const HomotopyCertificate& cert) {
  CertificateCheck out;
  auto fail = [&](std::string msg) {
    out.ok = false;
    out.problems.push_back(std::move(msg));
  };
  const ChainHomotopy& d = cert.d;
  if (!(*d.source() == *p.phi.source())) fail("homotopy is not defined on the source of phi");
  if (!(*d.target() == *p.f.source())) fail("homotopy does not land in the source of f");
  if (!out.ok) return out;
  const int top = std::min(p.tower.n(), d.source()->dimension());
  if (d.top_degree() < top) fail("homotopy stops below degree n");
  Cover top_cover = preimage_cover(p.f, top_level(p.tower));
  auto rep = verify_homotopy(d, p.phi, p.psi, &top_cover);
  for (const auto& v : rep.violations) fail("homotopy law fails at " + format_simplex(v.simplex) + ": " + v.message);
  if (rep.smallness && !rep.smallness->ok) fail("homotopy is not small for the top cover");
  if (!is_empty(p.a) && p.d_a) {
    for (const auto& [s, c] : p.d_a->assignment()) {
      if (dimension_of(s) > d.top_degree()) continue;
      if (!d.defined_on(s) || !(d(s) == c)) fail("homotopy differs from D_A at " + format_simplex(s));
    }
  }
  const int levels = static_cast<int>(p.tower.levels().size());
  for (int q = 0; q <= d.top_degree(); ++q) {
    for (const auto& s : d.source()->simplexes(q)) {
      auto it = cert.cover_assignment.find(s);
      if (it == cert.cover_assignment.end() || q + 1 >= levels || !p.tower.level(q + 1).has_member(it->second)) {
        fail("no valid member recorded for " + format_simplex(s));
        continue;
      }
      const VertexSet& member = p.tower.level(q + 1).member(it->second).vertices;
      for (const auto& t : faces_of(s)) {
        VertexSet data = carrier_vertices(d(t));
        for (const auto* m : {&p.phi, &p.psi}) {
          auto c = carrier_vertices((*m)(t));
          data.insert(c.begin(), c.end());
        }
        if (!subset_of(p.f.image(data), member)) {
          fail("data on face " + format_simplex(t) + " of " + format_simplex(s) + " leaves the preimage of " +
               it->second);
          break;
        }
      }
    }
  }
  return out;
}

namespace {

std::map<Vertex, std::set<Vertex>> adjacency(const SimplicialComplex& m) {
  std::map<Vertex, std::set<Vertex>> adj;
  for (const auto& v : m.vertices()) adj[v];
  if (m.dimension() >= 1) {
    for (const auto& e : m.simplexes(1)) {
      adj[e[0]].insert(e[1]);
      adj[e[1]].insert(e[0]);
    }
  }
  return adj;
}

std::map<Vertex, int> distances_from(const std::map<Vertex, std::set<Vertex>>& adj, const VertexSet& sources) {
  std::map<Vertex, int> dist;
  std::deque<Vertex> queue;
  for (const auto& s : sources) {
    dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (const auto& w : adj.at(v)) {
      if (dist.count(w)) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

}  // namespace

DugundjiResult dugundji_extend(const DugundjiProblem& p) {
  if (p.a.empty()) throw EmptyA();
  for (const auto& v : p.a) require(p.m->has_vertex(v), "A names the vertex " + v + " outside M");
  ComplexRef a = share(full_subcomplex(*p.m, p.a));
  require(*p.phi.source() == *a, "phi is not defined on the full subcomplex on A");
  const int n = p.tower.n();
  require(p.phi.top_degree() >= std::min(a->dimension(), n + 1), "phi is not defined through dimension n + 1 on A");

  auto adj = adjacency(*p.m);
  auto dist = distances_from(adj, p.a);
  VertexSet w_vertices;
  for (const auto& [v, d] : dist) {
    if (p.radius < 0 || d <= p.radius) w_vertices.insert(v);
  }
  ComplexRef w = share(full_subcomplex(*p.m, w_vertices).skeleton(n + 1));

  std::map<Vertex, Vertex> nearest;
  std::map<Vertex, int> distance;
  std::vector<Vertex> factor_two_failures;
  std::vector<std::vector<Vertex>> l_simplexes;
  std::map<Simplex, Chain> phi_l;
  for (const auto& s : a->all_simplexes()) {
    if (dimension_of(s) > n + 1) continue;
    l_simplexes.push_back(s);
    phi_l.emplace(s, p.phi(s));
  }
  for (const auto& v : w->vertices()) {
    distance[v] = dist.at(v);
    if (p.a.count(v)) continue;
    auto from_v = distances_from(adj, {v});
    const Vertex* best = nullptr;
    for (const auto& x : p.a) {  // ascending, so the first minimum is the least name
      auto it = from_v.find(x);
      if (it == from_v.end()) continue;
      if (!best || it->second < from_v.at(*best)) best = &x;
    }
    nearest[v] = *best;
    if (!(from_v.at(*best) < 2 * dist.at(v))) factor_two_failures.push_back(v);
    l_simplexes.push_back({v});
    phi_l.emplace(Simplex{v}, p.phi({*best}));
  }
  ComplexRef l = share(validate_complex({}, l_simplexes));
  ChainMorphism phi_on_l(l, p.phi.target(), std::max(l->dimension(), 0), p.ring, std::move(phi_l));
  RealizationProblem problem{w, l, std::move(phi_on_l), p.f, p.tower, p.ring, {}};
  auto extension = extend_realization(problem);
  return {w,         std::move(nearest),  std::move(distance), std::move(factor_two_failures),
          std::move(extension), std::move(problem)};
}

Chain theta(const std::vector<Vertex>& array, const Ring& ring) {
  std::set<Vertex> distinct(array.begin(), array.end());
  if (distinct.size() < array.size()) return Chain(static_cast<int>(array.size()) - 1);
  return Chain::oriented(array, Scalar(1), ring);
}

NerveResult nerve_factorization(const ComplexRef& y, const Cover& cover, const SimplicialMap& f,
                                const FiltrationTower& tower, const Ring& ring) {
  require(y->is_subcomplex_of(*f.target()), "Y is not a subcomplex of the target of f");
  require(*cover.complex() == *y, "the cover is not a cover of Y");
  require(f.is_vertex_surjective(), "f is not onto the target vertices");
  const int n = tower.n();
  ComplexRef k = share(nerve(cover, n + 1));

  std::map<Simplex, Chain> base;
  for (const auto& m : cover.members()) {
    VertexSet pre = f.preimage(m.vertices);
    base.emplace(Simplex{m.name}, Chain::elementary({*pre.begin()}, ring));
  }
  ComplexRef k0 = share(k->skeleton(0));
  ChainMorphism phi0(k0, f.source(), 0, ring, std::move(base));
  RealizationProblem problem{k, k0, phi0, f, tower, ring, {}};
  auto big_phi = extend_realization(problem);

  std::map<Vertex, VertexSet> closed_star;
  for (const auto& s : y->maximal_simplexes()) {
    for (const auto& v : s) closed_star[v].insert(s.begin(), s.end());
  }
  std::map<Vertex, Vertex> kappa;
  for (const auto& v : y->vertices()) {
    const CoverMember* m = cover.first_containing(closed_star[v]);
    if (!m) m = cover.first_containing({v});
    if (!m) throw NoCanonicalAssignment("vertex " + v + " lies in no member of the cover");
    kappa[v] = m->name;
  }
  std::map<Simplex, Chain> lk;
  for (const auto& s : y->all_simplexes()) {
    std::vector<Vertex> array;
    for (const auto& v : s) array.push_back(kappa.at(v));
    Chain c = theta(array, ring);
    if (!c.is_zero()) {
      require(k->contains(c.terms().begin()->first),
              "kappa sends " + format_simplex(s) + " outside the nerve skeleton");
    }
    lk.emplace(s, std::move(c));
  }
  ChainMorphism lambda_kappa(y, k, std::max(y->dimension(), 0), ring, std::move(lk));

  auto inclusion = inclusion_morphism(y, f.target(), std::max(y->dimension(), 0), ring);
  auto f_sharp = induced_morphism(f, std::max(f.source()->dimension(), 0), ring);
  auto through = compose(f_sharp, compose(big_phi.phi, lambda_kappa));
  auto close = is_close(inclusion, through, top_level(tower));
  return {k, std::move(big_phi), std::move(problem), std::move(kappa), std::move(lambda_kappa), std::move(close)};
}

}  // namespace chaincert
