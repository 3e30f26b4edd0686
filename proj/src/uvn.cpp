#include "chaincert/uvn.hpp"

#include "chaincert/errors.hpp"

namespace chaincert {

UvnPairReport check_uvn_pair(const SimplicialComplex& v, const SimplicialComplex& u, int n, const Ring& ring) {
  if (!v.is_subcomplex_of(u)) throw PreconditionFailure("V is not a subcomplex of U");
  UvnPairReport report;
  for (int k = 0; k <= n; ++k) {
    report.degrees.push_back(is_trivial_induced(v, u, k, ring));
    if (!report.degrees.back().trivial) {
      report.ok = false;
      report.failing_degree = k;
      break;
    }
  }
  return report;
}

bool UvnMapReport::homologically_ok() const {
  for (const auto& o : obligations) {
    if (!o.result.trivial) return false;
  }
  return true;
}

UvnMapReport check_uvn_map(const SimplicialMap& f, const FiltrationTower& tower, int n, const Ring& ring) {
  if (!(*tower.complex() == *f.target())) throw PreconditionFailure("tower does not live on the map's target");
  if (n < 0) throw PreconditionFailure("n must be nonnegative");
  if (tower.n() < n) {
    throw PreconditionFailure("tower has " + std::to_string(tower.levels().size()) + " levels, need at least " +
                              std::to_string(n + 2));
  }
  if (!f.is_vertex_surjective()) throw PreconditionFailure("map is not surjective on vertices");
  UvnMapReport report;
  report.defects = tower_defects(tower);
  const auto& x = *f.source();
  for (int k = 0; k <= n; ++k) {
    for (const auto& m : tower.level(k).members()) {
      const CoverMember& p = tower.pair(k, m.name);
      if (!subset_of(m.vertices, p.vertices)) continue;
      UvnObligation o;
      o.level = k;
      o.member = m.name;
      o.paired = p.name;
      o.preimage_member = f.preimage(m.vertices);
      o.preimage_paired = f.preimage(p.vertices);
      o.result = is_trivial_induced(full_subcomplex(x, o.preimage_member), full_subcomplex(x, o.preimage_paired), k,
                                    ring);
      report.obligations.push_back(std::move(o));
    }
  }
  report.ok = report.defects.empty() && report.homologically_ok();
  return report;
}

UvnMapReport check_lcn(const ComplexRef& x, const FiltrationTower& tower, int n, const Ring& ring) {
  return check_uvn_map(SimplicialMap::identity(x), tower, n, ring);
}

namespace {

void require_nested(const SimplicialComplex& v, const SimplicialComplex& w, const SimplicialComplex& u) {
  if (!v.is_subcomplex_of(w)) throw PreconditionFailure("V is not a subcomplex of W");
  if (!w.is_subcomplex_of(u)) throw PreconditionFailure("W is not a subcomplex of U");
}

// Generators of the cycles supported on `eligible` simplexes of W that bound in U.
std::vector<Chain> bounding_cycles_on(const std::vector<Simplex>& eligible, const SimplicialComplex& u, int k,
                                      const Ring& ring) {
  RingMatrix b = boundary_matrix(u, k + 1, ring);
  const std::size_t e = eligible.size();
  RingMatrix m(u.count(k), e + b.cols());
  for (std::size_t j = 0; j < e; ++j) m.set(*u.index_of(eligible[j]), j, ring.one());
  for (const auto& [idx, val] : b.entries()) m.set(idx.first, e + idx.second, ring.neg(val));
  std::vector<Chain> out;
  for (const auto& z : kernel_basis(m, ring)) {
    Chain x(k);
    for (std::size_t j = 0; j < e; ++j) {
      if (z[j] != 0) x.add(eligible[j], z[j], ring);
    }
    if (!x.is_zero()) out.push_back(std::move(x));
  }
  return out;
}

// Greedily combines generators so the vertex set of the sum only grows.
Chain widest_combination(const std::vector<Chain>& gens, const VertexSet& target, const Ring& ring, int k) {
  Chain cur(k);
  VertexSet covered;
  static const int coefficients[] = {1, -1, 2, -2, 3};
  for (const auto& g : gens) {
    if (covered == target) break;
    for (int a : coefficients) {
      Chain cand = cur.plus(g.scaled(Scalar(a), ring), ring);
      VertexSet cv = carrier_vertices(cand);
      if (cv.size() > covered.size() && subset_of(covered, cv)) {
        cur = std::move(cand);
        covered = std::move(cv);
        break;
      }
    }
  }
  return cur;
}

}  // namespace

ApproxLcnReport check_approx_lcn_degree(const SimplicialComplex& v, const SimplicialComplex& w,
                                        const SimplicialComplex& u, int k, const Ring& ring, VertexMatch match) {
  require_nested(v, w, u);
  ApproxLcnReport report;
  if (v.count(k) == 0) return report;
  CycleFiller filler(u, k, ring);
  for (const auto& z : kernel_basis(boundary_matrix(v, k, ring), ring)) {
    ApproxLcnEntry entry;
    entry.degree = k;
    entry.cycle = from_column(z, v, k, ring);
    if (entry.cycle.is_zero()) continue;
    if (auto x = filler.fill(entry.cycle)) {
      entry.companion = entry.cycle;
      entry.filling = std::move(x);
      entry.ok = true;
    } else {
      const VertexSet target = carrier_vertices(entry.cycle);
      std::vector<Simplex> eligible;
      for (const auto& s : w.simplexes(k)) {
        if (subset_of(s, target)) eligible.push_back(s);
      }
      Chain best = widest_combination(bounding_cycles_on(eligible, u, k, ring), target, ring, k);
      bool accepted = match == VertexMatch::strict ? carrier_vertices(best) == target : !best.is_zero();
      if (accepted) {
        entry.filling = filler.fill(best);
        if (!entry.filling) throw Error("bounding cycle failed to fill");
        entry.companion = std::move(best);
        entry.ok = true;
      }
    }
    if (!entry.ok) report.ok = false;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

ApproxLcnReport check_approx_lcn(const SimplicialComplex& v, const SimplicialComplex& w, const SimplicialComplex& u,
                                 int n, const Ring& ring, VertexMatch match) {
  require_nested(v, w, u);
  ApproxLcnReport report;
  for (int k = 0; k <= n; ++k) {
    auto part = check_approx_lcn_degree(v, w, u, k, ring, match);
    if (!part.ok) report.ok = false;
    for (auto& e : part.entries) report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace chaincert
