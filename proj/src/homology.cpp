#include "chaincert/homology.hpp"

#include "chaincert/errors.hpp"

#include <algorithm>

namespace chaincert {

std::string HomologyGroup::describe() const {
  if (generators.empty()) return "0";
  std::vector<std::string> parts;
  if (free_rank > 0) {
    std::string base = ring.kind() == RingKind::integers_mod ? "(" + ring.symbol() + ")" : ring.symbol();
    parts.push_back(base + "^" + std::to_string(free_rank));
  }
  for (const auto& d : torsion) parts.push_back("Z/" + d.str());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " + ";
    out += parts[i];
  }
  return out;
}

RingMatrix boundary_matrix(const SimplicialComplex& complex, int k, const Ring& ring) {
  const auto& cols = complex.simplexes(k);
  if (k == 0) {
    RingMatrix m(1, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set(0, j, ring.one());
    return m;
  }
  const auto& rows = complex.simplexes(k - 1);
  RingMatrix m(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto faces = boundary_faces(cols[j]);
    for (std::size_t i = 0; i < faces.size(); ++i) {
      m.set(*complex.index_of(faces[i]), j, ring.normalize(Scalar(i % 2 == 0 ? 1 : -1)));
    }
  }
  return m;
}

Column to_column(const Chain& c, const SimplicialComplex& complex) {
  Column x(complex.count(c.dim()), Scalar(0));
  for (const auto& [s, g] : c.terms()) {
    auto idx = complex.index_of(s);
    if (!idx) throw PreconditionFailure("chain term " + format_simplex(s) + " is not in the complex");
    x[*idx] = g;
  }
  return x;
}

Chain from_column(const Column& x, const SimplicialComplex& complex, int k, const Ring& ring) {
  const auto& simplexes = complex.simplexes(k);
  if (x.size() != simplexes.size()) throw DimensionMismatch("column length differs from simplex count");
  Chain c(k);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) c.add(simplexes[i], x[i], ring);
  }
  return c;
}

bool is_cycle(const Chain& c, const Ring& ring) {
  if (c.is_zero()) return true;
  if (c.dim() == 0) return augmentation(c, ring) == 0;
  return boundary(c, ring).is_zero();
}

namespace {

RingMatrix columns_matrix(const std::vector<Column>& cols, std::size_t rows) {
  RingMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < rows; ++i) {
      if (cols[j][i] != 0) m.set(i, j, cols[j][i]);
    }
  }
  return m;
}

Column combine(const std::vector<Column>& cols, const std::vector<Integer>& weights, std::size_t rows,
               const Ring& ring) {
  Column out(rows, Scalar(0));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (weights[j] == 0) continue;
    for (std::size_t i = 0; i < rows; ++i) {
      if (cols[j][i] != 0) out[i] += cols[j][i] * Scalar(weights[j]);
    }
  }
  for (auto& v : out) v = ring.normalize(v);
  return out;
}

// Incremental row echelon basis over Q, used to pick a complement of the
// boundary subspace inside the cycle space.
class RationalEchelon {
 public:
  explicit RationalEchelon(std::size_t width) : width_(width) {}

  // Returns true and keeps v if it is independent of the stored rows.
  bool insert(Column v) {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot] == 0) continue;
      Rational f = v[pivot] / row[pivot];
      for (std::size_t i = 0; i < width_; ++i) {
        if (row[i] != 0) v[i] -= f * row[i];
      }
    }
    for (std::size_t i = 0; i < width_; ++i) {
      if (v[i] != 0) {
        rows_.emplace_back(i, std::move(v));
        return true;
      }
    }
    return false;
  }

 private:
  std::size_t width_;
  std::vector<std::pair<std::size_t, Column>> rows_;
};

}  // namespace

HomologyGroup homology(const SimplicialComplex& complex, int k, const Ring& ring) {
  if (k < 0) throw PreconditionFailure("homology degree must be nonnegative");
  HomologyGroup group;
  group.ring = ring;
  group.degree = k;
  const std::size_t ck = complex.count(k);
  if (ck == 0) return group;

  std::vector<Column> cycles = kernel_basis(boundary_matrix(complex, k, ring), ring);
  const std::size_t r = cycles.size();
  if (r == 0) return group;
  LinearSystem in_cycles(columns_matrix(cycles, ck), ring);

  // Coordinates of each boundary on the cycle generators.
  RingMatrix next = boundary_matrix(complex, k + 1, ring);
  std::vector<Column> relations;
  for (std::size_t j = 0; j < next.cols(); ++j) {
    Column b = next.column(j);
    if (std::all_of(b.begin(), b.end(), [](const Scalar& x) { return x == 0; })) continue;
    auto a = in_cycles.solve(b);
    if (!a) throw Error("boundary is not a cycle combination; boundary matrices are inconsistent");
    relations.push_back(std::move(*a));
  }

  if (ring.kind() == RingKind::rationals) {
    RationalEchelon echelon(r);
    for (auto& rel : relations) echelon.insert(rel);
    for (std::size_t i = 0; i < r; ++i) {
      Column e(r, Scalar(0));
      e[i] = 1;
      if (echelon.insert(e)) {
        group.generators.push_back(from_column(cycles[i], complex, k, ring));
        group.orders.push_back(0);
      }
    }
    group.free_rank = group.generators.size();
    return group;
  }

  if (ring.kind() == RingKind::integers_mod) {
    const Integer& m = ring.modulus();
    for (auto& syz : kernel_basis(columns_matrix(cycles, ck), ring)) relations.push_back(std::move(syz));
    for (std::size_t i = 0; i < r; ++i) {
      Column e(r, Scalar(0));
      e[i] = Scalar(m);
      relations.push_back(std::move(e));
    }
  }

  IntMatrix rel(r, std::vector<Integer>(relations.size(), Integer(0)));
  for (std::size_t j = 0; j < relations.size(); ++j) {
    for (std::size_t i = 0; i < r; ++i) rel[i][j] = numerator(relations[j][i]);
  }
  SmithForm snf = smith_normal_form(rel, relations.size(), SmithOptions{false, false, true});
  for (std::size_t i = 0; i < r; ++i) {
    Integer order = i < snf.rank ? snf.diagonal[i][i] : Integer(0);
    if (order == 1) continue;
    std::vector<Integer> weights(r);
    for (std::size_t t = 0; t < r; ++t) weights[t] = snf.left_inverse[t][i];
    group.generators.push_back(from_column(combine(cycles, weights, ck, ring), complex, k, ring));
    group.orders.push_back(order);
    bool free = ring.kind() == RingKind::integers ? order == 0 : order == ring.modulus();
    if (free) {
      ++group.free_rank;
    } else {
      group.torsion.push_back(order);
    }
  }
  return group;
}

HomologyCoordinates::HomologyCoordinates(const SimplicialComplex& complex, const HomologyGroup& group)
    : complex_(&complex), group_(group) {
  const int k = group.degree;
  const std::size_t ck = complex.count(k);
  RingMatrix next = boundary_matrix(complex, k + 1, group.ring);
  const std::size_t t = group.generators.size();
  RingMatrix a(ck, t + next.cols());
  for (std::size_t j = 0; j < t; ++j) {
    Column g = to_column(group.generators[j], complex);
    for (std::size_t i = 0; i < ck; ++i) {
      if (g[i] != 0) a.set(i, j, g[i]);
    }
  }
  for (const auto& [idx, v] : next.entries()) a.set(idx.first, t + idx.second, v);
  system_.emplace(a, group.ring);
}

std::vector<Scalar> HomologyCoordinates::operator()(const Chain& c) const {
  const Ring& ring = group_.ring;
  if (!c.is_zero() && c.dim() != group_.degree) throw PreconditionFailure("chain has the wrong dimension");
  if (!is_cycle(c, ring)) throw PreconditionFailure("chain is not a cycle");
  Chain cc = c.is_zero() ? Chain(group_.degree) : c;
  auto sol = system_->solve(to_column(cc, *complex_));
  if (!sol) throw Error("cycle is not a combination of homology generators and boundaries");
  std::vector<Scalar> out(group_.generators.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Integer& order = group_.orders[i];
    out[i] = order == 0 ? (*sol)[i] : Scalar(floor_mod(numerator((*sol)[i]), order));
  }
  return out;
}

InducedMap induced_map(const ChainMorphism& phi, int k) {
  const Ring& ring = phi.ring();
  const auto& source = *phi.source();
  if (phi.top_degree() < std::min(k + 1, source.dimension())) {
    throw PreconditionFailure("morphism must be defined through degree k+1");
  }
  LawReport law = verify_chain_morphism(phi);
  if (!law.ok) {
    throw PreconditionFailure("not a chain morphism at " + format_simplex(law.violations.front().simplex));
  }
  InducedMap out;
  out.source = homology(source, k, ring);
  out.target = homology(*phi.target(), k, ring);
  HomologyCoordinates coords(*phi.target(), out.target);
  out.matrix = RingMatrix(out.target.generators.size(), out.source.generators.size());
  const auto& higher = source.simplexes(k + 1);
  for (std::size_t j = 0; j < out.source.generators.size(); ++j) {
    const Chain& g = out.source.generators[j];
    auto a = coords(phi.apply(g));
    if (!higher.empty()) {
      Chain shifted = g.plus(boundary(Chain::elementary(higher.front(), ring), ring), ring);
      if (coords(phi.apply(shifted)) != a) throw Error("induced map depends on the cycle representative");
    }
    for (std::size_t i = 0; i < a.size(); ++i) out.matrix.set(i, j, a[i]);
  }
  return out;
}

InducedMap induced_map_of_inclusion(const ComplexRef& sub, const ComplexRef& super, int k, const Ring& ring) {
  return induced_map(inclusion_morphism(sub, super, k + 1, ring), k);
}

CycleFiller::CycleFiller(const SimplicialComplex& region, int k, const Ring& ring)
    : region_(&region), k_(k), ring_(ring), system_(boundary_matrix(region, k + 1, ring), ring) {
  if (k < 0) throw PreconditionFailure("fill degree must be nonnegative");
}

std::optional<Chain> CycleFiller::fill(const Chain& c) const {
  if (!c.is_zero() && c.dim() != k_) throw PreconditionFailure("cycle has the wrong dimension");
  if (!carried_by(c, *region_)) throw PreconditionFailure("cycle is not carried by the region");
  if (!is_cycle(c, ring_)) throw PreconditionFailure("chain is not a cycle");
  if (c.is_zero()) return Chain(k_ + 1);
  auto x = system_.solve(to_column(c, *region_));
  if (!x) return std::nullopt;
  return from_column(*x, *region_, k_ + 1, ring_);
}

std::optional<Chain> fill_cycle(const Chain& c, const SimplicialComplex& region, const Ring& ring) {
  return CycleFiller(region, c.dim(), ring).fill(c);
}

TrivialityReport is_trivial_induced(const SimplicialComplex& v, const SimplicialComplex& u, int k, const Ring& ring) {
  if (!v.is_subcomplex_of(u)) throw PreconditionFailure("V is not a subcomplex of U");
  TrivialityReport report;
  report.degree = k;
  HomologyGroup h = homology(v, k, ring);
  if (h.is_trivial()) return report;
  CycleFiller filler(u, k, ring);
  for (const auto& g : h.generators) {
    auto x = filler.fill(g);
    if (!x) {
      report.trivial = false;
      report.witness = g;
      return report;
    }
    report.generators.push_back(g);
    report.fillings.push_back(std::move(*x));
  }
  return report;
}

}  // namespace chaincert
