#include "chaincert/chain.hpp"

#include "chaincert/errors.hpp"

#include <algorithm>

namespace chaincert {

Chain Chain::oriented(const std::vector<Vertex>& ordered, const Scalar& coefficient, const Ring& ring) {
  auto [sign, s] = orient(ordered);
  Chain c(dimension_of(s));
  c.add(s, Scalar(sign) * coefficient, ring);
  return c;
}

Scalar Chain::coefficient(const Simplex& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Chain::add(const Simplex& s, const Scalar& coefficient, const Ring& ring) {
  if (dimension_of(s) != dim_) {
    throw DimensionMismatch("adding " + format_simplex(s) + " to a " + std::to_string(dim_) + "-chain");
  }
  Scalar c = ring.normalize(coefficient);
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(s, c);
  if (inserted) return;
  it->second = ring.add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

void Chain::add(const Chain& other, const Scalar& factor, const Ring& ring) {
  if (other.is_zero()) return;
  if (other.dim_ != dim_) throw DimensionMismatch("adding chains of different dimensions");
  for (const auto& [s, g] : other.terms_) add(s, g * factor, ring);
}

Chain Chain::plus(const Chain& other, const Ring& ring) const {
  Chain out = *this;
  out.add(other, Scalar(1), ring);
  return out;
}

Chain Chain::minus(const Chain& other, const Ring& ring) const {
  Chain out = *this;
  out.add(other, Scalar(-1), ring);
  return out;
}

Chain Chain::scaled(const Scalar& factor, const Ring& ring) const {
  Chain out(dim_);
  out.add(*this, factor, ring);
  return out;
}

std::string Chain::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, g] : terms_) {
    std::string coef = Ring::format(g);
    if (first) {
      if (coef == "-1") {
        out += "-";
      } else if (coef != "1") {
        out += coef + "*";
      }
    } else if (g < 0) {
      out += " - ";
      std::string mag = Ring::format(-g);
      if (mag != "1") out += mag + "*";
    } else {
      out += " + ";
      if (coef != "1") out += coef + "*";
    }
    out += format_simplex(s);
    first = false;
  }
  return out;
}

Chain boundary(const Chain& c, const Ring& ring) {
  Chain out(c.dim() - 1);
  if (c.dim() <= 0) return out;
  for (const auto& [s, g] : c.terms()) {
    auto faces = boundary_faces(s);
    for (std::size_t i = 0; i < faces.size(); ++i) {
      out.add(faces[i], i % 2 == 0 ? g : Scalar(-g), ring);
    }
  }
  return out;
}

Scalar augmentation(const Chain& c, const Ring& ring) {
  if (c.dim() != 0) throw PreconditionFailure("augmentation is defined on 0-chains only");
  Scalar sum = 0;
  for (const auto& [s, g] : c.terms()) sum += g;
  return ring.normalize(sum);
}

Carrier carrier(const Chain& c) {
  Carrier out;
  for (const auto& [s, g] : c.terms()) {
    out.simplexes.insert(s);
    out.vertices.insert(s.begin(), s.end());
  }
  return out;
}

VertexSet carrier_vertices(const Chain& c) {
  VertexSet out;
  for (const auto& [s, g] : c.terms()) out.insert(s.begin(), s.end());
  return out;
}

bool carried_by(const Chain& c, const SimplicialComplex& complex) {
  for (const auto& [s, g] : c.terms()) {
    if (!complex.contains(s)) return false;
  }
  return true;
}

ChainAssignment::ChainAssignment(ComplexRef source, ComplexRef target, int degree_cap, Ring ring,
                                 std::map<Simplex, Chain> assignment, int shift)
    : source_(std::move(source)),
      target_(std::move(target)),
      degree_cap_(degree_cap),
      ring_(std::move(ring)),
      assignment_(std::move(assignment)),
      shift_(shift) {
  if (degree_cap_ < 0) throw InputError("degree cap must be nonnegative");
  for (const auto& [s, c] : assignment_) {
    if (!source_->contains(s)) throw InputError("assignment key " + format_simplex(s) + " is not a source simplex");
    if (dimension_of(s) > degree_cap_) {
      throw InputError("assignment key " + format_simplex(s) + " exceeds the degree cap");
    }
    if (!c.is_zero() && c.dim() != dimension_of(s) + shift_) {
      throw InputError("chain assigned to " + format_simplex(s) + " has dimension " + std::to_string(c.dim()));
    }
    if (!carried_by(c, *target_)) {
      throw InputError("chain assigned to " + format_simplex(s) + " leaves the target complex");
    }
  }
  for (int k = 0; k <= top_degree(); ++k) {
    for (const auto& s : source_->simplexes(k)) {
      auto it = assignment_.find(s);
      if (it == assignment_.end()) throw InputError("no chain assigned to " + format_simplex(s));
      // Normalize the dimension tag of zero chains.
      if (it->second.is_zero() && it->second.dim() != k + shift_) it->second = Chain(k + shift_);
    }
  }
}

const Chain& ChainAssignment::operator()(const Simplex& s) const {
  auto it = assignment_.find(s);
  if (it == assignment_.end()) throw PreconditionFailure("assignment undefined on " + format_simplex(s));
  return it->second;
}

Chain ChainAssignment::apply(const Chain& c) const {
  Chain out(c.dim() + shift_);
  if (c.dim() < 0) return out;
  for (const auto& [s, g] : c.terms()) out.add((*this)(s), g, ring_);
  return out;
}

ChainHomotopy ChainHomotopy::zero(ComplexRef source, ComplexRef target, int degree_cap, Ring ring) {
  std::map<Simplex, Chain> a;
  for (int k = 0; k <= std::min(degree_cap, source->dimension()); ++k) {
    for (const auto& s : source->simplexes(k)) a.emplace(s, Chain(k + 1));
  }
  return ChainHomotopy(std::move(source), std::move(target), degree_cap, std::move(ring), std::move(a));
}

LawReport verify_chain_morphism(const ChainMorphism& phi) {
  LawReport report;
  const Ring& ring = phi.ring();
  for (int k = 0; k <= phi.top_degree(); ++k) {
    for (const auto& s : phi.source()->simplexes(k)) {
      const Chain& image = phi(s);
      if (k == 0) {
        if (augmentation(image, ring) != ring.one()) {
          report.ok = false;
          report.violations.push_back({s, "augmentation of image is not e"});
        }
        continue;
      }
      Chain lhs = boundary(image, ring);
      Chain rhs = phi.apply(boundary(Chain::elementary(s, ring), ring));
      if (!(lhs == rhs)) {
        report.ok = false;
        report.violations.push_back({s, "boundary of image " + lhs.to_string() + " differs from image of boundary " +
                                            rhs.to_string()});
      }
    }
  }
  return report;
}

bool is_correct(const ChainMorphism& phi) {
  for (const auto& v : phi.source()->simplexes(0)) {
    const Chain& c = phi(v);
    if (c.terms().size() != 1) return false;
    if (c.terms().begin()->second != phi.ring().one()) return false;
  }
  return true;
}

namespace {

void require_same_ends(const ChainAssignment& a, const ChainAssignment& b) {
  if (!(*a.source() == *b.source()) || !(*a.target() == *b.target())) {
    throw PreconditionFailure("morphisms do not share source and target");
  }
}

void require_cover_on(const Cover& cover, const SimplicialComplex& complex) {
  if (!(cover.complex()->vertices() == complex.vertices())) {
    throw PreconditionFailure("cover does not live on the target complex");
  }
}

}  // namespace

CloseReport is_close(const ChainMorphism& phi, const ChainMorphism& psi, const Cover& cover) {
  require_same_ends(phi, psi);
  require_cover_on(cover, *phi.target());
  CloseReport report;
  const int cap = std::min(phi.top_degree(), psi.top_degree());
  std::map<Simplex, VertexSet> carriers;
  for (int k = 0; k <= cap; ++k) {
    for (const auto& s : phi.source()->simplexes(k)) {
      VertexSet c = carrier_vertices(phi(s));
      VertexSet d = carrier_vertices(psi(s));
      c.insert(d.begin(), d.end());
      carriers.emplace(s, std::move(c));
    }
  }
  for (int k = 0; k <= cap; ++k) {
    for (const auto& s : phi.source()->simplexes(k)) {
      VertexSet all;
      for (const auto& f : faces_of(s)) {
        const auto& c = carriers.at(f);
        all.insert(c.begin(), c.end());
      }
      const CoverMember* m = cover.first_containing(all);
      if (!m) {
        report.ok = false;
        report.counterexample = s;
        report.counterexample_carrier = std::move(all);
        report.assignment.clear();
        return report;
      }
      report.assignment.emplace(s, m->name);
    }
  }
  report.ok = true;
  return report;
}

CloseReport is_small(const ChainMorphism& phi, const Cover& cover) { return is_close(phi, phi, cover); }

HomotopyReport verify_homotopy(const ChainHomotopy& d, const ChainMorphism& phi, const ChainMorphism& psi,
                               const Cover* cover) {
  require_same_ends(d, phi);
  require_same_ends(phi, psi);
  HomotopyReport report;
  const Ring& ring = d.ring();
  const int top = d.top_degree();
  if (phi.top_degree() < top || psi.top_degree() < top) {
    throw PreconditionFailure("morphisms are not defined up to the homotopy's degree");
  }
  for (int k = 0; k <= top; ++k) {
    for (const auto& s : d.source()->simplexes(k)) {
      Chain lhs = boundary(d(s), ring);
      Chain rhs = phi(s).minus(psi(s), ring);
      if (k > 0) rhs = rhs.minus(d.apply(boundary(Chain::elementary(s, ring), ring)), ring);
      if (!(lhs == rhs)) {
        report.ok = false;
        report.violations.push_back({s, "boundary of D is " + lhs.to_string() + ", expected " + rhs.to_string()});
      }
    }
  }
  if (cover) {
    require_cover_on(*cover, *d.target());
    CloseReport small;
    small.ok = true;
    for (int k = 0; k <= top && small.ok; ++k) {
      for (const auto& s : d.source()->simplexes(k)) {
        VertexSet all;
        for (const auto& f : faces_of(s)) {
          VertexSet c = carrier_vertices(d(f));
          all.insert(c.begin(), c.end());
        }
        for (const auto& v : s) {
          VertexSet a = carrier_vertices(phi({v}));
          VertexSet b = carrier_vertices(psi({v}));
          all.insert(a.begin(), a.end());
          all.insert(b.begin(), b.end());
        }
        const CoverMember* m = cover->first_containing(all);
        if (!m) {
          small.ok = false;
          small.counterexample = s;
          small.counterexample_carrier = std::move(all);
          small.assignment.clear();
          break;
        }
        small.assignment.emplace(s, m->name);
      }
    }
    if (!small.ok) report.ok = false;
    report.smallness = std::move(small);
  }
  return report;
}

ChainMorphism induced_morphism(const SimplicialMap& f, int degree_cap, const Ring& ring) {
  std::map<Simplex, Chain> a;
  const auto& source = *f.source();
  for (int k = 0; k <= std::min(degree_cap, source.dimension()); ++k) {
    for (const auto& s : source.simplexes(k)) {
      std::vector<Vertex> images;
      for (const auto& v : s) images.push_back(f(v));
      std::vector<Vertex> sorted = images;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        a.emplace(s, Chain(k));
      } else {
        a.emplace(s, Chain::oriented(images, Scalar(1), ring));
      }
    }
  }
  return ChainMorphism(f.source(), f.target(), degree_cap, ring, std::move(a));
}

ChainMorphism identity_morphism(const ComplexRef& complex, int degree_cap, const Ring& ring) {
  return inclusion_morphism(complex, complex, degree_cap, ring);
}

ChainMorphism inclusion_morphism(const ComplexRef& sub, const ComplexRef& super, int degree_cap, const Ring& ring) {
  if (!sub->is_subcomplex_of(*super)) throw PreconditionFailure("not a subcomplex");
  std::map<Simplex, Chain> a;
  for (int k = 0; k <= std::min(degree_cap, sub->dimension()); ++k) {
    for (const auto& s : sub->simplexes(k)) a.emplace(s, Chain::elementary(s, ring));
  }
  return ChainMorphism(sub, super, degree_cap, ring, std::move(a));
}

ChainMorphism compose(const ChainMorphism& g, const ChainMorphism& f) {
  if (!(*f.target() == *g.source())) throw PreconditionFailure("morphisms are not composable");
  if (!(f.ring() == g.ring())) throw PreconditionFailure("morphisms use different rings");
  const int cap = std::min(f.degree_cap(), g.degree_cap());
  std::map<Simplex, Chain> a;
  for (int k = 0; k <= std::min(cap, f.source()->dimension()); ++k) {
    for (const auto& s : f.source()->simplexes(k)) a.emplace(s, g.apply(f(s)));
  }
  return ChainMorphism(f.source(), g.target(), cap, f.ring(), std::move(a));
}

namespace {

std::map<Simplex, Chain> restricted(const ChainAssignment& a, const ComplexRef& sub) {
  if (!sub->is_subcomplex_of(*a.source())) throw PreconditionFailure("restriction to a non-subcomplex");
  std::map<Simplex, Chain> out;
  for (int k = 0; k <= std::min(a.degree_cap(), sub->dimension()); ++k) {
    for (const auto& s : sub->simplexes(k)) out.emplace(s, a(s));
  }
  return out;
}

}  // namespace

ChainMorphism restrict_to(const ChainMorphism& phi, const ComplexRef& sub) {
  return ChainMorphism(sub, phi.target(), phi.degree_cap(), phi.ring(), restricted(phi, sub));
}

ChainHomotopy restrict_to(const ChainHomotopy& d, const ComplexRef& sub) {
  return ChainHomotopy(sub, d.target(), d.degree_cap(), d.ring(), restricted(d, sub));
}

}  // namespace chaincert
