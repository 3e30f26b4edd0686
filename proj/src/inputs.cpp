#include "inputs.hpp"

namespace chaincert::detail {

namespace {

template <class F>
decltype(auto) named(const Args& a, const std::string& key, F&& get) {
  const std::string name = a.name(key);
  try {
    return get(name);
  } catch (const InputError& e) {
    throw InputError(a.path() + "." + key + ": " + e.what());
  }
}

void require_input(bool condition, const Args& a, const std::string& message) {
  if (!condition) throw InputError(a.path() + ": " + message);
}

}  // namespace

const ComplexRef& Args::complex(const std::string& key) const {
  return named(*this, key, [&](const std::string& n) -> const ComplexRef& { return problem_.complex(n); });
}

const SimplicialMap& Args::map(const std::string& key) const {
  return named(*this, key, [&](const std::string& n) -> const SimplicialMap& { return problem_.map(n).map; });
}

const NamedTower& Args::tower(const std::string& key) const {
  return named(*this, key, [&](const std::string& n) -> const NamedTower& { return problem_.tower(n); });
}

const NamedCover& Args::cover(const std::string& key) const {
  return named(*this, key, [&](const std::string& n) -> const NamedCover& { return problem_.cover(n); });
}

const ChainMorphism& Args::morphism(const std::string& key) const {
  return named(*this, key,
               [&](const std::string& n) -> const ChainMorphism& { return problem_.morphism(n).morphism; });
}

const ChainHomotopy& Args::homotopy(const std::string& key) const {
  return named(*this, key,
               [&](const std::string& n) -> const ChainHomotopy& { return problem_.homotopy(n).homotopy; });
}

RealizationProblem realization_inputs(const Args& a) {
  const ComplexRef& k = a.complex("k");
  const ComplexRef& l = a.complex("l");
  const ChainMorphism& phi_l = a.morphism("phi_l");
  const SimplicialMap& f = a.map("map");
  require_input(*phi_l.source() == *l, a, "phi_l is not defined on l");
  require_input(*phi_l.target() == *f.source(), a, "phi_l does not land in the source of the map");
  return {k, l, phi_l, f, a.tower("tower").tower, a.problem().ring, {}};
}

HomotopyProblem homotopy_inputs(const Args& a) {
  const ChainMorphism& phi = a.morphism("phi");
  const ChainMorphism& psi = a.morphism("psi");
  ComplexRef sub = a.has("a") ? a.complex("a") : share(SimplicialComplex());
  std::optional<ChainHomotopy> d_a;
  if (a.has("d_a")) d_a = a.homotopy("d_a");
  return {phi, psi, sub, d_a, a.map("map"), a.tower("tower").tower, a.problem().ring};
}

DugundjiProblem dugundji_inputs(const Args& a) {
  auto list = a.vertices("a");
  int radius = a.has("radius") ? a.integer("radius") : 1;
  return {a.complex("m"),
          VertexSet(list.begin(), list.end()),
          a.morphism("phi"),
          a.map("map"),
          a.tower("tower").tower,
          a.problem().ring,
          radius};
}

LiftInputs lift_inputs(const Args& a) {
  const ComplexRef& l = a.complex("l");
  const ChainMorphism& phi_l = a.morphism("phi_l");
  const SimplicialMap& f = a.map("map");
  require_input(*phi_l.source() == *l, a, "phi_l is not defined on l");
  require_input(*phi_l.target() == *f.source(), a, "phi_l does not land in the source of the map");
  const ChainMorphism& phi = a.morphism("phi");
  require_input(*phi.target() == *f.target(), a, "phi does not land in the target of the map");
  return {a.complex("k"), l, phi_l, phi, f, a.tower("tower").tower};
}

NerveInputs nerve_inputs(const Args& a) {
  const ComplexRef& y = a.complex("y");
  const NamedCover& cover = a.cover("cover");
  require_input(*cover.cover.complex() == *y, a, "the cover is not a cover of y");
  return {y, cover.cover, a.map("map"), a.tower("tower").tower};
}

UvnInputs uvn_map_inputs(const Args& a, bool identity) {
  const NamedTower& tower = a.tower("tower");
  if (identity) {
    const ComplexRef& x = a.has("complex") ? a.complex("complex") : tower.tower.complex();
    return {SimplicialMap::identity(x), tower.tower};
  }
  return {a.map("map"), tower.tower};
}

}  // namespace chaincert::detail
