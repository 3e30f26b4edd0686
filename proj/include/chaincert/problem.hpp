#pragma once

#include "chaincert/generators.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace chaincert {

using Json = nlohmann::json;

struct NamedMap {
  std::string source, target;
  SimplicialMap map;
};

struct NamedCover {
  std::string complex;
  Cover cover;
};

struct NamedTower {
  std::string complex;
  std::vector<std::string> levels;  // names of entries in ProblemFile::covers
  FiltrationTower tower;
};

struct NamedMorphism {
  std::string source, target;
  ChainMorphism morphism;
};

struct NamedHomotopy {
  std::string source, target;
  ChainHomotopy homotopy;
};

/// Everything one input document declares. Cross-references are by name and
/// are resolved while parsing, so a ProblemFile is always consistent.
///
/// Document layout (JSON):
///   ring          "Z" | "Q" | "Zmod:<m>"
///   complexes     name -> {vertices: [v...], simplexes: [[v...]...]}
///   maps          name -> {source, target, vertices: {v: w}}
///   covers        name -> {complex, members: {member: [v...]}}
///   towers        name -> {complex, levels: [cover...], witnesses: [{V: W}...],
///                          pairs: [{V: W}...]}
///   morphisms     name -> {source, target, degree_cap,
///                          assignment: [{simplex: [v...], chain: [[coef, [v...]]...]}]}
///   homotopies    same shape as morphisms, chains one degree up
///   command_args  command -> free-form object of parameters
///
/// Simplexes may be listed in any vertex order; the orientation of a chain
/// term is that of the listed order relative to sorted order.
struct ProblemFile {
  Ring ring = Ring::integers();
  std::map<std::string, ComplexRef> complexes;
  std::map<std::string, NamedMap> maps;
  std::map<std::string, NamedCover> covers;
  std::map<std::string, NamedTower> towers;
  std::map<std::string, NamedMorphism> morphisms;
  std::map<std::string, NamedHomotopy> homotopies;
  Json command_args = Json::object();

  const ComplexRef& complex(const std::string& name) const;
  const NamedMap& map(const std::string& name) const;
  const NamedCover& cover(const std::string& name) const;
  const NamedTower& tower(const std::string& name) const;
  const NamedMorphism& morphism(const std::string& name) const;
  const NamedHomotopy& homotopy(const std::string& name) const;
  /// Name under which an equal complex is stored, if any.
  std::optional<std::string> name_of(const ComplexRef& c) const;
};

/// Throws InputError naming the line and column of a syntax error, or the
/// field path of a semantic one ("maps.f.vertices.x0: unknown vertex ..."). A
/// ring override replaces the declared ring before any coefficient is read.
ProblemFile parse_problem(std::string_view text, const std::optional<Ring>& ring_override = std::nullopt);
ProblemFile load_problem(const std::string& path, const std::optional<Ring>& ring_override = std::nullopt);

Json to_json(const ProblemFile& p);
/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string serialize(const ProblemFile& p);

// Building blocks shared with certificates.
Json simplex_json(const Simplex& s);
Json vertex_set_json(const VertexSet& s);
Json complex_json(const SimplicialComplex& c);
Json chain_json(const Chain& c);
Json assignment_json(const ChainAssignment& a, const std::string& source, const std::string& target);

Simplex parse_simplex(const Json& j, const std::string& path);
std::vector<Vertex> parse_vertex_list(const Json& j, const std::string& path);
ComplexRef parse_complex(const Json& j, const std::string& path);
/// Chain of dimension dim; every term must have dim + 1 vertices.
Chain parse_chain(const Json& j, int dim, const Ring& ring, const std::string& path);
std::map<Simplex, Chain> parse_assignment(const Json& j, int shift, const Ring& ring, const std::string& path);

/// Reads a required member of an object, or throws InputError at path.key.
const Json& field(const Json& object, const std::string& key, const std::string& path);
std::string string_field(const Json& object, const std::string& key, const std::string& path);
int int_field(const Json& object, const std::string& key, const std::string& path);

/// Problem file holding a generated instance: complexes X, Y, K, L, map f,
/// tower T with covers T0.., morphism phi_l and, for prism, phi and the
/// partial lift lift_l / lift_phi_l. command_args prefilled for
/// extend-realization, check-uvn and (prism) lift.
ProblemFile problem_from_instance(const GeneratedInstance& inst);

}  // namespace chaincert
