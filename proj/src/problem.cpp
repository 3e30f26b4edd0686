#include "chaincert/problem.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace chaincert {

namespace {

const char* const kTopLevel[] = {"ring",   "complexes",  "maps",        "covers", "towers",
                                 "morphisms", "homotopies", "command_args"};

// Runs body, prefixing any InputError or PreconditionFailure with path.
template <class F>
auto at(const std::string& path, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const InputError& e) {
    const std::string what = e.what();
    if (what.rfind(path, 0) == 0) throw;
    throw InputError(path + ": " + what);
  } catch (const PreconditionFailure& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& object_at(const Json& j, const std::string& path) {
  if (!j.is_object()) throw InputError(path + ": expected an object");
  return j;
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path + ": expected an array");
  return j;
}

std::string string_at(const Json& j, const std::string& path) {
  if (!j.is_string()) throw InputError(path + ": expected a string");
  return j.get<std::string>();
}

const Json& optional_object(const Json& doc, const std::string& key) {
  static const Json empty = Json::object();
  if (!doc.contains(key)) return empty;
  return object_at(doc.at(key), key);
}

template <class M>
const typename M::mapped_type& lookup(const M& m, const std::string& name, const char* what) {
  auto it = m.find(name);
  if (it == m.end()) throw InputError(std::string("unknown ") + what + " '" + name + "'");
  return it->second;
}

std::map<std::string, std::string> parse_name_map(const Json& j, const std::string& path) {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : object_at(j, path).items()) out[k] = string_at(v, join(path, k));
  return out;
}

Json name_map_json(const std::map<std::string, std::string>& m) {
  Json j = Json::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

void check_position(const std::string& text, std::size_t byte, std::size_t& line, std::size_t& column) {
  line = 1;
  column = 1;
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

}  // namespace

const Json& field(const Json& object, const std::string& key, const std::string& path) {
  object_at(object, path.empty() ? "document" : path);
  if (!object.contains(key)) throw InputError(join(path, key) + ": missing");
  return object.at(key);
}

std::string string_field(const Json& object, const std::string& key, const std::string& path) {
  return string_at(field(object, key, path), join(path, key));
}

int int_field(const Json& object, const std::string& key, const std::string& path) {
  const Json& j = field(object, key, path);
  if (!j.is_number_integer()) throw InputError(join(path, key) + ": expected an integer");
  return j.get<int>();
}

Json simplex_json(const Simplex& s) { return Json(s); }

Json vertex_set_json(const VertexSet& s) { return Json(std::vector<Vertex>(s.begin(), s.end())); }

Json complex_json(const SimplicialComplex& c) {
  Json simplexes = Json::array();
  for (const auto& s : c.maximal_simplexes()) simplexes.push_back(simplex_json(s));
  return {{"vertices", c.vertices()}, {"simplexes", simplexes}};
}

Json chain_json(const Chain& c) {
  Json terms = Json::array();
  for (const auto& [s, coef] : c.terms()) terms.push_back(Json::array({Ring::format(coef), simplex_json(s)}));
  return terms;
}

Json assignment_json(const ChainAssignment& a, const std::string& source, const std::string& target) {
  Json entries = Json::array();
  for (const auto& s : a.source()->all_simplexes()) {
    if (!a.defined_on(s)) continue;
    entries.push_back({{"simplex", simplex_json(s)}, {"chain", chain_json(a(s))}});
  }
  return {{"source", source}, {"target", target}, {"degree_cap", a.degree_cap()}, {"assignment", entries}};
}

std::vector<Vertex> parse_vertex_list(const Json& j, const std::string& path) {
  std::vector<Vertex> out;
  const Json& arr = array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(string_at(arr[i], index(path, i)));
  return out;
}

Simplex parse_simplex(const Json& j, const std::string& path) {
  auto vertices = parse_vertex_list(j, path);
  if (vertices.empty()) throw InputError(path + ": empty simplex");
  return at(path, [&] { return orient(vertices).second; });
}

ComplexRef parse_complex(const Json& j, const std::string& path) {
  object_at(j, path);
  for (const auto& [k, v] : j.items()) {
    if (k != "vertices" && k != "simplexes") throw InputError(join(path, k) + ": unknown key");
  }
  std::vector<Vertex> vertices;
  if (j.contains("vertices")) vertices = parse_vertex_list(j.at("vertices"), join(path, "vertices"));
  std::vector<std::vector<Vertex>> simplexes;
  if (j.contains("simplexes")) {
    const std::string sp = join(path, "simplexes");
    const Json& arr = array_at(j.at("simplexes"), sp);
    for (std::size_t i = 0; i < arr.size(); ++i) simplexes.push_back(parse_vertex_list(arr[i], index(sp, i)));
  }
  // Isolated declared vertices become 0-simplexes.
  for (const auto& v : vertices) simplexes.push_back({v});
  return at(path, [&] { return share(validate_complex(vertices, simplexes)); });
}

Chain parse_chain(const Json& j, int dim, const Ring& ring, const std::string& path) {
  Chain c(dim);
  const Json& arr = array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string tp = index(path, i);
    const Json& term = arr[i];
    if (!term.is_array() || term.size() != 2) throw InputError(tp + ": expected [coefficient, [vertices...]]");
    Scalar coef;
    if (term[0].is_string()) {
      coef = at(tp, [&] { return ring.parse_element(term[0].get<std::string>()); });
    } else if (term[0].is_number_integer()) {
      coef = ring.normalize(Scalar(term[0].get<long long>()));
    } else {
      throw InputError(tp + ": coefficient must be a decimal string");
    }
    auto vertices = parse_vertex_list(term[1], tp + "[1]");
    if (static_cast<int>(vertices.size()) != dim + 1) {
      throw InputError(tp + ": expected a " + std::to_string(dim) + "-simplex");
    }
    at(tp, [&] { c.add(Chain::oriented(vertices, coef, ring), Scalar(1), ring); });
  }
  return c;
}

std::map<Simplex, Chain> parse_assignment(const Json& j, int shift, const Ring& ring, const std::string& path) {
  std::map<Simplex, Chain> out;
  const Json& arr = array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string ep = index(path, i);
    const Json& entry = object_at(arr[i], ep);
    auto ordered = parse_vertex_list(field(entry, "simplex", ep), join(ep, "simplex"));
    if (ordered.empty()) throw InputError(join(ep, "simplex") + ": empty simplex");
    auto [sign, s] = at(join(ep, "simplex"), [&] { return orient(ordered); });
    Chain c = parse_chain(field(entry, "chain", ep), dimension_of(s) + shift, ring, join(ep, "chain"));
    if (sign < 0) c = c.scaled(Scalar(-1), ring);
    if (!out.emplace(s, c).second) throw InputError(join(ep, "simplex") + ": assigned twice");
  }
  return out;
}

const ComplexRef& ProblemFile::complex(const std::string& name) const { return lookup(complexes, name, "complex"); }
const NamedMap& ProblemFile::map(const std::string& name) const { return lookup(maps, name, "map"); }
const NamedCover& ProblemFile::cover(const std::string& name) const { return lookup(covers, name, "cover"); }
const NamedTower& ProblemFile::tower(const std::string& name) const { return lookup(towers, name, "tower"); }
const NamedMorphism& ProblemFile::morphism(const std::string& name) const {
  return lookup(morphisms, name, "morphism");
}
const NamedHomotopy& ProblemFile::homotopy(const std::string& name) const {
  return lookup(homotopies, name, "homotopy");
}

std::optional<std::string> ProblemFile::name_of(const ComplexRef& c) const {
  for (const auto& [name, ref] : complexes) {
    if (ref == c) return name;
  }
  for (const auto& [name, ref] : complexes) {
    if (*ref == *c) return name;
  }
  return std::nullopt;
}

ProblemFile parse_problem(std::string_view text, const std::optional<Ring>& ring_override) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 0, column = 0;
    check_position(std::string(text), e.byte, line, column);
    std::string what = e.what();
    auto colon = what.rfind(": ");
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                     (colon == std::string::npos ? what : what.substr(colon + 2)));
  }
  object_at(doc, "document");
  for (const auto& [k, v] : doc.items()) {
    if (std::find(std::begin(kTopLevel), std::end(kTopLevel), k) == std::end(kTopLevel)) {
      throw InputError(k + ": unknown top-level key");
    }
  }

  ProblemFile p;
  if (ring_override) {
    p.ring = *ring_override;
  } else {
    p.ring = at("ring", [&] { return Ring::parse(string_field(doc, "ring", "")); });
  }

  for (const auto& [name, j] : optional_object(doc, "complexes").items()) {
    p.complexes[name] = parse_complex(j, join("complexes", name));
  }

  for (const auto& [name, j] : optional_object(doc, "maps").items()) {
    const std::string path = join("maps", name);
    object_at(j, path);
    auto source = string_field(j, "source", path), target = string_field(j, "target", path);
    auto assignment = parse_name_map(field(j, "vertices", path), join(path, "vertices"));
    std::map<Vertex, Vertex> vertices(assignment.begin(), assignment.end());
    SimplicialMap f = at(path, [&] {
      return SimplicialMap(at(join(path, "source"), [&] { return p.complex(source); }),
                           at(join(path, "target"), [&] { return p.complex(target); }), vertices);
    });
    p.maps.emplace(name, NamedMap{source, target, std::move(f)});
  }

  for (const auto& [name, j] : optional_object(doc, "covers").items()) {
    const std::string path = join("covers", name);
    object_at(j, path);
    auto complex = string_field(j, "complex", path);
    std::vector<CoverMember> members;
    const std::string mp = join(path, "members");
    for (const auto& [m, verts] : object_at(field(j, "members", path), mp).items()) {
      auto list = parse_vertex_list(verts, join(mp, m));
      members.push_back({m, VertexSet(list.begin(), list.end())});
    }
    Cover cover = at(path, [&] {
      return Cover(at(join(path, "complex"), [&] { return p.complex(complex); }), members);
    });
    p.covers.emplace(name, NamedCover{complex, std::move(cover)});
  }

  for (const auto& [name, j] : optional_object(doc, "towers").items()) {
    const std::string path = join("towers", name);
    object_at(j, path);
    auto complex = string_field(j, "complex", path);
    const ComplexRef& ref = at(join(path, "complex"), [&] { return p.complex(complex); });
    auto level_names = parse_vertex_list(field(j, "levels", path), join(path, "levels"));
    std::vector<Cover> levels;
    for (std::size_t i = 0; i < level_names.size(); ++i) {
      const std::string lp = index(join(path, "levels"), i);
      const NamedCover& c = at(lp, [&] { return p.cover(level_names[i]); });
      if (c.complex != complex) throw InputError(lp + ": cover is on '" + c.complex + "', not '" + complex + "'");
      levels.push_back(c.cover);
    }
    auto read_maps = [&](const std::string& key) {
      std::vector<std::map<std::string, std::string>> out;
      const std::string kp = join(path, key);
      const Json& arr = array_at(field(j, key, path), kp);
      for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(parse_name_map(arr[i], index(kp, i)));
      return out;
    };
    auto witnesses = read_maps("witnesses");
    auto pairs = read_maps("pairs");
    FiltrationTower tower = at(path, [&] { return FiltrationTower(ref, levels, witnesses, pairs); });
    p.towers.emplace(name, NamedTower{complex, level_names, std::move(tower)});
  }

  auto read_assignment = [&](const std::string& section, int shift, auto&& store) {
    for (const auto& [name, j] : optional_object(doc, section).items()) {
      const std::string path = join(section, name);
      object_at(j, path);
      auto source = string_field(j, "source", path), target = string_field(j, "target", path);
      const ComplexRef& s = at(join(path, "source"), [&] { return p.complex(source); });
      const ComplexRef& t = at(join(path, "target"), [&] { return p.complex(target); });
      const int cap = int_field(j, "degree_cap", path);
      auto assignment = parse_assignment(field(j, "assignment", path), shift, p.ring, join(path, "assignment"));
      at(path, [&] { store(name, source, target, s, t, cap, std::move(assignment)); });
    }
  };
  read_assignment("morphisms", 0, [&](const std::string& name, const std::string& source, const std::string& target,
                                      const ComplexRef& s, const ComplexRef& t, int cap, auto assignment) {
    p.morphisms.emplace(name, NamedMorphism{source, target, ChainMorphism(s, t, cap, p.ring, std::move(assignment))});
  });
  read_assignment("homotopies", 1, [&](const std::string& name, const std::string& source,
                                       const std::string& target, const ComplexRef& s, const ComplexRef& t, int cap,
                                       auto assignment) {
    p.homotopies.emplace(name,
                         NamedHomotopy{source, target, ChainHomotopy(s, t, cap, p.ring, std::move(assignment))});
  });

  if (doc.contains("command_args")) {
    for (const auto& [command, args] : object_at(doc.at("command_args"), "command_args").items()) {
      object_at(args, join("command_args", command));
    }
    p.command_args = doc.at("command_args");
  }
  return p;
}

ProblemFile load_problem(const std::string& path, const std::optional<Ring>& ring_override) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_problem(text.str(), ring_override);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json to_json(const ProblemFile& p) {
  Json doc = Json::object();
  doc["ring"] = p.ring.to_string();
  Json complexes = Json::object(), maps = Json::object(), covers = Json::object(), towers = Json::object(),
       morphisms = Json::object(), homotopies = Json::object();
  for (const auto& [name, c] : p.complexes) complexes[name] = complex_json(*c);
  for (const auto& [name, m] : p.maps) {
    Json vertices = Json::object();
    for (const auto& [v, w] : m.map.assignment()) vertices[v] = w;
    maps[name] = {{"source", m.source}, {"target", m.target}, {"vertices", vertices}};
  }
  for (const auto& [name, c] : p.covers) {
    Json members = Json::object();
    for (const auto& m : c.cover.members()) members[m.name] = vertex_set_json(m.vertices);
    covers[name] = {{"complex", c.complex}, {"members", members}};
  }
  for (const auto& [name, t] : p.towers) {
    Json witnesses = Json::array(), pairs = Json::array();
    for (const auto& w : t.tower.witnesses()) witnesses.push_back(name_map_json(w));
    for (const auto& q : t.tower.pairs()) pairs.push_back(name_map_json(q));
    towers[name] = {{"complex", t.complex}, {"levels", t.levels}, {"witnesses", witnesses}, {"pairs", pairs}};
  }
  for (const auto& [name, m] : p.morphisms) morphisms[name] = assignment_json(m.morphism, m.source, m.target);
  for (const auto& [name, h] : p.homotopies) homotopies[name] = assignment_json(h.homotopy, h.source, h.target);
  doc["complexes"] = complexes;
  doc["maps"] = maps;
  doc["covers"] = covers;
  doc["towers"] = towers;
  doc["morphisms"] = morphisms;
  doc["homotopies"] = homotopies;
  doc["command_args"] = p.command_args;
  return doc;
}

std::string serialize(const ProblemFile& p) { return to_json(p).dump(2) + "\n"; }

ProblemFile problem_from_instance(const GeneratedInstance& inst) {
  ProblemFile p;
  p.ring = inst.ring;
  p.complexes["X"] = inst.x;
  p.complexes["Y"] = inst.y;
  p.complexes["K"] = inst.problem.k;
  p.complexes["L"] = inst.problem.l;
  p.maps.emplace("f", NamedMap{"X", "Y", inst.f});

  NamedTower tower{"Y", {}, inst.tower};
  for (std::size_t k = 0; k < inst.tower.levels().size(); ++k) {
    const std::string name = "T" + std::to_string(k);
    tower.levels.push_back(name);
    p.covers.emplace(name, NamedCover{"Y", inst.tower.level(k)});
  }
  p.towers.emplace("T", std::move(tower));
  p.morphisms.emplace("phi_l", NamedMorphism{"L", "X", inst.problem.phi_l});

  Json args = Json::object();
  args["extend-realization"] = {{"k", "K"}, {"l", "L"}, {"phi_l", "phi_l"}, {"map", "f"}, {"tower", "T"}};
  args["check-uvn"] = {{"map", "f"}, {"tower", "T"}};
  args["homology"] = {{"complex", "X"}};
  if (inst.target_morphism && inst.lift_l && inst.lift_phi_l) {
    p.complexes["lift_l"] = inst.lift_l;
    p.morphisms.emplace("phi", NamedMorphism{"K", "Y", *inst.target_morphism});
    p.morphisms.emplace("lift_phi_l", NamedMorphism{"lift_l", "X", *inst.lift_phi_l});
    args["lift"] = {{"k", "K"}, {"l", "lift_l"}, {"phi_l", "lift_phi_l"}, {"phi", "phi"}, {"map", "f"}, {"tower", "T"}};
  }
  p.command_args = args;
  return p;
}

}  // namespace chaincert
