#include "chaincert/complex.hpp"

#include "chaincert/errors.hpp"

#include <algorithm>
#include <deque>

namespace chaincert {

std::vector<Simplex> faces_of(const Simplex& s) {
  std::vector<Simplex> out;
  const std::size_t n = s.size();
  if (n == 0 || n > 20) {
    if (n > 20) throw InputError("simplex too large to enumerate faces");
    return out;
  }
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    Simplex f;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1ul << i)) f.push_back(s[i]);
    }
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<Simplex> boundary_faces(const Simplex& s) {
  std::vector<Simplex> out;
  if (s.size() < 2) return out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex f;
    f.reserve(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j != i) f.push_back(s[j]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

bool subset_of(const Simplex& s, const VertexSet& set) {
  return std::all_of(s.begin(), s.end(), [&](const Vertex& v) { return set.count(v) > 0; });
}

bool subset_of(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::pair<int, Simplex> orient(const std::vector<Vertex>& ordered) {
  Simplex s = ordered;
  int sign = 1;
  // Insertion sort, counting transpositions.
  for (std::size_t i = 1; i < s.size(); ++i) {
    for (std::size_t j = i; j > 0 && s[j - 1] > s[j]; --j) {
      std::swap(s[j - 1], s[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i - 1] == s[i]) throw InputError("repeated vertex '" + s[i] + "' in simplex");
  }
  return {sign, s};
}

const std::vector<Simplex>& SimplicialComplex::simplexes(int k) const {
  static const std::vector<Simplex> empty;
  if (k < 0 || k >= static_cast<int>(by_dim_.size())) return empty;
  return by_dim_[k];
}

std::size_t SimplicialComplex::size() const {
  std::size_t n = 0;
  for (const auto& d : by_dim_) n += d.size();
  return n;
}

std::vector<Simplex> SimplicialComplex::all_simplexes() const {
  std::vector<Simplex> out;
  for (const auto& d : by_dim_) out.insert(out.end(), d.begin(), d.end());
  return out;
}

std::vector<Simplex> SimplicialComplex::maximal_simplexes() const {
  std::set<Simplex> covered;
  for (int k = dimension(); k >= 1; --k) {
    for (const auto& s : by_dim_[k]) {
      for (auto& f : boundary_faces(s)) covered.insert(std::move(f));
    }
  }
  std::vector<Simplex> out;
  for (const auto& d : by_dim_) {
    for (const auto& s : d) {
      if (!covered.count(s)) out.push_back(s);
    }
  }
  return out;
}

bool SimplicialComplex::contains(const Simplex& s) const { return index_of(s).has_value(); }

bool SimplicialComplex::has_vertex(const Vertex& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  int k = dimension_of(s);
  if (k < 0 || k >= static_cast<int>(index_.size())) return std::nullopt;
  auto it = index_[k].find(s);
  if (it == index_[k].end()) return std::nullopt;
  return it->second;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  for (const auto& d : by_dim_) {
    for (const auto& s : d) {
      if (!other.contains(s)) return false;
    }
  }
  return true;
}

SimplicialComplex SimplicialComplex::skeleton(int k) const {
  std::vector<std::vector<Simplex>> by_dim;
  for (int d = 0; d <= std::min(k, dimension()); ++d) by_dim.push_back(by_dim_[d]);
  return from_closed_family(std::move(by_dim));
}

void SimplicialComplex::rebuild_index() {
  while (!by_dim_.empty() && by_dim_.back().empty()) by_dim_.pop_back();
  vertices_.clear();
  if (!by_dim_.empty()) {
    for (const auto& s : by_dim_[0]) vertices_.push_back(s[0]);
  }
  index_.assign(by_dim_.size(), {});
  for (std::size_t k = 0; k < by_dim_.size(); ++k) {
    for (std::size_t i = 0; i < by_dim_[k].size(); ++i) index_[k].emplace(by_dim_[k][i], i);
  }
}

SimplicialComplex from_closed_family(std::vector<std::vector<Simplex>> by_dim) {
  SimplicialComplex c;
  c.by_dim_ = std::move(by_dim);
  c.rebuild_index();
  return c;
}

SimplicialComplex validate_complex(const std::vector<Vertex>& vertices,
                                   const std::vector<std::vector<Vertex>>& simplexes,
                                   std::optional<int> dim_cap) {
  VertexSet known(vertices.begin(), vertices.end());
  const bool open_vertex_list = vertices.empty();
  std::vector<std::set<Simplex>> graded;
  auto insert = [&](const Simplex& s) {
    std::size_t k = s.size() - 1;
    if (graded.size() <= k) graded.resize(k + 1);
    graded[k].insert(s);
  };
  for (const auto& v : vertices) {
    if (v.empty()) throw InputError("empty vertex name");
    insert(Simplex{v});
  }
  for (const auto& raw : simplexes) {
    if (raw.empty()) throw InputError("empty simplex");
    auto [sign, s] = orient(raw);
    (void)sign;
    for (const auto& v : s) {
      if (v.empty()) throw InputError("empty vertex name");
      if (!open_vertex_list && !known.count(v)) {
        throw InputError("simplex " + format_simplex(s) + " references unknown vertex '" + v + "'");
      }
    }
    if (dim_cap && dimension_of(s) > *dim_cap) {
      throw InputError("simplex " + format_simplex(s) + " exceeds dimension cap " + std::to_string(*dim_cap));
    }
    if (graded.size() > s.size() - 1 && graded[s.size() - 1].count(s)) continue;
    for (auto& f : faces_of(s)) insert(f);
  }
  std::vector<std::vector<Simplex>> by_dim;
  for (auto& d : graded) by_dim.emplace_back(d.begin(), d.end());
  return from_closed_family(std::move(by_dim));
}

SimplicialComplex full_subcomplex(const SimplicialComplex& complex, const VertexSet& subset) {
  for (const auto& v : subset) {
    if (!complex.has_vertex(v)) throw PreconditionFailure("vertex '" + v + "' is not in the complex");
  }
  std::vector<std::vector<Simplex>> by_dim;
  for (int k = 0; k <= complex.dimension(); ++k) {
    std::vector<Simplex> keep;
    for (const auto& s : complex.simplexes(k)) {
      if (subset_of(s, subset)) keep.push_back(s);
    }
    if (keep.empty()) break;
    by_dim.push_back(std::move(keep));
  }
  return from_closed_family(std::move(by_dim));
}

SimplicialMap::SimplicialMap(ComplexRef source, ComplexRef target, std::map<Vertex, Vertex> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  for (const auto& [v, w] : assignment_) {
    if (!source_->has_vertex(v)) throw InputError("map assigns unknown source vertex '" + v + "'");
    if (!target_->has_vertex(w)) throw InputError("map sends '" + v + "' to unknown target vertex '" + w + "'");
    fibers_[w].insert(v);
  }
  for (const auto& v : source_->vertices()) {
    if (!assignment_.count(v)) throw InputError("map is not defined on source vertex '" + v + "'");
  }
  for (int k = 1; k <= source_->dimension(); ++k) {
    for (const auto& s : source_->simplexes(k)) {
      Simplex img = image(s);
      if (!target_->contains(img)) {
        throw InputError("image of " + format_simplex(s) + " is " + format_simplex(img) +
                         ", not a simplex of the target");
      }
    }
  }
}

SimplicialMap SimplicialMap::identity(const ComplexRef& complex) {
  std::map<Vertex, Vertex> a;
  for (const auto& v : complex->vertices()) a.emplace(v, v);
  return SimplicialMap(complex, complex, std::move(a));
}

const Vertex& SimplicialMap::operator()(const Vertex& v) const {
  auto it = assignment_.find(v);
  if (it == assignment_.end()) throw InputError("vertex '" + v + "' is not in the map's source");
  return it->second;
}

Simplex SimplicialMap::image(const Simplex& s) const {
  std::set<Vertex> img;
  for (const auto& v : s) img.insert((*this)(v));
  return Simplex(img.begin(), img.end());
}

VertexSet SimplicialMap::image(const VertexSet& s) const {
  VertexSet img;
  for (const auto& v : s) img.insert((*this)(v));
  return img;
}

VertexSet SimplicialMap::preimage(const VertexSet& s) const {
  VertexSet out;
  for (const auto& w : s) {
    auto it = fibers_.find(w);
    if (it != fibers_.end()) out.insert(it->second.begin(), it->second.end());
  }
  return out;
}

bool SimplicialMap::is_vertex_surjective() const { return fibers_.size() == target_->vertices().size(); }

bool SimplicialMap::is_surjective() const {
  std::set<Simplex> hit;
  for (const auto& s : source_->all_simplexes()) hit.insert(image(s));
  return hit.size() == target_->size();
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!(*f.target() == *g.source())) throw PreconditionFailure("maps are not composable");
  std::map<Vertex, Vertex> a;
  for (const auto& [v, w] : f.assignment()) a.emplace(v, g(w));
  return SimplicialMap(f.source(), g.target(), std::move(a));
}

Cover::Cover(ComplexRef complex, std::vector<CoverMember> members) : complex_(std::move(complex)) {
  std::sort(members.begin(), members.end(),
            [](const CoverMember& a, const CoverMember& b) { return a.name < b.name; });
  VertexSet covered;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& m = members[i];
    if (m.name.empty()) throw InputError("cover member with empty name");
    if (i > 0 && members[i - 1].name == m.name) throw InputError("duplicate cover member '" + m.name + "'");
    if (m.vertices.empty()) throw InputError("cover member '" + m.name + "' is empty");
    for (const auto& v : m.vertices) {
      if (!complex_->has_vertex(v)) {
        throw InputError("cover member '" + m.name + "' has unknown vertex '" + v + "'");
      }
    }
    covered.insert(m.vertices.begin(), m.vertices.end());
    by_name_.emplace(m.name, i);
  }
  if (covered.size() != complex_->vertices().size()) {
    for (const auto& v : complex_->vertices()) {
      if (!covered.count(v)) throw InputError("vertex '" + v + "' lies in no cover member");
    }
  }
  members_ = std::move(members);
}

const CoverMember& Cover::member(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) throw InputError("unknown cover member '" + name + "'");
  return members_[it->second];
}

std::vector<const CoverMember*> Cover::containing(const VertexSet& s) const {
  std::vector<const CoverMember*> out;
  for (const auto& m : members_) {
    if (subset_of(s, m.vertices)) out.push_back(&m);
  }
  return out;
}

const CoverMember* Cover::first_containing(const VertexSet& s) const {
  for (const auto& m : members_) {
    if (subset_of(s, m.vertices)) return &m;
  }
  return nullptr;
}

VertexSet star(const VertexSet& member, const Cover& cover) {
  for (const auto& v : member) {
    if (!cover.complex()->has_vertex(v)) {
      throw PreconditionFailure("vertex '" + v + "' is not in the cover's complex");
    }
  }
  VertexSet out;
  for (const auto& m : cover.members()) {
    bool meets = std::any_of(m.vertices.begin(), m.vertices.end(),
                             [&](const Vertex& v) { return member.count(v) > 0; });
    if (meets) out.insert(m.vertices.begin(), m.vertices.end());
  }
  return out;
}

RefinementVerdict check_star_refinement(const Cover& fine, const Cover& coarse) {
  if (!(fine.complex()->vertices() == coarse.complex()->vertices())) {
    throw PreconditionFailure("covers live on different complexes");
  }
  RefinementVerdict out;
  for (const auto& m : fine.members()) {
    const CoverMember* target = coarse.first_containing(star(m.vertices, fine));
    if (!target) {
      out.counterexample = m.name;
      out.witness.clear();
      return out;
    }
    out.witness.emplace(m.name, target->name);
  }
  out.ok = true;
  return out;
}

SimplicialComplex nerve(const Cover& cover, int dim_cap) {
  const auto& members = cover.members();
  std::vector<std::vector<Simplex>> by_dim;
  if (members.empty() || dim_cap < 0) return from_closed_family({});
  // Depth-first over member index sets with a nonempty running intersection.
  struct Frame {
    std::vector<std::size_t> chosen;
    VertexSet common;
  };
  std::vector<std::set<Simplex>> graded(static_cast<std::size_t>(dim_cap) + 1);
  std::vector<Frame> stack;
  for (std::size_t i = members.size(); i-- > 0;) stack.push_back({{i}, members[i].vertices});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    Simplex s;
    for (auto i : f.chosen) s.push_back(members[i].name);
    graded[s.size() - 1].insert(s);
    if (static_cast<int>(f.chosen.size()) > dim_cap) continue;
    for (std::size_t j = f.chosen.back() + 1; j < members.size(); ++j) {
      VertexSet common;
      std::set_intersection(f.common.begin(), f.common.end(), members[j].vertices.begin(),
                            members[j].vertices.end(), std::inserter(common, common.end()));
      if (common.empty()) continue;
      Frame next{f.chosen, std::move(common)};
      next.chosen.push_back(j);
      stack.push_back(std::move(next));
    }
  }
  for (auto& d : graded) {
    if (d.empty()) break;
    by_dim.emplace_back(d.begin(), d.end());
  }
  return from_closed_family(std::move(by_dim));
}

Cover preimage_cover(const SimplicialMap& f, const Cover& cover) {
  if (!(cover.complex()->vertices() == f.target()->vertices())) {
    throw PreconditionFailure("cover does not live on the map's target");
  }
  std::vector<CoverMember> members;
  for (const auto& m : cover.members()) {
    VertexSet pre = f.preimage(m.vertices);
    if (pre.empty()) {
      throw PreconditionFailure("preimage of cover member '" + m.name + "' is empty (map not surjective onto it)");
    }
    members.push_back({m.name, std::move(pre)});
  }
  return Cover(f.source(), std::move(members));
}

Cover open_star_cover(const ComplexRef& complex) {
  std::map<Vertex, VertexSet> nbhd;
  for (const auto& v : complex->vertices()) nbhd[v].insert(v);
  for (const auto& s : complex->simplexes(1)) {
    nbhd[s[0]].insert(s[1]);
    nbhd[s[1]].insert(s[0]);
  }
  std::vector<CoverMember> members;
  for (auto& [v, set] : nbhd) members.push_back({v, std::move(set)});
  return Cover(complex, std::move(members));
}

FiltrationTower::FiltrationTower(ComplexRef complex, std::vector<Cover> levels,
                                 std::vector<std::map<std::string, std::string>> witnesses,
                                 std::vector<std::map<std::string, std::string>> pairs)
    : complex_(std::move(complex)),
      levels_(std::move(levels)),
      witnesses_(std::move(witnesses)),
      pairs_(std::move(pairs)) {
  if (levels_.size() < 2) throw InputError("a tower needs at least two levels");
  const std::size_t steps = levels_.size() - 1;
  if (witnesses_.size() != steps) throw InputError("tower needs one witness map per level step");
  if (pairs_.size() != steps) throw InputError("tower needs one pair map per level step");
  for (const auto& c : levels_) {
    if (!(c.complex()->vertices() == complex_->vertices())) throw InputError("tower level covers another complex");
  }
  auto check_map = [&](const std::map<std::string, std::string>& m, std::size_t k, const char* what) {
    for (const auto& member : levels_[k].members()) {
      auto it = m.find(member.name);
      if (it == m.end()) {
        throw InputError(std::string(what) + " map at level " + std::to_string(k) + " is missing member '" +
                         member.name + "'");
      }
      if (!levels_[k + 1].has_member(it->second)) {
        throw InputError(std::string(what) + " map at level " + std::to_string(k) + " names unknown member '" +
                         it->second + "'");
      }
    }
    for (const auto& [from, to] : m) {
      (void)to;
      if (!levels_[k].has_member(from)) {
        throw InputError(std::string(what) + " map at level " + std::to_string(k) + " has unknown key '" + from + "'");
      }
    }
  };
  for (std::size_t k = 0; k < steps; ++k) {
    check_map(witnesses_[k], k, "witness");
    check_map(pairs_[k], k, "pair");
  }
}

const CoverMember& FiltrationTower::witness(std::size_t k, const std::string& member) const {
  return levels_.at(k + 1).member(witnesses_.at(k).at(member));
}

const CoverMember& FiltrationTower::pair(std::size_t k, const std::string& member) const {
  return levels_.at(k + 1).member(pairs_.at(k).at(member));
}

FiltrationTower FiltrationTower::trivial(const ComplexRef& complex, int n) {
  std::vector<Cover> levels;
  std::vector<std::map<std::string, std::string>> maps;
  for (int k = 0; k <= n + 1; ++k) levels.emplace_back(complex, std::vector<CoverMember>{{"all", complex->vertex_set()}});
  for (int k = 0; k <= n; ++k) maps.push_back({{"all", "all"}});
  return FiltrationTower(complex, std::move(levels), maps, maps);
}

std::string TowerDefect::describe() const {
  std::string where = "level " + std::to_string(level) + " member '" + member + "'";
  if (kind == Kind::star_not_contained) {
    return where + ": star is not contained in witness '" + assigned + "'";
  }
  return where + ": not contained in paired member '" + assigned + "'";
}

std::vector<TowerDefect> tower_defects(const FiltrationTower& tower) {
  std::vector<TowerDefect> out;
  for (std::size_t k = 0; k + 1 < tower.levels().size(); ++k) {
    const Cover& level = tower.level(k);
    for (const auto& m : level.members()) {
      const CoverMember& w = tower.witness(k, m.name);
      if (!subset_of(star(m.vertices, level), w.vertices)) {
        out.push_back({TowerDefect::Kind::star_not_contained, k, m.name, w.name});
      }
      const CoverMember& p = tower.pair(k, m.name);
      if (!subset_of(m.vertices, p.vertices)) {
        out.push_back({TowerDefect::Kind::pair_not_nested, k, m.name, p.name});
      }
    }
  }
  return out;
}

std::string format_simplex(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i];
  }
  return out + "]";
}

std::string format_vertex_set(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : s) {
    if (!first) out += ",";
    out += v;
    first = false;
  }
  return out + "}";
}

}  // namespace chaincert
