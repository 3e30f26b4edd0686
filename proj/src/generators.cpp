#include "chaincert/generators.hpp"

#include <cstdio>

namespace chaincert {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

std::string two_digits(std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02zu", i);
  return buf;
}

ComplexRef complex_of(const std::vector<Simplex>& simplexes) {
  std::vector<std::vector<Vertex>> raw(simplexes.begin(), simplexes.end());
  return share(validate_complex({}, raw));
}

Cover single(const ComplexRef& c) { return Cover(c, {{"all", c->vertex_set()}}); }

std::map<std::string, std::string> all_to(const Cover& cover, const std::string& target) {
  std::map<std::string, std::string> m;
  for (const auto& member : cover.members()) m[member.name] = target;
  return m;
}

std::map<std::string, std::string> to_itself(const Cover& cover) {
  std::map<std::string, std::string> m;
  for (const auto& member : cover.members()) m[member.name] = member.name;
  return m;
}

ChainMorphism lift_on(const ComplexRef& l, const ComplexRef& x, const std::map<Vertex, Vertex>& lift,
                      const Ring& ring) {
  std::map<Simplex, Chain> a;
  for (const auto& s : l->all_simplexes()) {
    std::vector<Vertex> image;
    for (const auto& v : s) image.push_back(lift.at(v));
    a.emplace(s, Chain::oriented(image, Scalar(1), ring));
  }
  return ChainMorphism(l, x, std::max(l->dimension(), 0), ring, std::move(a));
}

GeneratedInstance uvn_instance(std::mt19937_64& rng, std::uint64_t seed, const Ring& ring) {
  auto y = share(random_collapsible(rng, 8, 3, 40, "y"));
  std::map<Vertex, std::vector<Vertex>> fiber;
  std::map<Vertex, Vertex> f_map;
  for (std::size_t i = 0; i < y->vertices().size(); ++i) {
    const Vertex& v = y->vertices()[i];
    std::size_t size = pick(rng, 3) == 0 ? 2 : 1;
    for (std::size_t j = 0; j < size; ++j) {
      Vertex w = "x" + std::to_string(i) + static_cast<char>('a' + j);
      fiber[v].push_back(w);
      f_map[w] = v;
    }
  }
  std::vector<Simplex> x_facets;
  for (const auto& s : y->maximal_simplexes()) {
    Simplex up;
    for (const auto& v : s) up.insert(up.end(), fiber[v].begin(), fiber[v].end());
    x_facets.push_back(orient(up).second);
  }
  auto x = complex_of(x_facets);
  SimplicialMap f(x, y, f_map);

  // K is Y with vertices renamed k0, k1, ...
  std::map<Vertex, Vertex> rename, lift;
  for (std::size_t i = 0; i < y->vertices().size(); ++i) {
    const Vertex& v = y->vertices()[i];
    rename[v] = "k" + std::to_string(i);
    lift[rename[v]] = fiber[v][pick(rng, fiber[v].size())];
  }
  std::vector<Simplex> k_simplexes, l_simplexes;
  for (const auto& s : y->maximal_simplexes()) {
    Simplex t;
    for (const auto& v : s) t.push_back(rename[v]);
    k_simplexes.push_back(orient(t).second);
  }
  auto k = complex_of(k_simplexes);
  for (const auto& v : k->vertices()) l_simplexes.push_back({v});
  for (const auto& e : k->simplexes(1)) {
    if (pick(rng, 3) == 0) l_simplexes.push_back(e);
  }
  auto l = complex_of(l_simplexes);
  const int n = std::max(0, k->dimension() - 1);
  auto tower = star_tower(f, n, ring);
  RealizationProblem problem{k, l, lift_on(l, x, lift, ring), f, tower, ring, {}};
  return {"uvn", seed, ring, x, y, f, tower, problem, std::nullopt, nullptr, std::nullopt};
}

GeneratedInstance prism_instance(std::mt19937_64& rng, std::uint64_t seed, const Ring& ring) {
  auto y = share(random_collapsible(rng, 7, 2, 40, "y"));
  std::map<Vertex, Vertex> f_map;
  for (const auto& v : y->vertices()) {
    f_map[v + ".0"] = v;
    f_map[v + ".1"] = v;
  }
  std::vector<Simplex> x_facets;
  for (const auto& s : y->maximal_simplexes()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex p;
      for (std::size_t j = 0; j <= i; ++j) p.push_back(s[j] + ".0");
      for (std::size_t j = i; j < s.size(); ++j) p.push_back(s[j] + ".1");
      x_facets.push_back(orient(p).second);
    }
  }
  auto x = complex_of(x_facets);
  SimplicialMap f(x, y, f_map);
  const int n = std::max(0, y->dimension() - 1);
  auto tower = star_tower(f, n, ring);

  std::map<Vertex, Vertex> full_lift, partial_lift;
  std::vector<Simplex> vertex_list, partial;
  for (const auto& v : y->vertices()) {
    Vertex w = v + (pick(rng, 2) == 0 ? ".0" : ".1");
    full_lift[v] = w;
    vertex_list.push_back({v});
    if (pick(rng, 2) == 0) {
      partial_lift[v] = w;
      partial.push_back({v});
    }
  }
  auto l = complex_of(vertex_list);
  auto lift_l = share(validate_complex({}, std::vector<std::vector<Vertex>>(partial.begin(), partial.end())));
  RealizationProblem problem{y, l, lift_on(l, x, full_lift, ring), f, tower, ring, {}};
  return {"prism", seed, ring, x, y, f, tower, problem, identity_morphism(y, y->dimension(), ring), lift_l,
          lift_on(lift_l, x, partial_lift, ring)};
}

GeneratedInstance cone_instance(const std::string& family, std::uint64_t seed, const ComplexRef& x, int n,
                                std::mt19937_64& rng, const Ring& ring) {
  std::vector<Simplex> k_facets, l_simplexes = x->all_simplexes();
  for (const auto& s : x->maximal_simplexes()) {
    Simplex c = s;
    c.push_back("apex");
    k_facets.push_back(orient(c).second);
  }
  auto k = complex_of(k_facets);
  l_simplexes.push_back({"apex"});
  auto l = complex_of(l_simplexes);
  std::map<Vertex, Vertex> lift;
  for (const auto& v : x->vertices()) lift[v] = v;
  lift["apex"] = x->vertices()[pick(rng, x->vertices().size())];
  auto f = SimplicialMap::identity(x);
  auto tower = FiltrationTower::trivial(x, n);
  RealizationProblem problem{k, l, lift_on(l, x, lift, ring), f, tower, ring, {}};
  return {family, seed, ring, x, x, f, tower, problem, std::nullopt, nullptr, std::nullopt};
}

GeneratedInstance h1_instance(std::mt19937_64& rng, std::uint64_t seed, const Ring& ring) {
  const std::size_t m = 3 + pick(rng, 6);
  std::vector<Simplex> edges;
  for (std::size_t i = 0; i < m; ++i) {
    edges.push_back(orient({"c" + std::to_string(i), "c" + std::to_string((i + 1) % m)}).second);
  }
  const std::size_t whiskers = pick(rng, 3);
  for (std::size_t i = 0; i < whiskers; ++i) {
    edges.push_back(orient({"t" + std::to_string(i), "c" + std::to_string(pick(rng, m))}).second);
  }
  return cone_instance("obstruction-h1", seed, complex_of(edges), 1, rng, ring);
}

GeneratedInstance h2_instance(std::mt19937_64& rng, std::uint64_t seed, const Ring& ring) {
  std::vector<Simplex> triangles{{"s0", "s1", "s2"}, {"s0", "s1", "s3"}, {"s0", "s2", "s3"}, {"s1", "s2", "s3"}};
  const std::size_t subdivisions = pick(rng, 4);
  for (std::size_t i = 0; i < subdivisions; ++i) {
    std::size_t at = pick(rng, triangles.size());
    Simplex t = triangles[at];
    triangles.erase(triangles.begin() + static_cast<std::ptrdiff_t>(at));
    Vertex c = "s" + std::to_string(4 + i);
    for (std::size_t j = 0; j < 3; ++j) {
      Simplex next{c};
      for (std::size_t q = 0; q < 3; ++q) {
        if (q != j) next.push_back(t[q]);
      }
      triangles.push_back(orient(next).second);
    }
  }
  return cone_instance("obstruction-h2", seed, complex_of(triangles), 2, rng, ring);
}

}  // namespace

std::vector<std::string> instance_families() { return {"obstruction-h1", "obstruction-h2", "prism", "uvn"}; }

GeneratedInstance generate_instance(const std::string& family, std::uint64_t seed, const Ring& ring) {
  std::mt19937_64 rng(seed);
  if (family == "uvn") return uvn_instance(rng, seed, ring);
  if (family == "prism") return prism_instance(rng, seed, ring);
  if (family == "obstruction-h1") return h1_instance(rng, seed, ring);
  if (family == "obstruction-h2") return h2_instance(rng, seed, ring);
  throw InputError("unknown instance family '" + family + "'");
}

SimplicialComplex random_collapsible(std::mt19937_64& rng, int max_vertices, int max_dim, std::size_t max_size,
                                     const std::string& prefix) {
  const int d0 = 1 + static_cast<int>(pick(rng, static_cast<std::size_t>(max_dim)));
  const int target = std::min(max_vertices, d0 + 1 + static_cast<int>(pick(rng, 6)));
  std::vector<std::vector<Vertex>> facets(1);
  for (int i = 0; i <= d0; ++i) facets[0].push_back(prefix + std::to_string(i));
  SimplicialComplex k = validate_complex({}, facets);
  for (int next = d0 + 1; next < target; ++next) {
    std::vector<Simplex> options;
    for (int d = 0; d < max_dim && d <= k.dimension(); ++d) {
      for (const auto& s : k.simplexes(d)) {
        if (k.size() + (std::size_t{1} << s.size()) <= max_size) options.push_back(s);
      }
    }
    if (options.empty()) break;
    Simplex base = options[pick(rng, options.size())];
    base.push_back(prefix + std::to_string(next));
    facets.push_back(base);
    k = validate_complex({}, facets);
  }
  return k;
}

FiltrationTower star_tower(const SimplicialMap& f, int n, const Ring& ring) {
  const ComplexRef& y = f.target();
  std::vector<Cover> levels;
  std::vector<CoverMember> base;
  auto maximal = y->maximal_simplexes();
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    base.push_back({"m" + two_digits(i), VertexSet(maximal[i].begin(), maximal[i].end())});
  }
  levels.emplace_back(y, base);
  for (int k = 1; k <= n; ++k) {
    std::vector<CoverMember> next;
    for (const auto& m : levels.back().members()) next.push_back({m.name, star(m.vertices, levels.back())});
    levels.emplace_back(y, next);
  }
  levels.push_back(single(y));

  auto build = [&](int coarse_from) {
    std::vector<Cover> ls;
    for (int k = 0; k <= n + 1; ++k) ls.push_back(k >= coarse_from ? single(y) : levels[static_cast<std::size_t>(k)]);
    std::vector<std::map<std::string, std::string>> maps;
    for (int k = 0; k <= n; ++k) maps.push_back(k + 1 >= coarse_from ? all_to(ls[k], "all") : to_itself(ls[k]));
    return FiltrationTower(y, ls, maps, maps);
  };
  int coarse_from = n + 1;
  FiltrationTower tower = build(coarse_from);
  for (int k = 0; k <= n; ++k) {
    if (k + 1 >= coarse_from) break;
    if (star_pair_failure(f, tower, k, ring)) {
      coarse_from = k + 1;
      tower = build(coarse_from);
    }
  }
  return tower;
}

}  // namespace chaincert
