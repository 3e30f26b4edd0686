#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace chaincert {

using Vertex = std::string;
/// Vertex names in ascending order, no repeats.
using Simplex = std::vector<Vertex>;
using VertexSet = std::set<Vertex>;

inline int dimension_of(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

/// All nonempty faces of s (s included), by dimension then lexicographically.
std::vector<Simplex> faces_of(const Simplex& s);
/// Codimension-one faces; element i omits vertex i.
std::vector<Simplex> boundary_faces(const Simplex& s);
bool subset_of(const Simplex& s, const VertexSet& set);
bool subset_of(const VertexSet& a, const VertexSet& b);

/// Sign of the permutation sorting `ordered`, and the sorted simplex. Throws
/// InputError on repeated vertices.
std::pair<int, Simplex> orient(const std::vector<Vertex>& ordered);

/// Finite abstract simplicial complex. Vertices and simplexes are kept sorted
/// so iteration order and serialization are canonical.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  const std::vector<Vertex>& vertices() const { return vertices_; }
  VertexSet vertex_set() const { return VertexSet(vertices_.begin(), vertices_.end()); }
  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<Simplex>& simplexes(int k) const;
  std::size_t count(int k) const { return simplexes(k).size(); }
  std::size_t size() const;
  /// Every simplex, by dimension then lexicographically.
  std::vector<Simplex> all_simplexes() const;
  /// Simplexes not a proper face of another simplex.
  std::vector<Simplex> maximal_simplexes() const;

  bool contains(const Simplex& s) const;
  bool has_vertex(const Vertex& v) const;
  /// Position of s within simplexes(dim s).
  std::optional<std::size_t> index_of(const Simplex& s) const;

  bool is_subcomplex_of(const SimplicialComplex& other) const;
  SimplicialComplex skeleton(int k) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.by_dim_ == b.by_dim_;
  }

 private:
  friend SimplicialComplex from_closed_family(std::vector<std::vector<Simplex>>);

  void rebuild_index();

  std::vector<Vertex> vertices_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, std::size_t>> index_;
};

using ComplexRef = std::shared_ptr<const SimplicialComplex>;

/// Face closure of the given simplexes over the declared vertices. An empty
/// vertex list means "use the vertices that occur". Throws InputError for an
/// unknown or repeated vertex, an empty simplex, or a simplex above dim_cap.
SimplicialComplex validate_complex(const std::vector<Vertex>& vertices,
                                   const std::vector<std::vector<Vertex>>& simplexes,
                                   std::optional<int> dim_cap = std::nullopt);

/// Builds a complex from per-dimension simplex lists that are already
/// face-closed and sorted.
SimplicialComplex from_closed_family(std::vector<std::vector<Simplex>> by_dim);

inline ComplexRef share(SimplicialComplex c) { return std::make_shared<const SimplicialComplex>(std::move(c)); }

/// All simplexes whose vertices lie in `subset`. Throws PreconditionFailure for
/// vertices outside the complex.
SimplicialComplex full_subcomplex(const SimplicialComplex& complex, const VertexSet& subset);

/// Vertex map inducing a simplicial map source -> target.
class SimplicialMap {
 public:
  /// Throws InputError unless the assignment is total on source vertices, lands
  /// in target vertices and sends simplexes to simplexes.
  SimplicialMap(ComplexRef source, ComplexRef target, std::map<Vertex, Vertex> assignment);

  static SimplicialMap identity(const ComplexRef& complex);

  const ComplexRef& source() const { return source_; }
  const ComplexRef& target() const { return target_; }
  const std::map<Vertex, Vertex>& assignment() const { return assignment_; }

  const Vertex& operator()(const Vertex& v) const;
  /// Sorted distinct image vertices.
  Simplex image(const Simplex& s) const;
  VertexSet image(const VertexSet& s) const;
  VertexSet preimage(const VertexSet& s) const;

  /// Every target vertex is hit.
  bool is_vertex_surjective() const;
  /// Every target simplex is the image of a source simplex.
  bool is_surjective() const;

 private:
  ComplexRef source_, target_;
  std::map<Vertex, Vertex> assignment_;
  std::map<Vertex, VertexSet> fibers_;
};

/// g after f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

struct CoverMember {
  std::string name;
  VertexSet vertices;
};

/// Named vertex subsets whose union is the vertex set. Members are kept in
/// ascending name order; that order is the canonical scan order everywhere.
class Cover {
 public:
  /// Throws InputError for duplicate names, empty members, unknown vertices or
  /// an incomplete union.
  Cover(ComplexRef complex, std::vector<CoverMember> members);

  const ComplexRef& complex() const { return complex_; }
  const std::vector<CoverMember>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const CoverMember& member(const std::string& name) const;
  bool has_member(const std::string& name) const { return by_name_.count(name) > 0; }

  /// Members containing every vertex of `s`, in canonical order.
  std::vector<const CoverMember*> containing(const VertexSet& s) const;
  const CoverMember* first_containing(const VertexSet& s) const;

 private:
  ComplexRef complex_;
  std::vector<CoverMember> members_;
  std::map<std::string, std::size_t> by_name_;
};

/// Union of the members of `cover` meeting `member`. Throws PreconditionFailure
/// if `member` names vertices outside the cover's complex.
VertexSet star(const VertexSet& member, const Cover& cover);

struct RefinementVerdict {
  bool ok = false;
  std::map<std::string, std::string> witness;  // fine member -> coarse member
  std::optional<std::string> counterexample;   // first fine member without one
};

RefinementVerdict check_star_refinement(const Cover& fine, const Cover& coarse);

/// Skeleton of the nerve: one vertex per member (named after it), a simplex for
/// every set of at most dim_cap + 1 members with a common vertex.
SimplicialComplex nerve(const Cover& cover, int dim_cap);

/// Member-wise vertex preimages under f. Throws PreconditionFailure if some
/// preimage is empty.
Cover preimage_cover(const SimplicialMap& f, const Cover& cover);

/// Member named after each vertex v: all vertices sharing a simplex with v.
Cover open_star_cover(const ComplexRef& complex);

/// Nested covers U_0, ..., U_{n+1} of one complex with, for k = 0..n, a
/// refinement witness map w_k: U_k -> U_{k+1} (meant to satisfy
/// St(V, U_k) within w_k(V)) and a pair map p_k: U_k -> U_{k+1} naming the
/// larger set into which f^{-1}(V) must be H_k-trivial.
class FiltrationTower {
 public:
  /// Throws InputError for fewer than two levels, covers of another complex,
  /// unknown member names or non-total maps. Witness validity is not assumed;
  /// see tower_defects().
  FiltrationTower(ComplexRef complex, std::vector<Cover> levels,
                  std::vector<std::map<std::string, std::string>> witnesses,
                  std::vector<std::map<std::string, std::string>> pairs);

  const ComplexRef& complex() const { return complex_; }
  const std::vector<Cover>& levels() const { return levels_; }
  const Cover& level(std::size_t k) const { return levels_.at(k); }
  const std::vector<std::map<std::string, std::string>>& witnesses() const { return witnesses_; }
  const std::vector<std::map<std::string, std::string>>& pairs() const { return pairs_; }
  /// Number of levels minus two.
  int n() const { return static_cast<int>(levels_.size()) - 2; }

  const CoverMember& witness(std::size_t k, const std::string& member) const;
  const CoverMember& pair(std::size_t k, const std::string& member) const;

  /// Same nested structure with every level cover replaced by a single
  /// {whole vertex set} member named "all".
  static FiltrationTower trivial(const ComplexRef& complex, int n);

 private:
  ComplexRef complex_;
  std::vector<Cover> levels_;
  std::vector<std::map<std::string, std::string>> witnesses_;
  std::vector<std::map<std::string, std::string>> pairs_;
};

struct TowerDefect {
  enum class Kind { star_not_contained, pair_not_nested };
  Kind kind;
  std::size_t level;
  std::string member;
  std::string assigned;
  std::string describe() const;
};

/// Structural defects: witnesses with St(V, U_k) not inside w_k(V), and pairs
/// with V not inside p_k(V). Sorted by level then member name.
std::vector<TowerDefect> tower_defects(const FiltrationTower& tower);

std::string format_simplex(const Simplex& s);
std::string format_vertex_set(const VertexSet& s);

}  // namespace chaincert
