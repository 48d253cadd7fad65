#pragma once

#include <optional>
#include <string>
#include <vector>

#include "limhodge/exactpoly.hpp"
#include "limhodge/linalg.hpp"

namespace limhodge {

class EulerianPoset;

/// Unimodular affine identification of the saturated lattice of an affine
/// span with Z^d:  z = (x - origin) * to_local,  x = origin + z * from_local.
struct AffineChart {
  IVec origin;
  IMat to_local;    // n x d
  IMat from_local;  // d x n
  int ambient_dim = 0;
  int dim = -1;

  IVec local(const IVec& x) const;
  IVec ambient(const IVec& z) const;
  bool in_span(const IVec& x) const;
  bool is_identity() const;
};

/// Inequality <normal, z> >= rhs in local coordinates, tight on `vertices`.
struct Facet {
  IVec normal;
  i64 rhs = 0;
  std::vector<int> vertices;
};

class LatticePolytope {
 public:
  /// The empty polytope in Z^0.
  LatticePolytope() = default;
  static LatticePolytope empty(int ambient_dim);
  /// Convex hull of a nonempty point set; duplicates are allowed.
  static LatticePolytope hull(std::vector<IVec> points);

  int ambient_dim() const { return chart_.ambient_dim; }
  int dim() const { return chart_.dim; }
  bool is_empty() const { return chart_.dim < 0; }
  bool is_full_dimensional() const { return chart_.dim == chart_.ambient_dim; }

  /// Vertices in ambient coordinates, sorted lexicographically.
  const std::vector<IVec>& vertices() const { return vertices_; }
  /// The same vertices in chart coordinates.
  const std::vector<IVec>& local_vertices() const { return local_vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const AffineChart& chart() const { return chart_; }

  bool contains(const IVec& x) const;
  bool in_relative_interior(const IVec& x) const;
  /// Indices of facets tight at the ambient point x (x must lie in P).
  std::vector<int> tight_facets(const IVec& x) const;

  /// #(mP cap M); 0 for the empty polytope, 1 for m = 0 otherwise.
  Integer lattice_point_count(int m = 1) const;
  /// Lattice points in the relative interior of mP.
  Integer interior_lattice_point_count(int m = 1) const;
  /// Lattice points of P, ambient coordinates, lexicographic order.
  std::vector<IVec> lattice_points() const;

  /// dim(P)! times the volume with respect to the intrinsic lattice.
  Integer normalized_volume() const;

  /// P written in the saturated lattice of its affine span (in Z^dim).
  LatticePolytope normalized() const;
  /// Hull of a subset of vertices (by index).
  LatticePolytope sub_polytope(const std::vector<int>& vertex_ids) const;

  std::string to_string() const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.chart_.ambient_dim == b.chart_.ambient_dim && a.vertices_ == b.vertices_;
  }

 private:
  struct Box {
    IVec lo, hi;
  };
  Box local_box() const;

  AffineChart chart_;
  std::vector<IVec> vertices_;
  std::vector<IVec> local_vertices_;
  std::vector<Facet> facets_;
};

/// All faces of P as vertex-index sets, ordered by (dim, ids): the empty face
/// first and P itself last.
class FaceLattice {
 public:
  explicit FaceLattice(const LatticePolytope& p);

  int size() const { return static_cast<int>(faces_.size()); }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }
  const std::vector<int>& vertices_of(int f) const { return faces_[f]; }
  int dim(int f) const { return dims_[f]; }
  /// Facets of P (indices into P.facets()) containing face f.
  const std::vector<int>& facets_of(int f) const { return facets_of_[f]; }
  /// Face index of the face with exactly this vertex set, or -1.
  int find(const std::vector<int>& vertex_ids) const;
  /// Smallest face containing the given vertex ids.
  int closure(const std::vector<int>& vertex_ids) const;
  bool leq(int a, int b) const;
  std::vector<int> count_by_dim() const;
  /// Inclusion poset with rank dim + 1.
  EulerianPoset poset() const;

 private:
  std::vector<std::vector<int>> faces_;
  std::vector<int> dims_;
  std::vector<std::vector<int>> facets_of_;
  int num_vertices_ = 0;
};

/// Affine dimension of a point set (-1 if empty).
int affine_dimension(const std::vector<IVec>& points);

struct DualPolytope {
  bool reflexive = false;
  /// Vertices of P*, one per facet of P (in facet order), as rationals.
  std::vector<std::vector<Rational>> vertices;
  /// P* itself, available when it is a lattice polytope.
  std::optional<LatticePolytope> polytope;
  /// For reflexive P: face index of P  ->  face index of P* (face lattices
  /// built with FaceLattice on P and *polytope respectively).
  std::vector<int> face_map;
};

/// Polar dual {y : <y, x> >= -1 for x in P}. P must be full dimensional with
/// the origin in its interior (InputError otherwise).
DualPolytope dual_polytope(const LatticePolytope& p);
bool is_reflexive(const LatticePolytope& p);

}  // namespace limhodge
