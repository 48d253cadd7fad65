#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "limhodge/polytope.hpp"
#include "limhodge/poset.hpp"

namespace limhodge {

struct HeightPoint {
  IVec coords;
  Rational height;
};

struct Cell {
  std::vector<int> points;  // sorted indices into Subdivision::points()
  int dim = -1;
  int carrier = 0;  // face index of the smallest face of P containing the cell
  bool boundary = true;
};

/// A lattice polyhedral subdivision of P, closed under faces, with the empty
/// cell at index 0. Cells are ordered by (dim, point ids).
class Subdivision {
 public:
  /// Cells are all faces of the given maximal cells. Validates that the
  /// maximal cells are full dimensional in P, that their normalized volumes
  /// add up to vol(P), and that every interior wall is shared by exactly two
  /// maximal cells. Throws InputError on failure.
  static Subdivision from_maximal_cells(const LatticePolytope& p,
                                        const std::vector<std::vector<IVec>>& maximal);
  static Subdivision trivial(const LatticePolytope& p);

  const LatticePolytope& polytope() const { return *p_; }
  const FaceLattice& faces() const { return *faces_; }
  const std::vector<IVec>& points() const { return points_; }
  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& cell(int c) const { return cells_[c]; }
  int num_cells() const { return static_cast<int>(cells_.size()); }
  const LatticePolytope& cell_polytope(int c) const { return cell_polys_[c]; }
  const EulerianPoset& poset() const { return *poset_; }

  std::vector<int> maximal_cells() const;
  bool is_trivial() const;
  /// Cell index with exactly these (ambient) vertices, or -1.
  int find_cell(std::vector<IVec> vertices) const;
  /// Cell c lies in face q of P.
  bool cell_in_face(int c, int q) const;
  /// Cell c meets face q of P.
  bool cell_meets_face(int c, int q) const;
  /// Interior cells: relative interior inside the relative interior of P.
  bool is_interior(int c) const { return !cells_[c].boundary; }

  /// Cells of S|_Q as a new subdivision of the face Q.
  Subdivision restrict(int face) const;
  /// The same subdivision carried to the chart of P.normalized().
  Subdivision normalized() const;

  /// Euler sum: sum over interior cells F with F cap Q empty of
  /// (-1)^dim F.
  Integer euler_sum(int face) const;
  /// euler_sum(Q) == (-1)^dim P for Q empty and 0 for proper faces.
  bool euler_relation_holds(int face) const;

 private:
  std::shared_ptr<const LatticePolytope> p_;
  std::shared_ptr<const FaceLattice> faces_;
  std::vector<IVec> points_;
  std::vector<std::vector<int>> point_facets_;  // facets of P tight at each point
  std::vector<Cell> cells_;
  std::vector<LatticePolytope> cell_polys_;
  std::shared_ptr<const EulerianPoset> poset_;
};

/// Regular subdivision of conv(A) from heights on A: projections of the lower
/// faces of the lifted point set. Points of A off the lower hull are ignored.
Subdivision regular_subdivision(const std::vector<HeightPoint>& heights);
/// Same, checking that conv(A) equals the given polytope.
Subdivision regular_subdivision(const LatticePolytope& p, const std::vector<HeightPoint>& heights);

/// h(lk(F); t) in the restriction S|_Q (Q = the top face by default):
/// t^{dim Q - dim F} h(t^{-1}) = sum_{F <= F' <= Q} (t-1)^{dim Q - dim F'} g([F,F'];t).
LaurentPoly link_h_polynomial(const Subdivision& s, int cell, int face = -1);

}  // namespace limhodge
