#pragma once

#include <functional>
#include <vector>

#include "limhodge/linalg.hpp"
#include "limhodge/polytope.hpp"

namespace limhodge {

struct Cone {
  std::vector<int> rays;  // sorted indices into Fan::rays()
  int dim = 0;
};

/// A fan given by its cones, closed under faces; cone 0 is {0}. Cones are
/// ordered by (dim, ray ids). A refinement additionally records, for each
/// cone, the index of the smallest cone of the coarse fan containing it.
class Fan {
 public:
  Fan() = default;
  /// Builds the fan from its cones (each a set of ray indices); the list is
  /// closed under faces automatically for simplicial cones only, so callers
  /// pass every cone. Throws InputError if the family is not closed under
  /// faces or a ray is not primitive.
  Fan(int ambient_dim, std::vector<IVec> rays, std::vector<std::vector<int>> cones);

  int ambient_dim() const { return ambient_dim_; }
  const std::vector<IVec>& rays() const { return rays_; }
  const std::vector<Cone>& cones() const { return cones_; }
  int size() const { return static_cast<int>(cones_.size()); }
  int find(std::vector<int> ray_ids) const;
  bool is_simplicial() const;
  /// Cones of this fan that are facets of cone c.
  std::vector<int> facets_of(int c) const;
  bool is_face(int a, int b) const;

  bool has_sigma() const { return !sigma_.empty(); }
  int sigma(int c) const { return sigma_[c]; }
  const std::vector<int>& sigma_map() const { return sigma_; }
  void set_sigma(std::vector<int> s) { sigma_ = std::move(s); }

 private:
  int ambient_dim_ = 0;
  std::vector<IVec> rays_;
  std::vector<Cone> cones_;
  std::vector<int> sigma_;
};

/// Normal fan of a full-dimensional P with the maximal cones removed, built
/// from inner facet normals. cone_face[c] is the face of P whose normal cone
/// is c (faces of positive dimension only).
struct TruncatedNormalFan {
  Fan fan;
  FaceLattice faces;
  std::vector<int> cone_face;
  std::vector<int> face_cone;  // -1 for the empty face and vertices
};
TruncatedNormalFan normal_fan_truncated(const LatticePolytope& p);

/// Pulling triangulation of every cone, with rays pulled in the given order
/// (a permutation of ray indices; empty means lexicographic order of the ray
/// vectors). The result carries the sigma map into `coarse`.
Fan simplicial_refinement(const Fan& coarse, const std::vector<int>& ray_order = {});

/// Selected cones; throws InputError if the selection is not closed under
/// faces. The ray table is kept.
Fan subfan(const Fan& f, const std::function<bool(const Cone&)>& keep);

/// Smallest cone of the normal fan containing the cone spanned by `rays`
/// (ambient vectors): the normal cone of the face of P minimized by their sum.
int carrier_cone(const TruncatedNormalFan& nf, const LatticePolytope& p,
                 const std::vector<IVec>& rays);

/// User supplied refinement of (a subfan of) the truncated normal fan: cones
/// as lists of ambient ray vectors. Sigma is computed when `sigma` is empty and
/// checked otherwise. Validates face closure, that each cone lies in its
/// sigma cone, and the Euler count of each refined relative interior.
Fan refinement_from_input(const TruncatedNormalFan& nf, const LatticePolytope& p,
                          const std::vector<std::vector<IVec>>& cones,
                          const std::vector<int>& sigma = {});

/// Checks that every refined cone lies in its sigma cone and that sigma is
/// the smallest such cone.
bool sigma_map_valid(const Fan& refined, const Fan& coarse);

}  // namespace limhodge
