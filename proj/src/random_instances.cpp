#include "limhodge/random_instances.hpp"

#include "limhodge/errors.hpp"

namespace limhodge {

LatticePolytope random_polytope(std::mt19937_64& rng, int dim) {
  if (dim < 1 || dim > 4) throw InputError("random polytopes are generated in dimensions 1..4");
  const int box = dim <= 2 ? 4 : 3;
  std::uniform_int_distribution<int> coord(0, box);
  std::uniform_int_distribution<int> extra(1, 4);
  while (true) {
    const int count = dim + extra(rng);
    std::vector<IVec> pts;
    for (int i = 0; i < count; ++i) {
      IVec x(dim);
      for (auto& c : x) c = coord(rng);
      pts.push_back(std::move(x));
    }
    if (affine_dimension(pts) == dim) return LatticePolytope::hull(std::move(pts));
  }
}

std::vector<HeightPoint> random_heights(std::mt19937_64& rng, int dim) {
  LatticePolytope p = random_polytope(rng, dim);
  std::uniform_int_distribution<int> num(0, 6), den(1, 3);
  std::vector<HeightPoint> out;
  for (auto& x : p.lattice_points()) {
    const int a = num(rng);
    const int b = den(rng);
    Rational h(a, b);
    h.canonicalize();
    out.push_back({std::move(x), h});
  }
  return out;
}

Subdivision random_subdivision(std::mt19937_64& rng, int dim) {
  return regular_subdivision(random_heights(rng, dim));
}

}  // namespace limhodge
