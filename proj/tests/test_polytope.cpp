#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "limhodge/errors.hpp"

using namespace limhodge;
using namespace fx;

namespace {

i64 det3(const IVec& a, const IVec& b, const IVec& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

IVec cross(const IVec& a, const IVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool same_sign_or_zero(i64 x, i64 y) { return (x >= 0 && y >= 0) || (x <= 0 && y <= 0); }

bool in_segment(const IVec& p, const IVec& a, const IVec& b) {
  const IVec ab = sub(b, a), ap = sub(p, a);
  if (cross(ab, ap) != IVec{0, 0, 0}) return false;
  const i64 s = dot(ap, ab);
  return s >= 0 && s <= dot(ab, ab);
}

bool in_triangle(const IVec& p, const IVec& a, const IVec& b, const IVec& c) {
  const IVec n = cross(sub(b, a), sub(c, a));
  if (n == IVec{0, 0, 0} || dot(n, sub(p, a)) != 0) return false;
  const i64 s1 = dot(n, cross(sub(b, a), sub(p, a)));
  const i64 s2 = dot(n, cross(sub(c, b), sub(p, b)));
  const i64 s3 = dot(n, cross(sub(a, c), sub(p, c)));
  return s1 >= 0 && s2 >= 0 && s3 >= 0;
}

bool in_tetrahedron(const IVec& p, const IVec& a, const IVec& b, const IVec& c, const IVec& d) {
  const i64 v = det3(sub(b, a), sub(c, a), sub(d, a));
  if (v == 0) return false;
  return same_sign_or_zero(det3(sub(b, p), sub(c, p), sub(d, p)), v) &&
         same_sign_or_zero(det3(sub(p, a), sub(c, a), sub(d, a)), v) &&
         same_sign_or_zero(det3(sub(b, a), sub(p, a), sub(d, a)), v) &&
         same_sign_or_zero(det3(sub(b, a), sub(c, a), sub(p, a)), v);
}

// Caratheodory: p is a convex combination of the others iff it lies in a
// segment, triangle or tetrahedron spanned by at most four of them.
bool is_vertex_brute(const std::vector<IVec>& pts, std::size_t k) {
  std::vector<IVec> o;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (i != k) o.push_back(pts[i]);
  const IVec& p = pts[k];
  const std::size_t n = o.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (in_segment(p, o[a], o[b])) return false;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (in_triangle(p, o[a], o[b], o[c])) return false;
        for (std::size_t d = c + 1; d < n; ++d)
          if (in_tetrahedron(p, o[a], o[b], o[c], o[d])) return false;
      }
    }
  return true;
}

}  // namespace

TEST_CASE("hull") {
  LatticePolytope p = LatticePolytope::hull({{0, 0}, {4, 0}, {0, 4}, {1, 1}, {2, 1}, {1, 2}});
  CHECK(p.dim() == 2);
  CHECK(p.vertices() == std::vector<IVec>{{0, 0}, {0, 4}, {4, 0}});
  LatticePolytope pt = LatticePolytope::hull({{0, 0}});
  CHECK(pt.dim() == 0);
  CHECK(pt.vertices().size() == 1);
  CHECK(LatticePolytope::empty(2).is_empty());
}

TEST_CASE("vertices against a convexity certificate") {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<i64> c(0, 10);
  for (int round = 0; round < 3; ++round) {
    std::set<IVec> distinct;
    while (distinct.size() < 30) distinct.insert({c(rng), c(rng), c(rng)});
    std::vector<IVec> pts(distinct.begin(), distinct.end());
    std::vector<IVec> expected;
    for (std::size_t k = 0; k < pts.size(); ++k)
      if (is_vertex_brute(pts, k)) expected.push_back(pts[k]);
    std::sort(expected.begin(), expected.end());
    CHECK(LatticePolytope::hull(pts).vertices() == expected);
  }
}

TEST_CASE("face lattice") {
  CHECK(FaceLattice(box(2, 0, 1)).size() == 10);
  CHECK(FaceLattice(simplex(2, 4)).size() == 8);
  CHECK(FaceLattice(box(3, 0, 1)).count_by_dim() == std::vector<int>{1, 8, 12, 6, 1});
  CHECK(FaceLattice(octahedron()).count_by_dim() == std::vector<int>{1, 6, 12, 8, 1});
  CHECK(FaceLattice(LatticePolytope::hull({{0, 0}})).size() == 2);
  FaceLattice fl(box(3, 0, 1));
  // Every face is the intersection of the facets containing it.
  for (int f = 1; f < fl.size(); ++f) CHECK(fl.closure(fl.vertices_of(f)) == f);
}

TEST_CASE("lattice point counts") {
  CHECK(box(2, 0, 1).lattice_point_count(3) == 16);
  CHECK(simplex(2, 4).lattice_point_count(1) == 15);
  CHECK(brute_count(simplex(2, 4), 1) == 15);
  CHECK(LatticePolytope::empty(2).lattice_point_count(5) == 0);
  CHECK(LatticePolytope::hull({{0, 0}, {4, 0}}).interior_lattice_point_count() == 3);
  CHECK(LatticePolytope::hull({{1, 1}, {2, 1}, {1, 2}}).interior_lattice_point_count() == 0);
  CHECK(LatticePolytope::hull({{0, 0}, {4, 0}, {2, 1}, {1, 1}}).interior_lattice_point_count() == 0);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<i64> c(-3, 3);
  for (int i = 0; i < 15; ++i) {
    const int d = 1 + i % 3;
    std::vector<IVec> pts;
    for (int k = 0; k < d + 3; ++k) {
      IVec x(d);
      for (auto& y : x) y = c(rng);
      pts.push_back(x);
    }
    LatticePolytope p = LatticePolytope::hull(pts);
    for (int m = 0; m <= 3; ++m) CHECK(p.lattice_point_count(m) == brute_count(p, m));
    CHECK(p.lattice_points().size() == p.lattice_point_count(1).get_ui());
  }
}

TEST_CASE("normalization to the intrinsic lattice") {
  LatticePolytope a = LatticePolytope::hull({{0, 0}, {0, 3}}).normalized();
  CHECK(a.ambient_dim() == 1);
  CHECK(a.lattice_point_count() == 4);
  LatticePolytope b = LatticePolytope::hull({{0, 0}, {2, 2}}).normalized();
  CHECK(b.ambient_dim() == 1);
  CHECK(b.normalized_volume() == 2);
  LatticePolytope c = box(2, 0, 1);
  CHECK(c.chart().is_identity());
  CHECK(c.normalized() == c);
  // A triangle in a plane of Z^3 keeps its point count.
  LatticePolytope tri = LatticePolytope::hull({{1, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  CHECK(tri.normalized().lattice_point_count(2) == tri.lattice_point_count(2));
  CHECK(tri.normalized().ambient_dim() == 2);
}

TEST_CASE("polar duals") {
  DualPolytope d = dual_polytope(LatticePolytope::hull({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
  CHECK(d.reflexive);
  CHECK(d.polytope->vertices() == std::vector<IVec>{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}});
  DualPolytope e = dual_polytope(box(2, -1, 1));
  CHECK(e.reflexive);
  CHECK(dual_polytope(*e.polytope).polytope->vertices() == box(2, -1, 1).vertices());
  DualPolytope f = dual_polytope(LatticePolytope::hull({{1, 0}, {-1, 0}, {0, 2}, {0, -2}}));
  CHECK_FALSE(f.reflexive);
  bool has_half = false;
  for (const auto& v : f.vertices)
    if (v[0] == 1 && v[1] == Rational(1, 2)) has_half = true;
  CHECK(has_half);
  CHECK_THROWS_AS(dual_polytope(simplex(2)), InputError);
  // The face map reverses inclusion and is a bijection.
  const LatticePolytope oct = octahedron();
  DualPolytope od = dual_polytope(oct);
  FaceLattice a(oct), b(*od.polytope);
  std::set<int> image(od.face_map.begin(), od.face_map.end());
  CHECK(static_cast<int>(image.size()) == a.size());
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (a.leq(x, y)) CHECK(b.leq(od.face_map[y], od.face_map[x]));
}
