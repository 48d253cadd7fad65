#include "limhodge/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "limhodge/errors.hpp"
#include "limhodge/kernels.hpp"
#include "limhodge/poset.hpp"

namespace limhodge {

// ---------------------------------------------------------------- chart

IVec AffineChart::local(const IVec& x) const {
  IVec diff = sub(x, origin);
  IVec z(dim, 0);
  for (int j = 0; j < dim; ++j) {
    __int128 s = 0;
    for (int i = 0; i < ambient_dim; ++i) s += static_cast<__int128>(diff[i]) * to_local[i][j];
    z[j] = checked(s);
  }
  return z;
}

IVec AffineChart::ambient(const IVec& z) const {
  IVec x = origin;
  for (int i = 0; i < ambient_dim; ++i) {
    __int128 s = x[i];
    for (int j = 0; j < dim; ++j) s += static_cast<__int128>(z[j]) * from_local[j][i];
    x[i] = checked(s);
  }
  return x;
}

bool AffineChart::in_span(const IVec& x) const {
  if (dim < 0) return false;
  return ambient(local(x)) == x;
}

bool AffineChart::is_identity() const {
  if (dim != ambient_dim) return false;
  for (i64 c : origin)
    if (c != 0) return false;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (to_local[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

namespace {

AffineChart make_chart(const std::vector<IVec>& pts) {
  AffineChart c;
  const int n = static_cast<int>(pts[0].size());
  c.ambient_dim = n;
  IMat diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
  IMat w, w_inv;
  int d = diffs.empty() ? 0 : column_hermite(diffs, w, w_inv);
  c.dim = d;
  if (d == n) {
    c.origin.assign(n, 0);
    c.to_local.assign(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) c.to_local[i][i] = 1;
    c.from_local = c.to_local;
    return c;
  }
  c.origin = pts[0];
  c.to_local.assign(n, IVec(d, 0));
  c.from_local.assign(d, IVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) c.to_local[i][j] = w[i][j];
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < n; ++i) c.from_local[j][i] = w_inv[j][i];
  return c;
}

// Facets of the hull of full-dimensional points in Z^d, by exhaustive search
// over d-subsets. Each facet is returned with the indices of all points on it.
struct RawFacet {
  IVec normal;
  i64 rhs;
  std::vector<int> points;
};

std::vector<RawFacet> raw_facets(const std::vector<IVec>& pts, int d) {
  std::vector<RawFacet> out;
  const int m = static_cast<int>(pts.size());
  if (d == 0) return out;
  std::vector<std::vector<char>> on_facet;  // membership table per found facet
  std::vector<int> idx(d);

  auto try_subset = [&]() {
    for (const auto& mem : on_facet) {
      bool all = true;
      for (int i : idx)
        if (!mem[i]) { all = false; break; }
      if (all) return;
    }
    IMat rows;
    for (int k = 1; k < d; ++k) rows.push_back(sub(pts[idx[k]], pts[idx[0]]));
    IVec a = cofactor_normal(rows);
    bool zero = true;
    for (i64 x : a)
      if (x) { zero = false; break; }
    if (zero) return;
    a = primitive(a);
    i64 b = dot(a, pts[idx[0]]);
    bool pos = false, neg = false;
    for (int i = 0; i < m && !(pos && neg); ++i) {
      i64 v = dot(a, pts[i]);
      if (v > b) pos = true;
      if (v < b) neg = true;
    }
    if (pos && neg) return;
    if (neg) {
      for (i64& x : a) x = -x;
      b = -b;
    }
    RawFacet f{a, b, {}};
    std::vector<char> mem(m, 0);
    for (int i = 0; i < m; ++i)
      if (dot(a, pts[i]) == b) {
        f.points.push_back(i);
        mem[i] = 1;
      }
    on_facet.push_back(std::move(mem));
    out.push_back(std::move(f));
  };

  // Lexicographic d-combinations.
  for (int k = 0; k < d; ++k) idx[k] = k;
  if (m < d) return out;
  while (true) {
    try_subset();
    int k = d - 1;
    while (k >= 0 && idx[k] == m - d + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- polytope

LatticePolytope LatticePolytope::empty(int ambient_dim) {
  LatticePolytope p;
  p.chart_.ambient_dim = ambient_dim;
  p.chart_.dim = -1;
  return p;
}

LatticePolytope LatticePolytope::hull(std::vector<IVec> points) {
  if (points.empty()) throw InputError("convex hull of an empty point set");
  const std::size_t n = points[0].size();
  for (const auto& p : points)
    if (p.size() != n) throw InputError("points of differing dimension");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  LatticePolytope P;
  P.chart_ = make_chart(points);
  const int d = P.chart_.dim;
  std::vector<IVec> local;
  local.reserve(points.size());
  for (const auto& p : points) local.push_back(P.chart_.local(p));

  std::vector<RawFacet> raw = raw_facets(local, d);

  // A point is a vertex iff the normals of the facets through it span R^d.
  std::vector<int> vertex_of_point(points.size(), -1);
  std::vector<int> vertex_points;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool is_vertex;
    if (d == 0) {
      is_vertex = true;
    } else {
      IMat normals;
      for (const auto& f : raw)
        if (std::binary_search(f.points.begin(), f.points.end(), static_cast<int>(i)))
          normals.push_back(f.normal);
      is_vertex = rank(normals) == d;
    }
    if (is_vertex) {
      vertex_of_point[i] = static_cast<int>(vertex_points.size());
      vertex_points.push_back(static_cast<int>(i));
    }
  }
  for (int i : vertex_points) {
    P.vertices_.push_back(points[i]);
    P.local_vertices_.push_back(local[i]);
  }
  for (auto& f : raw) {
    Facet g{std::move(f.normal), f.rhs, {}};
    for (int i : f.points)
      if (vertex_of_point[i] >= 0) g.vertices.push_back(vertex_of_point[i]);
    P.facets_.push_back(std::move(g));
  }
  std::sort(P.facets_.begin(), P.facets_.end(),
            [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });
  return P;
}

bool LatticePolytope::contains(const IVec& x) const {
  if (is_empty() || static_cast<int>(x.size()) != ambient_dim()) return false;
  if (!chart_.in_span(x)) return false;
  IVec z = chart_.local(x);
  if (dim() == 0) return true;
  for (const auto& f : facets_)
    if (dot(f.normal, z) < f.rhs) return false;
  return true;
}

bool LatticePolytope::in_relative_interior(const IVec& x) const {
  if (!contains(x)) return false;
  IVec z = chart_.local(x);
  for (const auto& f : facets_)
    if (dot(f.normal, z) == f.rhs) return false;
  return true;
}

std::vector<int> LatticePolytope::tight_facets(const IVec& x) const {
  std::vector<int> out;
  IVec z = chart_.local(x);
  for (std::size_t i = 0; i < facets_.size(); ++i)
    if (dot(facets_[i].normal, z) == facets_[i].rhs) out.push_back(static_cast<int>(i));
  return out;
}

LatticePolytope::Box LatticePolytope::local_box() const {
  Box b{local_vertices_[0], local_vertices_[0]};
  for (const auto& v : local_vertices_)
    for (int i = 0; i < dim(); ++i) {
      b.lo[i] = std::min(b.lo[i], v[i]);
      b.hi[i] = std::max(b.hi[i], v[i]);
    }
  return b;
}

namespace {

HalfspaceSystem dilate_system(const std::vector<Facet>& facets, int d, const IVec& lo,
                              const IVec& hi, int m, bool strict) {
  HalfspaceSystem s;
  s.dim = d;
  for (const auto& f : facets) {
    s.a.push_back(f.normal);
    i64 b = cmul(f.rhs, m);
    s.b.push_back(strict ? cadd(b, 1) : b);
  }
  for (int i = 0; i < d; ++i) {
    s.lo.push_back(cmul(lo[i], m));
    s.hi.push_back(cmul(hi[i], m));
  }
  return s;
}

}  // namespace

Integer LatticePolytope::lattice_point_count(int m) const {
  if (m < 0) throw InputError("negative dilation factor");
  if (is_empty()) return 0;
  if (m == 0 || dim() == 0) return 1;
  Box b = local_box();
  return Integer(static_cast<long>(
      count_lattice_points_parallel(dilate_system(facets_, dim(), b.lo, b.hi, m, false))));
}

Integer LatticePolytope::interior_lattice_point_count(int m) const {
  if (m < 0) throw InputError("negative dilation factor");
  if (is_empty()) return 0;
  if (dim() == 0) return 1;
  if (m == 0) return 0;
  Box b = local_box();
  return Integer(static_cast<long>(
      count_lattice_points_parallel(dilate_system(facets_, dim(), b.lo, b.hi, m, true))));
}

std::vector<IVec> LatticePolytope::lattice_points() const {
  if (is_empty()) return {};
  if (dim() == 0) return vertices_;
  Box b = local_box();
  std::vector<IVec> out;
  for (const auto& z : enumerate_lattice_points(dilate_system(facets_, dim(), b.lo, b.hi, 1, false)))
    out.push_back(chart_.ambient(z));
  std::sort(out.begin(), out.end());
  return out;
}

Integer LatticePolytope::normalized_volume() const {
  if (is_empty()) return 0;
  if (dim() == 0) return 1;
  // Pyramid decomposition from the first vertex.
  const IVec& v0 = local_vertices_[0];
  Integer total = 0;
  for (const auto& f : facets_) {
    i64 height = dot(f.normal, v0) - f.rhs;
    if (height == 0) continue;
    total += Integer(static_cast<long>(height)) * sub_polytope(f.vertices).normalized_volume();
  }
  return total;
}

LatticePolytope LatticePolytope::normalized() const {
  if (is_empty()) return empty(0);
  return hull(local_vertices_);
}

LatticePolytope LatticePolytope::sub_polytope(const std::vector<int>& vertex_ids) const {
  if (vertex_ids.empty()) return empty(ambient_dim());
  std::vector<IVec> pts;
  for (int i : vertex_ids) pts.push_back(vertices_.at(i));
  return hull(std::move(pts));
}

std::string LatticePolytope::to_string() const {
  std::ostringstream os;
  os << "conv{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) os << ", ";
    os << "(";
    for (std::size_t j = 0; j < vertices_[i].size(); ++j) os << (j ? "," : "") << vertices_[i][j];
    os << ")";
  }
  os << "}";
  return os.str();
}

int affine_dimension(const std::vector<IVec>& points) {
  if (points.empty()) return -1;
  IMat diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  return rank(std::move(diffs));
}

// ---------------------------------------------------------------- faces

FaceLattice::FaceLattice(const LatticePolytope& p) {
  if (p.is_empty()) {
    faces_ = {{}};
    dims_ = {-1};
    facets_of_ = {{}};
    return;
  }
  num_vertices_ = static_cast<int>(p.vertices().size());
  std::vector<int> all(num_vertices_);
  for (int i = 0; i < num_vertices_; ++i) all[i] = i;

  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> frontier;
  for (const auto& f : p.facets())
    if (found.insert(f.vertices).second) frontier.push_back(f.vertices);
  std::vector<std::vector<int>> facet_sets(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& a : frontier)
      for (const auto& b : facet_sets) {
        std::vector<int> c;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
        if (found.insert(c).second) next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }
  found.insert(std::vector<int>{});
  found.insert(all);

  std::vector<std::pair<int, std::vector<int>>> keyed;
  for (const auto& s : found) {
    std::vector<IVec> pts;
    for (int i : s) pts.push_back(p.local_vertices()[i]);
    keyed.emplace_back(affine_dimension(pts), s);
  }
  std::sort(keyed.begin(), keyed.end());
  for (auto& [d, s] : keyed) {
    dims_.push_back(d);
    faces_.push_back(std::move(s));
  }
  for (const auto& s : faces_) {
    std::vector<int> fs;
    for (std::size_t i = 0; i < p.facets().size(); ++i) {
      const auto& fv = p.facets()[i].vertices;
      if (std::includes(fv.begin(), fv.end(), s.begin(), s.end())) fs.push_back(static_cast<int>(i));
    }
    facets_of_.push_back(std::move(fs));
  }
}

int FaceLattice::find(const std::vector<int>& vertex_ids) const {
  for (int i = 0; i < size(); ++i)
    if (faces_[i] == vertex_ids) return i;
  return -1;
}

int FaceLattice::closure(const std::vector<int>& vertex_ids) const {
  std::vector<int> s = vertex_ids;
  std::sort(s.begin(), s.end());
  for (int i = 0; i < size(); ++i)
    if (std::includes(faces_[i].begin(), faces_[i].end(), s.begin(), s.end())) return i;
  return top();
}

bool FaceLattice::leq(int a, int b) const {
  return std::includes(faces_[b].begin(), faces_[b].end(), faces_[a].begin(), faces_[a].end());
}

std::vector<int> FaceLattice::count_by_dim() const {
  std::vector<int> c(dims_.back() + 2, 0);
  for (int d : dims_) ++c[d + 1];
  return c;
}

EulerianPoset FaceLattice::poset() const {
  std::vector<int> ranks;
  for (int d : dims_) ranks.push_back(d + 1);
  return EulerianPoset::from_sets(faces_, ranks);
}

// ---------------------------------------------------------------- duality

DualPolytope dual_polytope(const LatticePolytope& p) {
  if (p.is_empty() || !p.is_full_dimensional() || p.dim() == 0)
    throw InputError("dual polytope needs a full-dimensional polytope of positive dimension");
  DualPolytope out;
  out.reflexive = true;
  for (const auto& f : p.facets()) {
    if (f.rhs >= 0) throw InputError("origin is not in the interior of the polytope");
    std::vector<Rational> y;
    for (i64 a : f.normal) {
      Rational q(Integer(static_cast<long>(a)), Integer(static_cast<long>(-f.rhs)));
      q.canonicalize();
      y.push_back(q);
    }
    if (f.rhs != -1) out.reflexive = false;
    out.vertices.push_back(std::move(y));
  }
  if (!out.reflexive) return out;

  std::vector<IVec> pts;
  for (const auto& f : p.facets()) pts.push_back(f.normal);
  LatticePolytope dual = LatticePolytope::hull(pts);
  std::vector<int> vertex_of_facet;
  for (const auto& f : p.facets()) {
    auto it = std::find(dual.vertices().begin(), dual.vertices().end(), f.normal);
    if (it == dual.vertices().end()) throw ComputationError("dual vertex missing from hull");
    vertex_of_facet.push_back(static_cast<int>(it - dual.vertices().begin()));
  }
  FaceLattice fl(p), dfl(dual);
  if (fl.size() != dfl.size()) throw ComputationError("face lattices of P and P* differ in size");
  std::vector<char> hit(dfl.size(), 0);
  for (int q = 0; q < fl.size(); ++q) {
    std::vector<int> vs;
    for (int fi : fl.facets_of(q)) vs.push_back(vertex_of_facet[fi]);
    std::sort(vs.begin(), vs.end());
    int image = dfl.find(vs);
    if (image < 0 || hit[image]) throw ComputationError("dual face correspondence is not a bijection");
    if (dfl.dim(image) != p.dim() - 1 - fl.dim(q))
      throw ComputationError("dual face correspondence does not reverse dimensions");
    hit[image] = 1;
    out.face_map.push_back(image);
  }
  for (int a = 0; a < fl.size(); ++a)
    for (int b = 0; b < fl.size(); ++b)
      if (fl.leq(a, b) != dfl.leq(out.face_map[b], out.face_map[a]))
        throw ComputationError("dual face correspondence is not inclusion reversing");
  out.polytope = std::move(dual);
  return out;
}

bool is_reflexive(const LatticePolytope& p) { return dual_polytope(p).reflexive; }

}  // namespace limhodge
