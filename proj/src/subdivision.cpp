#include "limhodge/subdivision.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "limhodge/errors.hpp"

namespace limhodge {

Subdivision Subdivision::from_maximal_cells(const LatticePolytope& p,
                                            const std::vector<std::vector<IVec>>& maximal) {
  if (p.is_empty()) throw InputError("subdivision of the empty polytope");
  if (maximal.empty()) throw InputError("subdivision without cells");
  Subdivision s;
  s.p_ = std::make_shared<const LatticePolytope>(p);
  s.faces_ = std::make_shared<const FaceLattice>(p);
  const int d = p.dim();

  std::vector<LatticePolytope> max_polys;
  std::set<IVec> pts;
  for (const auto& m : maximal) {
    if (m.empty()) throw InputError("empty maximal cell");
    LatticePolytope c = LatticePolytope::hull(m);
    if (c.ambient_dim() != p.ambient_dim()) throw InputError("cell in the wrong ambient dimension");
    if (c.dim() != d) throw InputError("maximal cell is not full dimensional in P");
    for (const auto& v : c.vertices()) {
      if (!p.contains(v)) throw InputError("cell vertex outside P");
      pts.insert(v);
    }
    max_polys.push_back(std::move(c));
  }
  s.points_.assign(pts.begin(), pts.end());
  auto id_of = [&](const IVec& x) {
    auto it = std::lower_bound(s.points_.begin(), s.points_.end(), x);
    return static_cast<int>(it - s.points_.begin());
  };

  std::map<std::vector<int>, int> cell_dims;
  for (const auto& c : max_polys) {
    FaceLattice fl(c);
    for (int f = 0; f < fl.size(); ++f) {
      std::vector<int> ids;
      for (int v : fl.vertices_of(f)) ids.push_back(id_of(c.vertices()[v]));
      std::sort(ids.begin(), ids.end());
      cell_dims.emplace(std::move(ids), fl.dim(f));
    }
  }
  std::vector<std::pair<int, std::vector<int>>> order;
  for (auto& [ids, dim] : cell_dims) order.emplace_back(dim, ids);
  std::sort(order.begin(), order.end());

  for (const auto& x : s.points_) s.point_facets_.push_back(p.tight_facets(x));
  const FaceLattice& fl = *s.faces_;
  for (auto& [dim, ids] : order) {
    Cell c;
    c.points = ids;
    c.dim = dim;
    if (ids.empty()) {
      c.carrier = fl.bottom();
    } else {
      std::vector<int> common = s.point_facets_[ids[0]];
      for (int i : ids) {
        std::vector<int> next;
        const auto& t = s.point_facets_[i];
        std::set_intersection(common.begin(), common.end(), t.begin(), t.end(),
                              std::back_inserter(next));
        common = std::move(next);
      }
      c.carrier = -1;
      for (int q = 1; q < fl.size(); ++q)
        if (fl.facets_of(q) == common) {
          c.carrier = q;
          break;
        }
      if (c.carrier < 0) throw ComputationError("no carrier face for a cell");
    }
    c.boundary = c.carrier != fl.top();
    std::vector<IVec> vs;
    for (int i : ids) vs.push_back(s.points_[i]);
    s.cell_polys_.push_back(vs.empty() ? LatticePolytope::empty(p.ambient_dim())
                                       : LatticePolytope::hull(vs));
    s.cells_.push_back(std::move(c));
  }

  std::vector<std::vector<int>> sets;
  std::vector<int> ranks;
  for (const auto& c : s.cells_) {
    sets.push_back(c.points);
    ranks.push_back(c.dim + 1);
  }
  s.poset_ = std::make_shared<const EulerianPoset>(EulerianPoset::from_sets(sets, ranks));

  // Volume accounting and wall pairing.
  Integer vol = 0;
  for (const auto& c : max_polys) vol += c.normalized_volume();
  if (vol != p.normalized_volume())
    throw InputError("maximal cells do not tile P (volume mismatch)");
  std::vector<int> maxes = s.maximal_cells();
  if (maxes.size() != max_polys.size()) throw InputError("a maximal cell is a face of another cell");
  for (int w = 0; w < s.num_cells(); ++w) {
    if (s.cells_[w].dim != d - 1) continue;
    int count = 0;
    for (int m : maxes)
      if (s.poset_->leq(w, m)) ++count;
    if (count != (s.cells_[w].boundary ? 1 : 2))
      throw InputError("cells do not form a subdivision (bad wall incidence)");
  }
  return s;
}

Subdivision Subdivision::trivial(const LatticePolytope& p) {
  return from_maximal_cells(p, {p.vertices()});
}

std::vector<int> Subdivision::maximal_cells() const {
  std::vector<int> out;
  for (int c = 0; c < num_cells(); ++c)
    if (cells_[c].dim == p_->dim()) out.push_back(c);
  return out;
}

bool Subdivision::is_trivial() const { return maximal_cells().size() == 1; }

int Subdivision::find_cell(std::vector<IVec> vertices) const {
  std::vector<int> ids;
  for (const auto& v : vertices) {
    auto it = std::lower_bound(points_.begin(), points_.end(), v);
    if (it == points_.end() || *it != v) return -1;
    ids.push_back(static_cast<int>(it - points_.begin()));
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int c = 0; c < num_cells(); ++c)
    if (cells_[c].points == ids) return c;
  return -1;
}

bool Subdivision::cell_in_face(int c, int q) const { return faces_->leq(cells_[c].carrier, q); }

bool Subdivision::cell_meets_face(int c, int q) const {
  if (q == faces_->bottom()) return false;
  const auto& need = faces_->facets_of(q);
  for (int i : cells_[c].points) {
    const auto& have = point_facets_[i];
    if (std::includes(have.begin(), have.end(), need.begin(), need.end())) return true;
  }
  return false;
}

Subdivision Subdivision::restrict(int face) const {
  if (face < 0 || face >= faces_->size()) throw InputError("restriction to a non-face");
  if (face == faces_->bottom()) throw InputError("restriction to the empty face");
  if (face == faces_->top()) return *this;
  LatticePolytope q = p_->sub_polytope(faces_->vertices_of(face));
  std::vector<std::vector<IVec>> maximal;
  for (int c = 0; c < num_cells(); ++c) {
    if (cells_[c].dim != faces_->dim(face) || !cell_in_face(c, face)) continue;
    std::vector<IVec> vs;
    for (int i : cells_[c].points) vs.push_back(points_[i]);
    maximal.push_back(std::move(vs));
  }
  return from_maximal_cells(q, maximal);
}

Subdivision Subdivision::normalized() const {
  if (p_->is_full_dimensional() && p_->chart().is_identity()) return *this;
  const AffineChart& chart = p_->chart();
  std::vector<std::vector<IVec>> maximal;
  for (int c : maximal_cells()) {
    std::vector<IVec> vs;
    for (int i : cells_[c].points) vs.push_back(chart.local(points_[i]));
    maximal.push_back(std::move(vs));
  }
  return from_maximal_cells(p_->normalized(), maximal);
}

Integer Subdivision::euler_sum(int face) const {
  Integer total = 0;
  for (int c = 0; c < num_cells(); ++c) {
    if (!is_interior(c) || cell_meets_face(c, face)) continue;
    total += (cells_[c].dim % 2 == 0) ? 1 : -1;
  }
  return total;
}

bool Subdivision::euler_relation_holds(int face) const {
  Integer expected = 0;
  if (face == faces_->bottom()) expected = (p_->dim() % 2 == 0) ? 1 : -1;
  return euler_sum(face) == expected;
}

Subdivision regular_subdivision(const std::vector<HeightPoint>& heights) {
  if (heights.empty()) throw InputError("no points given");
  std::vector<IVec> coords;
  for (const auto& h : heights) coords.push_back(h.coords);
  std::vector<IVec> sorted = coords;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("a point is listed twice");
  LatticePolytope p = LatticePolytope::hull(coords);
  return regular_subdivision(p, heights);
}

Subdivision regular_subdivision(const LatticePolytope& p, const std::vector<HeightPoint>& heights) {
  std::vector<IVec> coords;
  for (const auto& h : heights) coords.push_back(h.coords);
  if (coords.empty() || !(LatticePolytope::hull(coords) == p))
    throw InputError("the points carrying heights do not have P as convex hull");
  const int d = p.dim();
  if (d == 0) return Subdivision::trivial(p);

  Integer den = 1;
  for (const auto& h : heights) {
    Rational q = h.height;
    q.canonicalize();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<IVec> lifted;
  for (const auto& h : heights) {
    Rational q = h.height * Rational(den);
    q.canonicalize();
    Integer num = q.get_num();
    if (!num.fits_slong_p()) throw ComputationError("height too large");
    IVec z = p.chart().local(h.coords);
    z.push_back(checked(num.get_si()));
    lifted.push_back(std::move(z));
  }
  LatticePolytope up = LatticePolytope::hull(lifted);
  if (up.dim() < d + 1) return Subdivision::trivial(p);

  std::vector<std::vector<IVec>> maximal;
  for (const auto& f : up.facets()) {
    if (f.normal[d] <= 0) continue;
    std::vector<IVec> cell;
    for (int v : f.vertices) {
      IVec z = up.vertices()[v];
      z.pop_back();
      cell.push_back(p.chart().ambient(z));
    }
    maximal.push_back(std::move(cell));
  }
  return Subdivision::from_maximal_cells(p, maximal);
}

LaurentPoly link_h_polynomial(const Subdivision& s, int cell, int face) {
  if (face < 0) face = s.faces().top();
  if (cell < 0 || cell >= s.num_cells()) throw InputError("not a cell of the subdivision");
  if (!s.cell_in_face(cell, face)) throw InputError("cell does not lie in the face");
  const int dq = s.faces().dim(face);
  const int k = dq - s.cell(cell).dim;
  const EulerianPoset& b = s.poset();
  LaurentPoly r;
  for (int c : b.up_set(cell)) {
    if (!s.cell_in_face(c, face)) continue;
    r += t_minus_one_pow(dq - s.cell(c).dim) * b.g(cell, c);
  }
  Exponent sh{};
  sh[static_cast<int>(Var::T)] = k;
  LaurentPoly h = substitute(r, subs::invert({Var::T})).shifted(sh);
  if (!h.is_polynomial()) throw ComputationError("link h-polynomial is not a polynomial");
  return h;
}

}  // namespace limhodge
