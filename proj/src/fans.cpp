#include "limhodge/fans.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "limhodge/errors.hpp"

namespace limhodge {

namespace {

// Ray subsets forming the facets of the cone spanned by `rays`.
std::vector<std::vector<int>> cone_facets(const std::vector<IVec>& all_rays,
                                          const std::vector<int>& ids, int ambient) {
  std::vector<IVec> pts{IVec(ambient, 0)};
  for (int r : ids) pts.push_back(all_rays[r]);
  LatticePolytope hull = LatticePolytope::hull(pts);
  IMat gens;
  for (int r : ids) gens.push_back(all_rays[r]);
  // A pointed cone of dimension k makes conv(0, rays) k-dimensional too;
  // a line in the cone would show up as 0 not being a vertex.
  if (hull.dim() != rank(gens) || hull.vertices().empty() ||
      std::find(hull.vertices().begin(), hull.vertices().end(), IVec(ambient, 0)) ==
          hull.vertices().end())
    throw InputError("cone is not pointed");
  const IVec zero_local = hull.chart().local(IVec(ambient, 0));
  std::vector<std::vector<int>> out;
  for (const auto& f : hull.facets()) {
    if (dot(f.normal, zero_local) != f.rhs) continue;
    std::vector<int> on;
    for (int r : ids)
      if (dot(f.normal, hull.chart().local(all_rays[r])) == f.rhs) on.push_back(r);
    out.push_back(std::move(on));
  }
  return out;
}

bool cone_contains(const std::vector<IVec>& gens, const IVec& x, int ambient) {
  if (gens.empty()) {
    for (i64 c : x)
      if (c != 0) return false;
    return true;
  }
  std::vector<IVec> pts{IVec(ambient, 0)};
  for (const auto& g : gens) pts.push_back(g);
  LatticePolytope hull = LatticePolytope::hull(pts);
  if (!hull.chart().in_span(x)) return false;
  const IVec zero_local = hull.chart().local(IVec(ambient, 0));
  const IVec xl = hull.chart().local(x);
  for (const auto& f : hull.facets()) {
    if (dot(f.normal, zero_local) != f.rhs) continue;
    if (dot(f.normal, xl) < f.rhs) return false;
  }
  return true;
}

}  // namespace

Fan::Fan(int ambient_dim, std::vector<IVec> rays, std::vector<std::vector<int>> cones)
    : ambient_dim_(ambient_dim), rays_(std::move(rays)) {
  for (const auto& r : rays_) {
    if (static_cast<int>(r.size()) != ambient_dim_) throw InputError("ray of wrong dimension");
    if (primitive(r) != r || std::all_of(r.begin(), r.end(), [](i64 c) { return c == 0; }))
      throw InputError("rays must be nonzero primitive vectors");
  }
  std::set<std::vector<int>> seen;
  std::vector<std::pair<int, std::vector<int>>> keyed;
  for (auto& c : cones) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (int r : c)
      if (r < 0 || r >= static_cast<int>(rays_.size())) throw InputError("cone refers to an unknown ray");
    if (!seen.insert(c).second) continue;
    IMat m;
    for (int r : c) m.push_back(rays_[r]);
    keyed.emplace_back(rank(m), c);
  }
  std::sort(keyed.begin(), keyed.end());
  for (auto& [d, c] : keyed) cones_.push_back(Cone{std::move(c), d});
  if (cones_.empty() || !cones_[0].rays.empty()) throw InputError("fan must contain the zero cone");
  for (const auto& c : cones_) {
    if (c.rays.empty()) continue;
    for (auto& f : cone_facets(rays_, c.rays, ambient_dim_))
      if (!seen.count(f)) throw InputError("fan is not closed under taking faces");
  }
}

int Fan::find(std::vector<int> ray_ids) const {
  std::sort(ray_ids.begin(), ray_ids.end());
  for (int i = 0; i < size(); ++i)
    if (cones_[i].rays == ray_ids) return i;
  return -1;
}

bool Fan::is_simplicial() const {
  for (const auto& c : cones_)
    if (static_cast<int>(c.rays.size()) != c.dim) return false;
  return true;
}

bool Fan::is_face(int a, int b) const {
  const auto& ra = cones_[a].rays;
  const auto& rb = cones_[b].rays;
  return std::includes(rb.begin(), rb.end(), ra.begin(), ra.end());
}

std::vector<int> Fan::facets_of(int c) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (cones_[i].dim == cones_[c].dim - 1 && is_face(i, c)) out.push_back(i);
  return out;
}

TruncatedNormalFan normal_fan_truncated(const LatticePolytope& p) {
  if (p.is_empty() || !p.is_full_dimensional() || p.dim() == 0)
    throw InputError("normal fan needs a full-dimensional polytope of positive dimension");
  FaceLattice faces(p);
  std::vector<IVec> rays;
  for (const auto& f : p.facets()) rays.push_back(f.normal);
  std::vector<int> order(rays.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return rays[a] < rays[b]; });
  std::vector<int> ray_of_facet(rays.size());
  std::vector<IVec> sorted_rays;
  for (std::size_t i = 0; i < order.size(); ++i) {
    ray_of_facet[order[i]] = static_cast<int>(i);
    sorted_rays.push_back(rays[order[i]]);
  }
  std::vector<std::vector<int>> cones;
  std::vector<int> positive_faces;
  for (int q = 0; q < faces.size(); ++q) {
    if (faces.dim(q) <= 0) continue;
    std::vector<int> c;
    for (int f : faces.facets_of(q)) c.push_back(ray_of_facet[f]);
    std::sort(c.begin(), c.end());
    cones.push_back(c);
    positive_faces.push_back(q);
  }
  TruncatedNormalFan out{Fan(p.dim(), sorted_rays, cones), faces, {}, {}};
  out.cone_face.assign(out.fan.size(), -1);
  out.face_cone.assign(faces.size(), -1);
  for (std::size_t i = 0; i < cones.size(); ++i) {
    int c = out.fan.find(cones[i]);
    out.cone_face[c] = positive_faces[i];
    out.face_cone[positive_faces[i]] = c;
  }
  for (int c = 0; c < out.fan.size(); ++c)
    if (out.fan.cones()[c].dim != p.dim() - faces.dim(out.cone_face[c]))
      throw ComputationError("normal cone has the wrong dimension");
  return out;
}

Fan simplicial_refinement(const Fan& coarse, const std::vector<int>& ray_order) {
  const int nr = static_cast<int>(coarse.rays().size());
  std::vector<int> pos(nr);
  if (ray_order.empty()) {
    std::vector<int> order(nr);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return coarse.rays()[a] < coarse.rays()[b]; });
    for (int i = 0; i < nr; ++i) pos[order[i]] = i;
  } else {
    if (static_cast<int>(ray_order.size()) != nr) throw InputError("pulling order must list every ray");
    std::vector<char> seen(nr, 0);
    for (int i = 0; i < nr; ++i) {
      int r = ray_order[i];
      if (r < 0 || r >= nr || seen[r]) throw InputError("pulling order is not a permutation");
      seen[r] = 1;
      pos[r] = i;
    }
  }

  std::map<int, std::vector<std::vector<int>>> memo;
  std::function<const std::vector<std::vector<int>>&(int)> triangulate =
      [&](int c) -> const std::vector<std::vector<int>>& {
    auto it = memo.find(c);
    if (it != memo.end()) return it->second;
    const Cone& cone = coarse.cones()[c];
    std::vector<std::vector<int>> simplices;
    if (static_cast<int>(cone.rays.size()) == cone.dim) {
      simplices.push_back(cone.rays);
    } else {
      int r = *std::min_element(cone.rays.begin(), cone.rays.end(),
                                [&](int a, int b) { return pos[a] < pos[b]; });
      for (int f : coarse.facets_of(c)) {
        const auto& fr = coarse.cones()[f].rays;
        if (std::binary_search(fr.begin(), fr.end(), r)) continue;
        for (const auto& s : triangulate(f)) {
          std::vector<int> t = s;
          t.push_back(r);
          std::sort(t.begin(), t.end());
          simplices.push_back(std::move(t));
        }
      }
    }
    return memo.emplace(c, std::move(simplices)).first->second;
  };

  std::set<std::vector<int>> all;
  for (int c = 0; c < coarse.size(); ++c)
    for (const auto& s : triangulate(c)) {
      const int k = static_cast<int>(s.size());
      for (int mask = 0; mask < (1 << k); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < k; ++i)
          if (mask & (1 << i)) sub.push_back(s[i]);
        all.insert(std::move(sub));
      }
    }
  Fan refined(coarse.ambient_dim(), coarse.rays(),
              std::vector<std::vector<int>>(all.begin(), all.end()));
  std::vector<int> sigma;
  for (const auto& c : refined.cones()) {
    int best = -1;
    for (int k = 0; k < coarse.size(); ++k) {
      const auto& kr = coarse.cones()[k].rays;
      if (!std::includes(kr.begin(), kr.end(), c.rays.begin(), c.rays.end())) continue;
      if (best < 0 || coarse.cones()[k].dim < coarse.cones()[best].dim) best = k;
    }
    if (best < 0) throw ComputationError("refined cone outside the coarse fan");
    sigma.push_back(best);
  }
  refined.set_sigma(std::move(sigma));
  if (!refined.is_simplicial()) throw ComputationError("pulling triangulation is not simplicial");
  return refined;
}

Fan subfan(const Fan& f, const std::function<bool(const Cone&)>& keep) {
  std::vector<std::vector<int>> cones;
  for (const auto& c : f.cones())
    if (keep(c)) cones.push_back(c.rays);
  bool has_zero = std::any_of(cones.begin(), cones.end(), [](const auto& c) { return c.empty(); });
  if (!has_zero) throw InputError("subfan selection must contain the zero cone");
  return Fan(f.ambient_dim(), f.rays(), cones);
}

int carrier_cone(const TruncatedNormalFan& nf, const LatticePolytope& p,
                 const std::vector<IVec>& rays) {
  IVec s(p.ambient_dim(), 0);
  for (const auto& r : rays) s = add(s, r);
  i64 best = 0;
  std::vector<int> argmin;
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    i64 val = dot(s, p.vertices()[v]);
    if (argmin.empty() || val < best) {
      best = val;
      argmin = {static_cast<int>(v)};
    } else if (val == best) {
      argmin.push_back(static_cast<int>(v));
    }
  }
  int q = nf.faces.find(argmin);
  if (q < 0) throw ComputationError("minimizing vertex set is not a face");
  return nf.face_cone[q];
}

Fan refinement_from_input(const TruncatedNormalFan& nf, const LatticePolytope& p,
                          const std::vector<std::vector<IVec>>& cones,
                          const std::vector<int>& sigma) {
  std::vector<IVec> rays;
  for (const auto& c : cones)
    for (const auto& r : c) rays.push_back(r);
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  auto id = [&](const IVec& r) {
    return static_cast<int>(std::lower_bound(rays.begin(), rays.end(), r) - rays.begin());
  };
  std::vector<std::vector<int>> ids;
  bool has_zero = false;
  for (const auto& c : cones) {
    std::vector<int> x;
    for (const auto& r : c) x.push_back(id(r));
    if (x.empty()) has_zero = true;
    ids.push_back(std::move(x));
  }
  if (!has_zero) ids.push_back({});
  Fan f(p.ambient_dim(), rays, ids);

  std::vector<int> computed;
  for (const auto& c : f.cones()) {
    std::vector<IVec> gens;
    for (int r : c.rays) gens.push_back(rays[r]);
    int s = carrier_cone(nf, p, gens);
    if (s < 0) throw InputError("refined cone is not contained in the truncated normal fan");
    // every generator must lie in the carrier cone
    const int q = nf.cone_face[s];
    for (const auto& g : gens) {
      int gq = nf.faces.closure([&] {
        std::vector<int> am;
        i64 best = 0;
        for (std::size_t v = 0; v < p.vertices().size(); ++v) {
          i64 val = dot(g, p.vertices()[v]);
          if (am.empty() || val < best) { best = val; am = {static_cast<int>(v)}; }
          else if (val == best) am.push_back(static_cast<int>(v));
        }
        return am;
      }());
      if (!nf.faces.leq(q, gq)) throw InputError("refined cone is not contained in a single cone");
    }
    computed.push_back(s);
  }
  if (!sigma.empty()) {
    // sigma given in the user's cone order; map to ours
    if (sigma.size() != cones.size()) throw InputError("one sigma index per refined cone is required");
    for (std::size_t i = 0; i < cones.size(); ++i) {
      int c = f.find(ids[i]);
      if (computed[c] != sigma[i]) throw InputError("supplied sigma map disagrees with geometry");
    }
  }
  // Each coarse cone that is hit must be tiled: Euler count of the open cones.
  std::map<int, long> euler;
  for (int c = 0; c < f.size(); ++c) euler[computed[c]] += (f.cones()[c].dim % 2) ? -1 : 1;
  for (const auto& [s, e] : euler) {
    const int d = nf.fan.cones()[s].dim;
    if (e != ((d % 2) ? -1 : 1)) throw InputError("refinement does not tile a cone of the fan");
    for (int t = 0; t < nf.fan.size(); ++t)
      if (nf.fan.is_face(t, s) && !euler.count(t))
        throw InputError("refined support is not a subfan");
  }
  f.set_sigma(std::move(computed));
  return f;
}

bool sigma_map_valid(const Fan& refined, const Fan& coarse) {
  if (!refined.has_sigma()) return false;
  const int n = refined.ambient_dim();
  for (int c = 0; c < refined.size(); ++c) {
    const int s = refined.sigma(c);
    std::vector<IVec> coarse_gens;
    for (int r : coarse.cones()[s].rays) coarse_gens.push_back(coarse.rays()[r]);
    for (int r : refined.cones()[c].rays)
      if (!cone_contains(coarse_gens, refined.rays()[r], n)) return false;
    for (int t : coarse.facets_of(s)) {
      std::vector<IVec> gens;
      for (int r : coarse.cones()[t].rays) gens.push_back(coarse.rays()[r]);
      bool all = true;
      for (int r : refined.cones()[c].rays)
        if (!cone_contains(gens, refined.rays()[r], n)) { all = false; break; }
      if (all) return false;
    }
  }
  return true;
}

}  // namespace limhodge
