#include "limhodge/checks.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "limhodge/dk.hpp"
#include "limhodge/ehrhart.hpp"
#include "limhodge/errors.hpp"
#include "limhodge/fans.hpp"
#include "limhodge/hodge.hpp"
#include "limhodge/invariants.hpp"

namespace limhodge {

namespace {

constexpr int kU = static_cast<int>(Var::U);
constexpr int kV = static_cast<int>(Var::V);
constexpr int kW = static_cast<int>(Var::W);

std::string str(const LaurentPoly& p) { return p.to_string(); }

std::string mismatch(const LaurentPoly& a, const LaurentPoly& b) {
  return str(a) + " != " + str(b);
}

CheckResult equal(const std::string& name, const LaurentPoly& a, const LaurentPoly& b) {
  CheckResult r{name, a == b, "", false};
  if (!r.passed) r.detail = mismatch(a, b);
  return r;
}

// x^{k} p(1/u, 1/v, 1/w) for x = u v w^2 (or u w when mixed).
LaurentPoly palindrome_image(const LaurentPoly& p, int k, bool mixed) {
  Exponent sh{};
  sh[kU] = k;
  sh[kV] = mixed ? 0 : k;
  sh[kW] = mixed ? k : 2 * k;
  return substitute(p, subs::invert({Var::U, Var::V, Var::W})).shifted(sh);
}

std::set<std::vector<IVec>> cone_set(const Fan& f) {
  std::set<std::vector<IVec>> out;
  for (const auto& c : f.cones()) {
    std::vector<IVec> r;
    for (int i : c.rays) r.push_back(f.rays()[i]);
    std::sort(r.begin(), r.end());
    out.insert(r);
  }
  return out;
}

// A second pulling refinement different from the default one, if any: pull
// each ray first in turn, the rest in lexicographic order.
std::optional<Fan> other_refinement(const Fan& coarse, const Fan& first) {
  std::vector<int> lex(coarse.rays().size());
  std::iota(lex.begin(), lex.end(), 0);
  std::sort(lex.begin(), lex.end(), [&](int a, int b) { return coarse.rays()[a] < coarse.rays()[b]; });
  const auto base = cone_set(first);
  for (std::size_t k = 1; k < lex.size(); ++k) {
    std::vector<int> order = lex;
    std::rotate(order.begin(), order.begin() + static_cast<long>(k), order.begin() + static_cast<long>(k) + 1);
    Fan r = simplicial_refinement(coarse, order);
    if (cone_set(r) != base) return r;
  }
  return std::nullopt;
}

// Runs f and turns exceptions into a failed check.
void guarded(std::vector<CheckResult>& out, const std::string& name, const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    out.push_back({name, false, std::string("exception: ") + e.what(), false});
  }
}

bool symmetric_unimodal(const std::vector<Integer>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != a[n - 1 - i]) return false;
  for (std::size_t i = 0; i + 1 < (n + 1) / 2; ++i)
    if (a[i] > a[i + 1]) return false;
  return true;
}

}  // namespace

CheckResult check_inversion(const std::string& name, const EulerianPoset& b) {
  CheckResult r{name, true, "", false};
  long count = 0;
  for (int x = 0; x < b.size() && r.passed; ++x)
    for (int y = 0; y < b.size(); ++y) {
      if (x == y || !b.leq(x, y)) continue;
      ++count;
      if (!b.inversion_holds(x, y)) {
        r.passed = false;
        r.detail = "interval [" + std::to_string(x) + ", " + std::to_string(y) + "]";
        break;
      }
    }
  if (r.passed) r.detail = std::to_string(count) + " intervals";
  return r;
}

std::vector<CheckResult> check_instance(const Subdivision& input, const CheckOptions& opt) {
  std::vector<CheckResult> out;
  const Subdivision s = input.normalized();
  const LatticePolytope& p = s.polytope();
  const FaceLattice& fl = s.faces();
  const int n = p.dim();
  InvariantBundle b(s);
  b.prefetch();

  guarded(out, "euler_relation", [&] {
    CheckResult r{"euler_relation", true, "", false};
    for (int q = 0; q < fl.size() - 1; ++q)
      if (!s.euler_relation_holds(q)) {
        r.passed = false;
        r.detail = "face " + std::to_string(q) + ": sum " + s.euler_sum(q).get_str();
        break;
      }
    out.push_back(r);
  });

  guarded(out, "stanley_inversion", [&] {
    CheckResult r = check_inversion("stanley_inversion", fl.poset());
    if (r.passed) r = check_inversion("stanley_inversion", s.poset());
    for (int c : s.maximal_cells()) {
      if (!r.passed) break;
      r = check_inversion("stanley_inversion", FaceLattice(s.cell_polytope(c)).poset());
    }
    out.push_back(r);
  });

  guarded(out, "kouchnirenko", [&] {
    Integer vol = p.normalized_volume();
    Integer expected = (n % 2 == 1) ? vol : Integer(-vol);
    Integer got = euler_characteristic(p);
    out.push_back({"kouchnirenko", got == expected, got.get_str() + " vs " + expected.get_str(), false});
  });

  guarded(out, "chi_y_valuation", [&] { out.push_back(equal("chi_y_valuation", chi_y(p), chi_y_cell_sum(s))); });

  const LaurentPoly h = b.refined();
  guarded(out, "specializes_to_limit_mixed", [&] {
    out.push_back(equal("specializes_to_limit_mixed", substitute(h, subs::set_one({Var::W})), b.limit_mixed()));
  });
  guarded(out, "specializes_to_mixed", [&] {
    out.push_back(equal("specializes_to_mixed", substitute(h, subs::to_hodge_deligne()),
                        substitute(mixed_h_star(p), subs::rename(Var::V, Var::W))));
  });
  guarded(out, "specializes_to_h_star", [&] {
    out.push_back(equal("specializes_to_h_star", substitute(h, subs::set_one({Var::V, Var::W})), h_star(p)));
  });
  guarded(out, "limit_mixed_via_cells", [&] {
    out.push_back(equal("limit_mixed_via_cells", b.limit_mixed(), b.limit_mixed_via_cells(b.top())));
  });

  guarded(out, "symmetry_h_star", [&] {
    CheckResult r = equal("symmetry_h_star", h, substitute(h, {{Var::U, image_of({{Var::V, 1}})},
                                                                 {Var::V, image_of({{Var::U, 1}})}}));
    if (r.passed) r = equal("symmetry_h_star", h, substitute(h, subs::refined_involution()));
    out.push_back(r);
  });

  LaurentPoly e;
  guarded(out, "refined_E", [&] { e = refined_E(b); });
  guarded(out, "symmetry_refined_E", [&] {
    CheckResult r = equal("symmetry_refined_E", e, substitute(e, {{Var::U, image_of({{Var::V, 1}})},
                                                                    {Var::V, image_of({{Var::U, 1}})}}));
    if (r.passed) r = equal("symmetry_refined_E", e, substitute(e, subs::refined_involution()));
    out.push_back(r);
  });

  guarded(out, "degree_top_coefficient", [&] {
    CheckResult r{"degree_top_coefficient", h.degree_in(Var::W) <= n + 1, "", false};
    if (!r.passed) r.detail = "w-degree " + std::to_string(h.degree_in(Var::W));
    else if (!(h.coeff_in(Var::W, n + 1) == b.local_limit_mixed()))
      r = {"degree_top_coefficient", false, mismatch(h.coeff_in(Var::W, n + 1), b.local_limit_mixed()), false};
    out.push_back(r);
  });

  guarded(out, "nearby_vs_refined_E", [&] {
    out.push_back(equal("nearby_vs_refined_E", substitute(e, subs::set_one({Var::W})), nearby_fiber_E(b)));
  });
  guarded(out, "hodge_deligne_vs_refined_E", [&] {
    out.push_back(equal("hodge_deligne_vs_refined_E", substitute(e, subs::to_hodge_deligne()), hodge_deligne(p)));
  });
  guarded(out, "euler_vs_refined_E", [&] {
    Integer a = evaluate(e, {1, 1, 1, 1, 1});
    Integer c = euler_characteristic(p);
    out.push_back({"euler_vs_refined_E", a == c, a.get_str() + " vs " + c.get_str(), false});
  });
  guarded(out, "tropical_cell_sum", [&] {
    out.push_back(equal("tropical_cell_sum", nearby_fiber_from_cells(tropical_cells(s)), nearby_fiber_E(b)));
  });

  guarded(out, "weak_lefschetz", [&] {
    auto k = weak_lefschetz_violation(e, n, n);
    auto k2 = weak_lefschetz_violation_uw(hodge_deligne(p), n, n);
    CheckResult r{"weak_lefschetz", !k && !k2, "", false};
    if (k) r.detail = "refined E differs from (uvw^2-1)^dim P in w-degree " + std::to_string(*k);
    else if (k2) r.detail = "Hodge-Deligne differs from (uw-1)^dim P in degree " + std::to_string(*k2);
    out.push_back(r);
  });

  guarded(out, "hodge_table", [&] {
    HodgeNumberTable t = refined_hodge_numbers(b);
    CheckResult r{"hodge_table", true, "", false};
    for (const auto& [k, c] : t.refined) {
      const auto [pp, qq, rr] = k;
      auto get = [&](int a, int bb, int cc) {
        auto it = t.refined.find({a, bb, cc});
        return it == t.refined.end() ? Integer(0) : it->second;
      };
      if (get(qq, pp, rr) != c || get(rr - pp, rr - qq, rr) != c) {
        r.passed = false;
        r.detail = "h^{" + std::to_string(pp) + "," + std::to_string(qq) + "," + std::to_string(rr) + "}";
        break;
      }
    }
    out.push_back(r);

    CheckResult u{"unimodality", true, "", true};
    int max_r = 0;
    for (const auto& [k, c] : t.refined) max_r = std::max(max_r, k[2]);
    for (int rr = 0; rr <= max_r && u.passed; ++rr)
      for (int k = -rr; k <= rr && u.passed; ++k) {
        std::vector<Integer> seq;
        for (int i = std::max(0, -k); i <= std::min(rr - k, rr); ++i) {
          auto it = t.refined.find({k + i, i, rr});
          seq.push_back(it == t.refined.end() ? Integer(0) : it->second);
        }
        if (!symmetric_unimodal(seq)) {
          u.passed = false;
          u.detail = "r = " + std::to_string(rr) + ", k = " + std::to_string(k);
        }
      }
    out.push_back(u);
  });

  if (n <= 3) {
    guarded(out, "small_coeff_oracle", [&] {
      CoeffTable oracle = small_coeff_oracle(s);
      CoeffTable got = coefficient_table(h);
      CheckResult r{"small_coeff_oracle", true, "", false};
      for (const auto& [k, c] : oracle) {
        auto it = got.find(k);
        Integer g = it == got.end() ? Integer(0) : it->second;
        if (g != c) {
          r.passed = false;
          r.detail = "h*_{" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) +
                     "}: oracle " + c.get_str() + ", polynomial " + g.get_str();
          break;
        }
      }
      out.push_back(r);
    });
  }

  guarded(out, "intersection_lef_part", [&] {
    // For dim P = 3 the Lefschetz part is 1 + (#facets - 3) t + t^2; for
    // polygons it is 1 + t.
    if (n != 2 && n != 3) return;
    LaurentPoly t = LaurentPoly::var(Var::T);
    LaurentPoly expected = n == 2 ? LaurentPoly(1L) + t
                                  : LaurentPoly(1L) + LaurentPoly(static_cast<long>(p.facets().size() - 3)) * t + t * t;
    out.push_back(equal("intersection_lef_part", e_int_lef(p), expected));
  });

  if (opt.strata)
    guarded(out, "sum_over_strata", [&] {
      out.push_back(equal("sum_over_strata", intersection_E(b), sum_over_strata_E_int(b)));
    });

  if (opt.dk && n >= 1) {
    guarded(out, "dk_reconstruct", [&] {
      DkResult r = dk_reconstruct(s);
      CheckResult c = equal("dk_reconstruct", r.e, e);
      if (r.inconsistent_degree)
        c = {"dk_reconstruct", false, "inconsistent in degree " + std::to_string(*r.inconsistent_degree), false};
      out.push_back(c);
    });
    guarded(out, "dk_hodge_deligne", [&] {
      DkResult r = dk_hodge_deligne(p);
      CheckResult c = equal("dk_hodge_deligne", r.e, hodge_deligne(p));
      if (r.inconsistent_degree)
        c = {"dk_hodge_deligne", false, "inconsistent in degree " + std::to_string(*r.inconsistent_degree), false};
      out.push_back(c);
    });
  }

  if (n >= 1) {
    guarded(out, "compact_psi_forms", [&] {
      TruncatedNormalFan nf = normal_fan_truncated(p);
      Fan r = simplicial_refinement(nf.fan);
      out.push_back(equal("compact_psi_forms", partial_compactification_psi(b, nf, r), compact_psi_from_cells(s)));
    });
  }

  if (opt.lambda && n >= 1) {
    guarded(out, "lambda_palindromic", [&] {
      TruncatedNormalFan nf = normal_fan_truncated(p);
      Fan r1 = simplicial_refinement(nf.fan);
      std::optional<Fan> r2 = other_refinement(nf.fan, r1);
      CheckResult c{"lambda_palindromic", true, r2 ? "two refinements" : "one refinement", false};
      std::vector<const Fan*> fans{&r1};
      if (r2) fans.push_back(&*r2);
      for (const Fan* r : fans) {
        LambdaPhi a = lambda_phi(b, nf, *r);
        LambdaPhi m = lambda_phi_mixed(b, nf, *r);
        if (!(a.lambda == palindrome_image(a.lambda, n + 1, false))) {
          c = {"lambda_palindromic", false, "Lambda = " + str(a.lambda), false};
          break;
        }
        if (!(m.lambda == palindrome_image(m.lambda, n + 1, true))) {
          c = {"lambda_palindromic", false, "mixed Lambda = " + str(m.lambda), false};
          break;
        }
      }
      out.push_back(c);
    });
  }
  return out;
}

}  // namespace limhodge
