#include "limhodge/linalg.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "limhodge/errors.hpp"

namespace limhodge {

namespace {
constexpr __int128 kLimit = static_cast<__int128>(1) << 62;
}

i64 checked(__int128 x) {
  if (x >= kLimit || x <= -kLimit) throw ComputationError("integer overflow in geometry kernel");
  return static_cast<i64>(x);
}

i64 gcd_abs(i64 a, i64 b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

i64 lcm_abs(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  i64 g = gcd_abs(a, b);
  return cmul(std::abs(a) / g, std::abs(b));
}

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

i64 dot(const IVec& a, const IVec& b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  return checked(s);
}

IVec sub(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked(static_cast<__int128>(a[i]) - b[i]);
  return r;
}

IVec add(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = cadd(a[i], b[i]);
  return r;
}

IVec primitive(IVec v) {
  i64 g = 0;
  for (i64 x : v) g = gcd_abs(g, x);
  if (g > 1)
    for (i64& x : v) x /= g;
  return v;
}

i64 determinant(IMat m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  int sign = 1;
  i64 prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        __int128 num = static_cast<__int128>(m[i][j]) * m[k][k] -
                       static_cast<__int128>(m[i][k]) * m[k][j];
        m[i][j] = checked(num / prev);
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

int rank(IMat m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    for (int i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      i64 g = gcd_abs(m[r][c], m[i][c]);
      i64 fr = m[i][c] / g, fi = m[r][c] / g;
      for (int j = c; j < cols; ++j)
        m[i][j] = checked(static_cast<__int128>(m[i][j]) * fi - static_cast<__int128>(m[r][j]) * fr);
      m[i] = primitive(m[i]);
    }
    ++r;
  }
  return r;
}

IVec cofactor_normal(const IMat& rows) {
  const int d = rows.empty() ? 1 : static_cast<int>(rows[0].size());
  IVec n(d);
  for (int i = 0; i < d; ++i) {
    IMat minor;
    minor.reserve(rows.size());
    for (const auto& row : rows) {
      IVec r;
      r.reserve(d - 1);
      for (int j = 0; j < d; ++j)
        if (j != i) r.push_back(row[j]);
      minor.push_back(std::move(r));
    }
    i64 det = determinant(std::move(minor));
    n[i] = (i % 2 == 0) ? det : -det;
  }
  return n;
}

namespace {

// Extended gcd: s*a + t*b = g >= 0.
void ext_gcd(i64 a, i64 b, i64& g, i64& s, i64& t) {
  i64 s0 = 1, s1 = 0, t0 = 0, t1 = 1, r0 = a, r1 = b;
  while (r1 != 0) {
    i64 q = r0 / r1;
    i64 tmp = r0 - q * r1; r0 = r1; r1 = tmp;
    tmp = s0 - q * s1; s0 = s1; s1 = tmp;
    tmp = t0 - q * t1; t0 = t1; t1 = tmp;
  }
  if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
  g = r0; s = s0; t = t0;
}

}  // namespace

int column_hermite(const IMat& a_in, IMat& w, IMat& w_inv) {
  IMat a = a_in;
  const int rows = static_cast<int>(a.size());
  const int n = rows ? static_cast<int>(a[0].size()) : 0;
  w.assign(n, IVec(n, 0));
  w_inv.assign(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) w[i][i] = w_inv[i][i] = 1;

  // Column op on (j,k) with matrix E = [[s, -b/g], [t, a/g]].
  auto apply = [&](int j, int k, i64 s, i64 t, i64 bg, i64 ag) {
    for (auto* m : {&a, &w})
      for (auto& row : *m) {
        i64 x = row[j], y = row[k];
        row[j] = checked(static_cast<__int128>(s) * x + static_cast<__int128>(t) * y);
        row[k] = checked(-static_cast<__int128>(bg) * x + static_cast<__int128>(ag) * y);
      }
    // E^{-1} = [[a/g, b/g], [-t, s]] applied to rows j, k of w_inv.
    for (int c = 0; c < n; ++c) {
      i64 x = w_inv[j][c], y = w_inv[k][c];
      w_inv[j][c] = checked(static_cast<__int128>(ag) * x + static_cast<__int128>(bg) * y);
      w_inv[k][c] = checked(-static_cast<__int128>(t) * x + static_cast<__int128>(s) * y);
    }
  };

  int pc = 0;
  for (int r = 0; r < rows && pc < n; ++r) {
    for (int k = pc + 1; k < n; ++k) {
      i64 x = a[r][pc], y = a[r][k];
      if (y == 0) continue;
      i64 g, s, t;
      ext_gcd(x, y, g, s, t);
      apply(pc, k, s, t, y / g, x / g);
    }
    if (a[r][pc] == 0) continue;
    if (a[r][pc] < 0) {
      for (auto* m : {&a, &w})
        for (auto& row : *m) row[pc] = -row[pc];
      for (int c = 0; c < n; ++c) w_inv[pc][c] = -w_inv[pc][c];
    }
    ++pc;
  }
  return pc;
}

}  // namespace limhodge
