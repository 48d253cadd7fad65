#pragma once

#include <cstdint>
#include <vector>

namespace limhodge {

using i64 = std::int64_t;
using IVec = std::vector<i64>;
using IMat = std::vector<IVec>;  // row major

/// Overflow-checked arithmetic. Results must stay below 2^62 in absolute
/// value; anything larger throws ComputationError.
i64 checked(__int128 x);
inline i64 cmul(i64 a, i64 b) { return checked(static_cast<__int128>(a) * b); }
inline i64 cadd(i64 a, i64 b) { return checked(static_cast<__int128>(a) + b); }

i64 gcd_abs(i64 a, i64 b);
i64 lcm_abs(i64 a, i64 b);
i64 floor_div(i64 a, i64 b);
i64 ceil_div(i64 a, i64 b);

i64 dot(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec add(const IVec& a, const IVec& b);

/// Divide by the gcd of the entries (zero vector stays zero).
IVec primitive(IVec v);

/// Determinant of a square matrix (fraction-free Bareiss elimination).
i64 determinant(IMat m);

/// Rank of a (possibly non-square) integer matrix.
int rank(IMat m);

/// For d-1 linearly independent rows in Z^d, the generalized cross product:
/// entry i is (-1)^i times the minor with column i removed. Orthogonal to
/// every row; zero iff the rows are dependent.
IVec cofactor_normal(const IMat& rows);

/// Column Hermite reduction A W = [H | 0] with W unimodular. Returns the rank
/// r; W and its inverse are written out (n x n, n = number of columns of A).
int column_hermite(const IMat& a, IMat& w, IMat& w_inv);

}  // namespace limhodge
