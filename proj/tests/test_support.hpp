#pragma once

// Generators and independent oracles shared by the unit and acceptance
// suites. Nothing here calls the code path it is used to check.

#include <cstdint>
#include <span>
#include <vector>

#include "steiner/cyclotomic.hpp"
#include "steiner/gp_matrix.hpp"
#include "steiner/hypermatrix.hpp"
#include "steiner/random.hpp"
#include "steiner/sparse_poly.hpp"
#include "steiner/tree.hpp"

namespace steiner::testing {

inline Rat random_rat(SplitMix64& rng, int span = 9) {
  const long num = rng.between(-span, span);
  const long den = rng.between(1, span);
  return make_rat(num, den);
}

/// Random element of Q(zeta_m) with small rational coefficients.
inline CycNum random_cyc(SplitMix64& rng, unsigned m, int span = 5) {
  std::vector<Rat> c(euler_phi(m));
  for (auto& x : c) x = random_rat(rng, span);
  return CycNum::from_coefficients(m, std::move(c));
}

inline std::vector<CycNum> random_point(SplitMix64& rng, int n, unsigned m, int span = 4) {
  std::vector<CycNum> p;
  for (int i = 0; i < n; ++i) p.push_back(CycNum::rational(m, Rat(rng.between(-span, span))));
  return p;
}

/// Direct summation over all n^k index tuples:
///   D_z p(y) = sum_tuples M[i] * sum_{positions q with i_q = z} prod_{r != q} y_{i_r}
inline std::vector<CycNum> gradient_by_tuples(const Hypermatrix& h, std::span<const CycNum> y) {
  const int n = h.dim(), k = h.order();
  const unsigned m = y.front().conductor();
  std::vector<CycNum> grad(static_cast<std::size_t>(n), CycNum::zero(m));
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  for (std::size_t off = 0; off < h.entries().size(); ++off) {
    const std::int64_t entry = h.entries()[off];
    if (entry != 0) {
      for (int q = 0; q < k; ++q) {
        CycNum prod = CycNum::rational(m, Rat(static_cast<long>(entry)));
        for (int r = 0; r < k; ++r)
          if (r != q) prod *= y[idx[r]];
        grad[idx[q]] += prod;
      }
    }
    for (int j = k - 1; j >= 0; --j) {
      if (++idx[j] < n) break;
      idx[j] = 0;
    }
  }
  return grad;
}

/// Laplace expansion along the first row.
inline Rat determinant_by_cofactors(const RatMatrix& a) {
  const int n = a.size();
  if (n == 0) return Rat(1);
  if (n == 1) return a(0, 0);
  Rat det = 0;
  for (int col = 0; col < n; ++col) {
    if (a(0, col) == 0) continue;
    RatMatrix minor(n - 1);
    for (int i = 1; i < n; ++i)
      for (int j = 0, mj = 0; j < n; ++j)
        if (j != col) minor(i - 1, mj++) = a(i, j);
    const Rat term = a(0, col) * determinant_by_cofactors(minor);
    det += (col % 2 == 0) ? term : Rat(-term);
  }
  return det;
}

/// Cayley's 2x2x2 hyperdeterminant as the discriminant beta^2 - 4 alpha gamma
/// of det(x A0 + y A1) = alpha x^2 + beta xy + gamma y^2, A_i the slices a[i].
inline BigInt cayley_by_discriminant(const Hypermatrix& h) {
  auto a = [&](int i, int j, int k) {
    const int idx[3] = {i, j, k};
    return BigInt(static_cast<long>(h.at(idx)));
  };
  const BigInt alpha = a(0, 0, 0) * a(0, 1, 1) - a(0, 0, 1) * a(0, 1, 0);
  const BigInt gamma = a(1, 0, 0) * a(1, 1, 1) - a(1, 0, 1) * a(1, 1, 0);
  const BigInt beta = a(0, 0, 0) * a(1, 1, 1) + a(1, 0, 0) * a(0, 1, 1) - a(0, 0, 1) * a(1, 1, 0) -
                      a(1, 0, 1) * a(0, 1, 0);
  return beta * beta - 4 * alpha * gamma;
}

/// g(x) = 3 sum_{i<j} d(i,j) x_i x_j, evaluated straight from distances.
inline CycNum g_value(const Tree& t, std::span<const CycNum> x) {
  const unsigned m = x.front().conductor();
  CycNum g = CycNum::zero(m);
  for (int i = 0; i < t.size(); ++i)
    for (int j = i + 1; j < t.size(); ++j) g += x[i] * x[j] * Rat(3 * t.distance(i, j));
  return g;
}

inline CycNum s_value(std::span<const CycNum> x) {
  CycNum s = CycNum::zero(x.front().conductor());
  for (const auto& xi : x) s += xi;
  return s;
}

/// From a point x0 on {s = 0, g = 0}, returns the second intersection of the
/// line x0 + t x1 (x1 random rational with s(x1) = 0) with the conic, which
/// lies in the same field. Returns x0 unchanged if the line is degenerate.
inline std::vector<CycNum> secant_nullvector(const Tree& t, std::span<const CycNum> x0, SplitMix64& rng) {
  const int n = t.size();
  const unsigned m = x0.front().conductor();
  std::vector<CycNum> x1(static_cast<std::size_t>(n), CycNum::zero(m));
  CycNum sum = CycNum::zero(m);
  for (int i = 0; i + 1 < n; ++i) {
    x1[i] = CycNum::rational(m, Rat(rng.between(-3, 3)));
    sum += x1[i];
  }
  x1[n - 1] = -sum;
  const CycNum g1 = g_value(t, x1);
  if (g1.is_zero()) return {x0.begin(), x0.end()};
  std::vector<CycNum> both(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) both[i] = x0[i] + x1[i];
  const CycNum bilinear = g_value(t, both) - g_value(t, x0) - g1;
  const CycNum step = -bilinear / g1;
  std::vector<CycNum> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[i] = x0[i] + step * x1[i];
  return out;
}

}  // namespace steiner::testing
