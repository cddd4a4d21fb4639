#pragma once

#include <optional>
#include <span>
#include <vector>

#include "steiner/cfloat.hpp"
#include "steiner/cyclotomic.hpp"
#include "steiner/hypermatrix.hpp"
#include "steiner/sparse_poly.hpp"
#include "steiner/tree.hpp"

namespace steiner {

/// The k-form sum over all index tuples of M[i_1..i_k] x_{i_1} ... x_{i_k}.
SparsePoly steiner_form(const Hypermatrix& h);

/// Gradient of the order-k Steiner form of t at `point`, without expanding
/// the polynomial. Index tuples are grouped by the multiset of off-z
/// coordinates drawn from the support of the point:
///
///   D_z p(y) = k * sum_S multinomial(S) * d_T({z} + S) * prod_{v in S} y_v
///
/// over multisets S of size k-1. The exact overload requires all coordinates
/// to share one conductor.
std::vector<CycNum> gradient_direct(const Tree& t, int k, std::span<const CycNum> point);
std::vector<CFloat> gradient_direct(const Tree& t, int k, std::span<const CFloat> point);

/// Hessian D_z D_j p at `point` (row-major n x n), grouped the same way over
/// multisets of size k-2.
std::vector<CFloat> hessian_direct(const Tree& t, int k, std::span<const CFloat> point);

// ---- order-3 structure -------------------------------------------------

/// g = 3 * sum_{i<j} d(i,j) x_i x_j.
SparsePoly pairwise_form(const Tree& t);

/// p^(3) == s * g as exact polynomials.
bool verify_sg_factorization(const Tree& t);

/// sum_r x_r D_r p == 3 s g for k = 3. Throws TooSmall for n < 2.
bool verify_euler_identity(const Tree& t);

/// f_r = ((2 - d_r) s - (2/3) x_r) / (n - 1).
std::vector<SparsePoly> s3_cofactors(const Tree& t);

/// sum_r f_r D_r p with the cofactors above.
SparsePoly s3_cofactor_combination(const Tree& t);

/// True iff s^3 == sum_r f_r D_r p exactly. The combination actually equals
/// 3 s^3 for every tree, so this returns false; see
/// s3_decomposition_multiple() and verify_s3_membership().
bool verify_s3_decomposition(const Tree& t);

/// The rational lambda with sum_r f_r D_r p == lambda * s^3, if any.
std::optional<Rat> s3_decomposition_multiple(const Tree& t);

/// s^3 == sum_r (f_r / 3) D_r p exactly: an explicit certificate that s^3
/// lies in the Jacobian ideal.
bool verify_s3_membership(const Tree& t);

/// True iff no D_r p is divisible by s.
bool verify_not_divisible(const Tree& t);

}  // namespace steiner
