#pragma once

#include "steiner/hypermatrix.hpp"
#include "steiner/rational.hpp"
#include "steiner/tree.hpp"

namespace steiner {

/// Cayley's hyperdeterminant of a 2x2x2 array a[i][j][k], i,j,k in {0,1}:
///
///   a000^2 a111^2 + a001^2 a110^2 + a010^2 a101^2 + a100^2 a011^2
///   - 2 (a000 a001 a110 a111 + a000 a010 a101 a111 + a000 a100 a011 a111
///        + a001 a010 a101 a110 + a001 a100 a011 a110 + a010 a100 a011 a101)
///   + 4 (a000 a011 a101 a110 + a001 a010 a100 a111)
///
/// It equals the discriminant of the binary quadratic det(x A0 + y A1) in the
/// two slices A0 = a[0], A1 = a[1]; the tests check both forms agree.
/// Throws WrongShape unless k = 3 and n = 2.
BigInt cayley_222(const Hypermatrix& h);

/// Exact check of the two-vertex argument: for every (k-1)-th root of unity
/// zeta, (1 + zeta)^(k-1) != 1; and setting x_1 = 0 in D_1 p leaves a nonzero
/// multiple of x_2^(k-1). Together these rule out a nonzero gradient zero for
/// the order-k Steiner form of K_2. Throws InvalidArgument for k < 2.
bool verify_k2_no_nullvector(int k);

/// Order-2 hyperdeterminant, i.e. det of the distance matrix. Throws
/// TooSmall for n < 2.
Rat det_order2(const Tree& t);

}  // namespace steiner
