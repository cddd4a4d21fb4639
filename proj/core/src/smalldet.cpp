#include "steiner/smalldet.hpp"

#include "steiner/cyclotomic.hpp"
#include "steiner/error.hpp"
#include "steiner/forms.hpp"
#include "steiner/gp_matrix.hpp"

namespace steiner {

BigInt cayley_222(const Hypermatrix& h) {
  if (h.order() != 3 || h.dim() != 2) fail(ErrorCode::WrongShape, "Cayley hyperdeterminant needs a 2x2x2 array");
  auto a = [&](int i, int j, int k) {
    const int idx[3] = {i, j, k};
    return BigInt(static_cast<long>(h.at(idx)));
  };
  const BigInt a000 = a(0, 0, 0), a001 = a(0, 0, 1), a010 = a(0, 1, 0), a011 = a(0, 1, 1);
  const BigInt a100 = a(1, 0, 0), a101 = a(1, 0, 1), a110 = a(1, 1, 0), a111 = a(1, 1, 1);

  BigInt squares = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 +
                   a010 * a010 * a101 * a101 + a100 * a100 * a011 * a011;
  BigInt mixed = a000 * a001 * a110 * a111 + a000 * a010 * a101 * a111 + a000 * a100 * a011 * a111 +
                 a001 * a010 * a101 * a110 + a001 * a100 * a011 * a110 + a010 * a100 * a011 * a101;
  BigInt cross = a000 * a011 * a101 * a110 + a001 * a010 * a100 * a111;
  return squares - 2 * mixed + 4 * cross;
}

bool verify_k2_no_nullvector(int k) {
  if (k < 2) fail(ErrorCode::InvalidArgument, "order must be at least 2");
  const auto m = static_cast<unsigned>(k - 1);
  const CycNum one = CycNum::one(m);
  for (unsigned j = 0; j < m; ++j) {
    const CycNum zeta = CycNum::root_of_unity(m, j);
    if ((one + zeta).pow(m) == one) return false;
  }

  // x_1 = 0 branch: D_1 p restricted to x_1 = 0 must be c * x_2^(k-1), c != 0.
  const SparsePoly d1 = steiner_form(build_steiner(path_tree(2), k)).partial(0).substitute(0, Rat(0));
  if (d1.size() != 1) return false;
  const auto& [e, c] = *d1.terms().begin();
  return c != 0 && e[0] == 0 && e[1] == static_cast<std::uint32_t>(k - 1);
}

Rat det_order2(const Tree& t) {
  if (t.size() < 2) fail(ErrorCode::TooSmall, "order-2 hyperdeterminant needs n >= 2");
  return determinant_exact(distance_matrix(t));
}

}  // namespace steiner
