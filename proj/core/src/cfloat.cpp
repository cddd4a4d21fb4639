#include "steiner/cfloat.hpp"

#include <boost/math/constants/constants.hpp>

#include "steiner/error.hpp"

namespace steiner {

Real to_real(const Rat& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

CFloat cyc_embed(const CycNum& x, unsigned precision_bits) {
  if (precision_bits < 53 || precision_bits > kCFloatBits) {
    fail(ErrorCode::InvalidArgument,
         "precision_bits must lie in [53, " + std::to_string(kCFloatBits) + "]");
  }
  const unsigned m = x.conductor();
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  Real re = 0, im = 0;
  const auto& c = x.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    const Real angle = two_pi * Real(static_cast<unsigned long>(j)) / Real(m);
    const Real coeff = to_real(c[j]);
    re += coeff * cos(angle);
    im += coeff * sin(angle);
  }
  return CFloat(re, im);
}

std::vector<CFloat> cyc_embed(std::span<const CycNum> xs, unsigned precision_bits) {
  std::vector<CFloat> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(cyc_embed(x, precision_bits));
  return out;
}

double magnitude(const CFloat& z) { return static_cast<double>(abs(z)); }

bool is_finite(const CFloat& z) {
  return boost::multiprecision::isfinite(z.real()) && boost::multiprecision::isfinite(z.imag());
}

}  // namespace steiner
