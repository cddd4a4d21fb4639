#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <span>
#include <vector>

#include "steiner/cyclotomic.hpp"
#include "steiner/rational.hpp"

namespace steiner {

inline constexpr unsigned kCFloatBits = 128;

using Real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<kCFloatBits, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

/// High-precision complex scalar used by the numeric harness.
using CFloat = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<
        boost::multiprecision::cpp_bin_float<kCFloatBits, boost::multiprecision::digit_base_2>>,
    boost::multiprecision::et_off>;

Real to_real(const Rat& q);

/// Numerical image of x under zeta_m -> exp(2 pi i / m). precision_bits must
/// lie in [53, kCFloatBits]; evaluation always runs at kCFloatBits.
CFloat cyc_embed(const CycNum& x, unsigned precision_bits = kCFloatBits);
std::vector<CFloat> cyc_embed(std::span<const CycNum> xs, unsigned precision_bits = kCFloatBits);

double magnitude(const CFloat& z);
bool is_finite(const CFloat& z);

}  // namespace steiner
