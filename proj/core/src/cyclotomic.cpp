#include "steiner/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>

#include "steiner/error.hpp"

namespace steiner {

Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat make_rat(long num, long den) { return make_rat(BigInt(num), BigInt(den)); }

Rat rat_from_strings(const std::string& num, const std::string& den) {
  BigInt n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0) {
    fail(ErrorCode::MalformedInput, "bad rational '" + num + "/" + den + "'");
  }
  return make_rat(n, d);
}

std::optional<Rat> rational_sqrt(const Rat& q) {
  if (sgn(q) < 0) return std::nullopt;
  const BigInt& num = q.get_num();
  const BigInt& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  return make_rat(BigInt(sqrt(num)), BigInt(sqrt(den)));
}

namespace {

using Poly = std::vector<Rat>;  // constant term first

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

// a = q*b + r
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  const int db = degree(b);
  int da = degree(a);
  Poly q(std::max(da - db + 1, 1), Rat(0));
  while (da >= db && da >= 0) {
    Rat c = a[da] / b[db];
    const int shift = da - db;
    q[shift] = c;
    for (int i = 0; i <= db; ++i) a[i + shift] -= c * b[i];
    da = degree(a);
  }
  trim(a);
  trim(q);
  return {q, a};
}

Poly mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly compute_cyclotomic(unsigned m) {
  Poly p(m + 1, Rat(0));
  p[0] = -1;
  p[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    p = divmod(p, *cyclotomic_polynomial(d)).first;
  }
  return p;
}

// In-place reduction of a polynomial of any degree modulo monic Phi_m.
void reduce(Poly& p, const Poly& phi) {
  const std::size_t deg = phi.size() - 1;
  for (std::size_t top = p.size(); top-- > deg;) {
    if (p[top] == 0) continue;
    const Rat c = p[top];
    for (std::size_t i = 0; i <= deg; ++i) p[top - deg + i] -= c * phi[i];
  }
  p.resize(deg, Rat(0));
}

}  // namespace

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::shared_ptr<const std::vector<Rat>> cyclotomic_polynomial(unsigned m) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "conductor must be positive");
  static std::mutex mutex;
  static std::map<unsigned, std::shared_ptr<const Poly>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  // Computed outside the lock: the recursion re-enters for divisors.
  auto poly = std::make_shared<const Poly>(compute_cyclotomic(m));
  std::lock_guard lock(mutex);
  return cache.emplace(m, std::move(poly)).first->second;
}

CycNum::CycNum() : m_(1), c_(1, Rat(0)) {}

CycNum CycNum::zero(unsigned m) { return CycNum(m, Poly(euler_phi(m), Rat(0))); }

CycNum CycNum::one(unsigned m) { return rational(m, Rat(1)); }

CycNum CycNum::rational(unsigned m, const Rat& q) {
  CycNum r = zero(m);
  r.c_[0] = q;
  return r;
}

CycNum CycNum::root_of_unity(unsigned m, std::int64_t power) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "conductor must be positive");
  const std::int64_t mm = m;
  const auto e = static_cast<std::size_t>(((power % mm) + mm) % mm);
  Poly p(e + 1, Rat(0));
  p[e] = 1;
  return from_coefficients(m, std::move(p));
}

CycNum CycNum::from_coefficients(unsigned m, std::vector<Rat> coeffs) {
  const auto phi = cyclotomic_polynomial(m);
  if (coeffs.empty()) coeffs.emplace_back(0);
  reduce(coeffs, *phi);
  return CycNum(m, std::move(coeffs));
}

bool CycNum::is_zero() const noexcept {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycNum::is_rational() const noexcept {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

void CycNum::require_same_field(const CycNum& o) const {
  if (m_ != o.m_) {
    fail(ErrorCode::ConductorMismatch,
         "Q(zeta_" + std::to_string(m_) + ") vs Q(zeta_" + std::to_string(o.m_) + ")");
  }
}

CycNum CycNum::lift(unsigned target) const {
  if (target == 0 || target % m_ != 0) {
    fail(ErrorCode::ConductorMismatch,
         std::to_string(target) + " is not a multiple of " + std::to_string(m_));
  }
  if (target == m_) return *this;
  const unsigned step = target / m_;
  Poly p((c_.size() - 1) * step + 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
  return from_coefficients(target, std::move(p));
}

CycNum CycNum::inverse() const {
  if (is_zero()) fail(ErrorCode::InvalidArgument, "inverse of zero");
  // Invariant: s_i * a == r_i (mod phi).
  Poly r0 = *cyclotomic_polynomial(m_), r1 = c_;
  Poly s0{Rat(0)}, s1{Rat(1)};
  trim(r1);
  while (degree(r1) > 0) {
    auto [q, r] = divmod(r0, r1);
    Poly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // Phi_m is irreducible, so the last nonzero remainder is a constant.
  const Rat c = r1[0];
  for (auto& x : s1) x /= c;
  return from_coefficients(m_, std::move(s1));
}

CycNum CycNum::pow(std::uint64_t e) const {
  CycNum result = one(m_);
  CycNum base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  require_same_field(o);
  if (c_.size() == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  Poly p = mul(c_, o.c_);
  reduce(p, *cyclotomic_polynomial(m_));
  c_ = std::move(p);
  return *this;
}

CycNum& CycNum::operator*=(const Rat& q) {
  for (auto& c : c_) c *= q;
  return *this;
}

bool operator==(const CycNum& a, const CycNum& b) { return a.m_ == b.m_ && a.c_ == b.c_; }

CycNum cyc_root_of_unity(unsigned m, std::int64_t power) { return CycNum::root_of_unity(m, power); }

CycNum cyc_pow(const CycNum& x, std::uint64_t e) { return x.pow(e); }

unsigned common_conductor(std::span<const CycNum> xs) {
  unsigned m = 1;
  for (const auto& x : xs) m = std::lcm(m, x.conductor());
  return m;
}

std::vector<CycNum> lift_all(std::span<const CycNum> xs, unsigned target) {
  std::vector<CycNum> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.lift(target));
  return out;
}

std::optional<CycNum> exact_sqrt(const CycNum& x) {
  const unsigned m = x.conductor();
  std::optional<CycNum> root;
  if (x.is_rational()) {
    const Rat& q = x.constant_term();
    if (auto r = rational_sqrt(q)) {
      root = CycNum::rational(m, *r);
    } else if (m % 4 == 0) {
      if (auto r2 = rational_sqrt(-q)) root = CycNum::root_of_unity(m, m / 4) * *r2;
    }
  } else if (m == 4) {
    // (a + bi) = (u + vi)^2 with u^2 - v^2 = a, 2uv = b.
    const Rat& a = x.coeffs()[0];
    const Rat& b = x.coeffs()[1];
    if (auto norm = rational_sqrt(a * a + b * b)) {
      if (auto u = rational_sqrt((a + *norm) / 2); u && *u != 0) {
        root = CycNum::from_coefficients(4, {*u, b / (2 * *u)});
      }
    }
  }
  if (root && *root * *root == x) return root;
  return std::nullopt;
}

}  // namespace steiner
