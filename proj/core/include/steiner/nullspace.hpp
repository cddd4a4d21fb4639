#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "steiner/cfloat.hpp"
#include "steiner/cyclotomic.hpp"
#include "steiner/hypermatrix.hpp"
#include "steiner/tree.hpp"

namespace steiner {

/// Outcome of checking a candidate nullvector. exact_zero is true iff every
/// gradient component is exactly zero in the field; such a report certifies
/// that the corresponding hyperdeterminant vanishes.
struct NullvectorReport {
  std::vector<CycNum> point;
  std::vector<CycNum> gradient;
  bool exact_zero = false;
  /// max_i |gradient_i| under the complex embedding.
  double embedded_residual = 0.0;
};

/// The leaf u, its neighbor w and the second neighbor v of w used by the
/// odd-order construction. Lowest labels win every choice.
struct AnchorVertices {
  Vertex u, w, v;
};
AnchorVertices anchor_vertices(const Tree& t);

/// y_u = 1, y_v = zeta, y_w = -1 - zeta, zero elsewhere, with zeta a
/// primitive (2k-2)-th root of unity. Throws EvenOrder for even k or k < 3,
/// TooSmall for n < 3.
std::vector<CycNum> canonical_odd_nullvector(const Tree& t, int k);

/// Exact gradient of the order-k Steiner form at `point`. Throws ZeroVector
/// for the zero point.
NullvectorReport verify_nullvector(const Tree& t, int k, std::span<const CycNum> point);

/// Same check for the k-form of an arbitrary hypermatrix, through the
/// expanded polynomial and its partial derivatives.
NullvectorReport verify_form_nullvector(const Hypermatrix& h, std::span<const CycNum> point);

/// Unit vector on the last coordinate. Every monomial of the form of a
/// degenerate-zeroed hypermatrix uses k distinct variables, so each partial
/// derivative keeps at least two of them and vanishes there. Throws
/// NotDegenerateZeroed, or OrderTooLow for k = 2 with n >= 2.
std::vector<CycNum> degenerate_nullvector(const Hypermatrix& h);

/// s(point) == 0 and g(point) == 0, with s = sum x_r and
/// g = 3 sum_{i<j} d(i,j) x_i x_j. Throws TooSmall for n < 2.
bool membership_sg(const Tree& t, std::span<const CycNum> point);

/// max(|s(point)|, |g(point)|) for floating points.
double sg_residual(const Tree& t, std::span<const CFloat> point);

struct CompletionCandidate {
  /// Set when the root lies in the working field.
  std::optional<std::vector<CycNum>> exact;
  /// Always set (the embedding of `exact` when present).
  std::vector<CFloat> numeric;
  /// The zero vector, which is not a nullvector.
  bool trivial = false;
  /// max |gradient| of the order-3 form at `numeric`.
  double residual = 0.0;
};

struct Completion {
  /// lcm(4, conductor of the tail).
  unsigned conductor = 4;
  /// Quadratic A a_1^2 + B a_1 + C = 0 in the first coordinate.
  CycNum a, b, c;
  CycNum discriminant;
  /// False when sqrt(discriminant) was not found in the working field and the
  /// candidates carry only numeric coordinates.
  bool root_in_field = true;
  std::vector<CompletionCandidate> candidates;
};

/// Extends (a_3, ..., a_n) to order-3 nullvectors by solving for the first
/// two coordinates: a_2 = -a_1 - sum_{j>=3} a_j, and a_1 a root of
///   A = d(1,2)
///   B = sum_{j>=3} (d(1,2) - d(1,j) + d(2,j)) a_j
///   C = sum_{j,l>=3} (d(2,j) - d(j,l)/2) a_j a_l
/// Throws TooSmall for n < 3 and InvalidArgument if the tail length is not
/// n - 2.
Completion complete_nullvector(const Tree& t, std::span<const CycNum> tail);

struct SearchCandidate {
  /// Unit-norm point.
  std::vector<CFloat> point;
  /// max_i |D_i p(point)|.
  double residual = 0.0;
  int restart = 0;
  int iterations = 0;
};

struct SearchOptions {
  std::uint64_t seed = 0;
  int restarts = 20;
  double tol = 1e-10;
  int max_iterations = 100;
};

/// Levenberg-Marquardt on the real system (Re grad p, Im grad p,
/// |x|^2 - 1) from seeded random complex starts, restart r drawing from
/// SplitMix64::substream(seed, r). Returns one candidate per restart, best
/// first. Never claims exactness: a small residual is evidence only.
std::vector<SearchCandidate> numeric_search(const Tree& t, int k, const SearchOptions& options);

}  // namespace steiner
