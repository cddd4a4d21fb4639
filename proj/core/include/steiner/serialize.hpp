#pragma once

#include <nlohmann/json.hpp>

#include <span>
#include <string>
#include <vector>

#include "steiner/cfloat.hpp"
#include "steiner/cyclotomic.hpp"
#include "steiner/gp_matrix.hpp"
#include "steiner/nullspace.hpp"
#include "steiner/sparse_poly.hpp"
#include "steiner/tree.hpp"

namespace steiner {

/// Version tag carried by every report the CLI writes.
inline constexpr const char* kSchemaVersion = "steiner-report/1";

using Json = nlohmann::json;

/// ["num", "den"] with decimal-string integers.
Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);

/// {"m": m, "coeffs": [["num","den"], ...]}
Json cyc_to_json(const CycNum& x);
CycNum cyc_from_json(const Json& j);
Json cyc_vector_to_json(std::span<const CycNum> xs);

/// [re, im] as decimal strings at full precision.
Json cfloat_to_json(const CFloat& z);

/// {"n": ..., "terms": [{"exp": [...], "num": "...", "den": "..."}, ...]}
/// in grlex order, leading term first.
Json poly_to_json(const SparsePoly& p);
SparsePoly poly_from_json(const Json& j);

/// Row-major array of rows of ["num","den"].
Json matrix_to_json(const RatMatrix& m);

/// Edge-list text plus structured fields.
Json tree_to_json(const Tree& t);

/// {"point", "gradient", "exact_zero", "residual", "tree", "k"}.
Json report_to_json(const NullvectorReport& r, const Tree& t, int k);

Json completion_to_json(const Completion& c);
Json search_to_json(std::span<const SearchCandidate> cands, double tol);

}  // namespace steiner
