#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "steiner/tree.hpp"

namespace steiner {

inline constexpr std::uint64_t kDefaultEntryBudget = 100'000'000;

/// Entry budget from STEINER_MEM_BUDGET, or kDefaultEntryBudget when unset.
/// Throws InvalidArgument on an unparsable value.
std::uint64_t entry_budget_from_env();

/// Dense order-k cubical array with n^k integer entries in row-major
/// (lexicographic index) order: the first index varies slowest.
class Hypermatrix {
 public:
  Hypermatrix(int order, int dim, std::vector<std::int64_t> entries);
  static Hypermatrix zeros(int order, int dim);

  int order() const noexcept { return k_; }
  int dim() const noexcept { return n_; }
  std::span<const std::int64_t> entries() const noexcept { return entries_; }

  std::int64_t at(std::span<const int> index) const { return entries_[offset(index)]; }
  std::int64_t& at(std::span<const int> index) { return entries_[offset(index)]; }
  std::size_t offset(std::span<const int> index) const;
  /// Inverse of offset().
  std::vector<int> index_of(std::size_t offset) const;

  friend bool operator==(const Hypermatrix&, const Hypermatrix&) = default;

 private:
  int k_;
  int n_;
  std::vector<std::int64_t> entries_;
};

/// n^k, or UINT64_MAX on overflow.
std::uint64_t entry_count(int dim, int order);

/// Order-k Steiner distance hypermatrix of t. Each distinct vertex set is
/// evaluated once and broadcast to every index tuple over it. Throws
/// InvalidArgument for k < 2 and BudgetExceeded when n^k > budget.
Hypermatrix build_steiner(const Tree& t, int k, std::uint64_t budget = kDefaultEntryBudget);

/// Copy with every entry whose index tuple repeats a label set to zero.
Hypermatrix zero_degenerate(const Hypermatrix& h);

bool is_degenerate_index(std::span<const int> index);

enum class HypermatrixFormat { Json, FlatText };

std::string export_hypermatrix(const Hypermatrix& h, HypermatrixFormat format);
/// Reads either format; throws MalformedInput.
Hypermatrix import_hypermatrix(std::string_view text, HypermatrixFormat format);

}  // namespace steiner
