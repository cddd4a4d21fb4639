#include "steiner/hypermatrix.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "steiner/error.hpp"

namespace steiner {

std::uint64_t entry_budget_from_env() {
  const char* raw = std::getenv("STEINER_MEM_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultEntryBudget;
  std::uint64_t value = 0;
  const std::string_view s(raw);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    fail(ErrorCode::InvalidArgument, "STEINER_MEM_BUDGET must be a nonnegative integer");
  }
  return value;
}

std::uint64_t entry_count(int dim, int order) {
  std::uint64_t total = 1;
  for (int i = 0; i < order; ++i) {
    if (dim != 0 && total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(dim)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= static_cast<std::uint64_t>(dim);
  }
  return total;
}

Hypermatrix::Hypermatrix(int order, int dim, std::vector<std::int64_t> entries)
    : k_(order), n_(dim), entries_(std::move(entries)) {
  if (order < 1 || dim < 1) fail(ErrorCode::InvalidArgument, "hypermatrix order and dim must be positive");
  if (entries_.size() != entry_count(dim, order)) {
    fail(ErrorCode::InvalidArgument, "hypermatrix needs n^k entries");
  }
}

Hypermatrix Hypermatrix::zeros(int order, int dim) {
  return Hypermatrix(order, dim, std::vector<std::int64_t>(entry_count(dim, order), 0));
}

std::size_t Hypermatrix::offset(std::span<const int> index) const {
  if (static_cast<int>(index.size()) != k_) fail(ErrorCode::InvalidArgument, "index arity != order");
  std::size_t off = 0;
  for (int i : index) {
    if (i < 0 || i >= n_) fail(ErrorCode::InvalidArgument, "index out of range");
    off = off * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i);
  }
  return off;
}

std::vector<int> Hypermatrix::index_of(std::size_t offset) const {
  std::vector<int> index(static_cast<std::size_t>(k_));
  for (int j = k_ - 1; j >= 0; --j) {
    index[j] = static_cast<int>(offset % static_cast<std::size_t>(n_));
    offset /= static_cast<std::size_t>(n_);
  }
  return index;
}

bool is_degenerate_index(std::span<const int> index) {
  for (std::size_t a = 0; a < index.size(); ++a)
    for (std::size_t b = a + 1; b < index.size(); ++b)
      if (index[a] == index[b]) return true;
  return false;
}

Hypermatrix build_steiner(const Tree& t, int k, std::uint64_t budget) {
  if (k < 2) fail(ErrorCode::InvalidArgument, "order must be at least 2");
  const int n = t.size();
  if (n > 64) fail(ErrorCode::TooLarge, "hypermatrix construction supports n <= 64");
  const std::uint64_t count = entry_count(n, k);
  if (count > budget) {
    fail(ErrorCode::BudgetExceeded, std::to_string(n) + "^" + std::to_string(k) +
                                        " entries exceed the budget of " + std::to_string(budget));
  }
  std::vector<std::int64_t> entries(count);
  std::unordered_map<std::uint64_t, std::int64_t> memo;

  // Row-major fill; the running mask is the distinct vertex set of the
  // index prefix.
  std::size_t next = 0;
  auto fill = [&](auto&& self, int depth, std::uint64_t mask) -> void {
    if (depth == k) {
      auto [it, inserted] = memo.try_emplace(mask, 0);
      if (inserted) it->second = t.steiner_distance_mask(mask);
      entries[next++] = it->second;
      return;
    }
    for (int v = 0; v < n; ++v) self(self, depth + 1, mask | (std::uint64_t{1} << v));
  };
  fill(fill, 0, 0);
  return Hypermatrix(k, n, std::move(entries));
}

Hypermatrix zero_degenerate(const Hypermatrix& h) {
  std::vector<std::int64_t> entries(h.entries().begin(), h.entries().end());
  for (std::size_t off = 0; off < entries.size(); ++off) {
    if (entries[off] != 0 && is_degenerate_index(h.index_of(off))) entries[off] = 0;
  }
  return Hypermatrix(h.order(), h.dim(), std::move(entries));
}

std::string export_hypermatrix(const Hypermatrix& h, HypermatrixFormat format) {
  if (format == HypermatrixFormat::Json) {
    nlohmann::json doc;
    doc["k"] = h.order();
    doc["n"] = h.dim();
    doc["entries"] = std::vector<std::int64_t>(h.entries().begin(), h.entries().end());
    return doc.dump() + "\n";
  }
  std::string out = std::to_string(h.order()) + " " + std::to_string(h.dim()) + "\n";
  for (std::int64_t e : h.entries()) out += std::to_string(e) + "\n";
  return out;
}

Hypermatrix import_hypermatrix(std::string_view text, HypermatrixFormat format) {
  if (format == HypermatrixFormat::Json) {
    try {
      const auto doc = nlohmann::json::parse(text);
      return Hypermatrix(doc.at("k").get<int>(), doc.at("n").get<int>(),
                         doc.at("entries").get<std::vector<std::int64_t>>());
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::MalformedInput, std::string("hypermatrix JSON: ") + e.what());
    } catch (const Error& e) {
      fail(ErrorCode::MalformedInput, e.what());
    }
  }
  std::istringstream in{std::string(text)};
  int k = 0, n = 0;
  if (!(in >> k >> n)) fail(ErrorCode::MalformedInput, "flat-text header must be 'k n'");
  std::vector<std::int64_t> entries;
  std::int64_t value = 0;
  while (in >> value) entries.push_back(value);
  if (!in.eof()) fail(ErrorCode::MalformedInput, "flat-text entries must be integers");
  try {
    return Hypermatrix(k, n, std::move(entries));
  } catch (const Error& e) {
    fail(ErrorCode::MalformedInput, e.what());
  }
}

}  // namespace steiner
