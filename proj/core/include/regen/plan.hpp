#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "regen/gf.hpp"

namespace regen {

/// One node's stored row, as handed to a decoder. Node indices are 0-based.
struct NodeFragment {
  std::size_t node;
  std::vector<Symbol> symbols;
};

/// Symbol contributed by one helper during repair.
struct HelperSymbol {
  std::size_t helper;
  Symbol value;
};

enum class Scheme : std::uint8_t { full, partial, lower, upper, gong, timeshare };

std::string_view to_string(Scheme scheme);
Scheme parse_scheme(std::string_view text);

/// What each connected node must send to a data collector.
///
/// `nodes[j]` is the j-th connected node, `rows[j]` the row of C_DC it is
/// placed at (the order g_j), and `positions[j]` the ascending fragment
/// positions it transmits.
struct DownloadPlan {
  Scheme scheme = Scheme::full;
  std::size_t round = 0;
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> rows;
  std::vector<std::vector<std::size_t>> positions;

  std::size_t total_symbols() const noexcept;
  std::size_t symbols_for(std::size_t slot) const noexcept { return positions[slot].size(); }

  /// Picks the planned symbols out of the full fragments of the connected
  /// nodes (`fragments[j]` belongs to `nodes[j]`).
  std::vector<std::vector<Symbol>> extract(
      std::span<const std::vector<Symbol>> fragments) const;
};

/// Raises PlanPayloadMismatch unless payloads line up with the plan.
void check_payloads(const DownloadPlan& plan, std::span<const std::vector<Symbol>> payloads);

/// Position of column `column` inside the stored row of `node` (the diagonal
/// is elided), and the inverse mapping.
constexpr std::size_t stored_position(std::size_t node, std::size_t column) noexcept {
  return column < node ? column : column - 1;
}
constexpr std::size_t stored_column(std::size_t node, std::size_t position) noexcept {
  return position < node ? position : position + 1;
}

/// Stored row of `failed` in a code where node i keeps entry (i, j) of a
/// symmetric n x n array for every j != i. Helpers must be exactly the n-1
/// other nodes, each sending the entry it shares with `failed`. Pure
/// placement: no field arithmetic.
std::vector<Symbol> transfer_repair(std::span<const HelperSymbol> helpers, std::size_t failed,
                                    std::size_t n);

/// Raises DuplicateIndex / IndexOutOfRange for bad node lists.
void check_distinct_nodes(std::span<const std::size_t> nodes, std::size_t n);

}  // namespace regen
