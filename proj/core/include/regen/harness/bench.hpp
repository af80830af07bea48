#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "regen/gf.hpp"

namespace regen::harness {

enum class BenchFamily { rbt_vs_shah, mbr_naive_vs_ntt };

std::string_view to_string(BenchFamily family);
BenchFamily parse_family(std::string_view text);

struct BenchRow {
  std::size_t n = 0;
  std::string contender;
  std::uint64_t multiplications = 0;
  std::uint64_t additions = 0;
  std::uint64_t symbols = 0;
};

struct BenchExclusion {
  std::size_t n = 0;
  std::string contender;
  std::string reason;
};

struct BenchReport {
  BenchFamily family = BenchFamily::rbt_vs_shah;
  std::vector<BenchRow> rows;
  std::vector<BenchExclusion> excluded;
  bool trend_checked = false;
  bool trend_holds = true;
  std::string trend;

  const BenchRow* find(std::size_t n, std::string_view contender) const;
};

/// Encoding operation counts for one family.
///
/// rbt-vs-shah: systematic repair-by-transfer encoding against the complete
/// graph baseline at k = n/2. The trend is a strictly increasing shah/rbt
/// multiplication ratio.
///
/// mbr-naive-vs-ntt: the psrs-backed product-matrix code over GF(65537) at
/// k = 3n/8, d = n/2, encoded as the dense product Psi M ("naive") and as
/// one NTT-based polynomial evaluation per column ("ntt"). The trend is that
/// ntt needs fewer multiplications than naive for some n in the range.
///
/// A contender that cannot be built for a size (field too small, n not
/// divisible as required) is listed in `excluded` instead. Trends are only
/// checked when at least two sizes have both contenders.
BenchReport bench_compare(BenchFamily family, const std::vector<std::size_t>& sizes,
                          const Field& field);

/// CSV with header n,contender,multiplications,additions,symbols; exclusions
/// and the trend verdict follow as '#' comment lines.
void write_csv(std::ostream& out, const BenchReport& report);

}  // namespace regen::harness
