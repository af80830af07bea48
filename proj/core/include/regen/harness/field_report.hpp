#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "regen/gf.hpp"

namespace regen::harness {

/// Field-size requirement of one construction at given (n, k, d).
struct FieldSizeRow {
  std::string construction;
  std::string bound;
  bool bound_met = false;
  /// For constructions implemented here: whether building the code
  /// succeeded. Empty for bound-only entries.
  std::optional<bool> built;
};

/// Bounds compared: complete-graph baseline C(n,2) <= q+1, repair-by-
/// transfer n <= q+1, product-matrix psrs and Vandermonde n <= q, Cauchy
/// systematic form n <= q+k-d (bound only), generator-polynomial psrs
/// n <= q-1. Transfer codes use d = n-1.
std::vector<FieldSizeRow> field_size_report(const Field& field, std::size_t n, std::size_t k,
                                            std::size_t d);

void write_field_report(std::ostream& out, const Field& field, std::size_t n, std::size_t k,
                        std::size_t d, const std::vector<FieldSizeRow>& rows);

}  // namespace regen::harness
