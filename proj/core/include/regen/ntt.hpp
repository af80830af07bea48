#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "regen/counter.hpp"
#include "regen/gf.hpp"

namespace regen {

/// Principal root of unity of order `size` in GF(65537), size a power of two
/// dividing 65536.
Symbol root_of_unity(const Field& field, std::size_t size);

/// Evaluates the polynomial with the given coefficients (lowest degree
/// first) at w^0, w^1, ..., w^(size-1) where w = root_of_unity(size).
/// Radix-2 decimation in time; counts one multiplication and two additions
/// per butterfly.
std::vector<Symbol> ntt_evaluate(const Field& field, std::span<const Symbol> coeffs,
                                 std::size_t size, OpCounter* counter = nullptr);

/// Inverse of ntt_evaluate: recovers `values.size()` coefficients from the
/// evaluations at every root of unity of that order.
std::vector<Symbol> ntt_interpolate(const Field& field, std::span<const Symbol> values,
                                    OpCounter* counter = nullptr);

}  // namespace regen
