#pragma once

#include <span>
#include <vector>

#include "regen/counter.hpp"
#include "regen/gf.hpp"

namespace regen::poly {

/// Polynomials are coefficient vectors, lowest degree first. The zero
/// polynomial may be empty or all zeros.
using Poly = std::vector<Symbol>;

void trim(Poly& p);
std::size_t degree(const Poly& p);  // degree of zero polynomial reported as 0

Poly add(const Field& f, std::span<const Symbol> a, std::span<const Symbol> b,
         OpCounter* counter = nullptr);
Poly sub(const Field& f, std::span<const Symbol> a, std::span<const Symbol> b,
         OpCounter* counter = nullptr);
Poly mul(const Field& f, std::span<const Symbol> a, std::span<const Symbol> b,
         OpCounter* counter = nullptr);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Schoolbook long division; the divisor must have a nonzero leading term.
DivMod divmod(const Field& f, std::span<const Symbol> dividend, std::span<const Symbol> divisor,
              OpCounter* counter = nullptr);

Symbol eval(const Field& f, std::span<const Symbol> p, Symbol x, OpCounter* counter = nullptr);

/// prod (x - r) over the roots.
Poly from_roots(const Field& f, std::span<const Symbol> roots, OpCounter* counter = nullptr);

/// The unique polynomial of degree < points.size() through (points[i], values[i]).
Poly interpolate(const Field& f, std::span<const Symbol> points, std::span<const Symbol> values,
                 OpCounter* counter = nullptr);

}  // namespace regen::poly
