#include "regen/poly.hpp"

#include <algorithm>

namespace regen::poly {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::size_t degree(const Poly& p) {
  for (std::size_t i = p.size(); i > 0; --i)
    if (p[i - 1] != 0) return i - 1;
  return 0;
}

Poly add(const Field& f, std::span<const Symbol> a, std::span<const Symbol> b, OpCounter* counter) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Symbol x = i < a.size() ? a[i] : 0;
    const Symbol y = i < b.size() ? b[i] : 0;
    out[i] = f.add(x, y);
  }
  count_add(counter, std::min(a.size(), b.size()));
  return out;
}

Poly sub(const Field& f, std::span<const Symbol> a, std::span<const Symbol> b, OpCounter* counter) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Symbol x = i < a.size() ? a[i] : 0;
    const Symbol y = i < b.size() ? b[i] : 0;
    out[i] = f.sub(x, y);
  }
  count_add(counter, out.size());
  return out;
}

Poly mul(const Field& f, std::span<const Symbol> a, std::span<const Symbol> b, OpCounter* counter) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  count_mul(counter, std::uint64_t{a.size()} * b.size());
  count_add(counter, std::uint64_t{a.size()} * b.size());
  return out;
}

DivMod divmod(const Field& f, std::span<const Symbol> dividend, std::span<const Symbol> divisor,
              OpCounter* counter) {
  Poly d(divisor.begin(), divisor.end());
  trim(d);
  if (d.empty()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
  Poly rem(dividend.begin(), dividend.end());
  trim(rem);
  if (rem.size() < d.size()) return {{}, rem};
  const std::size_t dd = d.size() - 1;
  Poly quot(rem.size() - dd, 0);
  const Symbol lead_inv = f.inv(d.back());
  const bool monic = d.back() == 1;
  for (std::size_t i = rem.size(); i-- > dd;) {
    const Symbol coef = monic ? rem[i] : f.mul(rem[i], lead_inv);
    if (!monic) count_mul(counter);
    quot[i - dd] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(coef, d[j]));
    count_mul(counter, dd);
    count_add(counter, dd);
  }
  rem.resize(dd);
  trim(rem);
  return {std::move(quot), std::move(rem)};
}

Symbol eval(const Field& f, std::span<const Symbol> p, Symbol x, OpCounter* counter) {
  Symbol acc = 0;
  for (std::size_t i = p.size(); i > 0; --i) acc = f.add(f.mul(acc, x), p[i - 1]);
  if (!p.empty()) {
    count_mul(counter, p.size() - 1);
    count_add(counter, p.size() - 1);
  }
  return acc;
}

Poly from_roots(const Field& f, std::span<const Symbol> roots, OpCounter* counter) {
  Poly out{1};
  for (Symbol r : roots) {
    Poly next(out.size() + 1, 0);
    const Symbol neg = f.neg(r);
    for (std::size_t i = 0; i < out.size(); ++i) {
      next[i + 1] = f.add(next[i + 1], out[i]);
      next[i] = f.add(next[i], f.mul(neg, out[i]));
    }
    count_mul(counter, out.size());
    count_add(counter, out.size());
    out = std::move(next);
  }
  return out;
}

Poly interpolate(const Field& f, std::span<const Symbol> points, std::span<const Symbol> values,
                 OpCounter* counter) {
  const std::size_t n = points.size();
  if (values.size() != n) raise(ErrorCode::DimensionMismatch, "interpolate: length mismatch");
  Poly out(n, 0);
  if (n == 0) return out;
  const Poly master = from_roots(f, points, counter);
  for (std::size_t i = 0; i < n; ++i) {
    // master / (x - points[i]) by synthetic division
    Poly basis(n, 0);
    Symbol carry = 0;
    for (std::size_t j = n; j > 0; --j) {
      carry = f.add(master[j], f.mul(carry, points[i]));
      basis[j - 1] = carry;
    }
    Symbol denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Symbol diff = f.sub(points[i], points[j]);
      if (diff == 0) raise(ErrorCode::DuplicatePosition, "interpolation points are not distinct");
      denom = f.mul(denom, diff);
    }
    const Symbol weight = f.div(values[i], denom);
    for (std::size_t j = 0; j < n; ++j) out[j] = f.add(out[j], f.mul(weight, basis[j]));
    count_mul(counter, 3 * n);
    count_add(counter, 3 * n);
  }
  return out;
}

}  // namespace regen::poly
