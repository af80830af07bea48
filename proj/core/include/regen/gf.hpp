#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "regen/error.hpp"

namespace regen {

/// Raw field symbol. Always below the order of the field it belongs to.
using Symbol = std::uint32_t;

enum class FieldKind : std::uint8_t { prime = 0, binary = 1, fermat = 2 };

/// Finite field descriptor: GF(p), GF(2^m) or the Fermat prime field GF(65537).
///
/// A Field is a small value type. Arithmetic works on raw Symbols; the
/// caller is responsible for keeping symbols of different fields apart
/// (FieldMatrix and Element check this for you).
///
/// Binary fields use fixed reduction polynomials, one per degree, so that
/// serialized fragments are reproducible:
///
///   m : polynomial            m : polynomial
///   1 : x+1                   9 : x^9+x^4+1
///   2 : x^2+x+1              10 : x^10+x^3+1
///   3 : x^3+x+1              11 : x^11+x^2+1
///   4 : x^4+x+1              12 : x^12+x^6+x^4+x+1
///   5 : x^5+x^2+1            13 : x^13+x^4+x^3+x+1
///   6 : x^6+x+1              14 : x^14+x^10+x^6+x+1
///   7 : x^7+x^3+1            15 : x^15+x+1
///   8 : x^8+x^4+x^3+x^2+1    16 : x^16+x^12+x^3+x+1
class Field {
 public:
  static constexpr std::uint32_t kFermatPrime = 65537;

  static Field prime(std::uint32_t p);
  static Field binary(unsigned degree);
  static Field fermat();

  /// Parses "prime:7", "binary:4", "gf2^4", "fermat".
  static Field parse(std::string_view spec);

  FieldKind kind() const noexcept { return kind_; }
  /// The prime p for prime/Fermat fields, the degree m for binary fields.
  std::uint32_t parameter() const noexcept { return parameter_; }
  std::uint64_t order() const noexcept { return order_; }
  std::uint32_t characteristic() const noexcept {
    return kind_ == FieldKind::binary ? 2 : parameter_;
  }
  bool characteristic_two() const noexcept { return characteristic() == 2; }
  /// Reduction polynomial bitmask including the x^m term (binary fields only).
  std::uint32_t reduction_polynomial() const noexcept { return poly_; }
  /// Smallest generator of the multiplicative group.
  Symbol primitive() const noexcept { return primitive_; }

  bool contains(std::uint64_t value) const noexcept { return value < order_; }

  Symbol add(Symbol a, Symbol b) const noexcept {
    if (kind_ == FieldKind::binary) return a ^ b;
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Symbol>(s >= parameter_ ? s - parameter_ : s);
  }
  Symbol sub(Symbol a, Symbol b) const noexcept {
    if (kind_ == FieldKind::binary) return a ^ b;
    return a >= b ? a - b : static_cast<Symbol>(std::uint64_t{a} + parameter_ - b);
  }
  Symbol neg(Symbol a) const noexcept {
    if (kind_ == FieldKind::binary || a == 0) return a;
    return parameter_ - a;
  }
  Symbol mul(Symbol a, Symbol b) const noexcept {
    if (kind_ == FieldKind::binary) return binary_mul(a, b);
    return static_cast<Symbol>((std::uint64_t{a} * b) % parameter_);
  }
  Symbol inv(Symbol a) const;
  Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }
  Symbol pow(Symbol base, std::uint64_t exponent) const noexcept;

  /// Image of the integer `value` under the ring map Z -> GF(q).
  Symbol from_integer(std::uint64_t value) const noexcept {
    return static_cast<Symbol>(value % characteristic());
  }

  /// n distinct evaluation points in canonical order: 1, 2, ..., n for
  /// prime fields (0 last when n = q); 1, w, w^2, ... then 0 for binary.
  std::vector<Symbol> enumerate(std::size_t count) const;

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.kind_ == b.kind_ && a.parameter_ == b.parameter_;
  }

 private:
  Field(FieldKind kind, std::uint32_t parameter, std::uint64_t order, std::uint32_t poly);

  Symbol binary_mul(Symbol a, Symbol b) const noexcept;
  Symbol find_primitive() const;

  FieldKind kind_;
  std::uint32_t parameter_;
  std::uint64_t order_;
  std::uint32_t poly_;
  Symbol primitive_ = 1;
};

bool is_prime(std::uint64_t value);

/// Checked scalar: a symbol tagged with its field. Mixed-field arithmetic
/// raises FieldMismatch.
class Element {
 public:
  Element(Field field, std::uint64_t value);

  const Field& field() const noexcept { return field_; }
  Symbol value() const noexcept { return value_; }

  Element inv() const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  friend Element operator-(const Element& a);

  friend bool operator==(const Element& a, const Element& b) noexcept {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  Field field_;
  Symbol value_;
};

void require_same_field(const Field& a, const Field& b);

}  // namespace regen
