#include "regen/gf.hpp"

#include <array>
#include <charconv>
#include <string>

namespace regen {

namespace {

constexpr std::array<std::uint32_t, 17> kReductionPolynomials = {
    0,        // unused
    0x3,      // x + 1
    0x7,      // x^2 + x + 1
    0xB,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x89,     // x^7 + x^3 + 1
    0x11D,    // x^8 + x^4 + x^3 + x^2 + 1
    0x211,    // x^9 + x^4 + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1053,   // x^12 + x^6 + x^4 + x + 1
    0x201B,   // x^13 + x^4 + x^3 + x + 1
    0x4443,   // x^14 + x^10 + x^6 + x + 1
    0x8003,   // x^15 + x + 1
    0x1100B,  // x^16 + x^12 + x^3 + x + 1
};

std::vector<std::uint64_t> prime_factors(std::uint64_t value) {
  std::vector<std::uint64_t> factors;
  for (std::uint64_t f = 2; f * f <= value; ++f) {
    if (value % f == 0) {
      factors.push_back(f);
      while (value % f == 0) value /= f;
    }
  }
  if (value > 1) factors.push_back(value);
  return factors;
}

std::uint32_t parse_number(std::string_view text, std::string_view spec) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    raise(ErrorCode::ParamsInvalid, "bad field spec '" + std::string(spec) + "'");
  }
  return value;
}

}  // namespace

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t f = 2; f * f <= value; ++f) {
    if (value % f == 0) return false;
  }
  return true;
}

Field::Field(FieldKind kind, std::uint32_t parameter, std::uint64_t order, std::uint32_t poly)
    : kind_(kind), parameter_(parameter), order_(order), poly_(poly) {
  primitive_ = find_primitive();
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) {
    raise(ErrorCode::NonPrimeModulus, "modulus " + std::to_string(p) + " is not prime");
  }
  return Field(FieldKind::prime, p, p, 0);
}

Field Field::binary(unsigned degree) {
  if (degree < 1 || degree > 16) {
    raise(ErrorCode::UnsupportedDegree,
          "binary field degree " + std::to_string(degree) + " outside [1,16]");
  }
  return Field(FieldKind::binary, degree, std::uint64_t{1} << degree,
               kReductionPolynomials[degree]);
}

Field Field::fermat() { return Field(FieldKind::fermat, kFermatPrime, kFermatPrime, 0); }

Field Field::parse(std::string_view spec) {
  if (spec == "fermat" || spec == "gf65537-fermat") return fermat();
  auto colon = spec.find(':');
  if (colon != std::string_view::npos) {
    auto kind = spec.substr(0, colon);
    auto value = parse_number(spec.substr(colon + 1), spec);
    if (kind == "prime") return prime(value);
    if (kind == "binary") return binary(value);
  }
  if (spec.starts_with("gf2^")) return binary(parse_number(spec.substr(4), spec));
  raise(ErrorCode::ParamsInvalid, "bad field spec '" + std::string(spec) + "'");
}

Symbol Field::binary_mul(Symbol a, Symbol b) const noexcept {
  const unsigned m = parameter_;
  const std::uint32_t top = std::uint32_t{1} << m;
  std::uint32_t result = 0;
  std::uint32_t x = a;
  // Branch-free shift-and-add; the masks select x or the reduction term.
  while (b != 0) {
    result ^= x & (0u - (b & 1u));
    b >>= 1;
    x <<= 1;
    x ^= poly_ & (0u - ((x & top) >> m));
  }
  return result;
}

Symbol Field::pow(Symbol base, std::uint64_t exponent) const noexcept {
  Symbol result = 1;
  while (exponent != 0) {
    if (exponent & 1u) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

Symbol Field::inv(Symbol a) const {
  if (a == 0) raise(ErrorCode::DivisionByZero, "inverse of zero");
  if (kind_ == FieldKind::binary) return pow(a, order_ - 2);
  // extended Euclid on (p, a)
  std::int64_t r0 = parameter_, r1 = a;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t0 < 0) t0 += parameter_;
  return static_cast<Symbol>(t0);
}

Symbol Field::find_primitive() const {
  const std::uint64_t group = order_ - 1;
  if (group == 1) return 1;
  const auto factors = prime_factors(group);
  for (std::uint64_t candidate = 2; candidate < order_; ++candidate) {
    bool generator = true;
    for (auto f : factors) {
      if (pow(static_cast<Symbol>(candidate), group / f) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return static_cast<Symbol>(candidate);
  }
  return 1;
}

std::vector<Symbol> Field::enumerate(std::size_t count) const {
  if (count > order_) {
    raise(ErrorCode::FieldTooSmall, std::to_string(count) + " distinct points requested from " +
                                        name() + " of order " + std::to_string(order_));
  }
  std::vector<Symbol> points;
  points.reserve(count);
  const std::size_t nonzero = std::min<std::uint64_t>(count, order_ - 1);
  if (kind_ == FieldKind::binary) {
    Symbol x = 1;
    for (std::size_t i = 0; i < nonzero; ++i) {
      points.push_back(x);
      x = mul(x, primitive_);
    }
  } else {
    for (std::size_t i = 1; i <= nonzero; ++i) points.push_back(static_cast<Symbol>(i));
  }
  if (points.size() < count) points.push_back(0);
  return points;
}

std::string Field::name() const {
  switch (kind_) {
    case FieldKind::prime:
      return "GF(" + std::to_string(parameter_) + ")";
    case FieldKind::binary:
      return "GF(2^" + std::to_string(parameter_) + ")";
    case FieldKind::fermat:
      return "GF(65537)";
  }
  return "GF(?)";
}

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) raise(ErrorCode::FieldMismatch, a.name() + " vs " + b.name());
}

Element::Element(Field field, std::uint64_t value) : field_(field), value_(0) {
  if (!field_.contains(value)) {
    raise(ErrorCode::IndexOutOfRange,
          std::to_string(value) + " is not an element of " + field_.name());
  }
  value_ = static_cast<Symbol>(value);
}

Element Element::inv() const { return Element(field_, field_.inv(value_)); }

Element operator+(const Element& a, const Element& b) {
  require_same_field(a.field_, b.field_);
  return Element(a.field_, a.field_.add(a.value_, b.value_));
}

Element operator-(const Element& a, const Element& b) {
  require_same_field(a.field_, b.field_);
  return Element(a.field_, a.field_.sub(a.value_, b.value_));
}

Element operator*(const Element& a, const Element& b) {
  require_same_field(a.field_, b.field_);
  return Element(a.field_, a.field_.mul(a.value_, b.value_));
}

Element operator/(const Element& a, const Element& b) {
  require_same_field(a.field_, b.field_);
  return Element(a.field_, a.field_.div(a.value_, b.value_));
}

Element operator-(const Element& a) { return Element(a.field_, a.field_.neg(a.value_)); }

}  // namespace regen
