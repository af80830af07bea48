#include "regen/ntt.hpp"

#include <bit>
#include <string>

namespace regen {

namespace {

constexpr Symbol kFermatGenerator = 3;

void check_size(const Field& field, std::size_t size) {
  if (field.kind() != FieldKind::fermat) {
    raise(ErrorCode::WrongField, "NTT requires the Fermat field, got " + field.name());
  }
  if (size == 0 || !std::has_single_bit(size) || size > 65536) {
    raise(ErrorCode::NotPowerOfTwo,
          "NTT size " + std::to_string(size) + " is not a power of two dividing 65536");
  }
}

void transform(const Field& field, std::vector<Symbol>& a, Symbol root, OpCounter* counter) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const Symbol step = field.pow(root, n / len);
    for (std::size_t start = 0; start < n; start += len) {
      Symbol w = 1;
      for (std::size_t i = 0; i < len / 2; ++i) {
        const Symbol u = a[start + i];
        const Symbol v = field.mul(a[start + i + len / 2], w);
        a[start + i] = field.add(u, v);
        a[start + i + len / 2] = field.sub(u, v);
        w = field.mul(w, step);
      }
    }
    count_mul(counter, n / 2);
    count_add(counter, n);
  }
}

}  // namespace

Symbol root_of_unity(const Field& field, std::size_t size) {
  check_size(field, size);
  return field.pow(kFermatGenerator, 65536 / size);
}

std::vector<Symbol> ntt_evaluate(const Field& field, std::span<const Symbol> coeffs,
                                 std::size_t size, OpCounter* counter) {
  check_size(field, size);
  if (coeffs.size() > size) {
    raise(ErrorCode::DimensionMismatch, std::to_string(coeffs.size()) +
                                            " coefficients exceed NTT size " +
                                            std::to_string(size));
  }
  std::vector<Symbol> a(coeffs.begin(), coeffs.end());
  a.resize(size, 0);
  transform(field, a, root_of_unity(field, size), counter);
  return a;
}

std::vector<Symbol> ntt_interpolate(const Field& field, std::span<const Symbol> values,
                                    OpCounter* counter) {
  const std::size_t size = values.size();
  check_size(field, size);
  std::vector<Symbol> a(values.begin(), values.end());
  transform(field, a, field.inv(root_of_unity(field, size)), counter);
  const Symbol scale = field.inv(field.from_integer(size));
  for (auto& x : a) x = field.mul(x, scale);
  count_mul(counter, size);
  return a;
}

}  // namespace regen
