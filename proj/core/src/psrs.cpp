#include "regen/psrs.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "regen/ntt.hpp"

namespace regen {

namespace {

void check_nkd(std::size_t n, std::size_t k, std::size_t d) {
  if (k < 1 || k > d || d >= n) {
    raise(ErrorCode::ParamsInvalid, "PSRS parameters need 1 <= k <= d < n, got (n,k,d)=(" +
                                        std::to_string(n) + "," + std::to_string(k) + "," +
                                        std::to_string(d) + ")");
  }
}

std::vector<Share> take_shares(std::span<const Share> shares, std::size_t n, std::size_t needed) {
  if (shares.size() < needed) {
    raise(ErrorCode::InsufficientSymbols, "need " + std::to_string(needed) + " symbols, got " +
                                              std::to_string(shares.size()));
  }
  std::vector<bool> seen(n, false);
  std::vector<Share> out;
  out.reserve(needed);
  for (const auto& s : shares) {
    if (s.position >= n) {
      raise(ErrorCode::IndexOutOfRange, "position " + std::to_string(s.position) +
                                            " outside codeword of length " + std::to_string(n));
    }
    if (seen[s.position]) {
      raise(ErrorCode::DuplicatePosition, "position " + std::to_string(s.position) + " repeated");
    }
    seen[s.position] = true;
    if (out.size() < needed) out.push_back(s);
  }
  return out;
}

}  // namespace

PsrsEvalCode::PsrsEvalCode(Field field, std::size_t n, std::size_t k, std::size_t d)
    : PsrsEvalCode(field, n, k, d, field.enumerate(std::min<std::uint64_t>(n, field.order()))) {}

PsrsEvalCode::PsrsEvalCode(Field field, std::size_t n, std::size_t k, std::size_t d,
                           std::vector<Symbol> points)
    : field_(field),
      n_(n),
      k_(k),
      d_(d),
      points_(std::move(points)),
      lagrange_(field, k, k),
      generator_(field, n, d) {
  check_nkd(n, k, d);
  if (n > field_.order()) {
    raise(ErrorCode::FieldTooSmall, "PSRS length " + std::to_string(n) + " exceeds " +
                                        field_.name() + " (needs n <= q)");
  }
  if (points_.size() != n) raise(ErrorCode::ParamsInvalid, "need exactly n evaluation points");
  {
    auto sorted = points_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      raise(ErrorCode::DuplicatePoints, "evaluation points are not distinct");
    }
  }
  const std::span<const Symbol> systematic(points_.data(), k_);
  gamma_ = poly::from_roots(field_, systematic);

  std::vector<Symbol> unit(k_, 0);
  for (std::size_t i = 0; i < k_; ++i) {
    unit.assign(k_, 0);
    unit[i] = 1;
    const auto basis = poly::interpolate(field_, systematic, unit);
    for (std::size_t j = 0; j < k_; ++j) lagrange_(j, i) = basis[j];
  }

  for (std::size_t l = 0; l < n_; ++l) {
    const Symbol x = points_[l];
    for (std::size_t i = 0; i < k_; ++i) {
      Symbol num = 1, den = 1;
      for (std::size_t j = 0; j < k_; ++j) {
        if (j == i) continue;
        num = field_.mul(num, field_.sub(x, points_[j]));
        den = field_.mul(den, field_.sub(points_[i], points_[j]));
      }
      generator_(l, i) = field_.div(num, den);
    }
    const Symbol g = poly::eval(field_, gamma_, x);
    Symbol power = 1;
    for (std::size_t i = 0; i < d_ - k_; ++i) {
      generator_(l, k_ + i) = field_.mul(power, g);
      power = field_.mul(power, x);
    }
  }

  if (field_.kind() == FieldKind::fermat) {
    const std::size_t size = std::bit_ceil(n_);
    const Symbol root = root_of_unity(field_, size);
    bool powers = true;
    Symbol x = 1;
    for (std::size_t i = 0; i < n_ && powers; ++i) {
      powers = points_[i] == x;
      x = field_.mul(x, root);
    }
    if (powers) {
      ntt_size_ = size;
      gamma_spectrum_ = ntt_evaluate(field_, gamma_, size);
    }
  }
}

PsrsEvalCode PsrsEvalCode::on_roots_of_unity(std::size_t n, std::size_t k, std::size_t d) {
  const Field f = Field::fermat();
  if (n == 0 || n > 65536) raise(ErrorCode::FieldTooSmall, "n outside the Fermat NTT range");
  const Symbol root = root_of_unity(f, std::bit_ceil(n));
  std::vector<Symbol> points(n);
  Symbol x = 1;
  for (auto& p : points) {
    p = x;
    x = f.mul(x, root);
  }
  return PsrsEvalCode(f, n, k, d, std::move(points));
}

void PsrsEvalCode::check_message(std::span<const Symbol> a, std::span<const Symbol> b) const {
  if (a.size() != k_ || b.size() != d_ - k_) {
    raise(ErrorCode::WrongMessageLength, "PSRS message must have " + std::to_string(k_) + "+" +
                                             std::to_string(d_ - k_) + " symbols");
  }
}

poly::Poly PsrsEvalCode::coding_polynomial(std::span<const Symbol> a, std::span<const Symbol> b,
                                           OpCounter* counter) const {
  check_message(a, b);
  auto phi = mul(lagrange_, a, counter);
  auto delta = poly::mul(field_, gamma_, b, counter);
  auto c = poly::add(field_, phi, delta, counter);
  c.resize(d_, 0);
  return c;
}

std::vector<Symbol> PsrsEvalCode::encode(std::span<const Symbol> a, std::span<const Symbol> b,
                                         OpCounter* counter, Route route) const {
  check_message(a, b);
  if (route == Route::automatic) route = ntt_eligible() ? Route::ntt : Route::naive;
  if (route == Route::ntt) {
    if (!ntt_eligible()) {
      raise(ErrorCode::WrongField, "NTT route needs Fermat-field roots of unity as points");
    }
    const auto phi = mul(lagrange_, a, counter);
    auto values = ntt_evaluate(field_, phi, ntt_size_, counter);
    if (!b.empty()) {
      const auto spectrum = ntt_evaluate(field_, b, ntt_size_, counter);
      for (std::size_t i = 0; i < ntt_size_; ++i) {
        values[i] = field_.add(values[i], field_.mul(gamma_spectrum_[i], spectrum[i]));
      }
      count_mul(counter, ntt_size_);
      count_add(counter, ntt_size_);
    }
    values.resize(n_);
    return values;
  }
  const auto c = coding_polynomial(a, b, counter);
  std::vector<Symbol> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = poly::eval(field_, c, points_[i], counter);
  return out;
}

std::vector<Share> PsrsEvalCode::checked_shares(std::span<const Share> shares,
                                                std::size_t needed) const {
  return take_shares(shares, n_, needed);
}

PsrsMessage PsrsEvalCode::decode_full(std::span<const Share> shares, OpCounter* counter) const {
  const auto used = checked_shares(shares, d_);
  std::vector<Symbol> xs, ys;
  for (const auto& s : used) {
    xs.push_back(points_[s.position]);
    ys.push_back(s.value);
  }
  const auto c = poly::interpolate(field_, xs, ys, counter);
  auto [quotient, remainder] = poly::divmod(field_, c, gamma_, counter);
  PsrsMessage msg;
  quotient.resize(d_ - k_, 0);
  msg.b = std::move(quotient);
  msg.a.resize(k_);
  for (std::size_t i = 0; i < k_; ++i) msg.a[i] = poly::eval(field_, remainder, points_[i], counter);
  return msg;
}

std::vector<Symbol> PsrsEvalCode::decode_partial(std::span<const Share> shares,
                                                 std::span<const Symbol> b,
                                                 OpCounter* counter) const {
  if (b.size() != d_ - k_) {
    raise(ErrorCode::WrongMessageLength, "non-systematic part must have " +
                                             std::to_string(d_ - k_) + " symbols");
  }
  const auto used = checked_shares(shares, k_);
  std::vector<Symbol> xs, phis;
  for (const auto& s : used) {
    const Symbol z = points_[s.position];
    const Symbol delta = field_.mul(poly::eval(field_, gamma_, z, counter),
                                    poly::eval(field_, b, z, counter));
    count_mul(counter);
    xs.push_back(z);
    phis.push_back(field_.sub(s.value, delta));
    count_add(counter);
  }
  const auto phi = poly::interpolate(field_, xs, phis, counter);
  std::vector<Symbol> a(k_);
  for (std::size_t i = 0; i < k_; ++i) a[i] = poly::eval(field_, phi, points_[i], counter);
  return a;
}

// ---------------------------------------------------------------------------

PsrsGenPolyCode::PsrsGenPolyCode(Field field, std::size_t n, std::size_t k, std::size_t d)
    : field_(field), n_(n), k_(k), d_(d), alpha_(field.primitive()) {
  check_nkd(n, k, d);
  if (n + 1 > field_.order()) {
    raise(ErrorCode::FieldTooSmall, "generator-polynomial PSRS needs n <= q-1, got n=" +
                                        std::to_string(n) + " over " + field_.name());
  }
  std::vector<Symbol> roots;
  Symbol x = 1;
  for (std::size_t i = 0; i < n_ - k_; ++i) {
    roots.push_back(x);
    x = field_.mul(x, alpha_);
  }
  g0_ = poly::from_roots(field_, roots);
  g1_ = poly::from_roots(field_, std::span<const Symbol>(roots.data(), n_ - d_));
}

poly::Poly PsrsGenPolyCode::encode_systematic_part(std::span<const Symbol> a,
                                                   OpCounter* counter) const {
  if (a.size() != k_) raise(ErrorCode::WrongMessageLength, "a(x) must have k coefficients");
  poly::Poly shifted(n_, 0);
  std::copy(a.begin(), a.end(), shifted.begin() + static_cast<std::ptrdiff_t>(n_ - k_));
  const auto r0 = poly::divmod(field_, shifted, g0_, counter).remainder;
  auto c0 = poly::sub(field_, shifted, r0, counter);
  c0.resize(n_, 0);
  return c0;
}

poly::Poly PsrsGenPolyCode::encode_nonsystematic_part(std::span<const Symbol> b,
                                                      OpCounter* counter) const {
  if (b.size() != d_ - k_) raise(ErrorCode::WrongMessageLength, "b(x) must have d-k coefficients");
  poly::Poly shifted(n_ - k_, 0);
  std::copy(b.begin(), b.end(), shifted.begin() + static_cast<std::ptrdiff_t>(n_ - d_));
  const auto r1 = poly::divmod(field_, shifted, g1_, counter).remainder;
  auto c1 = poly::sub(field_, shifted, r1, counter);
  c1.resize(n_, 0);
  return c1;
}

std::vector<Symbol> PsrsGenPolyCode::encode(std::span<const Symbol> a, std::span<const Symbol> b,
                                            OpCounter* counter) const {
  const auto c0 = encode_systematic_part(a, counter);
  const auto c1 = encode_nonsystematic_part(b, counter);
  auto c = poly::add(field_, c0, c1, counter);
  c.resize(n_, 0);
  return c;
}

std::vector<Share> PsrsGenPolyCode::checked_shares(std::span<const Share> shares,
                                                   std::size_t needed) const {
  return take_shares(shares, n_, needed);
}

PsrsMessage PsrsGenPolyCode::decode_full(std::span<const Share> shares, OpCounter* counter,
                                         bool cross_check) const {
  const auto used = checked_shares(shares, d_);
  std::vector<Symbol> received(n_, 0);
  std::vector<bool> known(n_, false);
  for (const auto& s : used) {
    received[s.position] = s.value;
    known[s.position] = true;
  }
  std::vector<std::size_t> erasures;
  for (std::size_t p = 0; p < n_; ++p)
    if (!known[p]) erasures.push_back(p);
  const auto c = forney_fill_erasures(field_, alpha_, n_ - d_, received, erasures, counter);

  PsrsMessage msg;
  msg.a.assign(c.begin() + static_cast<std::ptrdiff_t>(n_ - k_), c.end());
  const auto c0 = encode_systematic_part(msg.a, counter);
  const auto c1 = poly::sub(field_, c, c0, counter);
  msg.b.assign(c1.begin() + static_cast<std::ptrdiff_t>(n_ - d_),
               c1.begin() + static_cast<std::ptrdiff_t>(n_ - k_));

  if (cross_check && !(msg == decode_full_linear(used))) {
    raise(ErrorCode::DecodeMismatch, "Forney decoding disagrees with the linear-system oracle");
  }
  return msg;
}

PsrsMessage PsrsGenPolyCode::decode_full_linear(std::span<const Share> shares) const {
  const auto used = checked_shares(shares, d_);
  Matrix system(field_, d_, d_);
  std::vector<Symbol> unit_a(k_), unit_b(d_ - k_);
  for (std::size_t j = 0; j < d_; ++j) {
    std::fill(unit_a.begin(), unit_a.end(), 0);
    std::fill(unit_b.begin(), unit_b.end(), 0);
    if (j < k_) unit_a[j] = 1;
    else unit_b[j - k_] = 1;
    const auto column = encode(unit_a, unit_b);
    for (std::size_t r = 0; r < d_; ++r) system(r, j) = column[used[r].position];
  }
  std::vector<Symbol> rhs(d_);
  for (std::size_t r = 0; r < d_; ++r) rhs[r] = used[r].value;
  const auto x = solve(system, rhs);
  return {std::vector<Symbol>(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k_)),
          std::vector<Symbol>(x.begin() + static_cast<std::ptrdiff_t>(k_), x.end())};
}

std::vector<Symbol> PsrsGenPolyCode::decode_partial(std::span<const Share> shares,
                                                    std::span<const Symbol> b,
                                                    OpCounter* counter) const {
  const auto c1 = encode_nonsystematic_part(b, counter);
  const auto used = checked_shares(shares, k_);
  std::vector<Symbol> received(n_, 0);
  std::vector<bool> known(n_, false);
  for (const auto& s : used) {
    received[s.position] = field_.sub(s.value, c1[s.position]);
    known[s.position] = true;
  }
  count_add(counter, used.size());
  std::vector<std::size_t> erasures;
  for (std::size_t p = 0; p < n_; ++p)
    if (!known[p]) erasures.push_back(p);
  const auto c0 = forney_fill_erasures(field_, alpha_, n_ - k_, received, erasures, counter);
  return std::vector<Symbol>(c0.begin() + static_cast<std::ptrdiff_t>(n_ - k_), c0.end());
}

std::vector<Symbol> forney_fill_erasures(const Field& f, Symbol alpha, std::size_t check_roots,
                                         std::span<const Symbol> received,
                                         std::span<const std::size_t> erasures,
                                         OpCounter* counter) {
  if (erasures.size() > check_roots) {
    raise(ErrorCode::InsufficientSymbols, std::to_string(erasures.size()) +
                                              " erasures exceed the " +
                                              std::to_string(check_roots) + " check symbols");
  }
  std::vector<Symbol> out(received.begin(), received.end());
  if (erasures.empty()) return out;

  poly::Poly syndromes(check_roots);
  Symbol root = 1;
  for (std::size_t j = 0; j < check_roots; ++j) {
    syndromes[j] = poly::eval(f, received, root, counter);
    root = f.mul(root, alpha);
  }

  std::vector<Symbol> locators;
  poly::Poly lambda{1};
  for (auto p : erasures) {
    const Symbol x = f.pow(alpha, p);
    locators.push_back(x);
    const Symbol factor[] = {1, f.neg(x)};
    lambda = poly::mul(f, lambda, factor, counter);
  }

  auto omega = poly::mul(f, syndromes, lambda, counter);
  omega.resize(check_roots);

  poly::Poly derivative(lambda.size() > 1 ? lambda.size() - 1 : 1, 0);
  for (std::size_t i = 1; i < lambda.size(); ++i) {
    derivative[i - 1] = f.mul(f.from_integer(i), lambda[i]);
  }

  for (std::size_t e = 0; e < erasures.size(); ++e) {
    const Symbol x_inv = f.inv(locators[e]);
    const Symbol num = f.mul(locators[e], poly::eval(f, omega, x_inv, counter));
    const Symbol den = poly::eval(f, derivative, x_inv, counter);
    out[erasures[e]] = f.div(num, den);
    count_mul(counter, 2);
  }
  return out;
}

}  // namespace regen
