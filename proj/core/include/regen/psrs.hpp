#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "regen/counter.hpp"
#include "regen/gf.hpp"
#include "regen/matrix.hpp"
#include "regen/poly.hpp"

namespace regen {

/// One received codeword symbol. Positions are 0-based.
struct Share {
  std::size_t position;
  Symbol value;
};

/// Message of an (n,k,d) partially systematic RS code: k systematic symbols
/// followed by d-k non-systematic ones.
struct PsrsMessage {
  std::vector<Symbol> a;
  std::vector<Symbol> b;

  friend bool operator==(const PsrsMessage&, const PsrsMessage&) = default;
};

/// Evaluation-form PSRS code: C(x) = Phi(x) + Gamma(x) B(x), where Phi is
/// the Lagrange interpolant of `a` on the first k points, Gamma vanishes on
/// those points and B(x) = sum b_i x^i. The codeword is C evaluated on the n
/// points, so its first k symbols are `a` verbatim.
class PsrsEvalCode {
 public:
  enum class Route { automatic, naive, ntt };

  PsrsEvalCode(Field field, std::size_t n, std::size_t k, std::size_t d);
  PsrsEvalCode(Field field, std::size_t n, std::size_t k, std::size_t d,
               std::vector<Symbol> points);

  /// Fermat-field code whose evaluation points are the first n powers of a
  /// root of unity of order bit_ceil(n), enabling the NTT route.
  static PsrsEvalCode on_roots_of_unity(std::size_t n, std::size_t k, std::size_t d);

  const Field& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t d() const noexcept { return d_; }
  const std::vector<Symbol>& points() const noexcept { return points_; }
  const poly::Poly& gamma() const noexcept { return gamma_; }
  bool ntt_eligible() const noexcept { return ntt_size_ != 0; }

  /// Coefficients of C(x), degree < d.
  poly::Poly coding_polynomial(std::span<const Symbol> a, std::span<const Symbol> b,
                               OpCounter* counter = nullptr) const;

  std::vector<Symbol> encode(std::span<const Symbol> a, std::span<const Symbol> b,
                             OpCounter* counter = nullptr, Route route = Route::automatic) const;
  std::vector<Symbol> encode(const PsrsMessage& msg, OpCounter* counter = nullptr,
                             Route route = Route::automatic) const {
    return encode(msg.a, msg.b, counter, route);
  }

  /// Recovers (a, b) from any d symbols: interpolate C, divide by Gamma,
  /// evaluate the remainder on the systematic points.
  PsrsMessage decode_full(std::span<const Share> shares, OpCounter* counter = nullptr) const;

  /// Recovers `a` from any k symbols when `b` is already known.
  std::vector<Symbol> decode_partial(std::span<const Share> shares, std::span<const Symbol> b,
                                     OpCounter* counter = nullptr) const;

  /// n x d generator [Phi Delta]; top k rows are [I_k 0].
  const Matrix& generator_matrix() const noexcept { return generator_; }

 private:
  void check_message(std::span<const Symbol> a, std::span<const Symbol> b) const;
  std::vector<Share> checked_shares(std::span<const Share> shares, std::size_t needed) const;

  Field field_;
  std::size_t n_, k_, d_;
  std::vector<Symbol> points_;
  poly::Poly gamma_;
  Matrix lagrange_;   // k x k, column i holds the coefficients of the i-th basis polynomial
  Matrix generator_;  // n x d
  std::size_t ntt_size_ = 0;
  std::vector<Symbol> gamma_spectrum_;
};

/// Generator-polynomial form: c(x) = c0(x) + c1(x) where c0 is the (n,k)
/// systematic RS codeword of a(x) under g0 = prod_{i<n-k} (x - alpha^i) and
/// c1 the systematic codeword of b(x) under g1 = prod_{i<n-d} (x - alpha^i).
/// a(x) occupies degrees n-k .. n-1 of c(x). Since g1 divides g0, every
/// codeword is a multiple of g1, i.e. an (n,d) RS codeword.
class PsrsGenPolyCode {
 public:
  PsrsGenPolyCode(Field field, std::size_t n, std::size_t k, std::size_t d);

  const Field& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t d() const noexcept { return d_; }
  Symbol alpha() const noexcept { return alpha_; }
  const poly::Poly& g0() const noexcept { return g0_; }
  const poly::Poly& g1() const noexcept { return g1_; }

  poly::Poly encode_systematic_part(std::span<const Symbol> a, OpCounter* counter = nullptr) const;
  poly::Poly encode_nonsystematic_part(std::span<const Symbol> b,
                                       OpCounter* counter = nullptr) const;

  /// n coefficients of c(x), lowest degree first.
  std::vector<Symbol> encode(std::span<const Symbol> a, std::span<const Symbol> b,
                             OpCounter* counter = nullptr) const;
  std::vector<Symbol> encode(const PsrsMessage& msg, OpCounter* counter = nullptr) const {
    return encode(msg.a, msg.b, counter);
  }

  /// Erasure decoding with the Forney formula from any d coefficients.
  /// When `cross_check` is set the result is compared against
  /// decode_full_linear and DecodeMismatch is raised on disagreement.
  PsrsMessage decode_full(std::span<const Share> shares, OpCounter* counter = nullptr,
                          bool cross_check = kCrossCheckDefault) const;

  /// Dense linear solve over the known positions; independent of Forney.
  PsrsMessage decode_full_linear(std::span<const Share> shares) const;

  /// Recovers a(x) from any k coefficients when b(x) is known.
  std::vector<Symbol> decode_partial(std::span<const Share> shares, std::span<const Symbol> b,
                                     OpCounter* counter = nullptr) const;

#ifdef NDEBUG
  static constexpr bool kCrossCheckDefault = false;
#else
  static constexpr bool kCrossCheckDefault = true;
#endif

 private:
  std::vector<Share> checked_shares(std::span<const Share> shares, std::size_t needed) const;

  Field field_;
  std::size_t n_, k_, d_;
  Symbol alpha_;
  poly::Poly g0_, g1_;
};

/// Fills the erased coefficients of a codeword that vanishes at
/// alpha^0 .. alpha^(check_roots-1). `received` holds n coefficients with
/// zeros at the erased positions. At most `check_roots` erasures.
std::vector<Symbol> forney_fill_erasures(const Field& field, Symbol alpha, std::size_t check_roots,
                                         std::span<const Symbol> received,
                                         std::span<const std::size_t> erasures,
                                         OpCounter* counter = nullptr);

}  // namespace regen
