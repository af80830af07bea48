#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "regen/counter.hpp"
#include "regen/gf.hpp"
#include "regen/matrix.hpp"
#include "regen/plan.hpp"

namespace regen {

/// Symmetric n x n code matrix with zero diagonal. Node i stores row i
/// without its diagonal entry, i.e. n-1 symbols.
class RbtCodeword {
 public:
  explicit RbtCodeword(Matrix checked);

  const Matrix& matrix() const noexcept { return checked_; }
  std::size_t n() const noexcept { return checked_.rows(); }

  std::vector<Symbol> fragment(std::size_t node) const;
  std::vector<NodeFragment> fragments() const;

 private:
  Matrix checked_;
};

/// Negates the strictly lower triangle. Applying it twice is the identity;
/// over characteristic two it is a no-op and counts nothing.
Matrix sign_fix(const Matrix& c, OpCounter* counter = nullptr);

/// Which of the connected slots j, l (1-based, distinct) omits the symbol
/// they share during partial download: min if j+l is even, max otherwise.
constexpr std::size_t decision(std::size_t j, std::size_t l) noexcept {
  const std::size_t lo = j < l ? j : l;
  const std::size_t hi = j < l ? l : j;
  return (j + l) % 2 == 0 ? lo : hi;
}

/// (n, k, d = n-1) repair-by-transfer code built as a congruence of a
/// skew-symmetric message matrix.
///
/// Message layout: the B symbols fill the strictly upper triangle of the
/// first k rows of the n x n message matrix, row by row. Row i therefore
/// holds its part of the skew-symmetric block followed by its row of the
/// k x (n-k) block.
///
/// In systematic mode the data symbols are the source block instead: they
/// appear verbatim in the strictly upper part of the first k stored rows.
class RbtCode {
 public:
  RbtCode(Field field, std::size_t n, std::size_t k, bool systematic = false);

  const Field& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t d() const noexcept { return n_ - 1; }
  std::size_t alpha() const noexcept { return n_ - 1; }
  std::size_t message_size() const noexcept { return (n_ - 1) * k_ - k_ * (k_ - 1) / 2; }
  bool systematic() const noexcept { return systematic_; }

  /// n x n encoding matrix [Phi | 0 ; I].
  const Matrix& encoding() const noexcept { return encoding_; }
  /// n x k block Phi of the encoding matrix.
  const Matrix& phi() const noexcept { return phi_; }
  /// Bottom (n-k) x k block of phi(); the RS parity block in systematic mode.
  Matrix parity_block() const;

  SkewSymmetric build_message(std::span<const Symbol> u) const;
  /// k x n source block [U_L U_R] for systematic mode.
  Matrix source_block(std::span<const Symbol> data) const;

  /// Encodes the B data symbols under this code's mode.
  RbtCodeword encode(std::span<const Symbol> data, OpCounter* counter = nullptr) const;
  /// Congruence of an explicit message matrix followed by the sign fix.
  RbtCodeword encode_message(const SkewSymmetric& message, OpCounter* counter = nullptr) const;
  /// Systematic encoding: only the (n-k) x (n-k) block V is computed.
  RbtCodeword encode_systematic(const Matrix& source, OpCounter* counter = nullptr) const;

  /// Data symbols from k full fragments.
  std::vector<Symbol> reconstruct(std::span<const NodeFragment> fragments,
                                  OpCounter* counter = nullptr) const;

  /// Balanced plan downloading exactly B symbols from the connected nodes
  /// (slot j is connected[j-1]).
  DownloadPlan partial_plan(std::span<const std::size_t> connected) const;
  std::vector<Symbol> reconstruct_partial(const DownloadPlan& plan,
                                          std::span<const std::vector<Symbol>> payloads,
                                          OpCounter* counter = nullptr) const;

  /// Symbol that `helper` sends when `failed` is being repaired.
  static Symbol helper_symbol(std::span<const Symbol> fragment, std::size_t helper,
                              std::size_t failed);

  /// Rebuilds the stored row of `failed` by placement alone; see transfer_repair.
  static std::vector<Symbol> repair(std::span<const HelperSymbol> helpers, std::size_t failed,
                                    std::size_t n) {
    return transfer_repair(helpers, failed, n);
  }

 private:
  std::vector<Symbol> data_from_message(const Matrix& s, const Matrix& t,
                                        OpCounter* counter) const;

  Field field_;
  std::size_t n_, k_;
  bool systematic_;
  Matrix phi_;
  Matrix encoding_;
  Matrix encoding_t_inv_;
};

}  // namespace regen
