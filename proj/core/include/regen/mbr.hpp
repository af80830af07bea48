#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "regen/counter.hpp"
#include "regen/gf.hpp"
#include "regen/matrix.hpp"
#include "regen/plan.hpp"
#include "regen/psrs.hpp"

namespace regen {

enum class MbrBackend { psrs, vandermonde };

std::string_view to_string(MbrBackend backend);

/// One stage of a partial-download decode: lhs * column = rhs, where
/// `column` is the S column being solved (or its leading part for gong).
struct StageSystem {
  std::size_t column;
  Matrix lhs;
  std::vector<Symbol> rhs;
};

/// Product-matrix minimum-bandwidth code C = Psi M with beta = 1.
///
/// The d x d message matrix is [[S, T], [T^t, 0]] with S symmetric k x k
/// and T k x (d-k). The B data symbols fill the first k rows of M from the
/// diagonal rightwards, row by row: row i receives S[i][i..k-1] followed by
/// T[i][:].
class MbrCode {
 public:
  enum class EncodeRoute { matrix, polynomial };

  MbrCode(Field field, std::size_t n, std::size_t k, std::size_t d, MbrBackend backend);

  /// psrs backend over GF(65537) with evaluation points on a power-of-two
  /// root-of-unity grid, so that polynomial encoding can use the NTT.
  static MbrCode psrs_on_roots_of_unity(std::size_t n, std::size_t k, std::size_t d);

  const Field& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t d() const noexcept { return d_; }
  std::size_t alpha() const noexcept { return d_; }
  std::size_t message_size() const noexcept { return k_ * (k_ + 1) / 2 + k_ * (d_ - k_); }
  MbrBackend backend() const noexcept { return backend_; }
  bool systematic() const noexcept { return backend_ == MbrBackend::psrs; }
  const std::vector<Symbol>& points() const noexcept { return points_; }

  /// n x d encoding matrix [Phi Delta].
  const Matrix& encoding() const noexcept { return psi_; }
  Matrix phi() const { return submatrix_cols(psi_, 0, k_); }
  Matrix delta() const { return submatrix_cols(psi_, k_, d_ - k_); }

  Matrix build_message(std::span<const Symbol> u) const;
  /// Inverse of build_message given the S and T blocks.
  std::vector<Symbol> data_from_blocks(const Matrix& s, const Matrix& t) const;

  /// n x d code matrix; row i is the fragment of node i.
  Matrix encode(std::span<const Symbol> u, OpCounter* counter = nullptr,
                EncodeRoute route = EncodeRoute::matrix) const;

  /// Inner product of a helper's fragment with the failed node's encoding
  /// row. Costs exactly d multiplications.
  static Symbol helper_response(const Field& field, std::span<const Symbol> fragment,
                                std::span<const Symbol> failed_row, OpCounter* counter = nullptr);
  Symbol helper_response(std::span<const Symbol> fragment, std::size_t failed,
                         OpCounter* counter = nullptr) const;

  /// Fragment of `failed` from d helper responses.
  std::vector<Symbol> repair(std::span<const HelperSymbol> responses, std::size_t failed,
                             OpCounter* counter = nullptr) const;

  /// Data symbols from k full fragments.
  std::vector<Symbol> reconstruct(std::span<const NodeFragment> fragments,
                                  OpCounter* counter = nullptr) const;

  /// Row of C_DC (slot) for each connected node. Without an explicit order,
  /// systematic nodes take their own index and the rest fill the free slots
  /// in ascending order. An explicit order is checked against the scheme.
  std::vector<std::size_t> slot_order(std::span<const std::size_t> connected, Scheme scheme,
                                      std::optional<std::vector<std::size_t>> order = {}) const;

  /// Plan for scheme lower, upper or gong. Every node sends all of its Delta
  /// columns plus its triangular share of the Phi columns.
  DownloadPlan partial_plan(std::span<const std::size_t> connected, Scheme scheme,
                            std::optional<std::vector<std::size_t>> order = {}) const;

  std::vector<Symbol> reconstruct_partial(const DownloadPlan& plan,
                                          std::span<const std::vector<Symbol>> payloads,
                                          OpCounter* counter = nullptr,
                                          std::vector<StageSystem>* trace = nullptr) const;

  /// Alternating lower/upper plans, one per round, sharing one slot order
  /// in which every systematic node sits at its own index.
  std::vector<DownloadPlan> timeshare_schedule(std::span<const std::size_t> connected,
                                               std::size_t rounds) const;

 private:
  explicit MbrCode(PsrsEvalCode code);
  void validate() const;

  Field field_;
  std::size_t n_, k_, d_;
  MbrBackend backend_;
  std::vector<Symbol> points_;
  Matrix psi_;
  std::optional<PsrsEvalCode> psrs_;
};

}  // namespace regen
