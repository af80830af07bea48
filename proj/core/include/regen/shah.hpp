#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "regen/counter.hpp"
#include "regen/gf.hpp"
#include "regen/matrix.hpp"
#include "regen/plan.hpp"

namespace regen {

/// Repair-by-transfer baseline on the complete graph K_n: the B data
/// symbols are encoded into N = C(n,2) packets by a systematic doubly
/// extended RS code, and packet e is stored on both endpoints of edge e.
///
/// Edges are numbered lexicographically: (0,1), (0,2), ..., (n-2,n-1).
/// Node i stores the packets of its edges ordered by the other endpoint, so
/// its store has the same shape as a repair-by-transfer fragment.
class ShahCode {
 public:
  ShahCode(Field field, std::size_t n, std::size_t k);

  const Field& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t d() const noexcept { return n_ - 1; }
  std::size_t alpha() const noexcept { return n_ - 1; }
  std::size_t message_size() const noexcept { return (n_ - 1) * k_ - k_ * (k_ - 1) / 2; }
  std::size_t packet_count() const noexcept { return n_ * (n_ - 1) / 2; }

  /// Packet index of the edge {i, j}, i != j.
  std::size_t packet_index(std::size_t i, std::size_t j) const;

  /// N x B systematic generator; the first B rows are the identity.
  const Matrix& generator() const noexcept { return generator_; }

  /// The N packets. Only the N-B parity packets cost arithmetic.
  std::vector<Symbol> encode_packets(std::span<const Symbol> u, OpCounter* counter = nullptr) const;
  std::vector<std::vector<Symbol>> node_stores(std::span<const Symbol> packets) const;
  std::vector<std::vector<Symbol>> encode(std::span<const Symbol> u,
                                          OpCounter* counter = nullptr) const {
    return node_stores(encode_packets(u, counter));
  }

  static std::vector<Symbol> repair(std::span<const HelperSymbol> helpers, std::size_t failed,
                                    std::size_t n) {
    return transfer_repair(helpers, failed, n);
  }

  /// Data symbols from the stores of k distinct nodes.
  std::vector<Symbol> reconstruct(std::span<const NodeFragment> stores,
                                  OpCounter* counter = nullptr) const;

  /// Distinct packet indices held by the given nodes, ascending.
  std::vector<std::size_t> distinct_packets(std::span<const std::size_t> nodes) const;

 private:
  Field field_;
  std::size_t n_, k_;
  Matrix generator_;
};

}  // namespace regen
