#include "regen/shah.hpp"

#include <algorithm>
#include <string>

namespace regen {

ShahCode::ShahCode(Field field, std::size_t n, std::size_t k)
    : field_(field), n_(n), k_(k), generator_(field, 0, 0) {
  if (n < 2 || k < 1 || k > n - 1) {
    raise(ErrorCode::ParamsInvalid, "baseline code needs 1 <= k <= n-1, got n=" +
                                        std::to_string(n) + " k=" + std::to_string(k));
  }
  if (packet_count() > field.order() + 1) {
    raise(ErrorCode::FieldTooSmall, "C(" + std::to_string(n) + ",2)=" +
                                        std::to_string(packet_count()) + " packets need q+1 >= " +
                                        std::to_string(packet_count()) + " but " + field.name() +
                                        " has q=" + std::to_string(field.order()));
  }
  const std::size_t b = message_size();
  const Matrix ext = extended_vandermonde(field_, packet_count(), b);
  std::vector<std::size_t> top(b);
  std::vector<std::size_t> bottom(packet_count() - b);
  for (std::size_t i = 0; i < b; ++i) top[i] = i;
  for (std::size_t i = 0; i < bottom.size(); ++i) bottom[i] = b + i;
  // Only the parity rows need a product; the top block becomes I_B.
  const Matrix parity = mul(submatrix_rows(ext, bottom), inverse(submatrix_rows(ext, top)));
  generator_ = vconcat(Matrix::identity(field_, b), parity);
}

std::size_t ShahCode::packet_index(std::size_t i, std::size_t j) const {
  if (i == j || i >= n_ || j >= n_) raise(ErrorCode::IndexOutOfRange, "not an edge of K_n");
  if (i > j) std::swap(i, j);
  // edges before row i: (n-1) + (n-2) + ... + (n-i)
  return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

std::vector<Symbol> ShahCode::encode_packets(std::span<const Symbol> u, OpCounter* counter) const {
  const std::size_t b = message_size();
  if (u.size() != b) {
    raise(ErrorCode::WrongMessageLength, "message must have B=" + std::to_string(b) +
                                             " symbols, got " + std::to_string(u.size()));
  }
  for (auto v : u)
    if (!field_.contains(v)) raise(ErrorCode::FieldMismatch, "symbol outside field");
  std::vector<Symbol> packets(u.begin(), u.end());
  for (std::size_t r = b; r < packet_count(); ++r) {
    Symbol acc = 0;
    for (std::size_t c = 0; c < b; ++c) acc = field_.add(acc, field_.mul(generator_(r, c), u[c]));
    packets.push_back(acc);
  }
  count_mul(counter, (packet_count() - b) * b);
  count_add(counter, (packet_count() - b) * (b - 1));
  return packets;
}

std::vector<std::vector<Symbol>> ShahCode::node_stores(std::span<const Symbol> packets) const {
  if (packets.size() != packet_count()) {
    raise(ErrorCode::DimensionMismatch, "expected " + std::to_string(packet_count()) + " packets");
  }
  std::vector<std::vector<Symbol>> stores(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (j != i) stores[i].push_back(packets[packet_index(i, j)]);
  return stores;
}

std::vector<std::size_t> ShahCode::distinct_packets(std::span<const std::size_t> nodes) const {
  check_distinct_nodes(nodes, n_);
  std::vector<std::size_t> out;
  for (auto i : nodes)
    for (std::size_t j = 0; j < n_; ++j)
      if (j != i) out.push_back(packet_index(i, j));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Symbol> ShahCode::reconstruct(std::span<const NodeFragment> stores,
                                          OpCounter* counter) const {
  if (stores.size() != k_) {
    raise(ErrorCode::WrongFragmentCount, "reconstruction needs exactly k=" + std::to_string(k_) +
                                             " stores, got " + std::to_string(stores.size()));
  }
  std::vector<std::size_t> nodes;
  for (const auto& s : stores) {
    if (s.symbols.size() != n_ - 1) {
      raise(ErrorCode::DimensionMismatch, "store of node " + std::to_string(s.node) +
                                              " must hold n-1 packets");
    }
    nodes.push_back(s.node);
  }
  check_distinct_nodes(nodes, n_);

  std::vector<Symbol> value(packet_count());
  std::vector<bool> have(packet_count(), false);
  for (const auto& s : stores) {
    for (std::size_t p = 0; p < n_ - 1; ++p) {
      const std::size_t j = stored_column(s.node, p);
      const std::size_t e = packet_index(s.node, j);
      value[e] = s.symbols[p];
      have[e] = true;
    }
  }
  std::vector<std::size_t> rows;
  std::vector<Symbol> rhs;
  for (std::size_t e = 0; e < packet_count(); ++e) {
    if (have[e]) {
      rows.push_back(e);
      rhs.push_back(value[e]);
    }
  }
  if (rows.size() != message_size()) {
    raise(ErrorCode::InsufficientSymbols, "collected " + std::to_string(rows.size()) +
                                              " distinct packets, need " +
                                              std::to_string(message_size()));
  }
  return solve(submatrix_rows(generator_, rows), rhs, counter);
}

}  // namespace regen
