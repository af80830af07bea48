#include "regen/rbt.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace regen {

namespace {

// Exhaustive any-k-rows check up to this length, random sampling above.
constexpr std::size_t kExhaustiveLimit = 10;
constexpr std::size_t kSampledSubsets = 16;

void check_any_k_rows(const Matrix& phi, std::size_t k) {
  const std::size_t n = phi.rows();
  auto check = [&](const std::vector<std::size_t>& rows) {
    if (!is_invertible(submatrix_rows(phi, rows))) {
      raise(ErrorCode::SingularMatrix, "k rows of the encoding block are dependent");
    }
  };
  if (n <= kExhaustiveLimit) {
    for (const auto& rows : subsets(n, k)) check(rows);
    return;
  }
  std::mt19937_64 rng(n * 1000003u + k);
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  for (std::size_t trial = 0; trial < kSampledSubsets; ++trial) {
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<std::size_t> rows(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
    check(rows);
  }
}

std::vector<Symbol> expand_row(const Field& field, const NodeFragment& frag, std::size_t n) {
  if (frag.symbols.size() != n - 1) {
    raise(ErrorCode::DimensionMismatch, "fragment of node " + std::to_string(frag.node) +
                                            " has " + std::to_string(frag.symbols.size()) +
                                            " symbols, expected " + std::to_string(n - 1));
  }
  std::vector<Symbol> row(n, 0);
  for (std::size_t p = 0; p < n - 1; ++p) {
    if (!field.contains(frag.symbols[p])) raise(ErrorCode::FieldMismatch, "symbol outside field");
    row[stored_column(frag.node, p)] = frag.symbols[p];
  }
  return row;
}

}  // namespace

RbtCodeword::RbtCodeword(Matrix checked) : checked_(std::move(checked)) {
  if (!is_symmetric(checked_)) raise(ErrorCode::ParamsInvalid, "code matrix is not symmetric");
  for (std::size_t i = 0; i < checked_.rows(); ++i) {
    if (checked_(i, i) != 0) raise(ErrorCode::ParamsInvalid, "code matrix diagonal is not zero");
  }
}

std::vector<Symbol> RbtCodeword::fragment(std::size_t node) const {
  if (node >= n()) raise(ErrorCode::IndexOutOfRange, "node out of range");
  std::vector<Symbol> out;
  out.reserve(n() - 1);
  for (std::size_t c = 0; c < n(); ++c)
    if (c != node) out.push_back(checked_(node, c));
  return out;
}

std::vector<NodeFragment> RbtCodeword::fragments() const {
  std::vector<NodeFragment> out;
  for (std::size_t i = 0; i < n(); ++i) out.push_back({i, fragment(i)});
  return out;
}

Matrix sign_fix(const Matrix& c, OpCounter* counter) {
  Matrix out = c;
  const Field& f = c.field();
  if (f.characteristic_two()) return out;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < i && j < c.cols(); ++j) out(i, j) = f.neg(c(i, j));
  std::size_t below = 0;
  for (std::size_t i = 0; i < c.rows(); ++i) below += std::min(i, c.cols());
  count_add(counter, below);
  return out;
}

RbtCode::RbtCode(Field field, std::size_t n, std::size_t k, bool systematic)
    : field_(field),
      n_(n),
      k_(k),
      systematic_(systematic),
      phi_(field, 0, 0),
      encoding_(field, 0, 0),
      encoding_t_inv_(field, 0, 0) {
  if (n < 2 || k < 1 || k > n - 1) {
    raise(ErrorCode::ParamsInvalid, "repair-by-transfer code needs 1 <= k <= n-1, got n=" +
                                        std::to_string(n) + " k=" + std::to_string(k));
  }
  if (n > field.order() + 1) {
    raise(ErrorCode::FieldTooSmall, "repair-by-transfer code of length " + std::to_string(n) +
                                        " needs n <= q+1 over " + field.name());
  }
  Matrix ext = extended_vandermonde(field_, n_, k_);
  if (systematic_) {
    std::vector<std::size_t> top(k_);
    for (std::size_t i = 0; i < k_; ++i) top[i] = i;
    ext = mul(ext, inverse(submatrix_rows(ext, top)));
  }
  phi_ = ext;
  check_any_k_rows(phi_, k_);

  encoding_ = Matrix(field_, n_, n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < k_; ++c) encoding_(r, c) = phi_(r, c);
    if (r >= k_) encoding_(r, r) = 1;
  }
  encoding_t_inv_ = inverse(transpose(encoding_));
}

Matrix RbtCode::parity_block() const {
  Matrix out(field_, n_ - k_, k_);
  for (std::size_t r = 0; r < n_ - k_; ++r)
    for (std::size_t c = 0; c < k_; ++c) out(r, c) = phi_(k_ + r, c);
  return out;
}

SkewSymmetric RbtCode::build_message(std::span<const Symbol> u) const {
  if (u.size() != message_size()) {
    raise(ErrorCode::WrongMessageLength, "message must have B=" + std::to_string(message_size()) +
                                             " symbols, got " + std::to_string(u.size()));
  }
  Matrix m(field_, n_, n_);
  std::size_t next = 0;
  for (std::size_t i = 0; i < k_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!field_.contains(u[next])) raise(ErrorCode::FieldMismatch, "symbol outside field");
      m(i, j) = u[next];
      m(j, i) = field_.neg(u[next]);
      ++next;
    }
  }
  return SkewSymmetric(std::move(m));
}

Matrix RbtCode::source_block(std::span<const Symbol> data) const {
  const SkewSymmetric full = build_message(data);
  Matrix u(field_, k_, n_);
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t j = 0; j < n_; ++j) u(i, j) = full.matrix()(i, j);
  return u;
}

RbtCodeword RbtCode::encode(std::span<const Symbol> data, OpCounter* counter) const {
  if (systematic_) return encode_systematic(source_block(data), counter);
  return encode_message(build_message(data), counter);
}

RbtCodeword RbtCode::encode_message(const SkewSymmetric& message, OpCounter* counter) const {
  require_same_field(field_, message.matrix().field());
  if (message.size() != n_) raise(ErrorCode::DimensionMismatch, "message matrix must be n x n");
  const Matrix c_hat = congruence(encoding_, message.matrix(), counter);
  return RbtCodeword(sign_fix(c_hat, counter));
}

RbtCodeword RbtCode::encode_systematic(const Matrix& source, OpCounter* counter) const {
  if (!systematic_) {
    raise(ErrorCode::ParamsInvalid, "encode_systematic needs a systematic-mode code");
  }
  require_same_field(field_, source.field());
  if (source.rows() != k_ || source.cols() != n_) {
    raise(ErrorCode::DimensionMismatch, "source block must be k x n");
  }
  const Matrix u_left = submatrix_cols(source, 0, k_);
  if (!is_skew_symmetric(u_left)) {
    raise(ErrorCode::NotSkewSymmetric, "left k x k block of the source is not skew-symmetric");
  }
  const Matrix u_right = submatrix_cols(source, k_, n_ - k_);
  const Matrix parity = parity_block();

  // V = P U_R - (P U_R)^t - P U_L P^t with P the parity block
  const Matrix pr = mul(parity, u_right, counter);
  const Matrix pl = mul(parity, u_left, counter);
  const Matrix plp = mul(pl, transpose(parity), counter);
  const Matrix v = sub(sub(pr, transpose(pr), counter), plp, counter);

  Matrix c_hat(field_, n_, n_);
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t j = 0; j < n_; ++j) c_hat(i, j) = source(i, j);
  for (std::size_t i = 0; i < n_ - k_; ++i) {
    for (std::size_t j = 0; j < k_; ++j) c_hat(k_ + i, j) = field_.neg(u_right(j, i));
    for (std::size_t j = 0; j < n_ - k_; ++j) c_hat(k_ + i, k_ + j) = v(i, j);
  }
  return RbtCodeword(sign_fix(c_hat, counter));
}

std::vector<Symbol> RbtCode::data_from_message(const Matrix& s, const Matrix& t,
                                               OpCounter* counter) const {
  // Rows of [S T] in message layout, or the first k rows of C-hat in systematic mode.
  Matrix top = hconcat(s, t);
  if (systematic_) top = mul(top, transpose(encoding_), counter);
  std::vector<Symbol> out;
  out.reserve(message_size());
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) out.push_back(top(i, j));
  return out;
}

std::vector<Symbol> RbtCode::reconstruct(std::span<const NodeFragment> fragments,
                                         OpCounter* counter) const {
  if (fragments.size() != k_) {
    raise(ErrorCode::WrongFragmentCount, "reconstruction needs exactly k=" + std::to_string(k_) +
                                             " fragments, got " +
                                             std::to_string(fragments.size()));
  }
  std::vector<std::size_t> nodes;
  for (const auto& f : fragments) nodes.push_back(f.node);
  check_distinct_nodes(nodes, n_);

  if (systematic_ && std::all_of(nodes.begin(), nodes.end(), [&](auto v) { return v < k_; })) {
    // Source rows are stored verbatim: read the strictly upper part.
    std::vector<std::vector<Symbol>> rows(k_);
    for (const auto& f : fragments) rows[f.node] = expand_row(field_, f, n_);
    std::vector<Symbol> out;
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) out.push_back(rows[i][j]);
    return out;
  }

  // Undo the sign fix: entries left of the diagonal were negated.
  Matrix c_dc(field_, k_, n_);
  for (std::size_t r = 0; r < k_; ++r) {
    const auto row = expand_row(field_, fragments[r], n_);
    for (std::size_t c = 0; c < n_; ++c) {
      c_dc(r, c) = c < fragments[r].node ? field_.neg(row[c]) : row[c];
    }
    if (!field_.characteristic_two()) count_add(counter, fragments[r].node);
  }

  const Matrix d_dc = mul(c_dc, encoding_t_inv_, counter);
  const Matrix d_phi = submatrix_cols(d_dc, 0, k_);
  const Matrix d_delta = submatrix_cols(d_dc, k_, n_ - k_);
  const Matrix phi_dc = submatrix_rows(phi_, nodes);
  Matrix delta_dc(field_, k_, n_ - k_);
  for (std::size_t r = 0; r < k_; ++r)
    if (nodes[r] >= k_) delta_dc(r, nodes[r] - k_) = 1;

  const Matrix phi_inv = inverse(phi_dc, counter);
  const Matrix t = mul(phi_inv, d_delta, counter);
  const Matrix s = mul(phi_inv, add(d_phi, mul(delta_dc, transpose(t), counter), counter), counter);
  return data_from_message(s, t, counter);
}

DownloadPlan RbtCode::partial_plan(std::span<const std::size_t> connected) const {
  if (connected.size() != k_) {
    raise(ErrorCode::WrongFragmentCount, "partial download needs exactly k connected nodes");
  }
  check_distinct_nodes(connected, n_);
  DownloadPlan plan;
  plan.scheme = Scheme::partial;
  plan.nodes.assign(connected.begin(), connected.end());
  for (std::size_t j = 0; j < k_; ++j) {
    plan.rows.push_back(j);
    const std::size_t node = connected[j];
    std::vector<bool> omit(n_, false);
    for (std::size_t l = 0; l < k_; ++l) {
      if (l != j && decision(j + 1, l + 1) == j + 1) omit[connected[l]] = true;
    }
    std::vector<std::size_t> positions;
    for (std::size_t c = 0; c < n_; ++c)
      if (c != node && !omit[c]) positions.push_back(stored_position(node, c));
    plan.positions.push_back(std::move(positions));
  }
  return plan;
}

std::vector<Symbol> RbtCode::reconstruct_partial(const DownloadPlan& plan,
                                                 std::span<const std::vector<Symbol>> payloads,
                                                 OpCounter* counter) const {
  check_payloads(plan, payloads);
  if (plan.nodes.size() != k_) raise(ErrorCode::PlanPayloadMismatch, "plan must cover k nodes");
  const std::size_t unset = n_;
  // full stored rows; missing symbols come from the partner node by symmetry
  std::vector<std::vector<std::size_t>> from_slot(k_, std::vector<std::size_t>(n_ - 1, unset));
  std::vector<std::vector<Symbol>> rows(k_, std::vector<Symbol>(n_ - 1, 0));
  for (std::size_t j = 0; j < k_; ++j) {
    for (std::size_t p = 0; p < plan.positions[j].size(); ++p) {
      const std::size_t pos = plan.positions[j][p];
      if (pos >= n_ - 1) raise(ErrorCode::PlanPayloadMismatch, "planned position out of range");
      rows[j][pos] = payloads[j][p];
      from_slot[j][pos] = j;
    }
  }
  for (std::size_t j = 0; j < k_; ++j) {
    for (std::size_t pos = 0; pos < n_ - 1; ++pos) {
      if (from_slot[j][pos] != unset) continue;
      const std::size_t column = stored_column(plan.nodes[j], pos);
      auto partner = std::find(plan.nodes.begin(), plan.nodes.end(), column);
      if (partner == plan.nodes.end()) {
        raise(ErrorCode::PlanPayloadMismatch, "symbol missing from the download plan");
      }
      const std::size_t l = static_cast<std::size_t>(partner - plan.nodes.begin());
      const std::size_t mirror = stored_position(column, plan.nodes[j]);
      if (from_slot[l][mirror] != l) {
        raise(ErrorCode::PlanPayloadMismatch, "shared symbol sent by neither node");
      }
      rows[j][pos] = rows[l][mirror];
    }
  }
  std::vector<NodeFragment> fragments;
  for (std::size_t j = 0; j < k_; ++j) fragments.push_back({plan.nodes[j], rows[j]});
  return reconstruct(fragments, counter);
}

Symbol RbtCode::helper_symbol(std::span<const Symbol> fragment, std::size_t helper,
                              std::size_t failed) {
  if (helper == failed) raise(ErrorCode::DuplicateHelper, "failed node cannot help itself");
  const std::size_t pos = stored_position(helper, failed);
  if (pos >= fragment.size()) raise(ErrorCode::IndexOutOfRange, "fragment too short");
  return fragment[pos];
}

}  // namespace regen
