#include "regen/mbr.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

#include "regen/ntt.hpp"
#include "regen/poly.hpp"

namespace regen {

namespace {

constexpr std::size_t kExhaustiveLimit = 10;

std::size_t sampled_subsets(std::size_t n) { return std::max<std::size_t>(2, 256 / n); }

// Calls check(rows) for every size-subset when n is small, otherwise for a
// fixed pseudo-random sample of subsets.
template <typename Check>
void for_row_subsets(std::size_t n, std::size_t size, std::uint64_t seed, Check check) {
  if (n <= kExhaustiveLimit) {
    for (const auto& rows : subsets(n, size)) check(rows);
    return;
  }
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  for (std::size_t trial = 0; trial < sampled_subsets(n); ++trial) {
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<std::size_t> rows(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(rows.begin(), rows.end());
    check(rows);
  }
}

Symbol dot(const Field& f, std::span<const Symbol> a, std::span<const Symbol> b,
           OpCounter* counter) {
  Symbol acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  count_mul(counter, a.size());
  count_add(counter, a.empty() ? 0 : a.size() - 1);
  return acc;
}

}  // namespace

std::string_view to_string(MbrBackend backend) {
  return backend == MbrBackend::psrs ? "psrs" : "vandermonde";
}

MbrCode::MbrCode(Field field, std::size_t n, std::size_t k, std::size_t d, MbrBackend backend)
    : field_(field), n_(n), k_(k), d_(d), backend_(backend), psi_(field, 0, 0) {
  if (k < 1 || k > d || d + 1 > n) {
    raise(ErrorCode::ParamsInvalid, "minimum-bandwidth code needs 1 <= k <= d <= n-1, got n=" +
                                        std::to_string(n) + " k=" + std::to_string(k) +
                                        " d=" + std::to_string(d));
  }
  if (n > field.order()) {
    raise(ErrorCode::FieldTooSmall,
          "code length " + std::to_string(n) + " needs n <= q over " + field.name());
  }
  points_ = field_.enumerate(n_);
  if (backend_ == MbrBackend::psrs) {
    psrs_.emplace(field_, n_, k_, d_, points_);
    psi_ = psrs_->generator_matrix();
  } else {
    psi_ = vandermonde(field_, d_, points_);
  }
  validate();
}

MbrCode::MbrCode(PsrsEvalCode code)
    : field_(code.field()),
      n_(code.n()),
      k_(code.k()),
      d_(code.d()),
      backend_(MbrBackend::psrs),
      points_(code.points()),
      psi_(code.generator_matrix()),
      psrs_(std::move(code)) {
  validate();
}

MbrCode MbrCode::psrs_on_roots_of_unity(std::size_t n, std::size_t k, std::size_t d) {
  return MbrCode(PsrsEvalCode::on_roots_of_unity(n, k, d));
}

void MbrCode::validate() const {
  const std::uint64_t seed = n_ * 7919u + k_ * 31u + d_;
  for_row_subsets(n_, d_, seed, [&](const std::vector<std::size_t>& rows) {
    if (!is_invertible(submatrix_rows(psi_, rows))) {
      raise(ErrorCode::SingularMatrix, "d rows of the encoding matrix are dependent");
    }
  });
  const Matrix phi_block = phi();
  for_row_subsets(n_, k_, seed + 1, [&](const std::vector<std::size_t>& rows) {
    if (!is_invertible(submatrix_rows(phi_block, rows))) {
      raise(ErrorCode::SingularMatrix, "k rows of Phi are dependent");
    }
  });
}

Matrix MbrCode::build_message(std::span<const Symbol> u) const {
  if (u.size() != message_size()) {
    raise(ErrorCode::WrongMessageLength, "message must have B=" + std::to_string(message_size()) +
                                             " symbols, got " + std::to_string(u.size()));
  }
  Matrix m(field_, d_, d_);
  std::size_t next = 0;
  for (std::size_t i = 0; i < k_; ++i) {
    for (std::size_t j = i; j < d_; ++j) {
      if (!field_.contains(u[next])) raise(ErrorCode::FieldMismatch, "symbol outside field");
      m(i, j) = u[next];
      m(j, i) = u[next];
      ++next;
    }
  }
  return m;
}

std::vector<Symbol> MbrCode::data_from_blocks(const Matrix& s, const Matrix& t) const {
  std::vector<Symbol> out;
  out.reserve(message_size());
  for (std::size_t i = 0; i < k_; ++i) {
    for (std::size_t j = i; j < k_; ++j) out.push_back(s(i, j));
    for (std::size_t j = 0; j < d_ - k_; ++j) out.push_back(t(i, j));
  }
  return out;
}

Matrix MbrCode::encode(std::span<const Symbol> u, OpCounter* counter, EncodeRoute route) const {
  const Matrix m = build_message(u);
  if (route == EncodeRoute::matrix) return mul(psi_, m, counter);

  // One polynomial evaluation per column of M.
  Matrix c(field_, n_, d_);
  for (std::size_t j = 0; j < d_; ++j) {
    const std::vector<Symbol> column = m.column(j);
    std::vector<Symbol> values;
    if (psrs_) {
      const std::span<const Symbol> all(column);
      values = psrs_->encode(all.first(k_), all.subspan(k_), counter);
    } else {
      values.resize(n_);
      for (std::size_t i = 0; i < n_; ++i) values[i] = poly::eval(field_, column, points_[i], counter);
    }
    for (std::size_t i = 0; i < n_; ++i) c(i, j) = values[i];
  }
  return c;
}

Symbol MbrCode::helper_response(const Field& field, std::span<const Symbol> fragment,
                                std::span<const Symbol> failed_row, OpCounter* counter) {
  if (fragment.size() != failed_row.size()) {
    raise(ErrorCode::DimensionMismatch, "fragment has " + std::to_string(fragment.size()) +
                                            " symbols, encoding row has " +
                                            std::to_string(failed_row.size()));
  }
  return dot(field, fragment, failed_row, counter);
}

Symbol MbrCode::helper_response(std::span<const Symbol> fragment, std::size_t failed,
                                OpCounter* counter) const {
  if (failed >= n_) raise(ErrorCode::IndexOutOfRange, "failed node out of range");
  return helper_response(field_, fragment, psi_.row(failed), counter);
}

std::vector<Symbol> MbrCode::repair(std::span<const HelperSymbol> responses, std::size_t failed,
                                    OpCounter* counter) const {
  if (failed >= n_) raise(ErrorCode::IndexOutOfRange, "failed node out of range");
  if (responses.size() != d_) {
    raise(ErrorCode::WrongHelperCount, "repair needs d=" + std::to_string(d_) +
                                           " helpers, got " + std::to_string(responses.size()));
  }
  std::vector<bool> seen(n_, false);
  std::vector<std::size_t> helpers;
  std::vector<Symbol> upsilon;
  for (const auto& r : responses) {
    if (r.helper >= n_) raise(ErrorCode::IndexOutOfRange, "helper out of range");
    if (r.helper == failed) raise(ErrorCode::DuplicateHelper, "failed node listed as helper");
    if (seen[r.helper]) raise(ErrorCode::DuplicateHelper, "helper listed twice");
    seen[r.helper] = true;
    helpers.push_back(r.helper);
    upsilon.push_back(r.value);
  }
  // Psi_repair (M psi_f) = upsilon, and M psi_f is the lost row transposed.
  return solve(submatrix_rows(psi_, helpers), upsilon, counter);
}

std::vector<Symbol> MbrCode::reconstruct(std::span<const NodeFragment> fragments,
                                         OpCounter* counter) const {
  if (fragments.size() != k_) {
    raise(ErrorCode::WrongFragmentCount, "reconstruction needs exactly k=" + std::to_string(k_) +
                                             " fragments, got " +
                                             std::to_string(fragments.size()));
  }
  std::vector<std::size_t> nodes;
  for (const auto& f : fragments) {
    if (f.symbols.size() != d_) {
      raise(ErrorCode::DimensionMismatch, "fragment of node " + std::to_string(f.node) +
                                              " must hold d=" + std::to_string(d_) + " symbols");
    }
    nodes.push_back(f.node);
  }
  check_distinct_nodes(nodes, n_);
  Matrix c_dc(field_, k_, d_);
  for (std::size_t r = 0; r < k_; ++r)
    for (std::size_t c = 0; c < d_; ++c) c_dc(r, c) = fragments[r].symbols[c];

  const Matrix phi_inv = inverse(submatrix_rows(phi(), nodes), counter);
  const Matrix delta_dc = submatrix_rows(delta(), nodes);
  const Matrix t = mul(phi_inv, submatrix_cols(c_dc, k_, d_ - k_), counter);
  const Matrix s = mul(
      phi_inv, sub(submatrix_cols(c_dc, 0, k_), mul(delta_dc, transpose(t), counter), counter),
      counter);
  return data_from_blocks(s, t);
}

std::vector<std::size_t> MbrCode::slot_order(std::span<const std::size_t> connected,
                                             Scheme scheme,
                                             std::optional<std::vector<std::size_t>> order) const {
  if (connected.size() != k_) {
    raise(ErrorCode::WrongFragmentCount, "a data collector connects to exactly k nodes");
  }
  check_distinct_nodes(connected, n_);
  const bool sys = systematic();
  if (order) {
    if (order->size() != k_) raise(ErrorCode::OrderingInfeasible, "order must list k slots");
    check_distinct_nodes(*order, k_);
    for (std::size_t j = 0; j < k_; ++j) {
      const std::size_t node = connected[j];
      const std::size_t g = (*order)[j];
      if (!sys || node >= k_) continue;
      const bool ok = scheme == Scheme::lower     ? g <= node
                      : scheme == Scheme::upper   ? g >= node
                      : scheme == Scheme::timeshare ? g == node
                                                    : true;
      if (!ok) {
        raise(ErrorCode::OrderingInfeasible,
              "systematic node " + std::to_string(node) + " cannot sit at slot " +
                  std::to_string(g) + " under scheme " + std::string(to_string(scheme)));
      }
    }
    return *order;
  }
  std::vector<std::size_t> slots(k_, k_);
  std::vector<bool> taken(k_, false);
  for (std::size_t j = 0; j < k_; ++j) {
    if (sys && connected[j] < k_) {
      slots[j] = connected[j];
      taken[connected[j]] = true;
    }
  }
  std::size_t free_slot = 0;
  for (std::size_t j = 0; j < k_; ++j) {
    if (slots[j] != k_) continue;
    while (taken[free_slot]) ++free_slot;
    slots[j] = free_slot;
    taken[free_slot] = true;
  }
  return slots;
}

DownloadPlan MbrCode::partial_plan(std::span<const std::size_t> connected, Scheme scheme,
                                   std::optional<std::vector<std::size_t>> order) const {
  if (scheme != Scheme::lower && scheme != Scheme::upper && scheme != Scheme::gong) {
    raise(ErrorCode::ParamsInvalid,
          "partial plan scheme must be lower, upper or gong, got " + std::string(to_string(scheme)));
  }
  if (scheme == Scheme::gong && backend_ != MbrBackend::vandermonde) {
    raise(ErrorCode::SchemeBackendMismatch, "the gong scheme needs the vandermonde backend");
  }
  DownloadPlan plan;
  plan.scheme = scheme;
  plan.nodes.assign(connected.begin(), connected.end());
  plan.rows = slot_order(connected, scheme, std::move(order));
  for (std::size_t j = 0; j < k_; ++j) {
    const std::size_t slot = plan.rows[j];
    std::vector<std::size_t> positions;
    if (scheme == Scheme::lower) {
      for (std::size_t c = 0; c <= slot; ++c) positions.push_back(c);
    } else {
      for (std::size_t c = slot; c < k_; ++c) positions.push_back(c);
    }
    for (std::size_t c = k_; c < d_; ++c) positions.push_back(c);
    plan.positions.push_back(std::move(positions));
  }
  return plan;
}

std::vector<Symbol> MbrCode::reconstruct_partial(const DownloadPlan& plan,
                                                 std::span<const std::vector<Symbol>> payloads,
                                                 OpCounter* counter,
                                                 std::vector<StageSystem>* trace) const {
  check_payloads(plan, payloads);
  if (plan.nodes.size() != k_ || plan.rows.size() != k_) {
    raise(ErrorCode::PlanPayloadMismatch, "plan must cover exactly k nodes");
  }
  const Scheme scheme = plan.scheme == Scheme::timeshare
                            ? (plan.round % 2 == 0 ? Scheme::lower : Scheme::upper)
                            : plan.scheme;
  if (scheme != Scheme::lower && scheme != Scheme::upper && scheme != Scheme::gong) {
    raise(ErrorCode::PlanPayloadMismatch, "plan is not a partial-download plan");
  }
  check_distinct_nodes(plan.rows, k_);

  // Arrange the downloaded symbols as rows of C_DC by slot.
  std::vector<std::size_t> slot_node(k_);
  Matrix c_dc(field_, k_, d_);
  std::vector<std::vector<bool>> known(k_, std::vector<bool>(d_, false));
  for (std::size_t j = 0; j < k_; ++j) {
    const std::size_t slot = plan.rows[j];
    slot_node[slot] = plan.nodes[j];
    for (std::size_t p = 0; p < plan.positions[j].size(); ++p) {
      const std::size_t col = plan.positions[j][p];
      if (col >= d_) raise(ErrorCode::PlanPayloadMismatch, "planned position out of range");
      if (!field_.contains(payloads[j][p])) raise(ErrorCode::FieldMismatch, "symbol outside field");
      c_dc(slot, col) = payloads[j][p];
      known[slot][col] = true;
    }
  }
  for (std::size_t s = 0; s < k_; ++s) {
    for (std::size_t c = 0; c < d_; ++c) {
      const bool needed = c >= k_ || (scheme == Scheme::lower ? c <= s : c >= s);
      if (needed && !known[s][c]) {
        raise(ErrorCode::PlanPayloadMismatch, "slot " + std::to_string(s) + " lacks column " +
                                                  std::to_string(c));
      }
    }
  }

  const Matrix phi_dc = submatrix_rows(phi(), slot_node);
  const Matrix delta_dc = submatrix_rows(delta(), slot_node);
  const Matrix t = mul(inverse(phi_dc, counter), submatrix_cols(c_dc, k_, d_ - k_), counter);

  // Accessible part of D_DC = C_DC^Phi - Delta_DC T^t.
  Matrix d_dc(field_, k_, k_);
  for (std::size_t s = 0; s < k_; ++s) {
    for (std::size_t c = 0; c < k_; ++c) {
      if (!known[s][c]) continue;
      Symbol corr = 0;
      for (std::size_t x = 0; x < d_ - k_; ++x) corr = field_.add(corr, field_.mul(delta_dc(s, x), t(c, x)));
      count_mul(counter, d_ - k_);
      count_add(counter, d_ - k_);
      d_dc(s, c) = field_.sub(c_dc(s, c), corr);
    }
  }

  Matrix s_mat(field_, k_, k_);
  auto solve_stage = [&](std::size_t column, const Matrix& lhs, const std::vector<Symbol>& rhs) {
    if (trace != nullptr) trace->push_back({column, lhs, rhs});
    if (!is_invertible(lhs)) {
      raise(ErrorCode::SingularStageMatrix,
            "stage matrix for column " + std::to_string(column) + " is singular");
    }
    return solve(lhs, rhs, counter);
  };

  if (scheme == Scheme::lower) {
    for (std::size_t l = 0; l < k_; ++l) {
      Matrix lhs(field_, k_, k_);
      std::vector<Symbol> rhs(k_);
      for (std::size_t j = 0; j < l; ++j) {
        lhs(j, j) = 1;
        rhs[j] = s_mat(l, j);
      }
      for (std::size_t s = l; s < k_; ++s) {
        for (std::size_t c = 0; c < k_; ++c) lhs(s, c) = phi_dc(s, c);
        rhs[s] = d_dc(s, l);
      }
      const auto col = solve_stage(l, lhs, rhs);
      for (std::size_t r = 0; r < k_; ++r) s_mat(r, l) = s_mat(l, r) = col[r];
    }
  } else if (scheme == Scheme::upper) {
    for (std::size_t step = 0; step < k_; ++step) {
      const std::size_t c = k_ - 1 - step;
      Matrix lhs(field_, k_, k_);
      std::vector<Symbol> rhs(k_);
      for (std::size_t s = 0; s <= c; ++s) {
        for (std::size_t x = 0; x < k_; ++x) lhs(s, x) = phi_dc(s, x);
        rhs[s] = d_dc(s, c);
      }
      for (std::size_t j = c + 1; j < k_; ++j) {
        lhs(j, j) = 1;
        rhs[j] = s_mat(c, j);
      }
      const auto col = solve_stage(c, lhs, rhs);
      for (std::size_t r = 0; r < k_; ++r) s_mat(r, c) = s_mat(c, r) = col[r];
    }
  } else {
    // Backward columns; entries below the diagonal are already known by
    // symmetry and are substituted out, leaving the leading columns.
    for (std::size_t step = 0; step < k_; ++step) {
      const std::size_t c = k_ - 1 - step;
      Matrix lhs(field_, c + 1, c + 1);
      std::vector<Symbol> rhs(c + 1);
      for (std::size_t s = 0; s <= c; ++s) {
        Symbol value = d_dc(s, c);
        for (std::size_t x = c + 1; x < k_; ++x) {
          value = field_.sub(value, field_.mul(phi_dc(s, x), s_mat(x, c)));
        }
        count_mul(counter, k_ - c - 1);
        count_add(counter, k_ - c - 1);
        for (std::size_t x = 0; x <= c; ++x) lhs(s, x) = phi_dc(s, x);
        rhs[s] = value;
      }
      const auto col = solve_stage(c, lhs, rhs);
      for (std::size_t r = 0; r <= c; ++r) s_mat(r, c) = s_mat(c, r) = col[r];
    }
  }
  return data_from_blocks(s_mat, t);
}

std::vector<DownloadPlan> MbrCode::timeshare_schedule(std::span<const std::size_t> connected,
                                                      std::size_t rounds) const {
  const std::vector<std::size_t> order = slot_order(connected, Scheme::timeshare);
  std::vector<DownloadPlan> out;
  for (std::size_t r = 0; r < rounds; ++r) {
    DownloadPlan plan = partial_plan(connected, r % 2 == 0 ? Scheme::lower : Scheme::upper, order);
    plan.scheme = Scheme::timeshare;
    plan.round = r;
    out.push_back(std::move(plan));
  }
  return out;
}

}  // namespace regen
