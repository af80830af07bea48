#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "regen/error.hpp"
#include "regen/rbt.hpp"

using namespace regen;

namespace {

ErrorCode code_of(auto fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::IoError;
}

std::size_t message_size(std::size_t n, std::size_t k) { return (n - 1) * k - k * (k - 1) / 2; }

// Skew-symmetric n x n matrix whose strictly upper part of the first k rows
// holds u row by row; everything else follows from skew symmetry.
Matrix layout_oracle(const Field& f, std::size_t n, std::size_t k, const std::vector<Symbol>& u) {
  Matrix m(f, n, n);
  std::size_t next = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = u[next++];
      m(j, i) = oracle::neg(f, m(i, j));
    }
  return m;
}

Matrix transpose_oracle(const Matrix& a) {
  Matrix t(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Matrix sign_fix_oracle(Matrix c) {
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < i && j < c.cols(); ++j) c(i, j) = oracle::neg(c.field(), c(i, j));
  return c;
}

std::vector<NodeFragment> pick(const RbtCodeword& cw, const std::vector<std::size_t>& nodes) {
  std::vector<NodeFragment> out;
  for (auto i : nodes) out.push_back({i, cw.fragment(i)});
  return out;
}

std::vector<std::vector<Symbol>> rows_for(const RbtCodeword& cw, const std::vector<std::size_t>& nodes) {
  std::vector<std::vector<Symbol>> out;
  for (auto i : nodes) out.push_back(cw.fragment(i));
  return out;
}

// Number of slots l != j for which slot j is the one that omits the shared symbol.
std::size_t omitted(std::size_t j, std::size_t k) {
  std::size_t count = 0;
  for (std::size_t l = 1; l <= k; ++l)
    if (l != j && decision(j, l) == j) ++count;
  return count;
}

}  // namespace

TEST_CASE("encoding matrix for n=5, k=3 over GF(4)") {
  const Field gf4 = Field::binary(2);
  const RbtCode code(gf4, 5, 3);
  const Symbol w = gf4.primitive();
  const Symbol w2 = gf4.mul(w, w);
  const Symbol w4 = gf4.mul(w2, w2);
  const Matrix psi = Matrix::from_rows(gf4, {{1, 0, 0, 0, 0},
                                             {1, 1, 1, 0, 0},
                                             {1, w, w2, 0, 0},
                                             {1, w2, w4, 1, 0},
                                             {0, 0, 1, 0, 1}});
  CHECK(code.encoding() == psi);
  CHECK(code.message_size() == 9);
  CHECK(code.alpha() == 4);
  CHECK(code.d() == 4);
  CHECK(oracle::rank(code.encoding()) == 5);
}

TEST_CASE("message layout fills the strict upper triangle row by row") {
  const Field gf7 = Field::prime(7);
  const RbtCode code(gf7, 5, 3);
  std::vector<Symbol> u(9);
  for (std::size_t i = 0; i < 9; ++i) u[i] = static_cast<Symbol>(i % 6 + 1);
  const Matrix m = code.build_message(u).matrix();
  CHECK(m == layout_oracle(gf7, 5, 3, u));
  // Spot values: u1 at (1,2), u5 at (2,3), u9 at (3,5), zeros in the bottom-right block.
  CHECK(m(0, 1) == u[0]);
  CHECK(m(1, 2) == u[4]);
  CHECK(m(2, 4) == u[8]);
  CHECK(m(3, 4) == 0);
  CHECK(m(4, 3) == 0);
  CHECK(code_of([&] { code.build_message(std::vector<Symbol>(8, 1)); }) ==
        ErrorCode::WrongMessageLength);
}

TEST_CASE("encoding equals the congruence oracle followed by the sign fix") {
  std::mt19937_64 rng(11);
  for (const Field& f : {Field::binary(2), Field::prime(7), Field::prime(11), Field::binary(4)}) {
    for (std::size_t n = 3; n <= std::min<std::uint64_t>(f.order() + 1, 9); ++n) {
      for (std::size_t k = 1; k < n; ++k) {
        const RbtCode code(f, n, k);
        for (int trial = 0; trial < 5; ++trial) {
          const auto u = oracle::random_symbols(f, message_size(n, k), rng);
          const Matrix hat = oracle::matmul(oracle::matmul(code.encoding(), layout_oracle(f, n, k, u)),
                                            transpose_oracle(code.encoding()));
          const RbtCodeword cw = code.encode(u);
          CHECK(cw.matrix() == sign_fix_oracle(hat));
          if (f.characteristic_two()) CHECK(cw.matrix() == hat);
        }
      }
    }
  }
}

TEST_CASE("code matrix is symmetric with zero diagonal") {
  std::mt19937_64 rng(12);
  for (const Field& f : {Field::prime(13), Field::binary(3)}) {
    const RbtCode code(f, 8, 4);
    for (int trial = 0; trial < 50; ++trial) {
      const Matrix c = code.encode(oracle::random_symbols(f, code.message_size(), rng)).matrix();
      for (std::size_t i = 0; i < 8; ++i) {
        CHECK(c(i, i) == 0);
        for (std::size_t j = 0; j < 8; ++j) CHECK(c(i, j) == c(j, i));
      }
    }
  }
  const Field gf7 = Field::prime(7);
  CHECK(code_of([&] { RbtCodeword(Matrix::from_rows(gf7, {{0, 1}, {2, 0}})); }) ==
        ErrorCode::ParamsInvalid);
  CHECK(code_of([&] { RbtCodeword(Matrix::from_rows(gf7, {{1, 1}, {1, 0}})); }) ==
        ErrorCode::ParamsInvalid);
}

TEST_CASE("sign fix") {
  const Field gf7 = Field::prime(7);
  std::mt19937_64 rng(13);
  const Matrix c(gf7, 5, 5, oracle::random_symbols(gf7, 25, rng));
  OpCounter ops;
  const Matrix fixed = sign_fix(c, &ops);
  CHECK(fixed == sign_fix_oracle(c));
  CHECK(sign_fix(fixed) == c);
  CHECK(ops.additions == 10);
  CHECK(ops.multiplications == 0);

  const Field gf16 = Field::binary(4);
  const Matrix b(gf16, 5, 5, oracle::random_symbols(gf16, 25, rng));
  OpCounter none;
  CHECK(sign_fix(b, &none) == b);
  CHECK(none.additions == 0);
}

TEST_CASE("full reconstruction and repair on every subset, n=6, k=3 over GF(7)") {
  std::mt19937_64 rng(14);
  const Field gf7 = Field::prime(7);
  for (bool systematic : {false, true}) {
    const RbtCode code(gf7, 6, 3, systematic);
    const auto u = oracle::random_symbols(gf7, code.message_size(), rng);
    const auto cw = code.encode(u);
    for (const auto& sub : subsets(6, 3)) {
      CHECK(code.reconstruct(pick(cw, sub)) == u);
      const auto plan = code.partial_plan(sub);
      CHECK(code.reconstruct_partial(plan, plan.extract(rows_for(cw, sub))) == u);
    }
    for (std::size_t failed = 0; failed < 6; ++failed) {
      std::vector<HelperSymbol> helpers;
      for (std::size_t h = 0; h < 6; ++h)
        if (h != failed) helpers.push_back({h, RbtCode::helper_symbol(cw.fragment(h), h, failed)});
      CHECK(RbtCode::repair(helpers, failed, 6) == cw.fragment(failed));
    }
  }
}

TEST_CASE("reconstruction across fields and shapes") {
  std::mt19937_64 rng(15);
  for (const Field& f : {Field::binary(2), Field::binary(3), Field::prime(11)}) {
    for (std::size_t n = 3; n <= std::min<std::uint64_t>(f.order() + 1, 8); ++n) {
      for (std::size_t k = 1; k < n; ++k) {
        for (bool systematic : {false, true}) {
          const RbtCode code(f, n, k, systematic);
          const auto u = oracle::random_symbols(f, code.message_size(), rng);
          const auto cw = code.encode(u);
          for (const auto& sub : subsets(n, k)) {
            REQUIRE(code.reconstruct(pick(cw, sub)) == u);
            const auto plan = code.partial_plan(sub);
            REQUIRE(code.reconstruct_partial(plan, plan.extract(rows_for(cw, sub))) == u);
          }
        }
      }
    }
  }
}

TEST_CASE("systematic encoding") {
  std::mt19937_64 rng(16);
  for (const Field& f : {Field::prime(11), Field::binary(3)}) {
    const std::size_t n = 7, k = 3;
    const RbtCode code(f, n, k, true);
    const Matrix phi_check = code.parity_block();
    // Phi is [I_k; parity].
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) CHECK(code.phi()(i, j) == (i == j ? 1u : 0u));

    for (int trial = 0; trial < 20; ++trial) {
      const auto u = oracle::random_symbols(f, code.message_size(), rng);
      const RbtCodeword cw = code.encode(u);

      // Data sits verbatim in the strict upper part of the first k rows.
      const Matrix lay = layout_oracle(f, n, k, u);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < n; ++j) CHECK(cw.matrix()(i, j) == lay(i, j));

      // Remapped message S = U_L, T = U_R - U_L * parity^t gives the same codeword.
      Matrix ul(f, k, k), ur(f, k, n - k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) ul(i, j) = lay(i, j);
        for (std::size_t j = 0; j < n - k; ++j) ur(i, j) = lay(i, k + j);
      }
      const Matrix ulp = oracle::matmul(ul, transpose_oracle(phi_check));
      Matrix m(f, n, n);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) m(i, j) = ul(i, j);
        for (std::size_t j = 0; j < n - k; ++j) {
          m(i, k + j) = oracle::sub(f, ur(i, j), ulp(i, j));
          m(k + j, i) = oracle::neg(f, m(i, k + j));
        }
      }
      CHECK(code.encode_message(SkewSymmetric(m)).matrix() == cw.matrix());

      // V = P U_R - U_R^t P^t - P U_L P^t, and it is skew-symmetric.
      const Matrix pur = oracle::matmul(phi_check, ur);
      const Matrix pulp = oracle::matmul(oracle::matmul(phi_check, ul), transpose_oracle(phi_check));
      Matrix v(f, n - k, n - k);
      for (std::size_t i = 0; i < n - k; ++i)
        for (std::size_t j = 0; j < n - k; ++j)
          v(i, j) = oracle::sub(f, oracle::sub(f, pur(i, j), pur(j, i)), pulp(i, j));
      CHECK(is_skew_symmetric(v));
      const Matrix hat = sign_fix_oracle(cw.matrix());
      for (std::size_t i = 0; i < n - k; ++i)
        for (std::size_t j = 0; j < n - k; ++j) CHECK(hat(k + i, k + j) == v(i, j));
    }
  }
  const RbtCode plain(Field::prime(7), 5, 2);
  CHECK(code_of([&] { plain.encode_systematic(Matrix(Field::prime(7), 2, 5)); }) ==
        ErrorCode::ParamsInvalid);
}

TEST_CASE("systematic encoding is cheaper than the full congruence") {
  std::mt19937_64 rng(17);
  const Field f = Field::binary(8);
  const RbtCode sys(f, 20, 8, true), plain(f, 20, 8, false);
  const auto u = oracle::random_symbols(f, sys.message_size(), rng);
  OpCounter a, b;
  sys.encode(u, &a);
  plain.encode(u, &b);
  CHECK(a.multiplications < b.multiplications);
}

TEST_CASE("decision tables for k=5 and k=6") {
  // Row j, columns l from high to low, as tabulated.
  const std::vector<std::vector<std::size_t>> k5 = {{1, 4, 1, 2}, {5, 2, 3}, {3, 4}, {5}};
  for (std::size_t j = 1; j <= 4; ++j)
    for (std::size_t c = 0; c < k5[j - 1].size(); ++c) {
      const std::size_t l = 5 - c;
      CHECK(decision(j, l) == k5[j - 1][c]);
      CHECK(decision(l, j) == k5[j - 1][c]);
    }
  const std::vector<std::vector<std::size_t>> k6 = {
      {6, 1, 4, 1, 2}, {2, 5, 2, 3}, {6, 3, 4}, {4, 5}, {6}};
  for (std::size_t j = 1; j <= 5; ++j)
    for (std::size_t c = 0; c < k6[j - 1].size(); ++c) CHECK(decision(j, 6 - c) == k6[j - 1][c]);

  for (std::size_t j = 1; j <= 5; ++j) CHECK(omitted(j, 5) == 2);
  for (std::size_t j : {1u, 3u, 5u}) CHECK(omitted(j, 6) == 2);
  for (std::size_t j : {2u, 4u, 6u}) CHECK(omitted(j, 6) == 3);
}

TEST_CASE("partial download is balanced and totals B") {
  for (std::size_t n = 3; n <= 10; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      const RbtCode code(Field::prime(11), n, k);
      for (const auto& sub : subsets(n, k)) {
        const auto plan = code.partial_plan(sub);
        REQUIRE(plan.total_symbols() == code.message_size());
        for (std::size_t j = 1; j <= k; ++j) {
          const std::size_t expected =
              k % 2 == 1 ? (k - 1) / 2 : (j % 2 == 1 ? k / 2 - 1 : k / 2);
          CHECK(omitted(j, k) == expected);
          CHECK(plan.symbols_for(j - 1) == n - 1 - expected);
          // The omitted positions are exactly the ones shared with slots that
          // defer to this slot.
          for (std::size_t l = 1; l <= k; ++l) {
            if (l == j) continue;
            const std::size_t pos = stored_position(sub[j - 1], sub[l - 1]);
            const auto& ps = plan.positions[j - 1];
            const bool sent = std::find(ps.begin(), ps.end(), pos) != ps.end();
            CHECK(sent == (decision(j, l) != j));
          }
        }
        if (n > 7) break;
      }
    }
  }
}

TEST_CASE("argument checks") {
  const Field gf4 = Field::binary(2);
  CHECK(code_of([&] { RbtCode(gf4, 6, 3); }) == ErrorCode::FieldTooSmall);
  CHECK(code_of([&] { RbtCode(gf4, 5, 5); }) == ErrorCode::ParamsInvalid);
  CHECK(code_of([&] { RbtCode(gf4, 5, 0); }) == ErrorCode::ParamsInvalid);
  const RbtCode code(Field::prime(7), 6, 3);
  const auto cw = code.encode(std::vector<Symbol>(code.message_size(), 3));
  CHECK(code_of([&] { code.reconstruct(pick(cw, {0, 1})); }) == ErrorCode::WrongFragmentCount);
  CHECK(code_of([&] { code.partial_plan(std::vector<std::size_t>{0, 0, 1}); }) ==
        ErrorCode::DuplicateIndex);
  CHECK(code_of([&] { RbtCode::helper_symbol(cw.fragment(2), 2, 2); }) ==
        ErrorCode::DuplicateHelper);

  std::vector<HelperSymbol> helpers;
  for (std::size_t h = 1; h < 6; ++h) helpers.push_back({h, 0});
  CHECK(code_of([&] { RbtCode::repair(std::span(helpers).first(4), 0, 6); }) ==
        ErrorCode::WrongHelperCount);
  auto dup = helpers;
  dup[1].helper = 1;
  CHECK(code_of([&] { RbtCode::repair(dup, 0, 6); }) == ErrorCode::DuplicateHelper);
  auto self = helpers;
  self[0].helper = 0;
  CHECK(code_of([&] { RbtCode::repair(self, 0, 6); }) == ErrorCode::DuplicateHelper);
}
