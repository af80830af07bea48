#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "regen/error.hpp"
#include "regen/psrs.hpp"

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

std::vector<Share> shares_at(const std::vector<Symbol>& cw, const std::vector<std::size_t>& pos) {
  std::vector<Share> out;
  for (auto p : pos) out.push_back({p, cw[p]});
  return out;
}

// Lagrange basis value L_j(x) over `pts`, computed directly from its product form.
Symbol lagrange(const Field& f, const std::vector<Symbol>& pts, std::size_t j, Symbol x) {
  Symbol num = 1, den = 1;
  for (std::size_t m = 0; m < pts.size(); ++m) {
    if (m == j) continue;
    num = oracle::mul(f, num, oracle::sub(f, x, pts[m]));
    den = oracle::mul(f, den, oracle::sub(f, pts[j], pts[m]));
  }
  return oracle::mul(f, num, oracle::inv(f, den));
}

}  // namespace

TEST_CASE("generator matrix of the evaluation form over GF(7)") {
  const Field gf7 = Field::prime(7);
  const PsrsEvalCode code(gf7, 6, 3, 4);
  const Matrix& g = code.generator_matrix();
  // Rows 4..6 of Phi and the Delta column as printed for n=6, k=3, d=4.
  const Matrix expected = Matrix::from_rows(gf7, {{1, 0, 0, 0},
                                                  {0, 1, 0, 0},
                                                  {0, 0, 1, 0},
                                                  {1, 4, 3, 6},
                                                  {3, 6, 6, 3},
                                                  {6, 6, 3, 4}});
  CHECK(g == expected);
  CHECK(code.gamma() == std::vector<Symbol>{1, 4, 1, 1});

  // Independent construction: Phi[i][j] = L_j(x_i), Delta[i][t] = Gamma(x_i) x_i^t.
  const std::vector<Symbol> pts = {1, 2, 3, 4, 5, 6};
  const std::vector<Symbol> sys = {1, 2, 3};
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(g(i, j) == lagrange(gf7, sys, j, pts[i]));
    Symbol gamma = 1;
    for (auto r : sys) gamma = oracle::mul(gf7, gamma, oracle::sub(gf7, pts[i], r));
    CHECK(g(i, 3) == gamma);
  }
}

TEST_CASE("evaluation form: systematic, MDS, and consistent routes") {
  std::mt19937_64 rng(1);
  for (const Field& f : {Field::prime(11), Field::binary(4)}) {
    for (std::size_t n = 3; n <= 8; ++n) {
      for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t d = k; d < n; ++d) {
          const PsrsEvalCode code(f, n, k, d);
          const auto a = oracle::random_symbols(f, k, rng);
          const auto b = oracle::random_symbols(f, d - k, rng);
          const auto cw = code.encode(a, b);
          for (std::size_t i = 0; i < k; ++i) CHECK(cw[i] == a[i]);

          // Generator-matrix encode equals polynomial evaluation.
          std::vector<Symbol> msg(a);
          msg.insert(msg.end(), b.begin(), b.end());
          CHECK(mul(code.generator_matrix(), msg) == cw);
          const auto c = code.coding_polynomial(a, b);
          for (std::size_t i = 0; i < n; ++i) CHECK(oracle::eval(f, c, code.points()[i]) == cw[i]);

          for (const auto& sub : subsets(n, d)) {
            const auto got = code.decode_full(shares_at(cw, sub));
            CHECK(got.a == a);
            CHECK(got.b == b);
          }
          for (const auto& sub : subsets(n, k)) {
            CHECK(code.decode_partial(shares_at(cw, sub), b) == a);
          }
        }
      }
    }
  }
}

TEST_CASE("evaluation form: NTT route equals naive route") {
  std::mt19937_64 rng(2);
  for (std::size_t n : {8u, 12u, 16u, 32u, 40u}) {
    const std::size_t k = 3 * n / 8, d = n / 2;
    const auto code = PsrsEvalCode::on_roots_of_unity(n, k, d);
    CHECK(code.ntt_eligible());
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = oracle::random_symbols(code.field(), k, rng);
      const auto b = oracle::random_symbols(code.field(), d - k, rng);
      CHECK(code.encode(a, b, nullptr, PsrsEvalCode::Route::ntt) ==
            code.encode(a, b, nullptr, PsrsEvalCode::Route::naive));
    }
  }
  CHECK_FALSE(PsrsEvalCode(Field::prime(7), 6, 3, 4).ntt_eligible());
}

TEST_CASE("evaluation form: argument checks") {
  const Field gf7 = Field::prime(7);
  CHECK(code_of([&] { PsrsEvalCode(gf7, 8, 3, 4); }) == ErrorCode::FieldTooSmall);
  CHECK(code_of([&] { PsrsEvalCode(gf7, 6, 4, 3); }) == ErrorCode::ParamsInvalid);
  CHECK(code_of([&] { PsrsEvalCode(gf7, 3, 1, 2, {1, 2, 2}); }) == ErrorCode::DuplicatePoints);
  const PsrsEvalCode code(gf7, 6, 3, 4);
  const auto cw = code.encode(std::vector<Symbol>{1, 2, 3}, std::vector<Symbol>{4});
  CHECK(code_of([&] { code.decode_full(shares_at(cw, {0, 1, 2})); }) ==
        ErrorCode::InsufficientSymbols);
  CHECK(code_of([&] {
          code.decode_full(std::vector<Share>{{0, 1}, {0, 1}, {1, 2}, {2, 3}});
        }) == ErrorCode::DuplicatePosition);
  CHECK(code_of([&] {
          code.decode_full(std::vector<Share>{{0, 1}, {9, 1}, {1, 2}, {2, 3}});
        }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("generator-polynomial form") {
  std::mt19937_64 rng(3);
  const Field gf11 = Field::prime(11);
  for (std::size_t n = 3; n <= 10; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      for (std::size_t d = k; d < n; ++d) {
        const PsrsGenPolyCode code(gf11, n, k, d);
        const auto a = oracle::random_symbols(gf11, k, rng);
        const auto b = oracle::random_symbols(gf11, d - k, rng);
        const auto c = code.encode(a, b);
        REQUIRE(c.size() == n);
        // a(x) sits verbatim at the top degrees.
        for (std::size_t i = 0; i < k; ++i) CHECK(c[n - k + i] == a[i]);
        // g1 divides g0 and every codeword.
        CHECK(poly::divmod(gf11, code.g0(), code.g1()).remainder.empty());
        CHECK(poly::divmod(gf11, c, code.g1()).remainder.empty());
        for (std::size_t j = 0; j < n - d; ++j)
          CHECK(oracle::eval(gf11, c, gf11.pow(code.alpha(), j)) == 0);
        if (n <= 7) {
          for (const auto& sub : subsets(n, d)) {
            const auto got = code.decode_full(shares_at(c, sub), nullptr, false);
            CHECK(got.a == a);
            CHECK(got.b == b);
          }
          for (const auto& sub : subsets(n, k)) CHECK(code.decode_partial(shares_at(c, sub), b) == a);
        }
      }
    }
  }
  CHECK(code_of([&] { PsrsGenPolyCode(gf11, 11, 3, 5); }) == ErrorCode::FieldTooSmall);
}

TEST_CASE("Forney agrees with the linear-system oracle") {
  std::mt19937_64 rng(4);
  for (const Field& f : {Field::prime(13), Field::binary(4), Field::fermat()}) {
    const PsrsGenPolyCode code(f, 12, 4, 7);
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = oracle::random_symbols(f, 4, rng);
      const auto b = oracle::random_symbols(f, 3, rng);
      const auto c = code.encode(a, b);
      std::vector<std::size_t> pos(12);
      for (std::size_t i = 0; i < 12; ++i) pos[i] = i;
      std::shuffle(pos.begin(), pos.end(), rng);
      pos.resize(7);
      const auto shares = shares_at(c, pos);
      const auto fast = code.decode_full(shares, nullptr, false);
      CHECK(fast == code.decode_full_linear(shares));
      CHECK(fast.a == a);
      CHECK(fast.b == b);
    }
  }
}
