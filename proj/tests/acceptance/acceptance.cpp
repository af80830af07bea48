// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each criterion also has a wall-clock budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "regen/regen.hpp"

using namespace regen;
using namespace regen::harness;

namespace {

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  template <class Fn>
  void expect_error(ErrorCode code, Fn fn, const std::string& what) {
    try {
      fn();
    } catch (const Error& e) {
      expect(e.code() == code, what + " raised " + std::string(to_string(e.code())));
      return;
    }
    expect(false, what + " raised nothing");
  }
  bool ok() const { return failed_ == 0; }
  std::size_t checks() const { return checks_; }
  std::string summary() const {
    std::ostringstream out;
    out << failed_ << " of " << checks_ << " checks failed";
    for (const auto& f : failures_) out << "; " << f;
    return out.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::size_t rbt_b(std::size_t n, std::size_t k) { return (n - 1) * k - k * (k - 1) / 2; }
std::size_t mbr_b(std::size_t k, std::size_t d) { return k * (k + 1) / 2 + k * (d - k); }

std::vector<std::vector<Symbol>> rows_of(const Matrix& c, const std::vector<std::size_t>& nodes) {
  std::vector<std::vector<Symbol>> out;
  for (auto i : nodes) out.emplace_back(c.row(i).begin(), c.row(i).end());
  return out;
}

std::vector<NodeFragment> frags_of(const Matrix& c, const std::vector<std::size_t>& nodes) {
  std::vector<NodeFragment> out;
  for (auto i : nodes) out.push_back({i, {c.row(i).begin(), c.row(i).end()}});
  return out;
}

NodeTable table_of(const std::vector<std::vector<Symbol>>& frags) {
  NodeTable t;
  for (const auto& f : frags) t.emplace_back(f);
  return t;
}

std::size_t rbt_omitted(std::size_t j, std::size_t k) {
  std::size_t count = 0;
  for (std::size_t l = 1; l <= k; ++l)
    if (l != j && decision(j, l) == j) ++count;
  return count;
}

// 1 -----------------------------------------------------------------------
void example_exactness(Checker& c) {
  const Field gf4 = Field::binary(2);
  const Symbol w = gf4.primitive(), w2 = gf4.mul(w, w), w4 = gf4.mul(w2, w2);
  const RbtCode rbt(gf4, 5, 3);
  c.expect(rbt.encoding() == Matrix::from_rows(gf4, {{1, 0, 0, 0, 0},
                                                     {1, 1, 1, 0, 0},
                                                     {1, w, w2, 0, 0},
                                                     {1, w2, w4, 1, 0},
                                                     {0, 0, 1, 0, 1}}),
           "GF(4) n=5 k=3 encoding matrix");
  c.expect(w == 2 && w4 == w, "GF(4) primitive element");

  const Field gf7 = Field::prime(7);
  const MbrCode mbr(gf7, 6, 3, 4, MbrBackend::psrs);
  const Matrix phi = Matrix::from_rows(gf7, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                             {1, 4, 3}, {3, 6, 6}, {6, 6, 3}});
  const Matrix delta = Matrix::from_rows(gf7, {{0}, {0}, {0}, {6}, {3}, {4}});
  c.expect(mbr.phi() == phi, "GF(7) Phi");
  c.expect(mbr.delta() == delta, "GF(7) Delta");
  c.expect(mbr.encoding() == hconcat(phi, delta), "GF(7) Psi");
  const std::vector<Symbol> u = {1, 2, 3, 4, 5, 6, 0, 1, 2};
  c.expect(mbr.build_message(u) ==
               Matrix::from_rows(gf7, {{1, 2, 3, 4}, {2, 5, 6, 0}, {3, 6, 1, 2}, {4, 0, 2, 0}}),
           "GF(7) message matrix");

  // Nodes 1, 2 and 4 read back with the lower scheme.
  const Matrix cm = mbr.encode(u);
  const std::vector<std::size_t> nodes = {0, 1, 3};
  const auto plan = mbr.partial_plan(nodes, Scheme::lower);
  std::vector<StageSystem> trace;
  const auto got = mbr.reconstruct_partial(plan, plan.extract(rows_of(cm, nodes)), nullptr, &trace);
  c.expect(got == u, "lower-scheme data");
  c.expect(submatrix_rows(mbr.delta(), nodes) == Matrix::from_rows(gf7, {{0}, {0}, {6}}),
           "Delta_DC");
  const Matrix stage = Matrix::from_rows(gf7, {{1, 0, 0}, {0, 1, 0}, {1, 4, 3}});
  c.expect(trace.size() == 3, "stage count");
  const Matrix m = mbr.build_message(u);
  for (std::size_t l = 0; l < trace.size(); ++l) {
    c.expect(trace[l].column == l && trace[l].lhs == stage, "stage matrix");
    c.expect(mbr.field() == gf7 && mul(trace[l].lhs, std::vector<Symbol>{m(0, l), m(1, l), m(2, l)}) ==
                                       trace[l].rhs,
             "stage right-hand side");
  }
  if (trace.size() == 3) {
    c.expect(trace[1].rhs[0] == u[1], "stage two reuses u2");
    c.expect(trace[2].rhs[0] == u[2] && trace[2].rhs[1] == u[5], "stage three reuses u3, u6");
  }
}

// 2 -----------------------------------------------------------------------
void decision_tables(Checker& c) {
  const std::vector<std::vector<std::size_t>> k5 = {{1, 4, 1, 2}, {5, 2, 3}, {3, 4}, {5}};
  const std::vector<std::vector<std::size_t>> k6 = {
      {6, 1, 4, 1, 2}, {2, 5, 2, 3}, {6, 3, 4}, {4, 5}, {6}};
  for (const auto& [k, table] : {std::pair{5u, k5}, std::pair{6u, k6}}) {
    for (std::size_t j = 1; j < k; ++j)
      for (std::size_t col = 0; col < table[j - 1].size(); ++col) {
        const std::size_t l = k - col;
        c.expect(decision(j, l) == table[j - 1][col] && decision(l, j) == table[j - 1][col],
                 "D(" + std::to_string(j) + "," + std::to_string(l) + ")");
      }
    // The partial plan applies the same decisions.
    const RbtCode code(Field::prime(11), 9, k);
    std::vector<std::size_t> nodes(k);
    for (std::size_t i = 0; i < k; ++i) nodes[i] = 8 - i;
    const auto plan = code.partial_plan(nodes);
    for (std::size_t j = 1; j <= k; ++j)
      for (std::size_t l = 1; l <= k; ++l) {
        if (l == j) continue;
        const auto& ps = plan.positions[j - 1];
        const bool sent =
            std::find(ps.begin(), ps.end(), stored_position(nodes[j - 1], nodes[l - 1])) != ps.end();
        c.expect(sent == (decision(j, l) != j), "plan follows D");
      }
  }
}

// 3 -----------------------------------------------------------------------
void exhaustive_round_trip(Checker& c) {
  std::mt19937_64 rng(3);
  for (const Field& f : {Field::prime(11), Field::binary(4), Field::fermat()}) {
    for (std::size_t n = 2; n <= 8; ++n) {
      for (std::size_t k = 1; k < n; ++k) {
        for (bool sys : {false, true}) {
          const RbtCode code(f, n, k, sys);
          for (int trial = 0; trial < 5; ++trial) {
            const auto u = oracle::random_symbols(f, code.message_size(), rng);
            const auto cw = code.encode(u);
            for (const auto& sub : subsets(n, k)) {
              std::vector<NodeFragment> frags;
              for (auto i : sub) frags.push_back({i, cw.fragment(i)});
              c.expect(code.reconstruct(frags) == u, "rbt reconstruct");
            }
            for (std::size_t failed = 0; failed < n; ++failed) {
              std::vector<HelperSymbol> helpers;
              for (std::size_t h = 0; h < n; ++h)
                if (h != failed) helpers.push_back({h, RbtCode::helper_symbol(cw.fragment(h), h, failed)});
              c.expect(RbtCode::repair(helpers, failed, n) == cw.fragment(failed), "rbt repair");
            }
          }
        }
        for (std::size_t d = k; d < n; ++d) {
          for (auto backend : {MbrBackend::psrs, MbrBackend::vandermonde}) {
            const MbrCode code(f, n, k, d, backend);
            for (int trial = 0; trial < 5; ++trial) {
              const auto u = oracle::random_symbols(f, code.message_size(), rng);
              const Matrix cm = code.encode(u);
              for (const auto& sub : subsets(n, k))
                c.expect(code.reconstruct(frags_of(cm, sub)) == u, "mbr reconstruct");
              for (std::size_t failed = 0; failed < n; ++failed) {
                std::vector<std::size_t> others;
                for (std::size_t h = 0; h < n; ++h)
                  if (h != failed) others.push_back(h);
                for (const auto& pick : subsets(n - 1, d)) {
                  std::vector<HelperSymbol> responses;
                  for (auto p : pick)
                    responses.push_back({others[p], code.helper_response(cm.row(others[p]), failed)});
                  const auto row = code.repair(responses, failed);
                  c.expect(std::equal(row.begin(), row.end(), cm.row(failed).begin()), "mbr repair");
                }
              }
            }
          }
        }
      }
    }
  }
}

// 4 -----------------------------------------------------------------------
void transfer_only_repair(Checker& c) {
  std::mt19937_64 rng(4);
  const std::vector<std::pair<CodecTag, Field>> cases = {
      {CodecTag::rbt, Field::prime(11)}, {CodecTag::rbt_sys, Field::binary(4)},
      {CodecTag::shah, Field::binary(8)}};
  for (const auto& [tag, f] : cases) {
    for (std::size_t n = 3; n <= 8; ++n) {
      for (std::size_t k = 1; k < n; ++k) {
        const Codec codec = Codec::make({tag, f, n, k, std::nullopt});
        const auto frags = codec.encode(oracle::random_symbols(f, codec.message_size(), rng));
        for (std::size_t failed = 0; failed < n; ++failed) {
          auto nodes = table_of(frags);
          nodes[failed].reset();
          const auto r = codec.repair(nodes, failed);
          c.expect(r.fragment == frags[failed], "repaired fragment");
          c.expect(r.ops.multiplications == 0 && r.ops.additions == 0, "zero-arithmetic repair");
          c.expect(r.symbols == n - 1, "one symbol per helper");
        }
      }
    }
  }
}

// 5 -----------------------------------------------------------------------
void download_accounting(Checker& c) {
  const Field f = Field::prime(11);
  for (std::size_t n = 2; n <= 10; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      const RbtCode rbt(f, n, k);
      for (const auto& sub : subsets(n, k))
        c.expect(rbt.partial_plan(sub).total_symbols() == rbt_b(n, k), "rbt partial total");
      for (std::size_t d = k; d < n; ++d) {
        const MbrCode sys(f, n, k, d, MbrBackend::psrs);
        const MbrCode vdm(f, n, k, d, MbrBackend::vandermonde);
        const std::size_t b = mbr_b(k, d);
        for (const auto& sub : subsets(n, k)) {
          c.expect(sys.partial_plan(sub, Scheme::lower).total_symbols() == b, "lower total");
          c.expect(sys.partial_plan(sub, Scheme::upper).total_symbols() == b, "upper total");
          c.expect(vdm.partial_plan(sub, Scheme::gong).total_symbols() == b, "gong total");
          for (const auto& plan : sys.timeshare_schedule(sub, 4))
            c.expect(plan.total_symbols() == b, "timeshare round total");
        }
      }
    }
  }
  // The codec reports the same totals for an actual download.
  std::mt19937_64 rng(5);
  const Codec codec = Codec::make({CodecTag::mbr_psrs, f, 9, 4, 6});
  const auto nodes = table_of(codec.encode(oracle::random_symbols(f, codec.message_size(), rng)));
  const auto r = codec.reconstruct(nodes, std::vector<std::size_t>{8, 2, 5, 0}, Scheme::timeshare, 3);
  c.expect(r.per_round == std::vector<std::size_t>(3, mbr_b(4, 6)), "codec timeshare rounds");
}

// 6 -----------------------------------------------------------------------
void balance_formulas(Checker& c) {
  const Field f = Field::prime(11);
  for (std::size_t n = 2; n <= 10; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      const RbtCode rbt(f, n, k);
      for (const auto& sub : subsets(n, k)) {
        const auto plan = rbt.partial_plan(sub);
        for (std::size_t j = 1; j <= k; ++j) {
          const std::size_t expected = k % 2 == 1   ? (n - 1) - (k - 1) / 2
                                       : j % 2 == 1 ? (n - 1) - (k / 2 - 1)
                                                    : (n - 1) - k / 2;
          c.expect(plan.symbols_for(j - 1) == expected, "rbt per-node count");
          c.expect(rbt_omitted(j, k) == (n - 1) - expected, "decision omissions");
        }
      }
      for (std::size_t d = k; d < n; ++d) {
        const MbrCode mbr(f, n, k, d, MbrBackend::psrs);
        for (const auto& sub : subsets(n, k)) {
          const auto rounds = mbr.timeshare_schedule(sub, 2);
          for (std::size_t j = 0; j < k; ++j)
            c.expect(rounds[0].symbols_for(j) + rounds[1].symbols_for(j) == 2 * d - (k - 1),
                     "timeshare two-round total");
        }
      }
    }
  }
}

// 7 -----------------------------------------------------------------------
void field_size_advantage(Checker& c) {
  const Field gf8 = Field::binary(3);
  bool built = true;
  try {
    RbtCode(gf8, 8, 4);
  } catch (const Error&) {
    built = false;
  }
  c.expect(built, "rbt builds for n=8 over GF(8)");
  c.expect_error(ErrorCode::FieldTooSmall, [&] { ShahCode(gf8, 8, 4); }, "shah at n=8 over GF(8)");
  c.expect_error(ErrorCode::FieldTooSmall,
                 [&] { Codec::make({CodecTag::shah, gf8, 8, 4, std::nullopt}); }, "shah codec");

  for (const Field& f : {Field::prime(7), Field::prime(11), Field::binary(3)}) {
    const std::size_t q = f.order();
    const std::size_t k = 2, d = 4;
    bool psrs_ok = true;
    try {
      MbrCode(f, q, k, d, MbrBackend::psrs);
    } catch (const Error&) {
      psrs_ok = false;
    }
    c.expect(psrs_ok, "psrs backend at n=q");
    for (const auto& row : field_size_report(f, q, k, d)) {
      if (row.construction == "mbr-psrs") c.expect(row.bound_met && row.built == true, "psrs row");
      if (row.construction == "rashmi-cauchy") c.expect(!row.bound_met, "Cauchy bound violated");
      if (row.construction == "shah") c.expect(!row.bound_met, "baseline bound violated");
    }
  }
}

// 8 -----------------------------------------------------------------------
void complexity_trends(Checker& c) {
  const auto rbt = bench_compare(BenchFamily::rbt_vs_shah, {8, 12, 16, 20, 24, 28, 32}, Field::binary(16));
  c.expect(rbt.excluded.empty(), "all rbt-vs-shah sizes built");
  double last = 0;
  for (std::size_t n = 8; n <= 32; n += 4) {
    const auto* a = rbt.find(n, "rbt");
    const auto* b = rbt.find(n, "shah");
    if (a == nullptr || b == nullptr) {
      c.expect(false, "missing row at n=" + std::to_string(n));
      continue;
    }
    const double ratio = double(b->multiplications) / double(a->multiplications);
    c.expect(ratio > last, "ratio increases at n=" + std::to_string(n));
    last = ratio;
  }
  c.expect(rbt.trend_checked && rbt.trend_holds, "reported rbt-vs-shah trend");

  const std::vector<std::size_t> sizes = {32, 64, 128, 256, 512};
  const auto mbr = bench_compare(BenchFamily::mbr_naive_vs_ntt, sizes, Field::fermat());
  bool crossed = false;
  for (auto n : sizes) {
    const auto* naive = mbr.find(n, "naive");
    const auto* ntt = mbr.find(n, "ntt");
    if (naive && ntt && ntt->multiplications < naive->multiplications) crossed = true;
  }
  c.expect(crossed, "ntt falls below naive");
  c.expect(mbr.trend_checked && mbr.trend_holds, "reported naive-vs-ntt trend");
}

// 9 -----------------------------------------------------------------------
void psrs_mds(Checker& c) {
  std::mt19937_64 rng(9);
  const Field f = Field::prime(11);
  auto shares = [](const std::vector<Symbol>& cw, const std::vector<std::size_t>& pos) {
    std::vector<Share> out;
    for (auto p : pos) out.push_back({p, cw[p]});
    return out;
  };
  for (std::size_t n = 2; n <= 10; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      for (std::size_t d = k; d < n; ++d) {
        const PsrsEvalCode ev(f, n, k, d);
        const PsrsGenPolyCode gp(f, n, k, d);
        const auto a = oracle::random_symbols(f, k, rng);
        const auto b = oracle::random_symbols(f, d - k, rng);
        const PsrsMessage msg{a, b};
        const auto ce = ev.encode(a, b);
        const auto cg = gp.encode(a, b);
        for (const auto& sub : subsets(n, d)) {
          c.expect(ev.decode_full(shares(ce, sub)) == msg, "evaluation full decode");
          c.expect(gp.decode_full(shares(cg, sub), nullptr, false) == msg, "generator full decode");
        }
        for (const auto& sub : subsets(n, k)) {
          c.expect(ev.decode_partial(shares(ce, sub), b) == a, "evaluation partial decode");
          c.expect(gp.decode_partial(shares(cg, sub), b) == a, "generator partial decode");
        }
      }
    }
  }
  for (const Field& g : {Field::prime(13), Field::binary(5), Field::fermat()}) {
    const PsrsGenPolyCode code(g, 12, 5, 8);
    for (int trial = 0; trial < 100; ++trial) {
      const auto cw = code.encode(oracle::random_symbols(g, 5, rng), oracle::random_symbols(g, 3, rng));
      std::vector<std::size_t> pos(12);
      for (std::size_t i = 0; i < 12; ++i) pos[i] = i;
      std::shuffle(pos.begin(), pos.end(), rng);
      pos.resize(8);
      const auto s = shares(cw, pos);
      c.expect(code.decode_full(s, nullptr, false) == code.decode_full_linear(s), "Forney vs linear");
    }
  }
}

// 10 ----------------------------------------------------------------------
void cross_path_equivalences(Checker& c) {
  std::mt19937_64 rng(10);
  const Field f = Field::prime(13);
  for (int trial = 0; trial < 50; ++trial) {
    // Partial reconstruction equals full reconstruction.
    {
      const std::size_t n = 4 + trial % 6, k = 1 + trial % (n - 1);
      const RbtCode rbt(f, n, k, trial % 2 == 0);
      const auto u = oracle::random_symbols(f, rbt.message_size(), rng);
      const auto cw = rbt.encode(u);
      auto sub = subsets(n, k)[static_cast<std::size_t>(trial) % subsets(n, k).size()];
      std::vector<NodeFragment> frags;
      std::vector<std::vector<Symbol>> rows;
      for (auto i : sub) {
        frags.push_back({i, cw.fragment(i)});
        rows.push_back(cw.fragment(i));
      }
      const auto plan = rbt.partial_plan(sub);
      c.expect(rbt.reconstruct_partial(plan, plan.extract(rows)) == rbt.reconstruct(frags),
               "rbt partial vs full");
    }
    {
      const std::size_t n = 5 + trial % 6, k = 1 + trial % (n - 2), d = k + trial % (n - k);
      const MbrCode sys(f, n, k, d, MbrBackend::psrs);
      const MbrCode vdm(f, n, k, d, MbrBackend::vandermonde);
      const auto all = subsets(n, k);
      const auto& sub = all[static_cast<std::size_t>(trial * 7) % all.size()];
      for (const MbrCode* code : {&sys, &vdm}) {
        const auto u = oracle::random_symbols(f, code->message_size(), rng);
        const Matrix cm = code->encode(u);
        const auto full = code->reconstruct(frags_of(cm, sub));
        std::vector<Scheme> schemes = {Scheme::lower, Scheme::upper};
        if (code == &vdm) schemes.push_back(Scheme::gong);
        for (auto s : schemes) {
          const auto plan = code->partial_plan(sub, s);
          c.expect(code->reconstruct_partial(plan, plan.extract(rows_of(cm, sub))) == full,
                   "mbr partial vs full");
        }
        if (code == &sys) {
          for (const auto& plan : code->timeshare_schedule(sub, 2))
            c.expect(code->reconstruct_partial(plan, plan.extract(rows_of(cm, sub))) == full,
                     "timeshare vs full");
        }
        // Generator-matrix encode equals per-column polynomial evaluation.
        c.expect(code->encode(u, nullptr, MbrCode::EncodeRoute::polynomial) == cm, "mbr encode routes");
      }
    }
    // Systematic encode equals the non-systematic congruence of the remapped
    // message S = U_L, T = U_R - U_L P^t.
    {
      const std::size_t n = 4 + trial % 7, k = 1 + trial % (n - 1);
      const RbtCode code(f, n, k, true);
      const auto u = oracle::random_symbols(f, code.message_size(), rng);
      const Matrix src = code.source_block(u);
      const Matrix p = code.parity_block();
      std::vector<std::size_t> left(k);
      for (std::size_t i = 0; i < k; ++i) left[i] = i;
      Matrix ul(f, k, k), ur(f, k, n - k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) ul(i, j) = src(i, j);
        for (std::size_t j = 0; j < n - k; ++j) ur(i, j) = src(i, k + j);
      }
      const Matrix t = sub(ur, oracle::matmul(ul, transpose(p)));
      Matrix m(f, n, n);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) m(i, j) = ul(i, j);
        for (std::size_t j = 0; j < n - k; ++j) {
          m(i, k + j) = t(i, j);
          m(k + j, i) = f.neg(t(i, j));
        }
      }
      c.expect(code.encode_message(SkewSymmetric(m)).matrix() == code.encode(u).matrix(),
               "systematic vs remapped");
    }
    // PSRS: generator matrix vs polynomial evaluation, and NTT vs naive.
    {
      const std::size_t n = 8u << (trial % 4), k = n / 4, d = n / 2;
      const auto code = PsrsEvalCode::on_roots_of_unity(n, k, d);
      const auto a = oracle::random_symbols(code.field(), k, rng);
      const auto b = oracle::random_symbols(code.field(), d - k, rng);
      std::vector<Symbol> msg(a);
      msg.insert(msg.end(), b.begin(), b.end());
      const auto naive = code.encode(a, b, nullptr, PsrsEvalCode::Route::naive);
      c.expect(mul(code.generator_matrix(), msg) == naive, "generator vs evaluation");
      c.expect(code.encode(a, b, nullptr, PsrsEvalCode::Route::ntt) == naive, "ntt vs naive");
      const auto poly = code.coding_polynomial(a, b);
      bool evals = true;
      for (std::size_t i = 0; i < n; ++i)
        evals = evals && oracle::eval(code.field(), poly, code.points()[i]) == naive[i];
      c.expect(evals, "coding polynomial evaluations");
    }
  }
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  void (*run)(Checker&);
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "example-exactness", 1, example_exactness},
      {2, "decision-tables", 1, decision_tables},
      {3, "exhaustive-round-trip", 60, exhaustive_round_trip},
      {4, "transfer-only-repair", 1, transfer_only_repair},
      {5, "download-accounting", 10, download_accounting},
      {6, "balance-formulas", 5, balance_formulas},
      {7, "field-size-advantage", 1, field_size_advantage},
      {8, "complexity-trends", 120, complexity_trends},
      {9, "psrs-mds", 60, psrs_mds},
      {10, "cross-path-equivalences", 30, cross_path_equivalences},
  };
  bool all = true;
  for (const auto& cr : criteria) {
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      cr.run(checker);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= cr.budget_seconds;
    const bool ok = error.empty() && checker.ok() && in_time;
    all = all && ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, cr.budget_seconds);
    std::cout << (ok ? "PASS " : "FAIL ") << cr.id << ' ' << cr.name << " (" << checker.checks()
              << " checks, " << timing << ")";
    if (!error.empty()) std::cout << " exception: " << error;
    if (!checker.ok()) std::cout << ' ' << checker.summary();
    if (!in_time) std::cout << " over budget";
    std::cout << '\n';
  }
  return all ? 0 : 1;
}
