#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "regen/regen.hpp"

using namespace regen;

namespace {

std::vector<Symbol> random_data(const Field& f, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, f.order() - 1);
  std::vector<Symbol> out(count);
  for (auto& s : out) s = static_cast<Symbol>(dist(rng));
  return out;
}

std::vector<std::size_t> first(std::size_t k) {
  std::vector<std::size_t> v(k);
  for (std::size_t i = 0; i < k; ++i) v[i] = i;
  return v;
}

void BM_RbtEncode(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const bool systematic = state.range(1) != 0;
  const RbtCode code(Field::binary(16), n, n / 2, systematic);
  const auto u = random_data(code.field(), code.message_size(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(code.encode(u));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(code.message_size()));
}
BENCHMARK(BM_RbtEncode)->ArgsProduct({{16, 32, 64}, {0, 1}});

void BM_RbtReconstruct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const bool partial = state.range(1) != 0;
  const RbtCode code(Field::binary(16), n, n / 2, true);
  const auto cw = code.encode(random_data(code.field(), code.message_size(), 2));
  // Connect to the parity half so the decoder does real work.
  std::vector<std::size_t> nodes;
  for (std::size_t i = n - code.k(); i < n; ++i) nodes.push_back(i);
  std::vector<NodeFragment> frags;
  std::vector<std::vector<Symbol>> rows;
  for (auto i : nodes) {
    frags.push_back({i, cw.fragment(i)});
    rows.push_back(cw.fragment(i));
  }
  const auto plan = code.partial_plan(nodes);
  const auto payloads = plan.extract(rows);
  for (auto _ : state) {
    if (partial) {
      benchmark::DoNotOptimize(code.reconstruct_partial(plan, payloads));
    } else {
      benchmark::DoNotOptimize(code.reconstruct(frags));
    }
  }
}
BENCHMARK(BM_RbtReconstruct)->ArgsProduct({{16, 32}, {0, 1}});

void BM_ShahEncode(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ShahCode code(Field::binary(16), n, n / 2);
  const auto u = random_data(code.field(), code.message_size(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(code.encode(u));
}
BENCHMARK(BM_ShahEncode)->Arg(16)->Arg(32);

void BM_MbrEncode(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto route = state.range(1) != 0 ? MbrCode::EncodeRoute::polynomial
                                         : MbrCode::EncodeRoute::matrix;
  const auto code = MbrCode::psrs_on_roots_of_unity(n, n / 4, n / 2);
  const auto u = random_data(code.field(), code.message_size(), 4);
  for (auto _ : state) benchmark::DoNotOptimize(code.encode(u, nullptr, route));
}
BENCHMARK(BM_MbrEncode)->ArgsProduct({{64, 128, 256}, {0, 1}});

void BM_MbrRepair(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto code = MbrCode::psrs_on_roots_of_unity(n, n / 4, n / 2);
  const Matrix cm = code.encode(random_data(code.field(), code.message_size(), 5));
  const std::size_t failed = 0;
  std::vector<HelperSymbol> responses;
  for (std::size_t h = 1; h <= code.d(); ++h) responses.push_back({h, code.helper_response(cm.row(h), failed)});
  for (auto _ : state) benchmark::DoNotOptimize(code.repair(responses, failed));
}
BENCHMARK(BM_MbrRepair)->Arg(64)->Arg(128);

void BM_MbrReconstruct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto scheme = static_cast<Scheme>(state.range(1));
  const auto code = MbrCode::psrs_on_roots_of_unity(n, n / 4, n / 2);
  const Matrix cm = code.encode(random_data(code.field(), code.message_size(), 6));
  std::vector<std::size_t> nodes;
  for (std::size_t i = n - code.k(); i < n; ++i) nodes.push_back(i);
  std::vector<NodeFragment> frags;
  std::vector<std::vector<Symbol>> rows;
  for (auto i : nodes) {
    frags.emplace_back(NodeFragment{i, {cm.row(i).begin(), cm.row(i).end()}});
    rows.push_back(frags.back().symbols);
  }
  if (scheme == Scheme::full) {
    for (auto _ : state) benchmark::DoNotOptimize(code.reconstruct(frags));
  } else {
    const auto plan = code.partial_plan(nodes, scheme);
    const auto payloads = plan.extract(rows);
    for (auto _ : state) benchmark::DoNotOptimize(code.reconstruct_partial(plan, payloads));
  }
}
BENCHMARK(BM_MbrReconstruct)
    ->ArgsProduct({{32, 64},
                   {static_cast<long>(Scheme::full), static_cast<long>(Scheme::lower),
                    static_cast<long>(Scheme::upper)}});

void BM_PsrsEncodeRoute(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto route = state.range(1) != 0 ? PsrsEvalCode::Route::ntt : PsrsEvalCode::Route::naive;
  const auto code = PsrsEvalCode::on_roots_of_unity(n, n / 4, n / 2);
  const auto a = random_data(code.field(), code.k(), 7);
  const auto b = random_data(code.field(), code.d() - code.k(), 8);
  for (auto _ : state) benchmark::DoNotOptimize(code.encode(a, b, nullptr, route));
}
BENCHMARK(BM_PsrsEncodeRoute)->ArgsProduct({{256, 1024, 4096}, {0, 1}});

void BM_FieldMul(benchmark::State& state) {
  const Field f = state.range(0) == 0 ? Field::binary(16) : Field::fermat();
  const auto xs = random_data(f, 4096, 9);
  for (auto _ : state) {
    Symbol acc = 1;
    for (auto x : xs) acc = f.mul(acc, x | 1);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 4096);
}
BENCHMARK(BM_FieldMul)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
