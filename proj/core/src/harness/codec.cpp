#include "regen/harness/codec.hpp"

#include <algorithm>
#include <string>

namespace regen::harness {

namespace {

constexpr std::string_view kCodecNames[] = {"rbt", "rbt-sys", "mbr-psrs", "mbr-vdm", "shah"};

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<NodeFragment> gather(const NodeTable& nodes, std::span<const std::size_t> ids) {
  std::vector<NodeFragment> out;
  for (auto id : ids) {
    if (id >= nodes.size()) raise(ErrorCode::IndexOutOfRange, "node out of range");
    if (!nodes[id]) {
      raise(ErrorCode::InsufficientSymbols, "node " + std::to_string(id + 1) + " has no fragment");
    }
    out.push_back({id, *nodes[id]});
  }
  return out;
}

std::vector<std::vector<Symbol>> rows_of(const std::vector<NodeFragment>& fragments) {
  std::vector<std::vector<Symbol>> out;
  for (const auto& f : fragments) out.push_back(f.symbols);
  return out;
}

void tally(ReconstructResult& result, const DownloadPlan& plan) {
  for (std::size_t j = 0; j < plan.nodes.size(); ++j) result.per_node[j] += plan.symbols_for(j);
  result.per_round.push_back(plan.total_symbols());
  result.symbols += plan.total_symbols();
}

}  // namespace

std::string_view to_string(CodecTag tag) { return kCodecNames[static_cast<std::size_t>(tag)]; }

CodecTag parse_codec(std::string_view text) {
  for (std::size_t i = 0; i < std::size(kCodecNames); ++i) {
    if (kCodecNames[i] == text) return static_cast<CodecTag>(i);
  }
  raise(ErrorCode::ParamsInvalid, "unknown codec '" + std::string(text) +
                                      "' (expected rbt, rbt-sys, mbr-psrs, mbr-vdm or shah)");
}

Codec Codec::make(const CodecParams& params) {
  CodecParams p = params;
  switch (p.tag) {
    case CodecTag::rbt:
    case CodecTag::rbt_sys:
    case CodecTag::shah: {
      if (p.d && *p.d + 1 != p.n) {
        raise(ErrorCode::ParamsInvalid, "repair-by-transfer codecs need d = n-1");
      }
      if (p.n < 2) raise(ErrorCode::ParamsInvalid, "need n >= 2");
      p.d = p.n - 1;
      if (p.tag == CodecTag::shah) return Codec(p, ShahCode(p.field, p.n, p.k));
      return Codec(p, RbtCode(p.field, p.n, p.k, p.tag == CodecTag::rbt_sys));
    }
    case CodecTag::mbr_psrs:
    case CodecTag::mbr_vdm: {
      if (!p.d) raise(ErrorCode::ParamsInvalid, "product-matrix codecs need --d");
      const auto backend = p.tag == CodecTag::mbr_psrs ? MbrBackend::psrs : MbrBackend::vandermonde;
      return Codec(p, MbrCode(p.field, p.n, p.k, *p.d, backend));
    }
  }
  raise(ErrorCode::ParamsInvalid, "unknown codec tag");
}

std::size_t Codec::alpha() const noexcept {
  return std::visit([](const auto& c) { return c.alpha(); }, code_);
}

std::size_t Codec::message_size() const noexcept {
  return std::visit([](const auto& c) { return c.message_size(); }, code_);
}

std::vector<std::vector<Symbol>> Codec::encode(std::span<const Symbol> data,
                                               OpCounter* counter) const {
  return std::visit(
      overloaded{
          [&](const RbtCode& c) {
            const auto cw = c.encode(data, counter);
            std::vector<std::vector<Symbol>> out;
            for (std::size_t i = 0; i < c.n(); ++i) out.push_back(cw.fragment(i));
            return out;
          },
          [&](const MbrCode& c) {
            const Matrix cm = c.encode(data, counter);
            std::vector<std::vector<Symbol>> out;
            for (std::size_t i = 0; i < c.n(); ++i) out.emplace_back(cm.row(i).begin(), cm.row(i).end());
            return out;
          },
          [&](const ShahCode& c) { return c.encode(data, counter); },
      },
      code_);
}

RepairResult Codec::repair(const NodeTable& nodes, std::size_t failed,
                           std::optional<std::vector<std::size_t>> helpers) const {
  if (nodes.size() != n()) raise(ErrorCode::DimensionMismatch, "node table must have n entries");
  if (failed >= n()) raise(ErrorCode::IndexOutOfRange, "failed node out of range");
  RepairResult result;

  if (!helpers) {
    helpers.emplace();
    for (std::size_t i = 0; i < n() && helpers->size() < d(); ++i) {
      if (i != failed && nodes[i]) helpers->push_back(i);
    }
    if (helpers->size() < d()) {
      raise(ErrorCode::MissingHelper, "only " + std::to_string(helpers->size()) +
                                          " alive helpers, need d=" + std::to_string(d()));
    }
  }
  for (auto h : *helpers) {
    if (h >= n()) raise(ErrorCode::IndexOutOfRange, "helper out of range");
    if (h != failed && !nodes[h]) {
      raise(ErrorCode::MissingHelper, "helper " + std::to_string(h + 1) + " has no fragment");
    }
  }

  std::vector<HelperSymbol> sent;
  std::visit(overloaded{
                 [&](const MbrCode& c) {
                   for (auto h : *helpers) {
                     if (h == failed) continue;  // rejected by MbrCode::repair below
                     sent.push_back({h, c.helper_response(*nodes[h], failed, &result.ops)});
                   }
                   if (sent.size() != helpers->size()) {
                     raise(ErrorCode::DuplicateHelper, "failed node listed as helper");
                   }
                   result.fragment = c.repair(sent, failed, &result.ops);
                 },
                 [&](const auto& c) {
                   for (auto h : *helpers) {
                     if (h == failed) raise(ErrorCode::DuplicateHelper, "failed node listed as helper");
                     sent.push_back({h, RbtCode::helper_symbol(*nodes[h], h, failed)});
                   }
                   result.fragment = std::decay_t<decltype(c)>::repair(sent, failed, c.n());
                 },
             },
             code_);
  result.helpers = *helpers;
  result.symbols = sent.size();
  return result;
}

ReconstructResult Codec::reconstruct(const NodeTable& nodes, std::span<const std::size_t> connected,
                                     Scheme scheme, std::size_t rounds) const {
  if (nodes.size() != n()) raise(ErrorCode::DimensionMismatch, "node table must have n entries");
  if (connected.size() < k()) {
    raise(ErrorCode::InsufficientSymbols, "reconstruction needs k=" + std::to_string(k()) +
                                              " nodes, got " + std::to_string(connected.size()));
  }
  if (connected.size() > k()) {
    raise(ErrorCode::WrongFragmentCount, "reconstruction takes exactly k=" + std::to_string(k()) +
                                             " nodes, got " + std::to_string(connected.size()));
  }
  check_distinct_nodes(connected, n());
  const auto fragments = gather(nodes, connected);

  ReconstructResult result;
  result.per_node.assign(k(), 0);
  auto full_tally = [&] {
    for (auto& v : result.per_node) v = alpha();
    result.symbols = k() * alpha();
    result.per_round.push_back(result.symbols);
  };
  auto mismatch = [&](std::string_view what) {
    raise(ErrorCode::SchemeBackendMismatch, "scheme " + std::string(to_string(scheme)) +
                                                " is not available for codec " +
                                                std::string(to_string(tag())) + ": " +
                                                std::string(what));
  };

  std::visit(
      overloaded{
          [&](const RbtCode& c) {
            if (scheme == Scheme::full) {
              full_tally();
              result.data = c.reconstruct(fragments, &result.ops);
            } else if (scheme == Scheme::partial) {
              const auto plan = c.partial_plan(connected);
              tally(result, plan);
              result.data = c.reconstruct_partial(plan, plan.extract(rows_of(fragments)), &result.ops);
            } else {
              mismatch("use full or partial");
            }
          },
          [&](const MbrCode& c) {
            if (scheme == Scheme::full) {
              full_tally();
              result.data = c.reconstruct(fragments, &result.ops);
              return;
            }
            if (scheme == Scheme::timeshare) {
              if (rounds == 0) raise(ErrorCode::ParamsInvalid, "timeshare needs at least one round");
              for (const auto& plan : c.timeshare_schedule(connected, rounds)) {
                tally(result, plan);
                auto data = c.reconstruct_partial(plan, plan.extract(rows_of(fragments)), &result.ops);
                if (!result.data.empty() && data != result.data) {
                  raise(ErrorCode::ReconstructMismatch, "timeshare rounds disagree");
                }
                result.data = std::move(data);
              }
              return;
            }
            const Scheme s = scheme == Scheme::partial ? Scheme::lower : scheme;
            const auto plan = c.partial_plan(connected, s);
            tally(result, plan);
            result.data = c.reconstruct_partial(plan, plan.extract(rows_of(fragments)), &result.ops);
          },
          [&](const ShahCode& c) {
            if (scheme == Scheme::full) {
              full_tally();
            } else if (scheme == Scheme::partial) {
              // Each packet is fetched once, from the first connected node holding it.
              std::vector<bool> sent(c.packet_count(), false);
              std::size_t total = 0;
              for (std::size_t j = 0; j < k(); ++j) {
                for (std::size_t other = 0; other < n(); ++other) {
                  if (other == connected[j]) continue;
                  const std::size_t e = c.packet_index(connected[j], other);
                  if (!sent[e]) {
                    sent[e] = true;
                    ++result.per_node[j];
                    ++total;
                  }
                }
              }
              result.symbols = total;
              result.per_round.push_back(total);
            } else {
              mismatch("use full or partial");
            }
            result.data = c.reconstruct(fragments, &result.ops);
          },
      },
      code_);
  return result;
}

}  // namespace regen::harness
