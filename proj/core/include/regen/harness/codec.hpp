#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "regen/counter.hpp"
#include "regen/gf.hpp"
#include "regen/mbr.hpp"
#include "regen/plan.hpp"
#include "regen/rbt.hpp"
#include "regen/shah.hpp"

namespace regen::harness {

/// Codec identity as stored in fragment headers.
enum class CodecTag : std::uint8_t { rbt = 0, rbt_sys = 1, mbr_psrs = 2, mbr_vdm = 3, shah = 4 };

std::string_view to_string(CodecTag tag);
CodecTag parse_codec(std::string_view text);

struct CodecParams {
  CodecTag tag = CodecTag::rbt;
  Field field = Field::prime(7);
  std::size_t n = 0;
  std::size_t k = 0;
  /// Repair degree. Ignored (forced to n-1) for the transfer codecs when
  /// absent; must be given for the product-matrix codecs.
  std::optional<std::size_t> d;
};

/// The stored rows of a cluster, indexed by node. Failed nodes hold nothing.
using NodeTable = std::vector<std::optional<std::vector<Symbol>>>;

struct RepairResult {
  std::vector<Symbol> fragment;
  std::vector<std::size_t> helpers;
  std::size_t symbols = 0;
  OpCounter ops;
};

struct ReconstructResult {
  std::vector<Symbol> data;
  /// Symbols sent by each connected node, summed over rounds.
  std::vector<std::size_t> per_node;
  /// Symbols downloaded in each round (a single entry except for timeshare).
  std::vector<std::size_t> per_round;
  std::size_t symbols = 0;
  OpCounter ops;
};

/// Uniform front end over the three code families.
class Codec {
 public:
  static Codec make(const CodecParams& params);

  const CodecParams& params() const noexcept { return params_; }
  CodecTag tag() const noexcept { return params_.tag; }
  const Field& field() const noexcept { return params_.field; }
  std::size_t n() const noexcept { return params_.n; }
  std::size_t k() const noexcept { return params_.k; }
  std::size_t d() const noexcept { return *params_.d; }
  std::size_t alpha() const noexcept;
  std::size_t message_size() const noexcept;

  /// One fragment per node.
  std::vector<std::vector<Symbol>> encode(std::span<const Symbol> data,
                                          OpCounter* counter = nullptr) const;

  /// Rebuilds node `failed`. Transfer codecs use every other node; the
  /// product-matrix codecs use `helpers` or else the first d alive nodes.
  RepairResult repair(const NodeTable& nodes, std::size_t failed,
                      std::optional<std::vector<std::size_t>> helpers = {}) const;

  /// Downloads from `connected` under `scheme`. `rounds` only matters for
  /// timeshare, where every round is decoded and must agree.
  ReconstructResult reconstruct(const NodeTable& nodes, std::span<const std::size_t> connected,
                                Scheme scheme = Scheme::full, std::size_t rounds = 2) const;

  const std::variant<RbtCode, MbrCode, ShahCode>& code() const noexcept { return code_; }

 private:
  Codec(CodecParams params, std::variant<RbtCode, MbrCode, ShahCode> code)
      : params_(std::move(params)), code_(std::move(code)) {}

  CodecParams params_;
  std::variant<RbtCode, MbrCode, ShahCode> code_;
};

}  // namespace regen::harness
