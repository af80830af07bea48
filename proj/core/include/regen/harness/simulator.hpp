#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regen/counter.hpp"
#include "regen/harness/codec.hpp"

namespace regen::harness {

enum class EventKind { encode, fail, repair, reconstruct };

std::string_view to_string(EventKind kind);

struct EventRecord {
  std::size_t index = 0;  // position among executed events
  std::size_t line = 0;   // 1-based script line
  EventKind kind = EventKind::encode;
  std::optional<Scheme> scheme;
  std::size_t symbols = 0;
  OpCounter ops;
  /// (node, symbols sent) for every node that transmitted; node is 0-based.
  std::vector<std::pair<std::size_t, std::size_t>> sent_by;
};

struct CostReport {
  std::vector<EventRecord> events;
  /// Total symbols transmitted per node over the whole run.
  std::vector<std::size_t> per_node;

  std::size_t total_symbols() const noexcept;
  OpCounter total_ops() const noexcept;
};

struct ClusterState {
  std::optional<Codec> codec;
  std::vector<Symbol> message;
  std::vector<std::vector<Symbol>> codeword;  // fragments as encoded
  NodeTable nodes;
  std::uint64_t seed = 0;

  std::size_t alive() const noexcept;
};

struct SimResult {
  CostReport report;
  ClusterState state;
};

/// Runs a line-oriented scenario:
///
///   codec <rbt|rbt-sys|mbr-psrs|mbr-vdm|shah> n=6 k=3 [d=4] field=prime:7 [seed=1]
///   encode
///   fail 3
///   repair 3 [1,2,4,5]
///   reconstruct 1,2,4 [full|partial|lower|upper|gong|timeshare]
///
/// Node numbers are 1-based and '#' starts a comment. Every repaired
/// fragment and every reconstructed message is checked against the
/// original; a disagreement raises ReconstructMismatch. Failures are
/// re-raised with the event index and line prepended.
SimResult sim_run(std::string_view script);
SimResult sim_run_file(const std::filesystem::path& path);

/// One CSV row per event: index,line,event,scheme,symbols,multiplications,additions
void write_report_csv(std::ostream& out, const CostReport& report);

}  // namespace regen::harness
