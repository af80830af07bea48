#include "regen/plan.hpp"

#include <string>

namespace regen {

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::full: return "full";
    case Scheme::partial: return "partial";
    case Scheme::lower: return "lower";
    case Scheme::upper: return "upper";
    case Scheme::gong: return "gong";
    case Scheme::timeshare: return "timeshare";
  }
  return "?";
}

Scheme parse_scheme(std::string_view text) {
  for (auto s : {Scheme::full, Scheme::partial, Scheme::lower, Scheme::upper, Scheme::gong,
                 Scheme::timeshare}) {
    if (to_string(s) == text) return s;
  }
  raise(ErrorCode::ParamsInvalid, "unknown scheme '" + std::string(text) + "'");
}

std::size_t DownloadPlan::total_symbols() const noexcept {
  std::size_t total = 0;
  for (const auto& p : positions) total += p.size();
  return total;
}

std::vector<std::vector<Symbol>> DownloadPlan::extract(
    std::span<const std::vector<Symbol>> fragments) const {
  if (fragments.size() != nodes.size()) {
    raise(ErrorCode::PlanPayloadMismatch, "expected one fragment per connected node");
  }
  std::vector<std::vector<Symbol>> out(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    for (auto p : positions[j]) {
      if (p >= fragments[j].size()) {
        raise(ErrorCode::PlanPayloadMismatch, "fragment too short for planned position");
      }
      out[j].push_back(fragments[j][p]);
    }
  }
  return out;
}

void check_payloads(const DownloadPlan& plan, std::span<const std::vector<Symbol>> payloads) {
  if (payloads.size() != plan.nodes.size()) {
    raise(ErrorCode::PlanPayloadMismatch, "payload count " + std::to_string(payloads.size()) +
                                              " != connected nodes " +
                                              std::to_string(plan.nodes.size()));
  }
  for (std::size_t j = 0; j < payloads.size(); ++j) {
    if (payloads[j].size() != plan.positions[j].size()) {
      raise(ErrorCode::PlanPayloadMismatch,
            "node " + std::to_string(plan.nodes[j]) + " sent " +
                std::to_string(payloads[j].size()) + " symbols, plan expects " +
                std::to_string(plan.positions[j].size()));
    }
  }
}

void check_distinct_nodes(std::span<const std::size_t> nodes, std::size_t n) {
  std::vector<bool> seen(n, false);
  for (auto v : nodes) {
    if (v >= n) raise(ErrorCode::IndexOutOfRange, "node " + std::to_string(v) + " out of range");
    if (seen[v]) raise(ErrorCode::DuplicateIndex, "node " + std::to_string(v) + " listed twice");
    seen[v] = true;
  }
}

std::vector<Symbol> transfer_repair(std::span<const HelperSymbol> helpers, std::size_t failed,
                                    std::size_t n) {
  if (failed >= n) raise(ErrorCode::IndexOutOfRange, "failed node out of range");
  if (helpers.size() != n - 1) {
    raise(ErrorCode::WrongHelperCount, "repair needs all n-1=" + std::to_string(n - 1) +
                                           " surviving nodes, got " +
                                           std::to_string(helpers.size()));
  }
  std::vector<Symbol> out(n - 1, 0);
  std::vector<bool> seen(n, false);
  for (const auto& h : helpers) {
    if (h.helper >= n) raise(ErrorCode::IndexOutOfRange, "helper out of range");
    if (h.helper == failed) raise(ErrorCode::DuplicateHelper, "failed node listed as helper");
    if (seen[h.helper]) raise(ErrorCode::DuplicateHelper, "helper listed twice");
    seen[h.helper] = true;
    out[stored_position(failed, h.helper)] = h.value;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (i != failed && !seen[i]) {
      raise(ErrorCode::MissingHelper, "node " + std::to_string(i) + " did not contribute");
    }
  }
  return out;
}

}  // namespace regen
