#pragma once

#include <cstdint>

namespace regen {

/// Tally of field operations performed on behalf of one caller.
///
/// Counters are never global: every instrumented routine takes an optional
/// pointer and only touches the instance it was handed, so independent
/// trials can run concurrently with their own tallies.
struct OpCounter {
  std::uint64_t multiplications = 0;
  std::uint64_t additions = 0;

  void mul(std::uint64_t count = 1) noexcept { multiplications += count; }
  void add(std::uint64_t count = 1) noexcept { additions += count; }

  OpCounter& operator+=(const OpCounter& other) noexcept {
    multiplications += other.multiplications;
    additions += other.additions;
    return *this;
  }

  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

inline void count_mul(OpCounter* counter, std::uint64_t count = 1) noexcept {
  if (counter != nullptr) counter->mul(count);
}

inline void count_add(OpCounter* counter, std::uint64_t count = 1) noexcept {
  if (counter != nullptr) counter->add(count);
}

}  // namespace regen
