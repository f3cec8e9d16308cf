#pragma once

#include <atomic>
#include <cstdint>

namespace molfan::diagnostics {

/// Process-wide counters of expensive constructions, used by benchmarks to show how much work a
/// workflow performs independently of the number of objectives.
struct Counters
{
  std::atomic<std::uint64_t> polygon_builds{0};
  std::atomic<std::uint64_t> fan_builds{0};
  std::atomic<std::uint64_t> simplex_solves{0};
};

inline Counters & counters() noexcept
{
  static Counters instance;
  return instance;
}

inline void reset() noexcept
{
  counters().polygon_builds = 0;
  counters().fan_builds = 0;
  counters().simplex_solves = 0;
}

}  // namespace molfan::diagnostics
