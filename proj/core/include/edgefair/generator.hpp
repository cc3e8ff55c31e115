#pragma once

#include <cstdint>

#include "edgefair/instance.hpp"

namespace edgefair {

/// SplitMix64 stream. Self-contained so that generated instances are
/// byte-identical across platforms and standard-library versions (the
/// distributions in <random> are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, bound), bound >= 1, rejection-sampled (no modulo bias).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform integer in [lo, hi] inclusive.
  long long range(long long lo, long long hi);

 private:
  std::uint64_t state_;
};

enum class GenKind { Goods, Chores, Mixed };

struct GenOptions {
  GenKind kind = GenKind::Mixed;
  int n = 4;
  int m = 4;
  std::uint64_t seed = 0;
  long long vmin = -5;  // clamped to >= 0 for goods
  long long vmax = 5;   // clamped to <= 0 for chores
};

/// Reproducible random instance: uniform random simple graph with exactly m
/// edges (canonical edge order), values uniform integers in the clamped
/// range, independently per (endpoint, edge) pair.
Instance generate_instance(const GenOptions& options);

}  // namespace edgefair
