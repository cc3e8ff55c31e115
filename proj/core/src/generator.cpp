#include "edgefair/generator.hpp"

#include <algorithm>

#include "edgefair/errors.hpp"

namespace edgefair {

std::uint64_t Rng::next() {
  // SplitMix64 (Steele, Lea, Flood 2014); fixed here so outputs never depend
  // on the standard library.
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) fail(Errc::InvalidArgument, "Rng::below(0)");
  std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

long long Rng::range(long long lo, long long hi) {
  if (lo > hi) fail(Errc::InvalidArgument, "Rng::range: lo > hi");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(below(span));
}

Instance generate_instance(const GenOptions& options) {
  const int n = options.n;
  const int m = options.m;
  if (n < 1) fail(Errc::EmptyAgentSet, "generator needs n >= 1");
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 0 || m > max_edges)
    fail(Errc::InvalidArgument, "cannot place " + std::to_string(m) + " edges on " +
                                    std::to_string(n) + " agents");

  long long lo = options.vmin, hi = options.vmax;
  if (options.kind == GenKind::Goods) lo = std::max(lo, 0ll);
  if (options.kind == GenKind::Chores) hi = std::min(hi, 0ll);
  if (lo > hi) fail(Errc::InvalidArgument, "empty value range after kind clamping");

  Rng rng(options.seed);

  // Deterministic Fisher-Yates over all vertex pairs, take the first m,
  // then restore canonical (u, v)-sorted edge ids.
  std::vector<std::pair<AgentId, AgentId>> pairs;
  pairs.reserve(static_cast<size_t>(max_edges));
  for (AgentId u = 0; u < n; ++u) {
    for (AgentId v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  for (size_t i = pairs.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(rng.below(i));
    std::swap(pairs[i - 1], pairs[j]);
  }
  pairs.resize(static_cast<size_t>(m));
  std::sort(pairs.begin(), pairs.end());

  std::vector<ValueEntry> values;
  values.reserve(static_cast<size_t>(2 * m));
  for (size_t k = 0; k < pairs.size(); ++k) {
    for (AgentId a : {pairs[k].first, pairs[k].second}) {
      long long v = rng.range(lo, hi);
      if (v != 0) values.push_back({a, static_cast<EdgeId>(k), Value(v)});
    }
  }
  return build_instance(n, pairs, values);
}

}  // namespace edgefair
