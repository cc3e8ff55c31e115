#include "edgefair/oracle.hpp"

#include <atomic>
#include <limits>
#include <thread>

#include "edgefair/errors.hpp"

namespace edgefair {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > kSaturated / base) return kSaturated;
    r *= base;
  }
  return r;
}

// Additive-valuation leaf predicate, equivalent to passes(): per envious
// pair, the binding hypothetical removal is the minimum eligible item value
// on the envied side and the maximum on the own side. The equivalence to the
// contract-path checker is asserted by unit tests.
class AdditiveLeafCheck {
 public:
  AdditiveLeafCheck(const Instance& inst, const AdditiveValuation& val, Notion notion)
      : inst_(inst), val_(val), notion_(notion), n_(inst.agent_count()),
        r1_(condition1_rule(notion)), r2_(condition2_rule(notion)) {}

  bool passes(const std::vector<std::vector<EdgeId>>& bundles,
              const std::vector<std::vector<Value>>& vals) const {
    for (AgentId i = 0; i < n_; ++i) {
      const Value& vi = vals[static_cast<size_t>(i)][static_cast<size_t>(i)];
      for (AgentId j = 0; j < n_; ++j) {
        if (i == j) continue;
        const Value& vj = vals[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (!(vj > vi)) continue;
        if (notion_ == Notion::Ef) return false;

        if (r1_ != RemovalRule::None) {
          bool have = false;
          Value best;  // min eligible v_i(e) over X_j
          for (EdgeId e : bundles[static_cast<size_t>(j)]) {
            const Value& w = val_.item_value(i, e);
            bool eligible = r1_ == RemovalRule::NonStrict ? !w.is_negative() : w.is_positive();
            if (eligible && (!have || w < best)) {
              best = w;
              have = true;
            }
          }
          if (have && vi < vj - best) return false;
        }
        if (r2_ != RemovalRule::None) {
          bool have = false;
          Value best;  // max eligible v_i(e) over X_i
          for (EdgeId e : bundles[static_cast<size_t>(i)]) {
            const Value& w = val_.item_value(i, e);
            bool eligible = r2_ == RemovalRule::NonStrict ? !w.is_positive() : w.is_negative();
            if (eligible && (!have || w > best)) {
              best = w;
              have = true;
            }
          }
          if (have && vi - best < vj) return false;
        }
      }
    }
    return true;
  }

 private:
  const Instance& inst_;
  const AdditiveValuation& val_;
  Notion notion_;
  int n_;
  RemovalRule r1_, r2_;
};

struct SearchResult {
  std::uint64_t count = 0;
  std::uint64_t witness_index = kSaturated;
  Allocation witness;
};

class Enumerator {
 public:
  Enumerator(const Instance& inst, const SearchSpec& spec, bool count_all)
      : inst_(inst), spec_(spec), count_all_(count_all), n_(inst.agent_count()),
        m_(inst.edge_count()),
        additive_(dynamic_cast<const AdditiveValuation*>(&inst.valuation())),
        leaf_(additive_ ? std::make_unique<AdditiveLeafCheck>(inst, *additive_, spec.notion)
                        : nullptr) {
    // Prefix pruning is only sound where proven: chores instances searched
    // for the chores-side notions.
    prune_ = inst.is_chores() &&
             (spec.notion == Notion::EfxC0 || spec.notion == Notion::EfxCMinus);
    radix_ = spec.mode == SearchMode::Allocations ? static_cast<std::uint64_t>(n_) : 2;
    place_.assign(static_cast<size_t>(m_) + 1, 1);
    for (int e = m_ - 1; e >= 0; --e) {
      place_[static_cast<size_t>(e)] = saturating_pow(radix_, m_ - e);
    }
  }

  // Enumerates all states whose first digit lies in [digit_lo, digit_hi).
  SearchResult run(std::uint64_t digit_lo, std::uint64_t digit_hi,
                   const std::atomic<std::uint64_t>* best_so_far) {
    SearchResult result;
    State st(n_, m_);
    if (m_ == 0) {
      visit_leaf(st, 0, result);
      return result;
    }
    for (std::uint64_t d = digit_lo; d < digit_hi; ++d) {
      if (best_so_far && !count_all_ &&
          d * place_[1] >= best_so_far->load(std::memory_order_relaxed))
        break;
      descend(st, 0, d, d * place_[1], result, best_so_far);
      if (!count_all_ && result.witness_index != kSaturated) break;
    }
    return result;
  }

  std::uint64_t radix() const { return radix_; }

 private:
  struct State {
    State(int n, int m)
        : bundles(static_cast<size_t>(n)), chores_held(static_cast<size_t>(n), 0),
          vals(static_cast<size_t>(n), std::vector<Value>(static_cast<size_t>(n))) {
      owners.assign(static_cast<size_t>(m), -1);
    }
    std::vector<std::vector<EdgeId>> bundles;
    std::vector<int> chores_held;
    std::vector<std::vector<Value>> vals;  // vals[i][j] = v_i(X_j), additive path only
    std::vector<int> owners;
  };

  AgentId owner_for_digit(EdgeId e, std::uint64_t digit) const {
    if (spec_.mode == SearchMode::Allocations) return static_cast<AgentId>(digit);
    const Edge& ed = inst_.edge(e);
    return digit == 0 ? ed.u : ed.v;
  }

  bool assign(State& st, EdgeId e, AgentId a) {
    st.owners[static_cast<size_t>(e)] = a;
    st.bundles[static_cast<size_t>(a)].push_back(e);
    bool chore = inst_.sign(a, e) == SignClass::Chore;
    if (chore) st.chores_held[static_cast<size_t>(a)]++;
    if (additive_) {
      const Edge& ed = inst_.edge(e);
      for (AgentId w : {ed.u, ed.v}) {
        st.vals[static_cast<size_t>(w)][static_cast<size_t>(a)] += additive_->item_value(w, e);
      }
    }
    if (prune_) {
      const auto& bundle = st.bundles[static_cast<size_t>(a)];
      if (spec_.notion == Notion::EfxC0 && bundle.size() >= 2 &&
          st.chores_held[static_cast<size_t>(a)] >= 1)
        return false;
      if (spec_.notion == Notion::EfxCMinus && st.chores_held[static_cast<size_t>(a)] >= 2)
        return false;
    }
    return true;
  }

  void unassign(State& st, EdgeId e, AgentId a) {
    st.owners[static_cast<size_t>(e)] = -1;
    st.bundles[static_cast<size_t>(a)].pop_back();
    if (inst_.sign(a, e) == SignClass::Chore) st.chores_held[static_cast<size_t>(a)]--;
    if (additive_) {
      const Edge& ed = inst_.edge(e);
      for (AgentId w : {ed.u, ed.v}) {
        st.vals[static_cast<size_t>(w)][static_cast<size_t>(a)] -= additive_->item_value(w, e);
      }
    }
  }

  void visit_leaf(State& st, std::uint64_t index, SearchResult& result) {
    bool ok;
    if (leaf_) {
      ok = leaf_->passes(st.bundles, st.vals);
    } else {
      Allocation alloc(m_);
      for (EdgeId e = 0; e < m_; ++e) alloc.assign(e, st.owners[static_cast<size_t>(e)]);
      ok = passes(inst_, alloc, spec_.notion);
    }
    if (!ok) return;
    result.count++;
    if (result.witness_index == kSaturated) {
      result.witness_index = index;
      result.witness = Allocation(m_);
      for (EdgeId e = 0; e < m_; ++e) result.witness.assign(e, st.owners[static_cast<size_t>(e)]);
    }
  }

  void descend(State& st, EdgeId e, std::uint64_t digit, std::uint64_t base, SearchResult& result,
               const std::atomic<std::uint64_t>* best_so_far) {
    AgentId a = owner_for_digit(e, digit);
    bool viable = assign(st, e, a);
    if (viable) {
      if (e + 1 == m_) {
        visit_leaf(st, base, result);
      } else {
        for (std::uint64_t d = 0; d < radix_; ++d) {
          if (!count_all_ && result.witness_index != kSaturated) break;
          std::uint64_t child_base = base + d * place_[static_cast<size_t>(e) + 2];
          if (best_so_far && !count_all_ &&
              child_base >= best_so_far->load(std::memory_order_relaxed))
            break;
          descend(st, e + 1, d, child_base, result, best_so_far);
        }
      }
    }
    unassign(st, e, a);
  }

  const Instance& inst_;
  SearchSpec spec_;
  bool count_all_;
  int n_, m_;
  const AdditiveValuation* additive_;
  std::unique_ptr<AdditiveLeafCheck> leaf_;
  bool prune_ = false;
  std::uint64_t radix_;
  std::vector<std::uint64_t> place_;  // place_[e] = radix^(m-e), saturating
};

SearchResult search(const Instance& inst, const SearchSpec& spec, bool count_all) {
  std::uint64_t states = oracle_state_count(inst, spec.mode);
  if (states > spec.budget)
    fail(Errc::BudgetExceeded, "state space " +
                                   (states == kSaturated ? std::string(">= 2^64")
                                                         : std::to_string(states)) +
                                   " exceeds budget " + std::to_string(spec.budget));

  Enumerator enumerator(inst, spec, count_all);
  std::uint64_t radix = inst.edge_count() == 0 ? 1 : enumerator.radix();
  int jobs = std::max(1, spec.jobs);
  if (jobs == 1 || radix == 1) {
    return enumerator.run(0, radix, nullptr);
  }

  // Parallel over the first digit; the merge is deterministic (min state
  // index wins), so results are independent of thread timing.
  std::atomic<std::uint64_t> best(kSaturated);
  std::vector<SearchResult> partial(static_cast<size_t>(radix));
  std::atomic<std::uint64_t> next_digit(0);
  auto worker = [&]() {
    for (;;) {
      std::uint64_t d = next_digit.fetch_add(1);
      if (d >= radix) return;
      Enumerator local(inst, spec, count_all);
      partial[static_cast<size_t>(d)] = local.run(d, d + 1, count_all ? nullptr : &best);
      std::uint64_t idx = partial[static_cast<size_t>(d)].witness_index;
      std::uint64_t cur = best.load();
      while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
      }
    }
  };
  std::vector<std::thread> threads;
  int actual = std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), radix);
  threads.reserve(static_cast<size_t>(actual));
  for (int t = 0; t < actual; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  SearchResult merged;
  for (const SearchResult& p : partial) {
    merged.count += p.count;
    if (p.witness_index < merged.witness_index) {
      merged.witness_index = p.witness_index;
      merged.witness = p.witness;
    }
  }
  return merged;
}

}  // namespace

std::uint64_t oracle_state_count(const Instance& instance, SearchMode mode) {
  std::uint64_t base = mode == SearchMode::Allocations
                           ? static_cast<std::uint64_t>(instance.agent_count())
                           : 2;
  return saturating_pow(base, instance.edge_count());
}

DecideResult oracle_exists(const Instance& instance, const SearchSpec& spec) {
  SearchResult r = search(instance, spec, /*count_all=*/false);
  DecideResult out;
  out.exists = r.witness_index != kSaturated;
  if (out.exists) out.witness = r.witness;
  return out;
}

std::uint64_t oracle_count(const Instance& instance, const SearchSpec& spec) {
  return search(instance, spec, /*count_all=*/true).count;
}

}  // namespace edgefair
