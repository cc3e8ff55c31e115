#include "edgefair/valuation.hpp"

#include "edgefair/errors.hpp"

namespace edgefair {

AdditiveValuation::AdditiveValuation(int n, int m, const std::vector<Entry>& entries)
    : n_(n), m_(m), values_(static_cast<size_t>(n) * static_cast<size_t>(m)),
      stored_(static_cast<size_t>(n) * static_cast<size_t>(m), false) {
  for (const Entry& e : entries) {
    if (e.agent < 0 || e.agent >= n || e.edge < 0 || e.edge >= m)
      fail(Errc::InvalidArgument, "valuation entry out of range");
    size_t idx = static_cast<size_t>(e.agent) * static_cast<size_t>(m_) + static_cast<size_t>(e.edge);
    if (stored_[idx]) fail(Errc::InvalidArgument, "duplicate valuation entry");
    values_[idx] = e.value;
    stored_[idx] = true;
  }
}

Value AdditiveValuation::value(AgentId agent, std::span<const EdgeId> bundle) const {
  Value total;
  for (EdgeId e : bundle) {
    total += values_[static_cast<size_t>(agent) * static_cast<size_t>(m_) + static_cast<size_t>(e)];
  }
  return total;
}

SignClass AdditiveValuation::sign(AgentId agent, EdgeId edge) const {
  const Value& v = values_[static_cast<size_t>(agent) * static_cast<size_t>(m_) + static_cast<size_t>(edge)];
  if (v.is_positive()) return SignClass::Good;
  if (v.is_negative()) return SignClass::Chore;
  return SignClass::Dummy;
}

const Value& AdditiveValuation::item_value(AgentId agent, EdgeId edge) const {
  return values_[static_cast<size_t>(agent) * static_cast<size_t>(m_) + static_cast<size_t>(edge)];
}

std::vector<AdditiveValuation::Entry> AdditiveValuation::entries() const {
  std::vector<Entry> out;
  for (AgentId a = 0; a < n_; ++a) {
    for (EdgeId e = 0; e < m_; ++e) {
      size_t idx = static_cast<size_t>(a) * static_cast<size_t>(m_) + static_cast<size_t>(e);
      if (stored_[idx]) out.push_back({a, e, values_[idx]});
    }
  }
  return out;
}

}  // namespace edgefair
