#include "edgefair/allocation.hpp"

#include <algorithm>

namespace edgefair {

bool Allocation::is_total() const {
  return std::find(owner_.begin(), owner_.end(), kFree) == owner_.end();
}

std::vector<EdgeId> Allocation::unallocated() const {
  std::vector<EdgeId> r;
  for (size_t e = 0; e < owner_.size(); ++e) {
    if (owner_[e] == kFree) r.push_back(static_cast<EdgeId>(e));
  }
  return r;
}

std::vector<std::vector<EdgeId>> Allocation::bundles(int agent_count) const {
  std::vector<std::vector<EdgeId>> out(static_cast<size_t>(agent_count));
  for (size_t e = 0; e < owner_.size(); ++e) {
    if (owner_[e] != kFree) out[static_cast<size_t>(owner_[e])].push_back(static_cast<EdgeId>(e));
  }
  return out;
}

std::vector<EdgeId> Allocation::bundle_of(AgentId a) const {
  std::vector<EdgeId> out;
  for (size_t e = 0; e < owner_.size(); ++e) {
    if (owner_[e] == a) out.push_back(static_cast<EdgeId>(e));
  }
  return out;
}

bool Allocation::is_orientation(const Instance& instance) const {
  for (size_t e = 0; e < owner_.size(); ++e) {
    if (owner_[e] != kFree && !instance.edge(static_cast<EdgeId>(e)).incident(owner_[e]))
      return false;
  }
  return true;
}

}  // namespace edgefair
