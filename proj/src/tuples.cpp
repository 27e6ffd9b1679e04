#include "nsg/tuples.hpp"

#include "nsg/errors.hpp"

namespace nsg {

TupleSpace::TupleSpace(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  for (int s : sizes_) {
    if (s < 1) throw ValidationError("tuple space with empty dimension");
    if (total_ > UINT64_MAX / static_cast<std::uint64_t>(s))
      throw BudgetError("tuple space size overflows 64 bits");
    total_ *= static_cast<std::uint64_t>(s);
  }
}

bool TupleSpace::contains(std::span<const int> t) const {
  if (t.size() != sizes_.size()) return false;
  for (size_t i = 0; i < t.size(); ++i)
    if (t[i] < 0 || t[i] >= sizes_[i]) return false;
  return true;
}

std::uint64_t TupleSpace::index_of(std::span<const int> t) const {
  std::uint64_t idx = 0;
  for (size_t i = 0; i < sizes_.size(); ++i)
    idx = idx * sizes_[i] + static_cast<std::uint64_t>(t[i]);
  return idx;
}

std::vector<int> TupleSpace::tuple_of(std::uint64_t index) const {
  std::vector<int> t(sizes_.size());
  for (size_t i = sizes_.size(); i-- > 0;) {
    t[i] = static_cast<int>(index % sizes_[i]);
    index /= sizes_[i];
  }
  return t;
}

bool TupleSpace::next(std::vector<int>& t) const {
  for (size_t i = sizes_.size(); i-- > 0;) {
    if (++t[i] < sizes_[i]) return true;
    t[i] = 0;
  }
  return false;
}

}  // namespace nsg
