#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace nsg {

/// Mixed-radix index space over integer tuples. Enumeration is row-major
/// with the FIRST coordinate slowest; this is the one canonical ordering
/// shared by the game model, the LP builders, and the file formats, so
/// variable indices are reproducible everywhere.
class TupleSpace {
 public:
  TupleSpace() = default;
  explicit TupleSpace(std::vector<int> sizes);

  const std::vector<int>& sizes() const { return sizes_; }
  int arity() const { return static_cast<int>(sizes_.size()); }
  std::uint64_t total() const { return total_; }

  bool contains(std::span<const int> t) const;
  std::uint64_t index_of(std::span<const int> t) const;
  std::vector<int> tuple_of(std::uint64_t index) const;

  /// In-place lexicographic increment; returns false after the last tuple
  /// wraps back to all zeros.
  bool next(std::vector<int>& t) const;

  bool operator==(const TupleSpace&) const = default;

 private:
  std::vector<int> sizes_;
  std::uint64_t total_ = 1;
};

}  // namespace nsg
