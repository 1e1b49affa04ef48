#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "fluct/permutation.hpp"

namespace fluct {

/// A partition of [n] into nonempty blocks. Blocks are stored sorted, and
/// ordered by their least element, so equality is structural.
class SetPartition {
 public:
  using Block = std::vector<int>;

  /// Throws std::invalid_argument unless the blocks are nonempty, pairwise
  /// disjoint and cover [n].
  SetPartition(int n, std::vector<Block> blocks);

  /// 0_n: all singletons.
  static SetPartition singletons(int n);
  /// 1_n: one block.
  static SetPartition whole(int n);
  /// Block label per point (labels[i - 1] for point i); any integers work.
  static SetPartition from_labels(const std::vector<int>& labels);

  int size() const { return static_cast<int>(block_of_.size()); }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  /// |V| = n - #(V).
  int length() const { return size() - block_count(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  /// Index into blocks() of the block containing point i.
  int block_of(int i) const { return block_of_[static_cast<std::size_t>(i - 1)]; }

  /// True iff every block of *this lies inside a block of `coarser`.
  bool refines(const SetPartition& coarser) const;

  /// "{{1,2},{3}}".
  std::string to_string() const;

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.blocks_ == b.blocks_ && a.size() == b.size();
  }
  friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.blocks_ <=> b.blocks_;
  }

 private:
  std::vector<Block> blocks_;
  std::vector<int> block_of_;
};

/// 0_pi: the blocks are the cycles of a.
SetPartition orbit_partition(const Permutation& a);

/// Finest partition coarser than both. Throws std::invalid_argument on a
/// size mismatch.
SetPartition partition_join(const SetPartition& v, const SetPartition& u);

/// True iff every cycle of a lies inside a block of v ("a <= v").
bool perm_refines(const Permutation& a, const SetPartition& v);

std::ostream& operator<<(std::ostream& os, const SetPartition& v);

}  // namespace fluct
