#include "fluct/set_partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace fluct {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

SetPartition::SetPartition(int n, std::vector<Block> blocks) {
  if (n < 1) throw std::invalid_argument("partition must cover at least one point");
  block_of_.assign(static_cast<std::size_t>(n), -1);
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("partition has an empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& x, const Block& y) { return x.front() < y.front(); });
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (int x : blocks[k]) {
      if (x < 1 || x > n) throw std::invalid_argument("partition entry outside [n]");
      auto& slot = block_of_[static_cast<std::size_t>(x - 1)];
      if (slot >= 0) throw std::invalid_argument("partition blocks overlap");
      slot = static_cast<int>(k);
    }
  }
  if (std::find(block_of_.begin(), block_of_.end(), -1) != block_of_.end()) {
    throw std::invalid_argument("partition blocks do not cover [n]");
  }
  blocks_ = std::move(blocks);
}

SetPartition SetPartition::singletons(int n) {
  std::vector<Block> blocks;
  for (int i = 1; i <= n; ++i) blocks.push_back({i});
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::whole(int n) {
  Block b(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(b.begin(), b.end(), 1);
  return SetPartition(n, {std::move(b)});
}

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
  std::map<int, Block> by_label;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    by_label[labels[i]].push_back(static_cast<int>(i) + 1);
  }
  std::vector<Block> blocks;
  blocks.reserve(by_label.size());
  for (auto& [label, b] : by_label) blocks.push_back(std::move(b));
  return SetPartition(static_cast<int>(labels.size()), std::move(blocks));
}

bool SetPartition::refines(const SetPartition& coarser) const {
  if (size() != coarser.size()) throw std::invalid_argument("refines: size mismatch");
  for (const auto& b : blocks_) {
    const int target = coarser.block_of(b.front());
    for (int x : b) {
      if (coarser.block_of(x) != target) return false;
    }
  }
  return true;
}

std::string SetPartition::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (k) out += ',';
    out += '{';
    for (std::size_t j = 0; j < blocks_[k].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(blocks_[k][j]);
    }
    out += '}';
  }
  out += '}';
  return out;
}

SetPartition orbit_partition(const Permutation& a) { return SetPartition(a.size(), a.cycles()); }

SetPartition partition_join(const SetPartition& v, const SetPartition& u) {
  if (v.size() != u.size()) throw std::invalid_argument("partition_join: size mismatch");
  const int n = v.size();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto unite_blocks = [&](const SetPartition& w) {
    for (const auto& b : w.blocks()) {
      const int r0 = find_root(parent, b.front() - 1);
      for (int x : b) {
        const int r = find_root(parent, x - 1);
        if (r != r0) parent[static_cast<std::size_t>(r)] = r0;
      }
    }
  };
  unite_blocks(v);
  unite_blocks(u);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = find_root(parent, i);
  return SetPartition::from_labels(labels);
}

bool perm_refines(const Permutation& a, const SetPartition& v) {
  if (a.size() != v.size()) throw std::invalid_argument("perm_refines: size mismatch");
  for (const auto& c : a.cycles()) {
    const int target = v.block_of(c.front());
    for (int x : c) {
      if (v.block_of(x) != target) return false;
    }
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const SetPartition& v) { return os << v.to_string(); }

}  // namespace fluct
