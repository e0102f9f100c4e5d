#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tutte/rational.hpp"

namespace tutte {

/// Partition of an ordered ground set, stored as a restricted growth string:
/// rgs[0] = 0 and rgs[i] <= 1 + max(rgs[0..i-1]). Block labels follow first
/// occurrence, so blocks come out sorted by their minimum element.
class SetPartition {
 public:
  SetPartition(std::vector<std::string> ground, std::vector<int> rgs)
      : ground_(std::move(ground)), rgs_(std::move(rgs)) {
    if (ground_.size() != rgs_.size())
      throw std::invalid_argument("ground/rgs length mismatch");
    int mx = -1;
    for (size_t i = 0; i < rgs_.size(); ++i) {
      if (rgs_[i] < 0 || rgs_[i] > mx + 1)
        throw std::invalid_argument("not a restricted growth string");
      if (rgs_[i] > mx) mx = rgs_[i];
    }
  }

  /// All singletons (the bottom of the refinement order).
  static SetPartition discrete(std::vector<std::string> ground) {
    std::vector<int> rgs(ground.size());
    for (size_t i = 0; i < rgs.size(); ++i) rgs[i] = (int)i;
    return SetPartition(std::move(ground), std::move(rgs));
  }

  /// Single block (the top). Requires a nonempty ground set.
  static SetPartition one_block(std::vector<std::string> ground) {
    if (ground.empty())
      throw std::invalid_argument("one-block partition of an empty set");
    return SetPartition(std::move(ground),
                        std::vector<int>(ground.size(), 0));
  }

  const std::vector<std::string>& ground() const { return ground_; }
  const std::vector<int>& rgs() const { return rgs_; }
  int size() const { return (int)ground_.size(); }

  int block_count() const {
    int mx = -1;
    for (int v : rgs_) mx = std::max(mx, v);
    return mx + 1;
  }

  /// Blocks as element indices, in block-label order.
  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out(block_count());
    for (size_t i = 0; i < rgs_.size(); ++i) out[rgs_[i]].push_back((int)i);
    return out;
  }

  std::vector<int> block_sizes() const {
    std::vector<int> out(block_count(), 0);
    for (int v : rgs_) ++out[v];
    return out;
  }

  /// True when every block of this partition lies inside one block of pi.
  bool refines(const SetPartition& pi) const {
    if (ground_ != pi.ground_)
      throw std::invalid_argument("partitions of different ground sets");
    std::vector<int> image(block_count(), -1);
    for (size_t i = 0; i < rgs_.size(); ++i) {
      int& slot = image[rgs_[i]];
      if (slot == -1)
        slot = pi.rgs_[i];
      else if (slot != pi.rgs_[i])
        return false;
    }
    return true;
  }

  /// For this <= pi: how many of our blocks land in each block of pi.
  /// Indexed by pi's block labels.
  std::vector<int> blocks_within(const SetPartition& pi) const {
    if (!refines(pi))
      throw std::invalid_argument("blocks_within requires refinement");
    std::vector<int> image(block_count(), -1);
    for (size_t i = 0; i < rgs_.size(); ++i) image[rgs_[i]] = pi.rgs_[i];
    std::vector<int> counts(pi.block_count(), 0);
    for (int b : image) ++counts[b];
    return counts;
  }

  /// "{1,2|3}" with blocks sorted by minimum and elements in ground order.
  std::string str() const {
    std::string out = "{";
    auto bs = blocks();
    for (size_t b = 0; b < bs.size(); ++b) {
      if (b) out += "|";
      for (size_t i = 0; i < bs[b].size(); ++i) {
        if (i) out += ",";
        out += ground_[bs[b][i]];
      }
    }
    return out + "}";
  }

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.ground_ == b.ground_ && a.rgs_ == b.rgs_;
  }

 private:
  std::vector<std::string> ground_;
  std::vector<int> rgs_;
};

/// Every partition of the ground set exactly once, in lexicographic order of
/// the restricted growth strings.
inline std::vector<SetPartition> enumerate_partitions(
    const std::vector<std::string>& ground) {
  std::vector<SetPartition> out;
  size_t n = ground.size();
  if (n == 0) {
    out.emplace_back(ground, std::vector<int>{});
    return out;
  }
  std::vector<int> rgs(n, 0);
  for (;;) {
    out.emplace_back(ground, rgs);
    // advance to the next restricted growth string: rightmost position that
    // may still grow (rgs[i] <= max of the prefix) is bumped, tail reset
    int i = (int)n - 1;
    while (i > 0) {
      int mx = 0;
      for (int j = 0; j < i; ++j) mx = std::max(mx, rgs[j]);
      if (rgs[i] <= mx) break;
      --i;
    }
    if (i == 0) return out;
    ++rgs[i];
    for (size_t j = i + 1; j < n; ++j) rgs[j] = 0;
  }
}

/// Number of ordered pairs of elements separated by the partition:
/// sum over block pairs of |B_i||B_j|, equal to (n^2 - sum |B|^2)/2.
inline Integer cross_edges(const SetPartition& pi) {
  Integer n2 = Integer((long)pi.size()) * (long)pi.size();
  Integer s = 0;
  for (int b : pi.block_sizes()) s += Integer((long)b) * (long)b;
  return (n2 - s) / 2;
}

/// Stirling numbers of the second kind via the triangle recurrence.
inline Integer stirling2(int n, int k) {
  if (n < 0 || k < 0) return 0;
  if (n == 0 && k == 0) return 1;
  if (n == 0 || k == 0) return 0;
  std::vector<Integer> row{1};  // S(0, 0..)
  for (int i = 1; i <= n; ++i) {
    std::vector<Integer> next(i + 1, 0);
    for (int j = 1; j <= i; ++j) {
      Integer fromLeft = (j - 1 < (int)row.size()) ? row[j - 1] : Integer(0);
      Integer same = (j < (int)row.size()) ? row[j] : Integer(0);
      next[j] = fromLeft + j * same;
    }
    if (i == 1) next[0] = 0;
    row = std::move(next);
  }
  return k < (int)row.size() ? row[k] : Integer(0);
}

/// Bell numbers via the Bell triangle.
inline Integer bell(int n) {
  if (n < 0) throw std::invalid_argument("bell of negative argument");
  std::vector<Integer> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<Integer> next;
    next.reserve(i + 1);
    next.push_back(row.back());
    for (size_t j = 0; j < row.size(); ++j) next.push_back(next[j] + row[j]);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace tutte
