#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hopfq/partition.hpp"

namespace hopfq {

// Exponent vector over variables indexed by k >= 1, stored as sorted
// (k, multiplicity) pairs with positive multiplicities.
class MultiIndex {
 public:
  using Entry = std::pair<int, int>;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<Entry> entries);
  MultiIndex(std::initializer_list<Entry> entries) : MultiIndex(std::vector<Entry>(entries)) {}

  static MultiIndex single(int k, int mult = 1) { return MultiIndex({{k, mult}}); }
  /// Parts of a partition as multiplicities (the monomial q_lambda).
  static MultiIndex from_partition(const Partition& p);
  Partition to_partition() const;

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  int get(int k) const;
  /// sum k * m_k
  int weight() const { return weight_; }
  /// sum m_k
  int degree() const { return degree_; }
  int max_index() const { return entries_.empty() ? 0 : entries_.back().first; }

  bool divides(const MultiIndex& o) const;
  MultiIndex operator+(const MultiIndex& o) const;
  /// this - o; throws unless o.divides(*this).
  MultiIndex minus(const MultiIndex& o) const;

  std::string to_string(const char* var) const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.entries_ == b.entries_; }
  /// Canonical order: by weight, then lexicographic on the entries.
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  void recompute();
  std::vector<Entry> entries_;
  int weight_ = 0;
  int degree_ = 0;
};

/// All multi-indices of the given weight (one per partition).
std::vector<MultiIndex> monomials_of_weight(int w);

}  // namespace hopfq
