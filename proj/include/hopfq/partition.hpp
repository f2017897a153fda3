#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "hopfq/rational.hpp"

namespace hopfq {

// Weakly decreasing positive parts; the empty list is the empty partition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// lambda_i with 1-based index; zero beyond the length.
  int operator[](int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }

  Partition transpose() const;
  /// Hook length of box (i, j), both 1-based.
  int hook(int i, int j) const;
  /// Sum of contents j - i over all boxes.
  int content_sum() const;

  /// "[3,2]", "[]" for the empty partition.
  std::string to_string() const;
  static Partition parse(const std::string& text);

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Graded reverse-lexicographic: smaller size first, then larger parts first.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct FrobeniusCoordinates {
  std::vector<int> alpha;  // lambda_i - i
  std::vector<int> beta;   // lambda'_i - i
  int d() const { return static_cast<int>(alpha.size()); }
  friend bool operator==(const FrobeniusCoordinates&, const FrobeniusCoordinates&) = default;
};

FrobeniusCoordinates frobenius(const Partition& lambda);
Partition from_frobenius(const FrobeniusCoordinates& f);

/// Hook-length formula.
Integer dim(const Partition& lambda);

inline constexpr int kDefaultSytBound = 12;

/// Counts standard Young tableaux by backtracking; refuses |lambda| > bound.
Integer syt_count(const Partition& lambda, int bound = kDefaultSytBound);

/// Sum over Frobenius beta coordinates of (beta_i + 1).
int b_sign_exponent(const Partition& lambda);

/// All partitions of n in reverse-lexicographic order.
std::vector<Partition> partitions_of(int n);
/// All partitions of size <= n, by size then reverse-lexicographic.
std::vector<Partition> partitions_up_to(int n);

/// z_lambda = prod_k k^{m_k} m_k!.
Integer centralizer_order(const Partition& lambda);

}  // namespace hopfq
