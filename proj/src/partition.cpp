#include "hopfq/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hopfq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::transpose() const {
  std::vector<int> t;
  const int first = empty() ? 0 : parts_.front();
  for (int j = 1; j <= first; ++j) {
    int count = 0;
    for (int p : parts_) count += p >= j ? 1 : 0;
    t.push_back(count);
  }
  return Partition(std::move(t));
}

int Partition::hook(int i, int j) const {
  if (j < 1 || j > (*this)[i]) throw std::out_of_range("box outside partition");
  int leg = 0;
  for (int r = i + 1; r <= length() && (*this)[r] >= j; ++r) ++leg;
  return (*this)[i] - j + leg + 1;
}

int Partition::content_sum() const {
  int c = 0;
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= (*this)[i]; ++j) c += j - i;
  return c;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

Partition Partition::parse(const std::string& text) {
  std::string body;
  for (char c : text)
    if (c != ' ' && c != '[' && c != ']' && c != '(' && c != ')') body += c;
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t next = body.find(',', pos);
    if (next == std::string::npos) next = body.size();
    const std::string item = body.substr(pos, next - pos);
    if (item.empty()) throw std::invalid_argument("bad partition: " + text);
    parts.push_back(std::stoi(item));
    pos = next + 1;
  }
  return Partition(std::move(parts));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  // reverse-lexicographic: (3) before (2,1) before (1,1,1)
  return b.parts_ <=> a.parts_;
}

FrobeniusCoordinates frobenius(const Partition& lambda) {
  FrobeniusCoordinates f;
  const Partition t = lambda.transpose();
  for (int i = 1; lambda[i] >= i; ++i) {
    f.alpha.push_back(lambda[i] - i);
    f.beta.push_back(t[i] - i);
  }
  return f;
}

Partition from_frobenius(const FrobeniusCoordinates& f) {
  if (f.alpha.size() != f.beta.size()) throw std::invalid_argument("Frobenius coordinates of unequal length");
  const int d = f.d();
  for (int i = 1; i < d; ++i) {
    if (f.alpha[static_cast<std::size_t>(i)] >= f.alpha[static_cast<std::size_t>(i - 1)] ||
        f.beta[static_cast<std::size_t>(i)] >= f.beta[static_cast<std::size_t>(i - 1)])
      throw std::invalid_argument("Frobenius coordinates must be strictly decreasing");
  }
  if (d > 0 && (f.alpha.back() < 0 || f.beta.back() < 0)) throw std::invalid_argument("negative Frobenius coordinate");
  // Rows 1..d from alpha; rows below the diagonal from the column lengths.
  std::vector<int> parts;
  for (int i = 1; i <= d; ++i) parts.push_back(f.alpha[static_cast<std::size_t>(i - 1)] + i);
  const int rows = d == 0 ? 0 : f.beta.front() + 1;
  for (int r = d + 1; r <= rows; ++r) {
    int count = 0;  // columns j <= d whose length lambda'_j = beta_j + j reaches row r
    for (int j = 1; j <= d; ++j) count += f.beta[static_cast<std::size_t>(j - 1)] + j >= r ? 1 : 0;
    parts.push_back(count);
  }
  return Partition(std::move(parts));
}

Integer dim(const Partition& lambda) {
  Integer hooks = 1;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda[i]; ++j) hooks *= lambda.hook(i, j);
  return factorial(lambda.size()) / hooks;
}

Integer syt_count(const Partition& lambda, int bound) {
  if (lambda.size() > bound)
    throw std::length_error("syt_count: |lambda| = " + std::to_string(lambda.size()) + " exceeds bound " +
                            std::to_string(bound));
  // Place 1..n one at a time; a box may be filled once the boxes above and to its left are.
  std::vector<int> filled(static_cast<std::size_t>(lambda.length()), 0);
  std::function<Integer(int)> place = [&](int remaining) -> Integer {
    if (remaining == 0) return 1;
    Integer total = 0;
    for (int r = 0; r < lambda.length(); ++r) {
      const auto ur = static_cast<std::size_t>(r);
      if (filled[ur] >= lambda[r + 1]) continue;
      if (r > 0 && filled[ur - 1] <= filled[ur]) continue;
      ++filled[ur];
      total += place(remaining - 1);
      --filled[ur];
    }
    return total;
  };
  return place(lambda.size());
}

int b_sign_exponent(const Partition& lambda) {
  int b = 0;
  for (int beta : frobenius(lambda).beta) b += beta + 1;
  return b;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto ps = partitions_of(k);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

Integer centralizer_order(const Partition& lambda) {
  std::map<int, int> mult;
  for (int p : lambda.parts()) ++mult[p];
  Integer z = 1;
  for (auto [k, m] : mult) {
    Integer km;
    mpz_ui_pow_ui(km.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
    z *= km * factorial(m);
  }
  return z;
}

}  // namespace hopfq
