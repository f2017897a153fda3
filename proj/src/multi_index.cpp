#include "hopfq/multi_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfq {

MultiIndex::MultiIndex(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  std::vector<Entry> merged;
  for (const auto& [k, m] : entries_) {
    if (k < 1) throw std::invalid_argument("multi-index variables are indexed from 1");
    if (m < 0) throw std::invalid_argument("negative multiplicity");
    if (m == 0) continue;
    if (!merged.empty() && merged.back().first == k)
      merged.back().second += m;
    else
      merged.emplace_back(k, m);
  }
  entries_ = std::move(merged);
  recompute();
}

void MultiIndex::recompute() {
  weight_ = degree_ = 0;
  for (const auto& [k, m] : entries_) {
    weight_ += k * m;
    degree_ += m;
  }
}

MultiIndex MultiIndex::from_partition(const Partition& p) {
  std::vector<Entry> e;
  for (int part : p.parts()) e.emplace_back(part, 1);
  return MultiIndex(std::move(e));
}

Partition MultiIndex::to_partition() const {
  std::vector<int> parts;
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
    for (int i = 0; i < it->second; ++i) parts.push_back(it->first);
  return Partition(std::move(parts));
}

int MultiIndex::get(int k) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{k, 0});
  return it != entries_.end() && it->first == k ? it->second : 0;
}

bool MultiIndex::divides(const MultiIndex& o) const {
  std::size_t j = 0;
  for (const auto& [k, m] : entries_) {
    while (j < o.entries_.size() && o.entries_[j].first < k) ++j;
    if (j == o.entries_.size() || o.entries_[j].first != k || o.entries_[j].second < m) return false;
  }
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  std::vector<Entry> out;
  out.reserve(entries_.size() + o.entries_.size());
  std::size_t i = 0, j = 0;
  while (i < entries_.size() || j < o.entries_.size()) {
    if (j == o.entries_.size() || (i < entries_.size() && entries_[i].first < o.entries_[j].first)) {
      out.push_back(entries_[i++]);
    } else if (i == entries_.size() || o.entries_[j].first < entries_[i].first) {
      out.push_back(o.entries_[j++]);
    } else {
      out.emplace_back(entries_[i].first, entries_[i].second + o.entries_[j].second);
      ++i;
      ++j;
    }
  }
  MultiIndex r;
  r.entries_ = std::move(out);
  r.recompute();
  return r;
}

MultiIndex MultiIndex::minus(const MultiIndex& o) const {
  std::vector<Entry> out;
  std::size_t j = 0;
  for (const auto& [k, m] : entries_) {
    while (j < o.entries_.size() && o.entries_[j].first < k) {
      throw std::invalid_argument("MultiIndex::minus: not a sub-multi-index");
    }
    int sub = 0;
    if (j < o.entries_.size() && o.entries_[j].first == k) sub = o.entries_[j++].second;
    if (sub > m) throw std::invalid_argument("MultiIndex::minus: not a sub-multi-index");
    if (m - sub > 0) out.emplace_back(k, m - sub);
  }
  if (j != o.entries_.size()) throw std::invalid_argument("MultiIndex::minus: not a sub-multi-index");
  MultiIndex r;
  r.entries_ = std::move(out);
  r.recompute();
  return r;
}

std::string MultiIndex::to_string(const char* var) const {
  std::string s;
  for (const auto& [k, m] : entries_) {
    if (!s.empty()) s += '*';
    s += var + std::to_string(k);
    if (m > 1) s += '^' + std::to_string(m);
  }
  return s.empty() ? "1" : s;
}

std::vector<MultiIndex> monomials_of_weight(int w) {
  std::vector<MultiIndex> out;
  for (const auto& p : partitions_of(w)) out.push_back(MultiIndex::from_partition(p));
  return out;
}

}  // namespace hopfq
