#include "qagt/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qagt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::domain_error("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::domain_error("Partition: parts must be weakly decreasing");
  }
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::conjugate_part(int j) const {
  if (j < 1) return 0;
  int count = 0;
  for (int p : parts_) {
    if (p >= j) ++count;
    else break;
  }
  return count;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  const int width = part(1);
  c.reserve(static_cast<size_t>(width));
  for (int j = 1; j <= width; ++j) c.push_back(conjugate_part(j));
  return Partition(std::move(c));
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> out;
  out.reserve(static_cast<size_t>(weight()));
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= part(i); ++j) out.push_back(Box{i, j});
  return out;
}

Partition Partition::tail() const {
  if (empty()) throw std::domain_error("Partition: tail of empty partition");
  return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

Partition Partition::prepend(int part) const {
  if (!empty() && part < parts_.front())
    throw std::domain_error("Partition: prepended part too small");
  std::vector<int> p;
  p.reserve(parts_.size() + 1);
  p.push_back(part);
  p.insert(p.end(), parts_.begin(), parts_.end());
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

namespace {

void gen(int remaining, int max_part, std::vector<int>& current,
         std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(current));
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    current.push_back(k);
    gen(remaining - k, k, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::domain_error("enumerate_partitions: negative n");
  std::vector<Partition> out;
  std::vector<int> current;
  gen(n, n, current, out);
  return out;
}

std::vector<std::pair<Partition, Partition>> partition_pairs(int n) {
  std::vector<std::pair<Partition, Partition>> out;
  for (int a = n; a >= 0; --a) {
    const auto left = enumerate_partitions(a);
    const auto right = enumerate_partitions(n - a);
    for (const auto& l : left)
      for (const auto& r : right) out.emplace_back(l, r);
  }
  return out;
}

}  // namespace qagt
