#include "orthopoly/multi_index.hpp"

#include <algorithm>
#include <stdexcept>

#include "orthopoly/errors.hpp"

namespace orthopoly {

MultiIndex::MultiIndex(std::size_t size) : size_(size) {
  if (size > kCapacity) throw DimensionMismatch("MultiIndex: too many entries");
}

MultiIndex::MultiIndex(std::initializer_list<int> values) : MultiIndex(values.size()) {
  std::copy(values.begin(), values.end(), data_.begin());
}

MultiIndex::MultiIndex(const std::vector<int>& values) : MultiIndex(values.size()) {
  std::copy(values.begin(), values.end(), data_.begin());
}

int MultiIndex::total() const {
  int t = 0;
  for (std::size_t i = 0; i < size_; ++i) t += data_[i];
  return t;
}

int MultiIndex::prefix(std::size_t k) const {
  int t = 0;
  for (std::size_t i = 0; i < std::min(k, size_); ++i) t += data_[i];
  return t;
}

int MultiIndex::suffix(std::size_t k) const {
  int t = 0;
  for (std::size_t i = k == 0 ? 0 : k - 1; i < size_; ++i) t += data_[i];
  return t;
}

std::string MultiIndex::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) s += ",";
    s += std::to_string(data_[i]);
  }
  return s + ")";
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  if (a.size_ != b.size_) throw DimensionMismatch("MultiIndex sizes differ");
  MultiIndex r(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) r.data_[i] = a.data_[i] + b.data_[i];
  return r;
}

bool operator==(const MultiIndex& a, const MultiIndex& b) {
  return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
}

bool grevlex_greater(const MultiIndex& a, const MultiIndex& b) {
  int ta = a.total(), tb = b.total();
  if (ta != tb) return ta > tb;
  for (std::size_t i = std::max(a.size(), b.size()); i-- > 0;) {
    int x = i < a.size() ? a[i] : 0;
    int y = i < b.size() ? b[i] : 0;
    if (x != y) return x < y;
  }
  return false;
}

std::size_t MultiIndexHash::operator()(const MultiIndex& m) const {
  std::size_t h = m.size();
  for (int v : m) h = h * 1000003u + static_cast<std::size_t>(v);
  return h;
}

namespace {
void fill(std::vector<MultiIndex>& out, MultiIndex& cur, std::size_t pos, int left) {
  if (pos + 1 == cur.size()) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (int v = left; v >= 0; --v) {
    cur[pos] = v;
    fill(out, cur, pos + 1, left - v);
  }
}
}  // namespace

std::vector<MultiIndex> compositions(std::size_t parts, int total) {
  std::vector<MultiIndex> out;
  if (total < 0) return out;
  if (parts == 0) {
    if (total == 0) out.emplace_back(0);
    return out;
  }
  MultiIndex cur(parts);
  fill(out, cur, 0, total);
  std::sort(out.begin(), out.end(), grevlex_greater);
  return out;
}

}  // namespace orthopoly
