#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace orthopoly {

// Exponent vectors and degree labels. Fixed capacity keeps them off the heap.
class MultiIndex {
 public:
  static constexpr std::size_t kCapacity = 12;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t size);
  MultiIndex(std::initializer_list<int> values);
  explicit MultiIndex(const std::vector<int>& values);

  std::size_t size() const { return size_; }
  int operator[](std::size_t i) const { return data_[i]; }
  int& operator[](std::size_t i) { return data_[i]; }
  const int* begin() const { return data_.data(); }
  const int* end() const { return data_.data() + size_; }

  int total() const;
  // Sum of the first k entries (|a_k| in 1-based prefix notation).
  int prefix(std::size_t k) const;
  // Sum of entries k..size in 1-based indexing (|a^k|); zero when k > size.
  int suffix(std::size_t k) const;
  std::vector<int> to_vector() const { return {begin(), end()}; }
  std::string str() const;

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
  friend bool operator==(const MultiIndex& a, const MultiIndex& b);

 private:
  std::array<int, kCapacity> data_{};
  std::size_t size_ = 0;
};

// Graded reverse lexicographic: higher total degree first, ties broken by the
// rightmost nonzero entry of a - b being negative.
bool grevlex_greater(const MultiIndex& a, const MultiIndex& b);

struct GrevlexGreater {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const { return grevlex_greater(a, b); }
};

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& m) const;
};

// All a in N^parts with |a| = total, in descending graded reverse-lex order.
std::vector<MultiIndex> compositions(std::size_t parts, int total);

}  // namespace orthopoly
