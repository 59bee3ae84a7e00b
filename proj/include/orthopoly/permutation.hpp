#pragma once
// Permutations of {1, ..., m} acting on coordinate vectors by
// (tau X)_i = X_{tau(i)}. Products compose right to left.

#include <string>
#include <string_view>
#include <vector>

namespace orthopoly {

class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(std::size_t m);
  // 0-based images: image[i] = tau(i).
  static Permutation from_images(std::vector<int> image);
  // Cycle notation with 1-based symbols: "(12)(34)", "(1,10,3)", "(1)", "id" or "".
  static Permutation parse(std::string_view cycles, std::size_t m);

  std::size_t size() const { return image_.size(); }
  // 0-based image of a 0-based symbol.
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return image_; }

  Permutation inverse() const;
  bool is_identity() const;
  // Largest 0-based j such that symbols 0..j-1 are all fixed.
  std::size_t fixed_prefix() const;
  // Number of trailing symbols that are fixed.
  std::size_t fixed_suffix() const;
  std::string str() const;

  // (tau X)_i = X_{tau(i)}
  template <class T>
  std::vector<T> act(const std::vector<T>& x) const {
    std::vector<T> r;
    r.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r.push_back(x[static_cast<std::size_t>(image_[i])]);
    return r;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<int> image_;
};

std::vector<Permutation> all_permutations(std::size_t m);

// The cycle (1 2 ... k) on m symbols.
Permutation cycle_prefix(std::size_t k, std::size_t m);

}  // namespace orthopoly
