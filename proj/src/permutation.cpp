#include "orthopoly/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "orthopoly/errors.hpp"

namespace orthopoly {

Permutation Permutation::identity(std::size_t m) {
  Permutation p;
  p.image_.resize(m);
  std::iota(p.image_.begin(), p.image_.end(), 0);
  return p;
}

Permutation Permutation::from_images(std::vector<int> image) {
  std::vector<int> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i)) throw std::invalid_argument("not a permutation");
  Permutation p;
  p.image_ = std::move(image);
  return p;
}

Permutation Permutation::parse(std::string_view text, std::size_t m) {
  Permutation p = identity(m);
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) && c != ' '; }),
          s.end());
  if (s.empty() || s == "id" || s == "e") return p;
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == ' ') {
      ++pos;
      continue;
    }
    if (s[pos] != '(') throw std::invalid_argument("bad cycle notation: " + s);
    auto close = s.find(')', pos);
    if (close == std::string::npos) throw std::invalid_argument("unclosed cycle: " + s);
    std::string body = s.substr(pos + 1, close - pos - 1);
    std::vector<int> cycle;
    bool separated = body.find_first_of(", ") != std::string::npos;
    if (separated) {
      std::string tok;
      for (char c : body + ",") {
        if (c == ',' || c == ' ') {
          if (!tok.empty()) cycle.push_back(std::stoi(tok));
          tok.clear();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
          tok += c;
        } else {
          throw std::invalid_argument("bad symbol in cycle: " + s);
        }
      }
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad symbol in cycle: " + s);
        cycle.push_back(c - '0');
      }
    }
    for (int v : cycle)
      if (v < 1 || v > static_cast<int>(m))
        throw DimensionMismatch("cycle symbol " + std::to_string(v) + " outside 1.." + std::to_string(m));
    cycles.push_back(cycle);
    pos = close + 1;
  }
  // Rightmost cycle acts first.
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    Permutation c = identity(m);
    const auto& cyc = *it;
    for (std::size_t i = 0; i < cyc.size(); ++i)
      c.image_[cyc[i] - 1] = cyc[(i + 1) % cyc.size()] - 1;
    std::vector<int> seen = cyc;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      throw std::invalid_argument("repeated symbol in cycle: " + s);
    p = c * p;
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p = identity(size());
  for (std::size_t i = 0; i < size(); ++i) p.image_[image_[i]] = static_cast<int>(i);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (image_[i] != static_cast<int>(i)) return false;
  return true;
}

std::size_t Permutation::fixed_prefix() const {
  std::size_t j = 0;
  while (j < size() && image_[j] == static_cast<int>(j)) ++j;
  return j;
}

std::size_t Permutation::fixed_suffix() const {
  std::size_t j = 0;
  while (j < size() && image_[size() - 1 - j] == static_cast<int>(size() - 1 - j)) ++j;
  return j;
}

std::string Permutation::str() const {
  const bool wide = size() > 9;
  std::string out;
  std::vector<bool> seen(size(), false);
  for (std::size_t start = 0; start < size(); ++start) {
    if (seen[start] || image_[start] == static_cast<int>(start)) continue;
    out += "(";
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first && wide) out += ",";
      out += std::to_string(i + 1);
      first = false;
      i = static_cast<std::size_t>(image_[i]);
    }
    out += ")";
  }
  return out.empty() ? "(1)" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw DimensionMismatch("composing permutations of different sizes");
  Permutation r = Permutation::identity(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.image_[i] = a.image_[static_cast<std::size_t>(b.image_[i])];
  return r;
}

std::vector<Permutation> all_permutations(std::size_t m) {
  std::vector<int> img(m);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Permutation cycle_prefix(std::size_t k, std::size_t m) {
  std::vector<int> img(m);
  std::iota(img.begin(), img.end(), 0);
  for (std::size_t i = 0; i + 1 < k; ++i) img[i] = static_cast<int>(i + 1);
  if (k >= 1) img[k - 1] = 0;
  return Permutation::from_images(img);
}

}  // namespace orthopoly
