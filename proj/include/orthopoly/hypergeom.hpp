#pragma once
// Terminating generalized hypergeometric series pFq evaluated exactly.

#include <vector>

#include "orthopoly/rational.hpp"

namespace orthopoly {

struct HypSeries {
  std::vector<Rational> top;
  std::vector<Rational> bottom;
  Rational z = 1;
};

// Smallest m with some top parameter equal to -m. Throws NonTerminating.
long termination_order(const HypSeries& s);

// sum_{k=0}^{m} prod (a)_k / prod (b)_k * z^k / k!, where m is the
// termination order. Throws BottomPole when a bottom parameter lies in
// {0, -1, ..., -(m-1)}.
Rational hyp_terminating(const HypSeries& s);

// prod_b (b)_len * pFq, computed without dividing by any (b)_k, so it stays
// finite when a bottom parameter is a nonpositive integer. The series must
// terminate at order <= len.
Rational hyp_cleared(const HypSeries& s, long len);

// (b_i)_len * pFq with only the bottom parameter b_i cleared; the others
// divide as usual and raise BottomPole.
Rational hyp_cleared_one(const HypSeries& s, std::size_t i, long len);

}  // namespace orthopoly
