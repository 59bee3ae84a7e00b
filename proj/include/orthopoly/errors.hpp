#pragma once

#include <stdexcept>
#include <string>

namespace orthopoly {

// A hypergeometric bottom parameter hits 0, -1, ... before the series ends.
struct BottomPole : std::domain_error {
  using std::domain_error::domain_error;
};

// No top parameter is a nonpositive integer, so the series never stops.
struct NonTerminating : std::domain_error {
  using std::domain_error::domain_error;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParityMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotProportional : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameters outside the region where a weight or norm is defined.
struct InvalidParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace orthopoly
