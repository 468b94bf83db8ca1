#pragma once

// Exact rational simplex on a dictionary (only non-basic columns are stored),
// with Bland's smallest-index rule for entering and leaving variables, which
// guarantees termination.

#include <cstddef>
#include <optional>
#include <vector>

#include "mpp/rational.hpp"

namespace mpp::lp {

using Matrix = std::vector<RationalVector>;

enum class Status { Optimal, Unbounded };

struct Solution {
  Status status = Status::Optimal;
  Rational objective;
  RationalVector x;  // values of the structural variables
  std::size_t pivots = 0;
};

// maximize c·x  s.t.  A x <= b,  x >= 0,  with every b_i >= 0.
Solution maximize(const Matrix& A, const RationalVector& b, const RationalVector& c);

// Some x >= 0 with A x = b, or nullopt when the system is infeasible.
std::optional<RationalVector> find_nonnegative_solution(const Matrix& A, const RationalVector& b);

}  // namespace mpp::lp
