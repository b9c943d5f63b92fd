#pragma once

#include <vector>

#include "acr/rational_matrix.hpp"

namespace acr {

struct ConeRays {
  // Extreme rays of {v : N v = 0, v >= 0}, each a primitive integer vector,
  // sorted lexicographically. Empty for the trivial cone {0}.
  std::vector<std::vector<Rational>> rays;
  // True iff the cone contains a strictly positive vector, i.e. the sum of
  // the rays is strictly positive.
  bool has_positive_point = false;

  std::vector<Rational> ray_sum() const;
};

// Double description method run inside the kernel of N: start from the full
// kernel as lineality space and intersect with the half-spaces v_j >= 0,
// keeping a minimal generator set (adjacency tested combinatorially on
// active constraint sets). At most 64 coordinates.
ConeRays extreme_rays(const RationalMatrix& N);

}  // namespace acr
