#pragma once

#include "convexiq/body.hpp"

#include <optional>
#include <vector>

namespace convexiq {

/// Coordinate cross-polytope conv{+-t_i e_i} whose coordinate sections have
/// (n-1)-volumes s_i. Throws InvalidArgument unless every s_i > 0.
VPolytope cross_polytope_from_sections(const std::vector<double>& s);

/// The half-lengths t_i used above.
std::vector<double> cross_polytope_half_axes(const std::vector<double>& s);

struct SegmentResult {
  bool feasible = false;
  std::optional<VPolytope> segment;  // [-x/2, x/2]
  Vec x;                             // empty when infeasible
  int violating_index = 0;           // 1-based; 0 when feasible
};

/// Segment whose coordinate projections have lengths a_i, when
/// a_i^2 <= (1/(n-1)) sum a_k^2 for all i. Otherwise reports the first index
/// breaking that condition.
SegmentResult segment_from_projections(const std::vector<double>& a);

}  // namespace convexiq
