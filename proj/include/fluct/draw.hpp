#pragma once

#include <string>

#include "fluct/annular.hpp"
#include "fluct/composition.hpp"
#include "fluct/permutation.hpp"

namespace fluct {

/// SVG 1.1 picture of a permutation on the (p, q)-annulus.
///
/// Layout: points 1..p sit on the outer circle clockwise from the top at
/// equal angles, points p+1..p+q on the inner circle counter-clockwise.
/// Each cycle is one element with class "cycle": a closed path of cubic arcs
/// bowed toward the middle of the annulus, or a dot for a fixed point. The
/// output depends only on the arguments. Throws std::invalid_argument if
/// perm.size() != p + q.
std::string draw_annulus(const Permutation& perm, const AnnulusShape& shape);

/// As above, with each two-cycle block of V joined by a dotted connector
/// (class "tunnel").
std::string draw_annulus(const PartitionedPermutation& vp, const AnnulusShape& shape);

}  // namespace fluct
