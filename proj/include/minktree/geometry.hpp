#pragma once

#include "minktree/norm.hpp"
#include "minktree/pointset.hpp"

namespace minktree {

/// Size of the angle at apex b with rays toward a and c: the norm distance
/// between the two unit vectors (a-b)/||a-b|| and (c-b)/||c-b||. Lies in
/// [0, 2]; equals 2 sin(theta/2) in the Euclidean case. Only this size is
/// used downstream, never an angular region, so the collinear "b between a
/// and c" case needs no half-plane choice.
Scalar angleSize(const Norm& norm, const Vec& a, const Vec& b, const Vec& c);

/// Floating fast path over raw coordinates.
double angleSizeD(const Norm& norm, std::span<const double> a, std::span<const double> b,
                  std::span<const double> c);

/// Minimum over all pairs of distinct points; throws InvalidInstanceError on
/// duplicates (distance zero) or |S| < 2.
Scalar minPairwiseDistance(const PointSet& s, const Norm& norm);

}  // namespace minktree
