#pragma once

#include "minktree/scalar.hpp"

#include <string>
#include <vector>

namespace minktree {

/// A finite labeled point set in R^d. Labels are optional: either empty or
/// one per point.
struct PointSet {
    int dim = 0;
    std::vector<Vec> points;
    std::vector<std::string> labels;

    PointSet() = default;
    PointSet(int d, std::vector<Vec> pts) : dim(d), points(std::move(pts)) { validate(); }

    size_t size() const { return points.size(); }

    bool allExact() const {
        for (const auto& p : points)
            if (!vecExact(p)) return false;
        return true;
    }

    /// Checks dimension consistency; throws InvalidInstanceError.
    void validate() const {
        for (const auto& p : points)
            if (static_cast<int>(p.size()) != dim)
                throw InvalidInstanceError("point dimension does not match the instance");
        if (!labels.empty() && labels.size() != points.size())
            throw InvalidInstanceError("label count does not match point count");
    }
};

}  // namespace minktree
