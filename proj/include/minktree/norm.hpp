#pragma once

#include "minktree/scalar.hpp"

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace minktree {

enum class NormKind { L1, L2, Linf, Lp, Poly };

/// A norm on R^d: an lp norm (p >= 1, with p = infinity as its own kind,
/// never a large float) or the gauge of a centrally symmetric polytope given
/// by its vertices. Immutable after construction; cheap to copy and safe to
/// share across threads.
class Norm {
  public:
    static Norm l1(int dim) { return Norm(NormKind::L1, dim, 0.0); }
    static Norm l2(int dim) { return Norm(NormKind::L2, dim, 0.0); }
    static Norm linf(int dim) { return Norm(NormKind::Linf, dim, 0.0); }
    static Norm lp(double p, int dim);
    /// Gauge of conv(vertices). Vertices must be exact rationals, centrally
    /// symmetric (v in V iff -v in V) and span R^d. Facet enumeration is
    /// implemented for dim <= 4.
    static Norm polyhedral(std::vector<Vec> vertices);

    /// Grammar: l1 | l2 | linf | lp:<p> | poly:[[x,y],...]. `dim` fixes the
    /// ambient dimension for the lp forms; poly takes it from the vertices
    /// (a nonzero `dim` that disagrees is an error).
    static Norm parse(const std::string& spec, int dim);

    int dim() const { return dim_; }
    NormKind kind() const { return kind_; }
    double p() const { return p_; }
    /// True when eval is exact on exact-rational input (l1, linf, polyhedral).
    bool exactCapable() const {
        return kind_ == NormKind::L1 || kind_ == NormKind::Linf || kind_ == NormKind::Poly;
    }
    std::string specString() const;

    /// ||v||. Exact rational result on the exact path, double otherwise.
    Scalar eval(const Vec& v) const;
    /// Fast floating path used by samplers and the packing search.
    double evalD(std::span<const double> v) const;

    /// v / ||v||; throws on the zero vector.
    Vec normalize(const Vec& v) const;
    std::vector<double> normalizeD(std::span<const double> v) const;

    Scalar dist(const Vec& a, const Vec& b) const { return eval(a - b); }

    /// Half-width of the axis-aligned bounding box of the unit ball, per
    /// coordinate bound (1 for lp; max |vertex coord| for polytopes).
    double coordinateBound() const;

    /// Boundary polyline of the unit ball for dim == 2 rendering, closed
    /// (first point repeated at the end) and deterministic.
    std::vector<std::array<double, 2>> unitCircle2d(int samples = 192) const;

    const std::vector<Vec>& polyVertices() const { return polyVertices_; }
    /// Facet functionals h of the polytope ball {x : h.x <= 1 for all h}.
    const std::vector<Vec>& polyFacets() const { return facets_; }

  private:
    Norm(NormKind kind, int dim, double p) : kind_(kind), dim_(dim), p_(p) {}

    void checkDim(size_t n) const;

    NormKind kind_;
    int dim_;
    double p_;  // only meaningful for NormKind::Lp
    std::vector<Vec> polyVertices_;
    // Facet functionals h with the ball = {x : h.x <= 1 for all h};
    // gauge(v) = max_h h.v. Stored exact plus a double mirror.
    std::vector<Vec> facets_;
    std::vector<std::vector<double>> facetsD_;
    double coordBound_ = 1.0;
};

}  // namespace minktree
