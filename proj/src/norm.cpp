#include "minktree/norm.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <functional>
#include <limits>
#include <set>

namespace minktree {

namespace {

// Solves A x = b over the rationals; nullopt when A is singular.
std::optional<std::vector<Rational>> solveLinear(std::vector<std::vector<Rational>> a,
                                                 std::vector<Rational> b) {
    const size_t n = b.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rational f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

int rankRational(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            Rational f = m[r][col] / m[rank][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

int compareRationalVec(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    return 0;
}

std::vector<Rational> vecToRational(const Vec& v) {
    std::vector<Rational> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i].rat();
    return r;
}

// Minimal exact parser for the poly:[[x,y],...] payload. Numbers may be
// integers, decimals, or fractions; whitespace is ignored.
std::vector<Vec> parseVertexList(const std::string& text) {
    size_t pos = 0;
    auto skipWs = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skipWs();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("poly spec: expected '") + c + "'");
        ++pos;
    };
    auto parseNumber = [&]() -> Rational {
        skipWs();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '+' ||
                text[pos] == '-' || text[pos] == '.' || text[pos] == 'e' || text[pos] == 'E' ||
                text[pos] == '/'))
            ++pos;
        if (start == pos) throw ParseError("poly spec: expected a number");
        return rationalFromString(text.substr(start, pos - start));
    };

    std::vector<Vec> vertices;
    expect('[');
    skipWs();
    while (true) {
        expect('[');
        Vec v;
        while (true) {
            v.push_back(Scalar(parseNumber()));
            skipWs();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            break;
        }
        expect(']');
        vertices.push_back(std::move(v));
        skipWs();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    expect(']');
    skipWs();
    if (pos != text.size()) throw ParseError("poly spec: trailing characters");
    return vertices;
}

}  // namespace

Norm Norm::lp(double p, int dim) {
    if (dim < 1) throw std::invalid_argument("norm dimension must be positive");
    if (std::isinf(p)) return linf(dim);
    if (!(p >= 1.0)) throw std::invalid_argument("lp norm requires p >= 1");
    if (p == 1.0) return l1(dim);
    if (p == 2.0) return l2(dim);
    Norm n(NormKind::Lp, dim, p);
    return n;
}

Norm Norm::polyhedral(std::vector<Vec> vertices) {
    if (vertices.empty()) throw std::invalid_argument("polyhedral norm needs vertices");
    const int d = static_cast<int>(vertices[0].size());
    if (d < 1 || d > 4)
        throw UnsupportedError("polyhedral gauge supports dimensions 1..4");
    std::vector<std::vector<Rational>> verts;
    for (const auto& v : vertices) {
        if (static_cast<int>(v.size()) != d)
            throw std::invalid_argument("polyhedral vertices have mixed dimensions");
        if (!vecExact(v))
            throw std::invalid_argument("polyhedral vertices must be exact rationals");
        verts.push_back(vecToRational(v));
    }
    std::sort(verts.begin(), verts.end(),
              [](const auto& a, const auto& b) { return compareRationalVec(a, b) < 0; });
    verts.erase(std::unique(verts.begin(), verts.end(),
                            [](const auto& a, const auto& b) { return compareRationalVec(a, b) == 0; }),
                verts.end());

    for (const auto& v : verts) {
        std::vector<Rational> neg(v.size());
        bool zero = true;
        for (size_t i = 0; i < v.size(); ++i) {
            neg[i] = -v[i];
            if (!v[i].is_zero()) zero = false;
        }
        if (zero) continue;
        if (!std::binary_search(verts.begin(), verts.end(), neg, [](const auto& a, const auto& b) {
                return compareRationalVec(a, b) < 0;
            }))
            throw InvalidInstanceError("polyhedral vertex set is not centrally symmetric");
    }
    if (rankRational(verts) != d)
        throw InvalidInstanceError("polyhedral vertices do not span the space");

    // Supporting functionals: every facet contains d affinely independent
    // vertices, so brute-force all d-subsets, solve h.v_i = 1, and keep h
    // when no vertex lies strictly outside.
    const size_t m = verts.size();
    std::set<std::vector<Rational>, decltype([](const auto& a, const auto& b) {
                 return compareRationalVec(a, b) < 0;
             })>
        facetSet;
    std::vector<size_t> idx(d);
    std::function<void(size_t, size_t)> rec = [&](size_t start, size_t depth) {
        if (depth == static_cast<size_t>(d)) {
            std::vector<std::vector<Rational>> a(d);
            for (int r = 0; r < d; ++r) a[r] = verts[idx[r]];
            auto h = solveLinear(a, std::vector<Rational>(d, Rational(1)));
            if (!h) return;
            for (const auto& v : verts) {
                Rational dot = 0;
                for (int c = 0; c < d; ++c) dot += (*h)[c] * v[c];
                if (dot > 1) return;
            }
            facetSet.insert(*h);
            return;
        }
        for (size_t i = start; i + (d - depth) <= m; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    if (facetSet.empty()) throw InvalidInstanceError("polyhedral vertex set yields no facets");

    Norm n(NormKind::Poly, d, 0.0);
    for (const auto& v : verts) {
        Vec sv(d);
        for (int i = 0; i < d; ++i) sv[i] = Scalar(v[i]);
        n.polyVertices_.push_back(std::move(sv));
    }
    double bound = 0;
    for (const auto& v : n.polyVertices_)
        for (const auto& c : v) bound = std::max(bound, std::fabs(c.value()));
    n.coordBound_ = bound;
    for (const auto& h : facetSet) {
        Vec f(d);
        std::vector<double> fd(d);
        for (int i = 0; i < d; ++i) {
            f[i] = Scalar(h[i]);
            fd[i] = h[i].convert_to<double>();
        }
        n.facets_.push_back(std::move(f));
        n.facetsD_.push_back(std::move(fd));
    }
    return n;
}

Norm Norm::parse(const std::string& spec, int dim) {
    if (spec == "l1") return l1(dim);
    if (spec == "l2") return l2(dim);
    if (spec == "linf") return linf(dim);
    if (spec.rfind("lp:", 0) == 0) {
        const std::string arg = spec.substr(3);
        double p;
        if (arg == "inf") {
            p = std::numeric_limits<double>::infinity();
        } else {
            try {
                size_t used = 0;
                p = std::stod(arg, &used);
                if (used != arg.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError("bad lp norm spec: " + spec);
            }
        }
        if (!(p >= 1.0)) throw ParseError("lp norm requires p >= 1: " + spec);
        return lp(p, dim);
    }
    if (spec.rfind("poly:", 0) == 0) {
        Norm n = polyhedral(parseVertexList(spec.substr(5)));
        if (dim != 0 && dim != n.dim())
            throw InvalidInstanceError("polyhedral norm dimension disagrees with instance");
        return n;
    }
    throw ParseError("unknown norm spec: " + spec);
}

std::string Norm::specString() const {
    switch (kind_) {
        case NormKind::L1:
            return "l1";
        case NormKind::L2:
            return "l2";
        case NormKind::Linf:
            return "linf";
        case NormKind::Lp: {
            std::string p = std::to_string(p_);
            while (p.size() > 1 && p.back() == '0') p.pop_back();
            if (!p.empty() && p.back() == '.') p.pop_back();
            return "lp:" + p;
        }
        case NormKind::Poly: {
            std::string s = "poly:[";
            for (size_t i = 0; i < polyVertices_.size(); ++i) {
                if (i) s += ",";
                s += "[";
                for (size_t j = 0; j < polyVertices_[i].size(); ++j) {
                    if (j) s += ",";
                    s += rationalToString(polyVertices_[i][j].rat());
                }
                s += "]";
            }
            return s + "]";
        }
    }
    return "?";
}

void Norm::checkDim(size_t n) const {
    if (static_cast<int>(n) != dim_)
        throw std::invalid_argument("vector dimension does not match norm dimension");
}

Scalar Norm::eval(const Vec& v) const {
    checkDim(v.size());
    switch (kind_) {
        case NormKind::L1: {
            Scalar s(0);
            for (const auto& x : v) s += x.abs();
            return s;
        }
        case NormKind::Linf: {
            Scalar best(0);
            for (const auto& x : v) {
                Scalar a = x.abs();
                if (Scalar::compare(a, best) > 0) best = a;
            }
            return best;
        }
        case NormKind::Poly: {
            // max over facet functionals; >= 0 since facets come in +- pairs
            Scalar best(0);
            for (const auto& h : facets_) {
                Scalar dot(0);
                for (size_t i = 0; i < h.size(); ++i) dot += h[i] * v[i];
                if (Scalar::compare(dot, best) > 0) best = dot;
            }
            return best;
        }
        case NormKind::L2:
        case NormKind::Lp: {
            std::vector<double> d = vecToDouble(v);
            return Scalar(evalD(d));
        }
    }
    throw std::logic_error("unreachable");
}

double Norm::evalD(std::span<const double> v) const {
    checkDim(v.size());
    switch (kind_) {
        case NormKind::L1: {
            double s = 0;
            for (double x : v) s += std::fabs(x);
            return s;
        }
        case NormKind::L2: {
            double s = 0;
            for (double x : v) s += x * x;
            return std::sqrt(s);
        }
        case NormKind::Linf: {
            double s = 0;
            for (double x : v) s = std::max(s, std::fabs(x));
            return s;
        }
        case NormKind::Lp: {
            double s = 0;
            for (double x : v) s += std::pow(std::fabs(x), p_);
            return std::pow(s, 1.0 / p_);
        }
        case NormKind::Poly: {
            double best = 0;
            for (const auto& h : facetsD_) {
                double dot = 0;
                for (size_t i = 0; i < h.size(); ++i) dot += h[i] * v[i];
                best = std::max(best, dot);
            }
            return best;
        }
    }
    throw std::logic_error("unreachable");
}

Vec Norm::normalize(const Vec& v) const {
    if (vecIsZero(v)) throw std::invalid_argument("cannot normalize the zero vector");
    Scalar len = eval(v);
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / len;
    return r;
}

std::vector<double> Norm::normalizeD(std::span<const double> v) const {
    double len = evalD(v);
    if (len == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
    std::vector<double> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / len;
    return r;
}

double Norm::coordinateBound() const {
    return kind_ == NormKind::Poly ? coordBound_ : 1.0;
}

std::vector<std::array<double, 2>> Norm::unitCircle2d(int samples) const {
    if (dim_ != 2) throw UnsupportedError("unit ball outline requires dimension 2");
    std::vector<std::array<double, 2>> pts;
    switch (kind_) {
        case NormKind::L1:
            pts = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
            break;
        case NormKind::Linf:
            pts = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
            break;
        case NormKind::Poly: {
            for (const auto& v : polyVertices_) pts.push_back({v[0].value(), v[1].value()});
            // boundary order
            std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
                return std::atan2(a[1], a[0]) < std::atan2(b[1], b[0]);
            });
            break;
        }
        case NormKind::L2:
        case NormKind::Lp: {
            for (int i = 0; i < samples; ++i) {
                double t = 2.0 * M_PI * i / samples;
                std::array<double, 2> u{std::cos(t), std::sin(t)};
                double len = evalD(std::span<const double>(u.data(), 2));
                pts.push_back({u[0] / len, u[1] / len});
            }
            break;
        }
    }
    pts.push_back(pts.front());
    return pts;
}

}  // namespace minktree
