#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace minktree {

using Rational = boost::multiprecision::cpp_rational;

// Comparison tolerance on the floating path.
inline constexpr double kDefaultTol = 1e-9;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidInstanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A number that is either an exact rational or a double. Arithmetic stays
/// exact as long as both operands are exact; anything touching a floating
/// value (or an irrational function like sqrt) drops to doubles.
class Scalar {
  public:
    Scalar() : exact_(true), q_(0), f_(0) {}
    Scalar(int v) : exact_(true), q_(v), f_(static_cast<double>(v)) {}
    Scalar(long long v) : exact_(true), q_(v), f_(static_cast<double>(v)) {}
    Scalar(double v) : exact_(false), q_(0), f_(v) {}
    Scalar(const Rational& q) : exact_(true), q_(q), f_(q.convert_to<double>()) {}

    bool exact() const { return exact_; }
    /// Double approximation (exact value when not exact()).
    double value() const { return f_; }
    const Rational& rat() const {
        if (!exact_) throw std::logic_error("Scalar: rat() on floating value");
        return q_;
    }

    bool isZero() const { return exact_ ? q_.is_zero() : f_ == 0.0; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) return Scalar(Rational(a.q_ + b.q_));
        return Scalar(a.f_ + b.f_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) return Scalar(Rational(a.q_ - b.q_));
        return Scalar(a.f_ - b.f_);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) return Scalar(Rational(a.q_ * b.q_));
        return Scalar(a.f_ * b.f_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.isZero()) throw std::domain_error("Scalar: division by zero");
        if (a.exact_ && b.exact_) return Scalar(Rational(a.q_ / b.q_));
        return Scalar(a.f_ / b.f_);
    }
    Scalar operator-() const {
        if (exact_) return Scalar(Rational(-q_));
        return Scalar(-f_);
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }

    Scalar abs() const {
        if (exact_) return q_ < 0 ? Scalar(Rational(-q_)) : *this;
        return Scalar(std::fabs(f_));
    }

    /// Exact three-way compare when both sides are exact, double compare
    /// otherwise. Used for sorting; tolerance-aware grouping is separate.
    static int compare(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) {
            if (a.q_ < b.q_) return -1;
            if (a.q_ > b.q_) return 1;
            return 0;
        }
        if (a.f_ < b.f_) return -1;
        if (a.f_ > b.f_) return 1;
        return 0;
    }

    static bool less(const Scalar& a, const Scalar& b) { return compare(a, b) < 0; }

    /// Equality up to tol on the floating path, exact equality otherwise.
    static bool approxEqual(const Scalar& a, const Scalar& b, double tol = kDefaultTol) {
        if (a.exact_ && b.exact_) return a.q_ == b.q_;
        return std::fabs(a.f_ - b.f_) <= tol;
    }
    static bool approxLessEqual(const Scalar& a, const Scalar& b, double tol = kDefaultTol) {
        if (a.exact_ && b.exact_) return a.q_ <= b.q_;
        return a.f_ <= b.f_ + tol;
    }

    friend Scalar sqrt(const Scalar& a) { return Scalar(std::sqrt(a.value())); }

  private:
    bool exact_;
    Rational q_;
    double f_;
};

using Vec = std::vector<Scalar>;

inline Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline Vec operator*(const Scalar& c, const Vec& v) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}
inline bool vecIsZero(const Vec& v) {
    for (const auto& x : v)
        if (!x.isZero()) return false;
    return true;
}
inline bool vecExact(const Vec& v) {
    for (const auto& x : v)
        if (!x.exact()) return false;
    return true;
}
inline std::vector<double> vecToDouble(const Vec& v) {
    std::vector<double> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i].value();
    return r;
}
inline bool vecEqual(const Vec& a, const Vec& b, double tol = kDefaultTol) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!Scalar::approxEqual(a[i], b[i], tol)) return false;
    return true;
}

/// Parses "p/q", integer, or decimal text (optional exponent) to an exact
/// rational. Throws ParseError on malformed input.
Rational rationalFromString(const std::string& text);

/// Canonical text form: integers plain, finite decimals as decimals,
/// everything else as "p/q". rationalFromString round-trips all three.
std::string rationalToString(const Rational& q);

std::string scalarToString(const Scalar& s);

}  // namespace minktree
