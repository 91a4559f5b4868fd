#include "minktree/scalar.hpp"

#include <nlohmann/json.hpp>

#include <cctype>

namespace minktree {

using boost::multiprecision::cpp_int;

namespace {

cpp_int powInt(cpp_int base, unsigned exp) {
    cpp_int r = 1;
    while (exp > 0) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

Rational parseDecimal(const std::string& text) {
    size_t pos = 0;
    const size_t n = text.size();
    bool neg = false;
    if (pos < n && (text[pos] == '+' || text[pos] == '-')) {
        neg = text[pos] == '-';
        ++pos;
    }
    std::string digits;
    long fracDigits = 0;
    bool sawDigit = false;
    while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        digits += text[pos++];
        sawDigit = true;
    }
    if (pos < n && text[pos] == '.') {
        ++pos;
        while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            digits += text[pos++];
            ++fracDigits;
            sawDigit = true;
        }
    }
    long exponent = 0;
    if (pos < n && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        bool expNeg = false;
        if (pos < n && (text[pos] == '+' || text[pos] == '-')) {
            expNeg = text[pos] == '-';
            ++pos;
        }
        if (pos >= n || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("bad exponent in number: " + text);
        while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos])))
            exponent = exponent * 10 + (text[pos++] - '0');
        if (expNeg) exponent = -exponent;
    }
    if (!sawDigit || pos != n) throw ParseError("not a number: " + text);

    // strip leading zeros: cpp_int's string constructor would read them as octal
    size_t firstNonZero = digits.find_first_not_of('0');
    digits = firstNonZero == std::string::npos ? "0" : digits.substr(firstNonZero);
    cpp_int num(digits);
    if (neg) num = -num;
    long e = exponent - fracDigits;
    Rational q(num, 1);
    if (e > 0)
        q *= Rational(powInt(10, static_cast<unsigned>(e)), 1);
    else if (e < 0)
        q /= Rational(powInt(10, static_cast<unsigned>(-e)), 1);
    return q;
}

}  // namespace

Rational rationalFromString(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Rational num = parseDecimal(text.substr(0, slash));
        Rational den = parseDecimal(text.substr(slash + 1));
        if (den.is_zero()) throw ParseError("zero denominator: " + text);
        return num / den;
    }
    return parseDecimal(text);
}

std::string rationalToString(const Rational& q) {
    cpp_int num = boost::multiprecision::numerator(q);
    cpp_int den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    // Finite decimal expansion exists iff den = 2^a * 5^b; keep it short.
    cpp_int d = den;
    int twos = 0, fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d == 1 && twos <= 20 && fives <= 20) {
        int digits = std::max(twos, fives);
        cpp_int scaled = num * powInt(10, static_cast<unsigned>(digits)) / den;
        bool neg = scaled < 0;
        std::string s = (neg ? cpp_int(-scaled) : scaled).str();
        if (static_cast<long>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
        s.insert(s.size() - digits, ".");
        return (neg ? "-" : "") + s;
    }
    return num.str() + "/" + den.str();
}

std::string scalarToString(const Scalar& s) {
    if (s.exact()) return rationalToString(s.rat());
    // Shortest round-trip decimal, same as the JSON writer.
    return nlohmann::json(s.value()).dump();
}

}  // namespace minktree
