#ifndef GZ_FIELD_HPP
#define GZ_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

namespace gz {

using Integer = boost::multiprecision::cpp_int;
// Arbitrary-precision rational, kept in lowest terms with positive
// denominator by the backend.
using Rational = boost::multiprecision::cpp_rational;

/// An element a + b*sqrt(3) of the real quadratic field Q(sqrt 3).
///
/// sqrt(3) is irrational, so the pair (a, b) is uniquely determined and
/// equality is component-wise.  The ordering is the ordering of the real
/// number a + b*sqrt(3), decided exactly by comparing a^2 against 3 b^2.
class FieldElement {
public:
    FieldElement() : a_(0), b_(0) {}
    FieldElement(long n) : a_(n), b_(0) {}  // NOLINT: implicit on purpose
    explicit FieldElement(Rational a) : a_(std::move(a)), b_(0) {}
    FieldElement(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    /// c * sqrt(3)
    static FieldElement sqrt3(const Rational& c = 1) { return FieldElement(0, c); }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt3_part() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    FieldElement operator-() const { return FieldElement(-a_, -b_); }

    FieldElement& operator+=(const FieldElement& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    FieldElement& operator-=(const FieldElement& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    FieldElement& operator*=(const FieldElement& o) {
        // (a + b s)(c + d s) = (ac + 3bd) + (ad + bc) s,  s^2 = 3
        Rational a = a_ * o.a_ + 3 * (b_ * o.b_);
        Rational b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

    friend FieldElement operator+(FieldElement x, const FieldElement& y) { return x += y; }
    friend FieldElement operator-(FieldElement x, const FieldElement& y) { return x -= y; }
    friend FieldElement operator*(FieldElement x, const FieldElement& y) { return x *= y; }
    friend FieldElement operator/(FieldElement x, const FieldElement& y) { return x /= y; }

    /// Multiplicative inverse; (a + b s)^-1 = (a - b s)/(a^2 - 3 b^2).
    FieldElement inverse() const {
        Rational n = a_ * a_ - 3 * (b_ * b_);
        if (n == 0) throw std::domain_error("FieldElement: division by zero");
        return FieldElement(a_ / n, -b_ / n);
    }

    /// Exact sign of the real number a + b*sqrt(3): -1, 0 or +1.
    int sign() const {
        int sa = a_ == 0 ? 0 : (a_ > 0 ? 1 : -1);
        int sb = b_ == 0 ? 0 : (b_ > 0 ? 1 : -1);
        if (sa == sb) return sa;
        if (sa == 0) return sb;
        if (sb == 0) return sa;
        // Opposite signs: |a| vs |b| sqrt(3) decided by a^2 vs 3 b^2.
        Rational aa = a_ * a_, bb = 3 * (b_ * b_);
        if (aa == bb) return 0;  // only possible at a = b = 0, handled above
        return aa > bb ? sa : sb;
    }

    friend bool operator==(const FieldElement& x, const FieldElement& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend std::strong_ordering operator<=>(const FieldElement& x, const FieldElement& y) {
        int s = (x - y).sign();
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Nearest double; error at most a few ulp (each conversion and the
    /// final fma-free evaluation round once).
    double to_double() const {
        return a_.convert_to<double>() + b_.convert_to<double>() * 1.7320508075688772935;
    }

    /// Canonical text form: "p/q" or "p/q+r/s*sqrt3" / "p/q-r/s*sqrt3".
    std::string str() const;

    /// Exact square root in Q(sqrt 3) when one exists.
    std::optional<FieldElement> sqrt() const;

private:
    Rational a_, b_;
};

inline int sign(const FieldElement& x) { return x.sign(); }
inline double to_double(const FieldElement& x) { return x.to_double(); }
inline FieldElement abs(const FieldElement& x) { return x.sign() < 0 ? -x : x; }

/// Parses the text form produced by FieldElement::str().  Accepts "p",
/// "p/q", optionally followed by "+r/s*sqrt3" or "-r/s*sqrt3" (the inner
/// numerator may also carry its own sign).  Whitespace is not allowed.
FieldElement parse_field_element(const std::string& text);

/// Exact square root of a non-negative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace gz

#endif
