#include "gz/field.hpp"

#include <cctype>
#include <cstddef>

namespace gz {

namespace {

std::string rational_str(const Rational& q) {
    std::string s = numerator(q).str();
    s += '/';
    s += denominator(q).str();
    return s;
}

// Parses [sign] digits [ '/' digits ] starting at pos; advances pos.
Rational parse_rational(const std::string& t, size_t& pos) {
    size_t start = pos;
    if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) ++pos;
    size_t digits_begin = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos == digits_begin) throw std::invalid_argument("FieldElement parse error: '" + t + "'");
    Integer num(t.substr(start, pos - start));
    Integer den = 1;
    if (pos < t.size() && t[pos] == '/') {
        ++pos;
        size_t den_begin = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        if (pos == den_begin)
            throw std::invalid_argument("FieldElement parse error: '" + t + "'");
        den = Integer(t.substr(den_begin, pos - den_begin));
        if (den == 0) throw std::invalid_argument("FieldElement parse error: zero denominator");
    }
    return Rational(num, den);
}

}  // namespace

std::string FieldElement::str() const {
    std::string s = rational_str(a_);
    if (b_ != 0) {
        Rational babs = b_ < 0 ? Rational(-b_) : b_;
        s += (b_ < 0 ? '-' : '+');
        s += rational_str(babs);
        s += "*sqrt3";
    }
    return s;
}

FieldElement parse_field_element(const std::string& text) {
    size_t pos = 0;
    Rational a = parse_rational(text, pos);
    Rational b = 0;
    if (pos < text.size()) {
        bool neg = false;
        if (text[pos] == '+' || text[pos] == '-') {
            neg = text[pos] == '-';
            ++pos;
        } else {
            throw std::invalid_argument("FieldElement parse error: '" + text + "'");
        }
        b = parse_rational(text, pos);
        if (neg) b = -b;
        static const std::string kTail = "*sqrt3";
        if (text.compare(pos, std::string::npos, kTail) != 0)
            throw std::invalid_argument("FieldElement parse error: '" + text + "'");
        pos = text.size();
    }
    return FieldElement(std::move(a), std::move(b));
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    Integer n = numerator(q), d = denominator(q);
    Integer rn = sqrt(n), rd = sqrt(d);
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return Rational(rn, rd);
}

std::optional<FieldElement> FieldElement::sqrt() const {
    if (sign() < 0) return std::nullopt;
    // (u + v sqrt3)^2 = (u^2 + 3v^2) + 2uv sqrt3 = a + b sqrt3.
    if (b_ == 0) {
        if (auto u = rational_sqrt(a_)) return FieldElement(*u, 0);
        if (auto v = rational_sqrt(a_ / 3)) return FieldElement(0, *v);
        return std::nullopt;
    }
    // b != 0 forces u, v != 0: u^2 = (a +- sqrt(a^2 - 3 b^2))/2, v = b/(2u).
    auto disc = rational_sqrt(a_ * a_ - 3 * b_ * b_);
    if (!disc) return std::nullopt;
    for (int s : {1, -1}) {
        Rational uu = (a_ + s * *disc) / 2;
        if (auto u = rational_sqrt(uu)) {
            if (*u == 0) continue;
            Rational v = b_ / (2 * *u);
            FieldElement r(*u, v);
            if (r.sign() < 0) r = -r;
            if (r * r == *this) return r;
        }
    }
    return std::nullopt;
}

}  // namespace gz
