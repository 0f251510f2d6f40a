#include "hopfres/scalar.hpp"

#include <cctype>

namespace hopfres {

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return Rational(mpq_class(q_ / o.q_));
}

std::string Rational::to_string() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

size_t Rational::hash() const {
    size_t h = std::hash<std::string>{}(q_.get_num().get_str());
    h ^= std::hash<std::string>{}(q_.get_den().get_str()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

Rational Rational::from_string(std::string_view s) {
    GaussianRational g = GaussianRational::from_string(s);
    if (!g.is_real()) throw ParseError("expected a real rational: " + std::string(s));
    return g.re();
}

GaussianRational GaussianRational::inv() const {
    Rational n = norm();
    if (n.is_zero()) throw DivisionByZero();
    return {re_ / n, -(im_ / n)};
}

namespace {

// Reads `digits[/digits]` starting at pos; returns the (nonnegative) value.
Rational parse_unsigned_rational(std::string_view s, size_t& pos) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected digits in scalar: " + std::string(s));
    mpz_class num(std::string(s.substr(start, pos - start)), 10);
    mpz_class den(1);
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) throw ParseError("expected denominator digits: " + std::string(s));
        den = mpz_class(std::string(s.substr(dstart, pos - dstart)), 10);
        if (den == 0) throw ParseError("zero denominator: " + std::string(s));
    }
    return Rational(mpq_class(num, den));
}

} // namespace

GaussianRational GaussianRational::from_string(std::string_view s) {
    if (s.empty()) throw ParseError("empty scalar");
    size_t pos = 0;
    bool neg = false;
    if (s[pos] == '-') {
        neg = true;
        ++pos;
    }
    Rational first = parse_unsigned_rational(s, pos);
    if (neg) first = -first;
    if (pos == s.size()) return GaussianRational(first);
    if (s[pos] == 'i') {
        ++pos;
        if (pos != s.size()) throw ParseError("trailing characters in scalar: " + std::string(s));
        return GaussianRational(Rational(0), first);
    }
    if (s[pos] != '+' && s[pos] != '-') throw ParseError("malformed scalar: " + std::string(s));
    bool ineg = (s[pos] == '-');
    ++pos;
    Rational second = parse_unsigned_rational(s, pos);
    if (ineg) second = -second;
    if (pos == s.size() || s[pos] != 'i' || pos + 1 != s.size())
        throw ParseError("malformed imaginary part in scalar: " + std::string(s));
    return GaussianRational(first, second);
}

std::string GaussianRational::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    if (re_.is_zero()) return im_.to_string() + "i";
    if (im_.sign() > 0) return re_.to_string() + "+" + im_.to_string() + "i";
    return re_.to_string() + im_.to_string() + "i";
}

size_t GaussianRational::hash() const {
    size_t h = re_.hash();
    h ^= im_.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

} // namespace hopfres
