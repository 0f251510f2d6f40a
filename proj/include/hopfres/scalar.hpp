#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "hopfres/errors.hpp"

namespace hopfres {

/// Exact rational number. Canonical form: gcd(|num|, den) = 1, den > 0.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    static Rational from_string(std::string_view s);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }
    bool operator<=(const Rational& o) const { return q_ <= o.q_; }
    bool operator>(const Rational& o) const { return q_ > o.q_; }
    bool operator>=(const Rational& o) const { return q_ >= o.q_; }

    std::string to_string() const;

    size_t hash() const;

private:
    mpq_class q_;
};

/// Element of Q(i), the scalar field of every computation in this project.
/// Real and imaginary part are stored separately so that reality tests are
/// a single comparison.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}
    GaussianRational(const Rational& re) : re_(re) {}
    GaussianRational(const Rational& re, const Rational& im) : re_(re), im_(im) {}

    /// Parses the grammar `[-]a[/b][(+|-)c[/d]i]` (also pure-imaginary
    /// `c[/d]i`). No whitespace allowed.
    static GaussianRational from_string(std::string_view s);

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_one() const { return im_.is_zero() && re_ == Rational(1); }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inv() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re_ + o.re_, im_ + o.im_}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re_ - o.re_, im_ - o.im_}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    GaussianRational operator/(const GaussianRational& o) const { return *this * o.inv(); }
    GaussianRational& operator+=(const GaussianRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    std::string to_string() const;

    size_t hash() const;

private:
    Rational re_;
    Rational im_;
};

} // namespace hopfres
