#pragma once

#include <utility>
#include <vector>

#include "hopfres/scalar.hpp"

namespace hopfres {

/// Univariate polynomial over Q(i), coefficients lowest degree first.
/// The zero polynomial has an empty coefficient list; otherwise the leading
/// coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const GaussianRational& a);
    static UniPoly x();

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<GaussianRational>& coeffs() const { return c_; }
    GaussianRational coeff(size_t k) const { return k < c_.size() ? c_[k] : GaussianRational(); }
    const GaussianRational& leading() const { return c_.back(); }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const GaussianRational& s) const;
    UniPoly operator-() const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

    /// Euclidean division; divisor must be nonzero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

    UniPoly derivative() const;
    UniPoly monic() const;

    GaussianRational eval(const GaussianRational& z) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<GaussianRational> c_;
};

/// Monic gcd; BothZero if both inputs vanish.
UniPoly poly_gcd(const UniPoly& p, const UniPoly& q);

/// True iff gcd(p, p') is constant. ZeroPolynomial for p = 0.
bool is_squarefree(const UniPoly& p);

} // namespace hopfres
