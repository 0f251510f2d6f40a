#include "hopfres/unipoly.hpp"

#include <algorithm>

namespace hopfres {

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const GaussianRational& a) {
    return UniPoly(std::vector<GaussianRational>{a});
}

UniPoly UniPoly::x() {
    return UniPoly({GaussianRational(0), GaussianRational(1)});
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<GaussianRational> r(std::max(c_.size(), o.c_.size()));
    for (size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) + o.coeff(k);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<GaussianRational> r(std::max(c_.size(), o.c_.size()));
    for (size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) - o.coeff(k);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<GaussianRational> r(c_.size() + o.c_.size() - 1);
    for (size_t a = 0; a < c_.size(); ++a)
        for (size_t b = 0; b < o.c_.size(); ++b) r[a + b] += c_[a] * o.c_[b];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const GaussianRational& s) const {
    std::vector<GaussianRational> r(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) r[k] = c_[k] * s;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-() const {
    return *this * GaussianRational(-1);
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    UniPoly rem = a;
    std::vector<GaussianRational> quo(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
    GaussianRational lead_inv = b.leading().inv();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        GaussianRational f = rem.leading() * lead_inv;
        quo[shift] = f;
        std::vector<GaussianRational> sub(shift + b.c_.size());
        for (size_t k = 0; k < b.c_.size(); ++k) sub[shift + k] = b.c_[k] * f;
        rem = rem - UniPoly(std::move(sub));
    }
    return {UniPoly(std::move(quo)), rem};
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<GaussianRational> r(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * GaussianRational(Rational(static_cast<long>(k)));
    return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) throw ZeroPolynomial();
    return *this * leading().inv();
}

GaussianRational UniPoly::eval(const GaussianRational& z) const {
    GaussianRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        if (c_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c_[k].to_string() + ")";
        if (k >= 1) out += "*x";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

UniPoly poly_gcd(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() && q.is_zero()) throw BothZero();
    UniPoly a = p, b = q;
    while (!b.is_zero()) {
        UniPoly r = UniPoly::divmod(a, b).second;
        a = b;
        b = r.is_zero() ? r : r.monic();  // monic remainders keep coefficients small
    }
    return a.monic();
}

bool is_squarefree(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    if (p.degree() == 0) return true;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

} // namespace hopfres
