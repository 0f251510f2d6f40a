#include "hopfres/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace hopfres {

QiMatrix QiMatrix::identity(size_t n) {
    QiMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

QiMatrix QiMatrix::diag(const std::vector<GaussianRational>& d) {
    QiMatrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

QiMatrix QiMatrix::transpose() const {
    QiMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

GaussianRational QiMatrix::trace() const {
    if (!is_square()) throw DimensionMismatch("trace of non-square matrix");
    GaussianRational s;
    for (size_t i = 0; i < rows_; ++i) s += at(i, i);
    return s;
}

bool QiMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const GaussianRational& x) { return x.is_zero(); });
}

QiMatrix QiMatrix::operator+(const QiMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch();
    QiMatrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

QiMatrix QiMatrix::operator-(const QiMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch();
    QiMatrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

QiMatrix QiMatrix::operator*(const QiMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch();
    QiMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

QiMatrix QiMatrix::operator*(const GaussianRational& s) const {
    QiMatrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
}

std::string QiMatrix::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j).to_string();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) os << "[]";
    return os.str();
}

RrefResult rref(const QiMatrix& m) {
    RrefResult res;
    res.R = m;
    QiMatrix& a = res.R;
    const size_t rows = m.rows(), cols = m.cols();
    size_t r = 0;
    GaussianRational prev(1);
    // Bareiss forward elimination: a(i,j) <- (a(i,j)*pivot - a(i,c)*a(r,j)) / prev,
    // exact division at every step.
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a.at(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (size_t j = 0; j < cols; ++j) std::swap(a.at(p, j), a.at(r, j));
        const GaussianRational pivot = a.at(r, c);
        for (size_t i = r + 1; i < rows; ++i) {
            const GaussianRational f = a.at(i, c);
            for (size_t j = c + 1; j < cols; ++j)
                a.at(i, j) = (a.at(i, j) * pivot - f * a.at(r, j)) / prev;
            a.at(i, c) = GaussianRational(0);
            for (size_t j = 0; j < c; ++j) a.at(i, j) = GaussianRational(0);
        }
        prev = pivot;
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    // Back substitution to reduced form with unit pivots.
    for (size_t k = res.pivots.size(); k-- > 0;) {
        const size_t c = res.pivots[k];
        const GaussianRational inv = a.at(k, c).inv();
        for (size_t j = 0; j < cols; ++j) a.at(k, j) = a.at(k, j) * inv;
        for (size_t i = 0; i < k; ++i) {
            const GaussianRational f = a.at(i, c);
            if (f.is_zero()) continue;
            for (size_t j = 0; j < cols; ++j) a.at(i, j) = a.at(i, j) - f * a.at(k, j);
        }
    }
    return res;
}

size_t rank(const QiMatrix& m) { return rref(m).rank; }

size_t nullity(const QiMatrix& m) { return m.cols() - rank(m); }

std::vector<VecQi> kernel_basis(const QiMatrix& m) {
    RrefResult rr = rref(m);
    const size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : rr.pivots) is_pivot[c] = true;
    std::vector<VecQi> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        VecQi v;
        v.entries.assign(cols, GaussianRational(0));
        v.entries[f] = GaussianRational(1);
        for (size_t k = 0; k < rr.pivots.size(); ++k)
            v.entries[rr.pivots[k]] = -rr.R.at(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

QiMatrix inverse(const QiMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
    const size_t n = m.rows();
    QiMatrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = GaussianRational(1);
    }
    RrefResult rr = rref(aug);
    // Singular iff some pivot escapes the left block.
    if (rr.pivots.size() < n || rr.pivots[n - 1] >= n) throw SingularMatrix();
    QiMatrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = rr.R.at(i, n + j);
    return inv;
}

UniPoly char_poly(const QiMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("char_poly of non-square matrix");
    const size_t n = m.rows();
    // Faddeev-LeVerrier: M_1 = M, c_k = -tr(M_k)/k, M_{k+1} = M(M_k + c_k I).
    std::vector<GaussianRational> coeffs(n + 1);
    coeffs[n] = GaussianRational(1);
    QiMatrix mk = m;
    for (size_t k = 1; k <= n; ++k) {
        GaussianRational ck = -(mk.trace() / GaussianRational(Rational(static_cast<long>(k))));
        coeffs[n - k] = ck;
        if (k < n) {
            QiMatrix adj = mk;
            for (size_t i = 0; i < n; ++i) adj.at(i, i) += ck;
            mk = m * adj;
        }
    }
    return UniPoly(std::move(coeffs));
}

UniPoly min_poly(const QiMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("min_poly of non-square matrix");
    const size_t n = m.rows();
    std::vector<VecQi> powers;
    QiMatrix p = QiMatrix::identity(n);
    powers.push_back(flatten_row(p));
    for (size_t k = 1; k <= n; ++k) {
        p = p * m;
        powers.push_back(flatten_row(p));
        // Columns are I, M, ..., M^k; the first dependency gives the minimal
        // polynomial.
        QiMatrix cols(n * n, k + 1);
        for (size_t c = 0; c <= k; ++c)
            for (size_t r = 0; r < n * n; ++r) cols.at(r, c) = powers[c].entries[r];
        std::vector<VecQi> ker = kernel_basis(cols);
        for (const VecQi& v : ker) {
            if (v.entries[k].is_zero()) continue;
            std::vector<GaussianRational> cs(v.entries.begin(), v.entries.begin() + k + 1);
            return UniPoly(std::move(cs)).monic();
        }
    }
    throw Error("min_poly: no dependency found (unreachable by Cayley-Hamilton)");
}

namespace {

using PolyMat = std::vector<std::vector<UniPoly>>;

// Smith normal form over Q(i)[x]: returns the diagonal (monic, sorted by
// the divisibility chain, constants normalized to 1).
std::vector<UniPoly> smith_diagonal(PolyMat a) {
    const size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<UniPoly> diag;
    size_t t = 0;
    while (t < rows && t < cols) {
        // Find the entry of minimal degree in the remaining block.
        size_t bi = t, bj = t;
        int best = -1;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (!a[i][j].is_zero() && (best < 0 || a[i][j].degree() < best)) {
                    best = a[i][j].degree();
                    bi = i;
                    bj = j;
                }
        if (best < 0) break;
        std::swap(a[t], a[bi]);
        for (size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][bj]);

        bool clean = true;
        for (size_t i = t + 1; i < rows; ++i) {
            if (a[i][t].is_zero()) continue;
            auto [q, r] = UniPoly::divmod(a[i][t], a[t][t]);
            for (size_t j = t; j < cols; ++j) a[i][j] = a[i][j] - q * a[t][j];
            if (!r.is_zero()) clean = false;
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (a[t][j].is_zero()) continue;
            auto [q, r] = UniPoly::divmod(a[t][j], a[t][t]);
            for (size_t i = t; i < rows; ++i) a[i][j] = a[i][j] - a[i][t] * q;
            if (!r.is_zero()) clean = false;
        }
        if (!clean) continue;  // pivot degree dropped somewhere, redo the step

        // Pivot must divide the rest of the block for the invariant-factor chain.
        bool divides_all = true;
        for (size_t i = t + 1; i < rows && divides_all; ++i)
            for (size_t j = t + 1; j < cols && divides_all; ++j) {
                if (a[i][j].is_zero()) continue;
                if (!UniPoly::divmod(a[i][j], a[t][t]).second.is_zero()) {
                    for (size_t c = t; c < cols; ++c) a[t][c] = a[t][c] + a[i][c];
                    divides_all = false;
                }
            }
        if (!divides_all) continue;
        diag.push_back(a[t][t].monic());
        ++t;
    }
    return diag;
}

} // namespace

std::vector<UniPoly> invariant_factors_char_matrix(const QiMatrix& m) {
    const size_t n = m.rows();
    PolyMat a(n, std::vector<UniPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<GaussianRational> c{-m.at(i, j)};
            if (i == j) c.push_back(GaussianRational(1));
            a[i][j] = UniPoly(std::move(c));
        }
    std::vector<UniPoly> d = smith_diagonal(std::move(a));
    // Drop unit factors; what remains are the nontrivial invariant factors.
    std::vector<UniPoly> out;
    for (UniPoly& f : d)
        if (f.degree() > 0) out.push_back(std::move(f));
    return out;
}

bool is_similar(const QiMatrix& a, const QiMatrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw DimensionMismatch("is_similar requires square matrices of equal size");
    return invariant_factors_char_matrix(a) == invariant_factors_char_matrix(b);
}

size_t eigenspace_dim(const QiMatrix& m, const GaussianRational& lambda) {
    if (!m.is_square()) throw DimensionMismatch("eigenspace_dim of non-square matrix");
    QiMatrix shifted = m;
    for (size_t i = 0; i < m.rows(); ++i) shifted.at(i, i) -= lambda;
    return nullity(shifted);
}

VecQi flatten_row(const QiMatrix& a) {
    VecQi v;
    v.entries.reserve(a.rows() * a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) v.entries.push_back(a.at(i, j));
    return v;
}

QiMatrix unflatten_row(const VecQi& v, size_t n) {
    if (v.entries.size() != n * n) throw LengthMismatch();
    QiMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m.at(i, j) = v.entries[i * n + j];
    return m;
}

GaussianRational dot(const VecQi& a, const VecQi& b) {
    if (a.size() != b.size()) throw LengthMismatch();
    GaussianRational s;
    for (size_t k = 0; k < a.size(); ++k) s += a.entries[k] * b.entries[k];
    return s;
}

VecQi mat_vec(const QiMatrix& m, const VecQi& v) {
    if (m.cols() != v.size()) throw DimensionMismatch();
    VecQi r;
    r.entries.assign(m.rows(), GaussianRational(0));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r.entries[i] += m.at(i, j) * v.entries[j];
    return r;
}

} // namespace hopfres
