#pragma once

#include <vector>

#include "hopfres/scalar.hpp"
#include "hopfres/unipoly.hpp"

namespace hopfres {

/// Dense matrix over Q(i), row-major. Degenerate 0xN / Nx0 shapes are
/// allowed internally (empty spaces of cochain complexes); parsed input is
/// required to be at least 1x1.
class QiMatrix {
public:
    QiMatrix() : rows_(0), cols_(0) {}
    QiMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static QiMatrix identity(size_t n);
    static QiMatrix diag(const std::vector<GaussianRational>& d);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    GaussianRational& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const GaussianRational& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    QiMatrix transpose() const;
    GaussianRational trace() const;
    bool is_zero() const;

    QiMatrix operator+(const QiMatrix& o) const;
    QiMatrix operator-(const QiMatrix& o) const;
    QiMatrix operator*(const QiMatrix& o) const;
    QiMatrix operator*(const GaussianRational& s) const;
    QiMatrix operator-() const { return *this * GaussianRational(-1); }
    bool operator==(const QiMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const QiMatrix& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    size_t rows_, cols_;
    std::vector<GaussianRational> a_;
};

struct VecQi {
    std::vector<GaussianRational> entries;
    size_t size() const { return entries.size(); }
    bool operator==(const VecQi& o) const { return entries == o.entries; }
};

struct RrefResult {
    QiMatrix R;
    size_t rank = 0;
    std::vector<size_t> pivots;
};

/// Reduced row echelon form via fraction-free (Bareiss) forward elimination
/// followed by normalization.
RrefResult rref(const QiMatrix& m);

size_t rank(const QiMatrix& m);
size_t nullity(const QiMatrix& m);

/// Basis of the right kernel {v : Mv = 0}.
std::vector<VecQi> kernel_basis(const QiMatrix& m);

QiMatrix inverse(const QiMatrix& m);

/// Monic characteristic polynomial det(xI - M), Faddeev-LeVerrier.
UniPoly char_poly(const QiMatrix& m);

/// Monic minimal polynomial, as the first linear dependency among the
/// flattened powers I, M, M^2, ...
UniPoly min_poly(const QiMatrix& m);

/// Conjugacy test via equality of the invariant factors of xI-A and xI-B
/// (Smith normal form over Q(i)[x]); for Q(i) matrices this coincides with
/// conjugacy over the algebraic closure.
bool is_similar(const QiMatrix& a, const QiMatrix& b);

std::vector<UniPoly> invariant_factors_char_matrix(const QiMatrix& m);

size_t eigenspace_dim(const QiMatrix& m, const GaussianRational& lambda);

/// Row-major flattening, so that tr(X^t Y) = flatten_row(X) . flatten_row(Y).
VecQi flatten_row(const QiMatrix& a);
QiMatrix unflatten_row(const VecQi& v, size_t n);

GaussianRational dot(const VecQi& a, const VecQi& b);
VecQi mat_vec(const QiMatrix& m, const VecQi& v);

} // namespace hopfres
