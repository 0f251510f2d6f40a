#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfres/matrix.hpp"

using namespace hopfres;

namespace {

QiMatrix mat(size_t r, size_t c, std::initializer_list<long> vals) {
    QiMatrix m(r, c);
    auto it = vals.begin();
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.at(i, j) = GaussianRational(*it++);
    return m;
}

QiMatrix random_matrix(std::mt19937_64& rng, size_t r, size_t c, long lo = -4, long hi = 4) {
    std::uniform_int_distribution<long> d(lo, hi);
    QiMatrix m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j)
            m.at(i, j) = GaussianRational(Rational(d(rng)), Rational(d(rng)));
    return m;
}

QiMatrix random_invertible(std::mt19937_64& rng, size_t n) {
    for (;;) {
        QiMatrix m = random_matrix(rng, n, n);
        try {
            inverse(m);
            return m;
        } catch (const SingularMatrix&) {
        }
    }
}

// Independent rank oracle: largest k with a nonzero k x k minor, determinants
// by Laplace expansion.
GaussianRational laplace_det(const QiMatrix& m) {
    const size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    GaussianRational det;
    for (size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        QiMatrix minor(n - 1, n - 1);
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        GaussianRational term = m.at(0, j) * laplace_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

size_t rank_by_minors(const QiMatrix& m) {
    const size_t maxk = std::min(m.rows(), m.cols());
    size_t best = 0;
    std::vector<size_t> rsel, csel;
    // enumerate all square submatrices (matrices here are tiny)
    for (size_t k = 1; k <= maxk; ++k) {
        std::vector<size_t> rows(k), cols(k);
        std::function<bool(size_t, size_t)> pick_rows = [&](size_t idx, size_t from) -> bool {
            if (idx == k) {
                std::function<bool(size_t, size_t)> pick_cols = [&](size_t cidx,
                                                                     size_t cfrom) -> bool {
                    if (cidx == k) {
                        QiMatrix sub(k, k);
                        for (size_t a = 0; a < k; ++a)
                            for (size_t b = 0; b < k; ++b) sub.at(a, b) = m.at(rows[a], cols[b]);
                        return !laplace_det(sub).is_zero();
                    }
                    for (size_t c = cfrom; c < m.cols(); ++c) {
                        cols[cidx] = c;
                        if (pick_cols(cidx + 1, c + 1)) return true;
                    }
                    return false;
                };
                return pick_cols(0, 0);
            }
            for (size_t r = from; r < m.rows(); ++r) {
                rows[idx] = r;
                if (pick_rows(idx + 1, r + 1)) return true;
            }
            return false;
        };
        if (pick_rows(0, 0)) best = k;
    }
    return best;
}

} // namespace

TEST_CASE("rref: worked examples") {
    RrefResult r = rref(QiMatrix::identity(3));
    CHECK(r.rank == 3);
    CHECK(r.pivots == std::vector<size_t>{0, 1, 2});
    CHECK(r.R == QiMatrix::identity(3));
    CHECK(rank(mat(2, 2, {1, 2, 2, 4})) == 1);
    CHECK(rank(QiMatrix(2, 2)) == 0);
}

TEST_CASE("kernel_basis: worked examples") {
    CHECK(kernel_basis(QiMatrix::identity(2)).empty());

    auto b = kernel_basis(mat(1, 2, {1, 1}));
    REQUIRE(b.size() == 1);
    // spans (1, -1)
    CHECK(b[0].entries[0] * GaussianRational(-1) == b[0].entries[1]);

    QiMatrix m = mat(2, 2, {1, 2, 2, 4});
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    for (const auto& e : mat_vec(m, k[0]).entries) CHECK(e.is_zero());
}

TEST_CASE("inverse: worked examples") {
    QiMatrix d(3, 3);
    d.at(0, 0) = GaussianRational(Rational(1, 2));
    d.at(1, 1) = GaussianRational(1);
    d.at(2, 2) = GaussianRational(2);
    QiMatrix di = inverse(d);
    CHECK(di.at(0, 0) == GaussianRational(2));
    CHECK(di.at(1, 1) == GaussianRational(1));
    CHECK(di.at(2, 2) == GaussianRational(Rational(1, 2)));

    CHECK(inverse(mat(2, 2, {0, 1, -1, 0})) == mat(2, 2, {0, -1, 1, 0}));
    CHECK_THROWS_AS(inverse(mat(2, 2, {1, 1, 1, 1})), SingularMatrix);
}

TEST_CASE("char_poly: worked examples") {
    // I2 -> (x-1)^2 = x^2 - 2x + 1
    UniPoly p = char_poly(QiMatrix::identity(2));
    CHECK(p == UniPoly({GaussianRational(1), GaussianRational(-2), GaussianRational(1)}));
    // diag(1,2) -> x^2 - 3x + 2
    QiMatrix d(2, 2);
    d.at(0, 0) = GaussianRational(1);
    d.at(1, 1) = GaussianRational(2);
    CHECK(char_poly(d) ==
          UniPoly({GaussianRational(2), GaussianRational(-3), GaussianRational(1)}));
    // [[0,1],[-1,0]] -> x^2 + 1
    CHECK(char_poly(mat(2, 2, {0, 1, -1, 0})) ==
          UniPoly({GaussianRational(1), GaussianRational(0), GaussianRational(1)}));
}

TEST_CASE("min_poly: worked examples") {
    CHECK(min_poly(QiMatrix::identity(3)) == UniPoly({GaussianRational(-1), GaussianRational(1)}));
    QiMatrix d(3, 3);
    d.at(0, 0) = GaussianRational(1);
    d.at(1, 1) = GaussianRational(1);
    d.at(2, 2) = GaussianRational(2);
    CHECK(min_poly(d) ==
          UniPoly({GaussianRational(2), GaussianRational(-3), GaussianRational(1)}));
    CHECK(min_poly(mat(2, 2, {0, 1, 0, 0})) ==
          UniPoly({GaussianRational(0), GaussianRational(0), GaussianRational(1)}));
}

TEST_CASE("is_similar: worked examples") {
    QiMatrix d12(2, 2);
    d12.at(0, 0) = GaussianRational(1);
    d12.at(1, 1) = GaussianRational(2);
    CHECK(is_similar(d12, mat(2, 2, {1, 1, 0, 2})));

    QiMatrix d22 = QiMatrix::identity(2) * GaussianRational(2);
    QiMatrix dhalf = QiMatrix::identity(2) * GaussianRational(Rational(1, 2));
    CHECK_FALSE(is_similar(d22, dhalf));
    CHECK(is_similar(d12, d12));
    CHECK_THROWS_AS(is_similar(QiMatrix::identity(2), QiMatrix::identity(3)), DimensionMismatch);
}

TEST_CASE("eigenspace_dim: worked examples") {
    CHECK(eigenspace_dim(-QiMatrix::identity(2), GaussianRational(-1)) == 2);
    CHECK(eigenspace_dim(QiMatrix::identity(2), GaussianRational(-1)) == 0);
    QiMatrix d(3, 3);
    d.at(0, 0) = GaussianRational(-1);
    d.at(1, 1) = GaussianRational(1);
    d.at(2, 2) = GaussianRational(-1);
    CHECK(eigenspace_dim(d, GaussianRational(-1)) == 2);
}

TEST_CASE("flatten_row conventions") {
    QiMatrix a = mat(2, 2, {1, 2, 3, 4});
    VecQi v = flatten_row(a);
    CHECK(v.entries == std::vector<GaussianRational>{GaussianRational(1), GaussianRational(2),
                                                     GaussianRational(3), GaussianRational(4)});
    CHECK(unflatten_row(v, 2) == a);
    CHECK_THROWS_AS(unflatten_row(v, 3), LengthMismatch);
    // tr(A^t I) = 5 = <flatten(A), flatten(I)>
    CHECK((a.transpose() * QiMatrix::identity(2)).trace() == GaussianRational(5));
    CHECK(dot(v, flatten_row(QiMatrix::identity(2))) == GaussianRational(5));
}

TEST_CASE("rank equals transpose rank and the minor oracle") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        QiMatrix m = random_matrix(rng, 3, 4, -2, 2);
        CHECK(rank(m) == rank(m.transpose()));
        CHECK(rank(m) == rank_by_minors(m));
    }
}

TEST_CASE("kernel vectors satisfy Mv = 0 exactly") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 25; ++trial) {
        QiMatrix m = random_matrix(rng, 3, 5);
        for (const VecQi& v : kernel_basis(m))
            for (const auto& e : mat_vec(m, v).entries) CHECK(e.is_zero());
        CHECK(rank(m) + kernel_basis(m).size() == m.cols());
    }
}

TEST_CASE("similarity is conjugation invariant") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 10; ++trial) {
        QiMatrix a = random_matrix(rng, 3, 3, -2, 2);
        QiMatrix g = random_invertible(rng, 3);
        CHECK(is_similar(g * a * inverse(g), a));
    }
}

TEST_CASE("min_poly divides char_poly") {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 15; ++trial) {
        QiMatrix a = random_matrix(rng, 3, 3, -2, 2);
        CHECK(UniPoly::divmod(char_poly(a), min_poly(a)).second.is_zero());
    }
}

TEST_CASE("trace pairing equals flattened dot product") {
    std::mt19937_64 rng(46);
    for (int trial = 0; trial < 20; ++trial) {
        QiMatrix x = random_matrix(rng, 3, 3);
        QiMatrix y = random_matrix(rng, 3, 3);
        CHECK((x.transpose() * y).trace() == dot(flatten_row(x), flatten_row(y)));
    }
}

TEST_CASE("inverse is exact") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        QiMatrix m = random_invertible(rng, 4);
        CHECK(m * inverse(m) == QiMatrix::identity(4));
        CHECK(inverse(m) * m == QiMatrix::identity(4));
    }
}
