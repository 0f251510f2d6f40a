#include "hopfres/classify.hpp"

namespace hopfres {

bool is_normalizable(const QiMatrix& f) {
    GaussianRational trf = f.trace();
    GaussianRational trfi = inverse(f).trace();
    return (!trf.is_zero() && !trfi.is_zero()) || (trf.is_zero() && trfi.is_zero());
}

bool is_generic(const QiMatrix& f) {
    if (!is_normalizable(f)) return false;
    GaussianRational p = f.trace() * inverse(f).trace();
    if (!p.is_real()) return true;
    const Rational& r = p.re();
    for (long k : {0L, 1L, 2L, 3L})
        if (r == Rational(k)) return false;
    return true;
}

Asymmetry is_asymmetry(const QiMatrix& f) {
    QiMatrix finv = inverse(f);
    if (!is_squarefree(min_poly(f))) return Asymmetry::UnknownNonDiagonalizable;
    if (!is_similar(f, finv)) return Asymmetry::No;
    return eigenspace_dim(f, GaussianRational(-1)) % 2 == 0 ? Asymmetry::Yes : Asymmetry::No;
}

MatrixClass classify_matrix(const QiMatrix& f) {
    MatrixClass mc;
    mc.n = f.rows();
    mc.trace_F = f.trace();
    mc.trace_Finv = inverse(f).trace();
    mc.P = mc.trace_F * mc.trace_Finv;
    mc.normalizable = is_normalizable(f);
    mc.generic = is_generic(f);
    mc.asymmetry = is_asymmetry(f);
    return mc;
}

CharacterH validate_character_H(const QiMatrix& f, const QiMatrix& s) {
    if (!f.is_square() || !s.is_square() || f.rows() != s.rows())
        throw DimensionMismatch("F and S must be square of equal size");
    QiMatrix sinv;
    try {
        sinv = inverse(s);
    } catch (const SingularMatrix&) {
        throw NotACharacter("S is not invertible (u v^t = I forces tau(u) invertible)");
    }
    const QiMatrix t = sinv.transpose();
    const QiMatrix id = QiMatrix::identity(f.rows());
    const QiMatrix finv = inverse(f);
    // The four relation matrices of H(F), entrywise under tau.
    if (s * t.transpose() != id) throw NotACharacter("u v^t = I violated");
    if (t.transpose() * s != id) throw NotACharacter("v^t u = I violated");
    if (t * f * s.transpose() * finv != id) throw NotACharacter("v F u^t F^-1 = I violated");
    if (f * s.transpose() * finv * t != id) throw NotACharacter("F u^t F^-1 v = I violated");
    return CharacterH{f, s, t};
}

CharacterB validate_character_B(const QiMatrix& e, const QiMatrix& t) {
    if (!e.is_square() || !t.is_square() || e.rows() != t.rows())
        throw DimensionMismatch("E and T must be square of equal size");
    const QiMatrix einv = inverse(e);
    const QiMatrix id = QiMatrix::identity(e.rows());
    if (einv * t.transpose() * e * t != id) throw NotACharacter("E^-1 x^t E x = I violated");
    if (t * einv * t.transpose() * e != id) throw NotACharacter("x E^-1 x^t E = I violated");
    return CharacterB{e, t};
}

CharacterA validate_character_A(const QiMatrix& e, const QiMatrix& t, const GaussianRational& g) {
    if (g != GaussianRational(1) && g != GaussianRational(-1))
        throw NotACharacter("tau(g) must be +1 or -1 (g^2 = 1)");
    return CharacterA{validate_character_B(e, t), g};
}

size_t centralizer_dim(const QiMatrix& x) {
    const size_t n = x.rows();
    QiMatrix sys(n * n, n * n);
    for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q) {
            QiMatrix e(n, n);
            e.at(p, q) = GaussianRational(1);
            VecQi col = flatten_row(e * x - x * e);
            for (size_t r = 0; r < n * n; ++r) sys.at(r, p * n + q) = col.entries[r];
        }
    return nullity(sys);
}

size_t skew_dim(const QiMatrix& f, const QiMatrix& t) {
    if (f.rows() != t.rows()) throw DimensionMismatch();
    const size_t n = f.rows();
    QiMatrix sys(n * n, n * n);
    for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q) {
            QiMatrix e(n, n);
            e.at(p, q) = GaussianRational(1);
            VecQi col = flatten_row(e.transpose() + t.transpose() * f * e);
            for (size_t r = 0; r < n * n; ++r) sys.at(r, p * n + q) = col.entries[r];
        }
    return nullity(sys);
}

ParamsH params_H(const CharacterH& c) {
    ParamsH ps;
    const QiMatrix id = QiMatrix::identity(c.F.rows());
    ps.p = (c.S == id && c.T == id) ? 1 : 0;
    ps.d = centralizer_dim(c.F.transpose() * c.S);
    // t as the rank of the 2 x 2n^2 row stack from the proof: the rows are
    // dependent exactly when F^2 = alpha T for some alpha.
    const QiMatrix finv = inverse(c.F);
    const size_t n2 = c.F.rows() * c.F.rows();
    QiMatrix stack(2, 2 * n2);
    VecQi r11 = flatten_row(-finv);
    VecQi r12 = flatten_row(c.T.transpose() * finv.transpose());
    VecQi r21 = flatten_row(c.F * inverse(c.T));
    VecQi r22 = flatten_row(-c.F.transpose());
    for (size_t k = 0; k < n2; ++k) {
        stack.at(0, k) = r11.entries[k];
        stack.at(0, n2 + k) = r12.entries[k];
        stack.at(1, k) = r21.entries[k];
        stack.at(1, n2 + k) = r22.entries[k];
    }
    ps.t = static_cast<int>(rank(stack));
    return ps;
}

ParamsB params_B(const CharacterB& c) {
    ParamsB ps;
    const QiMatrix id = QiMatrix::identity(c.E.rows());
    ps.p = (c.T == id) ? 1 : 0;
    const QiMatrix einv = inverse(c.E);
    const QiMatrix f = c.E.transpose() * einv;
    ps.d = skew_dim(f, c.T);
    ps.s = (c.E * c.T * einv.transpose() == c.E.transpose() * einv) ? 0 : 1;
    return ps;
}

} // namespace hopfres
