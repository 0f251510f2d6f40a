#include "hopfres/complexes.hpp"

namespace hopfres {

std::string algebra_name(Algebra a) {
    switch (a) {
        case Algebra::B: return "B(E)";
        case Algebra::A: return "A(E)";
        case Algebra::H: return "H(F)";
        case Algebra::CZ2: return "CZ2";
    }
    return "?";
}

ScalarComplex::ScalarComplex(std::vector<size_t> space_dims, std::vector<QiMatrix> maps)
    : dims_(std::move(space_dims)), maps_(std::move(maps)) {
    if (dims_.empty()) throw NotAComplex("a complex needs at least one space");
    if (maps_.size() + 1 != dims_.size())
        throw NotAComplex("need exactly one map per consecutive pair of spaces");
    for (size_t k = 0; k < maps_.size(); ++k)
        if (maps_[k].rows() != dims_[k + 1] || maps_[k].cols() != dims_[k])
            throw NotAComplex("map " + std::to_string(k) + " shape does not chain");
    if (!composition_is_zero()) throw NotAComplex("maps do not compose to zero");
}

bool ScalarComplex::composition_is_zero() const {
    for (size_t k = 0; k + 1 < maps_.size(); ++k)
        if (!(maps_[k + 1] * maps_[k]).is_zero()) return false;
    return true;
}

std::vector<size_t> cohomology_dims(const ScalarComplex& c) {
    const auto& dims = c.space_dims();
    const auto& maps = c.maps();
    std::vector<size_t> h(dims.size());
    for (size_t k = 0; k < dims.size(); ++k) {
        size_t ker = (k < maps.size()) ? nullity(maps[k]) : dims[k];
        size_t im = (k > 0) ? rank(maps[k - 1]) : 0;
        h[k] = ker - im;
    }
    return h;
}

namespace {

// Column (p,q) of the flattened matrix of a linear map M_n -> M_n.
template <typename Fn>
QiMatrix flattened_endo(size_t n, Fn&& image_of_basis) {
    QiMatrix m(n * n, n * n);
    for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q) {
            QiMatrix e(n, n);
            e.at(p, q) = GaussianRational(1);
            VecQi col = flatten_row(image_of_basis(e));
            for (size_t r = 0; r < n * n; ++r) m.at(r, p * n + q) = col.entries[r];
        }
    return m;
}

void put_block(QiMatrix& dst, size_t row0, size_t col0, const QiMatrix& src) {
    for (size_t i = 0; i < src.rows(); ++i)
        for (size_t j = 0; j < src.cols(); ++j) dst.at(row0 + i, col0 + j) = src.at(i, j);
}

void put_col(QiMatrix& dst, size_t row0, size_t col, const VecQi& v) {
    for (size_t i = 0; i < v.size(); ++i) dst.at(row0 + i, col) = v.entries[i];
}

void put_row(QiMatrix& dst, size_t row, size_t col0, const VecQi& v) {
    for (size_t j = 0; j < v.size(); ++j) dst.at(row, col0 + j) = v.entries[j];
}

} // namespace

ScalarComplex build_dual_B(const QiMatrix& e, const QiMatrix& t) {
    CharacterB c = validate_character_B(e, t);
    const size_t n = e.rows();
    const size_t n2 = n * n;
    const QiMatrix id = QiMatrix::identity(n);
    const QiMatrix einv = inverse(e);
    const QiMatrix et = e.transpose();
    const QiMatrix einvt = einv.transpose();

    // (Phi_1)*(lambda) = lambda (T - I)
    QiMatrix m0(n2, 1);
    put_col(m0, 0, 0, flatten_row(t - id));
    // (Phi_2)*(Lambda) = Lambda + T E^-t Lambda^t E^t
    QiMatrix m1 = flattened_endo(n, [&](const QiMatrix& L) {
        return L + t * einvt * L.transpose() * et;
    });
    // (Phi_3)*(Lambda) = tr(Lambda^t (E T E^-t - E^t E^-1))
    QiMatrix m2(1, n2);
    put_row(m2, 0, 0, flatten_row(e * t * einvt - et * einv));

    return ScalarComplex({1, n2, n2, 1}, {m0, m1, m2});
}

ScalarComplex build_dual_A(const QiMatrix& e, const QiMatrix& t, const GaussianRational& tg) {
    CharacterA c = validate_character_A(e, t, tg);
    const bool extra = (tg == GaussianRational(-1));
    ScalarComplex base = build_dual_B(e, t);
    const size_t n2 = e.rows() * e.rows();
    const size_t mid = n2 + (extra ? 1 : 0);

    QiMatrix m0(mid, 1);
    put_block(m0, 0, 0, base.maps()[0]);
    if (extra) m0.at(n2, 0) = GaussianRational(1);
    QiMatrix m1(n2, mid);
    put_block(m1, 0, 0, base.maps()[1]);  // the delta summand is mapped to 0
    return ScalarComplex({1, mid, n2, 1}, {m0, m1, base.maps()[2]});
}

ScalarComplex build_dual_H(const QiMatrix& f, const QiMatrix& s) {
    CharacterH c = validate_character_H(f, s);
    const size_t n = f.rows();
    const size_t n2 = n * n;
    const QiMatrix id = QiMatrix::identity(n);
    const QiMatrix finv = inverse(f);
    const QiMatrix ft = f.transpose();
    const QiMatrix finvt = finv.transpose();
    const QiMatrix tinv = inverse(c.T);

    // (Psi_1)*(lambda, mu) = (-lambda I + mu T^t, lambda S^t - mu I, lambda - mu)
    QiMatrix m0(2 * n2 + 1, 2);
    put_col(m0, 0, 0, flatten_row(-id));
    put_col(m0, n2, 0, flatten_row(s.transpose()));
    m0.at(2 * n2, 0) = GaussianRational(1);
    put_col(m0, 0, 1, flatten_row(c.T.transpose()));
    put_col(m0, n2, 1, flatten_row(-id));
    m0.at(2 * n2, 1) = GaussianRational(-1);

    // (Psi_2)*(Lambda, M, nu) = (Lambda^t + T M, S F^t Lambda F^-t + M^t)
    QiMatrix m1(2 * n2, 2 * n2 + 1);
    QiMatrix lam_to_1 = flattened_endo(n, [&](const QiMatrix& L) { return L.transpose(); });
    QiMatrix lam_to_2 = flattened_endo(n, [&](const QiMatrix& L) { return s * ft * L * finvt; });
    QiMatrix m_to_1 = flattened_endo(n, [&](const QiMatrix& M) { return c.T * M; });
    QiMatrix m_to_2 = flattened_endo(n, [&](const QiMatrix& M) { return M.transpose(); });
    put_block(m1, 0, 0, lam_to_1);
    put_block(m1, n2, 0, lam_to_2);
    put_block(m1, 0, n2, m_to_1);
    put_block(m1, n2, n2, m_to_2);
    // nu column stays zero

    // (Psi_3)*(Lambda, M) = (tr(-F^-1 Lambda + T^t F^-t M), tr(F T^-1 Lambda - F^t M))
    // via tr(X A) = <flatten(X^t), flatten(A)>.
    QiMatrix m2(2, 2 * n2);
    put_row(m2, 0, 0, flatten_row(-finvt));
    put_row(m2, 0, n2, flatten_row(finv * c.T));
    put_row(m2, 1, 0, flatten_row(tinv.transpose() * ft));
    put_row(m2, 1, n2, flatten_row(-f));

    return ScalarComplex({2, 2 * n2 + 1, 2 * n2, 2}, {m0, m1, m2});
}

ScalarComplex build_dual_CZ2(const GaussianRational& t) {
    if (t != GaussianRational(1) && t != GaussianRational(-1))
        throw NotACharacter("tau(g) must be +1 or -1");
    if (t == GaussianRational(1)) {
        // hom(C(1-g), C_eps) = 0: the complex is C -> 0.
        return ScalarComplex({1, 0}, {QiMatrix(0, 1)});
    }
    QiMatrix m(1, 1);
    m.at(0, 0) = GaussianRational(1) - t;  // f -> f((1-g) . ) evaluates to 1 - tau(g)
    return ScalarComplex({1, 1}, {m});
}

ScalarComplex build_bialgebra_H(const QiMatrix& f) {
    inverse(f);  // Singular check
    const GaussianRational trf = f.trace();
    QiMatrix m0(3, 2);
    m0.at(0, 0) = GaussianRational(-1); m0.at(0, 1) = GaussianRational(1);
    m0.at(1, 0) = GaussianRational(1);  m0.at(1, 1) = GaussianRational(-1);
    m0.at(2, 0) = GaussianRational(1);  m0.at(2, 1) = GaussianRational(-1);
    QiMatrix m1(2, 3);
    m1.at(0, 0) = GaussianRational(1); m1.at(0, 1) = GaussianRational(1);
    m1.at(1, 0) = GaussianRational(1); m1.at(1, 1) = GaussianRational(1);
    QiMatrix m2(2, 2);
    m2.at(0, 0) = -trf; m2.at(0, 1) = trf;
    m2.at(1, 0) = trf;  m2.at(1, 1) = -trf;
    return ScalarComplex({2, 3, 2, 2}, {m0, m1, m2});
}

ScalarComplex build_bialgebra_A(const QiMatrix& e) {
    inverse(e);  // Singular check
    QiMatrix zero(1, 1);
    QiMatrix two(1, 1);
    two.at(0, 0) = GaussianRational(2);
    return ScalarComplex({1, 1, 1, 1}, {zero, two, zero});
}

namespace {

CohomologyReport finish_report(Algebra alg, const ScalarComplex& cx,
                               std::optional<std::vector<size_t>> formula, ReportParams params,
                               bool generic_ok, const std::string& generic_note, ReportMode mode) {
    CohomologyReport rep;
    rep.algebra = alg;
    rep.params = std::move(params);
    if (mode != ReportMode::Formula) rep.dims_by_rank = cohomology_dims(cx);
    if (mode != ReportMode::Rank) rep.dims_by_formula = formula;
    rep.agree = (mode != ReportMode::Both) || !formula || (rep.dims_by_rank == *formula);
    rep.genericity_warning = !generic_ok;
    if (!generic_ok) rep.warnings.push_back(generic_note);
    return rep;
}

const std::string kNonGenericNote =
    "parameter matrix is not generic: ranks of the dual complex are reported, but exactness of "
    "the underlying resolution (hence the cohomology reading) is only established for generic "
    "parameters";

} // namespace

CohomologyReport report_H(const QiMatrix& f, const QiMatrix& s, ReportMode mode) {
    CharacterH c = validate_character_H(f, s);
    ParamsH ps = params_H(c);
    std::vector<size_t> formula{
        static_cast<size_t>(ps.p),
        ps.d + ps.p - 1,
        ps.d - static_cast<size_t>(ps.t),
        static_cast<size_t>(2 - ps.t),
    };
    ReportParams params;
    params.h = ps;
    return finish_report(Algebra::H, build_dual_H(f, s), formula, params, is_generic(f),
                         kNonGenericNote, mode);
}

CohomologyReport report_B(const QiMatrix& e, const QiMatrix& t, ReportMode mode) {
    CharacterB c = validate_character_B(e, t);
    ParamsB ps = params_B(c);
    std::vector<size_t> formula{
        static_cast<size_t>(ps.p),
        ps.d - 1 + ps.p,
        ps.d - static_cast<size_t>(ps.s),
        static_cast<size_t>(1 - ps.s),
    };
    ReportParams params;
    params.b = ps;
    // Thm H(B(E)) needs no genericity hypothesis.
    return finish_report(Algebra::B, build_dual_B(e, t), formula, params, true, "", mode);
}

CohomologyReport report_A(const QiMatrix& e, const QiMatrix& t, const GaussianRational& tg,
                          ReportMode mode) {
    CharacterA c = validate_character_A(e, t, tg);
    ParamsB ps = params_B(c.base);
    const int q = (tg == GaussianRational(1)) ? 1 : 0;
    std::vector<size_t> formula{
        static_cast<size_t>(ps.p * q),
        ps.d - static_cast<size_t>((1 - ps.p) * q),
        ps.d - static_cast<size_t>(ps.s),
        static_cast<size_t>(1 - ps.s),
    };
    ReportParams params;
    params.b = ps;
    params.q = q;
    const QiMatrix f = e.transpose() * inverse(e);
    return finish_report(Algebra::A, build_dual_A(e, t, tg), formula, params, is_generic(f),
                         kNonGenericNote, mode);
}

CohomologyReport report_CZ2(const GaussianRational& t, ReportMode mode) {
    std::vector<size_t> formula =
        (t == GaussianRational(1)) ? std::vector<size_t>{1, 0} : std::vector<size_t>{0, 0};
    return finish_report(Algebra::CZ2, build_dual_CZ2(t), formula, ReportParams{}, true, "", mode);
}

CohomologyReport report_bialgebra_H(const QiMatrix& f) {
    // The closed dims (1,1,0,1) are proven for generic F only, and the rank
    // path genuinely deviates when tr(F) = 0; no formula is reported then.
    const bool generic = is_generic(f);
    std::optional<std::vector<size_t>> formula;
    if (generic) formula = std::vector<size_t>{1, 1, 0, 1};
    return finish_report(Algebra::H, build_bialgebra_H(f), formula, ReportParams{}, generic,
                         kNonGenericNote, ReportMode::Both);
}

CohomologyReport report_bialgebra_A(const QiMatrix& e) {
    const QiMatrix f = e.transpose() * inverse(e);
    return finish_report(Algebra::A, build_bialgebra_A(e), std::vector<size_t>{1, 0, 0, 1},
                         ReportParams{}, is_generic(f), kNonGenericNote, ReportMode::Both);
}

} // namespace hopfres
