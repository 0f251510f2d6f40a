#include "hopfres/resolution.hpp"

namespace hopfres {

namespace {

// Column of the flattened module map built from images of the basis
// matrices e_jk (row-major (j,k) indexing, matching flatten_row).
void set_block_column(AlgMatrix& m, size_t row0, size_t col, const AlgMatrix& image) {
    for (size_t l = 0; l < image.rows; ++l)
        for (size_t k = 0; k < image.cols; ++k)
            m.at(row0 + l * image.cols + k, col) = image.at(l, k);
}

AlgMatrix basis_matrix(size_t n, size_t j, size_t k) {
    AlgMatrix e(n, n);
    e.at(j, k) = NcPoly::unit();
    return e;
}

ResolutionData resolution_B_or_A(Algebra alg, const QiMatrix& e) {
    const size_t n = e.rows();
    const size_t n2 = n * n;
    const bool is_a = (alg == Algebra::A);
    ResolutionData rd;
    rd.algebra = alg;
    rd.pres = is_a ? presentation_A(e) : presentation_B(e);

    const QiMatrix einv = inverse(e);
    AlgMatrix x = AlgMatrix::generators(0, n);
    AlgMatrix sE = AlgMatrix::from_scalar(e);
    AlgMatrix sEinv = AlgMatrix::from_scalar(einv);
    AlgMatrix sEt = AlgMatrix::from_scalar(e.transpose());
    AlgMatrix sEinvt = AlgMatrix::from_scalar(einv.transpose());

    // Phi_1(A) = tr(x^t A) - tr(A); on A(E) the extra coordinate carries
    // the basis element (1 - g) of C(1-g) (x)_{CZ2} A.
    AlgMatrix phi1(1, n2 + (is_a ? 1 : 0));
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) {
            NcPoly entry = NcPoly::generator(static_cast<uint8_t>(j * n + k));
            if (j == k) entry = entry - NcPoly::unit();
            phi1.at(0, j * n + k) = entry;
        }
    if (is_a)
        phi1.at(0, n2) =
            NcPoly::unit() - NcPoly::generator(static_cast<uint8_t>(n2));

    // Phi_2(A) = A + (E^-1 x^t A E)^t, basis column by basis column.
    AlgMatrix phi2(n2 + (is_a ? 1 : 0), n2);
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) {
            AlgMatrix ejk = basis_matrix(n, j, k);
            AlgMatrix image = ejk + (sEinv * x.transpose() * ejk * sE).transpose();
            set_block_column(phi2, 0, j * n + k, image);
        }

    // Phi_3(a) = (E x E^-t - E^t E^-1) a.
    AlgMatrix phi3(n2, 1);
    AlgMatrix col = sE * x * sEinvt - sEt * sEinv;
    set_block_column(phi3, 0, 0, col);

    rd.maps = {phi1, phi2, phi3};
    rd.augmentation = {NcPoly::unit()};
    return rd;
}

ResolutionData resolution_H(const QiMatrix& f) {
    const size_t n = f.rows();
    const size_t n2 = n * n;
    ResolutionData rd;
    rd.algebra = Algebra::H;
    rd.pres = presentation_H(f);

    const QiMatrix finv = inverse(f);
    AlgMatrix u = AlgMatrix::generators(0, n);
    AlgMatrix v = AlgMatrix::generators(static_cast<uint8_t>(n2), n);
    AlgMatrix sF = AlgMatrix::from_scalar(f);
    AlgMatrix sFt = AlgMatrix::from_scalar(f.transpose());
    AlgMatrix sFinv = AlgMatrix::from_scalar(finv);
    AlgMatrix sFinvt = AlgMatrix::from_scalar(finv.transpose());

    // Psi_1(A, B, c) = ( tr(-A + uB) + c, tr(vA - B) - c ).
    AlgMatrix psi1(2, 2 * n2 + 1);
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) {
            // tr(u e_jk) = u_kj, tr(v e_jk) = v_kj
            if (j == k) {
                psi1.at(0, j * n + k) = NcPoly::unit(GaussianRational(-1));
                psi1.at(1, n2 + j * n + k) = NcPoly::unit(GaussianRational(-1));
            }
            psi1.at(0, n2 + j * n + k) = NcPoly::generator(static_cast<uint8_t>(k * n + j));
            psi1.at(1, j * n + k) = NcPoly::generator(static_cast<uint8_t>(n2 + k * n + j));
        }
    psi1.at(0, 2 * n2) = NcPoly::unit();
    psi1.at(1, 2 * n2) = NcPoly::unit(GaussianRational(-1));

    // Psi_2(A, B) = ( A^t + F u^t B F^-1, v^t A + B^t, 0 ).
    AlgMatrix psi2(2 * n2 + 1, 2 * n2);
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) {
            AlgMatrix ejk = basis_matrix(n, j, k);
            set_block_column(psi2, 0, j * n + k, ejk.transpose());
            set_block_column(psi2, n2, j * n + k, v.transpose() * ejk);
            set_block_column(psi2, 0, n2 + j * n + k, sF * u.transpose() * ejk * sFinv);
            set_block_column(psi2, n2, n2 + j * n + k, ejk.transpose());
        }

    // Psi_3(a, b) = ( -F^-t a + u F^t b, F^-1 v a - F b ).
    AlgMatrix psi3(2 * n2, 2);
    set_block_column(psi3, 0, 0, AlgMatrix::from_scalar(-finv.transpose()));
    set_block_column(psi3, n2, 0, sFinv * v);
    set_block_column(psi3, 0, 1, u * sFt);
    set_block_column(psi3, n2, 1, AlgMatrix::from_scalar(-f));

    rd.maps = {psi1, psi2, psi3};
    rd.augmentation = {NcPoly::unit(), NcPoly::unit()};
    return rd;
}

ResolutionData resolution_CZ2() {
    ResolutionData rd;
    rd.algebra = Algebra::CZ2;
    rd.pres = presentation_CZ2();
    AlgMatrix psi1(1, 1);
    psi1.at(0, 0) = NcPoly::unit() - NcPoly::generator(0);
    rd.maps = {psi1};
    rd.augmentation = {NcPoly::unit()};
    return rd;
}

} // namespace

ResolutionData resolution_matrices(Algebra alg, const QiMatrix& param) {
    switch (alg) {
        case Algebra::B:
        case Algebra::A: return resolution_B_or_A(alg, param);
        case Algebra::H: return resolution_H(param);
        case Algebra::CZ2: return resolution_CZ2();
    }
    throw Error("unknown algebra");
}

void VerifyReport::merge_entry(VerifyStatus s, const std::string& label) {
    if (s == VerifyStatus::Verified) {
        ++member_entries;
        return;
    }
    if (status == VerifyStatus::Verified || (s == VerifyStatus::Failed && status != s)) {
        status = s;
        detail = label;
    }
}

VerifyReport verify_resolution_data(const ResolutionData& rd, int degree_bound) {
    VerifyReport rep;
    IdealSpan span(rd.pres, degree_bound);
    for (size_t k = 0; k + 1 < rd.maps.size(); ++k) {
        AlgMatrix prod = rd.maps[k] * rd.maps[k + 1];
        ++rep.composite_checks;
        for (size_t i = 0; i < prod.rows; ++i)
            for (size_t j = 0; j < prod.cols; ++j) {
                std::string label = "Phi" + std::to_string(k + 1) + "*Phi" + std::to_string(k + 2) +
                                    "[" + std::to_string(i) + "," + std::to_string(j) + "]";
                MembershipResult mr = span.query(prod.at(i, j));
                if (mr.status == Membership::Member) {
                    rep.certificates.push_back(CertEntry{label, prod.at(i, j), std::move(mr.cert)});
                    rep.merge_entry(VerifyStatus::Verified, label);
                } else if (mr.status == Membership::NotMemberByCounit) {
                    rep.merge_entry(VerifyStatus::Failed, label + ": nonzero counit value");
                } else {
                    rep.merge_entry(VerifyStatus::Undecided, label + ": undecided at bound");
                }
            }
    }
    // Counit composite: eps(aug . Phi_1) must vanish as an exact scalar.
    const AlgMatrix& phi1 = rd.maps.front();
    for (size_t j = 0; j < phi1.cols; ++j) {
        NcPoly entry;
        for (size_t i = 0; i < phi1.rows; ++i)
            entry = entry + rd.augmentation[i] * phi1.at(i, j);
        if (!rd.pres.counit_eval(entry).is_zero())
            rep.merge_entry(VerifyStatus::Failed,
                            "eps.Phi1[" + std::to_string(j) + "]: counit does not vanish");
    }
    return rep;
}

VerifyReport verify_resolution_complex(Algebra alg, const QiMatrix& param, int degree_bound) {
    return verify_resolution_data(resolution_matrices(alg, param), degree_bound);
}

} // namespace hopfres
