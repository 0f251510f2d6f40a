#include "hopfres/verify.hpp"

#include <array>

namespace hopfres {

AlgMatrix glued_u_hat(const QiMatrix& e) {
    const size_t n = e.rows();
    const uint8_t g = static_cast<uint8_t>(n * n);
    AlgMatrix uhat(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            uhat.at(i, j) = NcPoly::monomial(
                Word(std::vector<uint8_t>{static_cast<uint8_t>(i * n + j), g}),
                GaussianRational(1));
    return uhat;
}

AlgMatrix glued_v_hat(const QiMatrix& e) {
    const size_t n = e.rows();
    const uint8_t g = static_cast<uint8_t>(n * n);
    AlgMatrix x = AlgMatrix::generators(0, n);
    AlgMatrix core = AlgMatrix::from_scalar(e.transpose()) * x *
                     AlgMatrix::from_scalar(inverse(e).transpose());
    AlgMatrix vhat(n, n);
    NcPoly gp = NcPoly::generator(g);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) vhat.at(i, j) = gp * core.at(i, j);
    return vhat;
}

VerifyReport verify_glued_embedding(const QiMatrix& e, int degree_bound) {
    const size_t n = e.rows();
    Presentation pres = presentation_A(e);
    const QiMatrix f = e.transpose() * inverse(e);
    AlgMatrix uhat = glued_u_hat(e);
    AlgMatrix vhat = glued_v_hat(e);
    AlgMatrix sF = AlgMatrix::from_scalar(f);
    AlgMatrix sFinv = AlgMatrix::from_scalar(inverse(f));
    AlgMatrix id = AlgMatrix::from_scalar(QiMatrix::identity(n));

    struct Check {
        std::string name;
        AlgMatrix defect;
    };
    std::vector<Check> checks;
    checks.push_back({"uhat vhat^t - I", uhat * vhat.transpose() - id});
    checks.push_back({"vhat^t uhat - I", vhat.transpose() * uhat - id});
    checks.push_back({"vhat F uhat^t F^-1 - I", vhat * sF * uhat.transpose() * sFinv - id});
    checks.push_back({"F uhat^t F^-1 vhat - I", sF * uhat.transpose() * sFinv * vhat - id});

    VerifyReport rep;
    IdealSpan span(pres, degree_bound);
    for (const Check& ch : checks) {
        ++rep.composite_checks;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                std::string label =
                    ch.name + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
                MembershipResult mr = span.query(ch.defect.at(i, j));
                if (mr.status == Membership::Member) {
                    rep.certificates.push_back(
                        CertEntry{label, ch.defect.at(i, j), std::move(mr.cert)});
                    rep.merge_entry(VerifyStatus::Verified, label);
                } else if (mr.status == Membership::NotMemberByCounit) {
                    rep.merge_entry(VerifyStatus::Failed, label + ": nonzero counit value");
                } else {
                    rep.merge_entry(VerifyStatus::Undecided, label + ": undecided at bound");
                }
            }
    }
    return rep;
}

VerifyReport verify_hopf(const Presentation& p, int degree_bound) {
    HopfMaps hm = hopf_maps(p);
    VerifyReport rep;
    IdealSpan base_span(p, degree_bound);
    IdealSpan sq_span(hm.square, degree_bound);

    auto run = [&rep](IdealSpan& span, const NcPoly& q, const std::string& label,
                      bool on_square = false) {
        MembershipResult mr = span.query(q);
        if (mr.status == Membership::Member) {
            rep.certificates.push_back(CertEntry{label, q, std::move(mr.cert), on_square});
            rep.merge_entry(VerifyStatus::Verified, label);
        } else if (mr.status == Membership::NotMemberByCounit) {
            rep.merge_entry(VerifyStatus::Failed, label + ": nonzero counit value");
        } else {
            rep.merge_entry(VerifyStatus::Undecided, label + ": undecided at bound");
        }
    };

    // (i) the counit kills every relation (exact scalar check)
    ++rep.composite_checks;
    for (size_t k = 0; k < p.relations.size(); ++k)
        if (!p.counit_eval(p.relations[k]).is_zero())
            rep.merge_entry(VerifyStatus::Failed,
                            "eps(rel " + std::to_string(k) + ") != 0");

    // (ii) S(r) in the ideal
    ++rep.composite_checks;
    for (size_t k = 0; k < p.relations.size(); ++k)
        run(base_span, hm.antipode(p.relations[k]), "S(rel " + std::to_string(k) + ")");

    // (iii) Delta(r) in the ideal of the tensor square
    ++rep.composite_checks;
    for (size_t k = 0; k < p.relations.size(); ++k)
        run(sq_span, hm.delta(p.relations[k]), "Delta(rel " + std::to_string(k) + ")", true);

    // (iv) antipode identity on generators: m(S (x) id)Delta(gen) = eps(gen) 1
    ++rep.composite_checks;
    const size_t split = p.alphabet.size();
    for (size_t g = 0; g < split; ++g) {
        NcPoly sum;
        for (const auto& [w, c] : hm.delta_gen[g].terms()) {
            size_t b = 0;
            while (b < w.length() && w[b] < split) ++b;
            NcPoly left_part = hm.antipode(NcPoly::monomial(w.subword(0, b), c));
            std::vector<uint8_t> beta;
            for (size_t k = b; k < w.length(); ++k)
                beta.push_back(static_cast<uint8_t>(w[k] - split));
            sum = sum + p.mul(left_part, NcPoly::monomial(Word(std::move(beta)),
                                                          GaussianRational(1)));
        }
        sum = sum - NcPoly::unit(p.counit[g]);
        run(base_span, sum, "antipode identity(" + p.alphabet.names[g] + ")");
    }
    return rep;
}

namespace {

enum class Co { U, V, Ut, Vt };

struct YdCtx {
    size_t n = 0;
    size_t split = 0;  // 2 n^2
    Presentation H;
    Presentation sq;
    std::vector<NcPoly> antipode_rho;                          // per base letter
    std::vector<std::vector<std::array<uint8_t, 3>>> triples;  // Sweedler Delta^2
    QiMatrix F;

    uint8_t u(size_t i, size_t j) const { return static_cast<uint8_t>(i * n + j); }
    uint8_t v(size_t i, size_t j) const { return static_cast<uint8_t>(n * n + i * n + j); }
    NcPoly rho_letter(uint8_t g) const {
        return NcPoly::generator(static_cast<uint8_t>(g + split));
    }
};

YdCtx make_yd_ctx(const QiMatrix& f) {
    YdCtx c;
    c.n = f.rows();
    c.F = f;
    c.H = presentation_H(f);
    c.sq = tensor_square(c.H);
    c.split = c.H.alphabet.size();
    HopfMaps hm = hopf_maps(c.H);
    for (size_t g = 0; g < c.split; ++g)
        c.antipode_rho.push_back(embed_right(hm.antipode_gen[g], c.split));
    c.triples.resize(c.split);
    const size_t n = c.n;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t s = 0; s < n; ++s)
                for (size_t t = 0; t < n; ++t) {
                    c.triples[c.u(i, j)].push_back({c.u(i, s), c.u(s, t), c.u(t, j)});
                    c.triples[c.v(i, j)].push_back({c.v(i, s), c.v(s, t), c.v(t, j)});
                }
    return c;
}

// Yetter-Drinfeld action of one generator on a square-encoded element
// (left copy = module leg, right copy = coaction leg):
// (x (x) h) <| w = x w_(2) (x) S(w_(1)) h w_(3).
NcPoly yd_act_letter(const YdCtx& c, const NcPoly& x, uint8_t g) {
    NcPoly out;
    for (const auto& tr : c.triples[g]) {
        NcPoly t = c.sq.mul(c.antipode_rho[tr[0]], x);
        NcPoly tail = NcPoly::monomial(
            Word(std::vector<uint8_t>{tr[1], static_cast<uint8_t>(tr[2] + c.split)}),
            GaussianRational(1));
        out = out + c.sq.mul(t, tail);
    }
    return out;
}

NcPoly yd_act(const YdCtx& c, const NcPoly& x, const NcPoly& h) {
    NcPoly out;
    for (const auto& [w, coef] : h.terms()) {
        NcPoly cur = x * coef;
        for (size_t k = 0; k < w.length(); ++k) cur = yd_act_letter(c, cur, w[k]);
        out = out + cur;
    }
    return out;
}

// H-leg array (position (k,l)) of the coaction of the basis element
// e_ij (x) 1 of the free Yetter-Drinfeld module M_n^# (x) H.
std::vector<NcPoly> coaction_basis(const YdCtx& c, Co which, size_t i, size_t j) {
    const size_t n = c.n;
    std::vector<NcPoly> out(n * n);
    for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l) {
            NcPoly leg;
            switch (which) {
                case Co::U:
                    leg = c.sq.mul(c.antipode_rho[c.u(i, k)], c.rho_letter(c.u(l, j)));
                    break;
                case Co::V:
                    leg = c.sq.mul(c.antipode_rho[c.v(i, k)], c.rho_letter(c.v(l, j)));
                    break;
                case Co::Ut:
                    leg = c.sq.mul(c.antipode_rho[c.u(j, l)], c.rho_letter(c.u(k, i)));
                    break;
                case Co::Vt:
                    leg = c.sq.mul(c.antipode_rho[c.v(j, l)], c.rho_letter(c.v(k, i)));
                    break;
            }
            out[k * n + l] = leg;
        }
    return out;
}

// Coaction of a module element W = sum e_pq (x) W_pq (entries over H).
std::vector<NcPoly> coact_matrix(const YdCtx& c, Co tgt, const AlgMatrix& w) {
    const size_t n = c.n;
    std::vector<NcPoly> out(n * n);
    for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q) {
            if (w.at(p, q).is_zero()) continue;
            std::vector<NcPoly> base = coaction_basis(c, tgt, p, q);
            for (size_t pos = 0; pos < n * n; ++pos) {
                if (base[pos].is_zero()) continue;
                out[pos] = out[pos] + yd_act(c, base[pos], w.at(p, q));
            }
        }
    return out;
}

// Coadjoint coaction gamma(h) = h_(2) (x) S(h_(1)) h_(3) on H = C [x] H.
NcPoly coact_coad(const YdCtx& c, const NcPoly& h) {
    NcPoly out;
    for (const auto& [w, coef] : h.terms()) {
        NcPoly cur = NcPoly::unit(coef);
        for (size_t k = 0; k < w.length(); ++k) cur = yd_act_letter(c, cur, w[k]);
        out = out + cur;
    }
    return out;
}

} // namespace

namespace detail {

VerifyReport verify_yd_impl(const QiMatrix& f, int degree_bound, YdMutation mutation) {
    YdCtx ctx = make_yd_ctx(f);
    const size_t n = ctx.n;
    VerifyReport rep;
    IdealSpan span(ctx.sq, degree_bound);

    auto tag = [&](Co co) {
        if (mutation != YdMutation::SwapCoactions) return co;
        switch (co) {
            case Co::U: return Co::V;
            case Co::V: return Co::U;
            case Co::Ut: return Co::Vt;
            case Co::Vt: return Co::Ut;
        }
        return co;
    };

    auto run = [&](const NcPoly& defect, const std::string& label) {
        MembershipResult mr = span.query(defect);
        if (mr.status == Membership::Member) {
            rep.certificates.push_back(CertEntry{label, defect, std::move(mr.cert)});
            rep.merge_entry(VerifyStatus::Verified, label);
        } else if (mr.status == Membership::NotMemberByCounit) {
            rep.merge_entry(VerifyStatus::Failed, label + ": nonzero counit value");
        } else {
            rep.merge_entry(VerifyStatus::Undecided, label + ": undecided at bound");
        }
    };

    AlgMatrix u = AlgMatrix::generators(0, n);
    AlgMatrix v = AlgMatrix::generators(static_cast<uint8_t>(n * n), n);
    AlgMatrix sF = AlgMatrix::from_scalar(ctx.F);
    AlgMatrix sFt = AlgMatrix::from_scalar(ctx.F.transpose());
    const QiMatrix finv = inverse(ctx.F);
    AlgMatrix sFinv = AlgMatrix::from_scalar(finv);

    // Psi_3: source (C [x] H)^2, targets (M_n^v, M_n^u).
    {
        ++rep.composite_checks;
        struct Block {
            std::string name;
            Co target;
            AlgMatrix image;
        };
        std::vector<Block> blocks;
        blocks.push_back({"Psi3[1,1]", Co::V, AlgMatrix::from_scalar(-finv.transpose())});
        blocks.push_back({"Psi3[1,2]", Co::V, u * sFt});
        blocks.push_back({"Psi3[2,1]", Co::U, sFinv * v});
        blocks.push_back({"Psi3[2,2]", Co::U, AlgMatrix::from_scalar(-ctx.F)});
        for (const Block& b : blocks) {
            std::vector<NcPoly> lhs = coact_matrix(ctx, tag(b.target), b.image);
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < n; ++l) {
                    NcPoly rhs = ctx.sq.normalize(b.image.at(k, l));  // (x) 1
                    NcPoly defect = lhs[k * n + l] - rhs;
                    run(defect, b.name + " @(" + std::to_string(k) + "," + std::to_string(l) + ")");
                }
        }
    }

    // Psi_2 components: (1,1) A -> A^t, (1,2) B -> F u^t B F^-1,
    // (2,1) A -> v^t A, (2,2) B -> B^t; the C [x] H row is zero.
    {
        ++rep.composite_checks;
        struct Comp {
            std::string name;
            Co source;
            Co target;
            std::vector<AlgMatrix> images;  // image of e_ij at index i*n+j
        };
        auto images_of = [&](auto&& fn) {
            std::vector<AlgMatrix> ims;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    AlgMatrix e(n, n);
                    e.at(i, j) = NcPoly::unit();
                    ims.push_back(fn(e));
                }
            return ims;
        };
        std::vector<Comp> comps;
        comps.push_back({"Psi2[1,1]", Co::V, Co::Vt,
                         images_of([&](const AlgMatrix& e) { return e.transpose(); })});
        comps.push_back({"Psi2[1,2]", Co::U, Co::Vt, images_of([&](const AlgMatrix& e) {
                             return sF * u.transpose() * e * sFinv;
                         })});
        comps.push_back({"Psi2[2,1]", Co::V, Co::Ut,
                         images_of([&](const AlgMatrix& e) { return v.transpose() * e; })});
        comps.push_back({"Psi2[2,2]", Co::U, Co::Ut,
                         images_of([&](const AlgMatrix& e) { return e.transpose(); })});
        for (const Comp& comp : comps) {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    const AlgMatrix& w = comp.images[i * n + j];
                    std::vector<NcPoly> lhs = coact_matrix(ctx, tag(comp.target), w);
                    std::vector<NcPoly> src = coaction_basis(ctx, tag(comp.source), i, j);
                    for (size_t k = 0; k < n; ++k)
                        for (size_t l = 0; l < n; ++l) {
                            NcPoly rhs;
                            for (size_t p = 0; p < n; ++p)
                                for (size_t q = 0; q < n; ++q) {
                                    const NcPoly& img = comp.images[p * n + q].at(k, l);
                                    if (img.is_zero() || src[p * n + q].is_zero()) continue;
                                    rhs = rhs + ctx.sq.mul(img, src[p * n + q]);
                                }
                            NcPoly defect = lhs[k * n + l] - rhs;
                            run(defect, comp.name + " e(" + std::to_string(i) + "," +
                                            std::to_string(j) + ") @(" + std::to_string(k) + "," +
                                            std::to_string(l) + ")");
                        }
                }
        }
    }

    // Psi_1 components into the coadjoint module: (1,1) A -> -tr(A),
    // (1,2) B -> tr(uB), (2,1) A -> tr(vA), (2,2) B -> -tr(B). The
    // C [x] H -> C [x] H components are +-identity, trivially colinear.
    {
        ++rep.composite_checks;
        struct Comp {
            std::string name;
            Co source;
            std::vector<NcPoly> images;  // scalar image of e_ij
        };
        std::vector<Comp> comps(4);
        comps[0] = {"Psi1[1,1]", Co::Vt, {}};
        comps[1] = {"Psi1[1,2]", Co::Ut, {}};
        comps[2] = {"Psi1[2,1]", Co::Vt, {}};
        comps[3] = {"Psi1[2,2]", Co::Ut, {}};
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                NcPoly minus_delta =
                    (i == j) ? NcPoly::unit(GaussianRational(-1)) : NcPoly::zero();
                comps[0].images.push_back(minus_delta);
                comps[1].images.push_back(NcPoly::generator(ctx.u(j, i)));
                comps[2].images.push_back(NcPoly::generator(ctx.v(j, i)));
                comps[3].images.push_back(minus_delta);
            }
        for (const Comp& comp : comps) {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    NcPoly lhs = coact_coad(ctx, comp.images[i * n + j]);
                    std::vector<NcPoly> src = coaction_basis(ctx, tag(comp.source), i, j);
                    NcPoly rhs;
                    for (size_t p = 0; p < n; ++p)
                        for (size_t q = 0; q < n; ++q) {
                            const NcPoly& img = comp.images[p * n + q];
                            if (img.is_zero() || src[p * n + q].is_zero()) continue;
                            rhs = rhs + ctx.sq.mul(img, src[p * n + q]);
                        }
                    run(lhs - rhs, comp.name + " e(" + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
                }
        }
    }

    return rep;
}

} // namespace detail

VerifyReport verify_yd_colinearity(const QiMatrix& f, int degree_bound) {
    return detail::verify_yd_impl(f, degree_bound, detail::YdMutation::None);
}

} // namespace hopfres
