#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfres/membership.hpp"
#include "hopfres/presentation.hpp"
#include "hopfres/resolution.hpp"
#include "hopfres/verify.hpp"

using namespace hopfres;

namespace {

QiMatrix diag(std::initializer_list<Rational> d) {
    std::vector<GaussianRational> v;
    for (const Rational& r : d) v.push_back(GaussianRational(r));
    return QiMatrix::diag(v);
}

NcPoly gen(const Presentation& p, const std::string& name) {
    return NcPoly::generator(static_cast<uint8_t>(p.alphabet.index_of(name)));
}

NcPoly random_poly(std::mt19937_64& rng, size_t letters, int maxdeg, int terms) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> deg(0, maxdeg);
    std::uniform_int_distribution<int> letter(0, static_cast<int>(letters) - 1);
    NcPoly p;
    for (int t = 0; t < terms; ++t) {
        std::vector<uint8_t> w(deg(rng));
        for (auto& l : w) l = static_cast<uint8_t>(letter(rng));
        p.add_term(Word(std::move(w)), GaussianRational(coef(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("free algebra is noncommutative") {
    Presentation p = presentation_B(QiMatrix::identity(2));
    NcPoly x11 = gen(p, "x11"), x12 = gen(p, "x12");
    CHECK(x11 * x12 != x12 * x11);
    CHECK(NcPoly::unit() * x11 == x11);
    NcPoly sq = (x11 + x12) * (x11 + x12);
    CHECK(sq.term_count() == 4);
}

TEST_CASE("free algebra axioms on random polynomials") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 40; ++t) {
        NcPoly a = random_poly(rng, 4, 3, 4);
        NcPoly b = random_poly(rng, 4, 3, 4);
        NcPoly c = random_poly(rng, 4, 3, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
    }
}

TEST_CASE("built-in presentations") {
    Presentation h = presentation_H(QiMatrix::identity(2));
    CHECK(h.alphabet.size() == 8);
    CHECK(h.relations.size() == 16);
    // (u v^t)_11 - 1 = u11 v11 + u12 v12 - 1
    NcPoly expected = gen(h, "u11") * gen(h, "v11") + gen(h, "u12") * gen(h, "v12") -
                      NcPoly::unit();
    CHECK(h.relations[0] == expected);

    Presentation b = presentation_B(QiMatrix::identity(2));
    CHECK(b.relations.size() == 8);

    Presentation a = presentation_A(QiMatrix::identity(2));
    CHECK(a.relations.size() == 9);
    NcPoly gg = gen(a, "g") * gen(a, "g") - NcPoly::unit();
    CHECK(a.relations.back() == gg);
}

TEST_CASE("counit kills every relation of every built-in presentation") {
    std::vector<Presentation> ps = {presentation_B(QiMatrix::identity(2)),
                                    presentation_B(diag({1, 2})),
                                    presentation_H(QiMatrix::identity(2)),
                                    presentation_H(diag({Rational(1, 2), Rational(1), Rational(2)})),
                                    presentation_A(QiMatrix::identity(2)),
                                    presentation_CZ2()};
    for (const Presentation& p : ps) {
        for (const NcPoly& r : p.relations) CHECK(p.counit_eval(r).is_zero());
        Presentation sq = tensor_square(p);
        for (const NcPoly& r : sq.relations) CHECK(sq.counit_eval(r).is_zero());
    }
}

TEST_CASE("tensor squares") {
    Presentation h = presentation_H(QiMatrix::identity(2));
    Presentation sq = tensor_square(h);
    CHECK(sq.alphabet.size() == 16);
    CHECK(sq.cross_.second == 64);
    CHECK(sq.relations.size() == 16 + 16 + 64);
    // left copy relation present
    CHECK(sq.relations[0] == h.relations[0]);
    // cross relation: u11' u11 - u11 u11' (right-letter times left-letter first)
    size_t u11 = h.alphabet.index_of("u11");
    size_t v11 = h.alphabet.index_of("v11");
    NcPoly cross =
        NcPoly::monomial(Word(std::vector<uint8_t>{static_cast<uint8_t>(8 + v11),
                                                   static_cast<uint8_t>(u11)}),
                         GaussianRational(1)) -
        NcPoly::monomial(Word(std::vector<uint8_t>{static_cast<uint8_t>(u11),
                                                   static_cast<uint8_t>(8 + v11)}),
                         GaussianRational(1));
    bool found = false;
    for (const NcPoly& r : sq.relations) found = found || (r == cross);
    CHECK(found);
    // normal ordering: cross relations rewrite to zero
    CHECK(sq.normalize(cross).is_zero());
    // normalization is multiplicative on the embeddings
    NcPoly l = embed_left(h.relations[0]);
    NcPoly r = embed_right(h.relations[1], 8);
    CHECK(sq.mul(l, r) == sq.mul(r, l));
}

TEST_CASE("ideal membership: worked examples") {
    Presentation h = presentation_H(QiMatrix::identity(2));
    IdealSpan span(h, 3);

    // a relation is a member with the trivial certificate
    MembershipResult r0 = span.query(h.relations[0]);
    REQUIRE(r0.status == Membership::Member);
    REQUIRE(r0.cert.terms.size() == 1);
    CHECK(r0.cert.terms[0].left.empty());
    CHECK(r0.cert.terms[0].right.empty());
    CHECK(r0.cert.terms[0].coef == GaussianRational(1));

    // left multiple of a relation: u11 ((u v^t)_22 - 1)
    NcPoly q = gen(h, "u11") * (gen(h, "u21") * gen(h, "v21") +
                                gen(h, "u22") * gen(h, "v22") - NcPoly::unit());
    MembershipResult r1 = span.query(q);
    CHECK(r1.status == Membership::Member);
    CHECK(replay_certificate(r1.cert, h.relations) == q);

    // missing the -1: the counit evaluates to 1
    NcPoly bad = gen(h, "u11") * gen(h, "v11") + gen(h, "u12") * gen(h, "v12");
    CHECK(span.query(bad).status == Membership::NotMemberByCounit);

    // degree bound enforcement
    NcPoly deep = gen(h, "u11") * gen(h, "u11") * gen(h, "u11") * gen(h, "u11");
    CHECK_THROWS_AS(span.query(deep), DegreeExceedsBound);

    // a random counit-killed but non-member polynomial stays undecided
    NcPoly und = gen(h, "u11") - gen(h, "u22");
    CHECK(span.query(und).status == Membership::Undecided);
}

TEST_CASE("membership is monotone in the bound") {
    Presentation h = presentation_H(QiMatrix::identity(2));
    NcPoly q = gen(h, "u11") * (gen(h, "u21") * gen(h, "v21") +
                                gen(h, "u22") * gen(h, "v22") - NcPoly::unit());
    for (int d : {3, 4, 5}) {
        MembershipResult r = ideal_member(q, h, d);
        CHECK(r.status == Membership::Member);
        CHECK(replay_certificate(r.cert, h.relations) == q);
    }
}

TEST_CASE("hopf maps: worked examples") {
    Presentation h = presentation_H(QiMatrix::identity(2));
    HopfMaps hm = hopf_maps(h);

    for (const NcPoly& r : h.relations) CHECK(hm.counit(r).is_zero());

    // Delta(u11) = u11 (x) u11' + u12 (x) u21'
    NcPoly d = hm.delta(gen(h, "u11"));
    NcPoly expected;
    expected.add_term(Word(std::vector<uint8_t>{0, 8}), GaussianRational(1));   // u11 u11'
    expected.add_term(Word(std::vector<uint8_t>{1, 10}), GaussianRational(1));  // u12 u21'
    CHECK(d == expected);

    // S(u12) = v21
    CHECK(hm.antipode(gen(h, "u12")) == gen(h, "v21"));

    // S on B(E): S(x) = E^-1 x^t E
    QiMatrix e(2, 2);
    e.at(0, 1) = GaussianRational(1);
    e.at(1, 0) = GaussianRational(-1);
    Presentation b = presentation_B(e);
    HopfMaps hb = hopf_maps(b);
    // E^-1 x^t E with E = [[0,1],[-1,0]]: S(x11) = (E^-1 x^t E)_11
    NcPoly s11 = hb.antipode(gen(b, "x11"));
    CHECK(s11 == gen(b, "x22"));
}

TEST_CASE("verify_hopf on the three presentations at n = 2") {
    CHECK(verify_hopf(presentation_H(QiMatrix::identity(2)), 4).ok());
    CHECK(verify_hopf(presentation_B(QiMatrix::identity(2)), 4).ok());
    CHECK(verify_hopf(presentation_A(QiMatrix::identity(2)), 4).ok());
    CHECK(verify_hopf(presentation_CZ2(), 4).ok());
}

TEST_CASE("verify_hopf on tensor squares") {
    CHECK(verify_hopf(tensor_square(presentation_CZ2()), 4).ok());
    CHECK(verify_hopf(tensor_square(presentation_B(QiMatrix::identity(2))), 4).ok());
}

TEST_CASE("verify_hopf at n = 3 and with Gaussian entries") {
    CHECK(verify_hopf(presentation_H(QiMatrix::identity(3)), 4).ok());
    QiMatrix e(2, 2);
    e.at(0, 1) = GaussianRational(1);
    e.at(1, 0) = GaussianRational::i();
    CHECK(verify_hopf(presentation_B(e), 4).ok());
    CHECK(verify_glued_embedding(e, 4).ok());
    CHECK(verify_resolution_complex(Algebra::B, e, 3).ok());
}

TEST_CASE("verify_hopf negative controls") {
    // dropped relation: v^t u - I entries removed
    Presentation h = presentation_H(QiMatrix::identity(2));
    Presentation dropped = h;
    dropped.relations.erase(dropped.relations.begin() + 4, dropped.relations.begin() + 8);
    VerifyReport rd = verify_hopf(dropped, 4);
    CHECK_FALSE(rd.ok());

    // sign-flipped relation: eps no longer kills it
    Presentation flipped = h;
    flipped.relations[0] = gen(h, "u11") * gen(h, "v11") + gen(h, "u12") * gen(h, "v12") +
                           NcPoly::unit();
    VerifyReport rf = verify_hopf(flipped, 4);
    CHECK(rf.status == VerifyStatus::Failed);
}

TEST_CASE("verify_grading") {
    CHECK(verify_grading(presentation_A(QiMatrix::identity(2))));
    CHECK(verify_grading(presentation_B(QiMatrix::identity(2))));
    Presentation bad = presentation_B(QiMatrix::identity(2));
    bad.relations.push_back(gen(bad, "x11") - NcPoly::unit());
    CHECK_FALSE(verify_grading(bad));
}

TEST_CASE("resolution matrices: worked examples") {
    // B, E = I2: Phi3 column = flatten(x - I)
    ResolutionData rb = resolution_matrices(Algebra::B, QiMatrix::identity(2));
    const Presentation& pb = rb.pres;
    CHECK(rb.maps[2].rows == 4);
    CHECK(rb.maps[2].at(0, 0) == gen(pb, "x11") - NcPoly::unit());
    CHECK(rb.maps[2].at(1, 0) == gen(pb, "x12"));
    CHECK(rb.maps[2].at(2, 0) == gen(pb, "x21"));
    CHECK(rb.maps[2].at(3, 0) == gen(pb, "x22") - NcPoly::unit());

    // H, F = I2: Psi1 places u_kj at (row 1, column (j,k)) of the B block
    ResolutionData rh = resolution_matrices(Algebra::H, QiMatrix::identity(2));
    const Presentation& ph = rh.pres;
    const size_t n2 = 4;
    for (size_t j = 0; j < 2; ++j)
        for (size_t k = 0; k < 2; ++k) {
            std::string name = "u" + std::to_string(k + 1) + std::to_string(j + 1);
            CHECK(rh.maps[0].at(0, n2 + j * 2 + k) == gen(ph, name));
        }

    // transpose blocks of Psi2 are permutation matrices with unit entries
    for (size_t j = 0; j < 2; ++j)
        for (size_t k = 0; k < 2; ++k) {
            // A |-> A^t block: column (j,k) has a unit at row (k,j)
            CHECK(rh.maps[1].at(k * 2 + j, j * 2 + k) == NcPoly::unit());
        }
}

TEST_CASE("verify_resolution_complex for all three algebras at n in {2,3}") {
    for (size_t n : {2u, 3u}) {
        CHECK(verify_resolution_complex(Algebra::B, QiMatrix::identity(n), 3).ok());
        CHECK(verify_resolution_complex(Algebra::A, QiMatrix::identity(n), 3).ok());
        CHECK(verify_resolution_complex(Algebra::H, QiMatrix::identity(n), 3).ok());
    }
    CHECK(verify_resolution_complex(Algebra::CZ2, QiMatrix::identity(1), 3).ok());

    QiMatrix e(2, 2);
    e.at(0, 1) = GaussianRational(1);
    e.at(1, 0) = GaussianRational(Rational(1, 2));
    CHECK(verify_resolution_complex(Algebra::B, e, 3).ok());
}

TEST_CASE("verify_resolution_complex negative control: sign flip") {
    ResolutionData rd = resolution_matrices(Algebra::H, QiMatrix::identity(2));
    // flip the sign of one entry of Psi2
    rd.maps[1].at(0, 0) = -rd.maps[1].at(0, 0);
    VerifyReport rep = verify_resolution_data(rd, 3);
    CHECK_FALSE(rep.ok());
}

TEST_CASE("certificates replay exactly through plain poly ops") {
    ResolutionData rd = resolution_matrices(Algebra::B, QiMatrix::identity(2));
    VerifyReport rep = verify_resolution_data(rd, 3);
    REQUIRE(rep.ok());
    CHECK(rep.certificates.size() > 0);
    for (const CertEntry& e : rep.certificates)
        CHECK(replay_certificate(e.cert, rd.pres.relations) == e.query);
}

TEST_CASE("verify_glued_embedding at E = I2") {
    VerifyReport rep = verify_glued_embedding(QiMatrix::identity(2), 4);
    CHECK(rep.ok());
    CHECK(rep.composite_checks == 4);
    Presentation pres = presentation_A(QiMatrix::identity(2));
    for (const CertEntry& e : rep.certificates)
        CHECK(replay_certificate(e.cert, pres.relations) == e.query);
}

TEST_CASE("glued embedding negative control: v-hat without the g prefix") {
    QiMatrix e = QiMatrix::identity(2);
    Presentation pres = presentation_A(e);
    AlgMatrix uhat = glued_u_hat(e);
    // wrong v-hat: E^t x E^-t without the leading g
    AlgMatrix vbad = AlgMatrix::generators(0, 2);
    AlgMatrix defect = uhat * vbad.transpose() - AlgMatrix::from_scalar(QiMatrix::identity(2));
    IdealSpan span(pres, 4);
    bool all_member = true;
    for (const NcPoly& entry : defect.entries)
        all_member = all_member && (span.query(entry).status == Membership::Member);
    CHECK_FALSE(all_member);
}

TEST_CASE("word serialization round trip") {
    Presentation h = presentation_H(QiMatrix::identity(2));
    Word w(std::vector<uint8_t>{0, 5, 7});
    std::string s = word_to_string(w, h.alphabet);
    CHECK(s == "u11.v12.v22");
    CHECK(word_from_string(s, h.alphabet) == w);
    CHECK(word_to_string(Word(), h.alphabet) == "");
}
