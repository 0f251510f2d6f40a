#include "hopfres/presentation.hpp"

#include <algorithm>

namespace hopfres {

Word Presentation::normalize_word(const Word& w) const {
    if (order_group.empty()) return w;
    // Stable bucket sort by order group; letters of distinct groups commute.
    uint8_t groups = 0;
    for (uint8_t g : order_group) groups = std::max<uint8_t>(groups, g + 1);
    std::vector<std::vector<uint8_t>> buckets(groups);
    for (uint8_t g : w.letters()) buckets[order_group[g]].push_back(g);
    std::vector<uint8_t> out;
    out.reserve(w.length());
    for (const auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
    return Word(std::move(out));
}

NcPoly Presentation::normalize(const NcPoly& p) const {
    if (order_group.empty()) return p;
    NcPoly r;
    for (const auto& [w, c] : p.terms()) r.add_term(normalize_word(w), c);
    return r;
}

NcPoly Presentation::mul(const NcPoly& a, const NcPoly& b) const {
    return normalize(a * b);
}

AlgMatrix Presentation::mul(const AlgMatrix& a, const AlgMatrix& b) const {
    if (a.cols != b.rows) throw DimensionMismatch();
    AlgMatrix r(a.rows, b.cols);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (size_t j = 0; j < b.cols; ++j)
                r.at(i, j) = r.at(i, j) + mul(a.at(i, k), b.at(k, j));
        }
    return r;
}

GaussianRational Presentation::counit_eval(const NcPoly& p) const {
    GaussianRational total;
    for (const auto& [w, c] : p.terms()) {
        GaussianRational v = c;
        for (uint8_t g : w.letters()) {
            if (g >= counit.size()) throw AlphabetMismatch();
            v *= counit[g];
            if (v.is_zero()) break;
        }
        total += v;
    }
    return total;
}

namespace {

std::string idx_name(const std::string& base, size_t i, size_t j) {
    return base + std::to_string(i + 1) + std::to_string(j + 1);
}

void append_relation_entries(std::vector<NcPoly>& rels, const AlgMatrix& m) {
    for (const NcPoly& p : m.entries) rels.push_back(p);
}

} // namespace

Presentation presentation_B(const QiMatrix& e) {
    const size_t n = e.rows();
    const QiMatrix einv = inverse(e);
    Presentation p;
    p.kind = PresKind::B;
    p.param = e;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) p.alphabet.names.push_back(idx_name("x", i, j));
    p.counit.assign(n * n, GaussianRational(0));
    for (size_t i = 0; i < n; ++i) p.counit[i * n + i] = GaussianRational(1);
    p.grading = std::vector<int>(n * n, 1);

    AlgMatrix x = AlgMatrix::generators(0, n);
    AlgMatrix se = AlgMatrix::from_scalar(e);
    AlgMatrix seinv = AlgMatrix::from_scalar(einv);
    AlgMatrix id = AlgMatrix::from_scalar(QiMatrix::identity(n));
    append_relation_entries(p.relations, seinv * x.transpose() * se * x - id);
    append_relation_entries(p.relations, x * seinv * x.transpose() * se - id);
    return p;
}

Presentation presentation_H(const QiMatrix& f) {
    const size_t n = f.rows();
    const QiMatrix finv = inverse(f);
    Presentation p;
    p.kind = PresKind::H;
    p.param = f;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) p.alphabet.names.push_back(idx_name("u", i, j));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) p.alphabet.names.push_back(idx_name("v", i, j));
    p.counit.assign(2 * n * n, GaussianRational(0));
    for (size_t i = 0; i < n; ++i) {
        p.counit[i * n + i] = GaussianRational(1);
        p.counit[n * n + i * n + i] = GaussianRational(1);
    }

    AlgMatrix u = AlgMatrix::generators(0, n);
    AlgMatrix v = AlgMatrix::generators(static_cast<uint8_t>(n * n), n);
    AlgMatrix sf = AlgMatrix::from_scalar(f);
    AlgMatrix sfinv = AlgMatrix::from_scalar(finv);
    AlgMatrix id = AlgMatrix::from_scalar(QiMatrix::identity(n));
    append_relation_entries(p.relations, u * v.transpose() - id);
    append_relation_entries(p.relations, v.transpose() * u - id);
    append_relation_entries(p.relations, v * sf * u.transpose() * sfinv - id);
    append_relation_entries(p.relations, sf * u.transpose() * sfinv * v - id);
    return p;
}

Presentation presentation_A(const QiMatrix& e) {
    const size_t n = e.rows();
    Presentation p = presentation_B(e);
    p.kind = PresKind::A;
    p.alphabet.names.push_back("g");
    p.counit.push_back(GaussianRational(1));
    p.grading->push_back(1);
    const uint8_t g = static_cast<uint8_t>(n * n);
    p.relations.push_back(NcPoly::generator(g) * NcPoly::generator(g) - NcPoly::unit());
    return p;
}

Presentation presentation_CZ2() {
    Presentation p;
    p.kind = PresKind::CZ2;
    p.alphabet.names = {"g"};
    p.counit = {GaussianRational(1)};
    p.grading = std::vector<int>{1};
    p.relations.push_back(NcPoly::generator(0) * NcPoly::generator(0) - NcPoly::unit());
    return p;
}

NcPoly embed_left(const NcPoly& p) { return p; }

NcPoly embed_right(const NcPoly& p, size_t split) {
    NcPoly r;
    for (const auto& [w, c] : p.terms()) {
        std::vector<uint8_t> letters;
        letters.reserve(w.length());
        for (uint8_t g : w.letters()) letters.push_back(static_cast<uint8_t>(g + split));
        r.add_term(Word(std::move(letters)), c);
    }
    return r;
}

Presentation tensor_square(const Presentation& p) {
    const size_t m = p.alphabet.size();
    if (2 * m > 230) throw Error("tensor square alphabet too large");
    Presentation q;
    q.kind = PresKind::TensorSquare;
    q.base_kind = p.kind;
    q.param = p.param;
    q.tensor_split = m;
    for (const std::string& s : p.alphabet.names) q.alphabet.names.push_back(s);
    for (const std::string& s : p.alphabet.names) q.alphabet.names.push_back(s + "'");
    q.counit = p.counit;
    q.counit.insert(q.counit.end(), p.counit.begin(), p.counit.end());
    uint8_t base_groups = 1;
    std::vector<uint8_t> bg = p.order_group;
    if (bg.empty()) bg.assign(m, 0);
    for (uint8_t g : bg) base_groups = std::max<uint8_t>(base_groups, g + 1);
    q.order_group.resize(2 * m);
    for (size_t k = 0; k < m; ++k) {
        q.order_group[k] = bg[k];
        q.order_group[m + k] = static_cast<uint8_t>(bg[k] + base_groups);
    }
    for (const NcPoly& r : p.relations) q.relations.push_back(embed_left(r));
    for (const NcPoly& r : p.relations) q.relations.push_back(embed_right(r, m));
    q.cross_ = {q.relations.size(), m * m};
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) {
            uint8_t left = static_cast<uint8_t>(a);
            uint8_t right = static_cast<uint8_t>(m + b);
            NcPoly cross =
                NcPoly::monomial(Word(std::vector<uint8_t>{right, left}), GaussianRational(1)) -
                NcPoly::monomial(Word(std::vector<uint8_t>{left, right}), GaussianRational(1));
            q.relations.push_back(cross);
        }
    return q;
}

namespace {

// Antipode images of the generators of a built-in presentation.
std::vector<NcPoly> builtin_antipode(const Presentation& p) {
    const QiMatrix& par = p.param;
    std::vector<NcPoly> s;
    switch (p.kind) {
        case PresKind::B:
        case PresKind::A: {
            const size_t n = par.rows();
            AlgMatrix x = AlgMatrix::generators(0, n);
            AlgMatrix sx =
                AlgMatrix::from_scalar(inverse(par)) * x.transpose() * AlgMatrix::from_scalar(par);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) s.push_back(sx.at(i, j));
            if (p.kind == PresKind::A) s.push_back(NcPoly::generator(static_cast<uint8_t>(n * n)));
            return s;
        }
        case PresKind::H: {
            const size_t n = par.rows();
            AlgMatrix u = AlgMatrix::generators(0, n);
            AlgMatrix v = AlgMatrix::generators(static_cast<uint8_t>(n * n), n);
            AlgMatrix su = v.transpose();
            AlgMatrix sv =
                AlgMatrix::from_scalar(par) * u.transpose() * AlgMatrix::from_scalar(inverse(par));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) s.push_back(su.at(i, j));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) s.push_back(sv.at(i, j));
            return s;
        }
        case PresKind::CZ2:
            return {NcPoly::generator(0)};
        default:
            throw UnsupportedPresentation();
    }
}

// Coproduct images of the generators over tensor_square(p): the generator
// matrices are corepresentations, g is group-like.
std::vector<NcPoly> builtin_delta(const Presentation& p, size_t split) {
    std::vector<NcPoly> d;
    auto matrix_block = [&](size_t first, size_t n) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                NcPoly sum;
                for (size_t k = 0; k < n; ++k)
                    sum.add_term(Word(std::vector<uint8_t>{
                                     static_cast<uint8_t>(first + i * n + k),
                                     static_cast<uint8_t>(split + first + k * n + j)}),
                                 GaussianRational(1));
                d.push_back(sum);
            }
    };
    switch (p.kind) {
        case PresKind::B:
            matrix_block(0, p.param.rows());
            return d;
        case PresKind::A: {
            const size_t n = p.param.rows();
            matrix_block(0, n);
            d.push_back(NcPoly::monomial(
                Word(std::vector<uint8_t>{static_cast<uint8_t>(n * n),
                                          static_cast<uint8_t>(split + n * n)}),
                GaussianRational(1)));
            return d;
        }
        case PresKind::H: {
            const size_t n = p.param.rows();
            matrix_block(0, n);
            matrix_block(n * n, n);
            return d;
        }
        case PresKind::CZ2:
            d.push_back(NcPoly::monomial(
                Word(std::vector<uint8_t>{0, static_cast<uint8_t>(split)}), GaussianRational(1)));
            return d;
        default:
            throw UnsupportedPresentation();
    }
}

Presentation rebuild_builtin(PresKind kind, const QiMatrix& param) {
    switch (kind) {
        case PresKind::B: return presentation_B(param);
        case PresKind::H: return presentation_H(param);
        case PresKind::A: return presentation_A(param);
        case PresKind::CZ2: return presentation_CZ2();
        default: throw UnsupportedPresentation();
    }
}

} // namespace

HopfMaps hopf_maps(const Presentation& p) {
    HopfMaps hm;
    if (p.kind == PresKind::TensorSquare) {
        // Hopf structure of H (x) H: S = S (x) S; Delta = (id (x) flip (x) id)
        // after Delta (x) Delta. Both are letter remappings of the base images.
        HopfMaps inner = hopf_maps(rebuild_builtin(p.base_kind, p.param));
        hm.base = p;
        hm.square = tensor_square(p);
        const size_t m = inner.base.alphabet.size();
        for (size_t g = 0; g < m; ++g) hm.antipode_gen.push_back(inner.antipode_gen[g]);
        for (size_t g = 0; g < m; ++g)
            hm.antipode_gen.push_back(embed_right(inner.antipode_gen[g], m));
        // Letters of square(square): L1 = [0,m), R1 = [m,2m), L2 = [2m,3m),
        // R2 = [3m,4m). delta of a left letter lands in (L1, L2), of a right
        // letter in (R1, R2).
        auto remap = [&](const NcPoly& q, size_t first_off, size_t second_off) {
            NcPoly r;
            for (const auto& [w, c] : q.terms()) {
                std::vector<uint8_t> ls;
                for (uint8_t g : w.letters())
                    ls.push_back(static_cast<uint8_t>(g < m ? g + first_off : g - m + second_off));
                r.add_term(hm.square.normalize_word(Word(std::move(ls))), c);
            }
            return r;
        };
        for (size_t g = 0; g < m; ++g) hm.delta_gen.push_back(remap(inner.delta_gen[g], 0, 2 * m));
        for (size_t g = 0; g < m; ++g) hm.delta_gen.push_back(remap(inner.delta_gen[g], m, 3 * m));
        return hm;
    }
    if (p.kind == PresKind::Custom) throw UnsupportedPresentation();
    hm.base = p;
    hm.square = tensor_square(p);
    hm.antipode_gen = builtin_antipode(p);
    hm.delta_gen = builtin_delta(p, p.alphabet.size());
    return hm;
}

NcPoly HopfMaps::delta(const NcPoly& p) const {
    NcPoly out;
    for (const auto& [w, c] : p.terms()) {
        NcPoly prod = NcPoly::unit(c);
        for (uint8_t g : w.letters()) prod = square.mul(prod, delta_gen[g]);
        out = out + prod;
    }
    return out;
}

NcPoly HopfMaps::antipode(const NcPoly& p) const {
    NcPoly out;
    for (const auto& [w, c] : p.terms()) {
        NcPoly prod = NcPoly::unit(c);
        for (size_t k = w.length(); k-- > 0;) prod = base.mul(prod, antipode_gen[w[k]]);
        out = out + prod;
    }
    return out;
}

bool verify_grading(const Presentation& p) {
    if (!p.grading) throw Error("presentation carries no grading");
    const std::vector<int>& deg = *p.grading;
    for (const NcPoly& r : p.relations) {
        for (const auto& [w, c] : r.terms()) {
            int d = 0;
            for (uint8_t g : w.letters()) d += deg[g];
            if (d % 2 != 0) return false;
        }
    }
    return true;
}

} // namespace hopfres
