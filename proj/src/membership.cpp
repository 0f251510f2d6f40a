#include "hopfres/membership.hpp"

#include <deque>
#include <map>
#include <unordered_set>

namespace hopfres {

NcPoly replay_certificate(const Certificate& c, const std::vector<NcPoly>& relations) {
    NcPoly sum;
    for (const CertTerm& t : c.terms) {
        if (t.rel >= relations.size()) throw Error("certificate references unknown relation");
        NcPoly prod = NcPoly::monomial(t.left, t.coef) * relations[t.rel] *
                      NcPoly::monomial(t.right, GaussianRational(1));
        sum = sum + prod;
    }
    return sum;
}

struct IdealSpan::Impl {
    Presentation pres;
    int bound;

    struct Rel {
        size_t orig;      // index into pres.relations
        NcPoly norm;      // normalized polynomial (nonzero)
        int deg;          // max word length of the original relation
        bool left_copy;   // tensor only: letters below the split
    };
    std::vector<Rel> rels;

    std::vector<Word> words;
    std::unordered_map<Word, int, WordHash> word_id;
    std::deque<int> word_queue;

    struct Gen {
        size_t rel;  // original relation index
        Word left;
        Word right;
    };
    std::vector<Gen> gens;
    std::unordered_set<std::string> gen_seen;

    using Sparse = std::map<int, GaussianRational>;  // word id -> coefficient
    struct Row {
        Sparse v;
        std::map<size_t, GaussianRational> hist;  // generator -> coefficient
        int pivot = -1;
    };
    std::vector<Row> rows;
    std::unordered_map<int, size_t> pivot_row;              // word id -> row
    std::unordered_map<int, std::vector<size_t>> col_rows;  // word id -> rows touching it

    explicit Impl(const Presentation& p, int degree_bound) : pres(p), bound(degree_bound) {
        const auto [cross_first, cross_count] = p.cross_;
        for (size_t k = 0; k < p.relations.size(); ++k) {
            if (cross_count > 0 && k >= cross_first && k < cross_first + cross_count)
                continue;  // cross-commutators are rewritten eagerly by normalization
            NcPoly norm = p.normalize(p.relations[k]);
            if (norm.is_zero()) continue;
            Rel r;
            r.orig = k;
            r.norm = norm;
            r.deg = p.relations[k].degree();
            r.left_copy = true;
            if (p.is_tensor()) {
                for (const auto& [w, c] : norm.terms())
                    for (uint8_t g : w.letters())
                        if (!p.is_left_letter(g)) r.left_copy = false;
            }
            rels.push_back(std::move(r));
        }
    }

    int ensure_word(const Word& w) {
        auto it = word_id.find(w);
        if (it != word_id.end()) return it->second;
        int id = static_cast<int>(words.size());
        words.push_back(w);
        word_id.emplace(w, id);
        word_queue.push_back(id);
        return id;
    }

    static std::string gen_key(size_t rel, const Word& left, const Word& right) {
        std::string k;
        k.reserve(left.length() + right.length() + 8);
        k += std::to_string(rel);
        k += '#';
        for (uint8_t g : left.letters()) k += static_cast<char>(g + 1);
        k += '\0';
        for (uint8_t g : right.letters()) k += static_cast<char>(g + 1);
        return k;
    }

    void try_generator(const Rel& r, const Word& left, const Word& right) {
        if (static_cast<int>(left.length() + right.length()) + r.deg > bound) return;
        std::string key = gen_key(r.orig, left, right);
        if (!gen_seen.insert(key).second) return;
        NcPoly span = pres.normalize(NcPoly::monomial(left, GaussianRational(1)) *
                                     pres.relations[r.orig] *
                                     NcPoly::monomial(right, GaussianRational(1)));
        if (span.is_zero()) return;
        gens.push_back(Gen{r.orig, left, right});
        Row row;
        for (const auto& [w, c] : span.terms()) row.v.emplace(ensure_word(w), c);
        row.hist.emplace(gens.size() - 1, GaussianRational(1));
        insert_row(std::move(row));
    }

    // All occurrences of relation monomials inside w, for plain presentations.
    void discover_plain(const Word& w) {
        for (const Rel& r : rels) {
            for (const auto& [m, c] : r.norm.terms()) {
                if (m.length() > w.length()) continue;
                for (size_t pos = 0; pos + m.length() <= w.length(); ++pos) {
                    if (w.subword(pos, m.length()) != m) continue;
                    try_generator(r, w.subword(0, pos),
                                  w.subword(pos + m.length(), w.length() - pos - m.length()));
                }
            }
        }
    }

    // Tensor case: w is normal-ordered as alpha * beta. Left-copy relations
    // act inside alpha (the beta tail rides along on the right), right-copy
    // relations inside beta.
    void discover_tensor(const Word& w) {
        size_t b = 0;
        while (b < w.length() && pres.is_left_letter(w[b])) ++b;
        const Word alpha = w.subword(0, b);
        const Word beta = w.subword(b, w.length() - b);
        for (const Rel& r : rels) {
            if (r.left_copy) {
                for (const auto& [m, c] : r.norm.terms()) {
                    if (m.length() > alpha.length()) continue;
                    for (size_t pos = 0; pos + m.length() <= alpha.length(); ++pos) {
                        if (alpha.subword(pos, m.length()) != m) continue;
                        Word tail = alpha
                                        .subword(pos + m.length(),
                                                 alpha.length() - pos - m.length())
                                        .concat(beta);
                        try_generator(r, alpha.subword(0, pos), tail);
                    }
                }
            } else {
                for (const auto& [m, c] : r.norm.terms()) {
                    if (m.length() > beta.length()) continue;
                    for (size_t pos = 0; pos + m.length() <= beta.length(); ++pos) {
                        if (beta.subword(pos, m.length()) != m) continue;
                        try_generator(r, alpha.concat(beta.subword(0, pos)),
                                      beta.subword(pos + m.length(),
                                                   beta.length() - pos - m.length()));
                    }
                }
            }
        }
    }

    void drain_queue() {
        while (!word_queue.empty()) {
            int id = word_queue.front();
            word_queue.pop_front();
            Word w = words[id];
            if (pres.is_tensor())
                discover_tensor(w);
            else
                discover_plain(w);
        }
    }

    // working -= coef * row, tracking the generator combination.
    static void axpy(Sparse& working, std::map<size_t, GaussianRational>* combo,
                     GaussianRational coef, const Row& row) {
        for (const auto& [col, val] : row.v) {
            auto it = working.find(col);
            if (it == working.end()) {
                GaussianRational nv = -(coef * val);
                if (!nv.is_zero()) working.emplace(col, nv);
            } else {
                it->second -= coef * val;
                if (it->second.is_zero()) working.erase(it);
            }
        }
        if (combo)
            for (const auto& [g, val] : row.hist) {
                auto it = combo->find(g);
                if (it == combo->end()) {
                    GaussianRational nv = coef * val;
                    if (!nv.is_zero()) combo->emplace(g, nv);
                } else {
                    it->second += coef * val;
                    if (it->second.is_zero()) combo->erase(it);
                }
            }
    }

    // Reduce against the stored (fully inter-reduced) rows.
    void reduce(Sparse& working, std::map<size_t, GaussianRational>* combo) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = working.rbegin(); it != working.rend(); ++it) {
                auto pr = pivot_row.find(it->first);
                if (pr == pivot_row.end()) continue;
                axpy(working, combo, it->second, rows[pr->second]);
                changed = true;
                break;
            }
        }
    }

    void insert_row(Row&& row) {
        std::map<size_t, GaussianRational> combo;
        reduce(row.v, &combo);
        // row now equals gen - combo . gens
        for (const auto& [g, c] : combo) {
            auto it = row.hist.find(g);
            if (it == row.hist.end())
                row.hist.emplace(g, -c);
            else {
                it->second -= c;
                if (it->second.is_zero()) row.hist.erase(it);
            }
        }
        if (row.v.empty()) return;
        // Pivot: the largest remaining word (deg-lex).
        int pivot = row.v.rbegin()->first;
        GaussianRational inv = row.v.rbegin()->second.inv();
        for (auto& [col, val] : row.v) val *= inv;
        for (auto& [g, val] : row.hist) val *= inv;
        row.pivot = pivot;
        size_t idx = rows.size();
        // Jordan step: clear the new pivot column from all stored rows.
        std::vector<size_t> touching;
        if (auto found = col_rows.find(pivot); found != col_rows.end()) touching = found->second;
        for (size_t ri : touching) {
            Row& other = rows[ri];
            auto it = other.v.find(pivot);
            if (it == other.v.end()) continue;
            GaussianRational f = it->second;
            axpy(other.v, nullptr, f, row);
            for (const auto& [g, val] : row.hist) {
                auto h = other.hist.find(g);
                if (h == other.hist.end()) {
                    GaussianRational nv = -(f * val);
                    if (!nv.is_zero()) other.hist.emplace(g, nv);
                } else {
                    h->second -= f * val;
                    if (h->second.is_zero()) other.hist.erase(h);
                }
            }
            // register the columns newly introduced into `other`
            for (const auto& [col, val] : row.v)
                if (col != pivot && other.v.count(col)) col_rows[col].push_back(ri);
        }
        for (const auto& [col, val] : row.v) col_rows[col].push_back(idx);
        pivot_row.emplace(pivot, idx);
        rows.push_back(std::move(row));
    }
};

IdealSpan::IdealSpan(const Presentation& pres, int degree_bound)
    : impl_(std::make_unique<Impl>(pres, degree_bound)) {}

IdealSpan::~IdealSpan() = default;
IdealSpan::IdealSpan(IdealSpan&&) noexcept = default;

const Presentation& IdealSpan::presentation() const { return impl_->pres; }
int IdealSpan::degree_bound() const { return impl_->bound; }

MembershipResult IdealSpan::query(const NcPoly& p) {
    Impl& im = *impl_;
    NcPoly pn = im.pres.normalize(p);
    if (pn.degree() > im.bound) throw DegreeExceedsBound();
    MembershipResult res;
    if (pn.is_zero()) {
        res.status = Membership::Member;
        return res;
    }
    if (!im.pres.counit_eval(pn).is_zero()) {
        res.status = Membership::NotMemberByCounit;
        return res;
    }
    Impl::Sparse working;
    for (const auto& [w, c] : pn.terms()) working.emplace(im.ensure_word(w), c);
    im.drain_queue();
    std::map<size_t, GaussianRational> combo;
    im.reduce(working, &combo);
    if (!working.empty()) {
        res.status = Membership::Undecided;
        return res;
    }
    res.status = Membership::Member;
    for (const auto& [g, c] : combo)
        res.cert.terms.push_back(CertTerm{c, im.gens[g].left, im.gens[g].rel, im.gens[g].right});
    // Internal soundness check: the certificate must replay to the query.
    NcPoly back = im.pres.normalize(replay_certificate(res.cert, im.pres.relations));
    if (back != pn) throw Error("internal error: certificate does not replay to the query");
    return res;
}

MembershipResult ideal_member(const NcPoly& p, const Presentation& pres, int degree_bound) {
    IdealSpan span(pres, degree_bound);
    return span.query(p);
}

} // namespace hopfres
