#include "hopfres/ncpoly.hpp"

#include <algorithm>

namespace hopfres {

size_t Alphabet::index_of(const std::string& name) const {
    for (size_t k = 0; k < names.size(); ++k)
        if (names[k] == name) return k;
    throw AlphabetMismatch();
}

Word Word::concat(const Word& o) const {
    std::vector<uint8_t> r;
    r.reserve(l_.size() + o.l_.size());
    r.insert(r.end(), l_.begin(), l_.end());
    r.insert(r.end(), o.l_.begin(), o.l_.end());
    return Word(std::move(r));
}

Word Word::subword(size_t pos, size_t len) const {
    return Word(std::vector<uint8_t>(l_.begin() + pos, l_.begin() + pos + len));
}

bool Word::operator<(const Word& o) const {
    if (l_.size() != o.l_.size()) return l_.size() < o.l_.size();
    return l_ < o.l_;
}

size_t Word::hash() const {
    size_t h = 0xcbf29ce484222325ULL;
    for (uint8_t c : l_) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

NcPoly NcPoly::unit(const GaussianRational& c) {
    NcPoly p;
    p.add_term(Word(), c);
    return p;
}

NcPoly NcPoly::generator(uint8_t g, const GaussianRational& c) {
    NcPoly p;
    p.add_term(Word::single(g), c);
    return p;
}

NcPoly NcPoly::monomial(const Word& w, const GaussianRational& c) {
    NcPoly p;
    p.add_term(w, c);
    return p;
}

int NcPoly::degree() const {
    if (t_.empty()) return -1;
    return static_cast<int>(t_.rbegin()->first.length());
}

GaussianRational NcPoly::coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? GaussianRational() : it->second;
}

uint8_t NcPoly::max_letter() const {
    uint8_t m = 0;
    for (const auto& [w, c] : t_)
        for (uint8_t g : w.letters()) m = std::max(m, g);
    return m;
}

void NcPoly::add_term(const Word& w, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
    NcPoly r = *this;
    for (const auto& [w, c] : o.t_) r.add_term(w, c);
    return r;
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
    NcPoly r = *this;
    for (const auto& [w, c] : o.t_) r.add_term(w, -c);
    return r;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
    NcPoly r;
    for (const auto& [w1, c1] : t_)
        for (const auto& [w2, c2] : o.t_) r.add_term(w1.concat(w2), c1 * c2);
    return r;
}

NcPoly NcPoly::operator*(const GaussianRational& s) const {
    NcPoly r;
    if (s.is_zero()) return r;
    for (const auto& [w, c] : t_) r.add_term(w, c * s);
    return r;
}

std::string word_to_string(const Word& w, const Alphabet& a) {
    std::string out;
    for (size_t k = 0; k < w.length(); ++k) {
        if (w[k] >= a.size()) throw AlphabetMismatch();
        if (k) out += ".";
        out += a.names[w[k]];
    }
    return out;
}

Word word_from_string(const std::string& s, const Alphabet& a) {
    std::vector<uint8_t> letters;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t dot = s.find('.', pos);
        if (dot == std::string::npos) dot = s.size();
        letters.push_back(static_cast<uint8_t>(a.index_of(s.substr(pos, dot - pos))));
        pos = dot + 1;
    }
    return Word(std::move(letters));
}

std::string NcPoly::to_string(const Alphabet& a) const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : t_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")";
        if (!w.empty()) out += "*" + word_to_string(w, a);
    }
    return out;
}

AlgMatrix AlgMatrix::from_scalar(const QiMatrix& m) {
    AlgMatrix r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) r.at(i, j) = NcPoly::unit(m.at(i, j));
    return r;
}

AlgMatrix AlgMatrix::generators(uint8_t first, size_t n) {
    AlgMatrix r(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            r.at(i, j) = NcPoly::generator(static_cast<uint8_t>(first + i * n + j));
    return r;
}

AlgMatrix AlgMatrix::transpose() const {
    AlgMatrix r(cols, rows);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

AlgMatrix AlgMatrix::operator+(const AlgMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw DimensionMismatch();
    AlgMatrix r(rows, cols);
    for (size_t k = 0; k < entries.size(); ++k) r.entries[k] = entries[k] + o.entries[k];
    return r;
}

AlgMatrix AlgMatrix::operator-(const AlgMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw DimensionMismatch();
    AlgMatrix r(rows, cols);
    for (size_t k = 0; k < entries.size(); ++k) r.entries[k] = entries[k] - o.entries[k];
    return r;
}

AlgMatrix AlgMatrix::operator*(const AlgMatrix& o) const {
    if (cols != o.rows) throw DimensionMismatch();
    AlgMatrix r(rows, o.cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < cols; ++k) {
            if (at(i, k).is_zero()) continue;
            for (size_t j = 0; j < o.cols; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
            }
        }
    return r;
}

NcPoly AlgMatrix::trace() const {
    if (rows != cols) throw DimensionMismatch();
    NcPoly t;
    for (size_t i = 0; i < rows; ++i) t = t + at(i, i);
    return t;
}

} // namespace hopfres
