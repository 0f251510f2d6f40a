#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hopfres/matrix.hpp"
#include "hopfres/scalar.hpp"

namespace hopfres {

/// Ordered list of generator labels; letters are indices into it.
struct Alphabet {
    std::vector<std::string> names;
    size_t size() const { return names.size(); }
    size_t index_of(const std::string& name) const;
};

/// Monomial of the free algebra: a sequence of letters. Empty = unit.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<uint8_t> letters) : l_(std::move(letters)) {}
    static Word single(uint8_t g) { return Word(std::vector<uint8_t>{g}); }

    size_t length() const { return l_.size(); }
    bool empty() const { return l_.empty(); }
    const std::vector<uint8_t>& letters() const { return l_; }
    uint8_t operator[](size_t k) const { return l_[k]; }

    Word concat(const Word& o) const;
    Word subword(size_t pos, size_t len) const;

    /// Degree-lexicographic order.
    bool operator<(const Word& o) const;
    bool operator==(const Word& o) const { return l_ == o.l_; }
    bool operator!=(const Word& o) const { return l_ != o.l_; }

    size_t hash() const;

private:
    std::vector<uint8_t> l_;
};

struct WordHash {
    size_t operator()(const Word& w) const { return w.hash(); }
};

/// Noncommutative polynomial: finite map words -> Q(i), no zero
/// coefficients stored. Terms iterate in degree-lex order.
class NcPoly {
public:
    NcPoly() = default;
    static NcPoly zero() { return NcPoly(); }
    static NcPoly unit(const GaussianRational& c = GaussianRational(1));
    static NcPoly generator(uint8_t g, const GaussianRational& c = GaussianRational(1));
    static NcPoly monomial(const Word& w, const GaussianRational& c);

    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    int degree() const;  // -1 for zero
    const std::map<Word, GaussianRational>& terms() const { return t_; }
    GaussianRational coeff(const Word& w) const;
    uint8_t max_letter() const;

    void add_term(const Word& w, const GaussianRational& c);

    NcPoly operator+(const NcPoly& o) const;
    NcPoly operator-(const NcPoly& o) const;
    NcPoly operator*(const NcPoly& o) const;  // free product (word concatenation)
    NcPoly operator*(const GaussianRational& s) const;
    NcPoly operator-() const { return *this * GaussianRational(-1); }
    bool operator==(const NcPoly& o) const { return t_ == o.t_; }
    bool operator!=(const NcPoly& o) const { return !(*this == o); }

    std::string to_string(const Alphabet& a) const;

private:
    std::map<Word, GaussianRational> t_;
};

std::string word_to_string(const Word& w, const Alphabet& a);
Word word_from_string(const std::string& s, const Alphabet& a);

/// Matrix with entries in a free algebra.
struct AlgMatrix {
    size_t rows = 0, cols = 0;
    std::vector<NcPoly> entries;

    AlgMatrix() = default;
    AlgMatrix(size_t r, size_t c) : rows(r), cols(c), entries(r * c) {}

    NcPoly& at(size_t i, size_t j) { return entries[i * cols + j]; }
    const NcPoly& at(size_t i, size_t j) const { return entries[i * cols + j]; }

    static AlgMatrix from_scalar(const QiMatrix& m);
    /// n x n matrix whose (i,j) entry is the letter first + i*n + j.
    static AlgMatrix generators(uint8_t first, size_t n);

    AlgMatrix transpose() const;
    AlgMatrix operator+(const AlgMatrix& o) const;
    AlgMatrix operator-(const AlgMatrix& o) const;
    AlgMatrix operator*(const AlgMatrix& o) const;
    NcPoly trace() const;
};

} // namespace hopfres
