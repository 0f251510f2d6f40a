#pragma once

#include <optional>

#include "hopfres/complexes.hpp"
#include "hopfres/ncpoly.hpp"

namespace hopfres {

enum class PresKind { B, H, A, CZ2, TensorSquare, Custom };

/// Finitely presented algebra: alphabet, relation polynomials, the counit
/// character, and an optional Z2 grading.
///
/// A tensor square carries tensor_split > 0 (the index of the first
/// right-copy letter) and an order group per letter; letters of distinct
/// groups commute and words are kept in the normal order "lower group
/// first", which rewrites the cross-commutator relations eagerly. The
/// cross-commutators are still listed in `relations` (unnormalized).
struct Presentation {
    Alphabet alphabet;
    std::vector<NcPoly> relations;
    std::vector<GaussianRational> counit;     // counit value per generator
    std::optional<std::vector<int>> grading;  // Z2 degree per generator
    size_t tensor_split = 0;
    std::vector<uint8_t> order_group;  // empty for plain presentations
    PresKind kind = PresKind::Custom;
    PresKind base_kind = PresKind::Custom;  // for tensor squares
    QiMatrix param;                         // E or F for built-ins

    bool is_tensor() const { return tensor_split > 0; }
    bool is_left_letter(uint8_t g) const { return g < tensor_split; }

    Word normalize_word(const Word& w) const;
    NcPoly normalize(const NcPoly& p) const;
    /// Product with eager normal ordering (plain concatenation when not a
    /// tensor square).
    NcPoly mul(const NcPoly& a, const NcPoly& b) const;
    AlgMatrix mul(const AlgMatrix& a, const AlgMatrix& b) const;

    GaussianRational counit_eval(const NcPoly& p) const;

    /// Position of the cross-commutator relations inside `relations` as
    /// (first, count); (0,0) for plain presentations.
    std::pair<size_t, size_t> cross_ = {0, 0};
};

/// B(E): n^2 generators x_ij, relations E^-1 x^t E x - I and x E^-1 x^t E - I,
/// Z2-graded with deg(x_ij) = 1.
Presentation presentation_B(const QiMatrix& e);

/// H(F): generators u_ij, v_ij; relations u v^t - I, v^t u - I,
/// v F u^t F^-1 - I, F u^t F^-1 v - I.
Presentation presentation_H(const QiMatrix& f);

/// A(E) = B(E) * CZ2: B(E) relations plus g^2 - 1, deg(x_ij) = deg(g) = 1.
Presentation presentation_A(const QiMatrix& e);

/// CZ2: one generator g, relation g^2 - 1.
Presentation presentation_CZ2();

/// Doubled alphabet (left copy keeps the names, right copy gets a ' suffix);
/// relations are both embedded copies plus all cross-commutators
/// right*left - left*right.
Presentation tensor_square(const Presentation& p);

/// Left/right copy embeddings into the tensor square.
NcPoly embed_left(const NcPoly& p);
NcPoly embed_right(const NcPoly& p, size_t split);

/// Comultiplication, counit and antipode of a built-in presentation (or a
/// tensor square of one), acting on NcPoly.
struct HopfMaps {
    Presentation base;
    Presentation square;               // tensor_square(base)
    std::vector<NcPoly> antipode_gen;  // over base
    std::vector<NcPoly> delta_gen;     // over square

    NcPoly delta(const NcPoly& p) const;
    NcPoly antipode(const NcPoly& p) const;
    GaussianRational counit(const NcPoly& p) const { return base.counit_eval(p); }
};

HopfMaps hopf_maps(const Presentation& p);

/// Every relation homogeneous of even Z2-degree.
bool verify_grading(const Presentation& p);

} // namespace hopfres
