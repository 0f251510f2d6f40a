#pragma once

#include <optional>

#include "hopfres/matrix.hpp"

namespace hopfres {

enum class Asymmetry { Yes, No, UnknownNonDiagonalizable };

/// Classification of a parameter matrix F: the normalizable / generic /
/// asymmetry predicates together with P = tr(F) tr(F^-1).
struct MatrixClass {
    size_t n = 0;
    GaussianRational trace_F;
    GaussianRational trace_Finv;
    GaussianRational P;
    bool normalizable = false;
    bool generic = false;
    Asymmetry asymmetry = Asymmetry::UnknownNonDiagonalizable;
};

bool is_normalizable(const QiMatrix& f);

/// Generic <=> normalizable and not (P real with P in {0,1,2,3}); those P
/// are exactly the rational values for which the roots of
/// q^2 - sqrt(P) q + 1 = 0 are roots of unity of order >= 3.
bool is_generic(const QiMatrix& f);

/// Diagonalizable case of the asymmetry criterion: F similar to F^-1 and
/// the -1-eigenspace of even dimension. Non-diagonalizable F (minimal
/// polynomial not squarefree) reports UnknownNonDiagonalizable.
Asymmetry is_asymmetry(const QiMatrix& f);

MatrixClass classify_matrix(const QiMatrix& f);

/// Validated character of H(F): S = tau(u), T = tau(v) = S^-t.
struct CharacterH {
    QiMatrix F;
    QiMatrix S;
    QiMatrix T;
};

/// Validated character of B(E): T = tau(x).
struct CharacterB {
    QiMatrix E;
    QiMatrix T;
};

/// Validated character of A(E) = B(E) * CZ2: adds t = tau(g) in {1,-1}.
struct CharacterA {
    CharacterB base;
    GaussianRational t;
};

CharacterH validate_character_H(const QiMatrix& f, const QiMatrix& s);
CharacterB validate_character_B(const QiMatrix& e, const QiMatrix& t);
CharacterA validate_character_A(const QiMatrix& e, const QiMatrix& t, const GaussianRational& g);

struct ParamsH {
    int p = 0;   // 1 iff S = T = I
    size_t d = 0; // dim of the centralizer of F^t S
    int t = 1;   // 1 iff F^2 is a scalar multiple of T, else 2
};

struct ParamsB {
    int p = 0;   // 1 iff T = I
    size_t d = 0; // dim {K : K^t = -T^t F K}, F = E^t E^-1
    int s = 0;   // 0 iff T^t = F^-2
};

/// dim {K in M_n : KX = XK}, nullity of the flattened commutator map.
size_t centralizer_dim(const QiMatrix& x);

/// dim of the solution space of K^t + T^t F K = 0.
size_t skew_dim(const QiMatrix& f, const QiMatrix& t);

ParamsH params_H(const CharacterH& c);
ParamsB params_B(const CharacterB& c);

} // namespace hopfres
