#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfres/classify.hpp"
#include "hopfres/matrix.hpp"

namespace hopfres {

enum class Algebra { B, A, H, CZ2 };

std::string algebra_name(Algebra a);

/// Finite cochain complex of Q(i) matrices. maps[k] sends C^k to C^{k+1}
/// and has shape space_dims[k+1] x space_dims[k]; the constructor checks the
/// shapes and that maps[k+1] * maps[k] = 0 exactly.
class ScalarComplex {
public:
    ScalarComplex(std::vector<size_t> space_dims, std::vector<QiMatrix> maps);

    const std::vector<size_t>& space_dims() const { return dims_; }
    const std::vector<QiMatrix>& maps() const { return maps_; }

    /// Re-asserts the constructor invariant; returns false instead of
    /// throwing.
    bool composition_is_zero() const;

private:
    std::vector<size_t> dims_;
    std::vector<QiMatrix> maps_;
};

/// dims[k] = nullity(maps[k]) - rank(maps[k-1]), boundary maps treated as 0.
std::vector<size_t> cohomology_dims(const ScalarComplex& c);

/// Scalar dual of the B(E) counit resolution: C -> M_n(C) -> M_n(C) -> C in
/// row-major flattened coordinates.
ScalarComplex build_dual_B(const QiMatrix& e, const QiMatrix& t);

/// Scalar dual for A(E) = B(E) * CZ2; the middle space gains a C summand
/// exactly when tau(g) = -1.
ScalarComplex build_dual_A(const QiMatrix& e, const QiMatrix& t, const GaussianRational& tg);

/// Scalar dual of the H(F) counit resolution:
/// C^2 -> M_n + M_n + C -> M_n + M_n -> C^2, blocks in the order
/// (Lambda, M, nu).
ScalarComplex build_dual_H(const QiMatrix& f, const QiMatrix& s);

/// Two-term dual complex for CZ2 at the character tau(g) = t.
ScalarComplex build_dual_CZ2(const GaussianRational& t);

/// Bialgebra (Yetter-Drinfeld hom) complex for H(F): C^2 -> C^3 -> C^2 -> C^2.
ScalarComplex build_bialgebra_H(const QiMatrix& f);

/// Bialgebra complex for A(E): C -> C -> C -> C with maps (0, 2, 0).
ScalarComplex build_bialgebra_A(const QiMatrix& e);

struct ReportParams {
    std::optional<ParamsH> h;
    std::optional<ParamsB> b;
    std::optional<int> q; // A(E) only: 1 iff tau(g) = +1
};

enum class ReportMode { Formula, Rank, Both };

struct CohomologyReport {
    Algebra algebra = Algebra::H;
    std::vector<size_t> dims_by_rank;
    std::optional<std::vector<size_t>> dims_by_formula;
    ReportParams params;
    bool agree = true;
    bool genericity_warning = false;
    std::vector<std::string> warnings;
};

CohomologyReport report_H(const QiMatrix& f, const QiMatrix& s, ReportMode mode = ReportMode::Both);
CohomologyReport report_B(const QiMatrix& e, const QiMatrix& t, ReportMode mode = ReportMode::Both);
CohomologyReport report_A(const QiMatrix& e, const QiMatrix& t, const GaussianRational& tg,
                          ReportMode mode = ReportMode::Both);
CohomologyReport report_CZ2(const GaussianRational& t, ReportMode mode = ReportMode::Both);

CohomologyReport report_bialgebra_H(const QiMatrix& f);
CohomologyReport report_bialgebra_A(const QiMatrix& e);

} // namespace hopfres
