#pragma once

#include "hopfres/membership.hpp"

namespace hopfres {

/// The counit resolution of one of the built-in algebras, with the maps as
/// matrices over the presented algebra acting by left multiplication on
/// flattened free-module coordinates: Phi(sum e_j a_j) = sum e_i h_ij a_j.
/// maps[k] is the matrix of Phi_{k+1}; augmentation is the row of the
/// counit map out of P_0.
struct ResolutionData {
    Algebra algebra = Algebra::B;
    Presentation pres;
    std::vector<AlgMatrix> maps;
    std::vector<NcPoly> augmentation;
};

ResolutionData resolution_matrices(Algebra alg, const QiMatrix& param);

enum class VerifyStatus { Verified, Failed, Undecided };

struct CertEntry {
    std::string label;
    NcPoly query;
    Certificate cert;
    bool on_tensor_square = false;  // certificate indexes tensor_square relations
};

struct VerifyReport {
    VerifyStatus status = VerifyStatus::Verified;
    std::string detail;  // first offending entry on failure / undecided
    size_t composite_checks = 0;
    size_t member_entries = 0;
    std::vector<CertEntry> certificates;

    bool ok() const { return status == VerifyStatus::Verified; }
    void merge_entry(VerifyStatus s, const std::string& label);
};

/// d^2 = 0 certificates: every entry of every consecutive product of
/// resolution maps is an ideal member, and the counit kills the first map.
VerifyReport verify_resolution_complex(Algebra alg, const QiMatrix& param, int degree_bound = 3);

/// Same check against explicitly given resolution data (negative controls).
VerifyReport verify_resolution_data(const ResolutionData& rd, int degree_bound);

} // namespace hopfres
