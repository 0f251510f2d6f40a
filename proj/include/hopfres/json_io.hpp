#pragma once

#include <string>

#include "hopfres/complexes.hpp"
#include "hopfres/verify.hpp"

namespace hopfres {

/// Matrix JSON: array of arrays of scalar strings in the exactfield
/// grammar, e.g. [["1","0"],["0","1/2+1/3i"]].
QiMatrix matrix_from_json_text(const std::string& text);
QiMatrix matrix_from_json_file(const std::string& path);
std::string matrix_to_json_text(const QiMatrix& m);

/// A(E) character file: {"T": [[...]], "g": "+1"|"-1"}.
struct CharacterFileA {
    QiMatrix t;
    GaussianRational g;
};
CharacterFileA character_A_from_json_file(const std::string& path);

std::string report_to_json_text(const CohomologyReport& rep);
std::string matrix_class_to_json_text(const MatrixClass& mc);
std::string certificates_to_json_text(const VerifyReport& rep, const Alphabet& base,
                                      const Alphabet& square);
std::string verify_report_to_json_text(const VerifyReport& rep);

} // namespace hopfres
