#include "hopfres/json_io.hpp"

#include <fstream>

#include <json.hpp>

namespace hopfres {

using json = nlohmann::ordered_json;

namespace {

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_text(text);
}

QiMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix JSON must be a nonempty array of rows");
    const size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty()) throw ParseError("matrix rows must be nonempty arrays");
    const size_t cols = j[0].size();
    QiMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw ParseError("matrix rows must all have the same length");
        for (size_t k = 0; k < cols; ++k) {
            if (!j[i][k].is_string()) throw ParseError("matrix entries must be scalar strings");
            m.at(i, k) = GaussianRational::from_string(j[i][k].get<std::string>());
        }
    }
    return m;
}

} // namespace

QiMatrix matrix_from_json_text(const std::string& text) {
    return matrix_from_json(parse_text(text));
}

QiMatrix matrix_from_json_file(const std::string& path) {
    return matrix_from_json(parse_file(path));
}

std::string matrix_to_json_text(const QiMatrix& m) {
    json j = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).to_string());
        j.push_back(row);
    }
    return j.dump();
}

CharacterFileA character_A_from_json_file(const std::string& path) {
    json j = parse_file(path);
    if (!j.is_object() || !j.contains("T") || !j.contains("g"))
        throw ParseError("A(E) character file must be {\"T\": [[...]], \"g\": \"+1\"|\"-1\"}");
    CharacterFileA c;
    c.t = matrix_from_json(j["T"]);
    std::string g = j["g"].get<std::string>();
    if (g == "+1" || g == "1")
        c.g = GaussianRational(1);
    else if (g == "-1")
        c.g = GaussianRational(-1);
    else
        throw ParseError("\"g\" must be \"+1\" or \"-1\"");
    return c;
}

namespace {

json params_to_json(const ReportParams& p) {
    json j = json::object();
    if (p.h) {
        j["p"] = p.h->p;
        j["d"] = p.h->d;
        j["t"] = p.h->t;
    }
    if (p.b) {
        j["p"] = p.b->p;
        j["d"] = p.b->d;
        j["s"] = p.b->s;
    }
    if (p.q) j["q"] = *p.q;
    return j;
}

} // namespace

std::string report_to_json_text(const CohomologyReport& rep) {
    json j = json::object();
    j["algebra"] = algebra_name(rep.algebra);
    if (!rep.dims_by_rank.empty()) j["dims_rank"] = rep.dims_by_rank;
    if (rep.dims_by_formula) j["dims_formula"] = *rep.dims_by_formula;
    j["params"] = params_to_json(rep.params);
    j["agree"] = rep.agree;
    j["warnings"] = rep.warnings;
    return j.dump();
}

std::string matrix_class_to_json_text(const MatrixClass& mc) {
    json j = json::object();
    j["n"] = mc.n;
    j["trace_F"] = mc.trace_F.to_string();
    j["trace_Finv"] = mc.trace_Finv.to_string();
    j["P"] = mc.P.to_string();
    j["normalizable"] = mc.normalizable;
    j["generic"] = mc.generic;
    switch (mc.asymmetry) {
        case Asymmetry::Yes: j["asymmetry"] = "yes"; break;
        case Asymmetry::No: j["asymmetry"] = "no"; break;
        case Asymmetry::UnknownNonDiagonalizable:
            j["asymmetry"] = "unknown-non-diagonalizable";
            break;
    }
    return j.dump();
}

std::string certificates_to_json_text(const VerifyReport& rep, const Alphabet& base,
                                      const Alphabet& square) {
    json out = json::array();
    for (const CertEntry& e : rep.certificates) {
        const Alphabet& alphabet = e.on_tensor_square ? square : base;
        json cert = json::array();
        for (const CertTerm& t : e.cert.terms) {
            json term = json::object();
            term["coef"] = t.coef.to_string();
            term["left"] = word_to_string(t.left, alphabet);
            term["rel"] = t.rel;
            term["right"] = word_to_string(t.right, alphabet);
            cert.push_back(term);
        }
        json entry = json::object();
        entry["entry"] = e.label;
        entry["certificate"] = cert;
        out.push_back(entry);
    }
    return out.dump();
}

std::string verify_report_to_json_text(const VerifyReport& rep) {
    json j = json::object();
    switch (rep.status) {
        case VerifyStatus::Verified: j["status"] = "verified"; break;
        case VerifyStatus::Failed: j["status"] = "failed"; break;
        case VerifyStatus::Undecided: j["status"] = "undecided"; break;
    }
    j["composite_checks"] = rep.composite_checks;
    j["member_entries"] = rep.member_entries;
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    return j.dump();
}

} // namespace hopfres
