// hopfres: exact computations around the counit resolutions of B(E), A(E),
// H(F) and CZ2 -- matrix classification, Hochschild/bialgebra cohomology
// dimensions by closed formula and by rank, and symbolic verification
// suites with replayable certificates.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hopfres/json_io.hpp"
#include "hopfres/verify.hpp"

using namespace hopfres;

namespace {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kInputError = 2,
    kUndecided = 3,
};

ReportMode parse_mode(const std::string& mode) {
    if (mode == "formula") return ReportMode::Formula;
    if (mode == "rank") return ReportMode::Rank;
    if (mode == "both") return ReportMode::Both;
    throw ParseError("unknown mode: " + mode);
}

std::string dims_line(const std::vector<size_t>& dims) {
    std::string out;
    for (size_t d : dims) {
        if (!out.empty()) out += " ";
        out += std::to_string(d);
    }
    return out;
}

std::string report_text(const CohomologyReport& rep) {
    std::ostringstream os;
    os << "algebra: " << algebra_name(rep.algebra) << "\n";
    if (!rep.dims_by_rank.empty()) os << "dims (rank):    " << dims_line(rep.dims_by_rank) << "\n";
    if (rep.dims_by_formula)
        os << "dims (formula): " << dims_line(*rep.dims_by_formula) << "\n";
    os << "(all higher cohomology spaces vanish)\n";
    if (rep.params.h)
        os << "params: p=" << rep.params.h->p << " d=" << rep.params.h->d
           << " t=" << rep.params.h->t << "\n";
    if (rep.params.b) {
        os << "params: p=" << rep.params.b->p << " d=" << rep.params.b->d
           << " s=" << rep.params.b->s;
        if (rep.params.q) os << " q=" << *rep.params.q;
        os << "\n";
    }
    os << "agree: " << (rep.agree ? "true" : "false") << "\n";
    for (const std::string& w : rep.warnings) os << "warning: " << w << "\n";
    return os.str();
}

std::string classify_text(const MatrixClass& mc) {
    std::ostringstream os;
    os << "n: " << mc.n << "\n";
    os << "tr(F): " << mc.trace_F.to_string() << "\n";
    os << "tr(F^-1): " << mc.trace_Finv.to_string() << "\n";
    os << "P = tr(F) tr(F^-1): " << mc.P.to_string() << "\n";
    os << "normalizable: " << (mc.normalizable ? "true" : "false") << "\n";
    os << "generic: " << (mc.generic ? "true" : "false") << "\n";
    os << "asymmetry: ";
    switch (mc.asymmetry) {
        case Asymmetry::Yes: os << "yes"; break;
        case Asymmetry::No: os << "no"; break;
        case Asymmetry::UnknownNonDiagonalizable: os << "unknown-non-diagonalizable"; break;
    }
    os << "\n";
    return os.str();
}

struct Options {
    bool json = false;
    std::string mode = "both";
    int degree_bound = 0;
    std::string sweep;
    std::string tau = "trivial";
    std::string cert_out;
};

int run_report(const CohomologyReport& rep, const Options& opt) {
    if (opt.json)
        std::cout << report_to_json_text(rep) << "\n";
    else
        std::cout << report_text(rep);
    ReportMode mode = parse_mode(opt.mode);
    return (mode == ReportMode::Both && !rep.agree) ? kFailure : kOk;
}

CohomologyReport make_report(Algebra alg, const std::string& param_file,
                             const std::string& char_file, const Options& opt) {
    ReportMode mode = parse_mode(opt.mode);
    switch (alg) {
        case Algebra::H: {
            QiMatrix f = matrix_from_json_file(param_file);
            QiMatrix s = char_file.empty() ? QiMatrix::identity(f.rows())
                                           : matrix_from_json_file(char_file);
            return report_H(f, s, mode);
        }
        case Algebra::B: {
            QiMatrix e = matrix_from_json_file(param_file);
            QiMatrix t = char_file.empty() ? QiMatrix::identity(e.rows())
                                           : matrix_from_json_file(char_file);
            return report_B(e, t, mode);
        }
        case Algebra::A: {
            QiMatrix e = matrix_from_json_file(param_file);
            if (char_file.empty())
                return report_A(e, QiMatrix::identity(e.rows()), GaussianRational(1), mode);
            CharacterFileA c = character_A_from_json_file(char_file);
            return report_A(e, c.t, c.g, mode);
        }
        case Algebra::CZ2: {
            GaussianRational t =
                (opt.tau == "sign") ? GaussianRational(-1) : GaussianRational(1);
            return report_CZ2(t, mode);
        }
    }
    throw Error("unknown algebra");
}

Algebra parse_algebra(const std::string& a) {
    if (a == "b" || a == "B") return Algebra::B;
    if (a == "a" || a == "A") return Algebra::A;
    if (a == "h" || a == "H") return Algebra::H;
    if (a == "cz2" || a == "CZ2") return Algebra::CZ2;
    throw ParseError("unknown algebra: " + a + " (expected b, a, h, or cz2)");
}

int cmd_sweep(Algebra alg, const Options& opt) {
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(opt.sweep))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw ParseError("sweep directory contains no .json files");

    std::vector<std::future<std::pair<std::string, int>>> futures;
    for (const std::string& file : files)
        futures.push_back(std::async(std::launch::async, [alg, file, &opt] {
            std::ostringstream os;
            int code = kOk;
            try {
                CohomologyReport rep = make_report(alg, file, "", opt);
                if (opt.json)
                    os << "{\"file\":\"" << file << "\",\"report\":" << report_to_json_text(rep)
                       << "}";
                else
                    os << file << ": "
                       << dims_line(rep.dims_by_rank.empty() ? *rep.dims_by_formula
                                                             : rep.dims_by_rank)
                       << (rep.agree ? "" : "  DISAGREE")
                       << (rep.genericity_warning ? "  (non-generic)" : "");
                if (parse_mode(opt.mode) == ReportMode::Both && !rep.agree) code = kFailure;
            } catch (const Error& e) {
                os << file << ": error: " << e.what();
                code = kInputError;
            }
            return std::make_pair(os.str(), code);
        }));
    int worst = kOk;
    for (auto& f : futures) {
        auto [line, code] = f.get();
        std::cout << line << "\n";
        worst = std::max(worst, code);
    }
    return worst;
}

int exit_code_of(const VerifyReport& rep) {
    switch (rep.status) {
        case VerifyStatus::Verified: return kOk;
        case VerifyStatus::Failed: return kFailure;
        case VerifyStatus::Undecided: return kUndecided;
    }
    return kFailure;
}

int finish_verify(const VerifyReport& rep, const Presentation& pres, const Options& opt) {
    if (!opt.cert_out.empty()) {
        std::ofstream out(opt.cert_out);
        if (!out) throw ParseError("cannot write " + opt.cert_out);
        out << certificates_to_json_text(rep, pres.alphabet, tensor_square(pres).alphabet)
            << "\n";
    }
    if (opt.json) {
        std::cout << verify_report_to_json_text(rep) << "\n";
    } else {
        std::cout << "composite checks: " << rep.composite_checks << "\n";
        std::cout << "verified entries: " << rep.member_entries << "\n";
        switch (rep.status) {
            case VerifyStatus::Verified: std::cout << "status: verified\n"; break;
            case VerifyStatus::Failed:
                std::cout << "status: FAILED (" << rep.detail << ")\n";
                break;
            case VerifyStatus::Undecided:
                std::cout << "status: undecided (" << rep.detail << ")\n";
                break;
        }
    }
    return exit_code_of(rep);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homological computations for the Hopf algebras B(E), A(E), H(F)"};
    app.require_subcommand(1);
    Options opt;

    std::string algebra_arg, param_file, char_file, kind;

    CLI::App* classify = app.add_subcommand("classify", "normalizable/generic/asymmetry verdicts");
    classify->add_option("F", param_file, "parameter matrix JSON file")->required();
    classify->add_flag("--json", opt.json, "JSON output");

    CLI::App* character = app.add_subcommand("character", "validate a character file");
    character->add_option("algebra", algebra_arg, "b | a | h")->required();
    character->add_option("param", param_file, "parameter matrix JSON file")->required();
    character->add_option("char", char_file, "character file")->required();
    character->add_flag("--json", opt.json, "JSON output");

    CLI::App* coh = app.add_subcommand("cohomology", "Hochschild cohomology dimensions");
    coh->add_option("algebra", algebra_arg, "b | a | h | cz2")->required();
    coh->add_option("param", param_file, "parameter matrix JSON file");
    coh->add_option("char", char_file, "character file (H: S matrix; B: T matrix; A: {T, g})");
    coh->add_option("--mode", opt.mode, "formula | rank | both (default both)");
    coh->add_option("--tau", opt.tau, "cz2 character: trivial | sign");
    coh->add_option("--sweep", opt.sweep, "directory of parameter matrix files");
    coh->add_flag("--json", opt.json, "JSON output");

    CLI::App* bia = app.add_subcommand("bialgebra", "bialgebra cohomology dimensions");
    bia->add_option("algebra", algebra_arg, "h | a")->required();
    bia->add_option("param", param_file, "parameter matrix JSON file")->required();
    bia->add_flag("--json", opt.json, "JSON output");

    CLI::App* verify = app.add_subcommand("verify", "symbolic verification suites");
    verify->add_option("kind", kind, "complex | hopf | glued | yd")->required();
    verify->add_option("algebra_or_param", algebra_arg,
                       "algebra (complex/hopf) or parameter file (glued/yd)")
        ->required();
    verify->add_option("param", param_file, "parameter matrix JSON file (complex/hopf)");
    verify->add_option("--degree-bound", opt.degree_bound, "membership degree bound");
    verify->add_option("--cert-out", opt.cert_out, "write certificates JSON to this file");
    verify->add_flag("--json", opt.json, "JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) {
            QiMatrix f = matrix_from_json_file(param_file);
            if (!f.is_square()) throw ParseError("classification needs a square matrix");
            MatrixClass mc = classify_matrix(f);
            std::cout << (opt.json ? matrix_class_to_json_text(mc) + "\n" : classify_text(mc));
            return kOk;
        }

        if (character->parsed()) {
            Algebra alg = parse_algebra(algebra_arg);
            CohomologyReport rep = make_report(alg, param_file, char_file, opt);
            std::cout << "character: valid\n";
            if (rep.params.h)
                std::cout << "params: p=" << rep.params.h->p << " d=" << rep.params.h->d
                          << " t=" << rep.params.h->t << "\n";
            if (rep.params.b) {
                std::cout << "params: p=" << rep.params.b->p << " d=" << rep.params.b->d
                          << " s=" << rep.params.b->s;
                if (rep.params.q) std::cout << " q=" << *rep.params.q;
                std::cout << "\n";
            }
            return kOk;
        }

        if (coh->parsed()) {
            Algebra alg = parse_algebra(algebra_arg);
            if (!opt.sweep.empty()) return cmd_sweep(alg, opt);
            if (alg != Algebra::CZ2 && param_file.empty())
                throw ParseError("missing parameter matrix file");
            return run_report(make_report(alg, param_file, char_file, opt), opt);
        }

        if (bia->parsed()) {
            Algebra alg = parse_algebra(algebra_arg);
            QiMatrix m = matrix_from_json_file(param_file);
            if (alg == Algebra::H) return run_report(report_bialgebra_H(m), opt);
            if (alg == Algebra::A) return run_report(report_bialgebra_A(m), opt);
            throw ParseError("bialgebra cohomology is computed for h and a");
        }

        if (verify->parsed()) {
            if (kind == "glued") {
                QiMatrix e = matrix_from_json_file(algebra_arg);
                int d = opt.degree_bound > 0 ? opt.degree_bound : 4;
                VerifyReport rep = verify_glued_embedding(e, d);
                return finish_verify(rep, presentation_A(e), opt);
            }
            if (kind == "yd") {
                QiMatrix f = matrix_from_json_file(algebra_arg);
                int d = opt.degree_bound > 0 ? opt.degree_bound : 6;
                VerifyReport rep = verify_yd_colinearity(f, d);
                return finish_verify(rep, tensor_square(presentation_H(f)), opt);
            }
            Algebra alg = parse_algebra(algebra_arg);
            QiMatrix m = (alg == Algebra::CZ2) ? QiMatrix::identity(1)
                                               : matrix_from_json_file(param_file);
            if (kind == "complex") {
                int d = opt.degree_bound > 0 ? opt.degree_bound : 3;
                ResolutionData rd = resolution_matrices(alg, m);
                VerifyReport rep = verify_resolution_data(rd, d);
                return finish_verify(rep, rd.pres, opt);
            }
            if (kind == "hopf") {
                int d = opt.degree_bound > 0 ? opt.degree_bound : 4;
                Presentation p;
                switch (alg) {
                    case Algebra::B: p = presentation_B(m); break;
                    case Algebra::A: p = presentation_A(m); break;
                    case Algebra::H: p = presentation_H(m); break;
                    case Algebra::CZ2: p = presentation_CZ2(); break;
                }
                VerifyReport rep = verify_hopf(p, d);
                return finish_verify(rep, p, opt);
            }
            throw ParseError("unknown verify kind: " + kind);
        }
    } catch (const DegreeExceedsBound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUndecided;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
