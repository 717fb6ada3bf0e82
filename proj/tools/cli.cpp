#include "cli.hpp"

#include "qcramer/errors.hpp"
#include "qcramer/matrix.hpp"
#include "qcramer/pinv.hpp"
#include "qcramer/rowcol_det.hpp"
#include "qcramer/solvers.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

namespace qcramer::cli {

namespace {

using nlohmann::json;

struct Common {
    std::string scalar = "rational";
    std::string route = "auto";
    std::size_t max_n = kDefaultMaxDetOrder;
    bool json_out = false;
    bool verify = false;
};

struct DetArgs {
    std::string kind;
    std::size_t index = 1;
    std::string input;
};

struct PinvArgs {
    std::string input;
    bool oracle = false;
    bool limit = false;
};

struct SolveArgs {
    std::string form;
    std::string a, b, d;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--scalar", c.scalar, "coefficient backend")
        ->check(CLI::IsMember({"rational", "float64"}))
        ->capture_default_str();
    sub->add_option("--route", c.route, "formula route")
        ->check(CLI::IsMember({"auto", "cdet", "rdet", "dB", "dA"}))
        ->capture_default_str();
    sub->add_option("--max-n", c.max_n, "largest determinant order allowed")->capture_default_str();
    sub->add_flag("--json", c.json_out, "emit a JSON report");
    sub->add_flag("--verify", c.verify, "check Penrose conditions or least-squares certificates");
}

template <Coefficient T>
json quaternion_json(const Quaternion<T>& q) {
    return json::array({format_coefficient(q.w), format_coefficient(q.x), format_coefficient(q.y),
                        format_coefficient(q.z)});
}

template <Coefficient T>
json matrix_json(const QMatrix<T>& a) {
    json rows = json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < a.cols(); ++c) {
            row.push_back(quaternion_json(a(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json verified_json(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }

void print_verified(std::ostream& out, const std::optional<bool>& v) {
    if (v) {
        out << "# verified: " << (*v ? "true" : "false") << '\n';
    }
}

PinvRoute pinv_route(const std::string& route) {
    if (route == "cdet") {
        return PinvRoute::column;
    }
    if (route == "rdet") {
        return PinvRoute::row;
    }
    if (route == "auto") {
        return PinvRoute::automatic;
    }
    throw Error(ErrorKind::domain, "route '" + route + "' does not apply to pinv (use auto, cdet or rdet)");
}

SolveRoute solve_route(const std::string& route) {
    if (route == "dB") {
        return SolveRoute::d_b;
    }
    if (route == "dA") {
        return SolveRoute::d_a;
    }
    if (route == "auto") {
        return SolveRoute::automatic;
    }
    throw Error(ErrorKind::domain, "route '" + route + "' does not apply to solve (use auto, dB or dA)");
}

template <Coefficient T>
double verify_tol() {
    return is_exact_v<T> ? 0.0 : 1e-9;
}

template <Coefficient T>
int run_det(const DetArgs& args, const Common& c, std::ostream& out) {
    const QMatrix<T> a = read_qm_file<T>(args.input);
    const DetOptions opts{c.max_n};
    json report{{"kind", args.kind}};
    std::string text;
    std::optional<bool> verified;
    if (args.kind == "rdet" || args.kind == "cdet") {
        const Quaternion<T> v = args.kind == "rdet" ? rdet(a, args.index, opts) : cdet(a, args.index, opts);
        report["index"] = args.index;
        report["value"] = quaternion_json(v);
        text = format(v);
    } else {
        QMatrix<T> gram;
        T v;
        if (args.kind == "hermitian") {
            gram = a;
            v = hermitian_det(a, opts);
        } else {
            if (args.kind == "ddet" && !a.is_square()) {
                throw Error(ErrorKind::shape_mismatch, "ddet requires a square matrix; use --kind gram");
            }
            gram = matmul(adjoint(a), a);
            v = hermitian_det(gram, opts);
        }
        if (c.verify) {
            // det of the complex embedding of a Hermitian matrix is det^2
            const Complex<T> emb = determinant(complex_embed(gram));
            const T sq = v * v;
            if constexpr (is_exact_v<T>) {
                verified = emb.im == 0 && emb.re == sq;
            } else {
                verified = std::abs(emb.im) <= 1e-9 * std::max(1.0, std::abs(sq)) &&
                           std::abs(emb.re - sq) <= 1e-9 * std::max(1.0, std::abs(sq));
            }
        }
        report["value"] = format_coefficient(v);
        text = format_coefficient(v);
    }
    if (c.json_out) {
        report["verified"] = verified_json(verified);
        out << report.dump(2) << '\n';
    } else {
        out << text << '\n';
        print_verified(out, verified);
    }
    return verified.value_or(true) ? kOk : kDomainError;
}

template <Coefficient T>
int run_pinv(const PinvArgs& args, const Common& c, std::ostream& out) {
    const QMatrix<T> a = read_qm_file<T>(args.input);
    QMatrix<T> x;
    std::string route;
    if (args.limit) {
        x = pinv_oracle(a, OracleMode::limit);
        route = "oracle/limit";
    } else if (args.oracle) {
        x = pinv_oracle(a, OracleMode::factorization);
        route = "oracle/factorization";
    } else {
        PinvOptions opts{DetOptions{c.max_n}, pinv_route(c.route)};
        x = pinv_det(a, opts);
        route = resolve_pinv_route(opts.route, a.rows(), a.cols()) == PinvRoute::column ? "pinv/cdet" : "pinv/rdet";
    }
    std::optional<bool> verified;
    if (c.verify) {
        // the limit oracle is a 1e-6 cross-check, not a 1e-9 one
        verified = check_penrose(a, x, args.limit ? 1e-6 : verify_tol<T>()).all();
    }
    if (c.json_out) {
        json report{{"solution", matrix_json(x)},
                    {"route", route},
                    {"rank_a", rank(a)},
                    {"verified", verified_json(verified)}};
        out << report.dump(2) << '\n';
    } else {
        out << format_qm(x);
        print_verified(out, verified);
    }
    return verified.value_or(true) ? kOk : kDomainError;
}

template <Coefficient T>
int run_solve(const SolveArgs& args, const Common& c, std::ostream& out) {
    const SolveOptions opts{DetOptions{c.max_n}, solve_route(c.route)};
    const QMatrix<T> a = read_qm_file<T>(args.a);
    const QMatrix<T> b = read_qm_file<T>(args.b);
    SolveReport<T> rep;
    std::optional<bool> verified;
    if (args.form == "ax=b") {
        rep = solve_ax_b(a, b, opts);
        if (c.verify) {
            verified = certify_ax_b(a, b, rep.solution, verify_tol<T>()).all();
        }
    } else if (args.form == "xa=b") {
        rep = solve_xa_b(a, b, opts);
        if (c.verify) {
            verified = certify_xa_b(a, b, rep.solution, verify_tol<T>()).all();
        }
    } else {
        if (args.d.empty()) {
            throw Error(ErrorKind::parse, "--form axb=d needs --d");
        }
        const QMatrix<T> d = read_qm_file<T>(args.d);
        rep = solve_axb_d(a, b, d, opts);
        if (c.verify) {
            verified = certify_axb_d(a, b, d, rep.solution, verify_tol<T>()).all();
        }
    }
    if (c.json_out) {
        json report{{"solution", matrix_json(rep.solution)},
                    {"route", rep.route},
                    {"rank_a", rep.rank_a},
                    {"rank_b", rep.rank_b},
                    {"residual_norm_sq", format_coefficient(rep.residual_norm_sq)},
                    {"solution_norm_sq", format_coefficient(rep.solution_norm_sq)},
                    {"verified", verified_json(verified)}};
        out << report.dump(2) << '\n';
    } else {
        out << format_qm(rep.solution);
        print_verified(out, verified);
    }
    return verified.value_or(true) ? kOk : kDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quaternion row/column determinants, Moore-Penrose inverse and Cramer-rule least squares",
                 "qcramer"};
    app.require_subcommand(1);

    Common det_common, pinv_common, solve_common;
    DetArgs det_args;
    PinvArgs pinv_args;
    SolveArgs solve_args;

    auto* det = app.add_subcommand("det", "row, column, Hermitian or double determinant");
    det->add_option("--kind", det_args.kind, "determinant kind")
        ->required()
        ->check(CLI::IsMember({"rdet", "cdet", "hermitian", "ddet", "gram"}));
    det->add_option("--index", det_args.index, "1-based row (rdet) or column (cdet) index")->capture_default_str();
    det->add_option("--input", det_args.input, ".qm matrix file")->required();
    add_common(det, det_common);

    auto* pinv = app.add_subcommand("pinv", "Moore-Penrose inverse");
    pinv->add_option("--input", pinv_args.input, ".qm matrix file")->required();
    pinv->add_flag("--oracle", pinv_args.oracle, "use the full-rank factorization oracle");
    pinv->add_flag("--limit", pinv_args.limit, "use the regularized limit oracle (float64 only)");
    add_common(pinv, pinv_common);

    auto* solve = app.add_subcommand("solve", "minimum-norm least-squares solution");
    solve->add_option("--form", solve_args.form, "equation form")
        ->required()
        ->check(CLI::IsMember({"ax=b", "xa=b", "axb=d"}));
    solve->add_option("--a", solve_args.a, "A matrix file")->required();
    solve->add_option("--b", solve_args.b, "B matrix file")->required();
    solve->add_option("--d", solve_args.d, "D matrix file (axb=d only)");
    add_common(solve, solve_common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "qcramer: error[usage]: " << e.what() << '\n';
        return kInputError;
    }

    try {
        const bool exact = [&] {
            const Common& c = det->parsed() ? det_common : pinv->parsed() ? pinv_common : solve_common;
            return c.scalar == "rational";
        }();
        if (det->parsed()) {
            return exact ? run_det<Rational>(det_args, det_common, out) : run_det<double>(det_args, det_common, out);
        }
        if (pinv->parsed()) {
            return exact ? run_pinv<Rational>(pinv_args, pinv_common, out)
                         : run_pinv<double>(pinv_args, pinv_common, out);
        }
        return exact ? run_solve<Rational>(solve_args, solve_common, out)
                     : run_solve<double>(solve_args, solve_common, out);
    } catch (const Error& e) {
        err << "qcramer: error[" << to_string(e.kind()) << "]: " << e.what() << '\n';
        return e.kind() == ErrorKind::io || e.kind() == ErrorKind::parse ? kInputError : kDomainError;
    }
}

}  // namespace qcramer::cli
