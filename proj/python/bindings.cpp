#include "qcramer/pinv.hpp"
#include "qcramer/rowcol_det.hpp"
#include "qcramer/solvers.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qcramer;

namespace {

// Matrices cross the boundary as lists of rows of quaternion strings, which is
// lossless for both backends.
using Rows = std::vector<std::vector<std::string>>;

template <Coefficient T>
QMatrix<T> from_rows(const Rows& rows) {
    const std::size_t m = rows.size();
    const std::size_t n = m ? rows.front().size() : 0;
    QMatrix<T> out(m, n);
    for (std::size_t r = 0; r < m; ++r) {
        if (rows[r].size() != n) {
            throw Error(ErrorKind::shape_mismatch, "ragged matrix rows");
        }
        for (std::size_t c = 0; c < n; ++c) {
            out(r, c) = parse_quaternion<T>(rows[r][c]);
        }
    }
    return out;
}

template <Coefficient T>
Rows to_rows(const QMatrix<T>& a) {
    Rows out(a.rows(), std::vector<std::string>(a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out[r][c] = format(a(r, c));
        }
    }
    return out;
}

bool exact(const std::string& scalar) {
    if (scalar == "rational") {
        return true;
    }
    if (scalar == "float64") {
        return false;
    }
    throw Error(ErrorKind::domain, "scalar must be 'rational' or 'float64'");
}

// Runs body<Rational> or body<double> depending on the backend name.
template <typename F>
auto dispatch(const std::string& scalar, F&& body) {
    return exact(scalar) ? body(Rational{}) : body(double{});
}

PinvRoute pinv_route(const std::string& route) {
    if (route == "auto") return PinvRoute::automatic;
    if (route == "cdet") return PinvRoute::column;
    if (route == "rdet") return PinvRoute::row;
    throw Error(ErrorKind::domain, "pinv route must be auto, cdet or rdet");
}

SolveRoute solve_route(const std::string& route) {
    if (route == "auto") return SolveRoute::automatic;
    if (route == "dB") return SolveRoute::d_b;
    if (route == "dA") return SolveRoute::d_a;
    throw Error(ErrorKind::domain, "solve route must be auto, dB or dA");
}

template <Coefficient T>
py::dict report_dict(const SolveReport<T>& rep) {
    py::dict d;
    d["solution"] = to_rows(rep.solution);
    d["route"] = rep.route;
    d["rank_a"] = rep.rank_a;
    d["rank_b"] = rep.rank_b;
    d["residual_norm_sq"] = format_coefficient(rep.residual_norm_sq);
    d["solution_norm_sq"] = format_coefficient(rep.solution_norm_sq);
    std::vector<std::string> dens;
    for (const auto& v : rep.denominators) {
        dens.push_back(format_coefficient(v));
    }
    d["denominators"] = dens;
    d["hat"] = to_rows(rep.hat);
    if (rep.d_b) d["d_b"] = to_rows(*rep.d_b);
    if (rep.d_a) d["d_a"] = to_rows(*rep.d_a);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quaternion row/column determinants, Moore-Penrose inverse and Cramer-rule least squares.";

    static py::exception<Error> exc(m, "QcramerError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object err = py::handle(exc)(py::str(e.what()));
            err.attr("kind") = py::str(std::string(to_string(e.kind())));
            PyErr_SetObject(exc.ptr(), err.ptr());
        }
    });

    m.def("components", [](const std::string& q, const std::string& scalar) {
        return dispatch(scalar, [&](auto t) {
            const auto v = parse_quaternion<decltype(t)>(q);
            return std::vector<std::string>{format_coefficient(v.w), format_coefficient(v.x),
                                            format_coefficient(v.y), format_coefficient(v.z)};
        });
    }, py::arg("q"), py::arg("scalar") = "rational");

    m.def("rank", [](const Rows& a, const std::string& scalar) {
        return dispatch(scalar, [&](auto t) { return rank(from_rows<decltype(t)>(a)); });
    }, py::arg("a"), py::arg("scalar") = "rational");

    m.def("rdet", [](const Rows& a, std::size_t i, const std::string& scalar, std::size_t max_n) {
        return dispatch(scalar, [&](auto t) { return format(rdet(from_rows<decltype(t)>(a), i, {max_n})); });
    }, py::arg("a"), py::arg("i"), py::arg("scalar") = "rational", py::arg("max_n") = kDefaultMaxDetOrder);

    m.def("cdet", [](const Rows& a, std::size_t j, const std::string& scalar, std::size_t max_n) {
        return dispatch(scalar, [&](auto t) { return format(cdet(from_rows<decltype(t)>(a), j, {max_n})); });
    }, py::arg("a"), py::arg("j"), py::arg("scalar") = "rational", py::arg("max_n") = kDefaultMaxDetOrder);

    m.def("hermitian_det", [](const Rows& h, const std::string& scalar, std::size_t max_n) {
        return dispatch(scalar, [&](auto t) {
            return format_coefficient(hermitian_det(from_rows<decltype(t)>(h), {max_n}));
        });
    }, py::arg("h"), py::arg("scalar") = "rational", py::arg("max_n") = kDefaultMaxDetOrder);

    m.def("gram_det", [](const Rows& a, const std::string& scalar, std::size_t max_n) {
        return dispatch(scalar, [&](auto t) { return format_coefficient(gram_det(from_rows<decltype(t)>(a), {max_n})); });
    }, py::arg("a"), py::arg("scalar") = "rational", py::arg("max_n") = kDefaultMaxDetOrder);

    m.def("ddet", [](const Rows& a, const std::string& scalar, std::size_t max_n) {
        return dispatch(scalar, [&](auto t) { return format_coefficient(ddet(from_rows<decltype(t)>(a), {max_n})); });
    }, py::arg("a"), py::arg("scalar") = "rational", py::arg("max_n") = kDefaultMaxDetOrder);

    m.def("inverse", [](const Rows& a, const std::string& scalar, std::size_t max_n) {
        return dispatch(scalar, [&](auto t) { return to_rows(inverse_via_ddet(from_rows<decltype(t)>(a), InverseSide::left, {max_n})); });
    }, py::arg("a"), py::arg("scalar") = "rational", py::arg("max_n") = kDefaultMaxDetOrder);

    m.def("pinv", [](const Rows& a, const std::string& route, const std::string& scalar, std::size_t max_n) {
        return dispatch(scalar, [&](auto t) {
            return to_rows(pinv_det(from_rows<decltype(t)>(a), {{max_n}, pinv_route(route)}));
        });
    }, py::arg("a"), py::arg("route") = "auto", py::arg("scalar") = "rational",
       py::arg("max_n") = kDefaultMaxDetOrder);

    m.def("pinv_oracle", [](const Rows& a, const std::string& mode, const std::string& scalar) {
        if (mode != "factorization" && mode != "limit") {
            throw Error(ErrorKind::domain, "mode must be 'factorization' or 'limit'");
        }
        const OracleMode om = mode == "limit" ? OracleMode::limit : OracleMode::factorization;
        return dispatch(scalar, [&](auto t) { return to_rows(pinv_oracle(from_rows<decltype(t)>(a), om)); });
    }, py::arg("a"), py::arg("mode") = "factorization", py::arg("scalar") = "rational");

    m.def("check_penrose", [](const Rows& a, const Rows& x, const std::string& scalar, double rel_tol) {
        return dispatch(scalar, [&](auto t) {
            using T = decltype(t);
            const auto c = check_penrose(from_rows<T>(a), from_rows<T>(x), rel_tol);
            return std::vector<bool>(c.holds.begin(), c.holds.end());
        });
    }, py::arg("a"), py::arg("x"), py::arg("scalar") = "rational", py::arg("rel_tol") = kDefaultRelTol);

    m.def("solve_ax_b", [](const Rows& a, const Rows& b, const std::string& scalar, std::size_t max_n) {
        return dispatch(scalar, [&](auto t) {
            using T = decltype(t);
            return report_dict(solve_ax_b(from_rows<T>(a), from_rows<T>(b), {{max_n}}));
        });
    }, py::arg("a"), py::arg("b"), py::arg("scalar") = "rational", py::arg("max_n") = kDefaultMaxDetOrder);

    m.def("solve_xa_b", [](const Rows& a, const Rows& b, const std::string& scalar, std::size_t max_n) {
        return dispatch(scalar, [&](auto t) {
            using T = decltype(t);
            return report_dict(solve_xa_b(from_rows<T>(a), from_rows<T>(b), {{max_n}}));
        });
    }, py::arg("a"), py::arg("b"), py::arg("scalar") = "rational", py::arg("max_n") = kDefaultMaxDetOrder);

    m.def("solve_axb_d", [](const Rows& a, const Rows& b, const Rows& d, const std::string& route,
                            const std::string& scalar, std::size_t max_n) {
        return dispatch(scalar, [&](auto t) {
            using T = decltype(t);
            return report_dict(
                solve_axb_d(from_rows<T>(a), from_rows<T>(b), from_rows<T>(d), {{max_n}, solve_route(route)}));
        });
    }, py::arg("a"), py::arg("b"), py::arg("d"), py::arg("route") = "auto", py::arg("scalar") = "rational",
       py::arg("max_n") = kDefaultMaxDetOrder);
}
