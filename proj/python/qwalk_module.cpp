#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qwalk/asymptotics.hpp"
#include "qwalk/io.hpp"
#include "qwalk/moments.hpp"
#include "qwalk/pathsum.hpp"
#include "qwalk/sampling.hpp"
#include "qwalk/symmetry.hpp"

namespace py = pybind11;
using namespace qwalk;

namespace {

py::array_t<double> probabilities_array(const Distribution& dist) {
    const auto probs = dist.probabilities();
    return py::array_t<double>(static_cast<py::ssize_t>(probs.size()), probs.data());
}

py::tuple decomposition_tuple(const BasisDecomposition& d) { return py::make_tuple(d.p, d.q, d.r, d.s); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Coined quantum walk on the integers: exact distributions, path sums, moments and limit laws";

    auto base = py::register_exception<Error>(m, "QwalkError", PyExc_ValueError);
    py::register_exception<NonUnitary>(m, "NonUnitaryError", base.ptr());
    py::register_exception<DegenerateCoin>(m, "DegenerateCoinError", base.ptr());
    py::register_exception<TooLarge>(m, "TooLargeError", base.ptr());
    py::register_exception<OutOfSupport>(m, "OutOfSupportError", base.ptr());
    py::register_exception<BadParams>(m, "BadParamsError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<IoError>(m, "IoError", base.ptr());
    py::register_exception<InternalError>(m, "InternalError", base.ptr());

    py::class_<Coin>(m, "Coin", "2x2 unitary coin [[a, b], [c, d]]")
        .def(py::init(&make_coin), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"))
        .def_static("hadamard", &hadamard)
        .def_static("symmetric", &make_symmetric_coin, py::arg("eta"), py::arg("phi"), py::arg("psi"))
        .def_static("parse", &io::parse_coin, py::arg("text"))
        .def_property_readonly("a", &Coin::a)
        .def_property_readonly("b", &Coin::b)
        .def_property_readonly("c", &Coin::c)
        .def_property_readonly("d", &Coin::d)
        .def_property_readonly("delta", &Coin::delta)
        .def_property_readonly("degenerate", &Coin::degenerate)
        .def_property_readonly("matrix", &Coin::matrix)
        .def("__repr__", [](const Coin& c) {
            return "Coin(" + py::repr(py::cast(c.matrix())).cast<std::string>() + ")";
        });

    py::class_<Qubit>(m, "Qubit", "Initial chirality state (alpha, beta)")
        .def(py::init<cplx, cplx>(), py::arg("alpha"), py::arg("beta"))
        .def_static("parse", &io::parse_qubit, py::arg("text"))
        .def_property_readonly("alpha", &Qubit::alpha)
        .def_property_readonly("beta", &Qubit::beta)
        .def("__repr__", [](const Qubit& q) {
            return "Qubit(" + py::repr(py::cast(q.alpha())).cast<std::string>() + ", " +
                   py::repr(py::cast(q.beta())).cast<std::string>() + ")";
        });

    py::class_<Distribution>(m, "Distribution", "P(X_n = k) for k = -n..n")
        .def_property_readonly("n", &Distribution::n)
        .def_property_readonly("probabilities", &probabilities_array, "Dense array indexed by k + n")
        .def("__getitem__", &Distribution::at, py::arg("k"))
        .def("total", &Distribution::total)
        .def("as_dict", [](const Distribution& dist) {
            py::dict out;
            for (int k = -dist.n(); k <= dist.n(); k += 2) out[py::int_(k)] = dist.at(k);
            return out;
        });

    m.def(
        "evolve_distribution",
        [](const Qubit& phi, const Coin& coin, int n) { return distribution(evolve(phi, coin, n)); },
        py::arg("phi"), py::arg("coin"), py::arg("n"), py::call_guard<py::gil_scoped_release>());
    m.def(
        "evolve_amplitudes",
        [](const Qubit& phi, const Coin& coin, int n) {
            const auto field = evolve(phi, coin, n);
            Eigen::MatrixX2cd out(2 * n + 1, 2);
            for (int k = -n; k <= n; ++k) out.row(k + n) = field.at(k).transpose();
            return out;
        },
        py::arg("phi"), py::arg("coin"), py::arg("n"), "Rows are (left, right) amplitudes at k = -n..n");
    m.def("path_distribution", &path_distribution, py::arg("phi"), py::arg("coin"), py::arg("n"),
          py::call_guard<py::gil_scoped_release>());
    m.def("exact_char_function", &exact_char_function, py::arg("dist"), py::arg("xi"));

    m.def(
        "xi_closed_form", [](int l, int mm, const Coin& coin) { return xi_closed_form(l, mm, coin).matrix; },
        py::arg("l"), py::arg("m"), py::arg("coin"));
    m.def(
        "xi_bruteforce",
        [](int l, int mm, const Coin& coin, std::uint64_t cap) { return xi_bruteforce(l, mm, coin, cap).matrix; },
        py::arg("l"), py::arg("m"), py::arg("coin"), py::arg("cap") = kDefaultEnumerationCap);
    m.def(
        "decompose_pqrs", [](const Mat2& x, const Coin& coin) { return decomposition_tuple(decompose_pqrs(x, coin)); },
        py::arg("matrix"), py::arg("coin"), "Coefficients (p, q, r, s) in the chirality basis");

    m.def("empirical_moment", &empirical_moment, py::arg("dist"), py::arg("m"));
    m.def(
        "moment_closed_form",
        [](const Coin& coin, const Qubit& phi, int n, int order) {
            return moment_closed_form({.n = n, .m = order, .coin = coin, .phi = phi});
        },
        py::arg("coin"), py::arg("phi"), py::arg("n"), py::arg("m"));

    py::class_<LimitLaw>(m, "LimitLaw", "Weak limit of X_n / n")
        .def(py::init<const Coin&, const Qubit&>(), py::arg("coin"), py::arg("phi"))
        .def_property_readonly("half_width", &LimitLaw::half_width)
        .def_property_readonly("skew", &LimitLaw::skew)
        .def("density", &LimitLaw::density, py::arg("x"))
        .def("cdf", &LimitLaw::cdf, py::arg("x"))
        .def("moment", &LimitLaw::moment, py::arg("m"));
    m.def("limit_density", &limit_density, py::arg("coin"), py::arg("phi"), py::arg("x"));
    m.def("limit_moment", &limit_moment, py::arg("coin"), py::arg("phi"), py::arg("m"));
    m.def("limit_cdf", &limit_cdf, py::arg("coin"), py::arg("phi"), py::arg("x"));
    m.def("asymptotic_char_function", &asymptotic_char_function, py::arg("coin"), py::arg("phi"), py::arg("n"),
          py::arg("xi"));
    m.def("ks_distance", &ks_distance, py::arg("dist"), py::arg("coin"), py::arg("phi"));
    m.def(
        "jacobi_poly",
        [](double nu, double mu, int degree, double x) { return jacobi_poly({nu, mu, degree, x}); },
        py::arg("nu"), py::arg("mu"), py::arg("degree"), py::arg("x"));

    py::class_<SymmetryReport>(m, "SymmetryReport")
        .def_readonly("max_n", &SymmetryReport::max_n)
        .def_readonly("in_phi_perp", &SymmetryReport::in_phi_perp)
        .def_readonly("symmetric_up_to", &SymmetryReport::symmetric_up_to)
        .def_readonly("mean_zero_up_to", &SymmetryReport::mean_zero_up_to)
        .def_property_readonly("first_violation",
                               [](const SymmetryReport& r) -> py::object {
                                   if (!r.first_violation) return py::none();
                                   const auto& v = *r.first_violation;
                                   return py::dict(py::arg("n") = v.n, py::arg("mean") = v.mean,
                                                   py::arg("asymmetry") = v.asymmetry);
                               })
        .def("consistent", &SymmetryReport::consistent);
    m.def("in_phi_perp", &in_phi_perp, py::arg("coin"), py::arg("phi"), py::arg("tol") = kMembershipTol);
    m.def("check_symmetry", &check_symmetry, py::arg("dist"), py::arg("tol") = kDistributionTol);
    m.def("verify_symmetry_criterion", &verify_symmetry_criterion, py::arg("coin"), py::arg("phi"), py::arg("max_n"),
          py::arg("tol") = kDistributionTol, py::arg("membership_tol") = kMembershipTol);

    m.def(
        "random_coin",
        [](std::uint64_t seed) {
            Rng rng(seed);
            return random_coin(rng);
        },
        py::arg("seed"));
    m.def(
        "random_phi_perp",
        [](const Coin& coin, std::uint64_t seed) {
            Rng rng(seed);
            return random_phi_perp(coin, rng);
        },
        py::arg("coin"), py::arg("seed"));
}
