#include "rankin/asymptotic.hpp"
#include "rankin/errors.hpp"
#include "rankin/invariants.hpp"
#include "rankin/io.hpp"
#include "rankin/paperbench.hpp"
#include "rankin/propagation.hpp"
#include "rankin/version.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

namespace py = pybind11;
using namespace rankin;

namespace {

py::object to_py_int(BigInt const& v)
{
    return py::module_::import("builtins").attr("int")(v.get_str());
}

py::object to_py(Json const& j)
{
    switch (j.type()) {
    case Json::value_t::null:
        return py::none();
    case Json::value_t::boolean:
        return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
        return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned:
        return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float:
        return py::float_(j.get<double>());
    case Json::value_t::string:
        return py::str(j.get<std::string>());
    case Json::value_t::array: {
        py::list out;
        for (auto const& item : j)
            out.append(to_py(item));
        return out;
    }
    default: {
        py::dict out;
        for (auto const& [key, value] : j.items())
            out[py::str(key)] = to_py(value);
        return out;
    }
    }
}

SearchOptions options(unsigned threads, std::uint64_t max_candidates, bool escalate)
{
    SearchOptions opts;
    opts.threads = threads;
    opts.max_candidates = max_candidates;
    opts.escalate = escalate;
    return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact Rankin and Berge-Martinet invariants of code lattices";
    m.attr("__version__") = std::string(kVersion);

    auto base = py::register_exception<Error>(m, "RankinError", PyExc_ValueError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
    py::register_exception<RankDeficient>(m, "RankDeficient", base.ptr());
    py::register_exception<NotAMember>(m, "NotAMember", base.ptr());
    py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<MismatchedCertificate>(m, "MismatchedCertificate", base.ptr());
    py::register_exception<InconsistentBounds>(m, "InconsistentBounds", base.ptr());

    py::class_<ExactRadical>(m, "Radical")
        .def(py::init([](py::object num, py::object den, std::uint64_t root) {
                 return ExactRadical::make(BigInt(py::str(num).cast<std::string>()),
                                           BigInt(py::str(den).cast<std::string>()), root);
             }),
             py::arg("num"), py::arg("den") = 1, py::arg("root") = 1)
        .def_property_readonly("num", [](ExactRadical const& r) { return to_py_int(r.radicand().get_num()); })
        .def_property_readonly("den", [](ExactRadical const& r) { return to_py_int(r.radicand().get_den()); })
        .def_property_readonly("root", &ExactRadical::root)
        .def("decimal", &display_decimal, py::arg("digits") = 6)
        .def("to_dict", [](ExactRadical const& r, int digits) { return to_py(radical_to_json(r, digits)); },
             py::arg("digits") = 6)
        .def("__float__", [](ExactRadical const& r) { return std::stod(radical_to_decimal(r, 20)); })
        .def("__str__", &ExactRadical::to_string)
        .def("__repr__", [](ExactRadical const& r) { return "Radical(" + r.to_string() + ")"; })
        .def("__eq__", [](ExactRadical const& a, ExactRadical const& b) { return a == b; })
        .def("__lt__", [](ExactRadical const& a, ExactRadical const& b) { return a < b; })
        .def("__le__", [](ExactRadical const& a, ExactRadical const& b) { return a <= b; })
        .def("__hash__", [](ExactRadical const& r) { return py::hash(py::str(r.to_string())); });

    py::class_<IntegralLattice>(m, "Lattice")
        .def_static("from_rows", py::overload_cast<IntMatrix const&>(&IntegralLattice::from_rows), py::arg("rows"))
        .def_property_readonly("n", &IntegralLattice::n)
        .def_property_readonly("basis", &IntegralLattice::basis)
        .def_property_readonly("gram", &IntegralLattice::gram)
        .def_property_readonly("det", [](IntegralLattice const& L) { return to_py_int(L.det_gram()); })
        .def("contains", &IntegralLattice::contains, py::arg("vector"))
        .def("is_even", [](IntegralLattice const& L) { return is_even(L); })
        .def("scaled", [](IntegralLattice const& L, long s) { return scaled(L, s); }, py::arg("factor"))
        .def("dual_scaled", [](IntegralLattice const& L, long q) { return dual_lattice_scaled(L, q); },
             py::arg("q"))
        .def("to_dict", [](IntegralLattice const& L) { return to_py(lattice_to_json(L)); });

    py::class_<LinearCode>(m, "Code")
        .def(py::init([](long q, long n, IntMatrix generators) { return LinearCode(q, n, std::move(generators)); }),
             py::arg("q"), py::arg("n"), py::arg("generators"))
        .def_property_readonly("q", &LinearCode::q)
        .def_property_readonly("n", &LinearCode::n)
        .def_property_readonly("generators", &LinearCode::generators)
        .def_property_readonly("cardinality", [](LinearCode const& c) { return to_py_int(c.cardinality()); })
        .def("canonical_generators", &LinearCode::canonical_generators)
        .def("same_code", &LinearCode::same_code, py::arg("other"))
        .def("is_self_dual", &LinearCode::is_self_dual)
        .def("dual", [](LinearCode const& c) { return dual_code(c); })
        .def("codewords", &LinearCode::codewords, py::arg("cap") = kDefaultCodewordCap)
        .def("lattice", [](LinearCode const& c) { return construction_a(c); })
        .def("spec", [](LinearCode const& c) { return to_py(spec_to_json(SpecDocument{c, std::nullopt})); });

    m.def("family", &make_family, py::arg("name"), py::arg("params"));
    m.def("parity_check", &parity_check_code, py::arg("n"), py::arg("q"));
    m.def("reed_muller", &reed_muller_code, py::arg("r"), py::arg("m"));
    m.def("extended_hamming", &extended_hamming_code);
    m.def("full_code", &full_code, py::arg("n"), py::arg("q"));
    m.def("zero_code", &zero_code, py::arg("n"), py::arg("q"));
    m.def("reed_muller_generators", &reed_muller_generators, py::arg("r"), py::arg("m"));

    m.def(
        "parse_spec",
        [](std::string const& text) -> py::object {
            SpecDocument doc = parse_spec(text);
            if (doc.code)
                return py::cast(*doc.code);
            return py::cast(doc.lattice());
        },
        py::arg("text"));

    m.def(
        "d_l",
        [](IntegralLattice const& L, std::size_t l, unsigned threads, std::uint64_t cap, bool escalate) {
            py::gil_scoped_release release;
            SearchCertificate cert = d_l_search(L, l, options(threads, cap, escalate));
            py::gil_scoped_acquire acquire;
            return to_py(certificate_to_json(cert));
        },
        py::arg("lattice"), py::arg("l"), py::arg("threads") = 1, py::arg("max_candidates") = 10'000'000,
        py::arg("escalate") = true);
    m.def(
        "d_l",
        [](LinearCode const& code, std::size_t l, unsigned threads, std::uint64_t cap, bool escalate) {
            py::gil_scoped_release release;
            SearchCertificate cert = d_l_search(code, l, options(threads, cap, escalate));
            py::gil_scoped_acquire acquire;
            return to_py(certificate_to_json(cert));
        },
        py::arg("code"), py::arg("l"), py::arg("threads") = 1, py::arg("max_candidates") = 10'000'000,
        py::arg("escalate") = true);

    m.def(
        "gamma",
        [](IntegralLattice const& L, std::size_t l, unsigned threads, std::uint64_t cap) {
            py::gil_scoped_release release;
            return gamma_nl(L, d_l_search(L, l, options(threads, cap, true)));
        },
        py::arg("lattice"), py::arg("l"), py::arg("threads") = 1, py::arg("max_candidates") = 10'000'000);
    m.def(
        "gamma",
        [](LinearCode const& code, std::size_t l, unsigned threads, std::uint64_t cap) {
            py::gil_scoped_release release;
            return gamma_nl(construction_a(code), d_l_search(code, l, options(threads, cap, true)));
        },
        py::arg("code"), py::arg("l"), py::arg("threads") = 1, py::arg("max_candidates") = 10'000'000);

    m.def(
        "gamma_prime",
        [](LinearCode const& code, std::size_t l, unsigned threads, std::uint64_t cap) {
            GammaPrimeResult r = [&] {
                py::gil_scoped_release release;
                return gamma_prime_nl(code, l, options(threads, cap, true));
            }();
            py::dict out;
            out["value"] = r.value;
            out["d_l"] = to_py_int(r.primal.value);
            out["d_l_dual"] = to_py_int(r.dual.value);
            out["self_dual"] = r.self_dual;
            return out;
        },
        py::arg("code"), py::arg("l"), py::arg("threads") = 1, py::arg("max_candidates") = 10'000'000);

    m.def(
        "bounds",
        [](long n_max, std::optional<std::set<int>> rules, int digits) {
            BoundTable table = propagate_bounds(n_max, default_seeds(n_max), rules.value_or(kAllRules));
            return to_py(bound_table_to_json(table, digits));
        },
        py::arg("n_max") = 8, py::arg("rules") = py::none(), py::arg("digits") = 6);

    m.def(
        "asymptotic",
        [](long k, int digits) { return to_py(asymptotic_to_json(asymptotic_gamma_2k_k(k, digits))); },
        py::arg("k"), py::arg("digits") = 30);

    m.def(
        "verify",
        [](std::optional<std::string> filter) {
            std::vector<CheckResult> results;
            {
                py::gil_scoped_release release;
                results = run_checks(filter);
            }
            return to_py(report_to_json(results, false));
        },
        py::arg("filter") = py::none());
}
