#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qfock/errors.hpp"
#include "qfock/fock.hpp"
#include "qfock/json_report.hpp"
#include "qfock/q_numbers.hpp"
#include "qfock/qboson.hpp"

namespace py = pybind11;

namespace {

qfock::Generator generator_from_tuple(const std::tuple<std::string, int, std::int64_t>& t) {
    const auto& [kind, site, power] = t;
    if (kind == "a") return qfock::Generator::a(site, power);
    if (kind == "a_div") return qfock::Generator::a_divided(site, power);
    if (kind == "a+") return qfock::Generator::a_plus(site, power);
    if (kind == "a+_div") return qfock::Generator::a_plus_divided(site, power);
    if (kind == "K") return qfock::Generator::k(site);
    if (kind == "K_inv") return qfock::Generator::k_inv(site);
    throw qfock::UsageError("unknown generator kind: " + kind);
}

qfock::BosonForm form_from_string(const std::string& form) {
    if (form == "res1") return qfock::BosonForm::Res1;
    if (form == "res2") return qfock::BosonForm::Res2;
    throw qfock::UsageError("form must be 'res1' or 'res2'");
}

} // namespace

PYBIND11_MODULE(_qfock, m) {
    m.doc() = "exact type-1 highest weight modules of restricted quantum sl2 on q-Fock spaces";

    m.def("q_int", [](std::int64_t n) { return qfock::q_int(n).str(); }, py::arg("n"));
    m.def("q_factorial", [](std::int64_t n) { return qfock::q_factorial(n).str(); }, py::arg("m"));
    m.def(
        "q_binomial",
        [](std::int64_t n, std::int64_t k) { return qfock::q_binomial(n, k).str(); },
        py::arg("n"), py::arg("m"));
    m.def(
        "q_binomial_at_root",
        [](std::int64_t n, std::int64_t k, std::int64_t p) {
            return qfock::specialize(qfock::q_binomial(n, k), p).str();
        },
        py::arg("n"), py::arg("m"), py::arg("p"));
    m.def("q_binom_at_root", &qfock::q_binom_at_root, py::arg("n"), py::arg("p"),
          "the integer [n over p] takes at the root of unity (the upper digit of n)");
    m.def(
        "digits",
        [](std::int64_t n, std::int64_t p) {
            const qfock::Digits d = qfock::digits(n, p);
            return std::make_pair(d.n0, d.n1);
        },
        py::arg("n"), py::arg("p"));
    m.def(
        "cyclotomic_polynomial",
        [](std::int64_t p) { return qfock::cyclotomic_polynomial(p).str(); }, py::arg("p"));

    m.def(
        "normal_order",
        [](const std::vector<std::tuple<std::string, int, std::int64_t>>& word,
           const std::string& form) {
            std::vector<qfock::Generator> generators;
            generators.reserve(word.size());
            for (const auto& t : word) generators.push_back(generator_from_tuple(t));
            const qfock::BosonResult r =
                qfock::normal_order(generators, form_from_string(form));
            if (const auto* err = std::get_if<qfock::NotIntegral>(&r)) {
                throw py::value_error(err->message());
            }
            return std::get<qfock::BosonElement>(r).str();
        },
        py::arg("word"), py::arg("form"),
        "PBW normal form of a generator word; raises ValueError when the word "
        "lies outside the requested integral form");

    m.def(
        "weyl_report_json",
        [](std::int64_t p, std::int64_t m) { return qfock::weyl_document(p, m).dump(); },
        py::arg("p"), py::arg("m"));
    m.def(
        "infinite_report_json",
        [](std::int64_t p, std::int64_t s, std::int64_t window) {
            return qfock::infmod_document(p, s, window).dump();
        },
        py::arg("p"), py::arg("s"), py::arg("window"));
    m.def(
        "classify_json",
        [](std::int64_t p, std::int64_t lam) { return qfock::classify_document(p, lam).dump(); },
        py::arg("p"), py::arg("lambda"));
    m.def(
        "verify_json",
        [](std::int64_t p, int which, std::int64_t bound, std::uint64_t seed) {
            return qfock::verify_document(p, which, bound, seed).dump();
        },
        py::arg("p"), py::arg("which"), py::arg("bound") = 5, py::arg("seed") = 20240901);

    py::register_exception<qfock::UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<qfock::WindowTooSmallError>(m, "WindowTooSmallError", PyExc_ValueError);
}
