#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bernden/arith.hpp"
#include "bernden/denom_sieve.hpp"
#include "bernden/setstats.hpp"
#include "bernden/staudt_clausen.hpp"

namespace py = pybind11;

namespace {

py::object to_py_int(const bernden::Int& v) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object to_fraction(const bernden::Rational& r) {
    static py::object fraction_type = py::module_::import("fractions").attr("Fraction");
    return fraction_type(r.get_str());
}

}  // namespace

PYBIND11_MODULE(_bernden, m) {
    m.doc() = "Bernoulli number denominators, their subscript classes, and counting functions";

    m.def("is_prime", &bernden::is_prime, py::arg("n"),
          "Deterministic 64-bit primality test.");
    m.def("carmichael_lambda", &bernden::carmichael_lambda, py::arg("n"),
          "Exponent of the multiplicative group mod n.");
    m.def(
        "t_class", [](uint64_t m) { return bernden::t_class(m).primes; }, py::arg("m"),
        "Primes p with p-1 dividing m, ascending.");
    m.def(
        "denominator",
        [](uint64_t n) { return to_py_int(bernden::denominator(n).value); }, py::arg("n"),
        "Denominator of the Bernoulli number B_n (n even), as an int.");
    m.def(
        "bernoulli_frac",
        [](uint64_t n) { return to_fraction(bernden::bernoulli_frac(n)); }, py::arg("n"),
        "Fractional part of B_n in [0, 1), exact, as a Fraction.");
    m.def(
        "bernoulli",
        [](uint32_t n) { return to_fraction(bernden::bernoulli_oracle(n)); }, py::arg("n"),
        "B_n via the defining recurrence (slow past a few hundred), as a Fraction.");
    m.def(
        "denominator_cofactor",
        [](uint64_t p) { return to_py_int(bernden::denominator_cofactor(p).value); },
        py::arg("p"), "D_{p-1}/p for an odd prime p.");

    m.def(
        "is_bernoulli_denominator",
        [](uint64_t d) { return bernden::is_bernoulli_denominator(d); }, py::arg("d"),
        "Whether d occurs as a Bernoulli denominator.");
    m.def("is_first_subscript", &bernden::is_first_subscript, py::arg("n"),
          "Whether n is the least subscript with its denominator.");
    m.def("first_subscripts_upto", &bernden::first_subscripts_upto, py::arg("x"),
          "Least subscripts <= x, ascending.");
    m.def("denominators_upto", &bernden::denominators_upto, py::arg("x"),
          "Distinct denominators <= x, ascending.");
    m.def("u_set", &bernden::u_set, py::arg("n"), py::arg("limit"),
          "Multiples mn <= limit with the same denominator as n.");
    m.def("u_set_excluding", &bernden::u_set_excluding, py::arg("n"), py::arg("r"),
          py::arg("limit"), "u_set members whose cofactor is not divisible by the prime r.");
    m.def("germain_primes", &bernden::germain_primes, py::arg("x"),
          "Primes p <= x with 2p+1 prime.");

    m.def(
        "count_first_subscripts",
        [](uint64_t x) {
            auto r = bernden::count_first_subscripts(x);
            return py::make_tuple(r.count, r.ratio);
        },
        py::arg("x"),
        "(count of least subscripts <= x, ratio to x/((ln x)^beta sqrt(ln ln x))).");
    m.def(
        "count_denominators",
        [](uint64_t x) {
            auto r = bernden::count_denominators(x);
            return py::make_tuple(r.count, r.ratio);
        },
        py::arg("x"), "(count of denominators <= x, ratio to pi(x)).");
    m.def(
        "partition_counts",
        [](uint64_t x, const std::vector<uint64_t>& targets) {
            py::list out;
            for (const auto& cell : bernden::partition_counts(x, targets))
                out.append(py::make_tuple(cell.target, cell.count, cell.fraction));
            return out;
        },
        py::arg("x"), py::arg("targets"),
        "[(d, #primes p <= x with D_{p-1} = d*p, fraction of pi(x)), ...].");
    m.def(
        "count_cofactor_not_denominator",
        [](uint64_t x) {
            auto r = bernden::count_cofactor_not_denominator(x);
            return py::make_tuple(r.count, r.ratio);
        },
        py::arg("x"),
        "(count of odd primes p <= x whose cofactor D_{p-1}/p is not itself a denominator, "
        "ratio to pi(x)).");
    m.def("erdos_tenenbaum_ford_beta", &bernden::erdos_tenenbaum_ford_beta,
          "1 - (1 + ln ln 2)/ln 2.");

    m.attr("__version__") = "0.1.0";
}
