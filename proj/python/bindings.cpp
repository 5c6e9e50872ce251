#include "simpson/generate.hpp"
#include "simpson/report.hpp"

#include <nlohmann/json.hpp>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace simpson;
using nlohmann::json;

namespace {

Rational entry_from_py(py::handle h) {
    if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
    if (py::isinstance<py::int_>(h)) return Rational(h.cast<long long>());
    throw py::type_error("table entries must be ints or exact numeric strings");
}

Table2x2 table_from_py(py::handle h) {
    py::sequence s = py::reinterpret_borrow<py::sequence>(h);
    if (py::len(s) != 4) throw py::value_error("a table is a sequence of 4 entries (a, b, c, d)");
    return from_counts(entry_from_py(s[0]), entry_from_py(s[1]), entry_from_py(s[2]),
                       entry_from_py(s[3]));
}

py::tuple table_to_py(const Table2x2& t) {
    return py::make_tuple(to_fraction_string(t.a()), to_fraction_string(t.b()),
                          to_fraction_string(t.c()), to_fraction_string(t.d()));
}

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::object: {
            py::dict d;
            for (const auto& [k, v] : j.items()) d[py::str(k)] = json_to_py(v);
            return d;
        }
        case json::value_t::array: {
            py::list l;
            for (const json& v : j) l.append(json_to_py(v));
            return l;
        }
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        default: return py::none();
    }
}

TablePair pair_from_py(py::handle t1, py::handle t2) {
    return {table_from_py(t1), table_from_py(t2)};
}

}  // namespace

PYBIND11_MODULE(simpson2x2, m) {
    m.doc() = "Exact Simpson's-paradox analysis of pairs of 2x2 contingency tables";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<NonPositiveEntry>(m, "NonPositiveEntry", PyExc_ValueError);

    m.def(
        "analyze",
        [](py::handle t1, py::handle t2) {
            return json_to_py(report_to_json(analyze(pair_from_py(t1, t2))));
        },
        py::arg("t1"), py::arg("t2"),
        "Full analysis report as a dict; rationals appear as {num, den, approx}.");

    m.def(
        "case_of", [](py::handle t1, py::handle t2) { return case_of(pair_from_py(t1, t2)); },
        py::arg("t1"), py::arg("t2"), "Case number 1..27 of the relation triple.");

    m.def(
        "class_of", [](CaseId c) { return to_string(class_of(c)); }, py::arg("case_id"),
        "Human-readable class label for a case number.");

    m.def(
        "sp", [](py::handle t1, py::handle t2) { return to_string(sp(pair_from_py(t1, t2))); },
        py::arg("t1"), py::arg("t2"), "Simpson's-paradox verdict: 'none', 'SP1' or 'SP2'.");

    m.def(
        "representative",
        [](CaseId c) {
            TablePair p = representative(c);
            return py::make_tuple(table_to_py(p.t1), table_to_py(p.t2));
        },
        py::arg("case_id"), "A witness pair for the given case, entries as exact strings.");

    m.def(
        "literature_corpus",
        []() {
            py::list out;
            for (const CorpusEntry& e : literature_corpus()) {
                py::dict d;
                d["id"] = e.id;
                d["t1"] = table_to_py(e.pair.t1);
                d["t2"] = table_to_py(e.pair.t2);
                d["expected_case"] = e.expected_case;
                out.append(d);
            }
            return out;
        },
        "The five documented real-world examples.");

    m.def(
        "toggling_sequence",
        [](std::size_t n) {
            py::list out;
            for (const TablePair& p : toggling_sequence(n)) {
                out.append(py::make_tuple(table_to_py(p.t1), table_to_py(p.t2)));
            }
            return out;
        },
        py::arg("n"), "Monotone sequence whose verdict toggles with period 4.");

    m.def(
        "random_pair",
        [](std::uint64_t seed, int max_entry) {
            TablePair p = random_pair(seed, max_entry);
            return py::make_tuple(table_to_py(p.t1), table_to_py(p.t2));
        },
        py::arg("seed"), py::arg("max_entry") = 9,
        "Deterministic seeded pair with integer entries in [1, max_entry].");

    m.def("pair_count", &pair_count, py::arg("max_entry"),
          "Number of pairs with integer entries in [1, max_entry].");
}
