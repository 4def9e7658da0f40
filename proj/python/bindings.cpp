#include "iqf/api.hpp"
#include "iqf/errors.hpp"
#include "iqf/serialize.hpp"

#include <pybind11/pybind11.h>

namespace py = pybind11;

namespace {

// Each binding takes and returns JSON text; the Python package converts to dicts.
template <class F>
std::string call(F&& f) {
    return f().dump();
}

iqf::Json doc(const std::string& text) { return iqf::parse_json(text); }

}  // namespace

PYBIND11_MODULE(_iqf, m) {
    m.doc() = "Integral quadratic forms and bidirected graphs (JSON text interface)";

    // Messages start with the error kind, e.g. "NotPositive: ...".
    py::register_exception<iqf::FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<iqf::Error>(m, "IqfError");

    using namespace iqf::api;
    m.def("qf_info", [](const std::string& f) { return call([&] { return qf_info(doc(f)); }); });
    m.def("qf_realize", [](const std::string& f) { return call([&] { return qf_realize(doc(f)); }); });
    m.def("qf_canonical_c", [](const std::string& f) { return call([&] { return qf_canonical_c(doc(f)); }); });
    m.def(
        "qf_solve",
        [](const std::string& f, const std::string& d, long long bound, bool walk_sum) {
            return call([&] { return qf_solve(doc(f), d, bound, walk_sum); });
        },
        py::arg("form"), py::arg("d"), py::arg("bound") = 8, py::arg("walk_sum") = false);
    m.def("bg_form", [](const std::string& g) { return call([&] { return bg_form(doc(g)); }); });
    m.def("bg_balance", [](const std::string& g) { return call([&] { return bg_balance(doc(g)); }); });
    m.def(
        "bg_roots",
        [](const std::string& g, int set, std::size_t max_len, long long bound) {
            return call([&] { return bg_roots(doc(g), set, max_len, bound); });
        },
        py::arg("graph"), py::arg("set") = 1, py::arg("max_len") = 0, py::arg("bound") = 0);
    m.def("bg_line", [](const std::string& g) { return call([&] { return bg_line(doc(g)); }); });
    m.def("bg_switch_equiv",
          [](const std::string& g, const std::string& h) { return call([&] { return bg_switch_equiv(doc(g), doc(h)); }); });
    m.def("gentle_euler", [](const std::string& q) { return call([&] { return gentle_euler(doc(q)); }); });
}
