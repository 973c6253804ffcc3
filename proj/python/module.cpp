#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rjc/jsonout.hpp"
#include "rjc/parse.hpp"

namespace py = pybind11;
using namespace rjc;

namespace {

std::vector<Rat> to_rats(const std::vector<std::string>& xs) {
    std::vector<Rat> out;
    out.reserve(xs.size());
    for (const auto& s : xs) out.push_back(Rat::from_string(s));
    return out;
}

Family family_of(int id, const std::string& a02) { return Family::make(id, Rat::from_string(a02)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact decision procedures for planar polynomial submersions and Jacobian pairs";
    m.attr("__version__") = kVersion;

    m.def("canonical", [](const std::string& p) { return print_poly(parse_poly(p)); },
          "parse and reprint a polynomial in canonical term order");

    m.def("classify_json", [](const std::string& p) {
        BPoly bp = parse_poly(p);
        return json_classify(bp, classify_degree4(bp)).dump();
    });

    m.def("critical_json", [](const std::string& p) {
        BPoly bp = parse_poly(p);
        return json_critical(bp, critical_point_exists(bp)).dump();
    });

    m.def("connected_json", [](const std::string& p, const std::string& level) {
        BPoly bp = parse_poly(p);
        return json_connected(bp, decide_connected(bp, Rat::from_string(level))).dump();
    }, py::arg("p"), py::arg("level") = "0");

    m.def("subres_json", [](const std::string& p, const std::string& q, const std::string& var, int k) {
        BPoly bp = parse_poly(p), bq = parse_poly(q);
        Var v = var == "x" ? Var::x : Var::y;
        return json_subres(bp, bq, v, k, subresultant(bp, bq, v, k)).dump();
    });

    m.def("refute_json", [](int family, const std::string& q, const std::string& a02) {
        Family f = family_of(family, a02);
        BPoly bq = parse_poly(q);
        return json_refute(f, bq, refute_pair(f, bq)).dump();
    }, py::arg("family"), py::arg("q"), py::arg("a02") = "0");

    m.def("bruna_json", [](const std::vector<std::string>& b) {
        auto rats = to_rats(b);
        return json_bruna(rats, bruna_witnesses(rats)).dump();
    });

    m.def("hankel_json", [](int j, int k, bool minors) {
        HankelMatrix H = hankel(j, k);
        Rat det = det_exact(H.entries);
        if (minors) {
            auto ms = leading_minors(H.entries);
            return json_hankel(j, k, det, &ms).dump();
        }
        return json_hankel(j, k, det, nullptr).dump();
    }, py::arg("j"), py::arg("k"), py::arg("minors") = false);

    m.def("tau", [](int family, const std::string& h, const std::string& a02) {
        return tau(family_of(family, a02), parse_poly(h));
    }, py::arg("family"), py::arg("h"), py::arg("a02") = "0");

    m.def("truncated_integral", [](int family, const std::string& h, const std::string& eps,
                                   const std::string& a02) {
        return truncated_integral(family_of(family, a02), parse_poly(h), Rat::from_string(eps));
    }, py::arg("family"), py::arg("h"), py::arg("eps"), py::arg("a02") = "0");

    py::register_exception<rjc::ParseError>(m, "PolyParseError", PyExc_ValueError);
    py::register_exception<rjc::Error>(m, "RjcError", PyExc_RuntimeError);
}
