// Python bindings for the constacyclic-code library. Structured payloads
// (ideal and code specs, contexts, reports) travel as JSON strings; the
// package __init__ turns them into dicts. Counts travel as decimal strings
// since they routinely exceed 64 bits.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chainring/json_io.hpp"
#include "chainring/oracle.hpp"

namespace py = pybind11;
using namespace chainring;

namespace {

struct PySystem {
    explicit PySystem(uint32_t p, uint32_t s, uint32_t k, uint64_t n, uint64_t w,
                      uint64_t seed)
        : sys(build_context(p, s, k, n, w, seed)) {}
    System sys;

    const Context& ctx() const { return sys.ctx(); }

    std::vector<std::vector<uint64_t>> factors() const {
        std::vector<std::vector<uint64_t>> out;
        for (const auto& f : ctx().factors) out.push_back(f.coeffs());
        return out;
    }

    std::vector<uint64_t> theta(size_t i, bool hat) const {
        if (i >= ctx().r) throw InvalidInput("factor index out of range");
        return sys.theta(hat ? Variant::hat : Variant::plain, i).coeffs();
    }

    std::string count_ideals_str(size_t i) const {
        if (i >= ctx().r) throw InvalidInput("factor index out of range");
        return count_ideals(ctx().p, ctx().degrees[i], ctx().nu()).str();
    }

    std::string count_codes_str() const {
        bigint total = 1;
        for (size_t i = 0; i < ctx().r; ++i)
            total *= count_ideals(ctx().p, ctx().degrees[i], ctx().nu());
        return total.str();
    }

    std::vector<std::string> enumerate_ideals_json(size_t i, uint64_t limit) const {
        if (i >= ctx().r) throw InvalidInput("factor index out of range");
        std::vector<std::string> out;
        IdealEnumerator en(sys.ring(Variant::plain, i));
        while (en.next()) {
            out.push_back(to_json(en.spec()).dump());
            if (limit && out.size() >= limit) break;
        }
        return out;
    }

    std::string dual_json(const std::string& code_json) const {
        CodeSpec code = code_from_json(json::parse(code_json), ctx());
        return to_json(ctx(), dual_code(sys, code)).dump();
    }

    bool self_dual(const std::string& code_json) const {
        CodeSpec code = code_from_json(json::parse(code_json), ctx());
        return is_self_dual(sys, code);
    }

    std::string count_self_dual_str() const { return count_self_dual(sys).str(); }

    std::vector<std::string> fixed_candidates_json(size_t i) const {
        std::vector<std::string> out;
        for (const auto& c : selfdual_fixed_candidates(sys, i))
            out.push_back(to_json(c).dump());
        return out;
    }

    std::vector<std::string> enumerate_self_dual_json(uint64_t limit) const {
        std::vector<std::string> out;
        enumerate_self_dual(sys, [&](const CodeSpec& code) {
            out.push_back(to_json(ctx(), code).dump());
            return !(limit && out.size() >= limit);
        });
        return out;
    }

    std::vector<std::tuple<std::string, bool, std::string>> verify(unsigned jobs) const {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& line : verify_small_instance(sys, jobs).lines)
            out.emplace_back(line.name, line.pass, line.detail);
        return out;
    }

    std::string context_json() const { return context_to_json(ctx()).dump(); }
};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact algebra for (1+pw)-constacyclic codes over Z_{p^s}+uZ_{p^s}";

    py::register_exception<NotAUnit>(m, "NotAUnitError");
    py::register_exception<InvalidInput>(m, "InvalidInputError");
    py::register_exception<NotSelfDualCompatible>(m, "NotSelfDualCompatibleError");
    py::register_exception<CapExceeded>(m, "CapExceededError");
    py::register_exception<BoundExceeded>(m, "BoundExceededError");

    py::class_<PySystem>(m, "System")
        .def(py::init<uint32_t, uint32_t, uint32_t, uint64_t, uint64_t, uint64_t>(),
             py::arg("p"), py::arg("s"), py::arg("k"), py::arg("n"), py::arg("w"),
             py::arg("seed") = 1)
        .def_property_readonly("p", [](const PySystem& s) { return s.ctx().p; })
        .def_property_readonly("s", [](const PySystem& s) { return s.ctx().s; })
        .def_property_readonly("k", [](const PySystem& s) { return s.ctx().k; })
        .def_property_readonly("n", [](const PySystem& s) { return s.ctx().n; })
        .def_property_readonly("N", [](const PySystem& s) { return s.ctx().N; })
        .def_property_readonly("nu", [](const PySystem& s) { return s.ctx().nu(); })
        .def_property_readonly("w", [](const PySystem& s) { return s.ctx().w; })
        .def_property_readonly("w0", [](const PySystem& s) { return s.ctx().w0; })
        .def_property_readonly("what", [](const PySystem& s) { return s.ctx().what; })
        .def_property_readonly("what0", [](const PySystem& s) { return s.ctx().what0; })
        .def_property_readonly("gamma", [](const PySystem& s) { return s.ctx().gamma(); })
        .def_property_readonly("gamma_hat",
                               [](const PySystem& s) { return s.ctx().gamma_hat(); })
        .def_property_readonly("r", [](const PySystem& s) { return s.ctx().r; })
        .def_property_readonly("lambda_count",
                               [](const PySystem& s) { return s.ctx().lambda; })
        .def_property_readonly("epsilon_count",
                               [](const PySystem& s) { return s.ctx().epsilon; })
        .def_property_readonly("mu", [](const PySystem& s) { return s.ctx().mu; })
        .def_property_readonly("delta", [](const PySystem& s) { return s.ctx().delta; })
        .def_property_readonly("degrees",
                               [](const PySystem& s) { return s.ctx().degrees; })
        .def("factors", &PySystem::factors)
        .def("theta", &PySystem::theta, py::arg("i"), py::arg("hat") = false)
        .def("_count_ideals", &PySystem::count_ideals_str, py::arg("i"))
        .def("_count_codes", &PySystem::count_codes_str)
        .def("_enumerate_ideals", &PySystem::enumerate_ideals_json, py::arg("i"),
             py::arg("limit") = 0)
        .def("_dual", &PySystem::dual_json, py::arg("code_json"))
        .def("_is_self_dual", &PySystem::self_dual, py::arg("code_json"))
        .def("_count_self_dual", &PySystem::count_self_dual_str)
        .def("_self_dual_fixed_candidates", &PySystem::fixed_candidates_json,
             py::arg("i"))
        .def("_enumerate_self_dual", &PySystem::enumerate_self_dual_json,
             py::arg("limit") = 0)
        .def("verify", &PySystem::verify, py::arg("jobs") = 1)
        .def("_context", &PySystem::context_json);

    m.def(
        "factor_xn_minus_1",
        [](uint32_t p, uint32_t s, uint64_t n, uint64_t seed) {
            std::vector<std::vector<uint64_t>> out;
            for (const auto& f : factor_xn_minus_1(p, s, n, seed))
                out.push_back(f.coeffs());
            return out;
        },
        py::arg("p"), py::arg("s"), py::arg("n"), py::arg("seed") = 1);
    m.def(
        "_count_ideals",
        [](uint32_t p, uint32_t d, uint64_t m_) { return count_ideals(p, d, m_).str(); },
        py::arg("p"), py::arg("d"), py::arg("m"));
    m.def(
        "_omega",
        [](uint32_t p, uint32_t d, uint64_t m_) { return omega(p, d, m_).str(); },
        py::arg("p"), py::arg("d"), py::arg("m"));
    m.def(
        "_psi", [](uint32_t p, uint32_t d, uint64_t m_) { return psi(p, d, m_).str(); },
        py::arg("p"), py::arg("d"), py::arg("m"));
}
