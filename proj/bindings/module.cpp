#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phasekick/gdj.hpp"
#include "phasekick/kickback.hpp"
#include "phasekick/verify.hpp"

namespace py = pybind11;
using namespace phasekick;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact state-vector simulation and verification of f-conditioned "
              "phase transforms with uninitialized ancilla registers";
    m.attr("__version__") = "0.1.0";

    py::register_exception<promise_violation>(m, "PromiseViolation");

    // ---- registers ----
    py::class_<RegisterShape>(m, "RegisterShape")
        .def(py::init<std::vector<std::size_t>>(), py::arg("dims"))
        .def_readonly("dims", &RegisterShape::dims)
        .def("total_dim", &RegisterShape::total_dim)
        .def("__repr__", [](const RegisterShape& s) {
            std::string out = "RegisterShape([";
            for (std::size_t i = 0; i < s.dims.size(); ++i)
                out += (i ? ", " : "") + std::to_string(s.dims[i]);
            return out + "])";
        });

    py::class_<PureState>(m, "PureState")
        .def_readonly("shape", &PureState::shape)
        .def_readonly("amplitudes", &PureState::amplitudes)
        .def("norm", &PureState::norm)
        .def("is_normalized", &PureState::is_normalized, py::arg("tol") = kAmplitudeTol);

    m.def("basis_state", &basis_state, py::arg("shape"), py::arg("index"));
    m.def("random_state", &random_state, py::arg("shape"), py::arg("seed"));
    m.def("tensor", &tensor, py::arg("a"), py::arg("b"));
    m.def("apply", &apply, py::arg("u"), py::arg("state"), py::arg("target"));
    m.def("fidelity", &fidelity, py::arg("a"), py::arg("b"));
    m.def("distribution", &distribution, py::arg("state"), py::arg("reg") = std::nullopt);
    m.def("sample", &sample, py::arg("state"), py::arg("seed"), py::arg("reg") = std::nullopt);
    m.def("inner_product", &inner_product, py::arg("a"), py::arg("b"));
    m.def("max_amplitude_diff", &max_amplitude_diff, py::arg("a"), py::arg("b"));

    // ---- gates ----
    py::class_<UnitaryMatrix>(m, "UnitaryMatrix")
        .def_readonly("dim", &UnitaryMatrix::dim)
        .def_readonly("entries", &UnitaryMatrix::entries)
        .def("entry",
             [](const UnitaryMatrix& u, std::size_t r, std::size_t c) { return u.at(r, c); },
             py::arg("row"), py::arg("col"))
        .def("adjoint", &UnitaryMatrix::adjoint)
        .def_static("identity", &UnitaryMatrix::identity, py::arg("dim"))
        .def(py::self * py::self);

    m.def("qft", &qft, py::arg("m_dim"));
    m.def("qft_inv", &qft_inv, py::arg("m_dim"));
    m.def("translation", &translation, py::arg("m_dim"), py::arg("z"));
    m.def("r_phase", &r_phase, py::arg("m_dim"), py::arg("k"));
    m.def("s_gate", &s_gate, py::arg("m_dim"), py::arg("k"));
    m.def("walsh", &walsh, py::arg("n_qubits"));
    m.def("commutator", &commutator, py::arg("a"), py::arg("b"));
    m.def("max_abs_diff", &max_abs_diff, py::arg("a"), py::arg("b"));
    m.def("unitarity_residual", &unitarity_residual, py::arg("u"));
    m.def("root_of_unity", &root_of_unity, py::arg("m"), py::arg("exponent"));

    // ---- oracle ----
    py::enum_<OracleDirection>(m, "OracleDirection")
        .value("Forward", OracleDirection::Forward)
        .value("Inverse", OracleDirection::Inverse);

    py::enum_<Classification>(m, "Classification")
        .value("Constant", Classification::Constant)
        .value("EvenlyDistributed", Classification::EvenlyDistributed);

    py::class_<FunctionTable>(m, "FunctionTable")
        .def(py::init<std::size_t, std::size_t, std::vector<std::size_t>>(), py::arg("n"),
             py::arg("m"), py::arg("values"))
        .def_readonly("n", &FunctionTable::n)
        .def_readonly("m", &FunctionTable::m)
        .def_readonly("values", &FunctionTable::values)
        .def("domain_size", &FunctionTable::domain_size)
        .def("range_size", &FunctionTable::range_size);

    py::class_<RealFunctionTable>(m, "RealFunctionTable")
        .def(py::init<std::size_t, std::vector<double>>(), py::arg("n"), py::arg("values"))
        .def_readonly("n", &RealFunctionTable::n)
        .def_readonly("values", &RealFunctionTable::values);

    py::class_<OracleTranscript>(m, "OracleTranscript")
        .def(py::init<>())
        .def_readonly("forward_calls", &OracleTranscript::forward_calls)
        .def_readonly("inverse_calls", &OracleTranscript::inverse_calls)
        .def_readonly("order", &OracleTranscript::order)
        .def("total_calls", &OracleTranscript::total_calls);

    py::class_<StructureParams>(m, "StructureParams")
        .def_readonly("d", &StructureParams::d)
        .def_readonly("l", &StructureParams::l)
        .def_readonly("a", &StructureParams::a)
        .def_readonly("class_sizes", &StructureParams::class_sizes);

    py::class_<ClassifyResult>(m, "ClassifyResult")
        .def_readonly("label", &ClassifyResult::label)
        .def_readonly("queries", &ClassifyResult::queries);

    m.def("apply_uf", &apply_uf, py::arg("state"), py::arg("f"), py::arg("direction"),
          py::arg("transcript"));
    m.def("make_constant", &make_constant, py::arg("n"), py::arg("m"), py::arg("c"));
    m.def("make_evenly_distributed", &make_evenly_distributed, py::arg("n"), py::arg("m"),
          py::arg("d"), py::arg("a"), py::arg("seed"), py::arg("adversarial_order") = false);
    m.def("make_r_to_one", &make_r_to_one, py::arg("n"), py::arg("m"), py::arg("seed"));
    m.def("discretize", &discretize, py::arg("f"), py::arg("m"));
    m.def("compose_g_of_f", &compose_g_of_f, py::arg("g"), py::arg("f"), py::arg("m_out"));
    m.def("classify_classically", &classify_classically, py::arg("f"),
          py::arg("d_known") = std::nullopt);

    // ---- kickback ----
    py::enum_<Variant>(m, "Variant")
        .value("Rtrt", Variant::Rtrt)
        .value("Cyclic1", Variant::Cyclic1)
        .value("Cyclic2", Variant::Cyclic2)
        .value("Cyclic3", Variant::Cyclic3)
        .value("SForm", Variant::SForm);

    py::class_<PhaseResult>(m, "PhaseResult")
        .def_readonly("final_state", &PhaseResult::final_state)
        .def_readonly("extracted_phase", &PhaseResult::extracted_phase)
        .def_readonly("transcript", &PhaseResult::transcript);

    py::class_<OptimalityReport>(m, "OptimalityReport")
        .def_readonly("eigen_residual", &OptimalityReport::eigen_residual)
        .def_readonly("witness_row", &OptimalityReport::witness_row)
        .def_readonly("witness_col", &OptimalityReport::witness_col)
        .def_readonly("contradiction_distance", &OptimalityReport::contradiction_distance)
        .def("passes", &OptimalityReport::pass, py::arg("tol") = kClosedFormTol);

    m.def("j_phase", &j_phase, py::arg("psi"), py::arg("k"), py::arg("z"), py::arg("variant"));
    m.def("j_phase_matrix", &j_phase_matrix, py::arg("m_dim"), py::arg("k"), py::arg("z"),
          py::arg("variant"));
    m.def("j_phase_negated_matrices", &j_phase_negated_matrices, py::arg("m_dim"), py::arg("k"),
          py::arg("z"));
    m.def("f_phase_uninitialized", &f_phase_uninitialized, py::arg("control"), py::arg("ancilla"),
          py::arg("f"), py::arg("k"));
    m.def("f_phase_uninitialized_entangled", &f_phase_uninitialized_entangled, py::arg("control"),
          py::arg("ancilla_env"), py::arg("f"), py::arg("k"));
    m.def("prepare_eigenstate", &prepare_eigenstate, py::arg("m_dim"), py::arg("k"));
    m.def("f_phase_initialized", &f_phase_initialized, py::arg("control"), py::arg("f"),
          py::arg("k"));
    m.def("reference_phase", &reference_phase, py::arg("f"), py::arg("k"));
    m.def("reference_phase_diagonal", &reference_phase_diagonal, py::arg("f"), py::arg("k"));
    m.def("optimality_witness", &optimality_witness, py::arg("m_dim"), py::arg("k"), py::arg("z1"),
          py::arg("z2"));

    // ---- gdj ----
    py::enum_<KickbackMode>(m, "KickbackMode")
        .value("Initialized", KickbackMode::Initialized)
        .value("Uninitialized", KickbackMode::Uninitialized);

    py::enum_<RecoveryMode>(m, "RecoveryMode")
        .value("Deterministic", RecoveryMode::Deterministic)
        .value("Sampled", RecoveryMode::Sampled);

    py::class_<GdjReport>(m, "GdjReport")
        .def_readonly("distribution", &GdjReport::distribution)
        .def_readonly("classification", &GdjReport::classification)
        .def_readonly("oracle_calls", &GdjReport::oracle_calls)
        .def_readonly("k_used", &GdjReport::k_used)
        .def_readonly("recovered", &GdjReport::recovered);

    m.def("gdj_run", &gdj_run, py::arg("f"), py::arg("k"), py::arg("mode"), py::arg("seed") = 0);
    m.def("brute_sum_s", &brute_sum_s, py::arg("f"), py::arg("k"), py::arg("y"));
    m.def("parity_dot", &parity_dot, py::arg("x"), py::arg("y"));
    m.def("recover_structure", &recover_structure, py::arg("f"), py::arg("mode"),
          py::arg("seed") = 0);

    // ---- verify ----
    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("max_residual", &CheckResult::max_residual)
        .def_readonly("threshold", &CheckResult::threshold)
        .def_readonly("passed", &CheckResult::pass);

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("checks", &VerifyReport::checks)
        .def("all_pass", &VerifyReport::all_pass);

    m.def(
        "run_verification",
        [](std::size_t max_dim, double tol, std::uint64_t seed) {
            return run_verification({max_dim, tol, seed, false});
        },
        py::arg("max_dim") = 16, py::arg("tol") = 1e-10, py::arg("seed") = 0);
}
