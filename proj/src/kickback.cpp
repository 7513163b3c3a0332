#include "phasekick/kickback.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace phasekick {

namespace {

std::optional<cplx> proportional_phase(const PureState& initial, const PureState& final_state,
                                       double tol) {
    const cplx p = inner_product(initial, final_state);
    if (std::abs(p) < 0.5) return std::nullopt;
    double residual = 0.0;
    for (std::size_t i = 0; i < initial.amplitudes.size(); ++i)
        residual = std::max(residual,
                            std::abs(final_state.amplitudes[i] - p * initial.amplitudes[i]));
    if (residual >= tol) return std::nullopt;
    return p;
}

// Gate sequence of one variant in time order (first applied first).
std::vector<UnitaryMatrix> variant_sequence(std::size_t m_dim, std::int64_t k, std::int64_t z,
                                            Variant variant) {
    switch (variant) {
        case Variant::Rtrt:
            return {translation(m_dim, z), r_phase(m_dim, k), translation(m_dim, -z),
                    r_phase(m_dim, -k)};
        case Variant::Cyclic1:
            return {r_phase(m_dim, k), translation(m_dim, -z), r_phase(m_dim, -k),
                    translation(m_dim, z)};
        case Variant::Cyclic2:
            return {translation(m_dim, -z), r_phase(m_dim, -k), translation(m_dim, z),
                    r_phase(m_dim, k)};
        case Variant::Cyclic3:
            return {r_phase(m_dim, -k), translation(m_dim, z), r_phase(m_dim, k),
                    translation(m_dim, -z)};
        case Variant::SForm:
            return {translation(m_dim, z), s_gate(m_dim, k), translation(m_dim, z),
                    s_gate(m_dim, k)};
    }
    throw std::invalid_argument("unknown variant");
}

}  // namespace

std::string_view variant_name(Variant v) {
    switch (v) {
        case Variant::Rtrt: return "rtrt";
        case Variant::Cyclic1: return "cyclic-1";
        case Variant::Cyclic2: return "cyclic-2";
        case Variant::Cyclic3: return "cyclic-3";
        case Variant::SForm: return "s-form";
    }
    return "unknown";
}

std::optional<Variant> variant_from_name(std::string_view name) {
    for (Variant v : kAllVariants)
        if (variant_name(v) == name) return v;
    return std::nullopt;
}

PhaseResult j_phase(const PureState& psi, std::int64_t k, std::int64_t z, Variant variant) {
    if (psi.shape.num_registers() != 1)
        throw std::invalid_argument("j_phase: expected a single register");
    const std::size_t m_dim = psi.shape.dims[0];
    PureState cur = psi;
    for (const UnitaryMatrix& g : variant_sequence(m_dim, k, z, variant)) cur = apply(g, cur, 0);
    PhaseResult out{std::move(cur), std::nullopt, {}};
    out.extracted_phase = proportional_phase(psi, out.final_state, kAmplitudeTol);
    return out;
}

UnitaryMatrix j_phase_matrix(std::size_t m_dim, std::int64_t k, std::int64_t z, Variant variant) {
    switch (variant) {
        case Variant::Rtrt:  // [R^-1, T^-1]
            return commutator(r_phase(m_dim, -k), translation(m_dim, -z));
        case Variant::Cyclic1:  // [T, R^-1]
            return commutator(translation(m_dim, z), r_phase(m_dim, -k));
        case Variant::Cyclic2:  // [R, T]
            return commutator(r_phase(m_dim, k), translation(m_dim, z));
        case Variant::Cyclic3:  // [T^-1, R]
            return commutator(translation(m_dim, -z), r_phase(m_dim, k));
        case Variant::SForm: {
            // Built from s_gate products, not rewritten algebraically.
            const UnitaryMatrix s = s_gate(m_dim, k);
            const UnitaryMatrix t = translation(m_dim, z);
            return s * t * s * t;
        }
    }
    throw std::invalid_argument("unknown variant");
}

std::array<UnitaryMatrix, 4> j_phase_negated_matrices(std::size_t m_dim, std::int64_t k,
                                                      std::int64_t z) {
    return {
        commutator(r_phase(m_dim, k), translation(m_dim, -z)),   // [R, T^-1]
        commutator(translation(m_dim, z), r_phase(m_dim, k)),    // [T, R]
        commutator(r_phase(m_dim, -k), translation(m_dim, z)),   // [R^-1, T]
        commutator(translation(m_dim, -z), r_phase(m_dim, -k)),  // [T^-1, R^-1]
    };
}

namespace {

// Shared pipeline of the uninitialized transform; `joint` carries (N, M) or
// (N, M, E, ...) with the ancilla in register 1.
PhaseResult run_uninitialized(PureState joint, const FunctionTable& f, std::int64_t k) {
    const PureState initial = joint;
    const std::size_t m_dim = f.range_size();
    OracleTranscript transcript;
    joint = apply_uf(joint, f, OracleDirection::Forward, transcript);
    joint = apply(r_phase(m_dim, k), joint, 1);
    joint = apply_uf(joint, f, OracleDirection::Inverse, transcript);
    joint = apply(r_phase(m_dim, -k), joint, 1);
    PhaseResult out{std::move(joint), std::nullopt, std::move(transcript)};
    out.extracted_phase = proportional_phase(initial, out.final_state, kAmplitudeTol);
    return out;
}

}  // namespace

PhaseResult f_phase_uninitialized(const PureState& control, const PureState& ancilla,
                                  const FunctionTable& f, std::int64_t k) {
    if (control.shape.num_registers() != 1 || control.shape.dims[0] != f.domain_size())
        throw std::invalid_argument("f_phase_uninitialized: control register must have dim 2^n");
    if (ancilla.shape.num_registers() != 1 || ancilla.shape.dims[0] != f.range_size())
        throw std::invalid_argument("f_phase_uninitialized: ancilla register must have dim 2^m");
    return run_uninitialized(tensor(control, ancilla), f, k);
}

PhaseResult f_phase_uninitialized_entangled(const PureState& control, const PureState& ancilla_env,
                                            const FunctionTable& f, std::int64_t k) {
    if (control.shape.num_registers() != 1 || control.shape.dims[0] != f.domain_size())
        throw std::invalid_argument("f_phase_uninitialized_entangled: bad control register");
    if (ancilla_env.shape.num_registers() < 2 || ancilla_env.shape.dims[0] != f.range_size())
        throw std::invalid_argument(
            "f_phase_uninitialized_entangled: ancilla-environment state must span (M, E)");
    return run_uninitialized(tensor(control, ancilla_env), f, k);
}

PureState prepare_eigenstate(std::size_t m_dim, std::int64_t k) {
    PureState zero = basis_state(RegisterShape({m_dim}), 0);
    return apply(qft(m_dim), apply(translation(m_dim, -k), zero, 0), 0);
}

PhaseResult f_phase_initialized(const PureState& control, const FunctionTable& f, std::int64_t k) {
    if (control.shape.num_registers() != 1 || control.shape.dims[0] != f.domain_size())
        throw std::invalid_argument("f_phase_initialized: control register must have dim 2^n");
    PureState joint = tensor(control, prepare_eigenstate(f.range_size(), k));
    const PureState initial = joint;
    OracleTranscript transcript;
    joint = apply_uf(joint, f, OracleDirection::Forward, transcript);
    PhaseResult out{std::move(joint), std::nullopt, std::move(transcript)};
    out.extracted_phase = proportional_phase(initial, out.final_state, kAmplitudeTol);
    return out;
}

UnitaryMatrix reference_phase(const FunctionTable& f, std::int64_t k) {
    const std::size_t n_dim = f.domain_size();
    UnitaryMatrix out(n_dim);
    const auto diag = reference_phase_diagonal(f, k);
    for (std::size_t x = 0; x < n_dim; ++x) out.at(x, x) = diag[x];
    return out;
}

std::vector<cplx> reference_phase_diagonal(const FunctionTable& f, std::int64_t k) {
    std::vector<cplx> diag(f.domain_size());
    for (std::size_t x = 0; x < diag.size(); ++x)
        diag[x] = root_of_unity(f.range_size(), k * static_cast<std::int64_t>(f.values[x]));
    return diag;
}

OptimalityReport optimality_witness(std::size_t m_dim, std::int64_t k, std::int64_t z1,
                                    std::int64_t z2) {
    if (m_dim < 2) throw std::invalid_argument("optimality_witness: M must be >= 2");
    if (reduce_mod(z1, m_dim) == reduce_mod(z2, m_dim))
        throw std::invalid_argument("optimality_witness: z1 and z2 must differ mod M");

    OptimalityReport report;
    for (std::int64_t z : {z1, z2}) {
        const UnitaryMatrix v =
            root_of_unity(m_dim, k * z) * translation(m_dim, -z);
        const UnitaryMatrix expected =
            UnitaryMatrix::scaled_identity(m_dim, root_of_unity(m_dim, k * z));
        report.eigen_residual =
            std::max(report.eigen_residual, max_abs_diff(v * translation(m_dim, z), expected));
    }

    // If one V served both shifts, T_{z1-z2} would equal omega^{k(z1-z2)} I;
    // a shift with no fixed point cannot, and some entry is off by >= 1.
    const std::int64_t diff = z1 - z2;
    const UnitaryMatrix t_diff = translation(m_dim, diff);
    const UnitaryMatrix scaled =
        UnitaryMatrix::scaled_identity(m_dim, root_of_unity(m_dim, k * diff));
    for (std::size_t r = 0; r < m_dim && report.contradiction_distance < 1.0; ++r) {
        for (std::size_t c = 0; c < m_dim; ++c) {
            const double dist = std::abs(t_diff.at(r, c) - scaled.at(r, c));
            if (dist >= 1.0) {
                report.witness_row = r;
                report.witness_col = c;
                report.contradiction_distance = dist;
                break;
            }
        }
    }
    return report;
}

}  // namespace phasekick
