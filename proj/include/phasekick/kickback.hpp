#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "phasekick/oracle.hpp"
#include "phasekick/registers.hpp"

namespace phasekick {

/// The five equivalent operator orderings realizing the ancilla phase
/// J_{k,z} = omega_M^{kz} I: the base word R^{-1} T^{-1} R T, its three
/// cyclic rotations, and the S T S T form.
enum class Variant { Rtrt, Cyclic1, Cyclic2, Cyclic3, SForm };

inline constexpr std::array<Variant, 5> kAllVariants = {
    Variant::Rtrt, Variant::Cyclic1, Variant::Cyclic2, Variant::Cyclic3, Variant::SForm};

std::string_view variant_name(Variant v);
std::optional<Variant> variant_from_name(std::string_view name);

struct PhaseResult {
    PureState final_state;
    /// <initial|final>, engaged only after confirming final = phase * initial
    /// per amplitude; unit modulus whenever present.
    std::optional<cplx> extracted_phase;
    OracleTranscript transcript;
};

/// Runs the four-step procedure for J_{k,z} on a single dim-M register.
/// Every variant sends psi to omega_M^{kz} psi, whatever psi was.
PhaseResult j_phase(const PureState& psi, std::int64_t k, std::int64_t z, Variant variant);

/// The composed operator of one variant, built from commutator() for the four
/// commutator forms and from s_gate products for the S form.
UnitaryMatrix j_phase_matrix(std::size_t m_dim, std::int64_t k, std::int64_t z, Variant variant);

/// The four sign-flipped commutators [R,T^-1], [T,R], [R^-1,T], [T^-1,R^-1],
/// each equal to omega_M^{-kz} I.
std::array<UnitaryMatrix, 4> j_phase_negated_matrices(std::size_t m_dim, std::int64_t k,
                                                      std::int64_t z);

/// Two-register f-conditioned phase transform with an arbitrary,
/// never-initialized ancilla: U_f, R_{k,I}, U_{-f}, R_{k,I}^{-1}. The joint
/// result factors as (phased control) x (ancilla exactly as it came in), at
/// the price of one forward and one inverse oracle call.
PhaseResult f_phase_uninitialized(const PureState& control, const PureState& ancilla,
                                  const FunctionTable& f, std::int64_t k);

/// Same transform when the ancilla register is entangled with an environment
/// register the algorithm never touches; ancilla_env spans registers (M, E).
PhaseResult f_phase_uninitialized_entangled(const PureState& control, const PureState& ancilla_env,
                                            const FunctionTable& f, std::int64_t k);

/// QFT T_{-k} |0>: a simultaneous eigenvector of every translation T_z, with
/// eigenvalue omega_M^{kz}.
PureState prepare_eigenstate(std::size_t m_dim, std::int64_t k);

/// One-call variant: the ancilla is prepared in the translation eigenstate, so
/// a single U_f kicks the whole phase back to the control register.
PhaseResult f_phase_initialized(const PureState& control, const FunctionTable& f, std::int64_t k);

/// The trusted diagonal R_{k,f}: entry (x,x) = omega_M^{k f(x)}. Every
/// algorithm path is compared against this.
UnitaryMatrix reference_phase(const FunctionTable& f, std::int64_t k);

/// Diagonal of reference_phase without materializing the matrix.
std::vector<cplx> reference_phase_diagonal(const FunctionTable& f, std::int64_t k);

/// Certifies the two-call lower bound: (i) V = omega^{kz} T_{-z} undoes T_z up
/// to the desired phase, and (ii) no single V can serve two shifts, witnessed
/// by an entry where T_{z1-z2} and omega^{k(z1-z2)} I differ by at least 1.
struct OptimalityReport {
    double eigen_residual = 0.0;          // part (i), max over z1 and z2
    std::size_t witness_row = 0;          // part (ii) witness entry
    std::size_t witness_col = 0;
    double contradiction_distance = 0.0;  // >= 1 when the argument holds

    bool pass(double tol = kClosedFormTol) const {
        return eigen_residual < tol && contradiction_distance >= 1.0;
    }
};

OptimalityReport optimality_witness(std::size_t m_dim, std::int64_t k, std::int64_t z1,
                                    std::int64_t z2);

}  // namespace phasekick
