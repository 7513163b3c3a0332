#include "phasekick/verify.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "phasekick/gdj.hpp"
#include "phasekick/kickback.hpp"
#include "phasekick/rng.hpp"

namespace phasekick {

namespace {

std::vector<std::size_t> swept_dims(std::size_t max_dim) {
    std::vector<std::size_t> dims;
    for (std::size_t m = 2; m <= max_dim && m <= 16; m <<= 1) dims.push_back(m);
    return dims;
}

CheckResult gate_unitarity(const VerifyOptions& opt) {
    double worst = 0.0;
    for (std::size_t m : swept_dims(opt.max_dim)) {
        worst = std::max(worst, unitarity_residual(qft(m)));
        worst = std::max(worst, unitarity_residual(qft_inv(m)));
        worst = std::max(worst, unitarity_residual(walsh(std::countr_zero(m))));
        for (std::size_t kz = 0; kz < m; ++kz) {
            const auto e = static_cast<std::int64_t>(kz);
            worst = std::max(worst, unitarity_residual(translation(m, e)));
            worst = std::max(worst, unitarity_residual(r_phase(m, e)));
            worst = std::max(worst, unitarity_residual(s_gate(m, e)));
        }
    }
    return {"gate-unitarity", worst, opt.tol, worst < opt.tol};
}

CheckResult commutator_identities(const VerifyOptions& opt) {
    double worst = 0.0;
    for (std::size_t m : swept_dims(opt.max_dim))
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t z = 0; z < m; ++z) {
                const auto expected = UnitaryMatrix::scaled_identity(
                    m, root_of_unity(m, static_cast<std::int64_t>(k * z)));
                for (Variant v : kAllVariants)
                    worst = std::max(
                        worst, max_abs_diff(j_phase_matrix(m, static_cast<std::int64_t>(k),
                                                           static_cast<std::int64_t>(z), v),
                                            expected));
            }
    return {"commutator-identities", worst, opt.tol, worst < opt.tol};
}

CheckResult negated_commutators(const VerifyOptions& opt) {
    double worst = 0.0;
    for (std::size_t m : swept_dims(opt.max_dim))
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t z = 0; z < m; ++z) {
                const auto expected = UnitaryMatrix::scaled_identity(
                    m, root_of_unity(m, -static_cast<std::int64_t>(k * z)));
                for (const UnitaryMatrix& u :
                     j_phase_negated_matrices(m, static_cast<std::int64_t>(k),
                                              static_cast<std::int64_t>(z)))
                    worst = std::max(worst, max_abs_diff(u, expected));
            }
    return {"negated-commutators", worst, opt.tol, worst < opt.tol};
}

CheckResult s_form_identity(const VerifyOptions& opt) {
    double worst = 0.0;
    for (std::size_t m : swept_dims(opt.max_dim))
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t z = 0; z < m; ++z) {
                const auto kk = static_cast<std::int64_t>(k);
                const auto zz = static_cast<std::int64_t>(z);
                UnitaryMatrix s = s_gate(m, kk);
                const UnitaryMatrix t = translation(m, zz);
                UnitaryMatrix first = s;
                if (opt.inject_sform_sign_error) first = cplx{-1.0, 0.0} * first;
                const UnitaryMatrix s_form = first * t * s * t;
                worst = std::max(worst, max_abs_diff(s_form, j_phase_matrix(m, kk, zz, Variant::Rtrt)));
            }
    return {"s-form-identity", worst, opt.tol, worst < opt.tol};
}

CheckResult r_phase_closed_form(const VerifyOptions& opt) {
    double worst = 0.0;
    for (std::size_t m : swept_dims(opt.max_dim))
        for (std::size_t k = 0; k < m; ++k) {
            const UnitaryMatrix composed = r_phase(m, static_cast<std::int64_t>(k));
            UnitaryMatrix closed(m);
            for (std::size_t y = 0; y < m; ++y)
                closed.at(y, y) = root_of_unity(m, static_cast<std::int64_t>(k * y));
            worst = std::max(worst, max_abs_diff(composed, closed));
        }
    return {"r-phase-closed-form", worst, 1e-12, worst < 1e-12};
}

CheckResult ancilla_restoration(const VerifyOptions& opt) {
    double worst = 0.0;
    bool budget_ok = true;
    std::uint64_t stream = 0;
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t m = 1; m <= 3; ++m) {
            const std::size_t n_dim = std::size_t{1} << n;
            const std::size_t m_dim = std::size_t{1} << m;
            if (m_dim > opt.max_dim) continue;
            for (std::size_t trial = 0; trial < 20; ++trial) {
                const PureState control =
                    random_state(RegisterShape({n_dim}), derive_seed(opt.seed, stream++));
                const PureState ancilla =
                    random_state(RegisterShape({m_dim}), derive_seed(opt.seed, stream++));
                std::vector<std::size_t> vals(n_dim);
                SeededRng rng(derive_seed(opt.seed, stream++));
                for (auto& v : vals) v = rng.below(m_dim);
                const FunctionTable f(n, m, vals);
                for (std::size_t k = 1; k < m_dim; ++k) {
                    const PhaseResult res =
                        f_phase_uninitialized(control, ancilla, f, static_cast<std::int64_t>(k));
                    PureState expected_control = control;
                    const auto diag = reference_phase_diagonal(f, static_cast<std::int64_t>(k));
                    for (std::size_t x = 0; x < n_dim; ++x) expected_control.amplitudes[x] *= diag[x];
                    worst = std::max(worst, max_amplitude_diff(res.final_state,
                                                               tensor(expected_control, ancilla)));
                    budget_ok = budget_ok && res.transcript.forward_calls == 1 &&
                                res.transcript.inverse_calls == 1;
                }
            }
        }
    if (!budget_ok) worst = std::max(worst, 1.0);
    return {"ancilla-restoration", worst, opt.tol, worst < opt.tol && budget_ok};
}

CheckResult entanglement_safety(const VerifyOptions& opt) {
    double worst = 0.0;
    std::uint64_t stream = 1000;
    // Maximally entangled (ancilla, environment) pair at M = E = 2.
    PureState pair{RegisterShape({2, 2}), std::vector<cplx>(4)};
    pair.amplitudes[0] = pair.amplitudes[3] = 1.0 / std::sqrt(2.0);
    for (std::size_t n = 1; n <= 3; ++n) {
        const std::size_t n_dim = std::size_t{1} << n;
        for (std::size_t trial = 0; trial < 20; ++trial) {
            const PureState control =
                random_state(RegisterShape({n_dim}), derive_seed(opt.seed, stream++));
            std::vector<std::size_t> vals(n_dim);
            SeededRng rng(derive_seed(opt.seed, stream++));
            for (auto& v : vals) v = rng.below(2);
            const FunctionTable f(n, 1, vals);
            const PhaseResult res = f_phase_uninitialized_entangled(control, pair, f, 1);
            PureState expected_control = control;
            const auto diag = reference_phase_diagonal(f, 1);
            for (std::size_t x = 0; x < n_dim; ++x) expected_control.amplitudes[x] *= diag[x];
            worst = std::max(worst,
                             max_amplitude_diff(res.final_state, tensor(expected_control, pair)));
        }
    }
    return {"entanglement-safety", worst, opt.tol, worst < opt.tol};
}

CheckResult eigenstate_kickback(const VerifyOptions& opt) {
    double worst = 0.0;
    for (std::size_t m : swept_dims(opt.max_dim))
        for (std::size_t k = 0; k < m; ++k) {
            const PureState psi = prepare_eigenstate(m, static_cast<std::int64_t>(k));
            for (std::size_t z = 0; z < m; ++z) {
                const PureState shifted = apply(translation(m, static_cast<std::int64_t>(z)), psi, 0);
                PureState expected = psi;
                const cplx phase = root_of_unity(m, static_cast<std::int64_t>(k * z));
                for (cplx& amp : expected.amplitudes) amp *= phase;
                worst = std::max(worst, max_amplitude_diff(shifted, expected));
            }
        }
    return {"eigenstate-kickback", worst, opt.tol, worst < opt.tol};
}

CheckResult one_call_budget(const VerifyOptions& opt) {
    double worst = 0.0;
    bool budget_ok = true;
    std::uint64_t stream = 2000;
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t m = 1; m <= 3; ++m) {
            const std::size_t n_dim = std::size_t{1} << n;
            const std::size_t m_dim = std::size_t{1} << m;
            if (m_dim > opt.max_dim) continue;
            const PureState control =
                random_state(RegisterShape({n_dim}), derive_seed(opt.seed, stream++));
            std::vector<std::size_t> vals(n_dim);
            SeededRng rng(derive_seed(opt.seed, stream++));
            for (auto& v : vals) v = rng.below(m_dim);
            const FunctionTable f(n, m, vals);
            for (std::size_t k = 1; k < m_dim; ++k) {
                const PhaseResult res = f_phase_initialized(control, f, static_cast<std::int64_t>(k));
                PureState expected_control = control;
                const auto diag = reference_phase_diagonal(f, static_cast<std::int64_t>(k));
                for (std::size_t x = 0; x < n_dim; ++x) expected_control.amplitudes[x] *= diag[x];
                const PureState expected =
                    tensor(expected_control, prepare_eigenstate(m_dim, static_cast<std::int64_t>(k)));
                worst = std::max(worst, max_amplitude_diff(res.final_state, expected));
                budget_ok = budget_ok && res.transcript.forward_calls == 1 &&
                            res.transcript.inverse_calls == 0;
            }
        }
    if (!budget_ok) worst = std::max(worst, 1.0);
    return {"one-call-variant", worst, opt.tol, worst < opt.tol && budget_ok};
}

CheckResult optimality(const VerifyOptions& opt) {
    double worst = 0.0;
    bool contradiction_ok = true;
    for (std::size_t m : swept_dims(opt.max_dim))
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t z1 = 0; z1 < m; ++z1)
                for (std::size_t z2 = 0; z2 < m; ++z2) {
                    if (z1 == z2) continue;
                    const OptimalityReport r =
                        optimality_witness(m, static_cast<std::int64_t>(k),
                                           static_cast<std::int64_t>(z1),
                                           static_cast<std::int64_t>(z2));
                    worst = std::max(worst, r.eigen_residual);
                    contradiction_ok = contradiction_ok && r.contradiction_distance >= 1.0;
                }
    if (!contradiction_ok) worst = std::max(worst, 1.0);
    return {"optimality-witness", worst, 1e-12, worst < 1e-12 && contradiction_ok};
}

CheckResult phase_error_bound(const VerifyOptions& opt) {
    // Residual is the worst angle-error over its bound 2*pi*k*2^-m; must stay
    // below 1. Also pins the discretize route to the g-of-f composition route.
    double worst_ratio = 0.0;
    bool routes_agree = true;
    std::uint64_t stream = 3000;
    for (std::size_t trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const std::size_t n_dim = std::size_t{1} << n;
        SeededRng rng(derive_seed(opt.seed, stream++));
        std::vector<double> vals(n_dim);
        for (double& v : vals) v = rng.uniform01();
        const RealFunctionTable f(n, vals);

        std::vector<std::size_t> ident(n_dim);
        for (std::size_t x = 0; x < n_dim; ++x) ident[x] = x;
        const FunctionTable identity_table(n, n, ident);

        for (std::size_t m = 1; m <= 8; ++m) {
            const FunctionTable approx = discretize(f, m);
            routes_agree =
                routes_agree && approx.values == compose_g_of_f(f, identity_table, m).values;
            const double m_dim = static_cast<double>(std::size_t{1} << m);
            for (std::size_t k = 1; k <= 4; ++k) {
                const double bound = 2.0 * std::numbers::pi * static_cast<double>(k) / m_dim;
                for (std::size_t x = 0; x < n_dim; ++x) {
                    const double err = 2.0 * std::numbers::pi * static_cast<double>(k) *
                                       std::abs(static_cast<double>(approx.values[x]) / m_dim -
                                                f.values[x]);
                    worst_ratio = std::max(worst_ratio, err / bound);
                }
            }
        }
    }
    if (!routes_agree) worst_ratio = std::max(worst_ratio, 2.0);
    return {"phase-error-bound", worst_ratio, 1.0, worst_ratio < 1.0 && routes_agree};
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
    VerifyReport report;
    report.checks.push_back(gate_unitarity(options));
    report.checks.push_back(r_phase_closed_form(options));
    report.checks.push_back(commutator_identities(options));
    report.checks.push_back(negated_commutators(options));
    report.checks.push_back(s_form_identity(options));
    report.checks.push_back(ancilla_restoration(options));
    report.checks.push_back(entanglement_safety(options));
    report.checks.push_back(eigenstate_kickback(options));
    report.checks.push_back(one_call_budget(options));
    report.checks.push_back(optimality(options));
    report.checks.push_back(phase_error_bound(options));
    return report;
}

}  // namespace phasekick
