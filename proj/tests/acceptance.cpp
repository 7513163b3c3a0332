// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance is pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "phasekick/gdj.hpp"
#include "phasekick/kickback.hpp"
#include "phasekick/rng.hpp"
#include "phasekick/verify.hpp"

using namespace phasekick;

namespace {

struct Outcome {
    bool pass = true;
    double residual = 0.0;
    std::string note;

    void residual_check(double r, double bound) {
        residual = std::max(residual, r);
        if (r >= bound) pass = false;
    }
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (note.empty()) note = what;
        }
    }
};

FunctionTable random_table(std::size_t n, std::size_t m, std::uint64_t seed) {
    SeededRng rng(seed);
    std::vector<std::size_t> vals(std::size_t{1} << n);
    for (auto& v : vals) v = rng.below(std::size_t{1} << m);
    return {n, m, std::move(vals)};
}

PureState phased_by_reference(const PureState& control, const FunctionTable& f, std::int64_t k) {
    PureState out = control;
    const auto diag = reference_phase_diagonal(f, k);
    for (std::size_t x = 0; x < out.amplitudes.size(); ++x) out.amplitudes[x] *= diag[x];
    return out;
}

// 1. All five variant matrices equal omega^{kz} I, the negated family
//    omega^{-kz} I, for every M in {2,4,8,16} and every k, z.
Outcome commutator_identity_sweep() {
    Outcome out;
    for (std::size_t m : {2, 4, 8, 16})
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t z = 0; z < m; ++z) {
                const auto kk = static_cast<std::int64_t>(k);
                const auto zz = static_cast<std::int64_t>(z);
                const auto plus = UnitaryMatrix::scaled_identity(
                    m, root_of_unity(m, static_cast<std::int64_t>(k * z)));
                const auto minus = UnitaryMatrix::scaled_identity(
                    m, root_of_unity(m, -static_cast<std::int64_t>(k * z)));
                for (Variant v : kAllVariants)
                    out.residual_check(max_abs_diff(j_phase_matrix(m, kk, zz, v), plus), 1e-10);
                for (const UnitaryMatrix& u : j_phase_negated_matrices(m, kk, zz))
                    out.residual_check(max_abs_diff(u, minus), 1e-10);
            }
    return out;
}

// 2. Uninitialized transform: 100 seeded triples per (n, m) in {1,2,3}^2, all
//    k in {1..M-1}; joint final state matches the reference product within
//    1e-10 and the transcript is exactly one forward plus one inverse call.
Outcome uninitialized_transform() {
    Outcome out;
    std::uint64_t stream = 0;
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t m = 1; m <= 3; ++m) {
            const std::size_t n_dim = std::size_t{1} << n;
            const std::size_t m_dim = std::size_t{1} << m;
            for (int trial = 0; trial < 100; ++trial) {
                const PureState control = random_state(RegisterShape({n_dim}),
                                                       derive_seed(11, stream++));
                const PureState ancilla = random_state(RegisterShape({m_dim}),
                                                       derive_seed(11, stream++));
                const FunctionTable f = random_table(n, m, derive_seed(11, stream++));
                for (std::size_t k = 1; k < m_dim; ++k) {
                    const PhaseResult r =
                        f_phase_uninitialized(control, ancilla, f, static_cast<std::int64_t>(k));
                    const PureState expected =
                        tensor(phased_by_reference(control, f, static_cast<std::int64_t>(k)),
                               ancilla);
                    out.residual_check(max_amplitude_diff(r.final_state, expected), 1e-10);
                    out.require(r.transcript.forward_calls == 1 && r.transcript.inverse_calls == 1,
                                "call budget is not {1 forward, 1 inverse}");
                }
            }
        }
    return out;
}

// 3. Entangled ancilla safety at M = E = 2 with random f.
Outcome entangled_ancilla_safety() {
    Outcome out;
    PureState pair{RegisterShape({2, 2}), std::vector<cplx>(4)};
    pair.amplitudes[0] = pair.amplitudes[3] = 1.0 / std::sqrt(2.0);
    std::uint64_t stream = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
        const std::size_t n_dim = std::size_t{1} << n;
        for (int trial = 0; trial < 100; ++trial) {
            const PureState control = random_state(RegisterShape({n_dim}),
                                                   derive_seed(13, stream++));
            const FunctionTable f = random_table(n, 1, derive_seed(13, stream++));
            const PhaseResult r = f_phase_uninitialized_entangled(control, pair, f, 1);
            const PureState expected = tensor(phased_by_reference(control, f, 1), pair);
            out.residual_check(max_amplitude_diff(r.final_state, expected), 1e-10);
        }
    }
    return out;
}

// 4. One-call variant: eigenstate property for every (M, k, z), and the
//    initialized transform matches the reference with exactly one call.
Outcome one_call_variant() {
    Outcome out;
    for (std::size_t m : {2, 4, 8, 16})
        for (std::size_t k = 0; k < m; ++k) {
            const PureState eig = prepare_eigenstate(m, static_cast<std::int64_t>(k));
            for (std::size_t z = 0; z < m; ++z) {
                PureState expected = eig;
                const cplx eigenvalue = root_of_unity(m, static_cast<std::int64_t>(k * z));
                for (cplx& a : expected.amplitudes) a *= eigenvalue;
                out.residual_check(
                    max_amplitude_diff(apply(translation(m, static_cast<std::int64_t>(z)), eig, 0),
                                       expected),
                    1e-10);
            }
        }

    std::uint64_t stream = 0;
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t m = 1; m <= 3; ++m) {
            const std::size_t n_dim = std::size_t{1} << n;
            const std::size_t m_dim = std::size_t{1} << m;
            for (int trial = 0; trial < 100; ++trial) {
                const PureState control = random_state(RegisterShape({n_dim}),
                                                       derive_seed(17, stream++));
                const FunctionTable f = random_table(n, m, derive_seed(17, stream++));
                for (std::size_t k = 1; k < m_dim; ++k) {
                    const PhaseResult r =
                        f_phase_initialized(control, f, static_cast<std::int64_t>(k));
                    const PureState expected =
                        tensor(phased_by_reference(control, f, static_cast<std::int64_t>(k)),
                               prepare_eigenstate(m_dim, static_cast<std::int64_t>(k)));
                    out.residual_check(max_amplitude_diff(r.final_state, expected), 1e-10);
                    out.require(r.transcript.forward_calls == 1 && r.transcript.inverse_calls == 0,
                                "call budget is not {1 forward}");
                }
            }
        }
    return out;
}

// 5. GDJ exactness over every constant and every evenly distributed instance
//    with n, m <= 5, k = 1, both modes, plus the |S/N|^2 oracle for every y.
Outcome gdj_exactness() {
    Outcome out;
    std::uint64_t stream = 0;

    const auto check_instance = [&](const FunctionTable& f, Classification promised) {
        const std::size_t n_dim = f.domain_size();
        for (KickbackMode mode : {KickbackMode::Initialized, KickbackMode::Uninitialized}) {
            const GdjReport r = gdj_run(f, 1, mode, derive_seed(19, stream++));
            out.require(r.classification == promised, "misclassified instance");
            if (promised == Classification::Constant)
                out.residual_check(std::abs(r.distribution[0] - 1.0), 1e-10);
            else
                out.residual_check(std::abs(r.distribution[0]), 1e-10);
            out.require(r.oracle_calls == (mode == KickbackMode::Initialized ? 1u : 2u),
                        "oracle call count off");
            for (std::size_t y = 0; y < n_dim; ++y) {
                const double expected =
                    std::norm(brute_sum_s(f, 1, y)) / static_cast<double>(n_dim * n_dim);
                out.residual_check(std::abs(r.distribution[y] - expected), 1e-10);
            }
        }
    };

    for (std::size_t n = 1; n <= 5; ++n)
        for (std::size_t m = 1; m <= 5; ++m) {
            const std::size_t n_dim = std::size_t{1} << n;
            const std::size_t m_dim = std::size_t{1} << m;
            for (std::size_t c = 0; c < m_dim; ++c)
                check_instance(make_constant(n, m, c), Classification::Constant);
            for (std::size_t d = 2; d <= std::min(n_dim, m_dim); d <<= 1)
                for (std::size_t a = 0; a < m_dim / d; ++a)
                    for (std::uint64_t seed = 0; seed < 5; ++seed)
                        check_instance(
                            make_evenly_distributed(n, m, d, a, derive_seed(23, stream++ + seed))
                                .first,
                            Classification::EvenlyDistributed);
        }
    return out;
}

// 6. Structure recovery: exact deterministic recovery on every instance with
//    m <= 6; sampled mode succeeds on at least 99% of 1000 seeded trials.
Outcome structure_recovery() {
    Outcome out;
    const std::size_t n = 6;
    std::uint64_t stream = 0;
    for (std::size_t m = 1; m <= 6; ++m) {
        const std::size_t m_dim = std::size_t{1} << m;
        for (std::size_t d = 2; d <= m_dim && d <= 64; d <<= 1)
            for (std::size_t a = 0; a < m_dim / d; ++a)
                for (std::uint64_t seed = 0; seed < 2; ++seed) {
                    const auto [f, params] =
                        make_evenly_distributed(n, m, d, a, derive_seed(29, stream++));
                    const StructureParams rec = recover_structure(f, RecoveryMode::Deterministic);
                    out.require(rec.d == params.d && rec.l == params.l && rec.a == params.a,
                                "deterministic recovery mismatch");
                }
    }

    std::size_t successes = 0;
    for (std::uint64_t trial = 0; trial < 1000; ++trial) {
        const std::size_t m = 1 + trial % 6;
        const std::size_t m_dim = std::size_t{1} << m;
        std::size_t d = 2;
        for (std::size_t steps = trial / 6 % m; steps > 0 && d < m_dim; --steps) d <<= 1;
        const std::size_t a = trial % (m_dim / d);
        const auto [f, params] = make_evenly_distributed(n, m, d, a, derive_seed(31, trial));
        try {
            const StructureParams rec =
                recover_structure(f, RecoveryMode::Sampled, derive_seed(37, trial));
            if (rec.d == params.d && rec.l == params.l && rec.a == params.a) ++successes;
        } catch (const promise_violation&) {
            // a gcd overshoot in the sampled draw counts as a failed trial
        }
    }
    out.require(successes >= 990, "sampled recovery succeeded on " + std::to_string(successes) +
                                      "/1000 trials");
    out.note = std::to_string(successes) + "/1000 sampled trials";
    return out;
}

// 7. Classical baselines: exact worst-case query counts on adversarial-order
//    instances for N in {4, 8, 16, 32}.
Outcome classical_baselines() {
    Outcome out;
    const std::size_t m = 5;  // M = 32 admits every D swept below
    for (std::size_t n : {2, 3, 4, 5}) {
        const std::size_t n_dim = std::size_t{1} << n;
        const FunctionTable constant = make_constant(n, m, 7);
        out.require(classify_classically(constant).queries == n_dim / 2 + 1,
                    "constant, D unknown: wrong count");
        out.require(classify_classically(constant).label == Classification::Constant,
                    "constant misclassified");
        for (std::size_t d = 2; d <= n_dim; d <<= 1) {
            out.require(classify_classically(constant, d).queries == n_dim / d + 1,
                        "constant, D known: wrong count");
            // adversarial evenly distributed run meets the same bound exactly
            const auto [f, params] = make_evenly_distributed(n, m, d, 0, n * 100 + d, true);
            const ClassifyResult r = classify_classically(f, d);
            out.require(r.label == Classification::EvenlyDistributed,
                        "adversarial instance misclassified");
            out.require(r.queries == n_dim / d + 1, "adversarial instance: bound not met exactly");
        }
    }
    return out;
}

// 8. Optimality witness for every M in {2,4,8,16}, k in Z_M, z1 != z2.
Outcome optimality() {
    Outcome out;
    for (std::size_t m : {2, 4, 8, 16})
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t z1 = 0; z1 < m; ++z1)
                for (std::size_t z2 = 0; z2 < m; ++z2) {
                    if (z1 == z2) continue;
                    const OptimalityReport r =
                        optimality_witness(m, static_cast<std::int64_t>(k),
                                           static_cast<std::int64_t>(z1),
                                           static_cast<std::int64_t>(z2));
                    out.residual_check(r.eigen_residual, 1e-12);
                    out.require(r.contradiction_distance >= 1.0, "no contradiction witness");
                }
    return out;
}

// 9. Approximate transform: 100 seeded real tables, m in 1..8, k in 1..4:
//    phase-angle error below 2*pi*k*2^-m, and the discretize route equals the
//    g-of-f composition route table-for-table.
Outcome approximate_transform() {
    Outcome out;
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const std::size_t n_dim = std::size_t{1} << n;
        SeededRng rng(derive_seed(41, trial));
        std::vector<double> vals(n_dim);
        for (double& v : vals) v = rng.uniform01();
        const RealFunctionTable f(n, vals);

        std::vector<std::size_t> ident(n_dim);
        for (std::size_t x = 0; x < n_dim; ++x) ident[x] = x;
        const FunctionTable identity_table(n, n, ident);

        for (std::size_t m = 1; m <= 8; ++m) {
            const FunctionTable approx = discretize(f, m);
            out.require(approx.values == compose_g_of_f(f, identity_table, m).values,
                        "discretize and composition routes disagree");
            const double m_dim = static_cast<double>(std::size_t{1} << m);
            for (std::size_t k = 1; k <= 4; ++k) {
                const double bound = 2.0 * std::numbers::pi * static_cast<double>(k) / m_dim;
                for (std::size_t x = 0; x < n_dim; ++x) {
                    const double err =
                        2.0 * std::numbers::pi * static_cast<double>(k) *
                        std::abs(static_cast<double>(approx.values[x]) / m_dim - f.values[x]);
                    out.require(err < bound, "phase-angle error at the bound");
                    out.residual = std::max(out.residual, err / bound);
                }
            }
        }
    }
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"1 commutator-identity-sweep", commutator_identity_sweep},
        {"2 uninitialized-transform", uninitialized_transform},
        {"3 entangled-ancilla-safety", entangled_ancilla_safety},
        {"4 one-call-variant", one_call_variant},
        {"5 gdj-exactness", gdj_exactness},
        {"6 structure-recovery", structure_recovery},
        {"7 classical-baselines", classical_baselines},
        {"8 optimality-witness", optimality},
        {"9 approximate-transform", approximate_transform},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const Outcome out = c.run();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += out.pass ? 0 : 1;
        std::printf("[%s] %-30s max_residual=%.3e time=%.2fs%s%s\n",
                    out.pass ? "PASS" : "FAIL", c.name, out.residual, secs,
                    out.note.empty() ? "" : "  ", out.note.c_str());
    }
    return failures == 0 ? 0 : 1;
}
