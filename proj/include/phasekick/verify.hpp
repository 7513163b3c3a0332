#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace phasekick {

struct VerifyOptions {
    std::size_t max_dim = 16;  // largest ancilla dimension swept (2, 4, ..., max_dim)
    double tol = 1e-10;
    std::uint64_t seed = 0;
    // Negative-control fixture: flips the sign of one S factor inside the
    // S-form identity check, which must then be flagged.
    bool inject_sform_sign_error = false;
};

struct CheckResult {
    std::string name;
    double max_residual = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Runs every algebraic invariant of the library over all ancilla dimensions
/// M in {2, 4, ..., max_dim} and all k, z in Z_M: gate unitarity, the
/// commutator identities and their negated family, the S-form identity, the
/// closed forms, ancilla restoration (with call budgets), entangled-ancilla
/// safety, the translation eigenstate, the optimality witness, and the
/// discretization phase-error bound.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace phasekick
