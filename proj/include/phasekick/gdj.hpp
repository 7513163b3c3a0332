#pragma once

#include <cstdint>
#include <optional>

#include "phasekick/kickback.hpp"
#include "phasekick/oracle.hpp"

namespace phasekick {

enum class KickbackMode { Initialized, Uninitialized };
enum class RecoveryMode { Deterministic, Sampled };

struct GdjReport {
    std::vector<double> distribution;  // outcome probabilities over Z_N
    Classification classification = Classification::Constant;
    std::size_t oracle_calls = 0;
    std::int64_t k_used = 0;
    std::optional<StructureParams> recovered;
};

/// Generalized Deutsch-Jozsa run: measure W_n R_{k,f} W_n |0>, with R_{k,f}
/// realized by the chosen kickback mode (one oracle call initialized, two
/// uninitialized). Outcome 0 keeps all the weight exactly when f is constant
/// and none of it when f is evenly distributed. The seed only feeds the
/// arbitrary ancilla draw of the uninitialized mode.
GdjReport gdj_run(const FunctionTable& f, std::int64_t k, KickbackMode mode,
                  std::uint64_t seed = 0);

/// The inner summation S = sum_x (-1)^{x.y} omega_M^{k f(x)}, computed term by
/// term; the independent check for gdj_run (distribution[y] == |S/N|^2).
cplx brute_sum_s(const FunctionTable& f, std::int64_t k, std::size_t y);

/// Parity of the bitwise AND of x and y.
int parity_dot(std::size_t x, std::size_t y);

/// Reads (D, L, a) off an evenly distributed table: builds the normalized
/// superposition of the image values, Fourier transforms it, and recovers D
/// from the outcome lattice (the transform wipes the shift and turns the image
/// period L into spacing D). Deterministic mode reads the exact support;
/// sampled mode draws 4D+8 outcomes and takes their gcd with M.
StructureParams recover_structure(const FunctionTable& f, RecoveryMode mode,
                                  std::uint64_t seed = 0);

}  // namespace phasekick
