#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "phasekick/registers.hpp"

namespace phasekick {

/// Raised when an input breaks the constant-or-evenly-distributed promise in
/// a way the algorithm can actually observe.
struct promise_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Tabulated f: Z_N -> Z_M with N = 2^n, M = 2^m.
struct FunctionTable {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<std::size_t> values;

    FunctionTable(std::size_t n_bits, std::size_t m_bits, std::vector<std::size_t> vals);

    std::size_t domain_size() const { return std::size_t{1} << n; }
    std::size_t range_size() const { return std::size_t{1} << m; }
};

/// Tabulated f: Z_N -> [0, 1).
struct RealFunctionTable {
    std::size_t n = 0;
    std::vector<double> values;

    RealFunctionTable(std::size_t n_bits, std::vector<double> vals);

    std::size_t domain_size() const { return std::size_t{1} << n; }
};

enum class OracleDirection { Forward, Inverse };

/// Ledger of U_f / U_{-f} applications; the unit of query complexity.
struct OracleTranscript {
    std::size_t forward_calls = 0;
    std::size_t inverse_calls = 0;
    std::vector<OracleDirection> order;

    void record(OracleDirection dir);
    std::size_t total_calls() const { return forward_calls + inverse_calls; }
    bool counts_match_order() const;
};

/// (D, L, a) of an evenly distributed function: D distinct values forming the
/// arithmetic progression {j*L + a}, L = M/D, a in [0, L), with every
/// preimage class of size N/D.
struct StructureParams {
    std::size_t d = 0;
    std::size_t l = 0;
    std::size_t a = 0;
    std::vector<std::size_t> class_sizes;
};

/// U_f |x>|y> = |x>|y + f(x)> (forward) or |x>|y - f(x)> (inverse), acting on
/// the first two registers; any trailing registers ride along untouched.
/// Records one call on the transcript.
PureState apply_uf(const PureState& state, const FunctionTable& f, OracleDirection dir,
                   OracleTranscript& transcript);

FunctionTable make_constant(std::size_t n, std::size_t m, std::size_t c);

/// Evenly distributed f with D distinct values and shift a: image is exactly
/// {j*L + a : j in Z_D} and every class has N/D members. The assignment of x
/// to classes is a seeded shuffle; with adversarial_order the classes are laid
/// out contiguously so a sequential prober meets its worst case.
std::pair<FunctionTable, StructureParams> make_evenly_distributed(
    std::size_t n, std::size_t m, std::size_t d, std::size_t a, std::uint64_t seed,
    bool adversarial_order = false);

/// Onto, exactly (N/M)-to-one f (a seeded bijection when n == m).
FunctionTable make_r_to_one(std::size_t n, std::size_t m, std::uint64_t seed);

/// m-bit approximation: f~(x) = floor(f(x) * 2^m), so |f~(x)/M - f(x)| < 2^-m.
FunctionTable discretize(const RealFunctionTable& f, std::size_t m);

/// Table of the m_out-bit approximation of g(f(x)), for g: Z_M -> [0, 1).
FunctionTable compose_g_of_f(const RealFunctionTable& g, const FunctionTable& f, std::size_t m_out);

enum class Classification { Constant, EvenlyDistributed };

struct ClassifyResult {
    Classification label;
    std::size_t queries;
};

/// Deterministic sequential probing at x = 0, 1, 2, ...: stops at the first
/// value differing from f(0), or concludes Constant after N/D+1 identical
/// values (N/2+1 when D is unknown).
ClassifyResult classify_classically(const FunctionTable& f,
                                    std::optional<std::size_t> d_known = std::nullopt);

}  // namespace phasekick
