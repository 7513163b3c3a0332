#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "phasekick/common.hpp"
#include "phasekick/gates.hpp"

namespace phasekick {

/// Ordered register dimensions, each a power of two >= 2. Basis kets are
/// flattened most-significant-register-first: |x>|y> over (N, M) sits at
/// flat index x*M + y.
struct RegisterShape {
    std::vector<std::size_t> dims;

    explicit RegisterShape(std::vector<std::size_t> d);

    std::size_t total_dim() const;
    std::size_t num_registers() const { return dims.size(); }

    /// Flat-index stride of one register.
    std::size_t stride(std::size_t reg) const;
    /// Local basis index of one register within a flat index.
    std::size_t digit(std::size_t flat, std::size_t reg) const;

    bool operator==(const RegisterShape&) const = default;
};

struct PureState {
    RegisterShape shape;
    std::vector<cplx> amplitudes;

    double norm() const;
    bool is_normalized(double tol = kAmplitudeTol) const;
};

/// <a|b>; requires equal total dimension.
cplx inner_product(const PureState& a, const PureState& b);

/// Largest per-amplitude |a - b|; requires equal total dimension.
double max_amplitude_diff(const PureState& a, const PureState& b);

PureState basis_state(const RegisterShape& shape, std::size_t index);

/// Normalized state with independent standard-complex-Gaussian amplitudes;
/// deterministic per seed, and almost surely nonzero everywhere.
PureState random_state(const RegisterShape& shape, std::uint64_t seed);

PureState tensor(const PureState& a, const PureState& b);

/// Applies U to one register of a joint state (identity on every other one).
PureState apply(const UnitaryMatrix& u, const PureState& state, std::size_t target);

/// |<a|b>|^2.
double fidelity(const PureState& a, const PureState& b);

/// Outcome probabilities: marginal of one register, or the joint distribution
/// over flat indices when reg is empty.
std::vector<double> distribution(const PureState& state, std::optional<std::size_t> reg = std::nullopt);

/// One measurement outcome drawn from distribution(state, reg); deterministic per seed.
std::size_t sample(const PureState& state, std::uint64_t seed, std::optional<std::size_t> reg = std::nullopt);

}  // namespace phasekick
