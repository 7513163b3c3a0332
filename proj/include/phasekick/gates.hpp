#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "phasekick/common.hpp"

namespace phasekick {

// Gate constructors build dense matrices; ancilla registers are small, so the
// dimension is capped. Larger control registers are handled per-register by
// the state-vector routines, never through a dense matrix.
inline constexpr std::size_t kMaxGateDim = 64;

struct UnitaryMatrix {
    std::size_t dim = 0;
    std::vector<cplx> entries;  // row-major, dim x dim

    UnitaryMatrix() = default;
    explicit UnitaryMatrix(std::size_t d) : dim(d), entries(d * d) {}

    cplx& at(std::size_t row, std::size_t col) { return entries[row * dim + col]; }
    const cplx& at(std::size_t row, std::size_t col) const { return entries[row * dim + col]; }

    UnitaryMatrix adjoint() const;

    static UnitaryMatrix identity(std::size_t d);
    static UnitaryMatrix scaled_identity(std::size_t d, cplx scale);
};

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b);
UnitaryMatrix operator*(cplx scale, const UnitaryMatrix& a);

/// Largest entrywise |a - b|.
double max_abs_diff(const UnitaryMatrix& a, const UnitaryMatrix& b);

/// Largest entrywise deviation of U†U from the identity.
double unitarity_residual(const UnitaryMatrix& u);

bool is_unitary(const UnitaryMatrix& u, double tol = kAmplitudeTol);

/// Fourier transform on Z_M: entry (t, y) = omega_M^{t*y} / sqrt(M).
UnitaryMatrix qft(std::size_t m_dim);

/// Conjugate transpose of qft(M).
UnitaryMatrix qft_inv(std::size_t m_dim);

/// Cyclic shift |y> -> |y + z mod M>.
UnitaryMatrix translation(std::size_t m_dim, std::int64_t z);

/// Phase gate |y> -> omega_M^{k*y} |y>, built as QFT^{-1} T_{-k} QFT.
UnitaryMatrix r_phase(std::size_t m_dim, std::int64_t k);

/// Self-inverse gate |y> -> omega_M^{k*y} |-y mod M>, built as QFT T_{-k} QFT.
UnitaryMatrix s_gate(std::size_t m_dim, std::int64_t k);

/// n-qubit Walsh-Hadamard: entry (x, y) = (-1)^{x.y} / sqrt(2^n), with x.y the
/// parity of the bitwise AND.
UnitaryMatrix walsh(std::size_t n_qubits);

/// [A, B] = A B A^{-1} B^{-1} (adjoints, since the inputs are unitary).
UnitaryMatrix commutator(const UnitaryMatrix& a, const UnitaryMatrix& b);

}  // namespace phasekick
