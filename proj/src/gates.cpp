#include "phasekick/gates.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace phasekick {

namespace {

void check_gate_dim(std::size_t d) {
    if (!is_power_of_two(d) || d < 2)
        throw std::invalid_argument("gate dimension must be a power of two >= 2");
    if (d > kMaxGateDim)
        throw std::invalid_argument("gate dimension above the dense-matrix cap of 64");
}

}  // namespace

UnitaryMatrix UnitaryMatrix::adjoint() const {
    UnitaryMatrix out(dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            out.at(c, r) = std::conj(at(r, c));
    return out;
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t d) {
    UnitaryMatrix out(d);
    for (std::size_t i = 0; i < d; ++i) out.at(i, i) = 1.0;
    return out;
}

UnitaryMatrix UnitaryMatrix::scaled_identity(std::size_t d, cplx scale) {
    UnitaryMatrix out(d);
    for (std::size_t i = 0; i < d; ++i) out.at(i, i) = scale;
    return out;
}

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    if (a.dim != b.dim) throw std::invalid_argument("matrix product: dimension mismatch");
    UnitaryMatrix out(a.dim);
    for (std::size_t r = 0; r < a.dim; ++r) {
        for (std::size_t k = 0; k < a.dim; ++k) {
            const cplx ark = a.at(r, k);
            if (ark == cplx{}) continue;
            for (std::size_t c = 0; c < a.dim; ++c) out.at(r, c) += ark * b.at(k, c);
        }
    }
    return out;
}

UnitaryMatrix operator*(cplx scale, const UnitaryMatrix& a) {
    UnitaryMatrix out = a;
    for (auto& e : out.entries) e *= scale;
    return out;
}

double max_abs_diff(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    if (a.dim != b.dim) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        worst = std::max(worst, std::abs(a.entries[i] - b.entries[i]));
    return worst;
}

double unitarity_residual(const UnitaryMatrix& u) {
    return max_abs_diff(u.adjoint() * u, UnitaryMatrix::identity(u.dim));
}

bool is_unitary(const UnitaryMatrix& u, double tol) {
    return unitarity_residual(u) < tol;
}

UnitaryMatrix qft(std::size_t m_dim) {
    check_gate_dim(m_dim);
    UnitaryMatrix out(m_dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m_dim));
    for (std::size_t t = 0; t < m_dim; ++t)
        for (std::size_t y = 0; y < m_dim; ++y)
            out.at(t, y) = scale * root_of_unity(m_dim, static_cast<std::int64_t>(t * y));
    return out;
}

UnitaryMatrix qft_inv(std::size_t m_dim) {
    return qft(m_dim).adjoint();
}

UnitaryMatrix translation(std::size_t m_dim, std::int64_t z) {
    check_gate_dim(m_dim);
    const std::size_t shift = reduce_mod(z, m_dim);
    UnitaryMatrix out(m_dim);
    for (std::size_t y = 0; y < m_dim; ++y) out.at((y + shift) % m_dim, y) = 1.0;
    return out;
}

UnitaryMatrix r_phase(std::size_t m_dim, std::int64_t k) {
    return qft_inv(m_dim) * translation(m_dim, -k) * qft(m_dim);
}

UnitaryMatrix s_gate(std::size_t m_dim, std::int64_t k) {
    return qft(m_dim) * translation(m_dim, -k) * qft(m_dim);
}

UnitaryMatrix walsh(std::size_t n_qubits) {
    if (n_qubits < 1) throw std::invalid_argument("walsh: need at least one qubit");
    if (n_qubits > 6) throw std::invalid_argument("walsh: dense matrix capped at 64 (6 qubits)");
    const std::size_t n_dim = std::size_t{1} << n_qubits;
    UnitaryMatrix out(n_dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_dim));
    for (std::size_t x = 0; x < n_dim; ++x)
        for (std::size_t y = 0; y < n_dim; ++y)
            out.at(x, y) = (std::popcount(x & y) & 1U) ? -scale : scale;
    return out;
}

UnitaryMatrix commutator(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    if (a.dim != b.dim) throw std::invalid_argument("commutator: dimension mismatch");
    return a * b * a.adjoint() * b.adjoint();
}

}  // namespace phasekick
