#include "phasekick/registers.hpp"

#include <cmath>
#include <stdexcept>

#include "phasekick/rng.hpp"

namespace phasekick {

RegisterShape::RegisterShape(std::vector<std::size_t> d) : dims(std::move(d)) {
    if (dims.empty()) throw std::invalid_argument("RegisterShape: need at least one register");
    for (std::size_t v : dims)
        if (v < 2 || !is_power_of_two(v))
            throw std::invalid_argument("RegisterShape: every dimension must be a power of two >= 2");
}

std::size_t RegisterShape::total_dim() const {
    std::size_t total = 1;
    for (std::size_t v : dims) total *= v;
    return total;
}

std::size_t RegisterShape::stride(std::size_t reg) const {
    std::size_t s = 1;
    for (std::size_t r = reg + 1; r < dims.size(); ++r) s *= dims[r];
    return s;
}

std::size_t RegisterShape::digit(std::size_t flat, std::size_t reg) const {
    return (flat / stride(reg)) % dims[reg];
}

double PureState::norm() const {
    double acc = 0.0;
    for (const cplx& a : amplitudes) acc += std::norm(a);
    return std::sqrt(acc);
}

bool PureState::is_normalized(double tol) const {
    return std::abs(norm() - 1.0) < tol;
}

cplx inner_product(const PureState& a, const PureState& b) {
    if (a.amplitudes.size() != b.amplitudes.size())
        throw std::invalid_argument("inner_product: total dimensions differ");
    cplx acc{};
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
        acc += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    return acc;
}

double max_amplitude_diff(const PureState& a, const PureState& b) {
    if (a.amplitudes.size() != b.amplitudes.size())
        throw std::invalid_argument("max_amplitude_diff: total dimensions differ");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
        worst = std::max(worst, std::abs(a.amplitudes[i] - b.amplitudes[i]));
    return worst;
}

PureState basis_state(const RegisterShape& shape, std::size_t index) {
    const std::size_t total = shape.total_dim();
    if (index >= total) throw std::invalid_argument("basis_state: index out of range");
    PureState out{shape, std::vector<cplx>(total)};
    out.amplitudes[index] = 1.0;
    return out;
}

PureState random_state(const RegisterShape& shape, std::uint64_t seed) {
    SeededRng rng(seed);
    PureState out{shape, std::vector<cplx>(shape.total_dim())};
    for (cplx& a : out.amplitudes) a = {rng.gaussian(), rng.gaussian()};
    double n = out.norm();
    for (cplx& a : out.amplitudes) a /= n;
    return out;
}

PureState tensor(const PureState& a, const PureState& b) {
    std::vector<std::size_t> dims = a.shape.dims;
    dims.insert(dims.end(), b.shape.dims.begin(), b.shape.dims.end());
    const std::size_t nb = b.amplitudes.size();
    PureState out{RegisterShape(std::move(dims)), std::vector<cplx>(a.amplitudes.size() * nb)};
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
        for (std::size_t j = 0; j < nb; ++j)
            out.amplitudes[i * nb + j] = a.amplitudes[i] * b.amplitudes[j];
    return out;
}

PureState apply(const UnitaryMatrix& u, const PureState& state, std::size_t target) {
    const auto& dims = state.shape.dims;
    if (target >= dims.size()) throw std::invalid_argument("apply: no such register");
    if (u.dim != dims[target]) throw std::invalid_argument("apply: gate dimension does not match register");

    const std::size_t d = u.dim;
    const std::size_t stride = state.shape.stride(target);
    const std::size_t block = d * stride;
    const std::size_t total = state.amplitudes.size();

    PureState out{state.shape, std::vector<cplx>(total)};
    std::vector<cplx> slice(d);
    for (std::size_t base = 0; base < total; base += block) {
        for (std::size_t lo = 0; lo < stride; ++lo) {
            for (std::size_t i = 0; i < d; ++i) slice[i] = state.amplitudes[base + i * stride + lo];
            for (std::size_t r = 0; r < d; ++r) {
                cplx acc{};
                for (std::size_t c = 0; c < d; ++c) acc += u.at(r, c) * slice[c];
                out.amplitudes[base + r * stride + lo] = acc;
            }
        }
    }
    return out;
}

double fidelity(const PureState& a, const PureState& b) {
    return std::norm(inner_product(a, b));
}

std::vector<double> distribution(const PureState& state, std::optional<std::size_t> reg) {
    if (!reg) {
        std::vector<double> p(state.amplitudes.size());
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(state.amplitudes[i]);
        return p;
    }
    if (*reg >= state.shape.dims.size()) throw std::invalid_argument("distribution: no such register");
    std::vector<double> p(state.shape.dims[*reg], 0.0);
    for (std::size_t i = 0; i < state.amplitudes.size(); ++i)
        p[state.shape.digit(i, *reg)] += std::norm(state.amplitudes[i]);
    return p;
}

std::size_t sample(const PureState& state, std::uint64_t seed, std::optional<std::size_t> reg) {
    const std::vector<double> p = distribution(state, reg);
    SeededRng rng(seed);
    const double u = rng.uniform01();
    double cum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        cum += p[i];
        if (u < cum) return i;
    }
    return p.size() - 1;  // u landed in the rounding slack at the top
}

}  // namespace phasekick
