#pragma once

#include <bit>
#include <vector>

#include "phasekick/gates.hpp"
#include "phasekick/registers.hpp"

// Independent matrix routes used to cross-check the state-vector fast paths.

inline phasekick::UnitaryMatrix kron(const phasekick::UnitaryMatrix& a,
                                     const phasekick::UnitaryMatrix& b) {
    phasekick::UnitaryMatrix out(a.dim * b.dim);
    for (std::size_t ra = 0; ra < a.dim; ++ra)
        for (std::size_t ca = 0; ca < a.dim; ++ca)
            for (std::size_t rb = 0; rb < b.dim; ++rb)
                for (std::size_t cb = 0; cb < b.dim; ++cb)
                    out.at(ra * b.dim + rb, ca * b.dim + cb) = a.at(ra, ca) * b.at(rb, cb);
    return out;
}

inline phasekick::PureState matvec(const phasekick::UnitaryMatrix& u,
                                   const phasekick::PureState& s) {
    phasekick::PureState out{s.shape, std::vector<phasekick::cplx>(s.amplitudes.size())};
    for (std::size_t r = 0; r < u.dim; ++r) {
        phasekick::cplx acc{};
        for (std::size_t c = 0; c < u.dim; ++c) acc += u.at(r, c) * s.amplitudes[c];
        out.amplitudes[r] = acc;
    }
    return out;
}

// Full matrix of a state-map, column by column.
template <typename Op>
phasekick::UnitaryMatrix materialize(const phasekick::RegisterShape& shape, Op&& op) {
    const std::size_t total = shape.total_dim();
    phasekick::UnitaryMatrix out(total);
    for (std::size_t col = 0; col < total; ++col) {
        const phasekick::PureState image = op(phasekick::basis_state(shape, col));
        for (std::size_t row = 0; row < total; ++row) out.at(row, col) = image.amplitudes[row];
    }
    return out;
}

// The gate zoo used by the property sweeps.
inline std::vector<phasekick::UnitaryMatrix> gate_zoo(std::size_t dim) {
    using namespace phasekick;
    std::vector<UnitaryMatrix> gates{qft(dim), qft_inv(dim)};
    if (dim <= 64) gates.push_back(walsh(std::countr_zero(dim)));
    for (std::int64_t e : {std::int64_t{1}, static_cast<std::int64_t>(dim / 2),
                           static_cast<std::int64_t>(dim - 1)}) {
        gates.push_back(translation(dim, e));
        gates.push_back(r_phase(dim, e));
        gates.push_back(s_gate(dim, e));
    }
    return gates;
}
