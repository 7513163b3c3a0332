#include "phasekick/gdj.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>

#include "phasekick/rng.hpp"

namespace phasekick {

namespace {

constexpr double kSupportCutoff = 1e-9;

// In-place Walsh-Hadamard butterfly on one register of a joint state. Dense
// walsh() matrices are capped at 64, so control registers go through here.
void fast_walsh_inplace(PureState& state, std::size_t reg) {
    const std::size_t dim = state.shape.dims[reg];
    const std::size_t stride = state.shape.stride(reg);
    const std::size_t block = dim * stride;
    const std::size_t total = state.amplitudes.size();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t h = 1; h < dim; h <<= 1) {
        for (std::size_t base = 0; base < total; base += block) {
            for (std::size_t local = 0; local < dim; ++local) {
                if (local & h) continue;
                for (std::size_t lo = 0; lo < stride; ++lo) {
                    const std::size_t i0 = base + local * stride + lo;
                    const std::size_t i1 = i0 + h * stride;
                    const cplx a = state.amplitudes[i0];
                    const cplx b = state.amplitudes[i1];
                    state.amplitudes[i0] = (a + b) * inv_sqrt2;
                    state.amplitudes[i1] = (a - b) * inv_sqrt2;
                }
            }
        }
    }
}

}  // namespace

GdjReport gdj_run(const FunctionTable& f, std::int64_t k, KickbackMode mode, std::uint64_t seed) {
    const std::size_t n_dim = f.domain_size();
    const std::size_t m_dim = f.range_size();
    if (reduce_mod(k, m_dim) == 0)
        throw std::invalid_argument("gdj_run: k must be nonzero mod M");

    PureState control = basis_state(RegisterShape({n_dim}), 0);
    fast_walsh_inplace(control, 0);

    PhaseResult kicked =
        mode == KickbackMode::Initialized
            ? f_phase_initialized(control, f, k)
            : f_phase_uninitialized(control, random_state(RegisterShape({m_dim}),
                                                          derive_seed(seed, 0xa11c)),
                                    f, k);

    PureState joint = std::move(kicked.final_state);
    fast_walsh_inplace(joint, 0);

    GdjReport report;
    report.distribution = distribution(joint, 0);
    report.classification = report.distribution[0] > 1.0 - 1e-9 ? Classification::Constant
                                                                : Classification::EvenlyDistributed;
    report.oracle_calls = kicked.transcript.total_calls();
    report.k_used = k;
    if (report.classification == Classification::EvenlyDistributed) {
        try {
            report.recovered = recover_structure(f, RecoveryMode::Deterministic, seed);
        } catch (const promise_violation&) {
            // Out-of-promise input; leave the parameters empty.
        }
    }
    return report;
}

cplx brute_sum_s(const FunctionTable& f, std::int64_t k, std::size_t y) {
    const std::size_t m_dim = f.range_size();
    cplx acc{};
    for (std::size_t x = 0; x < f.domain_size(); ++x) {
        const cplx term = root_of_unity(m_dim, k * static_cast<std::int64_t>(f.values[x]));
        acc += parity_dot(x, y) ? -term : term;
    }
    return acc;
}

int parity_dot(std::size_t x, std::size_t y) {
    return std::popcount(x & y) & 1;
}

StructureParams recover_structure(const FunctionTable& f, RecoveryMode mode, std::uint64_t seed) {
    const std::size_t n_dim = f.domain_size();
    const std::size_t m_dim = f.range_size();

    // Classical pass over the table: the image and its class sizes.
    std::map<std::size_t, std::size_t> counts;
    for (std::size_t v : f.values) ++counts[v];
    const std::size_t d_direct = counts.size();
    if (d_direct < 2) throw promise_violation("degenerate image: table is constant");
    if (m_dim % d_direct != 0 || n_dim % d_direct != 0)
        throw promise_violation("distinct-value count divides neither M nor N as promised");
    const std::size_t l = m_dim / d_direct;
    const std::size_t per_class = n_dim / d_direct;

    std::vector<std::size_t> image;
    image.reserve(d_direct);
    for (const auto& [v, c] : counts) {
        if (c != per_class) throw promise_violation("preimage classes are not all the same size");
        image.push_back(v);
    }
    const std::size_t a = image.front() % l;
    for (std::size_t j = 0; j < image.size(); ++j)
        if (image[j] != j * l + a)
            throw promise_violation("image values do not form an arithmetic progression");

    // Fourier side: the image superposition's transform is supported exactly
    // on the multiples of D.
    PureState comb{RegisterShape({m_dim}), std::vector<cplx>(m_dim)};
    const double amp = 1.0 / std::sqrt(static_cast<double>(d_direct));
    for (std::size_t v : image) comb.amplitudes[v] = amp;
    const PureState transformed = apply(qft(m_dim), comb, 0);

    std::size_t g = m_dim;
    if (mode == RecoveryMode::Deterministic) {
        const std::vector<double> p = distribution(transformed);
        for (std::size_t t = 0; t < m_dim; ++t)
            if (p[t] > kSupportCutoff) g = std::gcd(g, t);
    } else {
        const std::size_t draws = 4 * d_direct + 8;
        for (std::size_t i = 0; i < draws; ++i)
            g = std::gcd(g, sample(transformed, derive_seed(seed, i)));
    }

    const std::size_t d_recovered = g;
    if (d_recovered != d_direct)
        throw promise_violation("Fourier support spacing disagrees with the distinct-value count");

    StructureParams params;
    params.d = d_recovered;
    params.l = m_dim / d_recovered;
    params.a = image.front() % params.l;
    params.class_sizes.assign(d_recovered, per_class);
    return params;
}

}  // namespace phasekick
