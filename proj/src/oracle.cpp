#include "phasekick/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "phasekick/rng.hpp"

namespace phasekick {

namespace {

// Keeps table sizes tabulatable; 2^20 values is already a megabyte-scale table.
constexpr std::size_t kMaxBits = 20;

void check_bits(std::size_t n, std::size_t m) {
    if (n < 1 || n > kMaxBits) throw std::invalid_argument("n must be in [1, 20]");
    if (m < 1 || m > kMaxBits) throw std::invalid_argument("m must be in [1, 20]");
}

void seeded_shuffle(std::vector<std::size_t>& vals, std::uint64_t seed) {
    SeededRng rng(seed);
    for (std::size_t i = vals.size(); i > 1; --i)
        std::swap(vals[i - 1], vals[rng.below(i)]);
}

}  // namespace

FunctionTable::FunctionTable(std::size_t n_bits, std::size_t m_bits, std::vector<std::size_t> vals)
    : n(n_bits), m(m_bits), values(std::move(vals)) {
    check_bits(n, m);
    if (values.size() != domain_size())
        throw std::invalid_argument("FunctionTable: values length must equal 2^n");
    for (std::size_t v : values)
        if (v >= range_size()) throw std::invalid_argument("FunctionTable: value out of range");
}

RealFunctionTable::RealFunctionTable(std::size_t n_bits, std::vector<double> vals)
    : n(n_bits), values(std::move(vals)) {
    if (n < 1 || n > kMaxBits) throw std::invalid_argument("n must be in [1, 20]");
    if (values.size() != domain_size())
        throw std::invalid_argument("RealFunctionTable: values length must equal 2^n");
    for (double v : values)
        if (!(v >= 0.0 && v < 1.0))
            throw std::invalid_argument("RealFunctionTable: values must lie in [0, 1)");
}

void OracleTranscript::record(OracleDirection dir) {
    if (dir == OracleDirection::Forward)
        ++forward_calls;
    else
        ++inverse_calls;
    order.push_back(dir);
}

bool OracleTranscript::counts_match_order() const {
    std::size_t fwd = 0, inv = 0;
    for (OracleDirection d : order) (d == OracleDirection::Forward ? fwd : inv)++;
    return fwd == forward_calls && inv == inverse_calls;
}

PureState apply_uf(const PureState& state, const FunctionTable& f, OracleDirection dir,
                   OracleTranscript& transcript) {
    const auto& dims = state.shape.dims;
    if (dims.size() < 2 || dims[0] != f.domain_size() || dims[1] != f.range_size())
        throw std::invalid_argument("apply_uf: state shape does not match the function table");

    const std::size_t n_dim = dims[0];
    const std::size_t m_dim = dims[1];
    std::size_t tail = 1;
    for (std::size_t r = 2; r < dims.size(); ++r) tail *= dims[r];

    // Pure index permutation; amplitudes move, never change.
    PureState out{state.shape, std::vector<cplx>(state.amplitudes.size())};
    for (std::size_t x = 0; x < n_dim; ++x) {
        const std::size_t fx = f.values[x];
        for (std::size_t y = 0; y < m_dim; ++y) {
            const std::size_t y_to = dir == OracleDirection::Forward
                                         ? (y + fx) % m_dim
                                         : (y + m_dim - fx) % m_dim;
            const std::size_t from = (x * m_dim + y) * tail;
            const std::size_t to = (x * m_dim + y_to) * tail;
            for (std::size_t e = 0; e < tail; ++e) out.amplitudes[to + e] = state.amplitudes[from + e];
        }
    }
    transcript.record(dir);
    return out;
}

FunctionTable make_constant(std::size_t n, std::size_t m, std::size_t c) {
    check_bits(n, m);
    if (c >= (std::size_t{1} << m)) throw std::invalid_argument("make_constant: c out of range");
    return {n, m, std::vector<std::size_t>(std::size_t{1} << n, c)};
}

std::pair<FunctionTable, StructureParams> make_evenly_distributed(
    std::size_t n, std::size_t m, std::size_t d, std::size_t a, std::uint64_t seed,
    bool adversarial_order) {
    check_bits(n, m);
    const std::size_t n_dim = std::size_t{1} << n;
    const std::size_t m_dim = std::size_t{1} << m;
    if (d < 2) throw std::invalid_argument("make_evenly_distributed: D must be >= 2");
    if (m_dim % d != 0) throw std::invalid_argument("make_evenly_distributed: D must divide M");
    if (n_dim % d != 0)
        throw std::invalid_argument("make_evenly_distributed: D must divide N (equal class sizes)");
    const std::size_t l = m_dim / d;
    if (a >= l) throw std::invalid_argument("make_evenly_distributed: shift a must lie in [0, L)");

    const std::size_t per_class = n_dim / d;
    std::vector<std::size_t> vals;
    vals.reserve(n_dim);
    for (std::size_t j = 0; j < d; ++j) vals.insert(vals.end(), per_class, j * l + a);
    if (!adversarial_order) seeded_shuffle(vals, seed);

    StructureParams params{d, l, a, std::vector<std::size_t>(d, per_class)};
    return {FunctionTable(n, m, std::move(vals)), params};
}

FunctionTable make_r_to_one(std::size_t n, std::size_t m, std::uint64_t seed) {
    check_bits(n, m);
    const std::size_t n_dim = std::size_t{1} << n;
    const std::size_t m_dim = std::size_t{1} << m;
    if (n_dim % m_dim != 0) throw std::invalid_argument("make_r_to_one: M must divide N");
    const std::size_t r = n_dim / m_dim;
    std::vector<std::size_t> vals;
    vals.reserve(n_dim);
    for (std::size_t v = 0; v < m_dim; ++v) vals.insert(vals.end(), r, v);
    seeded_shuffle(vals, seed);
    return {n, m, std::move(vals)};
}

FunctionTable discretize(const RealFunctionTable& f, std::size_t m) {
    if (m < 1 || m > kMaxBits) throw std::invalid_argument("discretize: m must be in [1, 20]");
    const double scale = static_cast<double>(std::size_t{1} << m);
    std::vector<std::size_t> vals(f.values.size());
    for (std::size_t x = 0; x < vals.size(); ++x)
        vals[x] = static_cast<std::size_t>(std::floor(f.values[x] * scale));
    return {f.n, m, std::move(vals)};
}

FunctionTable compose_g_of_f(const RealFunctionTable& g, const FunctionTable& f, std::size_t m_out) {
    if (g.values.size() != f.range_size())
        throw std::invalid_argument("compose_g_of_f: g must be tabulated over Z_M of f");
    if (m_out < 1 || m_out > kMaxBits) throw std::invalid_argument("compose_g_of_f: m_out must be in [1, 20]");
    const double scale = static_cast<double>(std::size_t{1} << m_out);
    std::vector<std::size_t> vals(f.values.size());
    for (std::size_t x = 0; x < vals.size(); ++x)
        vals[x] = static_cast<std::size_t>(std::floor(g.values[f.values[x]] * scale));
    return {f.n, m_out, std::move(vals)};
}

ClassifyResult classify_classically(const FunctionTable& f, std::optional<std::size_t> d_known) {
    const std::size_t n_dim = f.domain_size();
    const std::size_t m_dim = f.range_size();
    std::size_t l = 0;
    if (d_known) {
        if (*d_known < 2 || m_dim % *d_known != 0 || n_dim % *d_known != 0)
            throw std::invalid_argument("classify_classically: D must be >= 2 and divide both N and M");
        l = m_dim / *d_known;
    }
    const std::size_t bound = d_known ? n_dim / *d_known + 1 : n_dim / 2 + 1;

    const std::size_t first = f.values[0];
    std::size_t queries = 1;
    for (std::size_t x = 1; x < bound; ++x) {
        const std::size_t v = f.values[x];
        ++queries;
        if (v != first) {
            // With D known every value is congruent to the shift mod L, so two
            // observations in different residue classes expose a broken promise.
            if (d_known && (v % l) != (first % l))
                throw promise_violation("observed values are not congruent mod L");
            return {Classification::EvenlyDistributed, queries};
        }
    }
    return {Classification::Constant, queries};
}

}  // namespace phasekick
