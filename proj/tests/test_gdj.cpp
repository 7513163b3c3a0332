#include <doctest.h>

#include <cmath>
#include <numbers>

#include "phasekick/gdj.hpp"
#include "phasekick/rng.hpp"
#include "test_helpers.hpp"

using namespace phasekick;

TEST_SUITE("gdj") {

TEST_CASE("parity_dot") {
    for (std::size_t y = 0; y < 16; ++y) CHECK(parity_dot(0, y) == 0);
    CHECK(parity_dot(3, 3) == 0);  // two shared bits
    CHECK(parity_dot(1, 3) == 1);
    CHECK(parity_dot(5, 6) == 1);  // share only bit 2
}

TEST_CASE("brute_sum_s closed forms") {
    const FunctionTable constant = make_constant(3, 2, 3);
    for (std::size_t y = 1; y < 8; ++y) CHECK(std::abs(brute_sum_s(constant, 1, y)) < 1e-12);
    CHECK(std::abs(brute_sum_s(constant, 1, 0) - 8.0 * root_of_unity(4, 3)) < 1e-12);

    const auto [even, params] = make_evenly_distributed(3, 2, 2, 1, 99);
    CHECK(std::abs(brute_sum_s(even, 1, 0)) < 1e-10);
}

TEST_CASE("gdj_run classifies constants up to n = 6") {
    const GdjReport wide = gdj_run(make_constant(6, 1, 1), 1, KickbackMode::Uninitialized, 2);
    CHECK(wide.classification == Classification::Constant);
    CHECK(std::abs(wide.distribution[0] - 1.0) < 1e-10);

    for (std::size_t c : {0, 1, 3}) {
        const FunctionTable f = make_constant(3, 2, c);
        const GdjReport uninit = gdj_run(f, 1, KickbackMode::Uninitialized, 5);
        CHECK(uninit.classification == Classification::Constant);
        CHECK(std::abs(uninit.distribution[0] - 1.0) < 1e-10);
        CHECK(uninit.oracle_calls == 2);
        CHECK(!uninit.recovered.has_value());

        const GdjReport init = gdj_run(f, 1, KickbackMode::Initialized);
        CHECK(init.classification == Classification::Constant);
        CHECK(init.oracle_calls == 1);
    }
}

TEST_CASE("gdj_run classifies evenly distributed functions and recovers structure") {
    const auto [f, params] = make_evenly_distributed(3, 3, 4, 1, 12);
    const GdjReport r = gdj_run(f, 1, KickbackMode::Uninitialized, 3);
    CHECK(r.classification == Classification::EvenlyDistributed);
    CHECK(std::abs(r.distribution[0]) < 1e-10);
    CHECK(r.oracle_calls == 2);
    REQUIRE(r.recovered.has_value());
    CHECK(r.recovered->d == params.d);
    CHECK(r.recovered->l == params.l);
    CHECK(r.recovered->a == params.a);
}

TEST_CASE("gdj_run n=1 m=1 balanced lands on |1>") {
    const FunctionTable f(1, 1, {0, 1});
    const GdjReport r = gdj_run(f, 1, KickbackMode::Initialized);
    CHECK(std::abs(r.distribution[0] - 0.0) < 1e-10);
    CHECK(std::abs(r.distribution[1] - 1.0) < 1e-10);
}

TEST_CASE("gdj_run rejects k = 0 mod M") {
    const FunctionTable f = make_constant(2, 2, 1);
    CHECK_THROWS_AS(gdj_run(f, 0, KickbackMode::Initialized), std::invalid_argument);
    CHECK_THROWS_AS(gdj_run(f, 4, KickbackMode::Initialized), std::invalid_argument);
    CHECK_THROWS_AS(gdj_run(f, -4, KickbackMode::Uninitialized), std::invalid_argument);
}

TEST_CASE("gdj distribution equals |S/N|^2 for every outcome") {
    // covers the butterfly Walsh path against the literal sum, n up to 6
    for (std::size_t n : {1, 2, 4, 6})
        for (std::size_t m : {1, 3}) {
            SeededRng rng(n * 41 + m);
            std::vector<std::size_t> vals(std::size_t{1} << n);
            for (auto& v : vals) v = rng.below(std::size_t{1} << m);
            const FunctionTable f(n, m, vals);
            const std::size_t n_dim = f.domain_size();
            for (std::int64_t k : {1, 3}) {
                const GdjReport r = gdj_run(f, k, KickbackMode::Initialized);
                for (std::size_t y = 0; y < n_dim; ++y) {
                    const double expected =
                        std::norm(brute_sum_s(f, k, y)) / static_cast<double>(n_dim * n_dim);
                    CHECK(std::abs(r.distribution[y] - expected) < 1e-10);
                }
            }
        }
}

TEST_CASE("initialized and uninitialized modes agree") {
    const auto [f, params] = make_evenly_distributed(4, 2, 4, 0, 31);
    const GdjReport a = gdj_run(f, 1, KickbackMode::Initialized);
    const GdjReport b = gdj_run(f, 1, KickbackMode::Uninitialized, 77);
    for (std::size_t y = 0; y < f.domain_size(); ++y)
        CHECK(std::abs(a.distribution[y] - b.distribution[y]) < 1e-10);
}

TEST_CASE("every r-to-one function is classified evenly distributed") {
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t m = 1; m <= n; ++m) {
            const FunctionTable f = make_r_to_one(n, m, n * 7 + m);
            const GdjReport r = gdj_run(f, 1, KickbackMode::Initialized);
            CHECK(r.classification == Classification::EvenlyDistributed);
            REQUIRE(r.recovered.has_value());
            CHECK(r.recovered->d == f.range_size());
            CHECK(r.recovered->l == 1);
            CHECK(r.recovered->a == 0);
        }
}

TEST_CASE("recover_structure reads (D, L, a) off the Fourier support") {
    SUBCASE("image {1, 3} in Z_4") {
        const FunctionTable f(2, 2, {1, 3, 1, 3});
        // independent check: the transform of (|1>+|3>)/sqrt(2) is supported on {0, 2}
        for (std::size_t t = 0; t < 4; ++t) {
            cplx amp{};
            for (std::size_t v : {1, 3})
                amp += root_of_unity(4, static_cast<std::int64_t>(t * v));
            const bool expect_support = t % 2 == 0;
            CHECK((std::abs(amp) > 1e-9) == expect_support);
        }
        const StructureParams p = recover_structure(f, RecoveryMode::Deterministic);
        CHECK(p.d == 2);
        CHECK(p.l == 2);
        CHECK(p.a == 1);
        CHECK(p.class_sizes == std::vector<std::size_t>{2, 2});
    }

    SUBCASE("image {0, 2, 4, 6} in Z_8") {
        const FunctionTable f(2, 3, {0, 2, 4, 6});
        for (std::size_t t = 0; t < 8; ++t) {
            cplx amp{};
            for (std::size_t v : {0, 2, 4, 6})
                amp += root_of_unity(8, static_cast<std::int64_t>(t * v));
            CHECK((std::abs(amp) > 1e-9) == (t % 4 == 0));
        }
        const StructureParams p = recover_structure(f, RecoveryMode::Deterministic);
        CHECK(p.d == 4);
        CHECK(p.l == 2);
        CHECK(p.a == 0);
    }

    SUBCASE("sampled mode agrees on seeded instances") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto [f, params] = make_evenly_distributed(4, 4, 4, 2, seed);
            const StructureParams p = recover_structure(f, RecoveryMode::Sampled, seed);
            CHECK(p.d == params.d);
            CHECK(p.l == params.l);
            CHECK(p.a == params.a);
        }
    }
}

TEST_CASE("recover_structure rejects out-of-promise tables") {
    CHECK_THROWS_AS(recover_structure(make_constant(2, 2, 1), RecoveryMode::Deterministic),
                    promise_violation);
    // unequal class sizes
    CHECK_THROWS_AS(recover_structure(FunctionTable(2, 1, {0, 0, 0, 1}),
                                      RecoveryMode::Deterministic),
                    promise_violation);
    // image {0, 3} is not an arithmetic progression with L = 2
    CHECK_THROWS_AS(recover_structure(FunctionTable(2, 2, {0, 3, 0, 3}),
                                      RecoveryMode::Deterministic),
                    promise_violation);
}

TEST_CASE("recovered shift is canonical mod L") {
    // generator shifts live in [0, L) already; recovery reduces whatever it sees
    const FunctionTable f(2, 3, {3, 7, 3, 7});  // image {3, 7}: D=2, L=4, a=3
    const StructureParams p = recover_structure(f, RecoveryMode::Deterministic);
    CHECK(p.d == 2);
    CHECK(p.l == 4);
    CHECK(p.a == 3);
}

}  // TEST_SUITE
