// phasekick: verification suites, generalized Deutsch-Jozsa runs, and phase
// transform demos, with seeded-reproducible JSON reports.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "phasekick/gdj.hpp"
#include "phasekick/json_io.hpp"
#include "phasekick/kickback.hpp"
#include "phasekick/rng.hpp"
#include "phasekick/verify.hpp"

using namespace phasekick;

namespace {

struct CommonOpts {
    std::uint64_t seed = 0;
    double tol = 1e-10;
    bool json_out = false;
    std::string output_path;
};

constexpr std::size_t kMaxJointBits = 12;  // total_dim <= 4096 for joint runs

void emit(const json& report, const CommonOpts& common, const std::string& text) {
    if (common.json_out)
        std::cout << report.dump(2) << '\n';
    else
        std::cout << text;
    if (!common.output_path.empty()) {
        std::ofstream out(common.output_path);
        if (!out) throw std::invalid_argument("cannot write " + common.output_path);
        out << report.dump(2) << '\n';
    }
}

json make_report(const std::string& command, json config, json checks, json body) {
    return {{"command", command}, {"config", std::move(config)}, {"checks", std::move(checks)},
            {"report", std::move(body)}};
}

void check_joint_dims(std::size_t n, std::size_t m) {
    if (n < 1 || m < 1 || n + m > kMaxJointBits)
        throw std::invalid_argument("need n, m >= 1 with n + m <= 12 (joint dimension <= 4096)");
    if (m > 6)
        throw std::invalid_argument("ancilla register is capped at m <= 6 (dense gates up to 64)");
}

// ---- verify ----------------------------------------------------------------

int run_verify(const CommonOpts& common, std::size_t max_dim, bool inject) {
    VerifyOptions opt;
    opt.max_dim = max_dim;
    opt.tol = common.tol;
    opt.seed = common.seed;
    opt.inject_sform_sign_error = inject;
    const VerifyReport report = run_verification(opt);

    json checks = json::array();
    std::string text;
    for (const CheckResult& c : report.checks) {
        checks.push_back(check_result_to_json(c));
        char line[160];
        std::snprintf(line, sizeof line, "[%s] %-24s max_residual=%.3e (threshold %.1e)\n",
                      c.pass ? "PASS" : "FAIL", c.name.c_str(), c.max_residual, c.threshold);
        text += line;
    }
    const json j = make_report(
        "verify",
        {{"max_dim", max_dim}, {"tol", common.tol}, {"seed", common.seed}},
        std::move(checks), {{"all_pass", report.all_pass()}});
    emit(j, common, text);
    return report.all_pass() ? 0 : 1;
}

// ---- gdj -------------------------------------------------------------------

struct GdjOpts {
    std::string input_path;
    std::size_t n = 0, m = 0;
    std::int64_t constant = -1;
    std::size_t d = 0, a = 0;
    std::int64_t k = 1;
    std::string mode = "uninitialized";
};

int run_gdj(const CommonOpts& common, const GdjOpts& opt) {
    std::optional<FunctionTable> table;
    if (!opt.input_path.empty()) {
        table = load_function_table(opt.input_path);
    } else if (opt.n > 0 && opt.m > 0) {
        if (opt.constant >= 0)
            table = make_constant(opt.n, opt.m, static_cast<std::size_t>(opt.constant));
        else if (opt.d > 0)
            table = make_evenly_distributed(opt.n, opt.m, opt.d, opt.a, common.seed).first;
        else
            throw std::invalid_argument("gdj: choose --constant or --d for a generated table");
    } else {
        throw std::invalid_argument("gdj: provide --input, or --n and --m with a generator flag");
    }
    check_joint_dims(table->n, table->m);

    if (reduce_mod(opt.k, table->range_size()) >= 2)
        std::cerr << "warning: classification with k >= 2 is blind when D divides k; "
                     "k=1 is always safe\n";

    const KickbackMode mode = opt.mode == "initialized" ? KickbackMode::Initialized
                                                        : KickbackMode::Uninitialized;
    const GdjReport report = gdj_run(*table, opt.k, mode, common.seed);

    // cross-check against the literal inner summation
    const std::size_t n_dim = table->domain_size();
    double worst = 0.0;
    for (std::size_t y = 0; y < n_dim; ++y) {
        const double expected =
            std::norm(brute_sum_s(*table, opt.k, y)) / static_cast<double>(n_dim * n_dim);
        worst = std::max(worst, std::abs(report.distribution[y] - expected));
    }
    const CheckResult brute{"brute-sum-agreement", worst, common.tol, worst < common.tol};

    std::string text = "classification: " + classification_name(report.classification) + "\n" +
                       "oracle_calls:   " + std::to_string(report.oracle_calls) + "\n";
    if (report.recovered) {
        text += "recovered:      D=" + std::to_string(report.recovered->d) +
                " L=" + std::to_string(report.recovered->l) +
                " a=" + std::to_string(report.recovered->a) + "\n";
    }
    char line[96];
    std::snprintf(line, sizeof line, "[%s] brute-sum-agreement      max_residual=%.3e\n",
                  brute.pass ? "PASS" : "FAIL", worst);
    text += line;

    json config{{"n", table->n}, {"m", table->m}, {"k", opt.k}, {"mode", opt.mode},
                {"seed", common.seed}};
    if (!opt.input_path.empty()) config["input"] = opt.input_path;
    if (opt.constant >= 0) config["constant"] = opt.constant;
    if (opt.d > 0) {
        config["d"] = opt.d;
        config["a"] = opt.a;
    }
    const json j = make_report("gdj", std::move(config),
                               json::array({check_result_to_json(brute)}),
                               gdj_report_to_json(report));
    emit(j, common, text);
    return brute.pass ? 0 : 1;
}

// ---- phase -----------------------------------------------------------------

struct PhaseOpts {
    std::size_t m_dim = 0;
    std::int64_t k = 1;
    std::int64_t z = 0;
    std::string variant = "rtrt";
    std::size_t n = 0, m = 0;
    std::string mode = "uninitialized";
    std::string input_path;
};

int run_phase_j(const CommonOpts& common, const PhaseOpts& opt) {
    if (!is_power_of_two(opt.m_dim) || opt.m_dim < 2 || opt.m_dim > kMaxGateDim)
        throw std::invalid_argument("--m-dim must be a power of two in [2, 64]");
    const auto variant = variant_from_name(opt.variant);
    if (!variant) throw std::invalid_argument("unknown --variant " + opt.variant);

    const cplx expected = root_of_unity(opt.m_dim, opt.k * opt.z);
    const UnitaryMatrix matrix = j_phase_matrix(opt.m_dim, opt.k, opt.z, *variant);
    const double matrix_residual =
        max_abs_diff(matrix, UnitaryMatrix::scaled_identity(opt.m_dim, expected));

    const PureState psi = random_state(RegisterShape({opt.m_dim}), common.seed);
    const PhaseResult run = j_phase(psi, opt.k, opt.z, *variant);
    const cplx phase = run.extracted_phase.value_or(cplx{});
    const double phase_residual = std::abs(phase - expected);

    json checks = json::array(
        {check_result_to_json({"matrix-vs-scaled-identity", matrix_residual, common.tol,
                               matrix_residual < common.tol}),
         check_result_to_json({"extracted-phase", phase_residual, common.tol,
                               phase_residual < common.tol})});
    const json body{{"phase", {{"re", phase.real()}, {"im", phase.imag()}}},
                    {"expected", {{"re", expected.real()}, {"im", expected.imag()}}}};

    char text[256];
    std::snprintf(text, sizeof text,
                  "variant %s on M=%zu, k=%lld, z=%lld\n"
                  "extracted phase: %+.12f%+.12fi (expected %+.12f%+.12fi)\n"
                  "residuals: matrix %.3e, phase %.3e\n",
                  opt.variant.c_str(), opt.m_dim, static_cast<long long>(opt.k),
                  static_cast<long long>(opt.z), phase.real(), phase.imag(), expected.real(),
                  expected.imag(), matrix_residual, phase_residual);

    const json j = make_report("phase",
                               {{"m_dim", opt.m_dim}, {"k", opt.k}, {"z", opt.z},
                                {"variant", opt.variant}, {"seed", common.seed}},
                               std::move(checks), body);
    emit(j, common, text);
    return matrix_residual < common.tol && phase_residual < common.tol ? 0 : 1;
}

int run_phase_f(const CommonOpts& common, const PhaseOpts& opt) {
    std::optional<FunctionTable> table;
    if (!opt.input_path.empty()) {
        table = load_function_table(opt.input_path);
    } else {
        if (opt.n < 1 || opt.m < 1)
            throw std::invalid_argument("phase: provide --m-dim/--z, or --n/--m (or --input)");
        SeededRng rng(derive_seed(common.seed, 0xf));
        std::vector<std::size_t> vals(std::size_t{1} << opt.n);
        for (auto& v : vals) v = rng.below(std::size_t{1} << opt.m);
        table = FunctionTable(opt.n, opt.m, std::move(vals));
    }
    check_joint_dims(table->n, table->m);

    const std::size_t n_dim = table->domain_size();
    const std::size_t m_dim = table->range_size();

    // uniform control so every per-x phase is observable
    PureState control{RegisterShape({n_dim}),
                      std::vector<cplx>(n_dim, cplx{1.0 / std::sqrt(static_cast<double>(n_dim))})};

    PureState ancilla = opt.mode == "initialized"
                            ? prepare_eigenstate(m_dim, opt.k)
                            : random_state(RegisterShape({m_dim}), derive_seed(common.seed, 1));
    const PhaseResult run = opt.mode == "initialized"
                                ? f_phase_initialized(control, *table, opt.k)
                                : f_phase_uninitialized(control, ancilla, *table, opt.k);

    // read the per-x phase off the joint state at the ancilla's largest amplitude
    std::size_t y_star = 0;
    for (std::size_t y = 0; y < m_dim; ++y)
        if (std::abs(ancilla.amplitudes[y]) > std::abs(ancilla.amplitudes[y_star])) y_star = y;

    const auto reference = reference_phase_diagonal(*table, opt.k);
    double worst = 0.0;
    json rows = json::array();
    std::string text = "per-x phases vs reference (mode " + opt.mode + ", k=" +
                       std::to_string(opt.k) + "):\n";
    for (std::size_t x = 0; x < n_dim; ++x) {
        const cplx observed = run.final_state.amplitudes[x * m_dim + y_star] /
                              (control.amplitudes[x] * ancilla.amplitudes[y_star]);
        const double residual = std::abs(observed - reference[x]);
        worst = std::max(worst, residual);
        rows.push_back({{"x", x}, {"f_x", table->values[x]},
                        {"observed", {{"re", observed.real()}, {"im", observed.imag()}}},
                        {"expected", {{"re", reference[x].real()}, {"im", reference[x].imag()}}},
                        {"residual", residual}});
        char line[128];
        std::snprintf(line, sizeof line, "  x=%-3zu f=%-3zu phase %+.9f%+.9fi  residual %.3e\n", x,
                      table->values[x], observed.real(), observed.imag(), residual);
        text += line;
    }

    // the ancilla must come back exactly
    PureState phased = control;
    for (std::size_t x = 0; x < n_dim; ++x) phased.amplitudes[x] *= reference[x];
    const double restore = max_amplitude_diff(run.final_state, tensor(phased, ancilla));

    json checks = json::array(
        {check_result_to_json({"reference-diagonal-agreement", worst, common.tol,
                               worst < common.tol}),
         check_result_to_json({"ancilla-restoration", restore, common.tol,
                               restore < common.tol})});
    char tail[160];
    std::snprintf(tail, sizeof tail,
                  "residuals: diagonal %.3e, ancilla restoration %.3e\noracle calls: %zu\n", worst,
                  restore, run.transcript.total_calls());
    text += tail;

    json config{{"n", table->n}, {"m", table->m}, {"k", opt.k}, {"mode", opt.mode},
                {"seed", common.seed}};
    if (!opt.input_path.empty()) config["input"] = opt.input_path;
    const json j = make_report("phase", std::move(config), std::move(checks),
                               {{"oracle_calls", run.transcript.total_calls()}, {"table", rows}});
    emit(j, common, text);
    return worst < common.tol && restore < common.tol ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact simulator and verifier for f-conditioned phase transforms"};
    app.require_subcommand(1);

    CommonOpts common;
    std::size_t max_dim = 16;
    bool inject = false;
    GdjOpts gdj_opt;
    PhaseOpts phase_opt;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", common.seed, "seed for all randomness")
            ->envname("PHASEKICK_SEED");
        sub->add_option("--tol", common.tol, "pass/fail tolerance")
            ->check(CLI::PositiveNumber);
        sub->add_flag("--json", common.json_out, "emit the JSON report on stdout");
        sub->add_option("--output", common.output_path, "also write the JSON report to a file");
    };

    CLI::App* verify = app.add_subcommand("verify", "run the full invariant suite");
    verify->add_option("--max-dim", max_dim, "largest ancilla dimension swept")
        ->check(CLI::Range(std::size_t{2}, std::size_t{16}));
    verify->add_flag("--inject-sform-error", inject)->group("");  // negative-control fixture
    add_common(verify);

    CLI::App* gdj = app.add_subcommand("gdj", "generalized Deutsch-Jozsa classification");
    gdj->add_option("--input", gdj_opt.input_path, "function table JSON file");
    gdj->add_option("--n", gdj_opt.n, "control register bits");
    gdj->add_option("--m", gdj_opt.m, "ancilla register bits");
    gdj->add_option("--constant", gdj_opt.constant, "generate a constant table with this value");
    gdj->add_option("--d", gdj_opt.d, "generate an evenly distributed table with D values");
    gdj->add_option("--a", gdj_opt.a, "shift of the generated image (default 0)");
    gdj->add_option("--k", gdj_opt.k, "phase exponent (default 1)");
    gdj->add_option("--mode", gdj_opt.mode, "initialized|uninitialized")
        ->check(CLI::IsMember({"initialized", "uninitialized"}));
    add_common(gdj);

    CLI::App* phase = app.add_subcommand("phase", "phase transform demos with residuals");
    phase->add_option("--m-dim", phase_opt.m_dim, "single-register dimension (J_{k,z} route)");
    phase->add_option("--k", phase_opt.k, "phase exponent");
    phase->add_option("--z", phase_opt.z, "translation shift (J_{k,z} route)");
    phase->add_option("--variant", phase_opt.variant,
                      "rtrt|cyclic-1|cyclic-2|cyclic-3|s-form");
    phase->add_option("--n", phase_opt.n, "control bits (f-conditioned route)");
    phase->add_option("--m", phase_opt.m, "ancilla bits (f-conditioned route)");
    phase->add_option("--mode", phase_opt.mode, "initialized|uninitialized")
        ->check(CLI::IsMember({"initialized", "uninitialized"}));
    phase->add_option("--input", phase_opt.input_path, "function table JSON file");
    add_common(phase);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(verify)) return run_verify(common, max_dim, inject);
        if (app.got_subcommand(gdj)) return run_gdj(common, gdj_opt);
        if (phase_opt.m_dim > 0) return run_phase_j(common, phase_opt);
        return run_phase_f(common, phase_opt);
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const promise_violation& e) {
        std::cerr << "input error (promise violation): " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
