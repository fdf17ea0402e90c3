// Command-line front end: quadrature dispersion sweeps, position densities,
// beam-splitter entropy sweeps, state dumps, and a self-check command.
// Emits CSV (default) or JSON with the full configuration echoed in-band so
// every output file is reproducible on its own.

#include <charconv>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nlcs/entanglement.hpp"
#include "nlcs/fock.hpp"
#include "nlcs/observables.hpp"
#include "nlcs/states.hpp"

using nlcs::Complex;
using nlcs::SpectrumModel;
using json = nlohmann::ordered_json;

namespace {

constexpr double kPi = std::numbers::pi;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNonConvergence = 2;

std::string fmt_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

struct RunConfig {
    std::vector<std::string> model_specs;
    double z_min = 0.0;
    double z_max = 3.0;
    int steps = 31;
    double z_re = 1.0;   // state-dump point
    double z_im = 0.0;
    double gamma_re = 0.0;
    double gamma_im = 0.0;
    int levels = nlcs::kDefaultLevels;
    double theta = kPi / 2.0;
    double phi = 0.0;
    std::string convention = "sqrt2";
    double x_min = -6.0;
    double x_max = 6.0;
    int x_steps = 241;
    std::string format = "csv";
    std::string output = "-";
    std::string preset;
    bool inject_fault = false;
};

SpectrumModel parse_model(const std::string& spec) {
    if (spec == "harmonic") return SpectrumModel::harmonic();
    if (spec == "quadratic") return SpectrumModel::quadratic();
    if (spec.rfind("linquad:", 0) == 0) {
        const std::string params = spec.substr(8);
        const auto comma = params.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("model '" + spec + "': expected linquad:A,B");
        const std::string a_str = params.substr(0, comma);
        const std::string b_str = params.substr(comma + 1);
        std::size_t used_a = 0, used_b = 0;
        double A = 0.0, B = 0.0;
        try {
            A = std::stod(a_str, &used_a);
            B = std::stod(b_str, &used_b);
        } catch (const std::exception&) {
            throw std::invalid_argument("model '" + spec + "': A, B must be numbers");
        }
        if (used_a != a_str.size() || used_b != b_str.size())
            throw std::invalid_argument("model '" + spec + "': A, B must be numbers");
        return SpectrumModel::linear_quadratic(A, B);
    }
    throw std::invalid_argument("unknown model '" + spec +
                                "' (expected harmonic, quadratic, or linquad:A,B)");
}

std::string model_spec(const SpectrumModel& m) {
    if (m.kind() == nlcs::SpectrumKind::LinearQuadratic)
        return "linquad:" + fmt_double(m.A()) + "," + fmt_double(m.B());
    return m.name();
}

std::vector<SpectrumModel> parse_models(const std::vector<std::string>& specs,
                                        const std::vector<std::string>& fallback) {
    std::vector<SpectrumModel> out;
    for (const auto& s : specs.empty() ? fallback : specs) out.push_back(parse_model(s));
    if (out.empty()) throw std::invalid_argument("at least one --model is required");
    return out;
}

std::vector<double> make_grid(double lo, double hi, int steps) {
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    if (lo > hi) throw std::invalid_argument("grid minimum exceeds maximum");
    std::vector<double> g(steps);
    for (int i = 0; i < steps; ++i)
        g[i] = (steps == 1) ? lo : lo + (hi - lo) * double(i) / double(steps - 1);
    return g;
}

// One tabular result: config echo, column names, typed rows. CSV keeps the
// config in a leading comment line; JSON carries it as an object.
struct Table {
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;

    void add_config(const std::string& k, const std::string& v) { config.emplace_back(k, v); }
    void add_config(const std::string& k, double v) { config.emplace_back(k, fmt_double(v)); }
    void add_config(const std::string& k, int v) { config.emplace_back(k, std::to_string(v)); }
};

std::string csv_cell(const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    return fmt_double(v.get<double>());
}

void write_table(const Table& t, const RunConfig& cfg) {
    std::ostringstream body;
    if (cfg.format == "csv") {
        body << "# config:";
        for (const auto& [k, v] : t.config) body << ' ' << k << '=' << v;
        body << '\n';
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            body << (i ? "," : "") << t.columns[i];
        body << '\n';
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                body << (i ? "," : "") << csv_cell(row[i]);
            body << '\n';
        }
    } else {
        json doc;
        json conf = json::object();
        for (const auto& [k, v] : t.config) conf[k] = v;
        doc["config"] = conf;
        doc["columns"] = t.columns;
        json rows = json::array();
        for (const auto& row : t.rows) rows.push_back(row);
        doc["rows"] = rows;
        body << doc.dump(2) << '\n';
    }
    if (cfg.output == "-") {
        std::cout << body.str();
    } else {
        std::ofstream file(cfg.output, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open output file '" + cfg.output + "'");
        file << body.str();
    }
}

Complex cfg_gamma(const RunConfig& cfg) { return Complex(cfg.gamma_re, cfg.gamma_im); }

nlcs::QuadratureConvention parse_convention(const std::string& s) {
    if (s == "half") return nlcs::QuadratureConvention::Half;
    if (s == "sqrt2") return nlcs::QuadratureConvention::Sqrt2;
    throw std::invalid_argument("unknown convention '" + s + "' (expected half or sqrt2)");
}

void echo_common(Table& t, const std::string& command, const RunConfig& cfg,
                 const std::vector<SpectrumModel>& models) {
    t.add_config("command", command);
    std::string joined;
    for (const auto& m : models) joined += (joined.empty() ? "" : "+") + model_spec(m);
    t.add_config("models", joined);
    t.add_config("levels", cfg.levels);
    t.add_config("format", cfg.format);
}

json ab_cell_a(const SpectrumModel& m) {
    if (m.kind() == nlcs::SpectrumKind::LinearQuadratic) return m.A();
    return nullptr;
}

json ab_cell_b(const SpectrumModel& m) {
    if (m.kind() == nlcs::SpectrumKind::LinearQuadratic) return m.B();
    return nullptr;
}

// ---------------------------------------------------------------------------
// dispersion: quadrature variances of coherent states over a real z grid.
int run_dispersion(const RunConfig& cfg) {
    const auto models = parse_models(cfg.model_specs, {"harmonic", "quadratic"});
    const auto grid = make_grid(cfg.z_min, cfg.z_max, cfg.steps);
    const auto conv = parse_convention(cfg.convention);

    Table t;
    echo_common(t, "dispersion", cfg, models);
    t.add_config("z_min", cfg.z_min);
    t.add_config("z_max", cfg.z_max);
    t.add_config("steps", cfg.steps);
    t.add_config("convention", cfg.convention);
    t.columns = {"model", "A", "B", "z", "var_x_" + cfg.convention,
                 "var_p_" + cfg.convention, "product"};
    for (const auto& m : models) {
        for (double z : grid) {
            auto state = nlcs::build_nonlinear_coherent(Complex(z), m, cfg.levels);
            auto rep = nlcs::quadrature_report(state, conv);
            t.rows.push_back({m.name(), ab_cell_a(m), ab_cell_b(m), z, rep.var_x,
                              rep.var_p, rep.product});
        }
    }
    write_table(t, cfg);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// density: |psi(x)|^2 slices over a (z, x) grid, heat-map friendly.
int run_density(const RunConfig& cfg) {
    const auto models = parse_models(cfg.model_specs, {"harmonic", "quadratic"});
    const auto z_grid = make_grid(cfg.z_min, cfg.z_max, cfg.steps);
    const auto x_grid = make_grid(cfg.x_min, cfg.x_max, cfg.x_steps);

    Table t;
    echo_common(t, "density", cfg, models);
    t.add_config("z_min", cfg.z_min);
    t.add_config("z_max", cfg.z_max);
    t.add_config("steps", cfg.steps);
    t.add_config("x_min", cfg.x_min);
    t.add_config("x_max", cfg.x_max);
    t.add_config("x_steps", cfg.x_steps);
    t.columns = {"model", "A", "B", "z", "x", "density"};
    for (const auto& m : models) {
        for (double z : z_grid) {
            auto state = nlcs::build_nonlinear_coherent(Complex(z), m, cfg.levels);
            auto dens = nlcs::position_density(state, x_grid);
            for (std::size_t i = 0; i < x_grid.size(); ++i)
                t.rows.push_back(
                    {m.name(), ab_cell_a(m), ab_cell_b(m), z, x_grid[i], dens[i]});
        }
    }
    write_table(t, cfg);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// entropy-sweep: matrix-path linear entropy with series-path spot checks.
int run_entropy_sweep(const RunConfig& cfg) {
    const auto models = parse_models(cfg.model_specs, {"harmonic", "quadratic"});
    const auto grid = make_grid(cfg.z_min, cfg.z_max, cfg.steps);
    const Complex gamma = cfg_gamma(cfg);
    if (std::abs(gamma) >= 1.0)
        throw std::invalid_argument("entropy-sweep requires |gamma| < 1");
    const nlcs::BeamSplitterConfig bs(cfg.theta, cfg.phi);

    Table t;
    echo_common(t, "entropy-sweep", cfg, models);
    t.add_config("z_min", cfg.z_min);
    t.add_config("z_max", cfg.z_max);
    t.add_config("steps", cfg.steps);
    t.add_config("gamma", cfg.gamma_re);
    t.add_config("gamma_im", cfg.gamma_im);
    t.add_config("theta", cfg.theta);
    t.add_config("phi", cfg.phi);
    t.columns = {"model", "A", "B", "z", "gamma_re", "gamma_im", "S", "converged",
                 "series_dev"};

    const auto rows = nlcs::entropy_sweep(models, grid, gamma, bs, cfg.levels);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        json series_dev;  // null unless this row was spot-checked
        bool converged = r.converged;
        if (i % 10 == 0) {
            auto state = nlcs::build_nonlinear_squeezed(Complex(r.z), gamma, r.model, cfg.levels);
            const double dev = std::abs(nlcs::linear_entropy_series(state, bs) - r.entropy);
            series_dev = dev;
            if (dev > 1e-8) converged = false;
        }
        t.rows.push_back({r.model.name(), ab_cell_a(r.model), ab_cell_b(r.model), r.z,
                          cfg.gamma_re, cfg.gamma_im, r.entropy, converged, series_dev});
    }
    write_table(t, cfg);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// state-dump: coefficients of one built state plus metadata.
int run_state_dump(const RunConfig& cfg) {
    const auto models = parse_models(cfg.model_specs, {"harmonic"});
    if (models.size() != 1)
        throw std::invalid_argument("state-dump takes exactly one --model");
    const SpectrumModel& m = models.front();
    const Complex z(cfg.z_re, cfg.z_im);
    const Complex gamma = cfg_gamma(cfg);
    if (std::abs(gamma) >= 1.0) throw std::invalid_argument("state-dump requires |gamma| < 1");
    const auto state = nlcs::build_nonlinear_squeezed(z, gamma, m, cfg.levels);

    Table t;
    echo_common(t, "state-dump", cfg, models);
    t.add_config("z", cfg.z_re);
    t.add_config("z_im", cfg.z_im);
    t.add_config("gamma", cfg.gamma_re);
    t.add_config("gamma_im", cfg.gamma_im);
    t.add_config("tail_weight", state.tail_weight());
    t.add_config("converged", state.converged() ? "true" : "false");
    t.columns = {"n", "re", "im", "prob"};
    for (int n = 0; n <= state.truncation(); ++n) {
        const Complex c = state.amp(n);
        t.rows.push_back({n, c.real(), c.imag(), std::norm(c)});
    }
    write_table(t, cfg);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify: cross-path oracle suites with one pass/fail line each.
struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

SuiteResult verify_closed_forms(bool inject_fault) {
    double worst = 0.0;
    const std::vector<Complex> zs = {Complex(0.5), Complex(1.0, 0.3), Complex(2.0)};
    const std::vector<double> gammas = {0.1, 0.4, 0.9};

    const auto compare = [&](const SpectrumModel& m, Complex z, Complex g,
                             const auto& closed_form) {
        const auto table = nlcs::solve_recurrence(z, g, m, 40);
        const auto lef = m.log_e_factorials(40);
        for (int n = 0; n <= 40; ++n) {
            Complex rec = table.rescaled(n, -0.5 * lef[n]);
            if (inject_fault && n == 1) rec *= 1.01;  // negative-control hook: misseeded I_1
            const Complex cf = closed_form(z, g, n) * std::exp(-0.5 * lef[n]);
            worst = std::max(worst, std::abs(cf - rec) / std::abs(rec));
        }
    };

    const auto quad = SpectrumModel::quadratic();
    for (const auto& z : zs)
        for (double g : gammas)
            compare(quad, z, Complex(g), [](Complex zz, Complex gg, int n) {
                return nlcs::closed_form_quadratic(zz, gg, n);
            });
    for (const auto& [A, B] : std::vector<std::pair<double, double>>{{1.0, 1.0}, {1.0, 2.0}}) {
        const auto m = SpectrumModel::linear_quadratic(A, B);
        for (const auto& [z, g] :
             std::vector<std::pair<Complex, Complex>>{{Complex(0.8), Complex(0.5)},
                                                      {Complex(1.0, 0.3), Complex(0.3)}})
            compare(m, z, g, [A, B](Complex zz, Complex gg, int n) {
                return nlcs::closed_form_linear_quadratic(zz, gg, A, B, n);
            });
    }
    return {"closed-form-vs-recurrence", worst <= 1e-9,
            "max rel dev " + fmt_double(worst) + " (tol 1e-9)"};
}

SuiteResult verify_entropy_paths() {
    double worst = 0.0;
    const std::vector<SpectrumModel> models = {SpectrumModel::harmonic(),
                                               SpectrumModel::quadratic(),
                                               SpectrumModel::linear_quadratic(1.0, 2.0)};
    const std::vector<std::pair<Complex, double>> points = {
        {Complex(0.5), kPi / 2.0}, {Complex(1.2), 1.0}, {Complex(2.0), 2.2}};
    for (const auto& m : models) {
        for (const auto& [z, theta] : points) {
            const nlcs::BeamSplitterConfig bs(theta, 0.3);
            const auto state = nlcs::build_nonlinear_squeezed(z, Complex(0.5), m, 25);
            const double series = nlcs::linear_entropy_series(state, bs);
            const double matrix =
                nlcs::linear_entropy_matrix(nlcs::reduce_a(nlcs::split_state(state, bs)));
            worst = std::max(worst, std::abs(series - matrix));
        }
    }
    return {"series-vs-matrix-entropy", worst <= 1e-8,
            "max |dS| " + fmt_double(worst) + " (tol 1e-8)"};
}

SuiteResult verify_gamma_zero() {
    double worst = 0.0;
    const std::vector<SpectrumModel> models = {SpectrumModel::harmonic(),
                                               SpectrumModel::quadratic(),
                                               SpectrumModel::linear_quadratic(1.0, 1.0)};
    for (const auto& m : models) {
        for (const Complex z : {Complex(1.0), Complex(2.0, 0.5)}) {
            const auto squeezed = nlcs::build_nonlinear_squeezed(z, Complex(0.0), m, 40);
            const auto coherent = nlcs::build_nonlinear_coherent(z, m, 40);
            for (int n = 0; n <= 40; ++n)
                worst = std::max(worst, std::abs(squeezed.amp(n) - coherent.amp(n)));
        }
    }
    return {"gamma-zero-reduction", worst <= 1e-12,
            "max coeff dev " + fmt_double(worst) + " (tol 1e-12)"};
}

SuiteResult verify_normalization() {
    double worst = 0.0;
    const std::vector<nlcs::FockExpansion> states = {
        nlcs::build_coherent_canonical(Complex(1.0), 40),
        nlcs::build_squeezed_canonical(Complex(1.0), Complex(0.5), 40),
        nlcs::build_nonlinear_squeezed(Complex(1.0), Complex(0.5), SpectrumModel::quadratic(),
                                       40),
        nlcs::build_nonlinear_coherent(Complex(2.0), SpectrumModel::linear_quadratic(1.0, 1.0),
                                       40)};
    for (const auto& s : states) {
        double sum2 = 0.0;
        for (const auto& c : s.coeffs()) sum2 += std::norm(c);
        worst = std::max(worst, std::abs(sum2 - 1.0));
    }
    const auto coh = nlcs::build_coherent_canonical(Complex(1.0), 40);
    worst = std::max(worst, std::abs(std::abs(coh.amp(0)) - std::exp(-0.5)));
    return {"normalization", worst <= 1e-10, "max dev " + fmt_double(worst) + " (tol 1e-10)"};
}

SuiteResult verify_truncation_drift(int levels) {
    const nlcs::BeamSplitterConfig bs;
    const auto entropy = [&](int n) {
        const auto s = nlcs::build_nonlinear_squeezed(Complex(2.0), Complex(0.5),
                                                      SpectrumModel::quadratic(), n);
        return nlcs::linear_entropy_matrix(nlcs::reduce_a(nlcs::split_state(s, bs)));
    };
    const double drift = std::abs(entropy(levels) - entropy(levels + 20));
    return {"truncation-drift", drift <= 1e-6,
            "|S(N=" + std::to_string(levels) + ") - S(N=" + std::to_string(levels + 20) +
                ")| = " + fmt_double(drift) + " (tol 1e-6)"};
}

int run_verify(const RunConfig& cfg) {
    const std::vector<SuiteResult> results = {
        verify_closed_forms(cfg.inject_fault), verify_entropy_paths(), verify_gamma_zero(),
        verify_normalization(), verify_truncation_drift(cfg.levels)};
    int failures = 0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << '\n';
        if (!r.pass) ++failures;
    }
    std::cout << "verify: " << (results.size() - failures) << "/" << results.size()
              << " suites passed\n";
    return failures == 0 ? kExitOk : kExitNonConvergence;
}

void apply_preset(RunConfig& cfg, const CLI::App& sub) {
    const auto defaulted = [&](const std::string& opt) { return sub.count(opt) == 0; };
    if (cfg.preset == "fig1") {
        if (defaulted("--steps")) cfg.steps = 61;
    } else if (cfg.preset == "fig2") {
        if (defaulted("--steps")) cfg.steps = 7;
    } else if (cfg.preset == "fig3") {
        if (defaulted("--gamma")) cfg.gamma_re = 0.5;
    } else if (cfg.preset == "fig4a" || cfg.preset == "fig4b") {
        if (defaulted("--gamma")) cfg.gamma_re = (cfg.preset == "fig4b") ? 0.5 : 0.0;
        if (defaulted("--levels")) cfg.levels = 30;
        bool has_linquad = false;
        for (const auto& s : cfg.model_specs) has_linquad |= (s.rfind("linquad:", 0) == 0);
        if (!has_linquad)
            throw std::invalid_argument("preset " + cfg.preset +
                                        " needs at least one -m linquad:A,B (the A,B choice "
                                        "is deliberately left to the caller)");
        bool has_h = false, has_q = false;
        for (const auto& s : cfg.model_specs) {
            has_h |= (s == "harmonic");
            has_q |= (s == "quadratic");
        }
        if (!has_q) cfg.model_specs.insert(cfg.model_specs.begin(), "quadratic");
        if (!has_h) cfg.model_specs.insert(cfg.model_specs.begin(), "harmonic");
    }
    // fig1/fig2/fig3 model lists, z in [0,3], N = 40, theta = pi/2 and the
    // sqrt2 convention are already the built-in defaults.
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Truncated Fock-space states of generalized ladder operators: "
                 "quadratures, densities, and beam-splitter entanglement"};
    app.require_subcommand(1);
    RunConfig cfg;

    const auto add_output_opts = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        sub->add_option("-o,--output", cfg.output, "Output path ('-' for stdout)")
            ->capture_default_str();
        sub->add_option("--levels", cfg.levels, "Fock truncation level N")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };
    const auto add_model_opt = [&](CLI::App* sub) {
        sub->add_option("-m,--model", cfg.model_specs,
                        "Spectrum model: harmonic | quadratic | linquad:A,B (repeatable)");
    };
    const auto add_zgrid_opts = [&](CLI::App* sub) {
        sub->add_option("--z-min", cfg.z_min, "Grid start")->capture_default_str();
        sub->add_option("--z-max", cfg.z_max, "Grid end")->capture_default_str();
        sub->add_option("--steps", cfg.steps, "Grid point count")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };
    const auto add_gamma_opts = [&](CLI::App* sub) {
        sub->add_option("--gamma", cfg.gamma_re, "Squeezing parameter (real part), |gamma| < 1")
            ->capture_default_str();
        sub->add_option("--gamma-im", cfg.gamma_im, "Squeezing parameter (imaginary part)")
            ->capture_default_str();
    };

    CLI::App* dispersion =
        app.add_subcommand("dispersion", "Quadrature variances of coherent states over z");
    add_model_opt(dispersion);
    add_zgrid_opts(dispersion);
    add_output_opts(dispersion);
    dispersion->add_option("--convention", cfg.convention, "Quadrature normalization")
        ->check(CLI::IsMember({"half", "sqrt2"}))
        ->capture_default_str();
    dispersion->add_option("--preset", cfg.preset, "Bundled defaults")
        ->check(CLI::IsMember({"fig1"}));

    CLI::App* density =
        app.add_subcommand("density", "Position probability densities over a (z, x) grid");
    add_model_opt(density);
    add_zgrid_opts(density);
    add_output_opts(density);
    density->add_option("--x-min", cfg.x_min, "Position grid start")->capture_default_str();
    density->add_option("--x-max", cfg.x_max, "Position grid end")->capture_default_str();
    density->add_option("--x-steps", cfg.x_steps, "Position grid point count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    density->add_option("--preset", cfg.preset, "Bundled defaults")
        ->check(CLI::IsMember({"fig2"}));

    CLI::App* sweep = app.add_subcommand(
        "entropy-sweep", "Linear entropy of the beam-splitter output over z");
    add_model_opt(sweep);
    add_zgrid_opts(sweep);
    add_gamma_opts(sweep);
    add_output_opts(sweep);
    sweep->add_option("--theta", cfg.theta, "Beam-splitter angle in [0, pi]")
        ->capture_default_str();
    sweep->add_option("--phi", cfg.phi, "Reflected/transmitted phase")->capture_default_str();
    sweep->add_option("--preset", cfg.preset, "Bundled defaults")
        ->check(CLI::IsMember({"fig3", "fig4a", "fig4b"}));

    CLI::App* dump = app.add_subcommand("state-dump", "Coefficients of a single built state");
    add_model_opt(dump);
    add_gamma_opts(dump);
    add_output_opts(dump);
    dump->add_option("--z", cfg.z_re, "Eigenvalue z (real part)")->capture_default_str();
    dump->add_option("--z-im", cfg.z_im, "Eigenvalue z (imaginary part)")->capture_default_str();

    CLI::App* verify = app.add_subcommand(
        "verify", "Run the cross-path oracle suites; nonzero exit on failure");
    verify->add_option("--levels", cfg.levels, "Truncation for the drift check")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_flag("--inject-fault", cfg.inject_fault,
                     "Negative-control hook: misseed the recurrence comparison");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (dispersion->parsed()) {
            apply_preset(cfg, *dispersion);
            return run_dispersion(cfg);
        }
        if (density->parsed()) {
            apply_preset(cfg, *density);
            return run_density(cfg);
        }
        if (sweep->parsed()) {
            apply_preset(cfg, *sweep);
            return run_entropy_sweep(cfg);
        }
        if (dump->parsed()) return run_state_dump(cfg);
        if (verify->parsed()) return run_verify(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitConfig;
}
