#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <limits>
#include <nlohmann/json.hpp>
#include <numbers>
#include <optional>
#include <ostream>

#include "annulus/boundary.hpp"
#include "annulus/errors.hpp"
#include "annulus/field.hpp"
#include "annulus/hadamard.hpp"
#include "annulus/io.hpp"
#include "annulus/kernels.hpp"
#include "annulus/oracle.hpp"

namespace annulus::cli {

namespace {

using nlohmann::json;

struct RunConfig {
    std::string command;
    double inner_radius = 0.25;
    std::string grid_r;
    int grid_phi = 16;
    QuadratureSpec quadrature;
    std::optional<double> lambda_cutoff;
    std::optional<int> lambda_nodes;
    std::string mode = "modal";
    std::optional<double> gain_cap;
    double probe_r = 0.5;
    double sobolev = 0.0;
    std::string out_path;
    std::string input_path;
    std::string g_samples;
    std::string h_samples;
    std::optional<int> degree;
    std::string report_path;
    std::string n_list = "5:45:2";
    std::string solver = "oracle";
    std::optional<double> truncate;
    std::string field_a;
    std::string field_b;
    unsigned threads = 1;
};

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

int parse_int(std::string_view text, const char* field) {
    const double v = io::parse_number(text, field);
    if (v != std::floor(v) || std::abs(v) > 1e9) {
        throw SchemaError(field, "expected an integer, got '" + std::string(text) + "'");
    }
    return static_cast<int>(v);
}

PolarGrid make_grid(const RunConfig& cfg, const Annulus& annulus) {
    if (cfg.grid_r.empty()) return PolarGrid::interior(annulus.inner_radius(), 5, cfg.grid_phi);
    const auto parts = split(cfg.grid_r, ':');
    if (parts.size() != 3) throw SchemaError("grid-r", "expected a:b:n");
    const double first = io::parse_number(parts[0], "grid-r");
    const double last = io::parse_number(parts[1], "grid-r");
    const int count = parse_int(parts[2], "grid-r");
    PolarGrid grid{PolarGrid::linspace(first, last, count), PolarGrid::periodic_angles(cfg.grid_phi)};
    for (double r : grid.radii) annulus.require_interior(r, "grid-r");
    return grid;
}

std::vector<int> parse_n_list(std::string_view text) {
    std::vector<int> out;
    if (text.find(':') != std::string_view::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 2 && parts.size() != 3) throw SchemaError("n-list", "expected a:b or a:b:step");
        const int first = parse_int(parts[0], "n-list");
        const int last = parse_int(parts[1], "n-list");
        const int step = parts.size() == 3 ? parse_int(parts[2], "n-list") : 1;
        if (step < 1) throw SchemaError("n-list", "step must be >= 1");
        for (int n = first; n <= last; n += step) out.push_back(n);
    } else {
        for (auto item : split(text, ',')) out.push_back(parse_int(item, "n-list"));
    }
    if (out.empty()) throw SchemaError("n-list", "no mode indices");
    return out;
}

QuadratureSpec quadrature_of(const RunConfig& cfg) {
    QuadratureSpec spec = cfg.quadrature;
    spec.lambda_cutoff = cfg.lambda_cutoff;
    spec.lambda_nodes = cfg.lambda_nodes;
    spec.validate();
    return spec;
}

Theorem2Mode mode_of(const RunConfig& cfg) {
    return cfg.mode == "quadrature" ? Theorem2Mode::quadrature : Theorem2Mode::modal;
}

CauchyData load_data(const RunConfig& cfg) {
    if (!cfg.input_path.empty()) return io::parse_cauchy_data(io::read_file(cfg.input_path));
    if (cfg.g_samples.empty() && cfg.h_samples.empty()) {
        throw SchemaError("input", "no boundary data: pass --input or --g-samples/--h-samples");
    }
    if (!cfg.degree) throw SchemaError("degree", "--degree is required with sample files");
    auto from_samples = [&](const std::string& path) {
        if (path.empty()) return TrigSeries::constant(0.0);
        return coeffs_from_samples(io::parse_samples_csv(io::read_file(path)), *cfg.degree);
    };
    return {from_samples(cfg.g_samples), from_samples(cfg.h_samples)};
}

void emit(const RunConfig& cfg, const std::string& content, std::ostream& out) {
    if (cfg.out_path.empty()) {
        out << content;
    } else {
        io::write_file_atomic(cfg.out_path, content);
    }
}

std::string compare_json(const Field& a, const Field& b) {
    if (a.values().size() != b.values().size() || a.radii() != b.radii() || a.angles() != b.angles()) {
        throw SchemaError("field", "fields are not on the same grid");
    }
    double max_abs = 0.0, sum_abs = 0.0;
    for (std::size_t k = 0; k < a.values().size(); ++k) {
        const double d = std::abs(a.values()[k] - b.values()[k]);
        max_abs = std::max(max_abs, d);
        sum_abs += d;
    }
    const double mean_abs = a.values().empty() ? 0.0 : sum_abs / static_cast<double>(a.values().size());
    json doc{{"a", a.solver_tag()},
             {"b", b.solver_tag()},
             {"points", a.values().size()},
             {"max_abs", max_abs},
             {"mean_abs", mean_abs}};
    return doc.dump(2) + "\n";
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Annulus annulus(cfg.inner_radius);

    if (cfg.command == "solve" || cfg.command == "oracle") {
        const CauchyData data = load_data(cfg);
        const PolarGrid grid = make_grid(cfg, annulus);
        if (cfg.command == "solve") {
            const Field field = solve_cauchy_eq3(data, annulus, grid, quadrature_of(cfg), mode_of(cfg), cfg.threads);
            emit(cfg, io::to_csv(field), out);
        } else if (cfg.gain_cap) {
            const FilteredSolution filtered =
                solve_cauchy_filtered(data, annulus, grid, FilterSpec{cfg.probe_r, *cfg.gain_cap}, cfg.threads);
            emit(cfg, io::to_csv(filtered.field), out);
            const std::string report = io::to_json(filtered.dropped) + "\n";
            if (cfg.report_path.empty()) {
                err << "dropped modes: " << report;
            } else {
                io::write_file_atomic(cfg.report_path, report);
            }
        } else {
            emit(cfg, io::to_csv(solve_cauchy_oracle(data, annulus, grid, cfg.threads)), out);
        }
        return kExitOk;
    }

    if (cfg.command == "compare") {
        if (!cfg.field_a.empty() || !cfg.field_b.empty()) {
            if (cfg.field_a.empty() || cfg.field_b.empty()) {
                throw SchemaError("field-b", "--field-a and --field-b go together");
            }
            const Field a = io::parse_field_csv(io::read_file(cfg.field_a));
            const Field b = io::parse_field_csv(io::read_file(cfg.field_b));
            emit(cfg, compare_json(a, b), out);
            return kExitOk;
        }
        const CauchyData data = load_data(cfg);
        const PolarGrid grid = make_grid(cfg, annulus);
        const Field solved = solve_cauchy_eq3(data, annulus, grid, quadrature_of(cfg), mode_of(cfg), cfg.threads);
        const Field reference = solve_cauchy_oracle(data, annulus, grid, cfg.threads);
        emit(cfg, compare_json(solved, reference), out);
        return kExitOk;
    }

    if (cfg.command == "reconstruct") {
        if (cfg.input_path.empty()) throw SchemaError("input", "--input Laurent JSON is required");
        const LaurentPoly f = io::parse_laurent(io::read_file(cfg.input_path));
        const QuadratureSpec spec = quadrature_of(cfg);
        const PolarGrid grid = make_grid(cfg, annulus);
        const AnalyticBoundary boundary =
            AnalyticBoundary::sample(f, 1.0, annulus.inner_radius(), spec.angular_nodes);
        const double max_modulus = f.max_modulus(annulus.inner_radius(), 1.0);

        json points = json::array();
        double max_error = 0.0;
        for (double r : grid.radii) {
            for (double phi : grid.angles) {
                const Complex z = std::polar(r, phi);
                const Complex value = cfg.truncate
                                          ? partial_reconstruct(boundary, z, *cfg.truncate, annulus, spec)
                                          : reconstruct_analytic(boundary, z, annulus, spec);
                const Complex exact = f(z);
                const double error = std::abs(value - exact);
                max_error = std::max(max_error, error);
                json point{{"r", r},           {"phi", phi},           {"re", value.real()},
                           {"im", value.imag()}, {"exact_re", exact.real()}, {"exact_im", exact.imag()},
                           {"abs_error", error}};
                if (cfg.truncate) {
                    point["bound"] = truncation_bound(max_modulus, r, annulus.inner_radius(), *cfg.truncate);
                }
                points.push_back(std::move(point));
            }
        }
        json doc{{"max_abs_error", max_error}, {"max_modulus", max_modulus}, {"points", std::move(points)}};
        if (cfg.truncate) doc["truncation"] = *cfg.truncate;
        emit(cfg, doc.dump(2) + "\n", out);
        return kExitOk;
    }

    if (cfg.command == "hadamard-demo") {
        const auto modes = parse_n_list(cfg.n_list);
        const HadamardSolver solver =
            cfg.solver == "eq3-modal" ? HadamardSolver::eq3_modal : HadamardSolver::oracle;
        const auto rows = instability_table(modes, SobolevOrder(cfg.sobolev), cfg.probe_r, solver, annulus,
                                            quadrature_of(cfg));
        emit(cfg, io::to_csv(rows), out);
        return kExitOk;
    }

    err << "error: unknown command '" << cfg.command << "'\n";
    return kExitSchema;
}

void add_common(CLI::App& app, RunConfig& cfg) {
    app.add_option("--inner-radius", cfg.inner_radius, "Inner radius rho of the ring rho < |z| < 1");
    app.add_option("--grid-r", cfg.grid_r, "Radii as a:b:n (inclusive); default 5 interior radii");
    app.add_option("--grid-phi", cfg.grid_phi, "Number of equispaced angles");
    app.add_option("--laguerre", cfg.quadrature.laguerre_order, "Gauss-Laguerre order Q");
    app.add_option("--angular", cfg.quadrature.angular_nodes, "Periodic trapezoid nodes M");
    app.add_option("--lambda-cutoff", cfg.lambda_cutoff, "Lambda truncation; default (N+40)/r_min");
    app.add_option("--lambda-nodes", cfg.lambda_nodes, "Composite-rule nodes on [0, Lambda]");
    app.add_option("--mode", cfg.mode, "Evaluator for the Neumann-data part: modal or quadrature")->check(CLI::IsMember({"modal", "quadrature"}));
    app.add_option("--threads", cfg.threads, "Worker threads for grid evaluation");
    app.add_option("--out", cfg.out_path, "Output path (default stdout)");
}

void add_data(CLI::App& app, RunConfig& cfg) {
    app.add_option("--input", cfg.input_path, "Cauchy data JSON {\"g\": ..., \"h\": ...}");
    app.add_option("--g-samples", cfg.g_samples, "CSV samples of g at 2 pi j / M");
    app.add_option("--h-samples", cfg.h_samples, "CSV samples of h at 2 pi j / M");
    app.add_option("--degree", cfg.degree, "Fourier degree recovered from sample files");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Cauchy problem for the Laplace equation in an annulus"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "Evaluate the integral representation on a polar grid");
    add_common(*solve, cfg);
    add_data(*solve, cfg);

    auto* oracle = app.add_subcommand("oracle", "Evaluate the separation-of-variables solution");
    add_common(*oracle, cfg);
    add_data(*oracle, cfg);
    oracle->add_option("--gain-cap", cfg.gain_cap, "Drop modes whose gain at --probe-r exceeds this");
    oracle->add_option("--probe-r", cfg.probe_r, "Radius at which mode gains are measured");
    oracle->add_option("--report", cfg.report_path, "Dropped-mode JSON report path (default stderr)");

    auto* compare = app.add_subcommand("compare", "Discrepancy between two fields as JSON");
    add_common(*compare, cfg);
    add_data(*compare, cfg);
    compare->add_option("--field-a", cfg.field_a, "Compare two saved field CSVs instead of solving");
    compare->add_option("--field-b", cfg.field_b);

    auto* reconstruct = app.add_subcommand("reconstruct", "Ring reconstruction of a Laurent polynomial");
    add_common(*reconstruct, cfg);
    reconstruct->add_option("--input", cfg.input_path, "Laurent JSON {\"powers\", \"re\", \"im\"}");
    reconstruct->add_option("--truncate", cfg.truncate, "Restrict the eps integrals to [0, N]");

    auto* demo = app.add_subcommand("hadamard-demo", "Instability table for the Hadamard sequence");
    add_common(*demo, cfg);
    demo->add_option("--n-list", cfg.n_list, "Mode indices as a:b[:step] or a,b,c");
    demo->add_option("--sobolev", cfg.sobolev, "Sobolev order s of the data norm");
    demo->add_option("--probe-r", cfg.probe_r, "Radius of the probed circle");
    demo->add_option("--solver", cfg.solver, "oracle or eq3-modal")
        ->check(CLI::IsMember({"oracle", "eq3-modal"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitSchema;
    }
    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

    try {
        return execute(cfg, out, err);
    } catch (const GuardError& e) {
        err << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const SchemaError& e) {
        err << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace annulus::cli
