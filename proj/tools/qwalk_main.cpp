#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qwalk/adjacency.hpp"
#include "qwalk/collective.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/initial_state.hpp"
#include "qwalk/measurement.hpp"
#include "qwalk/scenario.hpp"
#include "qwalk/search.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/state_space.hpp"
#include "qwalk/step_operator.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace qwalk;

// Exit codes: 0 ok, 2 bad parameters or input, 3 graph/scenario mismatch,
// 4 verification failure.
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Probabilities and residuals are emitted with 12 significant digits so
// tolerance checks stay scriptable.
double sig12(double v) { return std::strtod(fmt12(v).c_str(), nullptr); }

json jnum(double v) { return sig12(v); }

json jcomplex(Complex z) { return json{{"re", sig12(z.real())}, {"im", sig12(z.imag())}}; }

json jedge(const Edge& e) { return json::array({e.a, e.b}); }

double parse_phi(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty phi value");
    double sign = 1.0;
    if (s.front() == '+' || s.front() == '-') {
        if (s.front() == '-') sign = -1.0;
        s.erase(s.begin());
    }
    const std::size_t at = s.find("pi");
    auto full_number = [](const std::string& text) {
        if (text.empty()) throw std::invalid_argument("bad phi token");
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument("bad phi token: " + text);
        return v;
    };
    if (at == std::string::npos) return sign * full_number(s);
    std::string pre = s.substr(0, at);
    std::string post = s.substr(at + 2);
    if (!pre.empty() && pre.back() == '*') pre.pop_back();
    const double a = pre.empty() ? 1.0 : full_number(pre);
    double b = 1.0;
    if (!post.empty()) {
        if (post.front() != '/')
            throw std::invalid_argument("bad phi token: " + raw);
        b = full_number(post.substr(1));
        if (b == 0.0) throw std::invalid_argument("phi divides by zero");
    }
    return sign * a * std::numbers::pi / b;
}

struct CommonFlags {
    std::string scenario;
    int n = 0, m = 0, n1 = 0, n2 = 0;
    std::string phi = "pi";
    bool absent = false;
};

void add_scenario_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--scenario", f.scenario,
                    "star-loop | star-dummy-loops | star-clique | two-stars | "
                    "bipartite-extra (alias: bipartite) | bipartite-detect")
        ->required();
    cmd->add_option("--n", f.n, "external vertex count (star and two-star scenarios)");
    cmd->add_option("--m", f.m, "clique size (star-clique)");
    cmd->add_option("--n1", f.n1, "first bipartite set size");
    cmd->add_option("--n2", f.n2, "second bipartite set size");
    cmd->add_option("--phi", f.phi,
                    "dummy-loop phase in radians; accepts pi tokens (pi, -pi/3, 2pi/3, 0.5). "
                    "Default pi");
    cmd->add_flag("--absent", f.absent,
                  "bipartite-detect: build the null case without the extra edge");
}

ScenarioParams to_params(const CommonFlags& f) {
    ScenarioParams p;
    p.scenario = scenario_from_name(f.scenario);
    p.n = f.n;
    p.m = f.m;
    p.n1 = f.n1;
    p.n2 = f.n2;
    p.phi = parse_phi(f.phi);
    p.absent = f.absent;
    p.validate();
    return p;
}

json params_json(const ScenarioParams& p) {
    json j;
    j["scenario"] = scenario_name(p.scenario);
    switch (p.scenario) {
        case Scenario::StarLoop:
        case Scenario::TwoStars:
            j["n"] = p.n;
            break;
        case Scenario::StarDummyLoops:
            j["n"] = p.n;
            j["phi"] = jnum(p.phi);
            break;
        case Scenario::StarClique:
            j["n"] = p.n;
            j["m"] = p.m;
            break;
        case Scenario::BipartiteExtra:
            j["n1"] = p.n1;
            j["n2"] = p.n2;
            break;
        case Scenario::BipartiteDetect:
            j["n1"] = p.n1;
            j["n2"] = p.n2;
            j["absent"] = p.absent;
            break;
    }
    return j;
}

// Graphs supplied by file must contain every directed state of the canonical
// scenario graph; extra structure is allowed so tampered graphs still run.
void ensure_scenario_support(const Graph& g, const ScenarioParams& p) {
    const StateSpace have(g);
    const StateSpace want(scenario_graph(p));
    for (const DirectedEdgeState& st : want.states())
        if (!have.contains(st.tail, st.head))
            throw ScenarioMismatchError(
                "graph file lacks directed state |" + std::to_string(st.tail) + "," +
                std::to_string(st.head) + "> required by scenario " +
                scenario_name(p.scenario));
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

// ---- build ----------------------------------------------------------------

void cmd_build(const CommonFlags& flags, const std::string& out_path) {
    const ScenarioParams p = to_params(flags);
    const std::string text = write_adjacency_list(scenario_graph(p));
    if (out_path.empty())
        std::cout << text;
    else
        write_text(out_path, text);
}

// ---- search ---------------------------------------------------------------

void cmd_search(const CommonFlags& flags, int steps, const std::string& graph_path,
                bool with_baseline, int trials, std::uint64_t seed, int jobs) {
    const ScenarioParams p = to_params(flags);
    const Graph g = graph_path.empty() ? scenario_graph(p) : parse_adjacency_file(graph_path);
    if (!graph_path.empty()) ensure_scenario_support(g, p);

    const StateSpace space(g);
    const StepOperator u = build_step_operator(g, space);
    const StateVector psi0 =
        make_initial_state(g, space, scenario_initial_state(p.scenario), p);
    const int n_star = optimal_steps(p);
    const int run_steps = steps < 0 ? n_star : steps;
    const StateVector psi = evolve(u, psi0, run_steps);
    const EdgeDistribution dist = edge_probabilities(g, space, psi);

    const std::vector<Edge> targets = scenario_target_edges(p);
    double p_target = 0.0;
    for (const Edge& e : targets) p_target += dist.mass(e);
    const double p_hidden = dist.not_found;
    const double p_retry = retry_step(g, space, u, psi, targets);
    const auto [pred_target, pred_hidden] = predicted_probabilities(p);

    json out;
    out["schema"] = "qwalk-search/1";
    out["params"] = params_json(p);
    out["steps"] = run_steps;
    out["n_star"] = n_star;
    out["p_target"] = jnum(p_target);
    out["p_hidden"] = jnum(p_hidden);
    out["p_retry"] = jnum(p_retry);
    out["success_with_retry"] = jnum(p_target + p_hidden * p_retry);
    out["predicted_p_target"] = jnum(pred_target);
    out["predicted_p_hidden"] = jnum(pred_hidden);
    json edges = json::array();
    for (const Edge& e : targets) edges.push_back(jedge(e));
    out["target_edges"] = edges;
    json rows = json::array();
    for (const auto& [e, pr] : dist.probabilities) {
        if (g.is_hidden(e)) continue;  // hidden mass is reported as not_found
        rows.push_back(json{{"edge", jedge(e)}, {"p", jnum(pr)}});
    }
    out["distribution"] = rows;
    out["not_found"] = jnum(dist.not_found);

    if (with_baseline) {
        const Baseline base = classical_baseline(p, trials, seed, jobs);
        out["baseline"] = json{{"scan_length", base.scan_length},
                               {"certifying_entries", base.certifying_entries},
                               {"probes_expected", jnum(base.probes_expected)},
                               {"observed_mean", jnum(base.observed_mean)},
                               {"observed_se", jnum(base.observed_se)},
                               {"trials", base.trials}};
        const SpeedupReport sp = speedup_report(p);
        out["speedup"] = json{{"n_star", sp.n_star},
                              {"repetitions", sp.repetitions},
                              {"quantum_total", jnum(sp.quantum_total)},
                              {"classical_expected", jnum(sp.classical_expected)},
                              {"ratio", jnum(sp.ratio)},
                              {"success_per_rep", jnum(sp.success_per_rep)},
                              {"overall_success", jnum(sp.overall_success)}};
    }
    std::cout << out.dump(2) << "\n";
}

// ---- scan -----------------------------------------------------------------

void cmd_scan(const CommonFlags& flags, int n_max, const std::string& out_path) {
    const ScenarioParams p = to_params(flags);
    if (n_max < 1) throw std::invalid_argument("scan requires --n-max >= 1");
    const ScanResult scan = scan_success(p, n_max);

    std::ostringstream csv;
    csv << "n,p_target,p_hidden\n";
    for (const ScanRow& row : scan.rows)
        csv << row.n << ',' << fmt12(row.p_target) << ',' << fmt12(row.p_hidden) << '\n';

    json summary;
    summary["schema"] = "qwalk-scan/1";
    summary["params"] = params_json(p);
    summary["n_max"] = n_max;
    summary["rows"] = static_cast<int>(scan.rows.size());
    summary["best_n"] = scan.best_n;
    summary["best_success"] = jnum(scan.best_success);
    summary["predicted_n"] = scan.predicted_n;
    summary["csv"] = out_path.empty() ? "stdout" : out_path;

    // CSV is the payload: it owns stdout unless redirected to a file, in
    // which case the JSON summary takes stdout instead of stderr.
    if (out_path.empty()) {
        std::cout << csv.str();
        std::cerr << summary.dump(2) << "\n";
    } else {
        write_text(out_path, csv.str());
        std::cout << summary.dump(2) << "\n";
    }
}

// ---- verify ---------------------------------------------------------------

void cmd_verify(const CommonFlags& flags, const std::string& graph_path) {
    const ScenarioParams p = to_params(flags);
    double tol_unitarity = 1e-12, tol_invariance = 1e-10, tol_closed = 1e-12;
    if (const char* env = std::getenv("QWALK_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0.0))
            throw std::invalid_argument("QWALK_TOL must be a positive number");
        tol_unitarity = tol_invariance = tol_closed = v;
    }

    const Graph g = graph_path.empty() ? scenario_graph(p) : parse_adjacency_file(graph_path);
    const StateSpace space(g);
    const StepOperator u = build_step_operator(g, space);
    const double unitarity = unitarity_deviation(u);

    const CollectiveBasis basis = p.scenario == Scenario::TwoStars
                                      ? two_stars_w_basis(g, space, p)
                                      : collective_basis(g, space, p);
    const double invariance = verify_invariance(u, basis);
    const ReducedOperator reduced =
        reduce_operator(u, basis, std::numeric_limits<double>::infinity());
    const ReducedOperator closed = reduced_matrix_closed_form(p);
    const double closed_diff = (reduced.matrix - closed.matrix).cwiseAbs().maxCoeff();

    Eigen::MatrixXcd prediction_target;
    CharPoly poly_exact;
    if (p.scenario == Scenario::TwoStars) {
        const Eigen::MatrixXcd squared = reduced.matrix * reduced.matrix;
        prediction_target = squared.block(0, 0, 2, 2);
        poly_exact = characteristic_poly(prediction_target);
    } else {
        prediction_target = reduced.matrix;
        poly_exact = characteristic_poly(reduced.matrix);
    }
    const double poly_diff = max_coeff_diff(poly_exact, scenario_char_poly_closed_form(p));

    json pred_block;
    bool pred_ok = true;
    std::string pred_reason;
    try {
        const PerturbativePrediction pred = perturbative_prediction(p);
        const PredictionReport report = verify_prediction(prediction_target, pred);
        pred_block["lambda0"] = jcomplex(pred.lambda0);
        pred_block["theta"] = jnum(pred.theta);
        pred_block["lambda_plus"] = jcomplex(pred.lambda_plus);
        pred_block["lambda_minus"] = jcomplex(pred.lambda_minus);
        pred_block["lambda_plus_error"] = jnum(report.lambda_plus_error);
        pred_block["lambda_minus_error"] = jnum(report.lambda_minus_error);
        if (report.overlap_deficit_plus)
            pred_block["overlap_deficit_plus"] = jnum(*report.overlap_deficit_plus);
        if (report.overlap_deficit_minus)
            pred_block["overlap_deficit_minus"] = jnum(*report.overlap_deficit_minus);
    } catch (const std::exception& e) {
        pred_ok = false;
        pred_reason = e.what();
        pred_block = json{{"error", pred_reason}};
    }

    json checks = json::array();
    std::string failed;
    auto add_check = [&](const std::string& name, double value, double tol) {
        const bool pass = value <= tol;
        checks.push_back(json{{"name", name},
                              {"value", jnum(value)},
                              {"tolerance", jnum(tol)},
                              {"pass", pass}});
        if (!pass && failed.empty()) failed = name;
    };
    add_check("unitarity_deviation", unitarity, tol_unitarity);
    add_check("invariance_residual", invariance, tol_invariance);
    add_check("closed_form_max_diff", closed_diff, tol_closed);
    add_check("char_poly_max_diff", poly_diff, tol_closed);
    checks.push_back(json{{"name", "eigenvalue_prediction"}, {"pass", pred_ok}});
    if (!pred_ok && failed.empty()) failed = "eigenvalue_prediction";

    json out;
    out["schema"] = "qwalk-verify/1";
    out["params"] = params_json(p);
    if (!graph_path.empty()) out["graph"] = graph_path;
    out["checks"] = checks;
    out["prediction"] = pred_block;
    out["pass"] = failed.empty();
    std::cout << out.dump(2) << "\n";

    if (!failed.empty()) {
        std::string message = "verification failed: " + failed;
        if (!pred_ok) message += " (" + pred_reason + ")";
        throw VerificationFailure(message);
    }
}

// ---- detect ---------------------------------------------------------------

void cmd_detect(const CommonFlags& flags, int reps, std::uint64_t seed) {
    const ScenarioParams p = to_params(flags);
    const DetectResult res = detect_extra_edge(p, reps, seed);
    json out;
    out["schema"] = "qwalk-detect/1";
    out["params"] = params_json(p);
    out["seed"] = seed;
    out["reps"] = res.reps;
    out["hits"] = res.hits;
    out["present"] = res.present;
    out["confidence"] = jnum(res.confidence);
    std::cout << out.dump(2) << "\n";
}

// ---- baseline ---------------------------------------------------------------

void cmd_baseline(const CommonFlags& flags, int trials, std::uint64_t seed, int jobs) {
    const ScenarioParams p = to_params(flags);
    const Baseline base = classical_baseline(p, trials, seed, jobs);
    json out;
    out["schema"] = "qwalk-baseline/1";
    out["params"] = params_json(p);
    out["seed"] = seed;
    out["scan_length"] = base.scan_length;
    out["certifying_entries"] = base.certifying_entries;
    out["probes_expected"] = jnum(base.probes_expected);
    out["observed_mean"] = jnum(base.observed_mean);
    out["observed_se"] = jnum(base.observed_se);
    out["trials"] = base.trials;
    std::cout << out.dump(2) << "\n";
}

// ---- spectrum ---------------------------------------------------------------

void cmd_spectrum(const CommonFlags& flags) {
    const ScenarioParams p = to_params(flags);
    const ReducedOperator closed = reduced_matrix_closed_form(p);
    const Eigensystem sys = eigensystem(closed.matrix);
    const CharPoly poly = scenario_char_poly_closed_form(p);

    json out;
    out["schema"] = "qwalk-spectrum/1";
    out["params"] = params_json(p);
    out["labels"] = closed.labels;
    json values = json::array();
    for (Eigen::Index i = 0; i < sys.values.size(); ++i)
        values.push_back(jcomplex(sys.values(i)));
    out["eigenvalues"] = values;
    json coeffs = json::array();
    for (const Complex& c : poly.coeffs) coeffs.push_back(jcomplex(c));
    out["char_poly"] = coeffs;

    try {
        const PerturbativePrediction pred = perturbative_prediction(p);
        const Eigen::MatrixXcd target = p.scenario == Scenario::TwoStars
                                            ? Eigen::MatrixXcd(two_stars_u2_blocks(p.n).first)
                                            : closed.matrix;
        const PredictionReport report = verify_prediction(target, pred);
        json block;
        block["lambda0"] = jcomplex(pred.lambda0);
        block["theta"] = jnum(pred.theta);
        block["theta_approx"] = jnum(pred.theta_approx);
        block["lambda_plus"] = jcomplex(pred.lambda_plus);
        block["lambda_minus"] = jcomplex(pred.lambda_minus);
        block["lambda_plus_error"] = jnum(report.lambda_plus_error);
        block["lambda_minus_error"] = jnum(report.lambda_minus_error);
        if (report.overlap_deficit_plus)
            block["overlap_deficit_plus"] = jnum(*report.overlap_deficit_plus);
        if (report.overlap_deficit_minus)
            block["overlap_deficit_minus"] = jnum(*report.overlap_deficit_minus);
        out["prediction_available"] = true;
        out["prediction"] = block;
    } catch (const std::exception& e) {
        out["prediction_available"] = false;
        out["prediction_unavailable_reason"] = e.what();
    }
    std::cout << out.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "qwalk: scattering quantum walks that locate structural anomalies in graphs.\n"
        "Exit codes: 0 ok, 2 bad parameters, 3 graph/scenario mismatch, "
        "4 verification failure."};
    app.require_subcommand(1);

    CommonFlags build_flags;
    std::string build_out;
    CLI::App* build = app.add_subcommand(
        "build", "Write the scenario graph as an adjacency list (stdout or -o FILE)");
    add_scenario_flags(build, build_flags);
    build->add_option("-o,--output", build_out, "output file (default stdout)");
    build->callback([&] { cmd_build(build_flags, build_out); });

    CommonFlags search_flags;
    int search_steps = -1;
    std::string search_graph;
    bool search_baseline = false;
    int search_trials = 2000;
    std::uint64_t search_seed = 12345;
    int search_jobs = 1;
    CLI::App* search = app.add_subcommand(
        "search",
        "Run the walk and report probabilities as JSON. Fields: params, steps, n_star, "
        "p_target, p_hidden, p_retry, success_with_retry, predicted_p_target, "
        "predicted_p_hidden, target_edges, distribution (per visible edge), not_found; "
        "--with-baseline adds baseline{scan_length, certifying_entries, probes_expected, "
        "observed_mean, observed_se, trials} and speedup{n_star, repetitions, "
        "quantum_total, classical_expected, ratio, success_per_rep, overall_success}");
    add_scenario_flags(search, search_flags);
    search->add_option("--steps", search_steps,
                       "steps to run (default: the recommended n_star)");
    search->add_option("--graph", search_graph,
                       "adjacency-list file to run on instead of the built-in builder");
    search->add_flag("--with-baseline", search_baseline,
                     "include the classical scan baseline and the speedup summary");
    search->add_option("--trials", search_trials, "baseline Monte Carlo trials");
    search->add_option("--seed", search_seed, "baseline RNG seed");
    search->add_option("--jobs", search_jobs, "worker threads for baseline trials");
    search->callback([&] {
        cmd_search(search_flags, search_steps, search_graph, search_baseline,
                   search_trials, search_seed, search_jobs);
    });

    CommonFlags scan_flags;
    int scan_n_max = 0;
    std::string scan_out;
    CLI::App* scan = app.add_subcommand(
        "scan",
        "Success probability for every step count 0..n-max. CSV columns n,p_target,"
        "p_hidden; JSON summary fields: params, n_max, rows, best_n, best_success, "
        "predicted_n, csv. With -o the CSV goes to the file and the summary to stdout; "
        "otherwise CSV owns stdout and the summary goes to stderr");
    add_scenario_flags(scan, scan_flags);
    scan->add_option("--n-max", scan_n_max, "largest step count (>= 1)")->required();
    scan->add_option("-o,--output", scan_out, "CSV output file");
    scan->callback([&] { cmd_scan(scan_flags, scan_n_max, scan_out); });

    CommonFlags verify_flags;
    std::string verify_graph;
    CLI::App* verify = app.add_subcommand(
        "verify",
        "Check unitarity, subspace invariance, the closed-form reduced operator, its "
        "characteristic polynomial, and the eigenvalue prediction. JSON fields: params, "
        "checks[{name, value, tolerance, pass}], prediction, pass. QWALK_TOL overrides "
        "the default tolerances (1e-12 unitarity/closed-form, 1e-10 invariance). "
        "Exit 4 on any failed check");
    add_scenario_flags(verify, verify_flags);
    verify->add_option("--graph", verify_graph,
                       "verify this adjacency-list file against the scenario");
    verify->callback([&] { cmd_verify(verify_flags, verify_graph); });

    CommonFlags detect_flags;
    int detect_reps = 10;
    std::uint64_t detect_seed = 12345;
    CLI::App* detect = app.add_subcommand(
        "detect",
        "Presence test for the bipartite extra edge: one walk, --trials measurements; "
        "any not-found outcome certifies the edge. JSON fields: params, seed, reps, "
        "hits, present, confidence");
    add_scenario_flags(detect, detect_flags);
    detect->add_option("--trials", detect_reps, "measurement repetitions (default 10)");
    detect->add_option("--seed", detect_seed, "RNG seed");
    detect->callback([&] { cmd_detect(detect_flags, detect_reps, detect_seed); });

    CommonFlags baseline_flags;
    int baseline_trials = 2000;
    std::uint64_t baseline_seed = 12345;
    int baseline_jobs = 1;
    CLI::App* baseline = app.add_subcommand(
        "baseline",
        "Classical adjacency-scan cost for the scenario. JSON fields: params, seed, "
        "scan_length, certifying_entries, probes_expected, observed_mean, observed_se, "
        "trials");
    add_scenario_flags(baseline, baseline_flags);
    baseline->add_option("--trials", baseline_trials, "Monte Carlo trials (default 2000)");
    baseline->add_option("--seed", baseline_seed, "RNG seed");
    baseline->add_option("--jobs", baseline_jobs, "worker threads");
    baseline->callback(
        [&] { cmd_baseline(baseline_flags, baseline_trials, baseline_seed, baseline_jobs); });

    CommonFlags spectrum_flags;
    CLI::App* spectrum = app.add_subcommand(
        "spectrum",
        "Eigenvalues and characteristic polynomial of the reduced step operator, plus "
        "the degenerate-pair prediction when one exists. JSON fields: params, labels, "
        "eigenvalues, char_poly, prediction_available, prediction");
    add_scenario_flags(spectrum, spectrum_flags);
    spectrum->callback([&] { cmd_spectrum(spectrum_flags); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ScenarioMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const VerificationFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
