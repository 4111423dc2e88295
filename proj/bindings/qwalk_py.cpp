#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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

namespace py = pybind11;

namespace {

using namespace qwalk;

ScenarioParams make_params(const std::string& scenario, int n, int m, int n1, int n2,
                           double phi, bool absent) {
    ScenarioParams p;
    p.scenario = scenario_from_name(scenario);
    p.n = n;
    p.m = m;
    p.n1 = n1;
    p.n2 = n2;
    p.phi = phi;
    p.absent = absent;
    p.validate();
    return p;
}

CollectiveBasis scenario_basis(const Graph& g, const StateSpace& space,
                               const ScenarioParams& p) {
    return p.scenario == Scenario::TwoStars ? two_stars_w_basis(g, space, p)
                                            : collective_basis(g, space, p);
}

void bind_graph(py::module_& m) {
    py::class_<Edge>(m, "Edge")
        .def(py::init<VertexId, VertexId>(), py::arg("a"), py::arg("b"))
        .def_readonly("a", &Edge::a)
        .def_readonly("b", &Edge::b)
        .def("is_loop", &Edge::is_loop)
        .def("__eq__", [](const Edge& e, const Edge& o) { return e == o; })
        .def("__lt__", [](const Edge& e, const Edge& o) { return e < o; })
        .def("__hash__",
             [](const Edge& e) {
                 return (static_cast<std::uint64_t>(e.a) << 32) | e.b;
             })
        .def("__repr__", [](const Edge& e) {
            return "Edge(" + std::to_string(e.a) + ", " + std::to_string(e.b) + ")";
        });

    py::class_<Graph>(m, "Graph")
        .def("vertices", &Graph::vertices)
        .def("edges", &Graph::edges)
        .def("hidden_edges",
             [](const Graph& g) {
                 return std::vector<Edge>(g.hidden().begin(), g.hidden().end());
             })
        .def("num_vertices", &Graph::num_vertices)
        .def("num_edges", &Graph::num_edges)
        .def("degree", &Graph::degree)
        .def("has_edge",
             [](const Graph& g, VertexId a, VertexId b) { return g.has_edge(a, b); },
             py::arg("a"), py::arg("b"))
        .def("with_extra_edge",
             [](const Graph& g, VertexId a, VertexId b) {
                 return g.with_extra_edge(Edge(a, b));
             },
             py::arg("a"), py::arg("b"))
        .def("__eq__", [](const Graph& g, const Graph& o) { return g == o; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(" + std::to_string(g.num_vertices()) + " vertices, " +
                   std::to_string(g.num_edges()) + " edges)";
        });

    py::class_<ScenarioParams>(m, "ScenarioParams")
        .def_property_readonly(
            "scenario", [](const ScenarioParams& p) { return scenario_name(p.scenario); })
        .def_readonly("n", &ScenarioParams::n)
        .def_readonly("m", &ScenarioParams::m)
        .def_readonly("n1", &ScenarioParams::n1)
        .def_readonly("n2", &ScenarioParams::n2)
        .def_readonly("phi", &ScenarioParams::phi)
        .def_readonly("absent", &ScenarioParams::absent)
        .def("__repr__", [](const ScenarioParams& p) {
            return std::string("ScenarioParams(") + scenario_name(p.scenario) + ")";
        });

    m.def("params", &make_params, py::arg("scenario"), py::arg("n") = 0, py::arg("m") = 0,
          py::arg("n1") = 0, py::arg("n2") = 0, py::arg("phi") = 0.0,
          py::arg("absent") = false,
          "Validated scenario parameters; scenario by name (e.g. 'star-loop')");
    m.def("build_graph", &scenario_graph, py::arg("params"));
    m.def("target_edges", &scenario_target_edges, py::arg("params"),
          "Edges that certify success when the walker is measured there");
    m.def("parse_adjacency_list", &parse_adjacency_list, py::arg("text"));
    m.def("write_adjacency_list", &write_adjacency_list, py::arg("graph"));
}

void bind_walk(py::module_& m) {
    m.def(
        "directed_states",
        [](const Graph& g) {
            const StateSpace space(g);
            std::vector<std::pair<VertexId, VertexId>> out;
            out.reserve(space.dim());
            for (const DirectedEdgeState& st : space.states())
                out.emplace_back(st.tail, st.head);
            return out;
        },
        py::arg("graph"),
        "Canonical (tail, head) enumeration backing all state vectors");
    m.def(
        "step_matrix",
        [](const Graph& g) {
            const StateSpace space(g);
            return Eigen::MatrixXcd(build_step_operator(g, space).matrix);
        },
        py::arg("graph"), "Dense one-step unitary over the directed edge states");
    m.def(
        "unitarity_deviation",
        [](const Graph& g) {
            const StateSpace space(g);
            return unitarity_deviation(build_step_operator(g, space));
        },
        py::arg("graph"));
    m.def(
        "initial_state",
        [](const ScenarioParams& p) {
            const Graph g = scenario_graph(p);
            const StateSpace space(g);
            return Eigen::VectorXcd(
                make_initial_state(g, space, scenario_initial_state(p.scenario), p));
        },
        py::arg("params"), "The scenario's standard initial state vector");
    m.def(
        "evolve_distribution",
        [](const ScenarioParams& p, int steps) {
            const Graph g = scenario_graph(p);
            const StateSpace space(g);
            const StepOperator u = build_step_operator(g, space);
            const StateVector psi = evolve(
                u, make_initial_state(g, space, scenario_initial_state(p.scenario), p),
                steps);
            const EdgeDistribution dist = edge_probabilities(g, space, psi);
            std::vector<std::tuple<VertexId, VertexId, double>> rows;
            rows.reserve(dist.probabilities.size());
            for (const auto& [e, pr] : dist.probabilities) {
                if (g.is_hidden(e)) continue;  // hidden mass is reported as not_found
                rows.emplace_back(e.a, e.b, pr);
            }
            return py::make_tuple(rows, dist.not_found);
        },
        py::arg("params"), py::arg("steps"),
        "((a, b, probability) per visible edge, not_found mass) after `steps`");
}

void bind_reduced(py::module_& m) {
    m.def(
        "reduced_matrix",
        [](const ScenarioParams& p) { return reduced_matrix_closed_form(p).matrix; },
        py::arg("params"), "Closed-form reduced step matrix (two-stars: the w basis)");
    m.def(
        "reduced_labels",
        [](const ScenarioParams& p) { return reduced_matrix_closed_form(p).labels; },
        py::arg("params"));
    m.def(
        "reduced_from_full",
        [](const ScenarioParams& p) {
            const Graph g = scenario_graph(p);
            const StateSpace space(g);
            const StepOperator u = build_step_operator(g, space);
            return reduce_operator(u, scenario_basis(g, space, p)).matrix;
        },
        py::arg("params"),
        "Reduced step matrix computed from the full operator; matches reduced_matrix");
    m.def(
        "invariance_residual",
        [](const Graph& g, const ScenarioParams& p) {
            const StateSpace space(g);
            return verify_invariance(build_step_operator(g, space),
                                     scenario_basis(g, space, p));
        },
        py::arg("graph"), py::arg("params"),
        "How far the step operator leaks out of the scenario's collective subspace");
}

void bind_spectral(py::module_& m) {
    m.def(
        "char_poly",
        [](const Eigen::MatrixXcd& mat) { return characteristic_poly(mat).coeffs; },
        py::arg("matrix"), "Monic characteristic polynomial, highest degree first");
    m.def(
        "char_poly_closed_form",
        [](const ScenarioParams& p) { return scenario_char_poly_closed_form(p).coeffs; },
        py::arg("params"));
    m.def(
        "eigenvalues",
        [](const Eigen::MatrixXcd& mat) { return Eigen::VectorXcd(eigensystem(mat).values); },
        py::arg("matrix"), "Eigenvalues sorted by principal argument");

    py::class_<PerturbativePrediction>(m, "PerturbativePrediction")
        .def_readonly("lambda0", &PerturbativePrediction::lambda0)
        .def_readonly("theta", &PerturbativePrediction::theta)
        .def_readonly("theta_approx", &PerturbativePrediction::theta_approx)
        .def_readonly("delta_plus", &PerturbativePrediction::delta_plus)
        .def_readonly("delta_minus", &PerturbativePrediction::delta_minus)
        .def_readonly("lambda_plus", &PerturbativePrediction::lambda_plus)
        .def_readonly("lambda_minus", &PerturbativePrediction::lambda_minus)
        .def_readonly("eigvec_plus", &PerturbativePrediction::eigvec_plus)
        .def_readonly("eigvec_minus", &PerturbativePrediction::eigvec_minus);
    m.def("perturbative_prediction", &perturbative_prediction, py::arg("params"));

    py::class_<PredictionReport>(m, "PredictionReport")
        .def_readonly("lambda_plus_error", &PredictionReport::lambda_plus_error)
        .def_readonly("lambda_minus_error", &PredictionReport::lambda_minus_error)
        .def_readonly("overlap_deficit_plus", &PredictionReport::overlap_deficit_plus)
        .def_readonly("overlap_deficit_minus", &PredictionReport::overlap_deficit_minus);
    m.def("verify_prediction", &verify_prediction, py::arg("matrix"), py::arg("prediction"));
}

void bind_search(py::module_& m) {
    py::enum_<InitialStateKind>(m, "InitialStateKind")
        .value("ANTISYMMETRIC_UNIFORM", InitialStateKind::AntisymmetricUniform)
        .value("UNIFORM_ALL_WITH_LOOPS", InitialStateKind::UniformAllWithLoops)
        .value("TWO_STAR_SIGNED", InitialStateKind::TwoStarSigned)
        .value("TWO_STAR_OUTGOING_SIGNED", InitialStateKind::TwoStarOutgoingSigned);

    py::class_<SearchResult>(m, "SearchResult")
        .def_readonly("steps", &SearchResult::steps)
        .def_readonly("n_star", &SearchResult::n_star)
        .def_readonly("target_edges", &SearchResult::target_edges)
        .def_readonly("p_target", &SearchResult::p_target)
        .def_readonly("p_hidden", &SearchResult::p_hidden)
        .def_readonly("p_retry", &SearchResult::p_retry)
        .def_readonly("predicted_p_target", &SearchResult::predicted_p_target)
        .def_readonly("predicted_p_hidden", &SearchResult::predicted_p_hidden);

    py::class_<ScanRow>(m, "ScanRow")
        .def_readonly("n", &ScanRow::n)
        .def_readonly("p_target", &ScanRow::p_target)
        .def_readonly("p_hidden", &ScanRow::p_hidden);
    py::class_<ScanResult>(m, "ScanResult")
        .def_readonly("rows", &ScanResult::rows)
        .def_readonly("best_n", &ScanResult::best_n)
        .def_readonly("best_success", &ScanResult::best_success)
        .def_readonly("predicted_n", &ScanResult::predicted_n);

    py::class_<DetectResult>(m, "DetectResult")
        .def_readonly("present", &DetectResult::present)
        .def_readonly("reps", &DetectResult::reps)
        .def_readonly("hits", &DetectResult::hits)
        .def_readonly("confidence", &DetectResult::confidence);
    py::class_<TrialFrequency>(m, "TrialFrequency")
        .def_readonly("trials", &TrialFrequency::trials)
        .def_readonly("flagged", &TrialFrequency::flagged)
        .def_readonly("frequency", &TrialFrequency::frequency);

    py::class_<Baseline>(m, "Baseline")
        .def_readonly("scan_length", &Baseline::scan_length)
        .def_readonly("certifying_entries", &Baseline::certifying_entries)
        .def_readonly("probes_expected", &Baseline::probes_expected)
        .def_readonly("observed_mean", &Baseline::observed_mean)
        .def_readonly("observed_se", &Baseline::observed_se)
        .def_readonly("trials", &Baseline::trials);

    py::class_<SpeedupReport>(m, "SpeedupReport")
        .def_readonly("n_star", &SpeedupReport::n_star)
        .def_readonly("repetitions", &SpeedupReport::repetitions)
        .def_readonly("quantum_total", &SpeedupReport::quantum_total)
        .def_readonly("classical_expected", &SpeedupReport::classical_expected)
        .def_readonly("ratio", &SpeedupReport::ratio)
        .def_readonly("success_per_rep", &SpeedupReport::success_per_rep)
        .def_readonly("overall_success", &SpeedupReport::overall_success);

    m.def("optimal_steps", &optimal_steps, py::arg("params"));
    m.def("predicted_probabilities", &predicted_probabilities, py::arg("params"),
          "(target mass, hidden mass) the theory predicts at the peak");
    // The enum overload comes first and `steps` refuses conversions; otherwise
    // an InitialStateKind argument would quietly convert to a step count.
    m.def("run_search",
          py::overload_cast<const ScenarioParams&, InitialStateKind, int>(&run_search),
          py::arg("params"), py::arg("initial_state"),
          py::arg("steps").noconvert() = -1);
    m.def("run_search",
          py::overload_cast<const ScenarioParams&, int>(&run_search), py::arg("params"),
          py::arg("steps").noconvert() = -1);
    m.def("scan_success", &scan_success, py::arg("params"), py::arg("n_max"));
    m.def("detect_extra_edge", &detect_extra_edge, py::arg("params"), py::arg("reps"),
          py::arg("seed"));
    m.def("detect_trial_frequency", &detect_trial_frequency, py::arg("params"),
          py::arg("reps"), py::arg("trials"), py::arg("seed"), py::arg("jobs") = 1);
    m.def("classical_baseline", &classical_baseline, py::arg("params"), py::arg("trials"),
          py::arg("seed"), py::arg("jobs") = 1);
    m.def("speedup_report", &speedup_report, py::arg("params"));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Scattering quantum walks that locate structural anomalies in graphs";
    py::register_exception<ScenarioMismatchError>(m, "ScenarioMismatch");
    bind_graph(m);
    bind_walk(m);
    bind_reduced(m);
    bind_spectral(m);
    bind_search(m);
}
