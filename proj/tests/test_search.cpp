#include <cmath>

#include "doctest.h"
#include "qwalk/search.hpp"

using namespace qwalk;

namespace {

ScenarioParams make(Scenario s, int n = 0, int m = 0, int n1 = 0, int n2 = 0,
                    double phi = 0.0) {
    ScenarioParams p;
    p.scenario = s;
    p.n = n;
    p.m = m;
    p.n1 = n1;
    p.n2 = n2;
    p.phi = phi;
    return p;
}

constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("recommended step counts at reference sizes") {
    CHECK(optimal_steps(make(Scenario::StarLoop, 100)) == 19);
    CHECK(optimal_steps(make(Scenario::StarLoop, 400)) == 38);
    CHECK(optimal_steps(make(Scenario::StarDummyLoops, 400, 0, 0, 0, kPi)) == 38);
    CHECK(optimal_steps(make(Scenario::StarClique, 100, 3)) == 10);
    CHECK(optimal_steps(make(Scenario::StarClique, 400, 3)) == 20);
    CHECK(optimal_steps(make(Scenario::TwoStars, 100)) == 16);
    CHECK(optimal_steps(make(Scenario::TwoStars, 400)) == 32);  // always even
    CHECK(optimal_steps(make(Scenario::BipartiteExtra, 0, 0, 200, 4)) == 27);
    CHECK(optimal_steps(make(Scenario::BipartiteExtra, 0, 0, 100, 4)) == 19);
    CHECK(optimal_steps(make(Scenario::BipartiteExtra, 0, 0, 1600, 4)) == 77);
}

TEST_CASE("design-point probabilities") {
    auto sl = predicted_probabilities(make(Scenario::StarLoop, 400));
    CHECK(sl.first == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(sl.second == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    auto cl = predicted_probabilities(make(Scenario::StarClique, 400, 4));
    CHECK(cl.first == doctest::Approx(6.0 / 7.0).epsilon(1e-12));
    CHECK(cl.second == doctest::Approx(1.0 / 7.0).epsilon(1e-12));

    auto ts = predicted_probabilities(make(Scenario::TwoStars, 400));
    CHECK(ts.first == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ts.second == 0.0);

    auto bp = predicted_probabilities(make(Scenario::BipartiteExtra, 0, 0, 200, 4));
    CHECK(bp.first == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(bp.second == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("star-loop search concentrates two thirds on the marked spoke") {
    SearchResult r = run_search(make(Scenario::StarLoop, 400));
    CHECK(r.steps == 38);
    CHECK(r.n_star == 38);
    CHECK(r.target_edges == std::vector<Edge>{Edge(0, 1)});
    CHECK(r.p_target == doctest::Approx(0.678992973890).epsilon(1e-9));
    CHECK(r.p_hidden == doctest::Approx(0.320188339696).epsilon(1e-9));
    CHECK(r.p_retry == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(r.p_target - 2.0 / 3.0) <= 0.08);
    CHECK(std::abs(r.p_hidden - 1.0 / 3.0) <= 0.08);
    CHECK(r.p_target + r.p_hidden * r.p_retry >= 0.9);
}

TEST_CASE("search can run an explicit number of steps") {
    SearchResult r = run_search(make(Scenario::StarLoop, 100), 0);
    CHECK(r.steps == 0);
    CHECK(r.n_star == 19);
    // the uniform start has exactly 2/(2N) of its mass on the marked spoke
    CHECK(r.p_target == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(r.p_hidden == 0.0);
    CHECK(r.p_retry == 0.0);  // nothing to collapse onto yet
}

TEST_CASE("dummy-loop search succeeds almost surely at phase pi") {
    SearchResult r = run_search(make(Scenario::StarDummyLoops, 400, 0, 0, 0, kPi));
    CHECK(r.steps == 38);
    CHECK(r.p_target == doctest::Approx(0.997620355672).epsilon(1e-9));
    CHECK(r.p_hidden == 0.0);
    CHECK(r.p_target >= 0.9);
}

TEST_CASE("clique search splits mass by the advertised ratio") {
    SearchResult r = run_search(make(Scenario::StarClique, 400, 3));
    CHECK(r.steps == 20);
    CHECK(r.p_target == doctest::Approx(0.771774529165).epsilon(1e-9));
    CHECK(r.p_hidden == doctest::Approx(0.226583963261).epsilon(1e-9));
    CHECK(r.p_retry == doctest::Approx(8.0 / 9.0).epsilon(1e-9));
    CHECK(std::abs(r.p_target - 0.8) <= 0.08);
    CHECK(std::abs(r.p_hidden - 0.2) <= 0.08);

    for (int m = 2; m <= 5; ++m) {
        SearchResult s = run_search(make(Scenario::StarClique, 400, m));
        CHECK(std::abs(s.p_hidden - 1.0 / (2.0 * m - 1.0)) <= 0.08);
        CHECK(std::abs(s.p_target - (2.0 * m - 2.0) / (2.0 * m - 1.0)) <= 0.08);
    }
}

TEST_CASE("two-star search works from both prepared states") {
    SearchResult r = run_search(make(Scenario::TwoStars, 400));
    CHECK(r.steps == 32);
    CHECK(r.p_target == doctest::Approx(0.996612443364).epsilon(1e-9));
    CHECK(r.p_hidden == 0.0);
    CHECK(r.p_target >= 0.9);

    SearchResult out = run_search(make(Scenario::TwoStars, 400),
                                  InitialStateKind::TwoStarOutgoingSigned);
    CHECK(out.steps == 32);
    CHECK(out.p_target == doctest::Approx(0.993630844845).epsilon(1e-9));
    CHECK(out.p_target >= 0.9);

    SearchResult small = run_search(make(Scenario::TwoStars, 100),
                                    InitialStateKind::TwoStarOutgoingSigned);
    CHECK(small.p_target == doctest::Approx(0.982663957771).epsilon(1e-9));
}

TEST_CASE("bipartite search floods the spokes next to the extra edge") {
    SearchResult r = run_search(make(Scenario::BipartiteExtra, 0, 0, 200, 4));
    CHECK(r.steps == 27);
    CHECK(r.p_target == doctest::Approx(0.341037268416).epsilon(1e-9));
    CHECK(r.p_hidden == doctest::Approx(0.657934580702).epsilon(1e-9));
    CHECK(r.p_retry == doctest::Approx(0.64).epsilon(1e-9));
    CHECK(std::abs(r.p_target - 1.0 / 3.0) <= 0.08);
    CHECK(std::abs(r.p_hidden - 2.0 / 3.0) <= 0.08);
}

TEST_CASE("a walk on the plain bipartite graph never leaves the start") {
    ScenarioParams p = make(Scenario::BipartiteDetect, 0, 0, 100, 4);
    p.absent = true;
    SearchResult r = run_search(p);
    // the signed uniform state is stationary up to sign, so the target mass
    // stays at its initial 2/n1 share
    CHECK(r.p_target == doctest::Approx(2.0 / 100.0).epsilon(1e-9));
    CHECK(r.p_hidden == 0.0);
    CHECK(r.predicted_p_target == doctest::Approx(2.0 / 100.0).epsilon(1e-12));
}

TEST_CASE("scan finds the predicted optimum and the revival") {
    ScanResult s = scan_success(make(Scenario::StarLoop, 100), 60);
    REQUIRE(s.rows.size() == 61);
    CHECK(s.rows.front().n == 0);
    CHECK(s.rows.back().n == 60);
    CHECK(s.predicted_n == 19);
    CHECK(s.best_n == 19);
    CHECK(s.best_success == doctest::Approx(0.998274964003).epsilon(1e-9));
    CHECK(s.rows[19].p_target + s.rows[19].p_hidden ==
          doctest::Approx(s.best_success).epsilon(1e-12));
    // success revives one full period later, near 3 n_star
    double revival = 0.0;
    for (int n = 55; n <= 60; ++n)
        revival = std::max(revival, s.rows[n].p_target + s.rows[n].p_hidden);
    CHECK(revival >= 0.9 * s.best_success);
    // and collapses in between
    CHECK(s.rows[38].p_target + s.rows[38].p_hidden <= 0.2);

    CHECK_THROWS_AS(scan_success(make(Scenario::StarLoop, 100), -1),
                    std::invalid_argument);
}

TEST_CASE("detection flags the planted edge and stays quiet without it") {
    ScenarioParams present = make(Scenario::BipartiteExtra, 0, 0, 200, 4);
    DetectResult d = detect_extra_edge(present, 10, 7);
    CHECK(d.present);
    CHECK(d.reps == 10);
    CHECK(d.hits == 7);
    CHECK(d.confidence == doctest::Approx(1.0 - std::pow(1.0 / 3.0, 10)).epsilon(1e-9));

    ScenarioParams absent = make(Scenario::BipartiteDetect, 0, 0, 200, 4);
    absent.absent = true;
    DetectResult a = detect_extra_edge(absent, 10, 7);
    CHECK_FALSE(a.present);
    CHECK(a.hits == 0);

    CHECK_THROWS_AS(detect_extra_edge(make(Scenario::StarLoop, 100), 10, 7),
                    std::invalid_argument);
    CHECK_THROWS_AS(detect_extra_edge(present, 0, 7), std::invalid_argument);
}

TEST_CASE("trial frequencies reproduce independent detector runs") {
    ScenarioParams p = make(Scenario::BipartiteExtra, 0, 0, 50, 4);
    TrialFrequency f = detect_trial_frequency(p, 5, 24, 1000);
    CHECK(f.trials == 24);
    int expect = 0;
    for (int i = 0; i < 24; ++i)
        expect += detect_extra_edge(p, 5, 1000 + static_cast<std::uint64_t>(i)).present;
    CHECK(f.flagged == expect);
    CHECK(f.frequency == doctest::Approx(expect / 24.0).epsilon(1e-12));

    TrialFrequency parallel = detect_trial_frequency(p, 5, 24, 1000, 4);
    CHECK(parallel.flagged == f.flagged);
}

TEST_CASE("classical baseline scans the adjacency list") {
    Baseline b = classical_baseline(make(Scenario::StarLoop, 100), 4000, 1);
    CHECK(b.scan_length == 101);
    CHECK(b.certifying_entries == 1);
    CHECK(b.probes_expected == doctest::Approx(51.0).epsilon(1e-12));
    CHECK(b.observed_mean == doctest::Approx(51.54775).epsilon(1e-9));
    CHECK(b.observed_se == doctest::Approx(0.462389047115).epsilon(1e-6));
    CHECK(std::abs(b.observed_mean - b.probes_expected) <= 3.0 * b.observed_se);

    Baseline ts = classical_baseline(make(Scenario::TwoStars, 100), 2000, 3);
    CHECK(ts.scan_length == 101);
    CHECK(ts.probes_expected == doctest::Approx(51.0).epsilon(1e-12));

    Baseline cl = classical_baseline(make(Scenario::StarClique, 60, 3), 2000, 5);
    CHECK(cl.scan_length == 66);
    CHECK(cl.certifying_entries == 6);
    CHECK(cl.probes_expected == doctest::Approx(67.0 / 7.0).epsilon(1e-12));
    CHECK(std::abs(cl.observed_mean - cl.probes_expected) <= 3.0 * cl.observed_se);

    Baseline bp = classical_baseline(make(Scenario::BipartiteExtra, 0, 0, 20, 4), 2000, 9);
    CHECK(bp.scan_length == 82);
    CHECK(bp.certifying_entries == 2);
    CHECK(bp.probes_expected == doctest::Approx(83.0 / 3.0).epsilon(1e-12));

    ScenarioParams absent = make(Scenario::BipartiteDetect, 0, 0, 20, 4);
    absent.absent = true;
    Baseline null = classical_baseline(absent, 100, 2);
    CHECK(null.certifying_entries == 0);
    CHECK(null.probes_expected == doctest::Approx(80.0).epsilon(1e-12));
    CHECK(null.observed_mean == doctest::Approx(80.0).epsilon(1e-12));
    CHECK(null.observed_se == 0.0);

    // a phase mark leaves no trace a classical scan could find
    CHECK_THROWS_AS(
        classical_baseline(make(Scenario::StarDummyLoops, 100, 0, 0, 0, kPi), 100, 1),
        std::invalid_argument);
    CHECK_THROWS_AS(classical_baseline(make(Scenario::StarLoop, 100), 1, 1),
                    std::invalid_argument);
}

TEST_CASE("baseline trials are reproducible and thread-count independent") {
    ScenarioParams p = make(Scenario::StarClique, 40, 3);
    Baseline a = classical_baseline(p, 500, 77);
    Baseline b = classical_baseline(p, 500, 77);
    Baseline c = classical_baseline(p, 500, 77, 4);
    CHECK(a.observed_mean == b.observed_mean);
    CHECK(a.observed_mean == c.observed_mean);
    CHECK(a.observed_se == c.observed_se);
}

TEST_CASE("speedup report budgets repetitions from the design point") {
    SpeedupReport sl = speedup_report(make(Scenario::StarLoop, 100));
    CHECK(sl.n_star == 19);
    CHECK(sl.repetitions == 1);
    CHECK(sl.quantum_total == doctest::Approx(20.0).epsilon(1e-12));  // retry included
    CHECK(sl.classical_expected == doctest::Approx(51.0).epsilon(1e-12));
    CHECK(sl.ratio == doctest::Approx(20.0 / 51.0).epsilon(1e-12));
    CHECK(sl.overall_success == doctest::Approx(0.998274964003).epsilon(1e-9));

    SpeedupReport ts = speedup_report(make(Scenario::TwoStars, 100));
    CHECK(ts.repetitions == 1);
    CHECK(ts.quantum_total == doctest::Approx(16.0).epsilon(1e-12));

    for (int m = 2; m <= 5; ++m)
        CHECK(speedup_report(make(Scenario::StarClique, 60, m)).repetitions == 2);

    SpeedupReport bp = speedup_report(make(Scenario::BipartiteExtra, 0, 0, 100, 4));
    CHECK(bp.repetitions == 3);
    CHECK(bp.quantum_total == doctest::Approx(57.0).epsilon(1e-12));
    CHECK(bp.ratio == doctest::Approx(0.424317617866).epsilon(1e-9));
    CHECK(bp.overall_success ==
          doctest::Approx(1.0 - std::pow(1.0 - bp.success_per_rep, 3)).epsilon(1e-12));

    CHECK_THROWS_AS(speedup_report(make(Scenario::StarDummyLoops, 100, 0, 0, 0, kPi)),
                    std::invalid_argument);
    ScenarioParams absent = make(Scenario::BipartiteDetect, 0, 0, 20, 4);
    absent.absent = true;
    CHECK_THROWS_AS(speedup_report(absent), std::invalid_argument);
}

TEST_CASE("quantum advantage follows the inverse-root law") {
    SpeedupReport r100 = speedup_report(make(Scenario::BipartiteExtra, 0, 0, 100, 4));
    SpeedupReport r400 = speedup_report(make(Scenario::BipartiteExtra, 0, 0, 400, 4));
    SpeedupReport r1600 = speedup_report(make(Scenario::BipartiteExtra, 0, 0, 1600, 4));
    CHECK(r400.ratio == doctest::Approx(0.213349968808).epsilon(1e-9));
    CHECK(r1600.ratio == doctest::Approx(0.108230516945).epsilon(1e-9));
    // quadrupling the left set should halve the ratio, within a factor of two
    CHECK(r100.ratio / r400.ratio >= 1.0);
    CHECK(r100.ratio / r400.ratio <= 4.0);
    CHECK(r400.ratio / r1600.ratio >= 1.0);
    CHECK(r400.ratio / r1600.ratio <= 4.0);
}
