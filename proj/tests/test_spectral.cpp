#include <cmath>
#include <complex>
#include <functional>

#include "doctest.h"
#include "qwalk/collective.hpp"
#include "qwalk/scenario.hpp"
#include "qwalk/spectral.hpp"

using namespace qwalk;

namespace {

constexpr double kPi = 3.14159265358979323846;

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

double prediction_error(const ScenarioParams& p) {
    Eigen::MatrixXcd m = reduced_matrix_closed_form(p).matrix;
    PredictionReport rep = verify_prediction(m, perturbative_prediction(p));
    return std::max(rep.lambda_plus_error, rep.lambda_minus_error);
}

}  // namespace

TEST_CASE("characteristic polynomial matches hand computations") {
    Eigen::MatrixXcd m(2, 2);
    m << 1.0, 2.0, 3.0, 4.0;
    CharPoly p = characteristic_poly(m);
    REQUIRE(p.degree() == 2);
    CHECK(std::abs(p.coeffs[0] - 1.0) <= 1e-15);
    CHECK(std::abs(p.coeffs[1] + 5.0) <= 1e-14);
    CHECK(std::abs(p.coeffs[2] + 2.0) <= 1e-14);

    Eigen::MatrixXcd one(1, 1);
    one << Complex(0.0, 2.0);
    CharPoly q = characteristic_poly(one);
    REQUIRE(q.degree() == 1);
    CHECK(std::abs(q.coeffs[1] - Complex(0.0, -2.0)) <= 1e-15);
}

TEST_CASE("characteristic polynomial annihilates the spectrum") {
    Eigen::MatrixXcd m = reduced_matrix_closed_form(make(Scenario::StarClique, 40, 3)).matrix;
    CharPoly p = characteristic_poly(m);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        CHECK(std::abs(p.eval(es.eigenvalues()[i])) <= 1e-12);
}

TEST_CASE("closed-form polynomials match the reduced matrices") {
    std::vector<ScenarioParams> cases{
        make(Scenario::StarLoop, 20),
        make(Scenario::StarLoop, 173),
        make(Scenario::StarDummyLoops, 20, 0, 0, 0, kPi),
        make(Scenario::StarDummyLoops, 57, 0, 0, 0, 1.3),
        make(Scenario::StarClique, 30, 2),
        make(Scenario::StarClique, 30, 5),
        make(Scenario::BipartiteExtra, 0, 0, 12, 4),
        make(Scenario::BipartiteExtra, 0, 0, 40, 7),
    };
    for (const auto& p : cases) {
        CharPoly numeric = characteristic_poly(reduced_matrix_closed_form(p).matrix);
        CharPoly closed = scenario_char_poly_closed_form(p);
        CHECK(max_coeff_diff(numeric, closed) <= 1e-12);
    }

    // two stars: quadratic of the double-step rotation block
    const int n = 25;
    auto [b1, b2] = two_stars_u2_blocks(n);
    CharPoly numeric = characteristic_poly(b1);
    CharPoly closed = scenario_char_poly_closed_form(make(Scenario::TwoStars, n));
    REQUIRE(closed.degree() == 2);
    CHECK(max_coeff_diff(numeric, closed) <= 1e-12);
    CHECK(max_coeff_diff(characteristic_poly(b2), closed) <= 1e-12);

    CHECK_THROWS_AS(
        scenario_char_poly_closed_form(make(Scenario::BipartiteDetect, 0, 0, 10, 4)),
        std::invalid_argument);
}

TEST_CASE("star-loop polynomial keeps a stationary eigenvalue") {
    CharPoly p = scenario_char_poly_closed_form(make(Scenario::StarLoop, 35));
    CHECK(std::abs(p.eval(Complex(1.0, 0.0))) <= 1e-14);
    CHECK(std::abs(p.eval(Complex(-1.0, 0.0))) > 1e-3);  // the split pair sits nearby
}

TEST_CASE("dummy-loop limit polynomial and its degeneracies") {
    const double phi = 1.9;
    CharPoly lim = dummy_loops_limit_poly(phi);
    REQUIRE(lim.degree() == 5);
    const Complex e = std::polar(1.0, phi);
    CHECK(std::abs(lim.coeffs[0] - 1.0) <= 1e-15);
    CHECK(std::abs(lim.coeffs[1]) <= 1e-15);
    CHECK(std::abs(lim.coeffs[2] - e) <= 1e-15);
    CHECK(std::abs(lim.coeffs[3] + 1.0) <= 1e-15);
    CHECK(std::abs(lim.coeffs[4]) <= 1e-15);
    CHECK(std::abs(lim.coeffs[5] + e) <= 1e-15);

    // the finite-size polynomial converges to the limit as the star grows
    CharPoly big = scenario_char_poly_closed_form(
        make(Scenario::StarDummyLoops, 100000000, 0, 0, 0, phi));
    CHECK(max_coeff_diff(big, lim) <= 1e-7);

    // eigenvalue collisions happen exactly at phase pi and +-pi/3
    CHECK(dummy_loops_limit_root_gap(kPi) <= 1e-12);
    CHECK(dummy_loops_limit_root_gap(kPi / 3.0) <= 1e-12);
    CHECK(dummy_loops_limit_root_gap(-kPi / 3.0) <= 1e-12);
    for (double x = -3.0; x <= 3.0; x += 0.1) {
        if (std::abs(x - kPi) < 0.2 || std::abs(x + kPi) < 0.2 ||
            std::abs(x - kPi / 3.0) < 0.2 || std::abs(x + kPi / 3.0) < 0.2)
            continue;
        CHECK(dummy_loops_limit_root_gap(x) > 0.05);
    }
}

TEST_CASE("clique polynomial approaches its large-star limit") {
    const int m = 3;
    const double tt = 2.0 / m;  // clique vertices keep m ports as the star grows
    CharPoly lim;
    lim.coeffs = {Complex(1.0), Complex(tt - 1.0), Complex(tt - 2.0),
                  Complex(-(tt - 2.0)), Complex(-(tt - 1.0)), Complex(-1.0)};
    CharPoly big = scenario_char_poly_closed_form(
        make(Scenario::StarClique, 1000000000, m));
    CHECK(max_coeff_diff(big, lim) <= 1e-6);
}

TEST_CASE("eigensystem is sorted, normalized and phase-fixed") {
    Eigen::MatrixXcd m = reduced_matrix_closed_form(make(Scenario::StarLoop, 50)).matrix;
    Eigensystem es = eigensystem(m);
    REQUIRE(es.values.size() == 5);
    for (Eigen::Index i = 0; i < 5; ++i) {
        CHECK(std::abs(std::abs(es.values[i]) - 1.0) <= 1e-12);  // unitary spectrum
        CHECK(es.vectors.col(i).norm() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK((m * es.vectors.col(i) - es.values[i] * es.vectors.col(i)).norm() <= 1e-10);
        if (i > 0) CHECK(std::arg(es.values[i]) >= std::arg(es.values[i - 1]) - 1e-15);
        // first significant coordinate is rotated onto the positive real axis
        for (Eigen::Index j = 0; j < 5; ++j) {
            if (std::abs(es.vectors(j, i)) > 1e-8) {
                CHECK(std::abs(std::imag(es.vectors(j, i))) <= 1e-10);
                CHECK(std::real(es.vectors(j, i)) > 0.0);
                break;
            }
        }
    }
    // the stationary state survives the anomaly
    double best = 1e9;
    for (Eigen::Index i = 0; i < 5; ++i)
        best = std::min(best, std::abs(es.values[i] - Complex(1.0, 0.0)));
    CHECK(best <= 1e-12);
}

TEST_CASE("perturbative predictions carry the advertised angles") {
    {
        PerturbativePrediction pr =
            perturbative_prediction(make(Scenario::StarLoop, 400));
        CHECK(std::abs(pr.lambda0 + 1.0) <= 1e-15);
        CHECK(pr.theta == doctest::Approx(std::sqrt(2.0 / (3.0 * 400))).epsilon(1e-12));
        CHECK(pr.eigvec_plus.size() == 5);
    }
    {
        PerturbativePrediction pr =
            perturbative_prediction(make(Scenario::StarClique, 100, 3));
        CHECK(std::abs(pr.lambda0 + 1.0) <= 1e-15);
        CHECK(pr.theta == doctest::Approx(std::sqrt(12.0 / 500.0)).epsilon(1e-12));
    }
    {
        PerturbativePrediction pr =
            perturbative_prediction(make(Scenario::StarClique, 400, 3));
        CHECK(pr.theta == doctest::Approx(std::sqrt(0.006)).epsilon(1e-12));
    }
    {
        const int n = 400;
        PerturbativePrediction pr = perturbative_prediction(make(Scenario::TwoStars, n));
        const double r = (n - 2.0) / n, t = 2.0 / n;
        CHECK(std::abs(pr.lambda0 - 1.0) <= 1e-15);
        CHECK(pr.theta == doctest::Approx(std::acos(r)).epsilon(1e-14));
        CHECK(pr.theta_approx == doctest::Approx(2.0 / std::sqrt(n)).epsilon(1e-14));
        CHECK(std::abs(pr.lambda_plus - Complex(r, t * std::sqrt(n - 1.0))) <= 1e-14);
    }
    {
        PerturbativePrediction pr = perturbative_prediction(
            make(Scenario::StarDummyLoops, 400, 0, 0, 0, kPi));
        CHECK(std::abs(pr.lambda0 - 1.0) <= 1e-15);
        PerturbativePrediction plus = perturbative_prediction(
            make(Scenario::StarDummyLoops, 400, 0, 0, 0, kPi / 3.0));
        CHECK(std::abs(plus.lambda0 - std::polar(1.0, 2.0 * kPi / 3.0)) <= 1e-14);
        CHECK(plus.eigvec_plus.size() == 0);  // no closed-form vector at this phase
        PerturbativePrediction minus = perturbative_prediction(
            make(Scenario::StarDummyLoops, 400, 0, 0, 0, -kPi / 3.0));
        CHECK(std::abs(minus.lambda0 - std::polar(1.0, -2.0 * kPi / 3.0)) <= 1e-14);
    }
    {
        PerturbativePrediction pr = perturbative_prediction(
            make(Scenario::BipartiteExtra, 0, 0, 200, 4));
        CHECK(std::abs(pr.lambda0 + 1.0) <= 1e-15);
        CHECK(pr.theta == doctest::Approx(std::sqrt(4.0 / (200.0 * 6.0))).epsilon(1e-12));
    }
    // a phase off the degeneracy set has no split pair to predict
    CHECK_THROWS_AS(
        perturbative_prediction(make(Scenario::StarDummyLoops, 400, 0, 0, 0, 0.5)),
        std::invalid_argument);
}

TEST_CASE("prediction error shrinks fourfold when the star quadruples") {
    struct Family {
        const char* name;
        std::function<ScenarioParams(int)> at;
    };
    std::vector<Family> families{
        {"star-loop", [](int n) { return make(Scenario::StarLoop, n); }},
        {"dummy", [](int n) { return make(Scenario::StarDummyLoops, n, 0, 0, 0, kPi); }},
        {"clique", [](int n) { return make(Scenario::StarClique, n, 3); }},
        {"bipartite", [](int n) { return make(Scenario::BipartiteExtra, 0, 0, n, 4); }},
    };
    for (const auto& f : families) {
        CAPTURE(f.name);
        const double e100 = prediction_error(f.at(100));
        const double e400 = prediction_error(f.at(400));
        const double e1600 = prediction_error(f.at(1600));
        CHECK(e100 / e400 >= 2.5);
        CHECK(e100 / e400 <= 6.0);
        CHECK(e400 / e1600 >= 2.5);
        CHECK(e400 / e1600 <= 6.0);
    }
}

TEST_CASE("two-star block eigenvalues are predicted exactly") {
    for (int n : {50, 400, 1111}) {
        auto [b1, b2] = two_stars_u2_blocks(n);
        PredictionReport rep =
            verify_prediction(b1, perturbative_prediction(make(Scenario::TwoStars, n)));
        CHECK(rep.lambda_plus_error <= 1e-12);
        CHECK(rep.lambda_minus_error <= 1e-12);
        REQUIRE(rep.overlap_deficit_plus.has_value());
        CHECK(*rep.overlap_deficit_plus <= 1e-12);
        CHECK(*rep.overlap_deficit_minus <= 1e-12);
    }
}

TEST_CASE("predicted eigenvectors overlap the exact pair at large size") {
    Eigen::MatrixXcd m =
        reduced_matrix_closed_form(make(Scenario::StarLoop, 1000)).matrix;
    PredictionReport rep =
        verify_prediction(m, perturbative_prediction(make(Scenario::StarLoop, 1000)));
    REQUIRE(rep.overlap_deficit_plus.has_value());
    CHECK(*rep.overlap_deficit_plus <= 0.05);
    CHECK(*rep.overlap_deficit_minus <= 0.05);
}

TEST_CASE("degenerate-pair phases verify off the exact split too") {
    for (double phi : {kPi / 3.0, -kPi / 3.0}) {
        ScenarioParams p = make(Scenario::StarDummyLoops, 400, 0, 0, 0, phi);
        Eigen::MatrixXcd m = reduced_matrix_closed_form(p).matrix;
        PredictionReport rep = verify_prediction(m, perturbative_prediction(p));
        CHECK(rep.lambda_plus_error <= 0.01);
        CHECK(rep.lambda_minus_error <= 0.01);
        CHECK_FALSE(rep.overlap_deficit_plus.has_value());
    }
}

TEST_CASE("verify_prediction rejects a matrix with no nearby pair") {
    PerturbativePrediction pr = perturbative_prediction(make(Scenario::StarLoop, 400));
    Eigen::MatrixXcd wrong = Eigen::MatrixXcd::Identity(5, 5);
    CHECK_THROWS_AS(verify_prediction(wrong, pr), std::runtime_error);
}
