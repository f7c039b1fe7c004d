#include <doctest.h>

#include "oracles.hpp"
#include "qmaps/constructions.hpp"
#include "qmaps/thermo.hpp"

#include <cmath>

using namespace qmaps;

TEST_CASE("relative entropy") {
    testing::Rng rng(139);

    SUBCASE("D(rho || rho) = 0") {
        for (int rep = 0; rep < 10; ++rep) {
            const ComplexMatrix rho = rng.density(2);
            CHECK(std::abs(relative_entropy(rho, rho)) < 1e-12);
        }
    }

    SUBCASE("pure vs maximally mixed is ln 2") {
        const ComplexMatrix pure = bloch_to_density({0, 0, 1});
        const ComplexMatrix mixed = 0.5 * ComplexMatrix::Identity(2, 2);
        CHECK(relative_entropy(pure, mixed) ==
              doctest::Approx(std::log(2.0)).epsilon(1e-12));
    }

    SUBCASE("diagonal case matches the scalar eigenvalue formula") {
        // eigenvalues (1 +- r)/2 for z-axis states, evaluated independently
        const double r1 = 0.5, r2 = 0.45;
        const double p = (1 + r1) / 2, q = (1 - r1) / 2;
        const double u = (1 + r2) / 2, v = (1 - r2) / 2;
        const double expected = p * std::log(p / u) + q * std::log(q / v);
        CHECK(relative_entropy(bloch_to_density({0, 0, r1}),
                               bloch_to_density({0, 0, r2})) ==
              doctest::Approx(expected).epsilon(1e-12));
    }

    SUBCASE("support violation returns infinity") {
        const ComplexMatrix pure0 = bloch_to_density({0, 0, 1});
        const ComplexMatrix pure1 = bloch_to_density({0, 0, -1});
        CHECK(std::isinf(relative_entropy(pure1, pure0)));
        CHECK(std::isinf(relative_entropy(bloch_to_density({1, 0, 0}), pure0)));
        // but D(pure || pure) over matching support is finite
        CHECK(std::abs(relative_entropy(pure0, pure0)) < 1e-12);
    }

    SUBCASE("nonnegative, zero only for equal inputs") {
        for (int rep = 0; rep < 30; ++rep) {
            const ComplexMatrix a = rng.density(2), b = rng.density(2);
            const double d = relative_entropy(a, b);
            CHECK(d > -1e-10);
            if (max_abs(a - b) > 1e-2) CHECK(d > 1e-6);
        }
    }

    SUBCASE("invalid inputs throw") {
        CHECK_THROWS_AS(relative_entropy(ComplexMatrix::Identity(2, 2),
                                         0.5 * ComplexMatrix::Identity(2, 2)),
                        std::invalid_argument);
    }
}

TEST_CASE("delta_D work proxy") {
    SUBCASE("identity map at the Gibbs state") {
        CHECK(delta_D(AffineMap::identity(), {0, 0, 0.45}, 0.45) < 1e-12);
    }

    SUBCASE("Gibbs-preserving map at the Gibbs state") {
        const GpSolution sol = solve_gp_constraints(0.3, -0.3);
        const AffineMap gp = phi_gp_3qubit({sol.j, 0.785, 0.3, 0.2, 0.1, sol.f3});
        CHECK(delta_D(gp, {0, 0, -0.3}, -0.3) < 1e-10);
    }

    SUBCASE("pointwise sweep has the excess-work sign pattern") {
        const GpSolution sol = solve_gp_constraints(0.3, -0.3);
        const double h = 0.7853981633974483;
        const AffineMap gp = phi_gp_3qubit({sol.j, h, 0.3, 0.2, 0.1, sol.f3});
        const AffineMap pc = phi_gp_3qubit({sol.j, h, 0.3, 0.0, 0.0, sol.f3});
        bool some_positive = false;
        for (double a3 = -1.0; a3 <= 1.0; a3 += 0.125) {
            const double delta = delta_D(gp, {0, 0, a3}, -0.3) -
                                 delta_D(pc, {0, 0, a3}, -0.3);
            CHECK(delta > -1e-10);
            some_positive = some_positive || delta > 1e-4;
        }
        CHECK(some_positive);
    }
}

TEST_CASE("l1 coherence") {
    CHECK(l1_coherence({1, 0, 0}) == 1.0);
    CHECK(l1_coherence({0, 0, 1}) == 0.0);

    SUBCASE("one PC application scales coherence by the transverse factor") {
        const AffineMap pc = phi_pc(0.7, 0.4, 0.3);
        const double after = l1_coherence(apply(pc, {1, 0, 0}));
        CHECK(after == doctest::Approx(std::abs(std::cos(0.7))).epsilon(1e-12));
    }
}

TEST_CASE("coherence trajectories") {
    const GpSolution sol = solve_gp_constraints(0.3, -0.3);
    const double h = 0.7853981633974483;

    SUBCASE("phase-covariant maps never create coherence from the z axis") {
        const AffineMap pc = phi_gp_3qubit({sol.j, h, 0.3, 0.0, 0.0, sol.f3});
        for (double c : coherence_trajectory(pc, {0, 0, 1}, 10)) CHECK(c < 1e-12);
    }

    SUBCASE("coherent resource generates coherence from step 1") {
        const AffineMap gp = phi_gp_3qubit({sol.j, h, 0.3, 0.2, 0.1, sol.f3});
        const auto traj = coherence_trajectory(gp, {0, 0, 1}, 10);
        CHECK(traj[0] == 0.0);
        for (int k = 1; k <= 3; ++k) CHECK(traj[k] > 1e-3);
    }

    SUBCASE("identity map keeps coherence constant") {
        for (double c : coherence_trajectory(AffineMap::identity(), {1, 0, 0}, 5))
            CHECK(c == 1.0);
    }
}

TEST_CASE("convergence step counting") {
    SUBCASE("identity map is stationary at step 1") {
        const ConvergenceResult r = convergence_steps(AffineMap::identity(), {0.3, 0, 0.2});
        CHECK(r.converged);
        CHECK(r.steps == 1);
    }

    SUBCASE("T = 0 projects in one step") {
        AffineMap m;
        m.tau = {0, 0, 0.4};
        m.T = Eigen::Matrix3d::Zero();
        const ConvergenceResult r = convergence_steps(m, {0.7, 0, 0.1});
        CHECK(r.converged);
        CHECK(r.steps == 1);
    }

    SUBCASE("non-contractive map flags not converged") {
        AffineMap m;
        m.tau = {0.1, 0, 0};
        const ConvergenceResult r = convergence_steps(m, {0, 0, 0}, 1e-8, 50);
        CHECK_FALSE(r.converged);
        CHECK(r.steps == 50);
    }

    SUBCASE("monotone nonincreasing in epsilon") {
        const AffineMap pc = phi_pc(0.6, 0.3, 0.4);
        int prev = 1 << 30;
        for (double eps : {1e-12, 1e-9, 1e-6, 1e-3}) {
            const ConvergenceResult r = convergence_steps(pc, {0, 0, 1}, eps);
            CHECK(r.converged);
            CHECK(r.steps <= prev);
            prev = r.steps;
        }
    }

    SUBCASE("map-class ordering on the shared feasible set") {
        const GpSolution sol = solve_gp_constraints(0.3, -0.3);
        const double h = 0.7853981633974483;
        const AffineMap pc = phi_gp_3qubit({sol.j, h, 0.3, 0.0, 0.0, sol.f3});
        const AffineMap e = phi_gp_3qubit({sol.j, h, 0.3, 0.2, 0.1, 0.0});
        const AffineMap gp = phi_gp_3qubit({sol.j, h, 0.3, 0.2, 0.1, sol.f3});
        const int s_pc = convergence_steps(pc, {0, 0, 1}).steps;
        const int s_e = convergence_steps(e, {0, 0, 1}).steps;
        const int s_gp = convergence_steps(gp, {0, 0, 1}).steps;
        CHECK(s_pc <= s_e);
        CHECK(s_e <= s_gp);
    }
}

TEST_CASE("trajectory record") {
    const AffineMap pc = phi_pc(0.5, 0.2, 0.3);
    const Trajectory t = make_trajectory(pc, {0, 0, 1}, 4, "pc", {{"J", 0.5}});
    CHECK(t.states.size() == 5);
    CHECK(t.map_label == "pc");
    for (std::size_t k = 1; k < t.states.size(); ++k)
        CHECK(distance(t.states[k], apply(pc, t.states[k - 1])) < 1e-15);
}
