#include <doctest.h>

#include "qmaps/harness.hpp"

#include <json.hpp>

using namespace qmaps;

TEST_CASE("charge conservation campaign") {
    const VerificationReport r = verify_charge_conservation(2, 200, 42);
    CHECK(r.passed);
    CHECK(r.max_violation < 1e-12);
    CHECK(r.control_ok);
    CHECK(r.control_violation > 1e-3);
    CHECK(r.trials == 200);

    SUBCASE("reproducible from the seed") {
        const VerificationReport again = verify_charge_conservation(2, 200, 42);
        CHECK(again.max_violation == r.max_violation);
        const VerificationReport other = verify_charge_conservation(2, 200, 43);
        CHECK(other.passed);
    }

    SUBCASE("n = 3") {
        CHECK(verify_charge_conservation(3, 100, 7).passed);
    }

    SUBCASE("bad n throws") {
        CHECK_THROWS_AS(verify_charge_conservation(1, 10, 1), std::invalid_argument);
        CHECK_THROWS_AS(verify_charge_conservation(5, 10, 1), std::invalid_argument);
    }
}

TEST_CASE("no-coherence campaign") {
    const VerificationReport r2 = verify_no_coherence_from_diagonal(2, 150, 11);
    CHECK(r2.passed);
    CHECK(r2.max_violation < 1e-12);
    CHECK(r2.control_violation > 1e-3);

    const VerificationReport r3 = verify_no_coherence_from_diagonal(3, 80, 11);
    CHECK(r3.passed);
}

TEST_CASE("even-charge correlation campaign") {
    const VerificationReport r = verify_even_charge_correlations_stay_pc(150, 19);
    CHECK(r.passed);
    CHECK(r.max_violation < 1e-12);
    CHECK(r.control_violation > 1e-3);
}

TEST_CASE("hierarchy campaign") {
    const VerificationReport r = verify_hierarchy(150, 23);
    CHECK(r.passed);
    CHECK(r.max_violation < 1e-10);
    CHECK(r.control_ok);
}

TEST_CASE("report serializes to a json object") {
    const VerificationReport r = verify_charge_conservation(2, 20, 5);
    const auto j = nlohmann::json::parse(r.to_json());
    CHECK(j["claim_id"] == "charge_conservation_n2");
    CHECK(j["trials"] == 20);
    CHECK(j["passed"] == true);
    CHECK(j["seed"] == 5);
    CHECK(j.contains("max_violation"));
    CHECK(j.contains("tolerance"));
    CHECK(j.contains("control_violation"));
}

TEST_CASE("default trial counts") {
    CHECK(default_trials(2) == 1000);
    CHECK(default_trials(3) == 1000);
    CHECK(default_trials(4) == 200);
}
