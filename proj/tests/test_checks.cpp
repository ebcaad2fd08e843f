#include "difftab/checks.hpp"

#include <doctest.h>

#include <set>

using namespace difftab;

TEST_CASE("every suite passes under multiple seeds") {
    for (std::uint64_t seed : {1ull, 42ull, 20260816ull}) {
        CAPTURE(seed);
        for (const CheckOutcome& o : runAllChecks(seed)) {
            CAPTURE(o.name);
            CAPTURE(o.detail);
            CHECK(o.passed);
            CHECK(o.cases > 0);
        }
    }
}

TEST_CASE("suite names are stable and unique") {
    auto outcomes = runAllChecks(7);
    REQUIRE(outcomes.size() == 8);
    std::set<std::string> names;
    for (const auto& o : outcomes) {
        names.insert(o.name);
    }
    CHECK(names.size() == 8);
    CHECK(names.count("factorial-law") == 1);
    CHECK(names.count("leading-coefficient-law") == 1);
    CHECK(names.count("path-equivalence") == 1);
    CHECK(names.count("central-pair-identity") == 1);
    CHECK(names.count("partial-equality") == 1);
    CHECK(names.count("stacked-powers") == 1);
    CHECK(names.count("sum-relations") == 1);
    CHECK(names.count("structural-properties") == 1);
}

TEST_CASE("case counts match the advertised trial density") {
    auto outcomes = runAllChecks(99);
    for (const auto& o : outcomes) {
        if (o.name == "factorial-law") {
            // 12 powers x 20 steps x 10 points x 4 kinds.
            CHECK(o.cases == 9600);
        }
        if (o.name == "path-equivalence") {
            CHECK(o.cases == 500);
        }
        if (o.name == "central-pair-identity") {
            CHECK(o.cases == 200);
        }
    }
}

TEST_CASE("errata findings report the stated-law disagreements") {
    auto findings = errataFindings();
    REQUIRE(findings.size() == 3);
    std::set<std::string> names;
    for (const auto& f : findings) {
        names.insert(f.name);
        CHECK_FALSE(f.statedLaw.empty());
        CHECK_FALSE(f.observed.empty());
        // Each stated law disagrees with the computed table data.
        CHECK_FALSE(f.agreesWithData);
    }
    CHECK(names.count("opposite-direction sign factor") == 1);
    CHECK(names.count("order-n central value coefficient") == 1);
    CHECK(names.count("diagonal product form at non-unit steps") == 1);
}

TEST_CASE("errata findings carry the observed numbers") {
    for (const auto& f : errataFindings()) {
        if (f.name == "order-n central value coefficient") {
            CHECK(f.observed.find("3715891200") != std::string::npos);
            CHECK(f.observed.find("7257600") != std::string::npos);
        }
        if (f.name == "diagonal product form at non-unit steps") {
            CHECK(f.observed.find("5/2") != std::string::npos);
        }
    }
}
