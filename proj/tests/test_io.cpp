#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "descm/convergence.hpp"
#include "descm/io.hpp"

using nlohmann::json;

TEST_CASE("potential JSON round trip") {
    const auto pot = descm::random_potential(1, 2, 404);
    const json j = descm::potential_to_json(pot);
    const auto back = descm::potential_from_json(j);
    CHECK(back.omega() == pot.omega());
    CHECK(back.m() == pot.m());
    CHECK(back.numerator() == pot.numerator());
    CHECK(back.q_coeffs() == pot.q_coeffs());
    CHECK(back.validate().ok);
}

TEST_CASE("potential JSON validation errors") {
    CHECK_THROWS_AS(descm::potential_from_json(json::parse("[1,2]")), std::invalid_argument);
    CHECK_THROWS_AS(descm::potential_from_json(json::parse(R"({"omega":1,"m":1})")),
                    std::invalid_argument);
    // both q fields present
    CHECK_THROWS_AS(descm::potential_from_json(json::parse(
                        R"({"omega":1,"m":1,"lambda":[0],"q_coeffs":[1],"q_roots":[[0,1]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(descm::potential_from_json(json::parse(
                        R"({"omega":1,"m":1,"lambda":[0],"q_roots":[[0]]})")),
                    std::invalid_argument);
}

TEST_CASE("q_coeffs input path") {
    const auto pot = descm::potential_from_json(json::parse(
        R"({"omega":1.0,"m":1,"lambda":[0.0,0.0,-6.0],"q_coeffs":[1.0,0.0,1.0]})"));
    CHECK(pot.validate().ok);
    CHECK(pot.evaluate(1.0) == doctest::Approx(-2.0));
}

TEST_CASE("records CSV shape and precision") {
    const auto pot = descm::exact_reference(1, 1.0).potential;
    const auto res = descm::converge(pot, descm::MapStrategy::automatic, 1e-8, 40, 2);
    std::ostringstream os;
    descm::write_records_csv(os, res.records, 3);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "potential_id,N,h,level,energy,eps");
    int rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        // RFC 4180: constant field count, no stray quotes or CR
        CHECK(std::count(line.begin(), line.end(), ',') == 5);
        CHECK(line.find('"') == std::string::npos);
        CHECK(line.find('\r') == std::string::npos);
        CHECK(line.substr(0, 2) == "3,");
    }
    CHECK(rows == static_cast<int>(res.records.size()) * 2);
}

TEST_CASE("format_double round trips") {
    for (double v : {1.0 / 3.0, 1e-300, -4.0 + 1.23e-15, 17.0}) {
        CHECK(std::stod(descm::format_double(v)) == v);
    }
}

TEST_CASE("study CSV and gnuplot emission") {
    const auto report = descm::random_study(1, 1, 2, 11, 1e-4, 40, 1, 1);
    std::ostringstream csv;
    descm::write_study_csv(csv, report);
    CHECK(csv.str().rfind("potential_id,level,N,eps\n", 0) == 0);
    CHECK(csv.str().find("\n1,0,") != std::string::npos);  // second potential present

    std::ostringstream plot;
    descm::write_study_gnuplot(plot, "study.csv");
    CHECK(plot.str().find("study.csv") != std::string::npos);

    const json j = descm::study_to_json(report);
    CHECK(j["entries"].size() == 2);
    CHECK(j["generator"] == "splitmix64");
}
