#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wradii/errors.hpp"
#include "wradii/records.hpp"

using namespace wradii;

namespace {

std::vector<OutputRecord> sample_rows() {
    std::vector<OutputRecord> rows;
    for (double alpha : {0.0, 0.4})
        for (Norm n : {Norm::F, Norm::G, Norm::H})
            for (RadiusKind k : {RadiusKind::Starlike, RadiusKind::Convex})
                rows.push_back(make_record(RadiusQuery{k, n, {0.75, 1.3}, alpha}));
    return rows;
}

}  // namespace

TEST_CASE("header is fixed") {
    CHECK(kCsvHeader == "rho,beta,alpha,kind,norm,radius,lower_k1,lower_k2,upper_k2,upper_k1,residual");
}

TEST_CASE("numbers use 17 significant digits") {
    CHECK(format_number(0.1) == "0.10000000000000001");
    CHECK(format_number(2.0) == "2");
    CHECK(std::strtod(format_number(M_PI).c_str(), nullptr) == M_PI);
}

TEST_CASE("bounds only where a theorem applies") {
    const OutputRecord convex_f = make_record(RadiusQuery{RadiusKind::Convex, Norm::F, {1, 1}, 0.0});
    CHECK_FALSE(convex_f.lower_k1.has_value());
    const OutputRecord with_alpha = make_record(RadiusQuery{RadiusKind::Starlike, Norm::G, {1, 1}, 0.3});
    CHECK_FALSE(with_alpha.upper_k2.has_value());
    const OutputRecord g = make_record(RadiusQuery{RadiusKind::Starlike, Norm::G, {1, 1}, 0.0});
    REQUIRE(g.lower_k2.has_value());
    CHECK(*g.lower_k2 < g.radius);
    CHECK(g.radius < *g.upper_k2);
    CHECK(g.residual <= 1e-10);
}

TEST_CASE("CSV round trip is byte identical") {
    const std::string first = to_csv(sample_rows());
    const std::string second = to_csv(parse_csv(first));
    CHECK(first == second);
    CHECK(first.find(",,") != std::string::npos);  // empty bound cells survive
}

TEST_CASE("JSON round trip") {
    for (const OutputRecord& r : sample_rows()) {
        const nlohmann::json j = to_json(r);
        const OutputRecord back = record_from_json(nlohmann::json::parse(j.dump()));
        CHECK(to_csv_row(back) == to_csv_row(r));
        CHECK(j.at("kind").is_string());
        for (const char* key : {"rho", "beta", "alpha", "radius", "residual"}) CHECK(std::isfinite(j.at(key).get<double>()));
        if (!r.lower_k1) CHECK(j.at("lower_k1").is_null());
    }
}

TEST_CASE("malformed CSV") {
    CHECK_THROWS_AS(parse_csv("rho,beta\n1,2\n"), DomainError);
    const std::string header(kCsvHeader);
    CHECK_THROWS_AS(parse_csv(header + "\n1,1,0,starlike,g\n"), DomainError);
    CHECK_THROWS_AS(parse_csv(header + "\n1,1,0,sideways,g,0.5,,,,,0\n"), DomainError);
    CHECK_THROWS_AS(parse_csv(header + "\n1,x,0,starlike,g,0.5,,,,,0\n"), DomainError);
}

TEST_CASE("theorem mapping") {
    CHECK(theorem_for(RadiusKind::Starlike, Norm::F) == Theorem::T2);
    CHECK(theorem_for(RadiusKind::Starlike, Norm::H) == Theorem::T4);
    CHECK(theorem_for(RadiusKind::Convex, Norm::G) == Theorem::T6);
    CHECK_FALSE(theorem_for(RadiusKind::Convex, Norm::F).has_value());
}
