#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wradii/euler_rayleigh.hpp"
#include "wradii/radii_solver.hpp"

namespace wradii {

// One row of a radius table. Bounds are present only for the alpha = 0 cases
// covered by an Euler-Rayleigh theorem (everything except convex f).
struct OutputRecord {
    double rho = 0.0;
    double beta = 0.0;
    double alpha = 0.0;
    RadiusKind kind = RadiusKind::Starlike;
    Norm norm = Norm::G;
    double radius = 0.0;
    std::optional<double> lower_k1, lower_k2, upper_k2, upper_k1;
    double residual = 0.0;
};

std::optional<Theorem> theorem_for(RadiusKind kind, Norm norm);

OutputRecord make_record(const RadiusQuery& q, const RadiusResult& r);
OutputRecord make_record(const RadiusQuery& q, const RadiusOptions& opts = {});

// 17 significant digits, "%.17g".
std::string format_number(double v);

inline constexpr std::string_view kCsvHeader =
    "rho,beta,alpha,kind,norm,radius,lower_k1,lower_k2,upper_k2,upper_k1,residual";

std::string to_csv_row(const OutputRecord& r);
std::string to_csv(const std::vector<OutputRecord>& rows);  // header + rows, '\n' terminated
std::vector<OutputRecord> parse_csv(std::string_view text);  // throws DomainError on malformed input

nlohmann::json to_json(const OutputRecord& r);
OutputRecord record_from_json(const nlohmann::json& j);

}  // namespace wradii
