#include "wradii/records.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "wradii/errors.hpp"

namespace wradii {

std::optional<Theorem> theorem_for(RadiusKind kind, Norm norm) {
    if (kind == RadiusKind::Starlike) {
        switch (norm) {
            case Norm::F: return Theorem::T2;
            case Norm::G: return Theorem::T3;
            case Norm::H: return Theorem::T4;
        }
    }
    if (norm == Norm::G) return Theorem::T6;
    if (norm == Norm::H) return Theorem::T7;
    return std::nullopt;
}

OutputRecord make_record(const RadiusQuery& q, const RadiusResult& r) {
    OutputRecord out;
    out.rho = q.params.rho;
    out.beta = q.params.beta;
    out.alpha = q.alpha;
    out.kind = q.kind;
    out.norm = q.norm;
    out.radius = r.value;
    out.residual = r.residual;
    if (q.alpha == 0.0) {
        if (auto t = theorem_for(q.kind, q.norm)) {
            const BoundsReport b = bounds_closed_form(*t, q.params);
            out.lower_k1 = b.lower_k1;
            out.lower_k2 = b.lower_k2;
            out.upper_k2 = b.upper_k2;
            out.upper_k1 = b.upper_k1;
        }
    }
    return out;
}

OutputRecord make_record(const RadiusQuery& q, const RadiusOptions& opts) { return make_record(q, radius(q, opts)); }

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string optional_field(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

double parse_number(const std::string& s, const char* field) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE)
        throw DomainError(std::string("bad number in column ") + field + ": '" + s + "'");
    return v;
}

std::optional<double> parse_optional(const std::string& s, const char* field) {
    if (s.empty()) return std::nullopt;
    return parse_number(s, field);
}

std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        cells.emplace_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

nlohmann::json optional_json(const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(); }

std::optional<double> optional_from_json(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<double>();
}

}  // namespace

std::string to_csv_row(const OutputRecord& r) {
    std::ostringstream s;
    s << format_number(r.rho) << ',' << format_number(r.beta) << ',' << format_number(r.alpha) << ','
      << to_string(r.kind) << ',' << to_string(r.norm) << ',' << format_number(r.radius) << ','
      << optional_field(r.lower_k1) << ',' << optional_field(r.lower_k2) << ',' << optional_field(r.upper_k2) << ','
      << optional_field(r.upper_k1) << ',' << format_number(r.residual);
    return s.str();
}

std::string to_csv(const std::vector<OutputRecord>& rows) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto& r : rows) {
        out += to_csv_row(r);
        out += '\n';
    }
    return out;
}

std::vector<OutputRecord> parse_csv(std::string_view text) {
    std::vector<OutputRecord> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) throw DomainError("missing or unexpected CSV header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto c = split(line);
        if (c.size() != 11) throw DomainError("expected 11 columns, got " + std::to_string(c.size()));
        OutputRecord r;
        r.rho = parse_number(c[0], "rho");
        r.beta = parse_number(c[1], "beta");
        r.alpha = parse_number(c[2], "alpha");
        r.kind = parse_kind(c[3]);
        r.norm = parse_norm(c[4]);
        r.radius = parse_number(c[5], "radius");
        r.lower_k1 = parse_optional(c[6], "lower_k1");
        r.lower_k2 = parse_optional(c[7], "lower_k2");
        r.upper_k2 = parse_optional(c[8], "upper_k2");
        r.upper_k1 = parse_optional(c[9], "upper_k1");
        r.residual = parse_number(c[10], "residual");
        rows.push_back(r);
    }
    return rows;
}

nlohmann::json to_json(const OutputRecord& r) {
    return {
        {"rho", r.rho},
        {"beta", r.beta},
        {"alpha", r.alpha},
        {"kind", to_string(r.kind)},
        {"norm", to_string(r.norm)},
        {"radius", r.radius},
        {"lower_k1", optional_json(r.lower_k1)},
        {"lower_k2", optional_json(r.lower_k2)},
        {"upper_k2", optional_json(r.upper_k2)},
        {"upper_k1", optional_json(r.upper_k1)},
        {"residual", r.residual},
    };
}

OutputRecord record_from_json(const nlohmann::json& j) {
    OutputRecord r;
    r.rho = j.at("rho").get<double>();
    r.beta = j.at("beta").get<double>();
    r.alpha = j.at("alpha").get<double>();
    r.kind = parse_kind(j.at("kind").get<std::string>());
    r.norm = parse_norm(j.at("norm").get<std::string>());
    r.radius = j.at("radius").get<double>();
    r.lower_k1 = optional_from_json(j, "lower_k1");
    r.lower_k2 = optional_from_json(j, "lower_k2");
    r.upper_k2 = optional_from_json(j, "upper_k2");
    r.upper_k1 = optional_from_json(j, "upper_k1");
    r.residual = j.at("residual").get<double>();
    return r;
}

}  // namespace wradii
