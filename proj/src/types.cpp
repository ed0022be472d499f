#include "wradii/types.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <string>
#include <utility>

#include "wradii/errors.hpp"

namespace wradii {

void require_series_domain(const WrightParams& p) {
    if (!std::isfinite(p.rho) || !std::isfinite(p.beta))
        throw DomainError("parameters must be finite");
    if (!(p.rho > -1.0)) throw DomainError("rho must be > -1, got " + std::to_string(p.rho));
    if (!(p.beta > 0.0)) throw DomainError("beta must be > 0, got " + std::to_string(p.beta));
}

void require_zero_domain(const WrightParams& p) {
    require_series_domain(p);
    if (!(p.rho > 0.0)) throw DomainError("rho must be > 0 for zeros and radii, got " + std::to_string(p.rho));
}

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 10> kFamilyNames{{
    {Family::Lambda, "lambda"},
    {Family::Psi, "psi"},
    {Family::PsiPrime, "psiprime"},
    {Family::SmallPsi, "smallpsi"},
    {Family::OmegaCap, "omegacap"},
    {Family::Theta, "theta"},
    {Family::OmegaLow, "omegalow"},
    {Family::F, "f"},
    {Family::G, "g"},
    {Family::H, "h"},
}};

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

}  // namespace

std::string_view to_string(Family f) {
    for (const auto& [fam, name] : kFamilyNames)
        if (fam == f) return name;
    return "?";
}

std::string_view to_string(RadiusKind k) { return k == RadiusKind::Starlike ? "starlike" : "convex"; }

std::string_view to_string(Norm n) {
    switch (n) {
        case Norm::F: return "f";
        case Norm::G: return "g";
        case Norm::H: return "h";
    }
    return "?";
}

Family parse_family(std::string_view s) {
    const std::string key = lower(s);
    for (const auto& [fam, name] : kFamilyNames)
        if (name == key) return fam;
    throw DomainError("unknown family '" + std::string(s) + "'");
}

RadiusKind parse_kind(std::string_view s) {
    const std::string key = lower(s);
    if (key == "starlike") return RadiusKind::Starlike;
    if (key == "convex") return RadiusKind::Convex;
    throw DomainError("unknown kind '" + std::string(s) + "'");
}

Norm parse_norm(std::string_view s) {
    const std::string key = lower(s);
    if (key == "f") return Norm::F;
    if (key == "g") return Norm::G;
    if (key == "h") return Norm::H;
    throw DomainError("unknown norm '" + std::string(s) + "'");
}

}  // namespace wradii
