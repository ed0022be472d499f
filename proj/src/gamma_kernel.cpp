#include "wradii/gamma_kernel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wradii/errors.hpp"

namespace wradii {

SignedLog SignedLog::from_value(double v) {
    if (v == 0.0) return {};
    return {v > 0 ? 1 : -1, std::log(std::fabs(v))};
}

double SignedLog::value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

SignedLog SignedLog::operator*(const SignedLog& o) const {
    if (sign == 0 || o.sign == 0) return {};
    return {sign * o.sign, log_abs + o.log_abs};
}

SignedLog SignedLog::operator/(const SignedLog& o) const {
    if (o.sign == 0) throw DomainError("SignedLog: division by zero");
    if (sign == 0) return {};
    return {sign * o.sign, log_abs - o.log_abs};
}

SignedLog SignedLog::operator+(const SignedLog& o) const {
    if (sign == 0) return o;
    if (o.sign == 0) return *this;
    const SignedLog& big = log_abs >= o.log_abs ? *this : o;
    const SignedLog& small = log_abs >= o.log_abs ? o : *this;
    const double d = small.log_abs - big.log_abs;  // <= 0
    if (big.sign == small.sign) return {big.sign, big.log_abs + std::log1p(std::exp(d))};
    // big - small = big * (1 - e^d); -expm1(d) keeps digits when d is near 0
    const double factor = -std::expm1(d);
    if (factor == 0.0) return {};
    return {big.sign, big.log_abs + std::log(factor)};
}

SignedLog SignedLog::operator-(const SignedLog& o) const { return *this + SignedLog{-o.sign, o.log_abs}; }

double log_gamma(double x) {
    if (!std::isfinite(x) || x <= 0.0)
        throw DomainError("log_gamma: argument must be positive and finite, got " + std::to_string(x));
    if (x == 1.0 || x == 2.0) return 0.0;
    int sign = 0;
    return ::lgamma_r(x, &sign);
}

SignedLog signed_log_gamma(double x) {
    if (!std::isfinite(x)) throw DomainError("signed_log_gamma: non-finite argument");
    if (x <= 0.0 && x == std::floor(x)) throw DomainError("signed_log_gamma: pole of Gamma");
    int sign = 0;
    const double l = ::lgamma_r(x, &sign);
    return {sign, l};
}

double reciprocal_gamma(double x) {
    if (!std::isfinite(x)) throw DomainError("reciprocal_gamma: non-finite argument");
    if (x <= 0.0 && x == std::floor(x)) return 0.0;
    if (x > 0.0 && x < 170.0) return 1.0 / std::tgamma(x);
    const SignedLog g = signed_log_gamma(x);
    return g.sign * std::exp(-g.log_abs);
}

namespace {

void require_gamma_params(const WrightParams& p, const char* who) {
    if (!(p.rho > 0.0) || !(p.beta > 0.0) || !std::isfinite(p.rho) || !std::isfinite(p.beta))
        throw DomainError(std::string(who) + ": requires rho > 0 and beta > 0");
}

}  // namespace

SignedLog log_delta_ab(double a, double b, const WrightParams& p) {
    require_gamma_params(p, "delta_ab");
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("delta_ab: requires a > 0 and b > 0");
    const double first = std::log(a) + log_gamma(p.beta) + log_gamma(2.0 * p.rho + p.beta);
    const double second = std::log(b) + 2.0 * log_gamma(p.rho + p.beta);
    // a e^first' - b e^second' = e^second * expm1(first - second)
    const double e = std::expm1(first - second);
    if (e == 0.0) return {};
    return {e > 0 ? 1 : -1, second + std::log(std::fabs(e))};
}

double delta_ab(double a, double b, const WrightParams& p) { return log_delta_ab(a, b, p).value(); }

SignedLog log_xi(const WrightParams& p) {
    require_gamma_params(p, "xi");
    const double b = p.beta;
    const SignedLog prefactor{1, 2.0 * std::log(b + 2.0) + log_gamma(b) + log_gamma(3.0 * p.rho + b)};
    return prefactor * log_delta_ab(2.0 * (b + 2.0), b + 4.0, p);
}

double xi(const WrightParams& p) { return log_xi(p).value(); }

}  // namespace wradii
