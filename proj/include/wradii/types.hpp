#pragma once

#include <string>
#include <string_view>

namespace wradii {

/// Parameter pair (rho, beta) selecting one member of the Wright family.
struct WrightParams {
    double rho = 1.0;
    double beta = 1.0;
};

/// Throws DomainError unless rho > -1, beta > 0 and both are finite.
void require_series_domain(const WrightParams& p);

/// Throws DomainError unless rho > 0 and beta > 0 (the real-zero regime).
void require_zero_domain(const WrightParams& p);

/// Entire functions built from lambda(z) = phi(rho, beta, -z^2).
///
/// Lambda    lambda(z)
/// Psi       z^beta lambda(z)
/// PsiPrime  Psi'(z)
/// SmallPsi  (z lambda(z))'
/// OmegaCap  (z lambda(sqrt z))'
/// Theta     (z g'(z))'
/// OmegaLow  (z h'(z))'
/// F, G, H   the three normalizations in the class of f(0) = f'(0) - 1 = 0
enum class Family { Lambda, Psi, PsiPrime, SmallPsi, OmegaCap, Theta, OmegaLow, F, G, H };

enum class RadiusKind { Starlike, Convex };
enum class Norm { F, G, H };

std::string_view to_string(Family f);
std::string_view to_string(RadiusKind k);
std::string_view to_string(Norm n);

/// Case-insensitive parsers; throw DomainError on unknown names.
Family parse_family(std::string_view s);
RadiusKind parse_kind(std::string_view s);
Norm parse_norm(std::string_view s);

}  // namespace wradii
