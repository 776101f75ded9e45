#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fdc {

/// One-sided power-law penalty potential
///     phi(eta) = K [eta]_+^(alpha+1) / (alpha+1),   force phi'(eta) = K [eta]_+^alpha.
/// Active only for positive penetration eta; convex and differentiable for
/// alpha > 1. Large K (1e13..1e16) approximates a perfectly rigid barrier.
struct PowerLawPotential {
    double stiffness = 0.0;  // K >= 0
    double exponent = 0.0;   // alpha > 1

    void validate() const {
        if (!(stiffness >= 0.0)) throw std::invalid_argument("potential: stiffness must be >= 0");
        if (!(exponent > 1.0)) throw std::invalid_argument("potential: exponent must be > 1");
    }
};

inline double positive_part(double x) { return 0.5 * (x + std::abs(x)); }

inline double phi(const PowerLawPotential& p, double eta) {
    if (eta <= 0.0) return 0.0;
    return p.stiffness * std::pow(eta, p.exponent + 1.0) / (p.exponent + 1.0);
}

inline double phi_prime(const PowerLawPotential& p, double eta) {
    if (eta <= 0.0) return 0.0;
    return p.stiffness * std::pow(eta, p.exponent);
}

inline double phi_second(const PowerLawPotential& p, double eta) {
    if (eta <= 0.0) return 0.0;
    return p.stiffness * p.exponent * std::pow(eta, p.exponent - 1.0);
}

/// Penalty potential plus Hunt-Crossley damping coefficient
///     xi(eta) = K beta [eta]_+^alpha,  beta = 0 recovers the conservative law.
struct ContactLaw {
    PowerLawPotential potential;
    double damping = 0.0;  // beta >= 0

    void validate() const {
        potential.validate();
        if (!(damping >= 0.0)) throw std::invalid_argument("contact law: damping must be >= 0");
    }
};

inline double xi(const ContactLaw& law, double eta) {
    return law.damping * phi_prime(law.potential, eta);
}

/// Conservative contact force of the interleaved schemes, the difference
/// quotient (phi(eta_next) - phi(eta_prev)) / (eta_next - eta_prev). The
/// singularity at eta_next == eta_prev is removable; below the switch
/// tolerance the analytic limit phi'(midpoint) is returned instead, since the
/// ratio form loses all precision there.
inline double discrete_contact_force(const PowerLawPotential& p, double eta_next,
                                     double eta_prev) {
    const double r = eta_next - eta_prev;
    const double scale = std::max({1.0, std::abs(eta_next), std::abs(eta_prev)});
    if (std::abs(r) < 1e-12 * scale) return phi_prime(p, 0.5 * (eta_next + eta_prev));
    return (phi(p, eta_next) - phi(p, eta_prev)) / r;
}

}  // namespace fdc
