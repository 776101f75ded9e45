#pragma once

#include <Eigen/Dense>
#include <functional>

#include "fdc/contact.hpp"

namespace fdc {

/// Chord slope of the potential, (phi(a+r) - phi(a)) / r, with the removable
/// singularity at r = 0 replaced by the analytic limit. Non-negative and
/// non-decreasing in r for a convex one-sided potential.
double contact_quotient(const PowerLawPotential& p, double a, double r);

/// d/dr of contact_quotient; non-negative.
double contact_quotient_derivative(const PowerLawPotential& p, double a, double r);

/// Scalar update equation  G(r) = (1+c) r + (m/r)(phi(r+a) - phi(a)) + b = 0.
/// G'(r) >= 1, so the root exists, is unique, and bracketing is cheap.
struct ScalarContactEquation {
    double m = 0.0;  // > 0
    double a = 0.0;  // previous-step penetration measure
    double b = 0.0;  // explicit drift
    double c = 0.0;  // loss coefficient, >= 0 (0 = conservative)
    PowerLawPotential potential;

    double evaluate(double r) const;
    double derivative(double r) const;
    void validate() const;
};

struct NewtonOutcome {
    double root = 0.0;
    int iterations = 0;
    double residual = 0.0;
    bool safeguarded = false;  // a bisection step or fallback was taken
};

/// Bracketed Newton for G(r) = 0; steps leaving the bracket are replaced by
/// bisection, and an iteration-cap overrun falls back to pure bisection.
/// Converges to |G| <= 1e-13 max(1, |b|).
NewtonOutcome solve_scalar(const ScalarContactEquation& eq, double initial_guess = 0.0);

/// Coupled reed update:  G(r) - g p = 0  and  r - R(p) = 0  with
///     R(p) = -v0 - v1 p - v2 [-eta_now]_+ sqrt(|p|) sign(p).
/// Solved as a 2x2 Newton system in (r, s) with p = s|s|, which keeps the
/// Jacobian bounded through p = 0.
struct ReedPairEquation {
    double m = 0.0;
    double a = 0.0;
    double b = 0.0;
    double g = 0.0;        // > 0
    double v0 = 0.0;
    double v1 = 0.0;       // > 0
    double v2 = 0.0;       // >= 0
    double eta_now = 0.0;  // gates the flow term via [-eta_now]_+
    PowerLawPotential potential;

    double flow_gate() const { return positive_part(-eta_now); }
    double reed_flow(double p_delta) const;  // R(p_delta)
    void validate() const;
};

struct ReedPairOutcome {
    double r = 0.0;
    double p_delta = 0.0;
    int iterations = 0;
    double residual = 0.0;
    bool safeguarded = false;
};

ReedPairOutcome solve_reed_pair(const ReedPairEquation& eq, double r_guess = 0.0,
                                double p_guess = 0.0);

/// Vector update for distributed/distributed contact:
///     G(r) = r + M w(r) + b = 0,   w_i = (phi(r_i + a_i) - phi(a_i)) / r_i,
/// with M symmetric positive definite. Newton runs on the preconditioned form
/// Ghat = M^{-1}(r + b) + w, whose Jacobian M^{-1} + diag(w') is positive
/// definite; each step solves (I + M diag(w')) dr = -G.
struct VectorContactEquation {
    Eigen::MatrixXd coupling;  // M
    Eigen::VectorXd a;
    Eigen::VectorXd b;
    PowerLawPotential potential;
};

struct VectorNewtonOutcome {
    Eigen::VectorXd root;
    int iterations = 0;
    double residual = 0.0;
    bool safeguarded = false;
};

VectorNewtonOutcome solve_vector(const VectorContactEquation& eq, const Eigen::VectorXd& guess);
VectorNewtonOutcome solve_vector(const VectorContactEquation& eq);

/// Plain bisection to tol given a sign change on [lo, hi]. Reference solver
/// for oracle tests and the scalar safeguard; never the primary update path.
double bisection_root(const std::function<double(double)>& f, double lo, double hi,
                      double tol = 1e-14, int max_iter = 200);

}  // namespace fdc
