#pragma once

#include <utility>
#include <vector>

#include "fdc/grid.hpp"

namespace fdc {

// ---------------------------------------------------------------------------
// Time difference and averaging operators. Schemes hold explicit two-level
// state, so these act on plain value triples (next, now, prev) at fixed k.
// ---------------------------------------------------------------------------

inline double delta_t_forward(double next, double now, double k) { return (next - now) / k; }
inline double delta_t_backward(double now, double prev, double k) { return (now - prev) / k; }
inline double delta_t_centered(double next, double prev, double k) {
    return (next - prev) / (2.0 * k);
}
inline double delta_tt(double next, double now, double prev, double k) {
    return (next - 2.0 * now + prev) / (k * k);
}
inline double mu_t_forward(double next, double now) { return 0.5 * (next + now); }
inline double mu_t_backward(double now, double prev) { return 0.5 * (now + prev); }
inline double mu_t_centered(double next, double prev) { return 0.5 * (next + prev); }

/// Elementwise application of one of the scalar time operators to grid levels.
template <typename F>
std::vector<double> zip_levels(const std::vector<double>& a, const std::vector<double>& b, F op) {
    if (a.size() != b.size()) throw std::invalid_argument("time level shape mismatch");
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
    return out;
}

// ---------------------------------------------------------------------------
// Space difference operators. Entries are written only where the stencil is
// fully supported; remaining entries are zero. Boundary conditions are the
// caller's business (model code substitutes its own ghost/pinning rules).
// ---------------------------------------------------------------------------

GridFunction1D delta_x_forward(const GridFunction1D& g);   // valid l = 0..N-1
GridFunction1D delta_x_backward(const GridFunction1D& g);  // valid l = 1..N
GridFunction1D delta_x_centered(const GridFunction1D& g);  // valid l = 1..N-1
GridFunction1D delta_xx(const GridFunction1D& g);          // valid l = 1..N-1
GridFunction1D delta_xxxx(const GridFunction1D& g);        // valid l = 2..N-2
GridFunction2D laplacian_2d(const GridFunction2D& g);      // valid interior nodes

// ---------------------------------------------------------------------------
// Inner products and norms, h-weighted (h^2 in 2D), summed left to right so
// results are reproducible bit for bit.
// ---------------------------------------------------------------------------

double inner_product(const GridFunction1D& a, const GridFunction1D& b, Domain d = Domain::Full);
double norm(const GridFunction1D& a, Domain d = Domain::Full);
double inner_product(const GridFunction2D& a, const GridFunction2D& b,
                     Domain dx = Domain::Full, Domain dy = Domain::Full);
double norm(const GridFunction2D& a, Domain dx = Domain::Full, Domain dy = Domain::Full);

// ---------------------------------------------------------------------------
// Summation-by-parts identity checks. Both sides of the identities are
// evaluated on the sub-domain shrunk by two nodes per side (one per side in
// 2D), so every stencil lands on stored values and arbitrary grid functions
// can be fed in. Returned residuals are |LHS - RHS| / max(1, |LHS|, |RHS|).
// ---------------------------------------------------------------------------

/// Residuals of the second- and fourth-difference 1D identities. Needs N >= 6.
std::pair<double, double> sbp_residual_1d(const GridFunction1D& a, const GridFunction1D& b);

/// The boundary sums of those identities alone (vanish for functions
/// supported away from the evaluation sub-domain's ends).
std::pair<double, double> sbp_boundary_terms_1d(const GridFunction1D& a, const GridFunction1D& b);

/// Residuals of the x- and y-direction 2D identities. Needs N >= 4.
std::pair<double, double> sbp_residual_2d(const GridFunction2D& a, const GridFunction2D& b);

std::pair<double, double> sbp_boundary_terms_2d(const GridFunction2D& a, const GridFunction2D& b);

}  // namespace fdc
