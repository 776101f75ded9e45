#include "fdc/ops.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace fdc {

namespace {

void require_min_nodes(const GridFunction1D& g, int min_n, const char* what) {
    if (g.n() < min_n) throw std::invalid_argument(std::string(what) + ": grid too small");
}

struct Range {
    int lo, hi;  // inclusive
};

Range select(Domain d, int n) {
    switch (d) {
        case Domain::Full: return {0, n};
        case Domain::TrimRight: return {0, n - 1};
        case Domain::Interior: return {1, n - 1};
    }
    return {0, n};
}

}  // namespace

GridFunction1D delta_x_forward(const GridFunction1D& g) {
    require_min_nodes(g, 1, "delta_x_forward");
    GridFunction1D out(g.n() + 1, g.h);
    for (int l = 0; l < g.n(); ++l) out[l] = (g[l + 1] - g[l]) / g.h;
    return out;
}

GridFunction1D delta_x_backward(const GridFunction1D& g) {
    require_min_nodes(g, 1, "delta_x_backward");
    GridFunction1D out(g.n() + 1, g.h);
    for (int l = 1; l <= g.n(); ++l) out[l] = (g[l] - g[l - 1]) / g.h;
    return out;
}

GridFunction1D delta_x_centered(const GridFunction1D& g) {
    require_min_nodes(g, 2, "delta_x_centered");
    GridFunction1D out(g.n() + 1, g.h);
    for (int l = 1; l < g.n(); ++l) out[l] = (g[l + 1] - g[l - 1]) / (2.0 * g.h);
    return out;
}

GridFunction1D delta_xx(const GridFunction1D& g) {
    require_min_nodes(g, 2, "delta_xx");
    GridFunction1D out(g.n() + 1, g.h);
    const double hh = g.h * g.h;
    for (int l = 1; l < g.n(); ++l) out[l] = (g[l + 1] - 2.0 * g[l] + g[l - 1]) / hh;
    return out;
}

GridFunction1D delta_xxxx(const GridFunction1D& g) {
    require_min_nodes(g, 4, "delta_xxxx");
    GridFunction1D out(g.n() + 1, g.h);
    const double h4 = g.h * g.h * g.h * g.h;
    for (int l = 2; l <= g.n() - 2; ++l)
        out[l] = (g[l + 2] - 4.0 * g[l + 1] + 6.0 * g[l] - 4.0 * g[l - 1] + g[l - 2]) / h4;
    return out;
}

GridFunction2D laplacian_2d(const GridFunction2D& g) {
    if (g.n() < 2) throw std::invalid_argument("laplacian_2d: grid too small");
    GridFunction2D out(g.n(), g.h);
    const double hh = g.h * g.h;
    for (int l = 1; l < g.n(); ++l)
        for (int m = 1; m < g.n(); ++m)
            out.at(l, m) = (g.at(l + 1, m) + g.at(l - 1, m) + g.at(l, m + 1) + g.at(l, m - 1) -
                            4.0 * g.at(l, m)) /
                           hh;
    return out;
}

double inner_product(const GridFunction1D& a, const GridFunction1D& b, Domain d) {
    require_same_shape(a, b);
    const Range r = select(d, a.n());
    double acc = 0.0;
    for (int l = r.lo; l <= r.hi; ++l) acc += a.h * a[l] * b[l];
    return acc;
}

double norm(const GridFunction1D& a, Domain d) { return std::sqrt(inner_product(a, a, d)); }

double inner_product(const GridFunction2D& a, const GridFunction2D& b, Domain dx, Domain dy) {
    require_same_shape(a, b);
    const Range rx = select(dx, a.n());
    const Range ry = select(dy, a.n());
    const double w = a.h * a.h;
    double acc = 0.0;
    for (int l = rx.lo; l <= rx.hi; ++l)
        for (int m = ry.lo; m <= ry.hi; ++m) acc += w * a.at(l, m) * b.at(l, m);
    return acc;
}

double norm(const GridFunction2D& a, Domain dx, Domain dy) {
    return std::sqrt(inner_product(a, a, dx, dy));
}

namespace {

double rel_residual(double lhs, double rhs) {
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

// Both 1D identities, evaluated over nodes s..e of the stored lattice so that
// every stencil (up to two nodes wide) stays in range.
struct Sbp1dParts {
    double lhs_xx, interior_xx, boundary_xx;
    double lhs_xxxx, interior_xxxx, boundary_xxxx;
};

Sbp1dParts sbp_parts_1d(const GridFunction1D& a, const GridFunction1D& b) {
    require_same_shape(a, b);
    if (a.n() < 6) throw std::invalid_argument("sbp_residual_1d: need N >= 6");
    const double h = a.h;
    const int s = 2, e = a.n() - 2;

    auto dxx = [&](const GridFunction1D& g, int l) {
        return (g[l + 1] - 2.0 * g[l] + g[l - 1]) / (h * h);
    };
    auto dxxxx = [&](const GridFunction1D& g, int l) {
        return (g[l + 2] - 4.0 * g[l + 1] + 6.0 * g[l] - 4.0 * g[l - 1] + g[l - 2]) /
               (h * h * h * h);
    };
    auto dxp = [&](const GridFunction1D& g, int l) { return (g[l + 1] - g[l]) / h; };
    auto dxm = [&](const GridFunction1D& g, int l) { return (g[l] - g[l - 1]) / h; };

    Sbp1dParts p{};

    // <a, dxx b> = -<dx+ a, dx+ b>_{trim right} - a_s dx- b_s + a_e dx+ b_e
    for (int l = s; l <= e; ++l) p.lhs_xx += h * a[l] * dxx(b, l);
    for (int l = s; l <= e - 1; ++l) p.interior_xx -= h * dxp(a, l) * dxp(b, l);
    p.boundary_xx = -a[s] * dxm(b, s) + a[e] * dxp(b, e);

    // <a, dxxxx b> = <dxx a, dxx b>_{interior} - a_s dx- dxx b_s + dx+ a_s dxx b_s
    //                + a_e dx+ dxx b_e - dx- a_e dxx b_e
    for (int l = s; l <= e; ++l) p.lhs_xxxx += h * a[l] * dxxxx(b, l);
    for (int l = s + 1; l <= e - 1; ++l) p.interior_xxxx += h * dxx(a, l) * dxx(b, l);
    p.boundary_xxxx = -a[s] * (dxx(b, s) - dxx(b, s - 1)) / h + dxp(a, s) * dxx(b, s) +
                      a[e] * (dxx(b, e + 1) - dxx(b, e)) / h - dxm(a, e) * dxx(b, e);

    return p;
}

}  // namespace

std::pair<double, double> sbp_residual_1d(const GridFunction1D& a, const GridFunction1D& b) {
    const Sbp1dParts p = sbp_parts_1d(a, b);
    return {rel_residual(p.lhs_xx, p.interior_xx + p.boundary_xx),
            rel_residual(p.lhs_xxxx, p.interior_xxxx + p.boundary_xxxx)};
}

std::pair<double, double> sbp_boundary_terms_1d(const GridFunction1D& a, const GridFunction1D& b) {
    const Sbp1dParts p = sbp_parts_1d(a, b);
    return {p.boundary_xx, p.boundary_xxxx};
}

namespace {

struct Sbp2dParts {
    double lhs_x, interior_x, boundary_x;
    double lhs_y, interior_y, boundary_y;
};

Sbp2dParts sbp_parts_2d(const GridFunction2D& a, const GridFunction2D& b) {
    require_same_shape(a, b);
    if (a.n() < 4) throw std::invalid_argument("sbp_residual_2d: need N >= 4");
    const int n = a.n();
    const int s = 1, e = n - 1;  // shrink only the differenced direction

    Sbp2dParts p{};

    // The h^2 inner-product weight cancels the 1/h^2 of the second-difference
    // stencils (and one 1/h of the first differences), so the volume terms are
    // plain products of raw differences and the boundary sums carry a bare h.

    // x direction: <a, dxx b> over l = s..e, all m
    for (int l = s; l <= e; ++l)
        for (int m = 0; m <= n; ++m)
            p.lhs_x += a.at(l, m) * (b.at(l + 1, m) - 2.0 * b.at(l, m) + b.at(l - 1, m));
    for (int l = s; l <= e - 1; ++l)
        for (int m = 0; m <= n; ++m)
            p.interior_x -= (a.at(l + 1, m) - a.at(l, m)) * (b.at(l + 1, m) - b.at(l, m));
    for (int m = 0; m <= n; ++m)
        p.boundary_x += a.at(e, m) * (b.at(e + 1, m) - b.at(e, m)) -
                        a.at(s, m) * (b.at(s, m) - b.at(s - 1, m));

    // y direction
    for (int m = s; m <= e; ++m)
        for (int l = 0; l <= n; ++l)
            p.lhs_y += a.at(l, m) * (b.at(l, m + 1) - 2.0 * b.at(l, m) + b.at(l, m - 1));
    for (int m = s; m <= e - 1; ++m)
        for (int l = 0; l <= n; ++l)
            p.interior_y -= (a.at(l, m + 1) - a.at(l, m)) * (b.at(l, m + 1) - b.at(l, m));
    for (int l = 0; l <= n; ++l)
        p.boundary_y += a.at(l, e) * (b.at(l, e + 1) - b.at(l, e)) -
                        a.at(l, s) * (b.at(l, s) - b.at(l, s - 1));

    return p;
}

}  // namespace

std::pair<double, double> sbp_residual_2d(const GridFunction2D& a, const GridFunction2D& b) {
    const Sbp2dParts p = sbp_parts_2d(a, b);
    return {rel_residual(p.lhs_x, p.interior_x + p.boundary_x),
            rel_residual(p.lhs_y, p.interior_y + p.boundary_y)};
}

std::pair<double, double> sbp_boundary_terms_2d(const GridFunction2D& a, const GridFunction2D& b) {
    const Sbp2dParts p = sbp_parts_2d(a, b);
    return {p.boundary_x, p.boundary_y};
}

}  // namespace fdc
