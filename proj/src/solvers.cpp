#include "fdc/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fdc {

namespace {
constexpr double kScalarTol = 1e-13;
constexpr double kSystemTol = 1e-12;
constexpr int kMaxNewton = 50;

double quotient_scale(double a, double r) { return std::max({1.0, std::abs(a), std::abs(a + r)}); }
}  // namespace

double contact_quotient(const PowerLawPotential& p, double a, double r) {
    if (std::abs(r) < 1e-12 * quotient_scale(a, r)) return phi_prime(p, a + 0.5 * r);
    return (phi(p, a + r) - phi(p, a)) / r;
}

double contact_quotient_derivative(const PowerLawPotential& p, double a, double r) {
    if (std::abs(r) < 1e-12 * quotient_scale(a, r)) return 0.5 * phi_second(p, a + 0.5 * r);
    return (phi_prime(p, a + r) * r - (phi(p, a + r) - phi(p, a))) / (r * r);
}

void ScalarContactEquation::validate() const {
    potential.validate();
    if (!(m > 0.0)) throw std::invalid_argument("scalar contact equation: m must be > 0");
    if (!(c >= 0.0)) throw std::invalid_argument("scalar contact equation: c must be >= 0");
}

double ScalarContactEquation::evaluate(double r) const {
    return (1.0 + c) * r + m * contact_quotient(potential, a, r) + b;
}

double ScalarContactEquation::derivative(double r) const {
    return (1.0 + c) + m * contact_quotient_derivative(potential, a, r);
}

NewtonOutcome solve_scalar(const ScalarContactEquation& eq, double initial_guess) {
    eq.validate();
    const double tol = kScalarTol * std::max(1.0, std::abs(eq.b));

    NewtonOutcome out;
    double x = initial_guess;
    double gx = eq.evaluate(x);
    if (std::abs(gx) <= tol) {
        out.root = x;
        out.residual = std::abs(gx);
        return out;
    }

    // G' >= 1, so moving by |G(x)| against the sign of G(x) crosses the root.
    double lo, hi, ghi;
    double step = std::abs(gx);
    for (int attempt = 0;; ++attempt) {
        if (attempt > 80) throw std::runtime_error("solve_scalar: failed to bracket the root");
        const double other = gx > 0.0 ? x - step : x + step;
        const double gother = eq.evaluate(other);
        if ((gx > 0.0) != (gother > 0.0) || gother == 0.0) {
            lo = std::min(x, other);
            hi = std::max(x, other);
            ghi = hi == x ? gx : gother;
            break;
        }
        step *= 2.0;
    }

    for (int it = 1; it <= kMaxNewton; ++it) {
        const double gp = eq.derivative(x);
        double next = x - gx / gp;
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
            out.safeguarded = true;
        }
        x = next;
        gx = eq.evaluate(x);
        out.iterations = it;
        if (std::abs(gx) <= tol) {
            out.root = x;
            out.residual = std::abs(gx);
            return out;
        }
        if ((gx > 0.0) == (ghi > 0.0)) {
            hi = x;
            ghi = gx;
        } else {
            lo = x;
        }
    }

    // Newton cap exceeded: finish by bisection on the maintained bracket.
    out.safeguarded = true;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gmid = eq.evaluate(mid);
        ++out.iterations;
        if (std::abs(gmid) <= tol || hi - lo <= 1e-17 * std::max(1.0, std::abs(mid))) {
            out.root = mid;
            out.residual = std::abs(gmid);
            if (std::abs(gmid) > tol)
                throw std::runtime_error("solve_scalar: bisection fallback stalled");
            return out;
        }
        if ((gmid > 0.0) == (ghi > 0.0)) {
            hi = mid;
            ghi = gmid;
        } else {
            lo = mid;
        }
    }
    throw std::runtime_error("solve_scalar: did not converge");
}

void ReedPairEquation::validate() const {
    potential.validate();
    if (!(m > 0.0)) throw std::invalid_argument("reed pair: m must be > 0");
    if (!(g > 0.0)) throw std::invalid_argument("reed pair: g must be > 0");
    if (!(v1 > 0.0)) throw std::invalid_argument("reed pair: v1 must be > 0");
    if (!(v2 >= 0.0)) throw std::invalid_argument("reed pair: v2 must be >= 0");
}

double ReedPairEquation::reed_flow(double p_delta) const {
    const double sgn = p_delta >= 0.0 ? 1.0 : -1.0;
    return -v0 - v1 * p_delta - v2 * flow_gate() * std::sqrt(std::abs(p_delta)) * sgn;
}

ReedPairOutcome solve_reed_pair(const ReedPairEquation& eq, double r_guess, double p_guess) {
    eq.validate();
    const double q = eq.flow_gate();
    const double tol1 = kSystemTol * std::max(1.0, std::abs(eq.b));
    const double tol2 = kSystemTol * std::max(1.0, std::abs(eq.v0));

    ReedPairOutcome out;

    if (q == 0.0) {
        // Flow channel closed: the second equation is linear, p = -(r + v0)/v1,
        // and the pair collapses to one monotone scalar equation in r.
        ScalarContactEquation collapsed;
        collapsed.m = eq.m;
        collapsed.a = eq.a;
        collapsed.b = eq.b + eq.g * eq.v0 / eq.v1;
        collapsed.c = eq.g / eq.v1;
        collapsed.potential = eq.potential;
        const NewtonOutcome s = solve_scalar(collapsed, r_guess);
        out.r = s.root;
        out.p_delta = -(s.root + eq.v0) / eq.v1;
        out.iterations = s.iterations;
        out.safeguarded = s.safeguarded;
        const double f1 = s.root + eq.m * contact_quotient(eq.potential, eq.a, s.root) + eq.b -
                          eq.g * out.p_delta;
        const double f2 = s.root - eq.reed_flow(out.p_delta);
        out.residual = std::max(std::abs(f1), std::abs(f2));
        return out;
    }

    // Substitute p = s|s| so the sqrt branch has a bounded Jacobian at p = 0.
    double r = r_guess;
    double s = (p_guess >= 0.0 ? 1.0 : -1.0) * std::sqrt(std::abs(p_guess));

    auto residuals = [&](double rr, double ss, double& f1, double& f2) {
        const double p = ss * std::abs(ss);
        f1 = (1.0) * rr + eq.m * contact_quotient(eq.potential, eq.a, rr) + eq.b - eq.g * p;
        f2 = rr + eq.v0 + eq.v1 * p + eq.v2 * q * ss;
    };

    double f1, f2;
    residuals(r, s, f1, f2);
    double score = std::max(std::abs(f1) / tol1, std::abs(f2) / tol2);

    for (int it = 1; it <= kMaxNewton; ++it) {
        if (score <= 1.0) break;
        const double j11 = 1.0 + eq.m * contact_quotient_derivative(eq.potential, eq.a, r);
        const double j12 = -2.0 * eq.g * std::abs(s);
        const double j21 = 1.0;
        const double j22 = 2.0 * eq.v1 * std::abs(s) + eq.v2 * q;
        const double det = j11 * j22 - j12 * j21;  // >= v2 q > 0
        const double dr = (-f1 * j22 + f2 * j12) / det;
        const double ds = (-j11 * f2 + j21 * f1) / det;

        double lambda = 1.0;
        double rn = r, sn = s, f1n, f2n, score_n = score;
        for (int back = 0; back < 40; ++back) {
            rn = r + lambda * dr;
            sn = s + lambda * ds;
            residuals(rn, sn, f1n, f2n);
            score_n = std::max(std::abs(f1n) / tol1, std::abs(f2n) / tol2);
            if (score_n < score) break;
            lambda *= 0.5;
            out.safeguarded = true;
        }
        r = rn;
        s = sn;
        f1 = f1n;
        f2 = f2n;
        score = score_n;
        out.iterations = it;
    }
    if (score > 1.0) throw std::runtime_error("solve_reed_pair: did not converge");

    out.r = r;
    out.p_delta = s * std::abs(s);
    out.residual = std::max(std::abs(f1), std::abs(f2));
    return out;
}

VectorNewtonOutcome solve_vector(const VectorContactEquation& eq) {
    return solve_vector(eq, Eigen::VectorXd::Zero(eq.b.size()));
}

VectorNewtonOutcome solve_vector(const VectorContactEquation& eq, const Eigen::VectorXd& guess) {
    eq.potential.validate();
    const Eigen::Index n = eq.b.size();
    if (eq.a.size() != n || eq.coupling.rows() != n || eq.coupling.cols() != n ||
        guess.size() != n)
        throw std::invalid_argument("solve_vector: inconsistent sizes");

    Eigen::LLT<Eigen::MatrixXd> llt(eq.coupling);
    if (llt.info() != Eigen::Success)
        throw std::invalid_argument("solve_vector: coupling matrix is not positive definite");

    const double scale = std::max(1.0, llt.solve(eq.b).cwiseAbs().maxCoeff());

    Eigen::VectorXd r = guess;
    Eigen::VectorXd w(n), g(n), ghat(n);

    auto evaluate = [&](const Eigen::VectorXd& rr, Eigen::VectorXd& ww, Eigen::VectorXd& gg,
                        Eigen::VectorXd& gh) {
        for (Eigen::Index i = 0; i < n; ++i)
            ww[i] = contact_quotient(eq.potential, eq.a[i], rr[i]);
        gg = rr + eq.coupling * ww + eq.b;
        gh = llt.solve(rr + eq.b) + ww;
    };

    evaluate(r, w, g, ghat);
    VectorNewtonOutcome out;
    out.residual = ghat.cwiseAbs().maxCoeff();

    for (int it = 1; it <= kMaxNewton; ++it) {
        if (out.residual <= kSystemTol * scale) break;
        Eigen::MatrixXd jac = Eigen::MatrixXd::Identity(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            jac.col(i) += eq.coupling.col(i) *
                          contact_quotient_derivative(eq.potential, eq.a[i], r[i]);
        const Eigen::VectorXd dr = jac.partialPivLu().solve(-g);

        double lambda = 1.0;
        Eigen::VectorXd rn(n), wn(n), gn(n), ghn(n);
        double res_n = out.residual;
        for (int back = 0; back < 40; ++back) {
            rn = r + lambda * dr;
            evaluate(rn, wn, gn, ghn);
            res_n = ghn.cwiseAbs().maxCoeff();
            if (res_n < out.residual) break;
            lambda *= 0.5;
            out.safeguarded = true;
        }
        r = rn;
        w = wn;
        g = gn;
        ghat = ghn;
        out.residual = res_n;
        out.iterations = it;
    }
    if (out.residual > kSystemTol * scale)
        throw std::runtime_error("solve_vector: did not converge");
    out.root = r;
    return out;
}

double bisection_root(const std::function<double(double)>& f, double lo, double hi, double tol,
                      int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::invalid_argument("bisection_root: no sign change on bracket");
    for (int it = 0; it < max_iter; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0 || hi - lo <= tol * std::max(1.0, std::abs(mid))) return mid;
        if ((fmid > 0.0) == (fhi > 0.0)) {
            hi = mid;
            fhi = fmid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace fdc
