#include "msosc/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "msosc/errors.hpp"

namespace msosc {

namespace {

using ld = long double;

long step_count(std::pair<double, double> span, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("step length must be positive");
    const double len = span.second - span.first;
    const double n_real = len / h;
    const long n = std::lround(n_real);
    if (n < 1 || std::abs(n_real - static_cast<double>(n)) > 1e-9 * std::max(1.0, n_real))
        throw std::invalid_argument("step length does not divide the span");
    return n;
}

// Legendre P_s and P_s' on (-1,1) by the three-term recurrence.
void legendre(int s, ld x, ld& p, ld& dp) {
    ld p0 = 1.0L, p1 = x;
    if (s == 0) {
        p = p0;
        dp = 0.0L;
        return;
    }
    for (int k = 2; k <= s; ++k) {
        const ld pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = pk;
    }
    p = p1;
    dp = s * (x * p1 - p0) / (x * x - 1.0L);
}

// Solve M u = r in long double, Gaussian elimination with partial pivoting.
std::vector<ld> solve_dense(std::vector<std::vector<ld>> M, std::vector<ld> r) {
    const std::size_t n = r.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (fabsl(M[i][k]) > fabsl(M[piv][k])) piv = i;
        std::swap(M[k], M[piv]);
        std::swap(r[k], r[piv]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const ld f = M[i][k] / M[k][k];
            for (std::size_t j = k; j < n; ++j) M[i][j] -= f * M[k][j];
            r[i] -= f * r[k];
        }
    }
    std::vector<ld> u(n);
    for (std::size_t i = n; i-- > 0;) {
        ld acc = r[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= M[i][j] * u[j];
        u[i] = acc / M[i][i];
    }
    return u;
}

}  // namespace

double FrequencySchedule::at(double x) const {
    if (omega.size() != breakpoints.size() + 1)
        throw ScheduleGap("frequency schedule: omega list must have one more entry than breakpoints");
    std::size_t i = 0;
    while (i < breakpoints.size() && x >= breakpoints[i]) ++i;
    return omega[i];
}

GaussTableau gauss_tableau(int stages) {
    if (stages < 1 || stages > 10)
        throw std::invalid_argument("gauss_tableau: stages must be in [1, 10]");
    const int s = stages;
    std::vector<ld> c(static_cast<std::size_t>(s));
    std::vector<ld> w(static_cast<std::size_t>(s));
    for (int k = 0; k < s; ++k) {
        // Chebyshev-style initial guess, then Newton on P_s.
        ld x = cosl(M_PI * (4.0L * (k + 1) - 1.0L) / (4.0L * s + 2.0L));
        ld p, dp;
        bool converged = false;
        for (int it = 0; it < 100; ++it) {
            legendre(s, x, p, dp);
            const ld step = p / dp;
            x -= step;
            if (fabsl(step) < 1e-19L) {
                converged = true;
                break;
            }
        }
        legendre(s, x, p, dp);
        if (!converged && fabsl(p) > 1e-15L)
            throw NoConvergence("gauss_tableau: Legendre root Newton iteration stalled");
        c[static_cast<std::size_t>(s - 1 - k)] = (x + 1.0L) / 2.0L;
        w[static_cast<std::size_t>(s - 1 - k)] = 1.0L / ((1.0L - x * x) * dp * dp);
    }
    // A from the collocation conditions sum_j A_ij c_j^k = c_i^(k+1)/(k+1).
    std::vector<std::vector<ld>> V(static_cast<std::size_t>(s),
                                   std::vector<ld>(static_cast<std::size_t>(s)));
    for (int k = 0; k < s; ++k)
        for (int j = 0; j < s; ++j)
            V[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
                powl(c[static_cast<std::size_t>(j)], k);

    GaussTableau tab;
    tab.stages = s;
    tab.c.resize(s);
    tab.w.resize(s);
    tab.A.resize(s, s);
    for (int i = 0; i < s; ++i) {
        std::vector<ld> rhs(static_cast<std::size_t>(s));
        for (int k = 0; k < s; ++k)
            rhs[static_cast<std::size_t>(k)] =
                powl(c[static_cast<std::size_t>(i)], k + 1) / (k + 1);
        const std::vector<ld> row = solve_dense(V, rhs);
        for (int j = 0; j < s; ++j)
            tab.A(i, j) = static_cast<double>(row[static_cast<std::size_t>(j)]);
        tab.c(i) = static_cast<double>(c[static_cast<std::size_t>(i)]);
        tab.w(i) = static_cast<double>(w[static_cast<std::size_t>(i)]);
    }
    return tab;
}

ReferenceTrajectory integrate_reference(const SecondOrderProblem& problem,
                                        const Eigen::VectorXd& y0, const Eigen::VectorXd& dy0,
                                        std::pair<double, double> x_span, double h, int stages) {
    const long n_steps = step_count(x_span, h);
    const GaussTableau tab = gauss_tableau(stages);
    const int d = problem.dimension;
    const int s = stages;

    ReferenceTrajectory out;
    out.x0 = x_span.first;
    out.h = h;
    out.y.reserve(static_cast<std::size_t>(n_steps + 1));
    out.dy.reserve(static_cast<std::size_t>(n_steps + 1));
    out.y.push_back(y0);
    out.dy.push_back(dy0);

    Eigen::VectorXd y = y0, dy = dy0, f(d), yi(d);
    std::vector<Eigen::VectorXd> ky(static_cast<std::size_t>(s)),
        kdy(static_cast<std::size_t>(s));
    for (long n = 0; n < n_steps; ++n) {
        const double xn = out.x(static_cast<std::size_t>(n));
        problem.rhs(xn, y, f);
        for (int i = 0; i < s; ++i) {
            ky[static_cast<std::size_t>(i)] = dy;  // stage slope of y is a velocity
            kdy[static_cast<std::size_t>(i)] = f;
        }
        bool converged = false;
        for (int it = 0; it < 100; ++it) {
            double inc = 0.0;
            for (int i = 0; i < s; ++i) {
                Eigen::VectorXd sy = Eigen::VectorXd::Zero(d), sdy = Eigen::VectorXd::Zero(d);
                for (int j = 0; j < s; ++j) {
                    sy += tab.A(i, j) * ky[static_cast<std::size_t>(j)];
                    sdy += tab.A(i, j) * kdy[static_cast<std::size_t>(j)];
                }
                yi = y + h * sy;
                const Eigen::VectorXd dyi = dy + h * sdy;
                problem.rhs(xn + tab.c(i) * h, yi, f);
                inc = std::max(inc, (dyi - ky[static_cast<std::size_t>(i)]).lpNorm<Eigen::Infinity>());
                inc = std::max(inc, (f - kdy[static_cast<std::size_t>(i)]).lpNorm<Eigen::Infinity>());
                ky[static_cast<std::size_t>(i)] = dyi;
                kdy[static_cast<std::size_t>(i)] = f;
            }
            if (inc < 1e-14) {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw StageIterationDiverged("integrate_reference: stage iteration did not reach 1e-14");
        for (int i = 0; i < s; ++i) {
            y += h * tab.w(i) * ky[static_cast<std::size_t>(i)];
            dy += h * tab.w(i) * kdy[static_cast<std::size_t>(i)];
        }
        out.y.push_back(y);
        out.dy.push_back(dy);
    }
    return out;
}

std::vector<Eigen::VectorXd> start_values(const SecondOrderProblem& problem,
                                          const Eigen::VectorXd& y0, const Eigen::VectorXd& dy0,
                                          double h, int count, double x0) {
    if (count < 1) throw std::invalid_argument("start_values: count must be >= 1");
    std::vector<Eigen::VectorXd> out;
    out.reserve(static_cast<std::size_t>(count));
    out.push_back(y0);
    if (count == 1) return out;
    constexpr int kSubsteps = 20;
    const double span_end = x0 + static_cast<double>(count - 1) * h;
    const ReferenceTrajectory ref =
        integrate_reference(problem, y0, dy0, {x0, span_end}, h / kSubsteps, 5);
    for (int n = 1; n < count; ++n)
        out.push_back(ref.y[static_cast<std::size_t>(n) * kSubsteps]);
    return out;
}

Trajectory integrate_multistep(const SecondOrderProblem& problem, MethodVariant variant, double h,
                               std::pair<double, double> x_span,
                               const std::vector<Eigen::VectorXd>& start) {
    if (start.size() != 8)
        throw std::invalid_argument("integrate_multistep: exactly 8 starting values required");
    const long n_steps = step_count(x_span, h);
    if (n_steps < 8) throw std::invalid_argument("integrate_multistep: span shorter than stencil");

    Trajectory traj;
    traj.x0 = x_span.first;
    traj.h = h;
    traj.variant = variant;
    traj.samples.reserve(static_cast<std::size_t>(n_steps + 1));
    for (const auto& y : start) traj.samples.push_back(y);

    std::vector<Eigen::VectorXd> f(static_cast<std::size_t>(n_steps + 1));
    Eigen::VectorXd tmp(problem.dimension);
    for (long n = 1; n <= 7; ++n) {
        problem.rhs(traj.x(static_cast<std::size_t>(n)), traj.samples[static_cast<std::size_t>(n)],
                    tmp);
        f[static_cast<std::size_t>(n)] = tmp;
    }

    CoefficientSet coeffs = classical_coefficients();
    double omega_cached = std::numeric_limits<double>::quiet_NaN();
    const double h2 = h * h;
    for (long n = 0; n + 8 <= n_steps; ++n) {
        const double x_mid = traj.x(static_cast<std::size_t>(n + 4));
        const double w = problem.frequency.at(x_mid);
        if (w != omega_cached) {
            coeffs = evaluate(variant, std::abs(w) * h);
            omega_cached = w;
        }
        const auto& y = traj.samples;
        const std::size_t m = static_cast<std::size_t>(n);
        Eigen::VectorXd next =
            -y[m] + 2.0 * (y[m + 1] + y[m + 7]) - 2.0 * (y[m + 2] + y[m + 6]) +
            (y[m + 3] + y[m + 5]) +
            h2 * (coeffs.b_off(3) * (f[m + 1] + f[m + 7]) +
                  coeffs.b_off(2) * (f[m + 2] + f[m + 6]) +
                  coeffs.b_off(1) * (f[m + 3] + f[m + 5]) + coeffs.b_off(0) * f[m + 4]);
        if (!next.allFinite())
            throw NonFiniteState("integrate_multistep: non-finite state at x = " +
                                 std::to_string(traj.x(m + 8)));
        traj.samples.push_back(std::move(next));
        if (n + 8 <= n_steps - 1) {
            problem.rhs(traj.x(m + 8), traj.samples[m + 8], tmp);
            f[m + 8] = tmp;
        }
    }
    return traj;
}

StepSearchResult optimal_step_search(const SecondOrderProblem& problem,
                                     const Eigen::VectorXd& y0, const Eigen::VectorXd& dy0,
                                     std::pair<double, double> x_span, int stages,
                                     const std::vector<double>& step_sequence) {
    if (step_sequence.size() < 3)
        throw std::invalid_argument("optimal_step_search: need at least 3 step lengths");
    StepSearchResult result;
    Eigen::VectorXd prev_state;
    double prev_h = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < step_sequence.size(); ++i) {
        const double h = step_sequence[i];
        if (i > 0 && h == prev_h) {  // identical lengths: zero estimate, done
            result.table.emplace_back(h, 0.0);
            result.h_opt = h;
            return result;
        }
        const ReferenceTrajectory ref = integrate_reference(problem, y0, dy0, x_span, h, stages);
        Eigen::VectorXd state(2 * problem.dimension);
        state << ref.y.back(), ref.dy.back();
        if (i > 0) {
            const double eps = (state - prev_state).lpNorm<Eigen::Infinity>();
            result.table.emplace_back(h, eps);
            if (eps < best) {
                best = eps;
                result.h_opt = h;
            }
        }
        prev_state = state;
        prev_h = h;
    }
    return result;
}

void write_trajectory_csv(const Trajectory& trajectory, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open trajectory output file: " + path);
    const Eigen::Index d = trajectory.samples.empty() ? 0 : trajectory.samples.front().size();
    out << "x";
    for (Eigen::Index j = 0; j < d; ++j) out << ",y" << j;
    out << "\n";
    char buf[32];
    for (std::size_t n = 0; n < trajectory.samples.size(); ++n) {
        std::snprintf(buf, sizeof buf, "%.17g", trajectory.x(n));
        out << buf;
        for (Eigen::Index j = 0; j < d; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", trajectory.samples[n](j));
            out << ',' << buf;
        }
        out << "\n";
    }
}

}  // namespace msosc
