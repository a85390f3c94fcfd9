#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "msosc/coefficients.hpp"

namespace msosc {

// Piecewise-constant frequency omega(x) with strictly increasing breakpoints;
// omega[i] applies on (breakpoints[i-1], breakpoints[i]).
struct FrequencySchedule {
    std::vector<double> breakpoints;
    std::vector<double> omega;  // size breakpoints.size() + 1

    double at(double x) const;
    static FrequencySchedule constant(double w) { return FrequencySchedule{{}, {w}}; }
};

struct SecondOrderProblem {
    int dimension = 1;
    std::function<void(double, const Eigen::VectorXd&, Eigen::VectorXd&)> rhs;  // y'' = f(x,y)
    FrequencySchedule frequency = FrequencySchedule::constant(1.0);
};

struct Trajectory {
    double x0 = 0.0;
    double h = 0.0;
    std::vector<Eigen::VectorXd> samples;
    MethodVariant variant = MethodVariant::Classical;

    double x(std::size_t n) const { return x0 + static_cast<double>(n) * h; }
};

struct GaussTableau {
    int stages = 0;
    Eigen::VectorXd c, w;
    Eigen::MatrixXd A;
};

GaussTableau gauss_tableau(int stages);

// Positions and velocities of the first-order reformulation on the same grid.
struct ReferenceTrajectory {
    double x0 = 0.0;
    double h = 0.0;
    std::vector<Eigen::VectorXd> y, dy;

    double x(std::size_t n) const { return x0 + static_cast<double>(n) * h; }
};

ReferenceTrajectory integrate_reference(const SecondOrderProblem& problem,
                                        const Eigen::VectorXd& y0, const Eigen::VectorXd& dy0,
                                        std::pair<double, double> x_span, double h, int stages);

std::vector<Eigen::VectorXd> start_values(const SecondOrderProblem& problem,
                                          const Eigen::VectorXd& y0, const Eigen::VectorXd& dy0,
                                          double h, int count = 8, double x0 = 0.0);

Trajectory integrate_multistep(const SecondOrderProblem& problem, MethodVariant variant, double h,
                               std::pair<double, double> x_span,
                               const std::vector<Eigen::VectorXd>& start);

struct StepSearchResult {
    double h_opt = 0.0;
    std::vector<std::pair<double, double>> table;  // (h, eps) per consecutive pair
};

StepSearchResult optimal_step_search(const SecondOrderProblem& problem,
                                     const Eigen::VectorXd& y0, const Eigen::VectorXd& dy0,
                                     std::pair<double, double> x_span, int stages,
                                     const std::vector<double>& step_sequence);

void write_trajectory_csv(const Trajectory& trajectory, const std::string& path);

}  // namespace msosc
