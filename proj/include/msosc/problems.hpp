#pragma once

#include <Eigen/Dense>
#include <istream>
#include <vector>

#include "msosc/integrator.hpp"

namespace msosc {

// Woods-Saxon well parameters (paper units).
inline constexpr double kWoodsSaxonU0 = -50.0;
inline constexpr double kWoodsSaxonA = 0.6;
inline constexpr double kWoodsSaxonX0 = 7.0;
inline constexpr double kWoodsSaxonU1 = -kWoodsSaxonU0 / kWoodsSaxonA;
inline constexpr double kSchrodingerDomainEnd = 15.0;

inline constexpr double kEnergyE1 = 989.701916;
inline constexpr double kEnergyE2 = 341.495874;
inline constexpr double kEnergyE3 = 163.215341;

double woods_saxon(double x);
double schrodinger_rhs(double x, double y, double E, int l);
FrequencySchedule ixaru_rizea_frequency(double E);
SecondOrderProblem schrodinger_problem(double E, int l = 0);

void spherical_bessel(int l, double x, double& j, double& n);

struct PhaseShiftResult {
    double tan_delta = 0.0;
    double delta = 0.0;  // principal branch
    double x_i = 0.0, x_i1 = 0.0;
    double k = 0.0;
};

PhaseShiftResult phase_shift(double y_i, double y_i1, double x_i, double x_i1, double E, int l);

struct NBodySystem {
    int N = 0;
    std::vector<double> masses;
    std::vector<Eigen::Vector3d> positions;
    std::vector<Eigen::Vector3d> velocities;
    double G = 0.0;
};

NBodySystem five_outer_planets();
NBodySystem nbody_from_table(std::istream& in);

void nbody_rhs(const NBodySystem& system, const std::vector<Eigen::Vector3d>& positions,
               std::vector<Eigen::Vector3d>& accelerations);
double nbody_energy(const NBodySystem& system, const std::vector<Eigen::Vector3d>& positions,
                    const std::vector<Eigen::Vector3d>& velocities);
Eigen::Vector3d nbody_angular_momentum(const NBodySystem& system,
                                       const std::vector<Eigen::Vector3d>& positions,
                                       const std::vector<Eigen::Vector3d>& velocities);

double dominant_frequency_nbody();
double dominant_frequency_nbody_diagnostic();

// Flattened 3N-dimensional second-order problem plus its initial state.
SecondOrderProblem nbody_problem(const NBodySystem& system);
Eigen::VectorXd nbody_initial_positions(const NBodySystem& system);
Eigen::VectorXd nbody_initial_velocities(const NBodySystem& system);

}  // namespace msosc
