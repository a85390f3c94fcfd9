#include "msosc/problems.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "msosc/errors.hpp"

namespace msosc {

double woods_saxon(double x) {
    const double t = (x - kWoodsSaxonX0) / kWoodsSaxonA;
    if (t > 700.0) return 0.0;  // exp would overflow; the well has fully decayed
    const double q = std::exp(t);
    return kWoodsSaxonU0 / (1.0 + q) + kWoodsSaxonU1 * q / ((1.0 + q) * (1.0 + q));
}

double schrodinger_rhs(double x, double y, double E, int l) {
    if (x < 0.0 || (x == 0.0 && l > 0))
        throw DomainError("schrodinger_rhs: x must be positive (x = 0 allowed only for l = 0)");
    const double centrifugal = (l == 0) ? 0.0 : static_cast<double>(l) * (l + 1) / (x * x);
    return (centrifugal + woods_saxon(x) - E) * y;
}

FrequencySchedule ixaru_rizea_frequency(double E) {
    if (E <= 50.0) throw EnergyTooLow(E);
    return FrequencySchedule{{6.5}, {std::sqrt(E - 50.0), std::sqrt(E)}};
}

SecondOrderProblem schrodinger_problem(double E, int l) {
    SecondOrderProblem p;
    p.dimension = 1;
    p.rhs = [E, l](double x, const Eigen::VectorXd& y, Eigen::VectorXd& f) {
        f.resize(1);
        f(0) = schrodinger_rhs(x, y(0), E, l);
    };
    p.frequency = ixaru_rizea_frequency(E);
    return p;
}

void spherical_bessel(int l, double x, double& j, double& n) {
    if (x <= 0.0) throw DomainError("spherical_bessel: x must be positive");
    if (l < 0) throw DomainError("spherical_bessel: l must be non-negative");
    double j0 = std::sin(x) / x, n0 = -std::cos(x) / x;
    if (l == 0) {
        j = j0;
        n = n0;
        return;
    }
    double j1 = std::sin(x) / (x * x) - std::cos(x) / x;
    double n1 = -std::cos(x) / (x * x) - std::sin(x) / x;
    for (int m = 1; m < l; ++m) {
        const double j2 = (2 * m + 1) / x * j1 - j0;
        const double n2 = (2 * m + 1) / x * n1 - n0;
        j0 = j1;
        j1 = j2;
        n0 = n1;
        n1 = n2;
    }
    j = j1;
    n = n1;
}

PhaseShiftResult phase_shift(double y_i, double y_i1, double x_i, double x_i1, double E, int l) {
    if (!(x_i < x_i1)) throw std::invalid_argument("phase_shift: matching points out of order");
    if (y_i == 0.0 && y_i1 == 0.0)
        throw DegenerateDenominator("phase_shift: both samples vanish");
    const double k = std::sqrt(E);
    auto SC = [k, l](double x, double& S, double& C) {
        double j, n;
        spherical_bessel(l, k * x, j, n);
        S = k * x * j;
        C = k * x * n;
    };
    double Si, Ci, Si1, Ci1;
    SC(x_i, Si, Ci);
    SC(x_i1, Si1, Ci1);
    const double num = y_i * Si1 - y_i1 * Si;
    const double den = y_i1 * Ci - y_i * Ci1;
    if (num == 0.0 && den == 0.0)
        throw DegenerateDenominator("phase_shift: matching points resonant with the grid");
    double delta = std::atan2(num, den);
    if (delta > M_PI / 2.0) delta -= M_PI;
    if (delta <= -M_PI / 2.0) delta += M_PI;
    PhaseShiftResult r;
    r.tan_delta = (den != 0.0) ? num / den : std::numeric_limits<double>::infinity();
    r.delta = delta;
    r.x_i = x_i;
    r.x_i1 = x_i1;
    r.k = k;
    return r;
}

NBodySystem five_outer_planets() {
    NBodySystem s;
    s.N = 6;
    s.G = 2.95912208286e-4;
    s.masses = {1.00000597682,    0.000954786104043,  0.000285583733151,
                0.0000437273164546, 0.0000517759138449, 1.0 / 1.3e8};
    s.positions = {
        {0.0, 0.0, 0.0},
        {-3.5023653, -3.8169847, -1.5507963},
        {9.0755314, -3.0458353, -1.6483708},
        {8.3101420, -16.2901086, -7.2521278},
        {11.4707666, -25.7294829, -10.8169456},
        {-15.5387357, -25.2225594, -3.1902382},
    };
    s.velocities = {
        {0.0, 0.0, 0.0},
        {0.00565429, -0.00412490, -0.00190589},
        {0.00168318, 0.00483525, 0.00192462},
        {0.00354178, 0.00137102, 0.00055029},
        {0.00288930, 0.00114527, 0.00039677},
        {0.00276725, -0.00170702, -0.00136504},
    };
    return s;
}

NBodySystem nbody_from_table(std::istream& in) {
    // Plain-text layout mirroring the planet table: per body, a line with the
    // mass and the first position/velocity components, then two lines with the
    // remaining components. '#' starts a comment; first non-comment line is G.
    NBodySystem s;
    std::string line;
    auto next_line = [&in, &line]() -> bool {
        while (std::getline(in, line)) {
            const auto pos = line.find('#');
            if (pos != std::string::npos) line.erase(pos);
            std::istringstream probe(line);
            std::string tok;
            if (probe >> tok) return true;
        }
        return false;
    };
    if (!next_line()) throw std::invalid_argument("nbody_from_table: missing G line");
    s.G = std::stod(line);
    while (next_line()) {
        std::istringstream row(line);
        double m, p0, v0;
        if (!(row >> m >> p0 >> v0))
            throw std::invalid_argument("nbody_from_table: malformed body header row");
        Eigen::Vector3d p, v;
        p(0) = p0;
        v(0) = v0;
        for (int k = 1; k < 3; ++k) {
            if (!next_line()) throw std::invalid_argument("nbody_from_table: truncated body block");
            std::istringstream comp(line);
            if (!(comp >> p(k) >> v(k)))
                throw std::invalid_argument("nbody_from_table: malformed component row");
        }
        s.masses.push_back(m);
        s.positions.push_back(p);
        s.velocities.push_back(v);
    }
    s.N = static_cast<int>(s.masses.size());
    if (s.N == 0) throw std::invalid_argument("nbody_from_table: no bodies");
    return s;
}

void nbody_rhs(const NBodySystem& system, const std::vector<Eigen::Vector3d>& positions,
               std::vector<Eigen::Vector3d>& accelerations) {
    const int N = system.N;
    accelerations.assign(static_cast<std::size_t>(N), Eigen::Vector3d::Zero());
    for (int i = 0; i < N; ++i) {
        for (int j = i + 1; j < N; ++j) {
            const Eigen::Vector3d d = positions[static_cast<std::size_t>(j)] -
                                      positions[static_cast<std::size_t>(i)];
            const double r = d.norm();
            if (r < 1e-8)
                throw CollisionSingularity("nbody_rhs: bodies " + std::to_string(i) + " and " +
                                           std::to_string(j) + " closer than 1e-8 AU");
            const Eigen::Vector3d g = system.G / (r * r * r) * d;
            accelerations[static_cast<std::size_t>(i)] +=
                system.masses[static_cast<std::size_t>(j)] * g;
            accelerations[static_cast<std::size_t>(j)] -=
                system.masses[static_cast<std::size_t>(i)] * g;
        }
    }
}

double nbody_energy(const NBodySystem& system, const std::vector<Eigen::Vector3d>& positions,
                    const std::vector<Eigen::Vector3d>& velocities) {
    double H = 0.0;
    for (int i = 0; i < system.N; ++i) {
        H += 0.5 * system.masses[static_cast<std::size_t>(i)] *
             velocities[static_cast<std::size_t>(i)].squaredNorm();
        for (int j = i + 1; j < system.N; ++j) {
            const double r = (positions[static_cast<std::size_t>(j)] -
                              positions[static_cast<std::size_t>(i)])
                                 .norm();
            if (r < 1e-8) throw CollisionSingularity("nbody_energy: collision configuration");
            H -= system.G * system.masses[static_cast<std::size_t>(i)] *
                 system.masses[static_cast<std::size_t>(j)] / r;
        }
    }
    return H;
}

Eigen::Vector3d nbody_angular_momentum(const NBodySystem& system,
                                       const std::vector<Eigen::Vector3d>& positions,
                                       const std::vector<Eigen::Vector3d>& velocities) {
    Eigen::Vector3d L = Eigen::Vector3d::Zero();
    for (int i = 0; i < system.N; ++i)
        L += system.masses[static_cast<std::size_t>(i)] *
             positions[static_cast<std::size_t>(i)].cross(velocities[static_cast<std::size_t>(i)]);
    return L;
}

double dominant_frequency_nbody() { return 0.00145044732989; }

double dominant_frequency_nbody_diagnostic() {
    // Power iteration on the finite-difference Jacobian of -nbody_rhs at the
    // initial state; cross-check only, accuracy ~2 significant digits.
    const NBodySystem sys = five_outer_planets();
    const int d = 3 * sys.N;
    const SecondOrderProblem p = nbody_problem(sys);
    const Eigen::VectorXd y0 = nbody_initial_positions(sys);
    Eigen::VectorXd f0(d), f1(d), u(d), Ju(d);
    p.rhs(0.0, y0, f0);
    u.setOnes();
    u.normalize();
    const double fd = 1e-6;
    double lambda = 0.0;
    for (int it = 0; it < 200; ++it) {
        p.rhs(0.0, y0 + fd * u, f1);
        Ju = -(f1 - f0) / fd;
        const double next = Ju.norm();
        if (next == 0.0) break;
        Ju /= next;
        if (std::abs(next - lambda) < 1e-14 * next && it > 5) {
            lambda = next;
            break;
        }
        lambda = next;
        u = Ju;
    }
    return std::sqrt(lambda);
}

SecondOrderProblem nbody_problem(const NBodySystem& system) {
    SecondOrderProblem p;
    p.dimension = 3 * system.N;
    p.rhs = [system](double, const Eigen::VectorXd& y, Eigen::VectorXd& f) {
        std::vector<Eigen::Vector3d> pos(static_cast<std::size_t>(system.N)), acc;
        for (int i = 0; i < system.N; ++i) pos[static_cast<std::size_t>(i)] = y.segment<3>(3 * i);
        nbody_rhs(system, pos, acc);
        f.resize(3 * system.N);
        for (int i = 0; i < system.N; ++i)
            f.segment<3>(3 * i) = acc[static_cast<std::size_t>(i)];
    };
    p.frequency = FrequencySchedule::constant(dominant_frequency_nbody());
    return p;
}

Eigen::VectorXd nbody_initial_positions(const NBodySystem& system) {
    Eigen::VectorXd y(3 * system.N);
    for (int i = 0; i < system.N; ++i)
        y.segment<3>(3 * i) = system.positions[static_cast<std::size_t>(i)];
    return y;
}

Eigen::VectorXd nbody_initial_velocities(const NBodySystem& system) {
    Eigen::VectorXd v(3 * system.N);
    for (int i = 0; i < system.N; ++i)
        v.segment<3>(3 * i) = system.velocities[static_cast<std::size_t>(i)];
    return v;
}

}  // namespace msosc
