#include "msosc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "msosc/analysis.hpp"
#include "msosc/errors.hpp"
#include "msosc/integrator.hpp"
#include "msosc/problems.hpp"

namespace msosc {

namespace {

struct ProblemKind {
    bool schrodinger = false;
    double energy = 0.0;  // Schrodinger only
};

ProblemKind parse_problem_id(const std::string& id) {
    const auto colon = id.find(':');
    const std::string family = id.substr(0, colon);
    const std::string tail = (colon == std::string::npos) ? "" : id.substr(colon + 1);
    if (family == "schrodinger") {
        ProblemKind k;
        k.schrodinger = true;
        if (tail == "E1")
            k.energy = kEnergyE1;
        else if (tail == "E2")
            k.energy = kEnergyE2;
        else if (tail == "E3")
            k.energy = kEnergyE3;
        else if (!tail.empty())
            k.energy = std::stod(tail);
        else
            throw std::invalid_argument("schrodinger problem needs an energy: schrodinger:E1|E2|E3|<value>");
        return k;
    }
    if (family == "nbody") {
        if (tail != "outer5" && !tail.empty())
            throw std::invalid_argument("unknown nbody preset: " + tail);
        return ProblemKind{};
    }
    throw std::invalid_argument("unknown problem id: " + id);
}

int resolve_jobs(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("MSOSC_JOBS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::string format_g17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double neg_log10(double error) { return -std::log10(std::max(error, kErrorFloor)); }

// Endpoint positions of the Gauss reference run, cached on disk.
Eigen::VectorXd nbody_reference_endpoint(const SweepSpec& spec) {
    std::ostringstream name;
    name << "nbody_ref_" << format_g17(spec.span_end) << "_" << format_g17(spec.reference_h)
         << "_" << spec.reference_stages << ".txt";
    const std::filesystem::path path = std::filesystem::path(spec.cache_dir) / name.str();
    const NBodySystem sys = five_outer_planets();
    const int d = 3 * sys.N;
    if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        Eigen::VectorXd y(d);
        bool ok = static_cast<bool>(in);
        for (int i = 0; ok && i < d; ++i) ok = static_cast<bool>(in >> y(i));
        if (ok) return y;
    }
    const SecondOrderProblem problem = nbody_problem(sys);
    const ReferenceTrajectory ref =
        integrate_reference(problem, nbody_initial_positions(sys), nbody_initial_velocities(sys),
                            {0.0, spec.span_end}, spec.reference_h, spec.reference_stages);
    const Eigen::VectorXd y = ref.y.back();
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path);
    if (out) {
        out.precision(17);
        for (int i = 0; i < d; ++i) out << format_g17(y(i)) << "\n";
    }
    return y;
}

double schrodinger_cell(double E, MethodVariant variant, long steps,
                        const std::string& traj_path) {
    const double h = kSchrodingerDomainEnd / static_cast<double>(steps);
    const SecondOrderProblem problem = schrodinger_problem(E);
    Eigen::VectorXd y0(1), dy0(1);
    y0 << 0.0;
    dy0 << 1.0;
    const auto start = start_values(problem, y0, dy0, h);
    const Trajectory traj =
        integrate_multistep(problem, variant, h, {0.0, kSchrodingerDomainEnd}, start);
    if (!traj_path.empty()) write_trajectory_csv(traj, traj_path);
    const std::size_t n = traj.samples.size() - 1;
    const PhaseShiftResult ps = phase_shift(traj.samples[n - 1](0), traj.samples[n](0),
                                            traj.x(n - 1), traj.x(n), E, 0);
    return std::abs(std::abs(ps.delta) - M_PI / 2.0);
}

double nbody_cell(const SweepSpec& spec, const Eigen::VectorXd& reference_endpoint,
                  MethodVariant variant, long steps, const std::string& traj_path) {
    const double h = spec.span_end / static_cast<double>(steps);
    const NBodySystem sys = five_outer_planets();
    const SecondOrderProblem problem = nbody_problem(sys);
    const auto start =
        start_values(problem, nbody_initial_positions(sys), nbody_initial_velocities(sys), h);
    const Trajectory traj = integrate_multistep(problem, variant, h, {0.0, spec.span_end}, start);
    if (!traj_path.empty()) write_trajectory_csv(traj, traj_path);
    return (traj.samples.back() - reference_endpoint).lpNorm<Eigen::Infinity>();
}

}  // namespace

SweepSpec normalize_spec(SweepSpec spec) {
    const ProblemKind kind = parse_problem_id(spec.problem);
    spec.metric = kind.schrodinger ? ErrorMetric::PhaseShiftError : ErrorMetric::EndpointVsReference;
    if (spec.span_end <= 0.0) spec.span_end = kind.schrodinger ? kSchrodingerDomainEnd : 1e4;
    if (spec.steps.empty())
        spec.steps = kind.schrodinger ? std::vector<long>{1000, 2000, 4000, 8000}
                                      : std::vector<long>{250, 500, 1000, 2000};
    if (kind.schrodinger && spec.span_end != kSchrodingerDomainEnd)
        throw std::invalid_argument("schrodinger domain end is fixed at 15");
    for (std::size_t i = 0; i + 1 < spec.steps.size(); ++i)
        if (spec.steps[i] >= spec.steps[i + 1])
            throw std::invalid_argument("step counts must be strictly increasing");
    for (long n : spec.steps)
        if (n < 8) throw std::invalid_argument("step counts must be at least 8");
    return spec;
}

double run_single(const SweepSpec& raw, MethodVariant variant, long steps,
                  const std::string& traj_path) {
    const SweepSpec spec = normalize_spec(raw);
    const ProblemKind kind = parse_problem_id(spec.problem);
    if (kind.schrodinger) return schrodinger_cell(kind.energy, variant, steps, traj_path);
    return nbody_cell(spec, nbody_reference_endpoint(spec), variant, steps, traj_path);
}

std::vector<SweepRow> run_sweep(const SweepSpec& raw) {
    const SweepSpec spec = normalize_spec(raw);
    const ProblemKind kind = parse_problem_id(spec.problem);

    Eigen::VectorXd reference;
    if (!kind.schrodinger && !spec.variants.empty() && !spec.steps.empty())
        reference = nbody_reference_endpoint(spec);

    struct Cell {
        MethodVariant variant;
        long steps;
    };
    std::vector<Cell> cells;
    for (MethodVariant m : spec.variants)
        for (long n : spec.steps) cells.push_back({m, n});

    std::vector<SweepRow> rows(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            const Cell& cell = cells[i];
            const auto t0 = std::chrono::steady_clock::now();
            double error;
            try {
                error = kind.schrodinger
                            ? schrodinger_cell(kind.energy, cell.variant, cell.steps, "")
                            : nbody_cell(spec, reference, cell.variant, cell.steps, "");
            } catch (const NonFiniteState&) {
                error = std::numeric_limits<double>::infinity();
            } catch (const StageIterationDiverged&) {
                error = std::numeric_limits<double>::infinity();
            }
            const auto t1 = std::chrono::steady_clock::now();
            SweepRow row;
            row.variant = cell.variant;
            row.total_steps = cell.steps;
            row.log10_steps = std::log10(static_cast<double>(cell.steps));
            row.error = error;
            row.neg_log10_error = neg_log10(error);
            row.wall_time_s = std::max(std::chrono::duration<double>(t1 - t0).count(), 1e-9);
            rows[i] = row;
        }
    };
    const int jobs = std::min(resolve_jobs(spec.jobs),
                              static_cast<int>(std::max<std::size_t>(cells.size(), 1)));
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return rows;
}

void emit_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open sweep output file: " + path);
    out << "variant,total_steps,log10_steps,error,neg_log10_error,wall_time_s\n";
    for (const SweepRow& r : rows)
        out << variant_name(r.variant) << ',' << r.total_steps << ',' << format_g17(r.log10_steps)
            << ',' << format_g17(r.error) << ',' << format_g17(r.neg_log10_error) << ','
            << format_g17(r.wall_time_s) << "\n";
}

std::vector<SweepRow> parse_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sweep csv: " + path);
    std::string line;
    if (!std::getline(in, line) ||
        line != "variant,total_steps,log10_steps,error,neg_log10_error,wall_time_s")
        throw std::runtime_error("sweep csv header mismatch in " + path);
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string field;
        SweepRow r;
        std::getline(ss, field, ',');
        r.variant = variant_from_name(field);
        std::getline(ss, field, ',');
        r.total_steps = std::stol(field);
        std::getline(ss, field, ',');
        r.log10_steps = std::strtod(field.c_str(), nullptr);
        std::getline(ss, field, ',');
        r.error = std::strtod(field.c_str(), nullptr);
        std::getline(ss, field, ',');
        r.neg_log10_error = std::strtod(field.c_str(), nullptr);
        std::getline(ss, field, ',');
        r.wall_time_s = std::strtod(field.c_str(), nullptr);
        rows.push_back(r);
    }
    return rows;
}

std::string analyze_report(MethodVariant variant) {
    std::ostringstream out;
    out.precision(10);
    const StabilityReport stab = periodicity_interval(variant);
    out << "method: " << variant_name(variant) << "\n";
    out << "s0: " << stab.s0 << "\n";
    out << "interval of periodicity: (0, " << stab.interval_end << ")\n";

    const int r = [variant] {
        switch (variant) {
            case MethodVariant::ZeroPLD1: return 1;
            case MethodVariant::ZeroPLD2: return 2;
            case MethodVariant::ZeroPLD3: return 3;
            default: return 0;
        }
    }();
    if (variant == MethodVariant::Classical) {
        out << "algebraic order: " << algebraic_order(classical_coefficients()) << "\n";
        out << "phase lag at v=0.1: " << phase_lag(classical_coefficients(), 0.1).pl << "\n";
    } else {
        out << "algebraic order (at v=0.3): " << algebraic_order(evaluate(variant, 0.3)) << "\n";
        for (double v : {0.1, 0.3, 0.5}) {
            out << "phase-lag residual at v=" << v << ": " << phase_lag(evaluate(variant, v), v).pl;
            for (int k = 1; k <= r; ++k)
                out << ", d" << k << ": " << phase_lag_derivative(variant, v, k).pl;
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace msosc
