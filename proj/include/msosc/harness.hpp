#pragma once

#include <string>
#include <vector>

#include "msosc/coefficients.hpp"

namespace msosc {

enum class ErrorMetric { PhaseShiftError, EndpointVsReference };

struct SweepSpec {
    std::string problem;  // "schrodinger:E1".."E3", "schrodinger:<energy>", "nbody:outer5"
    std::vector<MethodVariant> variants;
    std::vector<long> steps;  // strictly increasing total step counts
    ErrorMetric metric = ErrorMetric::PhaseShiftError;
    int reference_stages = 5;
    double reference_h = 25.0;
    double span_end = 0.0;  // 0: problem default (15 Schrodinger, 1e4 N-body)
    int jobs = 0;           // 0: MSOSC_JOBS env or hardware concurrency
    std::string cache_dir = "msosc_cache";
};

struct SweepRow {
    MethodVariant variant = MethodVariant::Classical;
    long total_steps = 0;
    double log10_steps = 0.0;
    double error = 0.0;
    double neg_log10_error = 0.0;
    double wall_time_s = 0.0;
};

inline constexpr double kErrorFloor = 1e-16;

// Fills spec defaults (metric, span) from the problem id and validates it.
SweepSpec normalize_spec(SweepSpec spec);

std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// One (variant, steps) cell; optionally dumps the trajectory to traj_path.
double run_single(const SweepSpec& spec, MethodVariant variant, long steps,
                  const std::string& traj_path = "");

void emit_csv(const std::vector<SweepRow>& rows, const std::string& path);
std::vector<SweepRow> parse_csv(const std::string& path);

std::string analyze_report(MethodVariant variant);

}  // namespace msosc
