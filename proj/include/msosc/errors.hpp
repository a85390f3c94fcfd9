#ifndef MSOSC_ERRORS_HPP
#define MSOSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace msosc {

struct NonPositiveV : std::invalid_argument {
    explicit NonPositiveV(double v)
        : std::invalid_argument("fit parameter v must be positive, got " + std::to_string(v)) {}
};

struct SingularDenominator : std::domain_error {
    explicit SingularDenominator(const std::string& what) : std::domain_error(what) {}
};

struct DegenerateDenominator : std::domain_error {
    explicit DegenerateDenominator(const std::string& what) : std::domain_error(what) {}
};

struct RootFindFailure : std::runtime_error {
    explicit RootFindFailure(const std::string& what) : std::runtime_error(what) {}
};

struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct StageIterationDiverged : std::runtime_error {
    explicit StageIterationDiverged(const std::string& what) : std::runtime_error(what) {}
};

struct NonFiniteState : std::runtime_error {
    explicit NonFiniteState(const std::string& what) : std::runtime_error(what) {}
};

struct ScheduleGap : std::runtime_error {
    explicit ScheduleGap(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

struct EnergyTooLow : std::invalid_argument {
    explicit EnergyTooLow(double e)
        : std::invalid_argument("energy must exceed 50 for the two-piece frequency schedule, got " +
                                std::to_string(e)) {}
};

struct CollisionSingularity : std::runtime_error {
    explicit CollisionSingularity(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace msosc

#endif
