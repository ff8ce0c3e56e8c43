#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "gencase/errors.hpp"
#include "gencase/frequency.hpp"

namespace gencase {

enum class ConvergenceClass {
    consistent_with_superpolynomial,
    consistent_with_exponential,
    inconclusive,
    incompatible,
};

inline const char* to_string(ConvergenceClass c) {
    switch (c) {
        case ConvergenceClass::consistent_with_superpolynomial:
            return "consistent-with-superpolynomial";
        case ConvergenceClass::consistent_with_exponential:
            return "consistent-with-exponential";
        case ConvergenceClass::inconclusive:
            return "inconclusive";
        default:
            return "incompatible";
    }
}

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rss = 0.0;  // residual sum of squares
    std::size_t points = 0;
};

inline LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    LinearFit fit;
    fit.points = x.size();
    if (x.size() < 2) return fit;
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (fit.slope * x[i] + fit.intercept);
        fit.rss += r * r;
    }
    return fit;
}

/// Thresholds for the finite-horizon convergence heuristic. A clean power-law
/// residual n^-k is read as incompatible with superpolynomial convergence when
/// k is below incompatible_exponent and as consistent with it above
/// superpolynomial_exponent; the band between is inconclusive.
struct ConvergenceTolerances {
    double decrease_slope_eps = 1e-12;
    double incompatible_exponent = 3.0;
    double superpolynomial_exponent = 8.0;
};

struct ConvergenceReport {
    double target = 0.0;
    std::vector<double> residuals;  // |target - estimate| per point
    ConvergenceClass classification = ConvergenceClass::inconclusive;
    LinearFit power_fit;        // log residual vs log n
    LinearFit exponential_fit;  // log residual vs n
    std::uint64_t horizon = 0;  // max n used
    ConvergenceTolerances tolerances;
    std::vector<std::string> notes;
};

/// Heuristic convergence-rate classification of a frequency series against a
/// presumed limit. Finite-horizon only: the report never asserts a limit, and
/// always carries the horizon and tolerances it was computed with.
inline ConvergenceReport classify_convergence(const FrequencySeries& series, double target,
                                              ConvergenceTolerances tol = {}) {
    if (series.points.size() < 4)
        throw ValidationError("classify_convergence needs at least 4 points");
    ConvergenceReport report;
    report.target = target;
    report.tolerances = tol;
    report.horizon = series.points.back().n;

    std::vector<double> log_n, plain_n, log_res;
    for (const auto& pt : series.points) {
        const double res = std::fabs(target - pt.value());
        report.residuals.push_back(res);
        if (res > 0.0) {
            log_n.push_back(std::log(static_cast<double>(pt.n)));
            plain_n.push_back(static_cast<double>(pt.n));
            log_res.push_back(std::log(res));
        }
    }

    if (log_res.size() < 2) {
        // Residuals reached zero exactly: faster than any measurable rate.
        report.classification = ConvergenceClass::consistent_with_exponential;
        report.notes.push_back("residuals vanish at the horizon (infinite-rate; no log of zero taken)");
        return report;
    }
    if (log_res.size() < report.residuals.size())
        report.notes.push_back("zero residuals excluded from the fits");

    report.power_fit = linear_fit(log_n, log_res);
    report.exponential_fit = linear_fit(plain_n, log_res);

    if (report.power_fit.slope >= -tol.decrease_slope_eps) {
        report.classification = ConvergenceClass::incompatible;
        report.notes.push_back("residuals do not decrease over the horizon");
        return report;
    }
    if (report.exponential_fit.slope < 0.0 &&
        report.exponential_fit.rss <= report.power_fit.rss) {
        report.classification = ConvergenceClass::consistent_with_exponential;
        return report;
    }
    if (report.power_fit.slope <= -tol.superpolynomial_exponent) {
        report.classification = ConvergenceClass::consistent_with_superpolynomial;
        return report;
    }
    if (report.power_fit.slope >= -tol.incompatible_exponent) {
        report.classification = ConvergenceClass::incompatible;
        report.notes.push_back("residuals fit a low-degree power law");
        return report;
    }
    report.classification = ConvergenceClass::inconclusive;
    return report;
}

}  // namespace gencase
