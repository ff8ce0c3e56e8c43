#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gencase/bigint.hpp"
#include "gencase/domain.hpp"
#include "gencase/errors.hpp"
#include "gencase/rng.hpp"
#include "gencase/verdict.hpp"

namespace gencase {

// Acklam's rational approximation to the standard normal quantile.
inline double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw ValidationError("normal_quantile: p outside (0,1)");
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double q, r;
    if (p < plow) {
        q = std::sqrt(-2 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    }
    if (p > 1 - plow) {
        q = std::sqrt(-2 * std::log(1 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    }
    q = p - 0.5;
    r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
}

inline double wilson_half_width(std::uint64_t hits, std::uint64_t trials, double z) {
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(hits) / n;
    const double z2 = z * z;
    return z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / (1.0 + z2 / n);
}

// Normal-approximation half-width with a Wilson floor at the boundary,
// where the plug-in sigma collapses to zero.
inline double ci_half_width(std::uint64_t hits, std::uint64_t trials, double confidence) {
    const double z = normal_quantile(0.5 + confidence / 2.0);
    if (hits == 0 || hits == trials) return wilson_half_width(hits, trials, z);
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(hits) / n;
    return z * std::sqrt(p * (1.0 - p) / n);
}

struct FrequencyPoint {
    std::uint64_t n = 0;
    Mode mode = Mode::exact;
    BigInt hits = 0;
    BigInt trials = 0;
    BigRational estimate = 0;    // hits / trials in both modes
    double ci_half_width = 0.0;  // 0 in exact mode
    double confidence = 0.99;

    double value() const { return to_double(estimate); }
};

struct FrequencySeries {
    Geometry geometry = Geometry::sphere;
    std::string predicate_id;
    std::vector<FrequencyPoint> points;  // strictly increasing in n
};

namespace detail {

template <SizedDomain D, typename Pred>
FrequencyPoint exact_frequency(const D& domain, Pred&& pred, std::uint64_t n, Geometry geometry) {
    BigInt hits = 0;
    BigInt total = 0;
    const std::uint64_t lo = (geometry == Geometry::sphere) ? n : 0;
    for (std::uint64_t m = lo; m <= n; ++m) {
        auto count = domain.sphere_count(m);
        if (count && *count == 0) continue;  // empty spheres contribute nothing to a ball
        if (!domain.can_enumerate_sphere(m))
            throw EnumerationUnavailableError("exact frequency needs enumerable sphere " +
                                              std::to_string(m));
        BigInt seen = 0;
        domain.for_each_in_sphere(m, [&](const typename D::element_type& e) {
            ++seen;
            if (pred(e)) ++hits;
        });
        if (count && *count != seen)
            throw Error("sphere " + std::to_string(m) + " enumeration disagrees with its count");
        total += seen;
    }
    if (total == 0)
        throw EmptySphereError((geometry == Geometry::sphere ? "sphere " : "ball ") +
                               std::to_string(n) + " is empty");
    FrequencyPoint pt;
    pt.n = n;
    pt.mode = Mode::exact;
    pt.hits = hits;
    pt.trials = total;
    pt.estimate = BigRational(hits, total);
    pt.ci_half_width = 0.0;
    return pt;
}

template <typename D>
concept HasLog2SphereCount = requires(const D& d, std::uint64_t n) {
    { d.log2_sphere_count(n) } -> std::convertible_to<double>;
};

// Cumulative sphere weights for uniform ball sampling, normalized in double
// precision; weights are combined in log space since raw sphere counts can
// dwarf the double range. Domains may supply log2_sphere_count directly;
// otherwise exact counts are required.
template <SizedDomain D>
std::vector<std::pair<std::uint64_t, double>> ball_sphere_weights(const D& domain,
                                                                  std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, double>> logw;
    for (std::uint64_t m = 0; m <= n; ++m) {
        double l;
        if constexpr (HasLog2SphereCount<D>) {
            l = domain.log2_sphere_count(m);
        } else {
            auto c = domain.sphere_count(m);
            if (!c)
                throw SamplerUnavailableError("ball sampling needs sphere counts (radius " +
                                              std::to_string(m) + " unknown)");
            l = log2_big(*c);
        }
        if (std::isinf(l)) continue;  // empty sphere
        logw.emplace_back(m, l);
    }
    if (logw.empty()) throw EmptySphereError("ball " + std::to_string(n) + " is empty");
    double lmax = logw.front().second;
    for (const auto& [m, l] : logw) lmax = std::max(lmax, l);
    double total = 0.0;
    for (const auto& [m, l] : logw) total += std::exp2(l - lmax);
    std::vector<std::pair<std::uint64_t, double>> cumulative;
    cumulative.reserve(logw.size());
    double acc = 0.0;
    for (const auto& [m, l] : logw) {
        acc += std::exp2(l - lmax) / total;
        cumulative.emplace_back(m, acc);
    }
    cumulative.back().second = 1.0;
    return cumulative;
}

template <SizedDomain D, typename Pred>
FrequencyPoint mc_frequency(const D& domain, Pred&& pred, std::uint64_t n, Geometry geometry,
                            std::uint64_t trials, RngState& rng, double confidence) {
    if (trials < 1) throw ValidationError("monte-carlo mode needs trials >= 1");
    std::vector<std::pair<std::uint64_t, double>> ball_weights;
    if (geometry == Geometry::ball) ball_weights = ball_sphere_weights(domain, n);

    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        RngState stream = rng.substream(t);
        std::uint64_t radius = n;
        if (geometry == Geometry::ball) {
            const double u = stream.unit();
            const auto it = std::upper_bound(
                ball_weights.begin(), ball_weights.end(), u,
                [](double x, const std::pair<std::uint64_t, double>& p) { return x < p.second; });
            radius = (it == ball_weights.end()) ? ball_weights.back().first : it->first;
        }
        if (pred(domain.sample_sphere(radius, stream))) ++hits;
    }
    FrequencyPoint pt;
    pt.n = n;
    pt.mode = Mode::monte_carlo;
    pt.hits = hits;
    pt.trials = trials;
    pt.estimate = BigRational(hits, trials);
    pt.confidence = confidence;
    pt.ci_half_width = ci_half_width(hits, trials, confidence);
    return pt;
}

}  // namespace detail

/// Frequency of a predicate over the sphere or ball of radius n: exact by full
/// enumeration, or an unbiased Monte Carlo estimate with a CI at the declared
/// confidence (default 99%).
template <SizedDomain D, typename Pred>
FrequencyPoint frequency(const D& domain, Pred&& pred, std::uint64_t n, Geometry geometry,
                         Mode mode, std::uint64_t trials, RngState& rng,
                         double confidence = 0.99) {
    if (mode == Mode::exact)
        return detail::exact_frequency(domain, std::forward<Pred>(pred), n, geometry);
    return detail::mc_frequency(domain, std::forward<Pred>(pred), n, geometry, trials, rng,
                                confidence);
}

template <SizedDomain D, typename Pred>
FrequencySeries frequency_series(const D& domain, Pred&& pred,
                                 const std::vector<std::uint64_t>& n_list, Geometry geometry,
                                 Mode mode, std::uint64_t trials, RngState& rng,
                                 std::string predicate_id = {}, double confidence = 0.99) {
    for (std::size_t i = 1; i < n_list.size(); ++i)
        if (n_list[i] <= n_list[i - 1])
            throw ValidationError("frequency_series: n_list must be strictly increasing");
    FrequencySeries series;
    series.geometry = geometry;
    series.predicate_id = std::move(predicate_id);
    for (const std::uint64_t n : n_list) {
        RngState point_rng = rng.substream(n);  // independent substream per point
        try {
            series.points.push_back(
                frequency(domain, pred, n, geometry, mode, trials, point_rng, confidence));
        } catch (const EmptySphereError& e) {
            throw EmptySphereError("at n=" + std::to_string(n) + ": " + e.what());
        } catch (const EnumerationUnavailableError& e) {
            throw EnumerationUnavailableError("at n=" + std::to_string(n) + ": " + e.what());
        } catch (const SamplerUnavailableError& e) {
            throw SamplerUnavailableError("at n=" + std::to_string(n) + ": " + e.what());
        }
    }
    return series;
}

/// Sphere- and ball-frequency of the same predicate at the same radius;
/// Stolz's theorem says the two series share their limit.
template <SizedDomain D, typename Pred>
std::pair<FrequencyPoint, FrequencyPoint> spherical_vs_volume(const D& domain, Pred&& pred,
                                                              std::uint64_t n, Mode mode,
                                                              std::uint64_t trials, RngState& rng,
                                                              double confidence = 0.99) {
    RngState sphere_rng = rng.substream(0);
    RngState ball_rng = rng.substream(1);
    FrequencyPoint sphere =
        frequency(domain, pred, n, Geometry::sphere, mode, trials, sphere_rng, confidence);
    FrequencyPoint ball =
        frequency(domain, pred, n, Geometry::ball, mode, trials, ball_rng, confidence);
    return {sphere, ball};
}

/// Frequency series of the bounded halting set H_{A,f}: inputs where the
/// solver decides (answer != DontKnow) within bound(size) steps.
template <SizedDomain D, typename Solver, typename Bound>
FrequencySeries generic_time_report(const D& domain, Solver&& solver, Bound&& bound,
                                    const std::vector<std::uint64_t>& n_list, Geometry geometry,
                                    Mode mode, std::uint64_t trials, RngState& rng,
                                    std::string predicate_id = "decided-within-bound",
                                    double confidence = 0.99) {
    auto pred = [&](const typename D::element_type& e) {
        const PartialVerdict v = solver(e);
        return v.decided() && v.steps <= bound(domain.size_of(e));
    };
    return frequency_series(domain, pred, n_list, geometry, mode, trials, rng,
                            std::move(predicate_id), confidence);
}

}  // namespace gencase
