#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gencase/bigint.hpp"
#include "gencase/domain.hpp"
#include "gencase/errors.hpp"
#include "gencase/frequency.hpp"

namespace gencase {

// Average-case checkers work on per-sphere profiles: groups of inputs sharing
// a function value and carrying a total measure mass. Values are kept in log2
// with exact rationals alongside when representable; functions like 2^(2^n)
// exist only on the log scale.

struct MeasuredAtom {
    double log2_f = 0.0;     // -inf encodes f == 0 on the group
    double log2_mass = 0.0;  // -inf encodes mass 0
    std::optional<BigRational> exact_f;
    std::optional<BigRational> exact_mass;
};

struct SphereProfile {
    std::uint64_t n = 0;
    std::vector<MeasuredAtom> atoms;
};

struct MeasuredFunction {
    std::string label;
    std::function<SphereProfile(std::uint64_t)> profile;
};

namespace detail {

inline double log2_rat(const BigRational& r) {
    if (r < 0) throw ValidationError("log2_rat: negative value");
    if (r == 0) return -std::numeric_limits<double>::infinity();
    return log2_big(numerator(r)) - log2_big(denominator(r));
}

// Accumulates a sum of nonnegative terms given on the log2 scale.
class Log2Sum {
  public:
    void add(double l) {
        if (std::isinf(l) && l < 0) return;
        if (std::isinf(acc_) && acc_ < 0) {
            acc_ = l;
            return;
        }
        const double hi = std::max(acc_, l);
        const double lo = std::min(acc_, l);
        acc_ = hi + std::log2(1.0 + std::exp2(lo - hi));
    }
    double value() const { return acc_; }

  private:
    double acc_ = -std::numeric_limits<double>::infinity();
};

// f^eps as an exact rational, when eps = a/b and f is a perfect b-th power.
inline std::optional<BigRational> exact_pow_rational(const BigRational& f,
                                                     const BigRational& eps) {
    if (f < 0 || eps <= 0) return std::nullopt;
    if (f == 0) return BigRational(0);
    if (f == 1) return BigRational(1);
    const BigInt a_big = numerator(eps);
    const BigInt b_big = denominator(eps);
    if (a_big > 64 || b_big > 64) return std::nullopt;  // keep exponents sane
    const auto a = a_big.convert_to<std::uint64_t>();
    const auto b = b_big.convert_to<std::uint64_t>();
    BigInt num_root, den_root;
    if (!is_perfect_power(numerator(f), b, num_root)) return std::nullopt;
    if (!is_perfect_power(denominator(f), b, den_root)) return std::nullopt;
    return BigRational(ipow(num_root, a), ipow(den_root, a));
}

}  // namespace detail

/// One atom per element, by full sphere enumeration. For domains whose
/// spheres are small enough to walk.
template <SizedDomain D>
MeasuredFunction measured_from_enumeration(
    const D& domain, std::function<BigRational(const typename D::element_type&)> f,
    std::function<BigRational(const typename D::element_type&)> mu, std::string label) {
    // capture the domain by value: profiles may outlive the caller's scope
    return MeasuredFunction{
        std::move(label), [domain, f = std::move(f), mu = std::move(mu)](std::uint64_t n) {
            SphereProfile prof;
            prof.n = n;
            auto count = domain.sphere_count(n);
            if (count && *count == 0) return prof;  // empty sphere, no atoms
            domain.for_each_in_sphere(n, [&](const typename D::element_type& e) {
                const BigRational fv = f(e);
                const BigRational mv = mu(e);
                if (fv < 0) throw ValidationError("measured function must be nonnegative");
                if (mv < 0) throw ValidationError("measure must be nonnegative");
                MeasuredAtom atom;
                atom.exact_f = fv;
                atom.exact_mass = mv;
                atom.log2_f = detail::log2_rat(fv);
                atom.log2_mass = detail::log2_rat(mv);
                prof.atoms.push_back(std::move(atom));
            });
            return prof;
        }};
}

/// f(w) = 2^|w| under the global measure mu(w) = 2^(-2|w|-1) on binary words:
/// one atom per sphere since f and mu depend only on length.
inline MeasuredFunction pow2_quadratic_decay_function() {
    return MeasuredFunction{"f=2^n under mu=2^-(2n+1)", [](std::uint64_t n) {
                                SphereProfile prof;
                                prof.n = n;
                                MeasuredAtom atom;
                                atom.exact_f = BigRational(ipow(BigInt(2), n));
                                atom.log2_f = static_cast<double>(n);
                                // 2^n words, each of mass 2^(-2n-1): total 2^(-n-1)
                                atom.exact_mass = BigRational(1, ipow(BigInt(2), n + 1));
                                atom.log2_mass = -static_cast<double>(n) - 1.0;
                                prof.atoms.push_back(std::move(atom));
                                return prof;
                            }};
}

/// f(w) = 2^|w| with every word carrying unit mass, so ball conditionals are
/// uniform over the ball.
inline MeasuredFunction pow2_uniform_function() {
    return MeasuredFunction{"f=2^n under uniform counting mass", [](std::uint64_t n) {
                                SphereProfile prof;
                                prof.n = n;
                                MeasuredAtom atom;
                                atom.exact_f = BigRational(ipow(BigInt(2), n));
                                atom.log2_f = static_cast<double>(n);
                                atom.exact_mass = BigRational(ipow(BigInt(2), n));
                                atom.log2_mass = static_cast<double>(n);
                                prof.atoms.push_back(std::move(atom));
                                return prof;
                            }};
}

/// Constant function under a unit-mass sphere profile.
inline MeasuredFunction constant_function(const BigRational& value) {
    if (value < 0) throw ValidationError("constant_function needs a nonnegative value");
    return MeasuredFunction{"f=" + value.str() + " everywhere", [value](std::uint64_t n) {
                                SphereProfile prof;
                                prof.n = n;
                                MeasuredAtom atom;
                                atom.exact_f = value;
                                atom.log2_f = detail::log2_rat(value);
                                atom.exact_mass = BigRational(1);
                                atom.log2_mass = 0.0;
                                prof.atoms.push_back(std::move(atom));
                                return prof;
                            }};
}

/// f(w) = |w| with unit mass per word.
inline MeasuredFunction length_function_uniform() {
    return MeasuredFunction{"f=n under uniform counting mass", [](std::uint64_t n) {
                                SphereProfile prof;
                                prof.n = n;
                                MeasuredAtom atom;
                                atom.exact_f = BigRational(n);
                                atom.log2_f = detail::log2_rat(*atom.exact_f);
                                atom.exact_mass = BigRational(ipow(BigInt(2), n));
                                atom.log2_mass = static_cast<double>(n);
                                prof.atoms.push_back(std::move(atom));
                                return prof;
                            }};
}

/// The dual construction: g = 2^(2^n) on the all-zeros word of each sphere
/// (a negligible set), g = 1 everywhere else, under mu(w) = 2^(-2|w|-1).
/// The spike value is only representable on the log scale for large n.
inline MeasuredFunction spike_on_zeros_function() {
    return MeasuredFunction{
        "g=2^(2^n) on the all-zeros word, 1 elsewhere, mu=2^-(2n+1)", [](std::uint64_t n) {
            SphereProfile prof;
            prof.n = n;
            MeasuredAtom spike;
            spike.log2_f = std::exp2(static_cast<double>(n));
            if (n <= 16) spike.exact_f = BigRational(ipow(BigInt(2), std::uint64_t(1) << n));
            spike.exact_mass = BigRational(1, ipow(BigInt(2), 2 * n + 1));
            spike.log2_mass = -2.0 * static_cast<double>(n) - 1.0;
            prof.atoms.push_back(std::move(spike));
            if (n >= 1) {
                MeasuredAtom rest;
                rest.exact_f = BigRational(1);
                rest.log2_f = 0.0;
                const BigInt others = ipow(BigInt(2), n) - 1;
                rest.exact_mass = BigRational(others, ipow(BigInt(2), 2 * n + 1));
                rest.log2_mass = detail::log2_rat(*rest.exact_mass);
                prof.atoms.push_back(std::move(rest));
            }
            return prof;
        }};
}

// --- expectations ---------------------------------------------------------

/// log2 of the sphere-conditional expectation of f^eps at radius n.
inline double expected_on_sphere_log2(const MeasuredFunction& mf, std::uint64_t n,
                                      const BigRational& eps = 1) {
    const SphereProfile prof = mf.profile(n);
    if (prof.atoms.empty()) throw EmptySphereError("sphere " + std::to_string(n) + " is empty");
    const double e = to_double(eps);
    detail::Log2Sum weighted, mass;
    for (const auto& atom : prof.atoms) {
        mass.add(atom.log2_mass);
        weighted.add(e * atom.log2_f + atom.log2_mass);
    }
    if (std::isinf(mass.value()))
        throw ZeroMassError("sphere " + std::to_string(n) + " carries no mass");
    return weighted.value() - mass.value();
}

inline double expected_on_sphere(const MeasuredFunction& mf, std::uint64_t n,
                                 const BigRational& eps = 1) {
    return std::exp2(expected_on_sphere_log2(mf, n, eps));
}

/// Exact sphere expectation when every atom is exact and f^eps stays rational.
inline std::optional<BigRational> expected_on_sphere_exact(const MeasuredFunction& mf,
                                                           std::uint64_t n,
                                                           const BigRational& eps = 1) {
    const SphereProfile prof = mf.profile(n);
    if (prof.atoms.empty()) throw EmptySphereError("sphere " + std::to_string(n) + " is empty");
    BigRational weighted = 0, mass = 0;
    for (const auto& atom : prof.atoms) {
        if (!atom.exact_f || !atom.exact_mass) return std::nullopt;
        const auto p = detail::exact_pow_rational(*atom.exact_f, eps);
        if (!p) return std::nullopt;
        weighted += *p * *atom.exact_mass;
        mass += *atom.exact_mass;
    }
    if (mass == 0) throw ZeroMassError("sphere " + std::to_string(n) + " carries no mass");
    return weighted / mass;
}

// --- finite-horizon average-case reports -----------------------------------

enum class AvgCriterion { spheres_expected, levin, impagliazzo };
enum class AvgVerdict {
    converges_at_horizon,
    diverges_at_horizon,
    polynomially_bounded_at_horizon,
    unbounded_at_horizon,
};

inline const char* to_string(AvgCriterion c) {
    switch (c) {
        case AvgCriterion::spheres_expected: return "spheres-expected";
        case AvgCriterion::levin: return "levin";
        default: return "impagliazzo";
    }
}

inline const char* to_string(AvgVerdict v) {
    switch (v) {
        case AvgVerdict::converges_at_horizon: return "converges-at-horizon";
        case AvgVerdict::diverges_at_horizon: return "diverges-at-horizon";
        case AvgVerdict::polynomially_bounded_at_horizon:
            return "polynomially-bounded-at-horizon";
        default: return "unbounded-at-horizon";
    }
}

struct AvgTerm {
    std::uint64_t n = 0;
    // levin: size-level contribution and running total; impagliazzo and
    // spheres-expected: the per-n expectation in both fields
    double log2_term = 0.0;
    double log2_running = 0.0;
    std::optional<BigRational> exact_term;
};

struct AvgTolerances {
    double ratio_threshold = 0.99;    // geometric-shrink test on tail term ratios
    double divergence_bound_log2 = std::log2(1e12);
    double bounded_slack = 2.0;       // allowance over the fitted constant
    std::size_t tail_window_min = 5;  // ratios inspected at the end of the series
};

struct AvgReport {
    AvgCriterion criterion = AvgCriterion::levin;
    std::string function_label;
    BigRational epsilon = 1;
    std::uint64_t horizon = 0;
    std::vector<AvgTerm> terms;
    AvgVerdict verdict = AvgVerdict::converges_at_horizon;
    AvgTolerances tolerances;
    std::vector<std::string> notes;
};

/// Partial sums of sum_x f(x)^eps * |x|^{-1} * mu(x) by size, up to the
/// horizon. Size-0 elements are excluded (their size reciprocal is
/// undefined); the exclusion is recorded in the report notes.
inline AvgReport levin_check(const MeasuredFunction& mf, const BigRational& eps,
                             std::uint64_t horizon, AvgTolerances tol = {}) {
    if (eps <= 0) throw ValidationError("levin_check needs eps > 0");
    if (horizon < 1) throw ValidationError("levin_check needs horizon >= 1");
    AvgReport rep;
    rep.criterion = AvgCriterion::levin;
    rep.function_label = mf.label;
    rep.epsilon = eps;
    rep.horizon = horizon;
    rep.tolerances = tol;
    rep.notes.push_back("size-0 elements excluded: the size reciprocal is undefined there");

    const double e = to_double(eps);
    detail::Log2Sum running;
    for (std::uint64_t n = 1; n <= horizon; ++n) {
        const SphereProfile prof = mf.profile(n);
        detail::Log2Sum level;
        BigRational exact_level = 0;
        bool exact_ok = true;
        for (const auto& atom : prof.atoms) {
            level.add(e * atom.log2_f + atom.log2_mass - std::log2(static_cast<double>(n)));
            if (exact_ok && atom.exact_f && atom.exact_mass) {
                if (auto p = detail::exact_pow_rational(*atom.exact_f, eps))
                    exact_level += *p * *atom.exact_mass / BigRational(n);
                else
                    exact_ok = false;
            } else {
                exact_ok = false;
            }
        }
        running.add(level.value());
        AvgTerm term;
        term.n = n;
        term.log2_term = level.value();
        term.log2_running = running.value();
        if (exact_ok) term.exact_term = exact_level;
        rep.terms.push_back(std::move(term));
    }

    // Diverged outright?
    bool over_bound = false;
    for (const auto& t : rep.terms)
        if (t.log2_running > tol.divergence_bound_log2) over_bound = true;

    // Ratio test on the tail of nonzero contributions.
    std::vector<double> nonzero;
    for (const auto& t : rep.terms)
        if (!std::isinf(t.log2_term)) nonzero.push_back(t.log2_term);
    bool tail_shrinks = true;
    if (nonzero.size() >= 2) {
        const std::size_t ratios = nonzero.size() - 1;
        const std::size_t window = std::max<std::size_t>(tol.tail_window_min, ratios / 5);
        const std::size_t first = ratios > window ? ratios - window : 0;
        const double log_threshold = std::log2(tol.ratio_threshold);
        for (std::size_t i = first; i < ratios; ++i)
            if (nonzero[i + 1] - nonzero[i] > log_threshold) tail_shrinks = false;
    }
    rep.verdict = (!over_bound && tail_shrinks) ? AvgVerdict::converges_at_horizon
                                                : AvgVerdict::diverges_at_horizon;
    return rep;
}

/// Ball-conditional expectations of f^eps at each n; bounded when every
/// expectation/n stays within slack of the constant fitted on the first half.
inline AvgReport impagliazzo_check(const MeasuredFunction& mf, const BigRational& eps,
                                   const std::vector<std::uint64_t>& n_list,
                                   AvgTolerances tol = {}) {
    if (eps <= 0) throw ValidationError("impagliazzo_check needs eps > 0");
    if (n_list.empty()) throw ValidationError("impagliazzo_check needs a nonempty n_list");
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        if (n_list[i] < 1) throw ValidationError("impagliazzo_check needs n >= 1");
        if (i > 0 && n_list[i] <= n_list[i - 1])
            throw ValidationError("impagliazzo_check: n_list must be strictly increasing");
    }
    AvgReport rep;
    rep.criterion = AvgCriterion::impagliazzo;
    rep.function_label = mf.label;
    rep.epsilon = eps;
    rep.horizon = n_list.back();
    rep.tolerances = tol;

    const double e = to_double(eps);
    // profiles for every radius up to the horizon, shared across points
    std::vector<SphereProfile> profs;
    profs.reserve(rep.horizon + 1);
    for (std::uint64_t m = 0; m <= rep.horizon; ++m) profs.push_back(mf.profile(m));

    for (const std::uint64_t n : n_list) {
        detail::Log2Sum weighted, mass;
        BigRational exact_weighted = 0, exact_mass = 0;
        bool exact_ok = true;
        bool any_atom = false;
        for (std::uint64_t m = 0; m <= n; ++m) {
            for (const auto& atom : profs[m].atoms) {
                any_atom = true;
                weighted.add(e * atom.log2_f + atom.log2_mass);
                mass.add(atom.log2_mass);
                if (exact_ok && atom.exact_f && atom.exact_mass) {
                    if (auto p = detail::exact_pow_rational(*atom.exact_f, eps)) {
                        exact_weighted += *p * *atom.exact_mass;
                        exact_mass += *atom.exact_mass;
                    } else {
                        exact_ok = false;
                    }
                } else {
                    exact_ok = false;
                }
            }
        }
        if (!any_atom) throw EmptySphereError("ball " + std::to_string(n) + " is empty");
        if (std::isinf(mass.value()))
            throw ZeroMassError("ball " + std::to_string(n) + " carries no mass");
        AvgTerm term;
        term.n = n;
        term.log2_term = weighted.value() - mass.value();
        term.log2_running = term.log2_term;
        if (exact_ok && exact_mass != 0) term.exact_term = exact_weighted / exact_mass;
        rep.terms.push_back(std::move(term));
    }

    // fitted constant: max expectation/n over the first half of the points
    const std::size_t half = (rep.terms.size() + 1) / 2;
    double fit_log2 = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < half; ++i)
        fit_log2 = std::max(fit_log2,
                            rep.terms[i].log2_term -
                                std::log2(static_cast<double>(rep.terms[i].n)));
    bool bounded = true;
    const double allowance = std::log2(tol.bounded_slack);
    for (const auto& t : rep.terms) {
        const double per_n = t.log2_term - std::log2(static_cast<double>(t.n));
        if (per_n > fit_log2 + allowance) bounded = false;
    }
    rep.verdict = bounded ? AvgVerdict::polynomially_bounded_at_horizon
                          : AvgVerdict::unbounded_at_horizon;
    return rep;
}

/// Sphere expectations of f^eps with a boundedness verdict against the
/// default polynomial envelope 100 * n^12 (with slack).
inline AvgReport expected_on_spheres_report(const MeasuredFunction& mf, const BigRational& eps,
                                            const std::vector<std::uint64_t>& n_list,
                                            AvgTolerances tol = {}) {
    if (n_list.empty()) throw ValidationError("expected_on_spheres_report needs n_list");
    AvgReport rep;
    rep.criterion = AvgCriterion::spheres_expected;
    rep.function_label = mf.label;
    rep.epsilon = eps;
    rep.horizon = n_list.back();
    rep.tolerances = tol;
    rep.notes.push_back("boundedness judged against the envelope 100*n^12 with slack");
    bool bounded = true;
    for (const std::uint64_t n : n_list) {
        AvgTerm term;
        term.n = n;
        term.log2_term = expected_on_sphere_log2(mf, n, eps);
        term.log2_running = term.log2_term;
        term.exact_term = expected_on_sphere_exact(mf, n, eps);
        const double envelope = std::log2(100.0) + 12.0 * std::log2(static_cast<double>(n)) +
                                std::log2(tol.bounded_slack);
        if (term.log2_term > envelope) bounded = false;
        rep.terms.push_back(std::move(term));
    }
    rep.verdict = bounded ? AvgVerdict::polynomially_bounded_at_horizon
                          : AvgVerdict::unbounded_at_horizon;
    return rep;
}

// --- the Markov-style generic bound -----------------------------------------

struct Polynomial {
    std::vector<BigRational> coeffs;  // ascending powers

    BigRational eval(std::uint64_t n) const {
        BigRational acc = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * BigInt(n) + coeffs[i];
        return acc;
    }
    std::string label() const {
        std::string out;
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            if (coeffs[i] == 0 && !(coeffs.size() == 1 && i == 0)) continue;
            if (!out.empty()) out += " + ";
            out += coeffs[i].str();
            if (i == 1) out += "*n";
            if (i > 1) out += "*n^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }
};

inline Polynomial monomial(const BigRational& c, std::uint64_t degree) {
    Polynomial p;
    p.coeffs.assign(degree + 1, BigRational(0));
    p.coeffs[degree] = c;
    return p;
}

struct MarkovReport {
    BigRational c = 1;
    std::uint64_t k = 1;
    Polynomial q;
    std::vector<std::pair<std::uint64_t, BigRational>> bound_values;  // (c*q(n)*n)^k
    FrequencySeries violation_masses;  // mu_n-mass of {f^(1/k) > q(n)*c*n}
    std::vector<std::string> notes;

    BigRational bound(std::uint64_t n) const {
        BigRational base = c * q.eval(n) * BigInt(n);
        BigRational out = 1;
        for (std::uint64_t i = 0; i < k; ++i) out *= base;
        return out;
    }
};

/// Checks the sphere-expectation premise E_n[f^(1/k)] <= c*n at each tested n
/// and returns the Markov consequences: the generic bound (c*q(n)*n)^k and the
/// per-n mass of inputs exceeding it. Premise checks are exact; atoms must
/// carry exact values with f a perfect k-th power.
inline MarkovReport markov_generic_bound(const MeasuredFunction& mf, const BigRational& c,
                                         std::uint64_t k, const Polynomial& q,
                                         const std::vector<std::uint64_t>& n_list) {
    if (k < 1) throw ValidationError("markov_generic_bound needs k >= 1");
    if (c <= 0) throw ValidationError("markov_generic_bound needs c > 0");
    if (n_list.empty()) throw ValidationError("markov_generic_bound needs n_list");
    MarkovReport rep;
    rep.c = c;
    rep.k = k;
    rep.q = q;
    rep.violation_masses.geometry = Geometry::sphere;
    rep.violation_masses.predicate_id = "exceeds-generic-bound";
    const BigRational inv_k(BigInt(1), BigInt(k));

    for (const std::uint64_t n : n_list) {
        if (n < 1) throw ValidationError("markov_generic_bound needs n >= 1");
        const BigRational qn = q.eval(n);
        if (qn <= 0) throw ValidationError("markov_generic_bound: q must be positive at n=" +
                                           std::to_string(n));
        const SphereProfile prof = mf.profile(n);
        if (prof.atoms.empty())
            throw EmptySphereError("sphere " + std::to_string(n) + " is empty");

        BigRational mass_total = 0, root_weighted = 0, mass_violating = 0;
        const BigRational threshold = rep.bound(n);  // violation: f > (c*q(n)*n)^k
        for (const auto& atom : prof.atoms) {
            if (!atom.exact_f || !atom.exact_mass)
                throw ValidationError("markov_generic_bound needs exact atoms at n=" +
                                      std::to_string(n));
            const auto root = detail::exact_pow_rational(*atom.exact_f, inv_k);
            if (!root)
                throw ValidationError("markov_generic_bound: f is not a perfect " +
                                      std::to_string(k) + "-th power at n=" + std::to_string(n));
            mass_total += *atom.exact_mass;
            root_weighted += *root * *atom.exact_mass;
            if (*atom.exact_f > threshold) mass_violating += *atom.exact_mass;
        }
        if (mass_total == 0) throw ZeroMassError("sphere " + std::to_string(n) + " has no mass");
        const BigRational premise = root_weighted / mass_total;
        const BigRational cn = c * BigInt(n);
        if (premise > cn)
            throw PremiseViolationError(
                "sphere expectation of f^(1/k) exceeds c*n at n=" + std::to_string(n) + " (" +
                    premise.str() + " > " + cn.str() + ")",
                n);

        const BigRational mass = mass_violating / mass_total;
        rep.bound_values.emplace_back(n, threshold);
        FrequencyPoint pt;
        pt.n = n;
        pt.mode = Mode::exact;
        pt.hits = numerator(mass);
        pt.trials = denominator(mass);
        pt.estimate = mass;
        pt.ci_half_width = 0.0;
        rep.violation_masses.points.push_back(std::move(pt));
    }
    rep.notes.push_back("premise checked exactly at every tested n");
    return rep;
}

/// Synthetic premised instance: per sphere, a spike of value (c*n*q(n)*t)^k on
/// mass 1/(t*q(n)) and value 0 on the rest, making the premise expectation
/// exactly c*n and the violation mass exactly 1/(t*q(n)).
inline MeasuredFunction markov_synthetic_function(const BigRational& c, std::uint64_t k,
                                                  const Polynomial& q, const BigRational& t) {
    if (t < 1) throw ValidationError("markov_synthetic_function needs t >= 1");
    return MeasuredFunction{
        "spike (c*n*q(n)*t)^k on mass 1/(t*q(n))", [c, k, q, t](std::uint64_t n) {
            SphereProfile prof;
            prof.n = n;
            if (n < 1) return prof;
            const BigRational qn = q.eval(n);
            BigRational spike_val = 1;
            const BigRational base = c * BigInt(n) * qn * t;
            for (std::uint64_t i = 0; i < k; ++i) spike_val *= base;
            MeasuredAtom spike;
            spike.exact_f = spike_val;
            spike.log2_f = detail::log2_rat(spike_val);
            spike.exact_mass = BigRational(1) / (t * qn);
            spike.log2_mass = detail::log2_rat(*spike.exact_mass);
            prof.atoms.push_back(std::move(spike));
            MeasuredAtom rest;
            rest.exact_f = BigRational(0);
            rest.log2_f = -std::numeric_limits<double>::infinity();
            rest.exact_mass = BigRational(1) - *prof.atoms[0].exact_mass;
            if (*rest.exact_mass < 0)
                throw ValidationError("markov_synthetic_function: spike mass exceeds 1");
            rest.log2_mass = detail::log2_rat(*rest.exact_mass);
            prof.atoms.push_back(std::move(rest));
            return prof;
        }};
}

// --- the two-sided separation ------------------------------------------------

inline std::vector<Polynomial> default_poly_family() {
    std::vector<Polynomial> out;
    for (std::uint64_t j = 0; j <= 12; ++j)
        for (int c : {1, 10, 100}) out.push_back(monomial(BigRational(c), j));
    return out;
}

struct PolySeparation {
    Polynomial poly;
    std::uint64_t crossover = 0;   // least n from which 2^n > p(n) stays true
    FrequencySeries below_bound;   // sphere frequency of {f <= p(n)}
    bool fails_past_crossover = false;
};

struct SeparationReport {
    AvgReport primal_levin;                      // f=2^n, eps=1/2: converges
    std::vector<PolySeparation> primal_generic;  // {f <= p} dies past each crossover
    FrequencySeries dual_generic_min;            // {g <= 1}
    FrequencySeries dual_generic_max;            // {g <= largest family polynomial}
    AvgReport dual_levin;                        // spike function, eps=1/2: diverges
    bool primal_average_converges = false;
    bool primal_generic_fails = false;
    bool dual_generic_passes = false;
    bool dual_average_diverges = false;
    bool incomparability_instantiated = false;
    std::uint64_t horizon = 0;
    std::vector<std::string> notes;
};

namespace detail {

// least N such that 2^n > p(n) for every n >= N (exact scan; the family's
// growth makes the last crossing small)
inline std::uint64_t pow2_crossover(const Polynomial& p, std::uint64_t scan_cap = 512) {
    std::uint64_t last_le = 0;
    BigInt pow2 = 2;
    for (std::uint64_t n = 1; n <= scan_cap; ++n) {
        const BigRational pn = p.eval(n);
        if (BigRational(pow2) <= pn) last_le = n;
        pow2 <<= 1;
    }
    if (last_le + 1 > scan_cap)
        throw ValidationError("pow2_crossover: no stable crossover within scan cap");
    return last_le + 1;
}

// does the spike value 2^(2^n) strictly exceed p(n)?
inline bool spike_exceeds(const Polynomial& p, std::uint64_t n) {
    const BigRational pn = p.eval(n);
    if (n <= 9) return BigRational(ipow(BigInt(2), std::uint64_t(1) << n)) > pn;
    // 2^(2^n) has over 2^9 bits; the family never reaches that
    return log2_rat(pn) < std::exp2(static_cast<double>(n));
}

}  // namespace detail

/// The two halves of the average-case/generic-case separation on binary
/// words: f = 2^|w| is average-polynomial (Levin at eps=1/2) yet fails every
/// polynomial bound generically; the spike dual passes the generic test and
/// fails the Levin sum.
inline SeparationReport separation_report(const std::vector<std::uint64_t>& n_list,
                                          std::uint64_t horizon = 200) {
    if (n_list.empty()) throw ValidationError("separation_report needs n_list");
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        if (n_list[i] < 1) throw ValidationError("separation_report needs n >= 1");
        if (i > 0 && n_list[i] <= n_list[i - 1])
            throw ValidationError("separation_report: n_list must be strictly increasing");
    }
    SeparationReport rep;
    rep.horizon = horizon;

    const MeasuredFunction primal = pow2_quadratic_decay_function();
    rep.primal_levin = levin_check(primal, BigRational(1, 2), horizon);
    rep.primal_average_converges =
        rep.primal_levin.verdict == AvgVerdict::converges_at_horizon;

    rep.primal_generic_fails = true;
    for (const Polynomial& p : default_poly_family()) {
        PolySeparation sep;
        sep.poly = p;
        sep.crossover = detail::pow2_crossover(p);
        sep.below_bound.geometry = Geometry::sphere;
        sep.below_bound.predicate_id = "value-within-" + p.label();
        bool fails = true;
        for (const std::uint64_t n : n_list) {
            // f = 2^n on the whole sphere: frequency is 1 or 0 outright
            const bool within = BigRational(ipow(BigInt(2), n)) <= p.eval(n);
            FrequencyPoint pt;
            pt.n = n;
            pt.mode = Mode::exact;
            const BigInt sphere = ipow(BigInt(2), n);
            pt.hits = within ? sphere : BigInt(0);
            pt.trials = sphere;
            pt.estimate = within ? 1 : 0;
            pt.ci_half_width = 0.0;
            if (n >= sep.crossover && within) fails = false;
            sep.below_bound.points.push_back(std::move(pt));
        }
        sep.fails_past_crossover = fails;
        if (!fails) rep.primal_generic_fails = false;
        rep.primal_generic.push_back(std::move(sep));
    }

    const auto family = default_poly_family();
    const Polynomial pmin = monomial(BigRational(1), 0);
    Polynomial pmax = family.front();
    for (const auto& p : family)
        if (p.eval(512) > pmax.eval(512)) pmax = p;

    auto dual_series = [&](const Polynomial& p, FrequencySeries& out) {
        out.geometry = Geometry::sphere;
        out.predicate_id = "spike-value-within-" + p.label();
        for (const std::uint64_t n : n_list) {
            const BigInt sphere = ipow(BigInt(2), n);
            const bool spike_out = detail::spike_exceeds(p, n);
            FrequencyPoint pt;
            pt.n = n;
            pt.mode = Mode::exact;
            pt.hits = spike_out ? sphere - 1 : sphere;
            pt.trials = sphere;
            pt.estimate = BigRational(pt.hits, pt.trials);
            pt.ci_half_width = 0.0;
            out.points.push_back(std::move(pt));
        }
    };
    dual_series(pmin, rep.dual_generic_min);
    dual_series(pmax, rep.dual_generic_max);

    auto passes = [](const FrequencySeries& s) {
        // nondecreasing once the spike has left the bound (early points where
        // even the spike fits sit at exactly 1)
        std::size_t first = 0;
        while (first < s.points.size() && s.points[first].estimate == 1) ++first;
        for (std::size_t i = first + 1; i < s.points.size(); ++i)
            if (s.points[i].estimate < s.points[i - 1].estimate) return false;
        return s.points.back().estimate >= BigRational(1023, 1024);
    };
    rep.dual_generic_passes = passes(rep.dual_generic_min) && passes(rep.dual_generic_max);

    const MeasuredFunction dual = spike_on_zeros_function();
    rep.dual_levin = levin_check(dual, BigRational(1, 2), horizon);
    rep.dual_average_diverges = rep.dual_levin.verdict == AvgVerdict::diverges_at_horizon;

    rep.incomparability_instantiated = rep.primal_average_converges &&
                                       rep.primal_generic_fails && rep.dual_generic_passes &&
                                       rep.dual_average_diverges;
    rep.notes.push_back(
        "fast on average yet generically over every polynomial bound, and conversely");
    return rep;
}

}  // namespace gencase
