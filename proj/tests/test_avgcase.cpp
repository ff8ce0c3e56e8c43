#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "gencase/avgcase.hpp"
#include "gencase/words.hpp"

using namespace gencase;

namespace {

MeasuredFunction empty_function() {
    return MeasuredFunction{"empty", [](std::uint64_t n) {
                                SphereProfile prof;
                                prof.n = n;
                                return prof;
                            }};
}

std::vector<std::uint64_t> upto(std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n <= hi; ++n) out.push_back(n);
    return out;
}

}  // namespace

TEST_CASE("rational powers are exact only when they exist") {
    using detail::exact_pow_rational;
    REQUIRE(exact_pow_rational(BigRational(4, 9), BigRational(1, 2)) == BigRational(2, 3));
    REQUIRE(exact_pow_rational(BigRational(8), BigRational(2, 3)) == BigRational(4));
    REQUIRE(exact_pow_rational(BigRational(7), BigRational(1)) == BigRational(7));
    REQUIRE(exact_pow_rational(BigRational(0), BigRational(1, 2)) == BigRational(0));
    REQUIRE(exact_pow_rational(BigRational(1), BigRational(5, 7)) == BigRational(1));
    REQUIRE_FALSE(exact_pow_rational(BigRational(2), BigRational(1, 2)).has_value());
    REQUIRE_FALSE(exact_pow_rational(BigRational(-4), BigRational(1, 2)).has_value());
    REQUIRE_FALSE(exact_pow_rational(BigRational(2), BigRational(1, 65)).has_value());

    // huge power-of-two inputs take the fast path
    const BigRational big(ipow(BigInt(2), 4096));
    REQUIRE(exact_pow_rational(big, BigRational(1, 2)) == BigRational(ipow(BigInt(2), 2048)));
}

TEST_CASE("log-scale accumulation") {
    detail::Log2Sum sum;
    REQUIRE(std::isinf(sum.value()));
    sum.add(3.0);
    sum.add(3.0);
    REQUIRE(sum.value() == Catch::Approx(4.0).margin(1e-12));
    sum.add(-std::numeric_limits<double>::infinity());
    REQUIRE(sum.value() == Catch::Approx(4.0).margin(1e-12));

    REQUIRE(detail::log2_rat(BigRational(8)) == Catch::Approx(3.0).margin(1e-12));
    REQUIRE(detail::log2_rat(BigRational(1, 4)) == Catch::Approx(-2.0).margin(1e-12));
    REQUIRE(std::isinf(detail::log2_rat(BigRational(0))));
    REQUIRE_THROWS_AS(detail::log2_rat(BigRational(-1)), ValidationError);
}

TEST_CASE("sphere expectations, exact and on the log scale") {
    const MeasuredFunction uniform = pow2_uniform_function();
    REQUIRE(expected_on_sphere_exact(uniform, 5) == BigRational(32));
    REQUIRE(expected_on_sphere_log2(uniform, 5) == Catch::Approx(5.0).margin(1e-9));
    REQUIRE(expected_on_sphere_exact(uniform, 4, BigRational(1, 2)) == BigRational(4));
    // 2^5 is no perfect square, so the halved exponent only exists in logs
    REQUIRE_FALSE(expected_on_sphere_exact(uniform, 5, BigRational(1, 2)).has_value());
    REQUIRE(expected_on_sphere_log2(uniform, 5, BigRational(1, 2)) ==
            Catch::Approx(2.5).margin(1e-9));

    // spike plus flat rest, weighted by the quadratic-decay measure
    const MeasuredFunction dual = spike_on_zeros_function();
    REQUIRE(expected_on_sphere_exact(dual, 3) == BigRational(263, 8));
    REQUIRE(expected_on_sphere_log2(dual, 3) ==
            Catch::Approx(std::log2(263.0 / 8.0)).margin(1e-9));

    REQUIRE_THROWS_AS(expected_on_sphere_log2(empty_function(), 2), EmptySphereError);

    BinaryWordDomain words;
    const MeasuredFunction massless = measured_from_enumeration<BinaryWordDomain>(
        words, [](const std::string& w) { return BigRational(w.size() + 1); },
        [](const std::string&) { return BigRational(0); }, "zero mass");
    REQUIRE_THROWS_AS(expected_on_sphere_log2(massless, 2), ZeroMassError);
    REQUIRE_THROWS_AS(expected_on_sphere_exact(massless, 2), ZeroMassError);

    const MeasuredFunction len_plus_one = measured_from_enumeration<BinaryWordDomain>(
        words, [](const std::string& w) { return BigRational(w.size() + 1); },
        [](const std::string&) { return BigRational(1); }, "length plus one");
    REQUIRE(expected_on_sphere_exact(len_plus_one, 2) == BigRational(3));
}

TEST_CASE("size-weighted partial sums converge or diverge by exponent") {
    const MeasuredFunction primal = pow2_quadratic_decay_function();

    const AvgReport half = levin_check(primal, BigRational(1, 2), 200);
    REQUIRE(half.verdict == AvgVerdict::converges_at_horizon);
    REQUIRE(half.terms.size() == 200);
    // even sizes admit the exact closed form 1 / (n * 2^(n/2 + 1))
    for (const std::uint64_t n : {std::uint64_t(4), std::uint64_t(10)}) {
        const auto& term = half.terms[n - 1];
        REQUIRE(term.n == n);
        REQUIRE(term.exact_term.has_value());
        BigInt den = ipow(BigInt(2), n / 2 + 1);
        den *= n;
        REQUIRE(*term.exact_term == BigRational(BigInt(1), den));
    }
    REQUIRE_FALSE(half.terms[4].exact_term.has_value());  // n=5: no exact square root
    REQUIRE_FALSE(half.notes.empty());                    // the size-0 exclusion is recorded

    const AvgReport full = levin_check(primal, BigRational(1), 200);
    REQUIRE(full.verdict == AvgVerdict::diverges_at_horizon);
    // at full strength each size contributes exactly 1/(2n)
    REQUIRE(*full.terms[0].exact_term == BigRational(1, 2));
    REQUIRE(*full.terms[9].exact_term == BigRational(1, 20));

    // harmonic-style tails are caught by the ratio test before any overflow
    const AvgReport flat = levin_check(constant_function(BigRational(5)), BigRational(1), 200);
    REQUIRE(flat.verdict == AvgVerdict::diverges_at_horizon);

    REQUIRE_THROWS_AS(levin_check(primal, BigRational(0), 10), ValidationError);
    REQUIRE_THROWS_AS(levin_check(primal, BigRational(1), 0), ValidationError);
}

TEST_CASE("ball expectations separate linear from exponential growth") {
    const std::vector<std::uint64_t> sizes = {1, 2, 4, 8, 16, 32, 64};

    const AvgReport tame = impagliazzo_check(length_function_uniform(), BigRational(1), sizes);
    REQUIRE(tame.verdict == AvgVerdict::polynomially_bounded_at_horizon);
    REQUIRE(*tame.terms[1].exact_term == BigRational(10, 7));  // ball of radius 2

    const AvgReport wild = impagliazzo_check(pow2_uniform_function(), BigRational(1), sizes);
    REQUIRE(wild.verdict == AvgVerdict::unbounded_at_horizon);
    REQUIRE(*wild.terms[1].exact_term == BigRational(3));  // (1+4+16)/(1+2+4)

    const AvgReport wild_half =
        impagliazzo_check(pow2_uniform_function(), BigRational(1, 2), sizes);
    REQUIRE(wild_half.verdict == AvgVerdict::unbounded_at_horizon);

    REQUIRE_THROWS_AS(impagliazzo_check(length_function_uniform(), BigRational(1), {}),
                      ValidationError);
    REQUIRE_THROWS_AS(impagliazzo_check(length_function_uniform(), BigRational(1), {3, 3}),
                      ValidationError);
    REQUIRE_THROWS_AS(impagliazzo_check(length_function_uniform(), BigRational(1), {0, 2}),
                      ValidationError);
    REQUIRE_THROWS_AS(impagliazzo_check(empty_function(), BigRational(1), {2}),
                      EmptySphereError);
}

TEST_CASE("sphere-expectation report judges against the fixed envelope") {
    const AvgReport small = expected_on_spheres_report(pow2_uniform_function(), BigRational(1),
                                                       {8, 16, 32});
    REQUIRE(small.verdict == AvgVerdict::polynomially_bounded_at_horizon);
    REQUIRE(*small.terms[0].exact_term == BigRational(256));

    const AvgReport large = expected_on_spheres_report(pow2_uniform_function(), BigRational(1),
                                                       {64, 128});
    REQUIRE(large.verdict == AvgVerdict::unbounded_at_horizon);

    const AvgReport len = expected_on_spheres_report(length_function_uniform(), BigRational(1),
                                                     {64, 128, 256});
    REQUIRE(len.verdict == AvgVerdict::polynomially_bounded_at_horizon);

    REQUIRE_THROWS_AS(expected_on_spheres_report(length_function_uniform(), BigRational(1), {}),
                      ValidationError);
}

TEST_CASE("report enums spell kebab-case") {
    REQUIRE(std::string(to_string(AvgCriterion::levin)) == "levin");
    REQUIRE(std::string(to_string(AvgCriterion::spheres_expected)) == "spheres-expected");
    REQUIRE(std::string(to_string(AvgVerdict::converges_at_horizon)) == "converges-at-horizon");
    REQUIRE(std::string(to_string(AvgVerdict::unbounded_at_horizon)) == "unbounded-at-horizon");
}

TEST_CASE("polynomials evaluate, label, and form the default family") {
    Polynomial p;
    p.coeffs = {BigRational(1), BigRational(0), BigRational(3)};
    REQUIRE(p.eval(2) == BigRational(13));
    REQUIRE(p.eval(0) == BigRational(1));
    REQUIRE(p.label() == "3*n^2 + 1");
    REQUIRE(monomial(BigRational(5), 0).label() == "5");
    REQUIRE(monomial(BigRational(1), 1).label() == "1*n");
    REQUIRE(Polynomial{}.label() == "0");

    const auto family = default_poly_family();
    REQUIRE(family.size() == 39);  // degrees 0..12, constants 1, 10, 100
    bool has_top = false;
    for (const auto& q : family)
        if (q.label() == "100*n^12") has_top = true;
    REQUIRE(has_top);
}

TEST_CASE("doubling beats every polynomial from its crossover on") {
    using detail::pow2_crossover;
    REQUIRE(pow2_crossover(monomial(BigRational(1), 0)) == 1);
    REQUIRE(pow2_crossover(monomial(BigRational(1), 4)) == 17);  // 2^16 == 16^4 ties
    const Polynomial top = monomial(BigRational(100), 12);
    const std::uint64_t cross = pow2_crossover(top);
    REQUIRE(BigRational(ipow(BigInt(2), cross)) > top.eval(cross));
    REQUIRE(BigRational(ipow(BigInt(2), cross - 1)) <= top.eval(cross - 1));
    // a constant above 2^512 never stabilizes within the scan
    REQUIRE_THROWS_AS(pow2_crossover(monomial(BigRational(ipow(BigInt(2), 600)), 0)),
                      ValidationError);

    using detail::spike_exceeds;
    REQUIRE_FALSE(spike_exceeds(monomial(BigRational(1), 4), 2));  // 2^4 == 2^4, not strict
    REQUIRE(spike_exceeds(monomial(BigRational(1), 4), 3));
    REQUIRE(spike_exceeds(monomial(BigRational(100), 12), 10));  // log-scale branch
}

TEST_CASE("tail-mass bound instances stay within their budget") {
    Polynomial q;
    q.coeffs = {BigRational(1), BigRational(0), BigRational(1)};  // n^2 + 1
    const BigRational c(2);
    const std::uint64_t k = 3;
    const BigRational t(4);
    const MeasuredFunction spike = markov_synthetic_function(c, k, q, t);

    const std::vector<std::uint64_t> sizes = {1, 2, 3, 5, 8, 13, 21};
    const MarkovReport rep = markov_generic_bound(spike, c, k, q, sizes);
    REQUIRE(rep.bound_values.size() == sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const std::uint64_t n = sizes[i];
        const BigRational qn = q.eval(n);
        // the bound is (c*q(n)*n)^k and the offending mass is exactly 1/(t*q(n))
        BigRational want_bound = 1;
        for (std::uint64_t j = 0; j < k; ++j) want_bound *= c * qn * BigInt(n);
        REQUIRE(rep.bound_values[i].second == want_bound);
        const BigRational mass = rep.violation_masses.points[i].estimate;
        const BigRational spike_mass = BigRational(1) / (t * qn);
        const BigRational budget = BigRational(1) / qn;
        REQUIRE(mass == spike_mass);
        REQUIRE(mass <= budget);
    }
    REQUIRE(rep.bound(3) == BigRational(216000));  // (2 * 10 * 3)^3

    // a function whose expectation breaks the premise is rejected with the n
    try {
        markov_generic_bound(constant_function(BigRational(100)), BigRational(1), 1,
                             monomial(BigRational(1), 1), {5});
        FAIL("premise violation expected");
    } catch (const PremiseViolationError& e) {
        REQUIRE(e.n == 5);
    }

    // imperfect k-th powers cannot be checked exactly
    REQUIRE_THROWS_AS(markov_generic_bound(constant_function(BigRational(2)), BigRational(3), 2,
                                           monomial(BigRational(1), 1), {4}),
                      ValidationError);
    REQUIRE_THROWS_AS(markov_generic_bound(spike, c, 0, q, {2}), ValidationError);
    REQUIRE_THROWS_AS(markov_generic_bound(spike, BigRational(0), k, q, {2}), ValidationError);
    REQUIRE_THROWS_AS(markov_generic_bound(spike, c, k, monomial(BigRational(-1), 1), {2}),
                      ValidationError);
    REQUIRE_THROWS_AS(markov_synthetic_function(c, k, q, BigRational(1, 2)), ValidationError);
}

TEST_CASE("the two-sided separation holds at the default horizon") {
    const SeparationReport rep = separation_report(upto(48));
    REQUIRE(rep.primal_average_converges);
    REQUIRE(rep.primal_generic_fails);
    REQUIRE(rep.dual_generic_passes);
    REQUIRE(rep.dual_average_diverges);
    REQUIRE(rep.incomparability_instantiated);
    REQUIRE(rep.horizon == 200);

    REQUIRE(rep.primal_generic.size() == 39);
    for (const auto& sep : rep.primal_generic) {
        REQUIRE(sep.fails_past_crossover);
        REQUIRE(sep.below_bound.points.size() == 48);
    }

    // the easy dual bound p=1 is beaten on every sphere but the spike word
    const auto& min_pts = rep.dual_generic_min.points;
    REQUIRE(min_pts.front().estimate == BigRational(1, 2));
    const BigInt sphere48 = ipow(BigInt(2), 48);
    const BigInt sphere48_less = sphere48 - 1;
    REQUIRE(min_pts.back().estimate == BigRational(sphere48_less, sphere48));

    // against the family's largest polynomial the spike hides until n=6
    const auto& max_pts = rep.dual_generic_max.points;
    REQUIRE(max_pts[4].estimate == 1);
    REQUIRE(max_pts[5].estimate == BigRational(63, 64));

    REQUIRE_THROWS_AS(separation_report({}), ValidationError);
    REQUIRE_THROWS_AS(separation_report({3, 3}), ValidationError);
    REQUIRE_THROWS_AS(separation_report({0, 1}), ValidationError);
}
