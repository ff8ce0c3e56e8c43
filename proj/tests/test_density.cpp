#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>
#include <vector>

#include "gencase/convergence.hpp"
#include "gencase/ensemble.hpp"
#include "gencase/frequency.hpp"
#include "gencase/words.hpp"

using namespace gencase;

namespace {

bool starts_with_one(const std::string& w) { return !w.empty() && w[0] == '1'; }

bool contains_double_zero(const std::string& w) {
    return w.find("00") != std::string::npos;
}

FrequencySeries exact_series_from(const std::vector<std::pair<std::uint64_t, double>>& pts) {
    // synthetic exact series with the given estimates, for classifier tests
    FrequencySeries s;
    s.geometry = Geometry::sphere;
    s.predicate_id = "synthetic";
    for (const auto& [n, value] : pts) {
        FrequencyPoint p;
        p.n = n;
        p.mode = Mode::exact;
        const BigInt denom = 1'000'000'000'000ULL;
        BigInt num = BigInt(static_cast<std::uint64_t>(std::llround(value * 1e12)));
        p.hits = num;
        p.trials = denom;
        p.estimate = BigRational(num, denom);
        s.points.push_back(std::move(p));
    }
    return s;
}

}  // namespace

TEST_CASE("normal quantile matches tabled values") {
    REQUIRE(std::fabs(normal_quantile(0.5)) < 1e-12);
    REQUIRE(normal_quantile(0.975) == Catch::Approx(1.959964).margin(1e-4));
    REQUIRE(normal_quantile(0.995) == Catch::Approx(2.575829).margin(1e-4));
    REQUIRE(normal_quantile(0.25) == Catch::Approx(-normal_quantile(0.75)).margin(1e-12));
}

TEST_CASE("confidence half-widths behave") {
    // boundary counts fall back to a positive Wilson width
    REQUIRE(ci_half_width(0, 1000, 0.99) > 0.0);
    REQUIRE(ci_half_width(1000, 1000, 0.99) > 0.0);
    // interior widths shrink with the sample count
    REQUIRE(ci_half_width(500, 1000, 0.99) > ci_half_width(5000, 10000, 0.99));
    REQUIRE_THROWS_AS(normal_quantile(0.0), ValidationError);
    REQUIRE_THROWS_AS(normal_quantile(1.0), ValidationError);
}

TEST_CASE("exact sphere frequency by enumeration") {
    BinaryWordDomain words;
    RngState rng(1);
    const FrequencyPoint half =
        frequency(words, starts_with_one, 3, Geometry::sphere, Mode::exact, 0, rng);
    REQUIRE(half.estimate == BigRational(1, 2));
    REQUIRE(half.hits == 4);
    REQUIRE(half.trials == 8);
    REQUIRE(half.ci_half_width == 0.0);

    const FrequencyPoint dz =
        frequency(words, contains_double_zero, 3, Geometry::sphere, Mode::exact, 0, rng);
    REQUIRE(dz.estimate == BigRational(3, 8));  // 000, 001, 100
}

TEST_CASE("exact ball frequency accumulates spheres") {
    BinaryWordDomain words;
    RngState rng(1);
    const auto even_length = [](const std::string& w) { return w.size() % 2 == 0; };
    const FrequencyPoint pt =
        frequency(words, even_length, 3, Geometry::ball, Mode::exact, 0, rng);
    // ball of radius 3 holds 1+2+4+8 = 15 words, 1+4 = 5 of even length
    REQUIRE(pt.estimate == BigRational(5, 15));

    const auto always = [](const std::string&) { return true; };
    REQUIRE(frequency(words, always, 3, Geometry::ball, Mode::exact, 0, rng).estimate == 1);
}

TEST_CASE("monte carlo estimates are reproducible and close to exact") {
    BinaryWordDomain words;
    RngState rng_a(42), rng_b(42);
    const FrequencyPoint a = frequency(words, contains_double_zero, 12, Geometry::sphere,
                                       Mode::monte_carlo, 20'000, rng_a);
    const FrequencyPoint b = frequency(words, contains_double_zero, 12, Geometry::sphere,
                                       Mode::monte_carlo, 20'000, rng_b);
    REQUIRE(a.hits == b.hits);  // same seed, same estimate

    RngState rng_c(42);
    const FrequencyPoint exact =
        frequency(words, contains_double_zero, 12, Geometry::sphere, Mode::exact, 0, rng_c);
    REQUIRE(std::fabs(to_double(a.estimate) - to_double(exact.estimate)) <
            2.0 * a.ci_half_width);
    REQUIRE(a.ci_half_width > 0.0);
}

TEST_CASE("ball sampling weights spheres by cardinality") {
    BinaryWordDomain words;
    RngState rng(7);
    const auto full_length = [](const std::string& w) { return w.size() == 3; };
    const FrequencyPoint pt =
        frequency(words, full_length, 3, Geometry::ball, Mode::monte_carlo, 6'000, rng);
    // sphere 3 carries 8 of the ball's 15 words
    REQUIRE(std::fabs(to_double(pt.estimate) - 8.0 / 15.0) < 0.05);
}

TEST_CASE("series points use per-radius substreams") {
    BinaryWordDomain words;
    RngState rng_a(5), rng_b(5);
    const FrequencySeries both = frequency_series(words, starts_with_one, {2, 5},
                                                  Geometry::sphere, Mode::monte_carlo, 500,
                                                  rng_a, "starts-with-one");
    const FrequencySeries tail = frequency_series(words, starts_with_one, {5}, Geometry::sphere,
                                                  Mode::monte_carlo, 500, rng_b,
                                                  "starts-with-one");
    // dropping earlier radii must not disturb later points
    REQUIRE(both.points[1].hits == tail.points[0].hits);
    REQUIRE_THROWS_AS(frequency_series(words, starts_with_one, {5, 5}, Geometry::sphere,
                                       Mode::monte_carlo, 10, rng_a),
                      ValidationError);
}

TEST_CASE("empty strata are refused rather than divided by") {
    struct EmptyAtThree {
        using element_type = std::string;
        std::uint64_t size_of(const std::string& w) const { return w.size(); }
        std::optional<BigInt> sphere_count(std::uint64_t n) const {
            return n == 3 ? BigInt(0) : BigInt(1);
        }
        bool can_enumerate_sphere(std::uint64_t) const { return true; }
        void for_each_in_sphere(std::uint64_t n,
                                const std::function<void(const std::string&)>& visit) const {
            if (n != 3) visit(std::string(n, 'x'));
        }
        std::string sample_sphere(std::uint64_t n, RngState&) const {
            return std::string(n, 'x');
        }
    };
    EmptyAtThree d;
    RngState rng(1);
    const auto always = [](const std::string&) { return true; };
    REQUIRE_THROWS_AS(frequency(d, always, 3, Geometry::sphere, Mode::exact, 0, rng),
                      EmptySphereError);
    // the ball at radius 3 still has the smaller spheres
    REQUIRE(frequency(d, always, 3, Geometry::ball, Mode::exact, 0, rng).trials == 3);
}

TEST_CASE("monte carlo rejects zero trials") {
    BinaryWordDomain words;
    RngState rng(1);
    REQUIRE_THROWS_AS(
        frequency(words, starts_with_one, 3, Geometry::sphere, Mode::monte_carlo, 0, rng),
        ValidationError);
}

TEST_CASE("bounded-decision series counts only fast decided inputs") {
    BinaryWordDomain words;
    RngState rng(1);
    const auto solver = [](const std::string& w) {
        PartialVerdict v;
        v.answer = starts_with_one(w) ? Answer::yes : Answer::dont_know;
        v.steps = w.size();
        return v;
    };
    const FrequencySeries in_budget =
        generic_time_report(words, solver, [](std::uint64_t n) { return n; }, {3},
                            Geometry::sphere, Mode::exact, 0, rng);
    REQUIRE(in_budget.points[0].estimate == BigRational(1, 2));
    const FrequencySeries no_budget =
        generic_time_report(words, solver, [](std::uint64_t) { return std::uint64_t(0); }, {3},
                            Geometry::sphere, Mode::exact, 0, rng);
    REQUIRE(no_budget.points[0].estimate == 0);
}

TEST_CASE("sphere and ball frequencies straddle the same limit") {
    BinaryWordDomain words;
    RngState rng(3);
    const auto [sphere, ball] =
        spherical_vs_volume(words, starts_with_one, 4, Mode::exact, 0, rng);
    REQUIRE(sphere.estimate == BigRational(1, 2));
    // ball of radius 4: 15 of 31 words start with 1
    REQUIRE(ball.estimate == BigRational(15, 31));
}

TEST_CASE("convergence classifier separates decay shapes") {
    // residual 2^-n: geometric decay
    std::vector<std::pair<std::uint64_t, double>> geo;
    for (std::uint64_t n = 1; n <= 12; ++n) geo.push_back({n, 1.0 - std::exp2(-double(n))});
    REQUIRE(classify_convergence(exact_series_from(geo), 1.0).classification ==
            ConvergenceClass::consistent_with_exponential);

    // residual n^-2: a low-degree power law is not superpolynomial decay
    std::vector<std::pair<std::uint64_t, double>> slow;
    for (std::uint64_t n = 1; n <= 12; ++n)
        slow.push_back({n, 1.0 - 1.0 / double(n * n)});
    REQUIRE(classify_convergence(exact_series_from(slow), 1.0).classification ==
            ConvergenceClass::incompatible);

    // residual n^-10 over a horizon where the tail stays representable
    std::vector<std::pair<std::uint64_t, double>> steep;
    for (std::uint64_t n = 1; n <= 10; ++n)
        steep.push_back({n, 1.0 - std::pow(double(n), -10.0)});
    REQUIRE(classify_convergence(exact_series_from(steep), 1.0).classification ==
            ConvergenceClass::consistent_with_superpolynomial);

    // growing residuals are flagged outright
    std::vector<std::pair<std::uint64_t, double>> worse;
    for (std::uint64_t n = 1; n <= 8; ++n) worse.push_back({n, 0.9 - 0.05 * double(n)});
    const auto rep = classify_convergence(exact_series_from(worse), 1.0);
    REQUIRE(rep.classification == ConvergenceClass::incompatible);

    // residuals that reach zero exactly
    std::vector<std::pair<std::uint64_t, double>> done;
    for (std::uint64_t n = 1; n <= 6; ++n) done.push_back({n, 1.0});
    const auto zero_rep = classify_convergence(exact_series_from(done), 1.0);
    REQUIRE(zero_rep.classification == ConvergenceClass::consistent_with_exponential);
    REQUIRE_FALSE(zero_rep.notes.empty());

    std::vector<std::pair<std::uint64_t, double>> few = {{1, 0.5}, {2, 0.6}, {3, 0.7}};
    REQUIRE_THROWS_AS(classify_convergence(exact_series_from(few), 1.0), ValidationError);
}

TEST_CASE("rng substreams are independent of draw order") {
    RngState root(77);
    RngState a = root.substream(9);
    (void)root.next_u64();
    (void)root.next_u64();
    RngState b = root.substream(9);  // derived from the seed, not the position
    REQUIRE(a.next_u64() == b.next_u64());

    RngState bounds(5);
    for (int i = 0; i < 1000; ++i) REQUIRE(bounds.below(7) < 7);
    for (int i = 0; i < 1000; ++i) {
        const double u = bounds.unit();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
    }
}

TEST_CASE("conditional ensembles renormalize per stratum") {
    BinaryWordDomain words;
    const auto mu = [](const std::string& w) { return w == "11" ? 3.0 : 1.0; };
    const auto ens = conditional_ensemble(mu, words, Geometry::sphere);
    double total = 0.0;
    words.for_each_in_sphere(2, [&](const std::string& w) { total += ens.weight(2, w); });
    REQUIRE(total == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(ens.weight(2, "11") == Catch::Approx(0.5).margin(1e-12));  // 3 of 6
}
