#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "gencase/threesat.hpp"

using namespace gencase;

namespace {

Cnf3Instance from_text(const std::string& text) { return parse_instance(text); }

}  // namespace

TEST_CASE("instance text parses, renders, and round-trips") {
    REQUIRE(parse_instance("").clauses.empty());
    REQUIRE(instance_size(Cnf3Instance{}) == 0);

    const Cnf3Instance minimal = from_text("[1v1v1]^");
    REQUIRE(minimal.clauses.size() == 1);
    REQUIRE(minimal.clauses[0].lits[0] == Literal{"1", false});
    REQUIRE(instance_size(minimal) == 8);
    REQUIRE(render_instance(minimal) == "[1v1v1]^");

    const Cnf3Instance neg = from_text("[10'v1v11']^[1v1v1]^");
    REQUIRE(neg.clauses.size() == 2);
    REQUIRE(neg.clauses[0].lits[0] == Literal{"10", true});
    REQUIRE(neg.clauses[0].lits[2] == Literal{"11", true});
    REQUIRE(instance_size(neg) == render_instance(neg).size());
    REQUIRE(parse_instance(render_instance(neg)) == neg);

    // the two logical signs have UTF-8 spellings on input and output
    const std::string pretty = render_instance(neg, true);
    REQUIRE(pretty.find("\xe2\x88\xa8") != std::string::npos);
    REQUIRE(parse_instance(pretty) == neg);

    // whitespace between symbols is ignored
    REQUIRE(parse_instance(" [1v 1v1]\n^ ") == minimal);
}

TEST_CASE("syntax errors carry symbol positions") {
    try {
        parse_instance("[1v1v1]");
        FAIL("missing conjunction sign should not parse");
    } catch (const SyntaxError& e) {
        REQUIRE(e.position == 7);
        REQUIRE(std::string(e.what()).find("at symbol 7") != std::string::npos);
    }
    REQUIRE_THROWS_AS(parse_instance("x"), SyntaxError);
    REQUIRE_THROWS_AS(parse_instance("[0v1v1]^"), SyntaxError);  // numeral must start with 1
    REQUIRE_THROWS_AS(parse_instance("[1v1v1]^["), SyntaxError);
    REQUIRE_THROWS_AS(parse_instance("[1v1]^"), SyntaxError);  // two literals only

    REQUIRE_THROWS_AS(validate_instance(Cnf3Instance{{Clause{
                          {Literal{"01", false}, Literal{"1", false}, Literal{"1", false}}}}}),
                      ValidationError);
}

TEST_CASE("the eight sign patterns over variables 1, 10, 11") {
    const auto cores = core_clauses();
    for (std::uint8_t i = 0; i < 8; ++i) {
        REQUIRE(core_index_of(cores[i]) == i);
        for (int b = 0; b < 3; ++b) REQUIRE(cores[i].lits[b].negated == (((i >> b) & 1) != 0));
    }
    REQUIRE(core_clause(5).lits[0].negated);
    REQUIRE_FALSE(core_clause(5).lits[1].negated);
    REQUIRE(core_clause(5).lits[2].negated);
    REQUIRE_THROWS_AS(core_clause(8), ValidationError);

    // wrong variables are not cores
    REQUIRE_FALSE(core_index_of(from_text("[1v10v10]^").clauses[0]).has_value());
    REQUIRE_FALSE(core_index_of(from_text("[1v11v10]^").clauses[0]).has_value());

    REQUIRE(instance_size(core_instance()) == 92);
    REQUIRE(render_instance(core_instance()).size() == 92);
}

TEST_CASE("core clauses are jointly unsatisfiable, any seven are satisfiable") {
    REQUIRE_FALSE(brute_force_sat(core_instance()));
    for (int omit = 0; omit < 8; ++omit) {
        Cnf3Instance seven;
        for (int i = 0; i < 8; ++i)
            if (i != omit) seven.clauses.push_back(core_clause(static_cast<std::uint8_t>(i)));
        REQUIRE(brute_force_sat(seven));
    }
}

TEST_CASE("brute-force satisfiability on hand instances") {
    REQUIRE(brute_force_sat(from_text("[1v1v1]^")));
    REQUIRE(brute_force_sat(from_text("[1v1'v1]^")));
    REQUIRE_FALSE(brute_force_sat(from_text("[1v1v1]^[1'v1'v1']^")));

    // too many distinct variables for the cap
    Cnf3Instance wide;
    for (int c = 0; c < 7; ++c) {
        Clause cl;
        for (int l = 0; l < 3; ++l) {
            std::uint32_t v = static_cast<std::uint32_t>(3 * c + l + 1);
            std::string numeral;
            for (; v > 0; v >>= 1) numeral.insert(numeral.begin(), char('0' + (v & 1)));
            cl.lits[l] = Literal{numeral, false};
        }
        wide.clauses.push_back(cl);
    }
    REQUIRE_THROWS_AS(brute_force_sat(wide), CapExceededError);
}

TEST_CASE("refusal fires exactly when all eight cores occur") {
    REQUIRE(algorithm_three(core_instance()).answer == Answer::no);
    REQUIRE(algorithm_three(core_instance()).steps == 92);

    Cnf3Instance seven = core_instance();
    seven.clauses.pop_back();
    REQUIRE(algorithm_three(seven).answer == Answer::dont_know);

    // order and padding do not matter
    Cnf3Instance shuffled;
    shuffled.clauses.push_back(from_text("[1v1v1]^").clauses[0]);
    for (int i = 7; i >= 0; --i)
        shuffled.clauses.push_back(core_clause(static_cast<std::uint8_t>(i)));
    REQUIRE(algorithm_three(shuffled).answer == Answer::no);

    REQUIRE(algorithm_three(Cnf3Instance{}).answer == Answer::dont_know);
}

TEST_CASE("instance counts by automaton match direct enumeration") {
    const CountingDfa dfa = build_instance_dfa();
    const std::vector<BigInt> counts = word_counts(dfa, 14);
    const std::uint64_t expected[] = {1, 0, 0, 0, 0, 0, 0, 0, 1, 9, 45, 171, 558, 1656, 4608};
    for (std::uint64_t n = 0; n <= 14; ++n) REQUIRE(counts[n] == expected[n]);

    for (std::uint64_t n = 8; n <= 14; ++n) {
        const auto words = enumerate_accepted(dfa, n);
        REQUIRE(BigInt(words.size()) == counts[n]);
        for (const auto& w : words) {
            const Cnf3Instance inst = parse_instance(w);  // throws if invalid
            REQUIRE(instance_size(inst) == n);
        }
    }
    REQUIRE(enumerate_accepted(dfa, 3).empty());
    REQUIRE_THROWS_AS(enumerate_accepted(dfa, 14, 100), CapExceededError);
}

TEST_CASE("avoidance automaton drops exactly the flagged clause tokens") {
    // length 10 fits one clause over 1,10,11 with no negations: the single
    // core-0 token; forbidding core 0 removes exactly that instance
    REQUIRE(word_count(build_instance_dfa(), 10) == 45);
    const CountingDfa avoid0 = build_avoiding_dfa(1);
    REQUIRE(word_count(avoid0, 10) == 44);

    for (const auto& w : enumerate_accepted(avoid0, 10)) {
        for (const auto& clause : parse_instance(w).clauses)
            REQUIRE(core_index_of(clause) != std::uint8_t(0));
    }

    // an empty forbidden set degrades to the plain language
    REQUIRE(word_count(build_avoiding_dfa(0), 12) == 558);

    REQUIRE_THROWS_AS(
        build_counting_dfa({from_text("[1v1v1]^").clauses[0]}), ValidationError);

    // core 3 carries two negation marks, so its token is 12 symbols long:
    // invisible at length 10, exactly one instance gone at length 12
    const CountingDfa avoid3 = build_counting_dfa({core_clause(3)});
    REQUIRE(word_count(avoid3, 10) == 45);
    REQUIRE(word_count(avoid3, 12) == 557);
}

TEST_CASE("all-cores automaton starts at the 92-symbol permutations") {
    const CountingDfa all = build_all_cores_dfa();
    const auto counts = word_counts(all, 92);
    for (std::uint64_t n = 0; n < 92; ++n) REQUIRE(counts[n] == 0);
    REQUIRE(counts[92] == 40320);  // 8! orderings of the eight cores

    // inclusion-exclusion over forbidden subsets agrees
    REQUIRE(contains_all_count_incl_excl(20) == 0);
    REQUIRE(contains_all_count_incl_excl(92) == 40320);
}

TEST_CASE("transfer matrix columns sum to the alphabet size") {
    const CountingDfa dfa = build_instance_dfa();
    const auto mat = transfer_matrix(dfa);
    for (std::size_t from = 0; from < dfa.state_count(); ++from) {
        std::uint32_t col = 0;
        for (std::size_t to = 0; to < dfa.state_count(); ++to) col += mat[to][from];
        REQUIRE(col == kSymCount);
    }
}

TEST_CASE("growth rates: omitting any core slows the language down") {
    const GrowthEstimate full = growth_rate(build_instance_dfa());
    REQUIRE(full.value > 1.0);
    REQUIRE(full.iterations > 0);

    // the eigenvalue matches the tail ratio of the count sequence
    const auto counts = word_counts(build_instance_dfa(), 512);
    const double ratio = to_double(BigRational(counts[512], counts[511]));
    REQUIRE(std::fabs(full.value - ratio) < 1e-2);

    for (int core = 0; core < 8; ++core) {
        const GrowthEstimate omit =
            growth_rate(build_avoiding_dfa(static_cast<std::uint8_t>(1 << core)));
        REQUIRE(omit.value > 1.0);
        REQUIRE(omit.value < full.value);
    }

    // requiring every core does not change the dominant rate
    const GrowthEstimate all = growth_rate(build_all_cores_dfa());
    REQUIRE(all.value == Catch::Approx(full.value).margin(1e-6));
}

TEST_CASE("share of instances containing all cores rises with size") {
    const FrequencySeries series = all_eight_density_series({64, 128, 256});
    REQUIRE(series.points[0].estimate == 0);  // 92 symbols are needed
    REQUIRE(series.points[1].estimate > 0);
    REQUIRE(series.points[2].estimate > series.points[1].estimate);
    REQUIRE(series.points[2].estimate < 1);

    REQUIRE_THROWS_AS(all_eight_density_series({1}), EmptySphereError);
    REQUIRE_THROWS_AS(all_eight_density_series({}), ValidationError);
}
