#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gencase/bigint.hpp"
#include "gencase/domain.hpp"
#include "gencase/errors.hpp"
#include "gencase/rng.hpp"
#include "gencase/verdict.hpp"

namespace gencase {

enum class Dir : std::uint8_t { left, right };

struct TmInstruction {
    std::uint32_t next_state = 0;  // 0 is the halting state
    std::uint8_t write = 0;        // tape symbol a0 or a1
    Dir dir = Dir::right;

    bool operator==(const TmInstruction&) const = default;
};

/// A semi-infinite-tape machine over {a0,a1} as a total map
/// (state 1..n, symbol) -> (state 0..n, symbol, direction). State 1 is the
/// start state, state 0 halts, and the size of the program is n, its count of
/// non-halting states.
class TmProgram {
public:
    TmProgram(std::uint32_t n, std::vector<TmInstruction> table)
        : n_(n), table_(std::move(table)) {
        if (n_ < 1) throw ValidationError("TmProgram needs at least one non-halting state");
        if (table_.size() != 2 * static_cast<std::size_t>(n_))
            throw ValidationError("TmProgram table must have exactly 2n entries");
        for (const auto& ins : table_) {
            if (ins.next_state > n_) throw ValidationError("TmProgram target state out of range");
            if (ins.write > 1) throw ValidationError("TmProgram write symbol out of range");
        }
    }

    std::uint32_t state_count() const { return n_; }

    // state in 1..n, symbol in {0,1}
    const TmInstruction& instruction(std::uint32_t state, std::uint8_t symbol) const {
        return table_[(state - 1) * 2 + symbol];
    }

    const std::vector<TmInstruction>& table() const { return table_; }

    bool operator==(const TmProgram&) const = default;

private:
    std::uint32_t n_;
    std::vector<TmInstruction> table_;
};

enum class RunKind { halted, crashed, state_repeated, fuel_exhausted };

inline const char* to_string(RunKind k) {
    switch (k) {
        case RunKind::halted: return "Halted";
        case RunKind::crashed: return "Crashed";
        case RunKind::state_repeated: return "StateRepeated";
        default: return "FuelExhausted";
    }
}

struct RunOutcome {
    RunKind kind = RunKind::fuel_exhausted;
    std::uint64_t steps = 0;
    std::vector<std::uint32_t> visited_states;  // non-halting states entered, ascending
};

/// Runs a program from state 1 on a tape of a0's with the head at square 0,
/// until it halts, crashes, re-enters a non-halting state, or runs out of
/// fuel, whichever comes first.
///
/// A left move attempted at square 0 is not completed: it counts as one
/// consumed step, the symbol write is not applied, and the machine crashes.
inline RunOutcome simulate(const TmProgram& p, std::uint64_t fuel) {
    if (fuel < 1) throw ValidationError("simulate needs fuel >= 1");
    std::vector<bool> visited(p.state_count() + 1, false);
    std::vector<std::uint8_t> tape(1, 0);
    std::uint64_t head = 0;
    std::uint32_t state = 1;
    visited[1] = true;

    RunOutcome out;
    for (std::uint64_t step = 1; step <= fuel; ++step) {
        const TmInstruction& ins = p.instruction(state, tape[head]);
        if (ins.dir == Dir::left && head == 0) {
            out.kind = RunKind::crashed;
            out.steps = step;  // the crashing attempt is a consumed step
            break;
        }
        tape[head] = ins.write;
        head = (ins.dir == Dir::left) ? head - 1 : head + 1;
        if (head == tape.size()) tape.push_back(0);
        state = ins.next_state;
        if (state == 0) {
            out.kind = RunKind::halted;
            out.steps = step;
            break;
        }
        if (visited[state]) {
            out.kind = RunKind::state_repeated;
            out.steps = step;
            break;
        }
        visited[state] = true;
        if (step == fuel) {
            out.kind = RunKind::fuel_exhausted;
            out.steps = fuel;
        }
    }
    for (std::uint32_t s = 1; s <= p.state_count(); ++s)
        if (visited[s]) out.visited_states.push_back(s);
    return out;
}

/// Run p until the first time it repeats a state: Yes if it halts first, No if
/// it crashes first, DontKnow on a repeat. A repetition-free run makes at most
/// n+1 transitions, so the internal fuel of n+2 never binds and verdicts are
/// fuel-independent.
inline PartialVerdict algorithm_one(const TmProgram& p) {
    const std::uint64_t fuel = static_cast<std::uint64_t>(p.state_count()) + 2;
    const RunOutcome out = simulate(p, fuel);
    PartialVerdict v;
    v.fuel = fuel;
    v.steps = out.steps;
    switch (out.kind) {
        case RunKind::halted: v.answer = Answer::yes; break;
        case RunKind::crashed: v.answer = Answer::no; break;
        case RunKind::state_repeated: v.answer = Answer::dont_know; break;
        case RunKind::fuel_exhausted:
            throw Error("algorithm_one: fuel n+2 exhausted; simulator invariant broken");
    }
    return v;
}

struct TmSphereCount {
    BigInt direct;           // (4(n+1))^(2n), from the map signature
    BigInt alt_closed_form;  // (4n)^(2n): halt state excluded as a target
    bool agree = false;
};

/// Exact sphere cardinality. The direct count follows the type-level map
/// definition (4(n+1) targets per table entry); the (4n)^(2n) closed form
/// from the convention that bars transitions into the halt state is carried
/// alongside and flagged, since the two disagree for every n.
inline TmSphereCount tm_sphere_count(std::uint64_t n) {
    if (n < 1) throw ValidationError("tm_sphere_count needs n >= 1");
    TmSphereCount c;
    c.direct = ipow(BigInt(4 * (n + 1)), 2 * n);
    c.alt_closed_form = ipow(BigInt(4 * n), 2 * n);
    c.agree = (c.direct == c.alt_closed_form);
    return c;
}

namespace detail {

// Table entries are encoded 0..4(n+1)-1 as (next_state, write, dir) with
// state major, a0 before a1, L before R; entry (1,a0) is most significant.
inline TmInstruction decode_instruction(std::uint64_t code) {
    TmInstruction ins;
    ins.next_state = static_cast<std::uint32_t>(code / 4);
    ins.write = static_cast<std::uint8_t>((code % 4) / 2);
    ins.dir = (code % 2 == 0) ? Dir::left : Dir::right;
    return ins;
}

}  // namespace detail

/// Programs with n non-halting states, sized by n.
struct TmDomain {
    using element_type = TmProgram;

    std::uint64_t enumeration_cap = 10'000'000;

    std::uint64_t size_of(const TmProgram& p) const { return p.state_count(); }

    std::optional<BigInt> sphere_count(std::uint64_t n) const {
        if (n < 1) return BigInt(0);
        return tm_sphere_count(n).direct;
    }

    // log2 of (4(n+1))^(2n), cheap at radii where the exact count is enormous
    double log2_sphere_count(std::uint64_t n) const {
        if (n < 1) return -std::numeric_limits<double>::infinity();
        return 2.0 * static_cast<double>(n) * std::log2(4.0 * (static_cast<double>(n) + 1.0));
    }

    bool can_enumerate_sphere(std::uint64_t n) const {
        return n >= 1 && tm_sphere_count(n).direct <= enumeration_cap;
    }

    // Lexicographic in the table encoding.
    void for_each_in_sphere(std::uint64_t n,
                            const std::function<void(const TmProgram&)>& visit) const {
        if (n < 1) return;
        if (!can_enumerate_sphere(n))
            throw EnumerationUnavailableError(
                "TM sphere " + std::to_string(n) + " has " + tm_sphere_count(n).direct.str() +
                " programs, over the cap of " + std::to_string(enumeration_cap));
        const std::uint64_t entries = 2 * n;
        const std::uint64_t targets = 4 * (n + 1);
        std::vector<std::uint64_t> code(entries, 0);
        for (;;) {
            std::vector<TmInstruction> table(entries);
            for (std::uint64_t i = 0; i < entries; ++i)
                table[i] = detail::decode_instruction(code[i]);
            visit(TmProgram(static_cast<std::uint32_t>(n), std::move(table)));
            std::uint64_t i = entries;
            while (i > 0) {
                --i;
                if (++code[i] < targets) break;
                code[i] = 0;
                if (i == 0) return;
            }
        }
    }

    TmProgram sample_sphere(std::uint64_t n, RngState& rng) const {
        if (n < 1) throw EmptySphereError("TM sphere 0 is empty");
        const std::uint64_t targets = 4 * (n + 1);
        std::vector<TmInstruction> table(2 * n);
        for (auto& ins : table) ins = detail::decode_instruction(rng.below(targets));
        return TmProgram(static_cast<std::uint32_t>(n), std::move(table));
    }
};

static_assert(SizedDomain<TmDomain>);

/// Proportion of programs in sphere n that neither halt nor repeat a state at
/// step 1 (immediate crashes included): 1/2 + (1/2)(n-1)/(n+1) = n/(n+1).
inline BigRational first_step_survival(std::uint64_t n) {
    if (n < 1) throw ValidationError("first_step_survival needs n >= 1");
    return BigRational(1, 2) + BigRational(1, 2) * BigRational(n - 1, n + 1);
}

/// Fraction of the 2^k walks of length k on the integers that start at 0 and
/// stay nonnegative: C(k, floor(k/2)) / 2^k.
inline BigRational nonneg_walk_fraction(std::uint64_t k) {
    return BigRational(binomial(k, k / 2), ipow(BigInt(2), k));
}

/// Exhaustive check over all 2^k walks; the independent route behind
/// nonneg_walk_fraction. k is capped to keep the enumeration sane.
inline BigRational nonneg_walk_fraction_bruteforce(std::uint64_t k) {
    if (k > 30) throw CapExceededError("walk enumeration capped at k = 30");
    const std::uint64_t total = std::uint64_t(1) << k;
    std::uint64_t good = 0;
    for (std::uint64_t walk = 0; walk < total; ++walk) {
        std::int64_t position = 0;
        bool ok = true;
        for (std::uint64_t step = 0; step < k; ++step) {
            position += ((walk >> step) & 1) ? 1 : -1;
            if (position < 0) {
                ok = false;
                break;
            }
        }
        if (ok) ++good;
    }
    return BigRational(good, total);
}

// --- text format ------------------------------------------------------------
//
// First line n, then 2n lines "state symbol -> state' symbol' dir" with
// symbols a0|a1 and dir L|R, ordered by state ascending, a0 before a1.

inline std::string render_program(const TmProgram& p) {
    std::ostringstream os;
    os << p.state_count() << '\n';
    for (std::uint32_t state = 1; state <= p.state_count(); ++state) {
        for (std::uint8_t sym = 0; sym <= 1; ++sym) {
            const TmInstruction& ins = p.instruction(state, sym);
            os << state << " a" << int(sym) << " -> " << ins.next_state << " a"
               << int(ins.write) << ' ' << (ins.dir == Dir::left ? 'L' : 'R') << '\n';
        }
    }
    return os.str();
}

inline TmProgram parse_program(const std::string& text) {
    std::istringstream is(text);
    std::uint64_t n = 0;
    if (!(is >> n) || n < 1) throw ValidationError("program text: bad state count line");
    std::vector<TmInstruction> table(2 * n);
    std::vector<bool> seen(2 * n, false);
    std::uint64_t state;
    std::string sym, arrow, write_sym;
    std::uint64_t next;
    char dir;
    for (std::uint64_t line = 0; line < 2 * n; ++line) {
        if (!(is >> state >> sym >> arrow >> next >> write_sym >> dir))
            throw ValidationError("program text: truncated table");
        if (state < 1 || state > n || arrow != "->" || (sym != "a0" && sym != "a1") ||
            (write_sym != "a0" && write_sym != "a1") || (dir != 'L' && dir != 'R') || next > n)
            throw ValidationError("program text: malformed table line " + std::to_string(line + 2));
        const std::size_t idx = (state - 1) * 2 + (sym == "a1" ? 1 : 0);
        if (seen[idx]) throw ValidationError("program text: duplicate table entry");
        seen[idx] = true;
        table[idx] = TmInstruction{static_cast<std::uint32_t>(next),
                                   static_cast<std::uint8_t>(write_sym == "a1" ? 1 : 0),
                                   dir == 'L' ? Dir::left : Dir::right};
    }
    return TmProgram(static_cast<std::uint32_t>(n), std::move(table));
}

}  // namespace gencase
