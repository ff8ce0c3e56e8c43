#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gencase/bigint.hpp"
#include "gencase/errors.hpp"
#include "gencase/frequency.hpp"
#include "gencase/verdict.hpp"

namespace gencase {

// 3-CNF instances written over a 7-symbol alphabet. A clause is
//   [ var (')? v var (')? v var (')? ]
// where a variable is a binary numeral starting with 1, the apostrophe negates
// the literal before it, and v is the disjunction sign. An instance is a
// (possibly empty) concatenation of clauses, each followed by the conjunction
// sign ^. Canonical text is ASCII (v and ^); the UTF-8 signs for "or" and
// "and" are accepted on input. Size of an instance = number of symbols.

enum class Sym : std::uint8_t {
    zero = 0,
    one = 1,
    vee = 2,
    prime = 3,
    lbracket = 4,
    rbracket = 5,
    wedge = 6,
};

inline constexpr int kSymCount = 7;
inline constexpr char kSymAscii[kSymCount] = {'0', '1', 'v', '\'', '[', ']', '^'};
inline constexpr const char* kVeeUtf8 = "\xe2\x88\xa8";    // OR sign
inline constexpr const char* kWedgeUtf8 = "\xe2\x88\xa7";  // AND sign

struct Literal {
    std::string var;  // binary numeral, leading symbol 1
    bool negated = false;

    bool operator==(const Literal&) const = default;
};

struct Clause {
    std::array<Literal, 3> lits;

    bool operator==(const Clause&) const = default;
};

struct Cnf3Instance {
    std::vector<Clause> clauses;

    bool operator==(const Cnf3Instance&) const = default;
};

inline void validate_instance(const Cnf3Instance& inst) {
    for (const auto& clause : inst.clauses)
        for (const auto& lit : clause.lits) {
            if (lit.var.empty() || lit.var[0] != '1')
                throw ValidationError("variable numeral must start with 1");
            for (char c : lit.var)
                if (c != '0' && c != '1') throw ValidationError("variable numeral must be binary");
        }
}

inline std::uint64_t instance_size(const Cnf3Instance& inst) {
    std::uint64_t n = 0;
    for (const auto& clause : inst.clauses) {
        n += 1 + 2 + 1 + 1;  // '[', two disjunction signs, ']', trailing '^'
        for (const auto& lit : clause.lits) n += lit.var.size() + (lit.negated ? 1 : 0);
    }
    return n;
}

inline std::string render_instance(const Cnf3Instance& inst, bool utf8 = false) {
    validate_instance(inst);
    const std::string vee = utf8 ? std::string(kVeeUtf8) : std::string(1, 'v');
    const std::string wedge = utf8 ? std::string(kWedgeUtf8) : std::string(1, '^');
    std::string out;
    for (const auto& clause : inst.clauses) {
        out += '[';
        for (int i = 0; i < 3; ++i) {
            out += clause.lits[i].var;
            if (clause.lits[i].negated) out += '\'';
            if (i < 2) out += vee;
        }
        out += ']';
        out += wedge;
    }
    return out;
}

// Byte stream -> symbol sequence. Whitespace is skipped; positions in errors
// index the symbol sequence (0-based).
inline std::vector<Sym> decode_symbols(const std::string& text) {
    std::vector<Sym> syms;
    std::size_t i = 0;
    while (i < text.size()) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        if (text.compare(i, 3, kVeeUtf8) == 0) {
            syms.push_back(Sym::vee);
            i += 3;
            continue;
        }
        if (text.compare(i, 3, kWedgeUtf8) == 0) {
            syms.push_back(Sym::wedge);
            i += 3;
            continue;
        }
        bool matched = false;
        for (int s = 0; s < kSymCount; ++s)
            if (static_cast<char>(c) == kSymAscii[s]) {
                syms.push_back(static_cast<Sym>(s));
                matched = true;
                break;
            }
        if (!matched)
            throw SyntaxError("unrecognized symbol byte 0x" + [](unsigned char b) {
                    const char* hex = "0123456789abcdef";
                    return std::string{hex[b >> 4], hex[b & 15]};
                }(c),
                syms.size());
        ++i;
    }
    return syms;
}

inline Cnf3Instance parse_instance(const std::string& text) {
    const std::vector<Sym> syms = decode_symbols(text);
    Cnf3Instance inst;
    std::size_t pos = 0;
    auto expect = [&](Sym want, const char* what) {
        if (pos >= syms.size())
            throw SyntaxError(std::string("expected ") + what + ", got end of input", pos);
        if (syms[pos] != want)
            throw SyntaxError(std::string("expected ") + what, pos);
        ++pos;
    };
    auto parse_literal = [&]() {
        Literal lit;
        if (pos >= syms.size() || syms[pos] != Sym::one)
            throw SyntaxError("expected variable numeral starting with 1", pos);
        while (pos < syms.size() && (syms[pos] == Sym::zero || syms[pos] == Sym::one)) {
            lit.var += (syms[pos] == Sym::one) ? '1' : '0';
            ++pos;
        }
        if (pos < syms.size() && syms[pos] == Sym::prime) {
            lit.negated = true;
            ++pos;
        }
        return lit;
    };
    while (pos < syms.size()) {
        expect(Sym::lbracket, "'['");
        Clause clause;
        clause.lits[0] = parse_literal();
        expect(Sym::vee, "disjunction sign");
        clause.lits[1] = parse_literal();
        expect(Sym::vee, "disjunction sign");
        clause.lits[2] = parse_literal();
        expect(Sym::rbracket, "']'");
        expect(Sym::wedge, "conjunction sign");
        inst.clauses.push_back(std::move(clause));
    }
    return inst;
}

// --- the eight core clauses ---------------------------------------------------
//
// All sign patterns over the fixed variables 1, 10, 11. Together they are
// unsatisfiable: any assignment to the three variables falsifies exactly one.

inline Clause core_clause(std::uint8_t idx) {
    if (idx > 7) throw ValidationError("core clause index must be 0..7");
    static const char* vars[3] = {"1", "10", "11"};
    Clause c;
    for (int i = 0; i < 3; ++i) c.lits[i] = Literal{vars[i], ((idx >> i) & 1) != 0};
    return c;
}

inline std::array<Clause, 8> core_clauses() {
    std::array<Clause, 8> out;
    for (std::uint8_t i = 0; i < 8; ++i) out[i] = core_clause(i);
    return out;
}

inline std::optional<std::uint8_t> core_index_of(const Clause& clause) {
    static const char* vars[3] = {"1", "10", "11"};
    std::uint8_t idx = 0;
    for (int i = 0; i < 3; ++i) {
        if (clause.lits[i].var != vars[i]) return std::nullopt;
        if (clause.lits[i].negated) idx |= static_cast<std::uint8_t>(1 << i);
    }
    return idx;
}

/// The instance made of all eight core clauses in index order (92 symbols).
inline Cnf3Instance core_instance() {
    Cnf3Instance inst;
    for (const auto& c : core_clauses()) inst.clauses.push_back(c);
    return inst;
}

/// Say No when every one of the eight core clauses occurs in the instance
/// (they are jointly unsatisfiable), otherwise DontKnow. One pass, so steps
/// equal the instance size.
inline PartialVerdict algorithm_three(const Cnf3Instance& inst) {
    std::uint8_t seen = 0;
    for (const auto& clause : inst.clauses)
        if (auto idx = core_index_of(clause)) seen |= static_cast<std::uint8_t>(1 << *idx);
    PartialVerdict v;
    v.steps = instance_size(inst);
    v.fuel = v.steps;
    v.answer = (seen == 0xff) ? Answer::no : Answer::dont_know;
    return v;
}

/// Exhaustive satisfiability check, for cross-validation on small instances.
inline bool brute_force_sat(const Cnf3Instance& inst, std::uint32_t var_cap = 20) {
    std::map<std::string, std::uint32_t> index;
    for (const auto& clause : inst.clauses)
        for (const auto& lit : clause.lits)
            if (!index.count(lit.var)) {
                const auto next = static_cast<std::uint32_t>(index.size());
                if (next >= var_cap)
                    throw CapExceededError("brute_force_sat: more than " +
                                           std::to_string(var_cap) + " distinct variables");
                index[lit.var] = next;
            }
    const std::uint64_t assignments = std::uint64_t(1) << index.size();
    for (std::uint64_t a = 0; a < assignments; ++a) {
        bool all = true;
        for (const auto& clause : inst.clauses) {
            bool sat = false;
            for (const auto& lit : clause.lits) {
                const bool val = (a >> index[lit.var]) & 1;
                if (val != lit.negated) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

// --- counting automata --------------------------------------------------------

struct CountingDfa {
    std::uint32_t start = 0;
    std::vector<std::array<std::uint32_t, kSymCount>> delta;
    std::vector<bool> accepting;

    std::size_t state_count() const { return delta.size(); }
};

enum class DfaKind {
    plain,        // all instances
    avoid,        // instances with no clause among a forbidden core subset
    require_all,  // instances containing every one of the eight cores
};

namespace detail {

// Grammar positions for the instance language.
enum : std::uint8_t {
    g_start = 0,   // between clauses; the only accepting position
    g_open,        // after '['
    g_num1,        // inside first numeral
    g_prime1,      // after first literal's apostrophe
    g_or1,         // after first disjunction sign
    g_num2,        // inside second numeral
    g_prime2,      // second apostrophe
    g_or2,         // after second disjunction sign
    g_num3,        // third numeral
    g_prime3,      // third apostrophe
    g_close,       // after ']'
    g_dead,
};

struct TrackState {
    std::uint8_t grammar = g_start;
    bool alive = false;     // current clause still matches a core prefix
    std::uint8_t len = 0;   // digits matched against the current target numeral
    std::uint8_t neg = 0;   // negation bits collected in this clause
    std::uint8_t mask = 0;  // cores completed so far (require_all only)

    std::uint32_t encode() const {
        return grammar | (std::uint32_t(alive) << 4) | (std::uint32_t(len) << 5) |
               (std::uint32_t(neg) << 7) | (std::uint32_t(mask) << 10);
    }
    bool operator<(const TrackState& o) const { return encode() < o.encode(); }
};

inline const char* core_target(std::uint8_t grammar) {
    switch (grammar) {
        case g_open:
        case g_num1:
        case g_prime1: return "1";
        case g_or1:
        case g_num2:
        case g_prime2: return "10";
        default: return "11";
    }
}

}  // namespace detail

/// Build an explicit automaton for the instance language, optionally tracking
/// occurrences of the eight core clauses. States are discovered breadth-first.
inline CountingDfa build_threesat_dfa(DfaKind kind, std::uint8_t forbidden_mask = 0) {
    using namespace detail;
    if (kind == DfaKind::avoid && forbidden_mask == 0) kind = DfaKind::plain;
    const bool track = kind != DfaKind::plain;
    const bool keep_mask = kind == DfaKind::require_all;

    auto canonical = [&](TrackState s) {
        if (s.grammar == g_dead) return TrackState{g_dead, false, 0, 0, 0};
        if (!track || !s.alive) {
            s.alive = false;
            s.len = 0;
            s.neg = 0;
        }
        if (!keep_mask) s.mask = 0;
        return s;
    };

    auto step = [&](TrackState s, Sym a) -> TrackState {
        if (s.grammar == g_dead) return s;
        const std::string target = core_target(s.grammar);
        auto fail_match = [&] { s.alive = false; };
        auto digit = [&](char d) {
            if (s.alive) {
                if (s.len < target.size() && target[s.len] == d)
                    ++s.len;
                else
                    fail_match();
            }
        };
        auto end_numeral = [&] {
            if (s.alive && s.len != target.size()) fail_match();
        };
        auto next_literal = [&] { s.len = 0; };

        switch (s.grammar) {
            case g_start:
                if (a == Sym::lbracket) {
                    s.grammar = g_open;
                    s.alive = track;
                    s.len = 0;
                    s.neg = 0;
                } else
                    s.grammar = g_dead;
                break;
            case g_open:
                if (a == Sym::one) {
                    s.grammar = g_num1;
                    digit('1');
                } else
                    s.grammar = g_dead;
                break;
            case g_num1:
                if (a == Sym::zero || a == Sym::one)
                    digit(a == Sym::one ? '1' : '0');
                else if (a == Sym::prime) {
                    end_numeral();
                    if (s.alive) s.neg |= 1;
                    s.grammar = g_prime1;
                } else if (a == Sym::vee) {
                    end_numeral();
                    next_literal();
                    s.grammar = g_or1;
                } else
                    s.grammar = g_dead;
                break;
            case g_prime1:
                if (a == Sym::vee) {
                    next_literal();
                    s.grammar = g_or1;
                } else
                    s.grammar = g_dead;
                break;
            case g_or1:
                if (a == Sym::one) {
                    s.grammar = g_num2;
                    digit('1');
                } else
                    s.grammar = g_dead;
                break;
            case g_num2:
                if (a == Sym::zero || a == Sym::one)
                    digit(a == Sym::one ? '1' : '0');
                else if (a == Sym::prime) {
                    end_numeral();
                    if (s.alive) s.neg |= 2;
                    s.grammar = g_prime2;
                } else if (a == Sym::vee) {
                    end_numeral();
                    next_literal();
                    s.grammar = g_or2;
                } else
                    s.grammar = g_dead;
                break;
            case g_prime2:
                if (a == Sym::vee) {
                    next_literal();
                    s.grammar = g_or2;
                } else
                    s.grammar = g_dead;
                break;
            case g_or2:
                if (a == Sym::one) {
                    s.grammar = g_num3;
                    digit('1');
                } else
                    s.grammar = g_dead;
                break;
            case g_num3:
                if (a == Sym::zero || a == Sym::one)
                    digit(a == Sym::one ? '1' : '0');
                else if (a == Sym::prime) {
                    end_numeral();
                    if (s.alive) s.neg |= 4;
                    s.grammar = g_prime3;
                } else if (a == Sym::rbracket) {
                    end_numeral();
                    s.grammar = g_close;
                } else
                    s.grammar = g_dead;
                break;
            case g_prime3:
                if (a == Sym::rbracket)
                    s.grammar = g_close;
                else
                    s.grammar = g_dead;
                break;
            case g_close:
                if (a == Sym::wedge) {
                    if (s.alive) {
                        const std::uint8_t idx = s.neg;
                        if (kind == DfaKind::avoid && ((forbidden_mask >> idx) & 1)) {
                            s.grammar = g_dead;
                            break;
                        }
                        if (keep_mask) s.mask |= static_cast<std::uint8_t>(1 << idx);
                    }
                    s.grammar = g_start;
                    s.alive = false;
                    s.len = 0;
                    s.neg = 0;
                } else
                    s.grammar = g_dead;
                break;
            default: s.grammar = g_dead;
        }
        return canonical(s);
    };

    CountingDfa dfa;
    std::map<std::uint32_t, std::uint32_t> ids;
    std::vector<TrackState> states;
    auto intern = [&](const TrackState& s) {
        const auto [it, fresh] = ids.try_emplace(s.encode(), states.size());
        if (fresh) {
            states.push_back(s);
            dfa.delta.emplace_back();
            dfa.accepting.push_back(false);
        }
        return it->second;
    };
    const TrackState init = canonical(TrackState{});
    dfa.start = intern(init);
    for (std::uint32_t cur = 0; cur < states.size(); ++cur) {
        const TrackState s = states[cur];
        dfa.accepting[cur] =
            s.grammar == detail::g_start && (!keep_mask || s.mask == 0xff);
        for (int a = 0; a < kSymCount; ++a)
            dfa.delta[cur][a] = intern(step(s, static_cast<Sym>(a)));
    }
    return dfa;
}

inline CountingDfa build_instance_dfa() { return build_threesat_dfa(DfaKind::plain); }
inline CountingDfa build_avoiding_dfa(std::uint8_t forbidden_mask) {
    return build_threesat_dfa(DfaKind::avoid, forbidden_mask);
}
inline CountingDfa build_all_cores_dfa() { return build_threesat_dfa(DfaKind::require_all); }

/// Recognizer for instances with no clause token from `required_absent`,
/// which must be drawn from the eight core clauses.
inline CountingDfa build_counting_dfa(const std::vector<Clause>& required_absent) {
    std::uint8_t mask = 0;
    for (const auto& clause : required_absent) {
        const auto idx = core_index_of(clause);
        if (!idx)
            throw ValidationError("build_counting_dfa: clause '" +
                                  render_instance(Cnf3Instance{{clause}}) +
                                  "' is not one of the eight core clauses");
        mask |= static_cast<std::uint8_t>(1 << *idx);
    }
    return build_threesat_dfa(DfaKind::avoid, mask);
}

/// Symbol-summed transition count matrix: entry (to, from) = number of
/// alphabet symbols moving from -> to.
inline std::vector<std::vector<std::uint32_t>> transfer_matrix(const CountingDfa& dfa) {
    const std::size_t m = dfa.state_count();
    std::vector<std::vector<std::uint32_t>> mat(m, std::vector<std::uint32_t>(m, 0));
    for (std::size_t s = 0; s < m; ++s)
        for (int a = 0; a < kSymCount; ++a) ++mat[dfa.delta[s][a]][s];
    return mat;
}

/// Accepted-word counts for every length 0..n_max, by vector propagation.
inline std::vector<BigInt> word_counts(const CountingDfa& dfa, std::uint64_t n_max) {
    std::vector<BigInt> v(dfa.state_count(), 0);
    v[dfa.start] = 1;
    std::vector<BigInt> out;
    out.reserve(n_max + 1);
    auto accepted_sum = [&] {
        BigInt s = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (dfa.accepting[i]) s += v[i];
        return s;
    };
    out.push_back(accepted_sum());
    std::vector<BigInt> next(dfa.state_count());
    for (std::uint64_t t = 1; t <= n_max; ++t) {
        for (auto& x : next) x = 0;
        for (std::size_t s = 0; s < v.size(); ++s) {
            if (v[s] == 0) continue;
            for (int a = 0; a < kSymCount; ++a) next[dfa.delta[s][a]] += v[s];
        }
        v.swap(next);
        out.push_back(accepted_sum());
    }
    return out;
}

inline BigInt word_count(const CountingDfa& dfa, std::uint64_t n) {
    return word_counts(dfa, n).back();
}

/// Count of length-n instances containing all eight cores, by
/// inclusion-exclusion over which cores are forbidden. Cross-checks the
/// mask-tracking automaton.
inline BigInt contains_all_count_incl_excl(std::uint64_t n) {
    BigInt total = 0;
    for (std::uint32_t subset = 0; subset < 256; ++subset) {
        const BigInt c = word_count(build_avoiding_dfa(static_cast<std::uint8_t>(subset)), n);
        if (std::popcount(subset) % 2 == 0)
            total += c;
        else
            total -= c;
    }
    return total;
}

/// All accepted words of length exactly n, for small n (oracle use).
inline std::vector<std::string> enumerate_accepted(const CountingDfa& dfa, std::uint64_t n,
                                                   std::uint64_t cap = 2'000'000) {
    // ok[r][s]: an accepting state is reachable from s in exactly r steps
    std::vector<std::vector<char>> ok(n + 1, std::vector<char>(dfa.state_count(), 0));
    for (std::size_t s = 0; s < dfa.state_count(); ++s) ok[0][s] = dfa.accepting[s];
    for (std::uint64_t r = 1; r <= n; ++r)
        for (std::size_t s = 0; s < dfa.state_count(); ++s)
            for (int a = 0; a < kSymCount && !ok[r][s]; ++a)
                if (ok[r - 1][dfa.delta[s][a]]) ok[r][s] = 1;

    std::vector<std::string> out;
    std::string word;
    std::function<void(std::uint32_t)> dfs = [&](std::uint32_t s) {
        const std::uint64_t remaining = n - word.size();
        if (!ok[remaining][s]) return;
        if (remaining == 0) {
            if (out.size() >= cap) throw CapExceededError("enumerate_accepted cap exceeded");
            out.push_back(word);
            return;
        }
        for (int a = 0; a < kSymCount; ++a) {
            word.push_back(kSymAscii[a]);
            dfs(dfa.delta[s][a]);
            word.pop_back();
        }
    };
    dfs(dfa.start);
    return out;
}

struct GrowthEstimate {
    double value = 0.0;
    std::uint64_t iterations = 0;
};

/// Dominant growth rate of the accepted-count sequence: the top eigenvalue of
/// the transition count matrix over useful states. Power iteration on the
/// shifted matrix keeps the iteration aperiodic.
inline GrowthEstimate growth_rate(const CountingDfa& dfa, std::uint64_t max_iter = 200'000,
                                  double tol = 1e-10) {
    const std::size_t m = dfa.state_count();
    // forward reachability from start
    std::vector<char> fwd(m, 0);
    std::vector<std::uint32_t> stack{dfa.start};
    fwd[dfa.start] = 1;
    while (!stack.empty()) {
        const auto s = stack.back();
        stack.pop_back();
        for (int a = 0; a < kSymCount; ++a)
            if (!fwd[dfa.delta[s][a]]) {
                fwd[dfa.delta[s][a]] = 1;
                stack.push_back(dfa.delta[s][a]);
            }
    }
    // backward reachability to an accepting state
    std::vector<std::vector<std::uint32_t>> rev(m);
    for (std::size_t s = 0; s < m; ++s)
        for (int a = 0; a < kSymCount; ++a) rev[dfa.delta[s][a]].push_back(s);
    std::vector<char> bwd(m, 0);
    for (std::size_t s = 0; s < m; ++s)
        if (dfa.accepting[s] && !bwd[s]) {
            bwd[s] = 1;
            stack.push_back(static_cast<std::uint32_t>(s));
        }
    while (!stack.empty()) {
        const auto s = stack.back();
        stack.pop_back();
        for (auto p : rev[s])
            if (!bwd[p]) {
                bwd[p] = 1;
                stack.push_back(p);
            }
    }
    std::vector<std::uint32_t> useful;
    std::vector<std::int64_t> index(m, -1);
    for (std::size_t s = 0; s < m; ++s)
        if (fwd[s] && bwd[s]) {
            index[s] = static_cast<std::int64_t>(useful.size());
            useful.push_back(static_cast<std::uint32_t>(s));
        }
    if (useful.empty()) return GrowthEstimate{0.0, 0};

    // multi-edge counts between useful states
    const std::size_t u = useful.size();
    std::vector<std::vector<std::pair<std::uint32_t, double>>> edges(u);
    for (std::size_t i = 0; i < u; ++i) {
        std::map<std::uint32_t, double> row;
        for (int a = 0; a < kSymCount; ++a) {
            const auto t = index[dfa.delta[useful[i]][a]];
            if (t >= 0) row[static_cast<std::uint32_t>(t)] += 1.0;
        }
        edges[i].assign(row.begin(), row.end());
    }

    std::vector<double> v(u, 1.0), w(u);
    double lambda_prev = -1.0, lambda = 0.0;
    for (std::uint64_t it = 0; it < max_iter; ++it) {
        // w = (A + I) v
        for (std::size_t i = 0; i < u; ++i) w[i] = v[i];
        for (std::size_t i = 0; i < u; ++i)
            for (const auto& [t, c] : edges[i]) w[t] += c * v[i];
        double dot_vw = 0.0, dot_vv = 0.0, norm = 0.0;
        for (std::size_t i = 0; i < u; ++i) {
            dot_vw += v[i] * w[i];
            dot_vv += v[i] * v[i];
            norm += w[i] * w[i];
        }
        lambda = dot_vw / dot_vv - 1.0;
        norm = std::sqrt(norm);
        if (norm == 0.0) return GrowthEstimate{0.0, it + 1};  // nilpotent: counts die out
        for (std::size_t i = 0; i < u; ++i) v[i] = w[i] / norm;
        if (it > 0 && std::abs(lambda - lambda_prev) < tol) return GrowthEstimate{lambda, it + 1};
        lambda_prev = lambda;
    }
    throw NonConvergenceError("growth_rate power iteration did not settle", lambda, lambda_prev);
}

/// Exact share of length-n instances that contain all eight core clauses,
/// as a frequency series over the given sizes.
inline FrequencySeries all_eight_density_series(const std::vector<std::uint64_t>& sizes) {
    if (sizes.empty()) throw ValidationError("all_eight_density_series needs sizes");
    std::uint64_t n_max = 0;
    for (auto n : sizes) n_max = std::max(n_max, n);
    const auto total = word_counts(build_instance_dfa(), n_max);
    const auto with_all = word_counts(build_all_cores_dfa(), n_max);
    FrequencySeries series;
    series.geometry = Geometry::sphere;
    series.predicate_id = "contains-all-eight-cores";
    for (auto n : sizes) {
        if (total[n] == 0)
            throw EmptySphereError("no instances of size " + std::to_string(n));
        FrequencyPoint p;
        p.n = n;
        p.mode = Mode::exact;
        p.hits = with_all[n];
        p.trials = total[n];
        p.estimate = BigRational(with_all[n], total[n]);
        p.ci_half_width = 0.0;
        series.points.push_back(std::move(p));
    }
    return series;
}

}  // namespace gencase
