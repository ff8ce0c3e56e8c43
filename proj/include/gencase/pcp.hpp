#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gencase/bigint.hpp"
#include "gencase/domain.hpp"
#include "gencase/errors.hpp"
#include "gencase/rng.hpp"
#include "gencase/verdict.hpp"

namespace gencase {

/// A Post Correspondence instance: an ordered list of pairs of nonempty words
/// over the digits 0..k-1. An instance lies in sphere n when it has exactly n
/// pairs, each word of length between 1 and n.
struct PcpInstance {
    std::uint32_t k = 2;
    std::vector<std::pair<std::string, std::string>> pairs;

    bool operator==(const PcpInstance&) const = default;
};

inline void validate_pcp(const PcpInstance& inst) {
    if (inst.k < 2 || inst.k > 10)
        throw ValidationError("PCP alphabet size must be in [2,10] (digit-rendered words)");
    if (inst.pairs.empty()) throw ValidationError("PCP instance needs at least one pair");
    for (const auto& [u, v] : inst.pairs) {
        for (const std::string* w : {&u, &v}) {
            if (w->empty()) throw ValidationError("PCP words must be nonempty");
            for (char c : *w)
                if (c < '0' || c >= static_cast<char>('0' + inst.k))
                    throw ValidationError("PCP word symbol outside alphabet");
        }
    }
}

inline bool is_prefix(const std::string& a, const std::string& b) {
    return a.size() <= b.size() && b.compare(0, a.size(), a) == 0;
}

inline bool has_prefix_pair(const PcpInstance& inst) {
    for (const auto& [u, v] : inst.pairs)
        if (is_prefix(u, v) || is_prefix(v, u)) return true;
    return false;
}

/// Say No when no pair has one word a prefix of the other (no solution can
/// start), otherwise DontKnow. Steps count character comparisons; the fuel on
/// record is the total input length, which the scan never exceeds.
inline PartialVerdict algorithm_two(const PcpInstance& inst) {
    std::uint64_t total_len = 0;
    for (const auto& [u, v] : inst.pairs) total_len += u.size() + v.size();
    std::uint64_t steps = 0;
    bool found = false;
    for (const auto& [u, v] : inst.pairs) {
        const std::size_t m = std::min(u.size(), v.size());
        std::size_t i = 0;
        while (i < m && u[i] == v[i]) {
            ++steps;
            ++i;
        }
        if (i < m) ++steps;  // the mismatching comparison
        if (i == m) {
            found = true;  // shorter word is a prefix of the longer
            break;
        }
    }
    PartialVerdict v;
    v.fuel = total_len;
    v.steps = steps;
    v.answer = found ? Answer::dont_know : Answer::no;
    return v;
}

enum class SearchStatus { found, no_solution_within, exhausted };

inline const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::no_solution_within: return "no-solution-within";
        default: return "exhausted";
    }
}

struct SearchResult {
    SearchStatus status = SearchStatus::no_solution_within;
    std::vector<std::uint32_t> witness;  // 1-based pair indices, shortest first
    std::uint64_t states_explored = 0;
};

/// Breadth-first search over prefix-difference states for an index sequence
/// i1..im (m <= max_len) with u_{i1}...u_{im} = v_{i1}...v_{im}. Exceeding the
/// state cap reports "exhausted", which is distinct from "no solution within
/// max_len".
inline SearchResult search_solution(const PcpInstance& inst, std::uint32_t max_len,
                                    std::uint64_t state_cap = 1'000'000) {
    if (max_len < 1) throw ValidationError("search_solution needs max_len >= 1");
    validate_pcp(inst);

    // State: the outstanding suffix and which side is ahead (true: u-side
    // concatenation is longer). Parent links reconstruct the witness.
    struct Node {
        std::string remainder;
        bool u_ahead;
        std::uint32_t depth;
        std::int64_t parent;
        std::uint32_t via;  // 1-based pair index
    };
    std::vector<Node> nodes;
    std::set<std::pair<std::string, bool>> seen;
    std::deque<std::size_t> queue;
    SearchResult result;

    auto emit = [&](std::int64_t parent, std::uint32_t via) {
        std::vector<std::uint32_t> witness{via};
        while (parent >= 0) {
            witness.push_back(nodes[parent].via);
            parent = nodes[parent].parent;
        }
        std::reverse(witness.begin(), witness.end());
        result.status = SearchStatus::found;
        result.witness = std::move(witness);
    };

    auto push = [&](std::string remainder, bool u_ahead, std::uint32_t depth, std::int64_t parent,
                    std::uint32_t via) {
        if (!seen.insert({remainder, u_ahead}).second) return;
        nodes.push_back(Node{std::move(remainder), u_ahead, depth, parent, via});
        queue.push_back(nodes.size() - 1);
    };

    // Depth-1 starts.
    for (std::uint32_t i = 0; i < inst.pairs.size(); ++i) {
        const auto& [u, v] = inst.pairs[i];
        if (u == v) {
            emit(-1, i + 1);
            result.states_explored = nodes.size();
            return result;
        }
        if (is_prefix(u, v))
            push(v.substr(u.size()), false, 1, -1, i + 1);
        else if (is_prefix(v, u))
            push(u.substr(v.size()), true, 1, -1, i + 1);
    }

    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        const Node node = nodes[cur];  // copy: push may reallocate nodes
        if (node.depth >= max_len) continue;
        for (std::uint32_t i = 0; i < inst.pairs.size(); ++i) {
            const auto& [u, v] = inst.pairs[i];
            // ahead-side remainder must stay matched against the lagging side
            const std::string& lagging = node.u_ahead ? v : u;
            const std::string& leading = node.u_ahead ? u : v;
            // new lagging text = remainder + nothing; compare remainder with lagging word
            std::string rem = node.remainder;
            // The lagging side appends `lagging`; the leading side appends `leading`.
            // Equivalent: match lagging against rem first.
            std::string combined_lag = lagging;
            std::string combined_lead = rem + leading;
            // one of them must be a prefix of the other
            if (is_prefix(combined_lag, combined_lead)) {
                std::string next_rem = combined_lead.substr(combined_lag.size());
                if (next_rem.empty()) {
                    emit(static_cast<std::int64_t>(cur), i + 1);
                    result.states_explored = nodes.size();
                    return result;
                }
                push(std::move(next_rem), node.u_ahead, node.depth + 1,
                     static_cast<std::int64_t>(cur), i + 1);
            } else if (is_prefix(combined_lead, combined_lag)) {
                std::string next_rem = combined_lag.substr(combined_lead.size());
                // the previously lagging side is now ahead
                push(std::move(next_rem), !node.u_ahead, node.depth + 1,
                     static_cast<std::int64_t>(cur), i + 1);
            }
            if (nodes.size() > state_cap) {
                result.status = SearchStatus::exhausted;
                result.states_explored = nodes.size();
                return result;
            }
        }
    }
    result.status = SearchStatus::no_solution_within;
    result.states_explored = nodes.size();
    return result;
}

struct PcpSphereCount {
    BigInt direct;           // (k + k^2 + ... + k^n)^(2n): nonempty words only
    BigInt alt_closed_form;  // (1 + k + ... + k^n)^(2n): counts empty words too
};

inline PcpSphereCount pcp_sphere_count(std::uint64_t n, std::uint32_t k) {
    if (n < 1) throw ValidationError("pcp_sphere_count needs n >= 1");
    if (k < 2) throw ValidationError("pcp_sphere_count needs k >= 2");
    PcpSphereCount c;
    c.direct = ipow(geometric_sum_from_one(BigInt(k), n), 2 * n);
    c.alt_closed_form = ipow(geometric_sum_from_zero(BigInt(k), n), 2 * n);
    return c;
}

/// Upper bound 2n(n+1)/(1+k+...+k^n) on the sphere-n frequency of instances
/// with some prefix pair; vacuous (> 1) for small n.
inline BigRational prefix_pair_bound(std::uint64_t n, std::uint32_t k) {
    if (n < 1) throw ValidationError("prefix_pair_bound needs n >= 1");
    return BigRational(BigInt(2) * n * (n + 1), geometric_sum_from_zero(BigInt(k), n));
}

// Number of ordered word pairs (u,v), both nonempty of length <= m, where one
// is a prefix of the other.
inline BigInt prefix_word_pair_count(std::uint64_t m, std::uint32_t k) {
    // #{(u,v): u prefix of v} = sum over |u| of k^|u| * (1 + k + ... + k^(m-|u|))
    BigInt one_way = 0;
    for (std::uint64_t lu = 1; lu <= m; ++lu)
        one_way += ipow(BigInt(k), lu) * geometric_sum_from_zero(BigInt(k), m - lu);
    // both directions, minus the diagonal counted twice
    return 2 * one_way - geometric_sum_from_one(BigInt(k), m);
}

/// Exact count of sphere-n instances with no prefix pair: pairs are chosen
/// independently, so the count is (#no-prefix word pairs)^n.
inline BigInt no_prefix_instance_count(std::uint64_t n, std::uint32_t k) {
    const BigInt words = geometric_sum_from_one(BigInt(k), n);
    const BigInt pair_total = words * words;
    return ipow(pair_total - prefix_word_pair_count(n, k), n);
}

/// Sequences of n pairs of nonempty words of length <= n, sized by n.
struct PcpDomain {
    using element_type = PcpInstance;

    std::uint32_t k = 2;
    std::uint64_t enumeration_cap = 10'000'000;

    std::uint64_t size_of(const PcpInstance& inst) const { return inst.pairs.size(); }

    std::optional<BigInt> sphere_count(std::uint64_t n) const {
        if (n < 1) return BigInt(0);
        return pcp_sphere_count(n, k).direct;
    }

    bool can_enumerate_sphere(std::uint64_t n) const {
        return n >= 1 && pcp_sphere_count(n, k).direct <= enumeration_cap;
    }

    void for_each_in_sphere(std::uint64_t n,
                            const std::function<void(const PcpInstance&)>& visit) const {
        if (n < 1) return;
        if (!can_enumerate_sphere(n))
            throw EnumerationUnavailableError(
                "PCP sphere " + std::to_string(n) + " has " +
                pcp_sphere_count(n, k).direct.str() + " instances, over the cap of " +
                std::to_string(enumeration_cap));
        // Words of length 1..n in lexicographic (length-major) order.
        std::vector<std::string> words;
        std::string w;
        std::function<void(std::uint64_t)> gen = [&](std::uint64_t len) {
            if (w.size() == len) {
                words.push_back(w);
                return;
            }
            for (std::uint32_t c = 0; c < k; ++c) {
                w.push_back(static_cast<char>('0' + c));
                gen(len);
                w.pop_back();
            }
        };
        for (std::uint64_t len = 1; len <= n; ++len) gen(len);

        const std::uint64_t word_count = words.size();
        std::vector<std::uint64_t> choice(2 * n, 0);  // u1,v1,u2,v2,...
        for (;;) {
            PcpInstance inst;
            inst.k = k;
            for (std::uint64_t i = 0; i < n; ++i)
                inst.pairs.emplace_back(words[choice[2 * i]], words[choice[2 * i + 1]]);
            visit(inst);
            std::uint64_t i = 2 * n;
            while (i > 0) {
                --i;
                if (++choice[i] < word_count) break;
                choice[i] = 0;
                if (i == 0) return;
            }
        }
    }

    // Uniform over the sphere: word length drawn with probability
    // k^len / (k + ... + k^n), then uniform among the k^len words.
    PcpInstance sample_sphere(std::uint64_t n, RngState& rng) const {
        if (n < 1) throw EmptySphereError("PCP sphere 0 is empty");
        const BigInt total_big = geometric_sum_from_one(BigInt(k), n);
        if (total_big > BigInt(std::uint64_t(1) << 62))
            throw SamplerUnavailableError("PCP word universe too large for uniform sampling");
        const std::uint64_t total = total_big.convert_to<std::uint64_t>();
        auto draw_word = [&]() {
            std::uint64_t idx = rng.below(total);
            std::uint64_t len = 1;
            std::uint64_t block = 1;
            for (;; ++len) {
                block = 1;
                for (std::uint64_t i = 0; i < len; ++i) block *= k;
                if (idx < block) break;
                idx -= block;
            }
            std::string word(len, '0');
            for (std::uint64_t i = 0; i < len; ++i) {
                word[len - 1 - i] = static_cast<char>('0' + idx % k);
                idx /= k;
            }
            return word;
        };
        PcpInstance inst;
        inst.k = k;
        for (std::uint64_t i = 0; i < n; ++i) {
            std::string u = draw_word();
            std::string v = draw_word();
            inst.pairs.emplace_back(std::move(u), std::move(v));
        }
        return inst;
    }
};

static_assert(SizedDomain<PcpDomain>);

// --- text format ------------------------------------------------------------
//
// One instance per line: "k; u1,v1; u2,v2; ..." with words over digits 0..k-1.

inline std::string render_pcp(const PcpInstance& inst) {
    std::ostringstream os;
    os << inst.k;
    for (const auto& [u, v] : inst.pairs) os << "; " << u << ',' << v;
    return os.str();
}

inline PcpInstance parse_pcp(const std::string& line) {
    PcpInstance inst;
    std::istringstream is(line);
    std::string field;
    if (!std::getline(is, field, ';')) throw ValidationError("pcp text: missing alphabet size");
    try {
        inst.k = static_cast<std::uint32_t>(std::stoul(field));
    } catch (const std::exception&) {
        throw ValidationError("pcp text: bad alphabet size '" + field + "'");
    }
    while (std::getline(is, field, ';')) {
        const auto comma = field.find(',');
        if (comma == std::string::npos) throw ValidationError("pcp text: pair missing comma");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        inst.pairs.emplace_back(trim(field.substr(0, comma)), trim(field.substr(comma + 1)));
    }
    validate_pcp(inst);
    return inst;
}

}  // namespace gencase
