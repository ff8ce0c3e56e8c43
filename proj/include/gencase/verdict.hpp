#pragma once

#include <cstdint>
#include <string>

namespace gencase {

enum class Answer { yes, no, dont_know };

inline const char* to_string(Answer a) {
    switch (a) {
        case Answer::yes: return "Yes";
        case Answer::no: return "No";
        default: return "DontKnow";
    }
}

/// Outcome of a fuel-bounded partial algorithm. A decided answer (Yes/No)
/// always costs at most the fuel that was in force; DontKnow stands in for
/// the "loop forever" branch.
struct PartialVerdict {
    Answer answer = Answer::dont_know;
    std::uint64_t steps = 0;
    std::uint64_t fuel = 0;

    bool decided() const { return answer != Answer::dont_know; }
};

}  // namespace gencase
