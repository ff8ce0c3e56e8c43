#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "gencase/domain.hpp"

namespace gencase {

/// All finite words over {0,1}, sized by length. Sphere n holds 2^n words;
/// sphere 0 is the empty word.
struct BinaryWordDomain {
    using element_type = std::string;

    std::uint64_t enumeration_cap = 1u << 22;

    std::uint64_t size_of(const std::string& w) const { return w.size(); }

    std::optional<BigInt> sphere_count(std::uint64_t n) const { return ipow(BigInt(2), n); }

    bool can_enumerate_sphere(std::uint64_t n) const {
        return n < 63 && (std::uint64_t(1) << n) <= enumeration_cap;
    }

    void for_each_in_sphere(std::uint64_t n,
                            const std::function<void(const std::string&)>& visit) const {
        if (!can_enumerate_sphere(n))
            throw EnumerationUnavailableError("binary-words sphere " + std::to_string(n) +
                                              " exceeds enumeration cap");
        std::string w(n, '0');
        const std::uint64_t total = std::uint64_t(1) << n;
        for (std::uint64_t code = 0; code < total; ++code) {
            for (std::uint64_t i = 0; i < n; ++i)
                w[i] = ((code >> (n - 1 - i)) & 1) ? '1' : '0';
            visit(w);
        }
    }

    std::string sample_sphere(std::uint64_t n, RngState& rng) const {
        std::string w(n, '0');
        for (auto& c : w) c = rng.coin() ? '1' : '0';
        return w;
    }
};

static_assert(SizedDomain<BinaryWordDomain>);

}  // namespace gencase
