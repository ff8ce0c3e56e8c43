#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gencase/bigint.hpp"
#include "gencase/errors.hpp"
#include "gencase/rng.hpp"

namespace gencase {

enum class Geometry { sphere, ball };
enum class Mode { exact, monte_carlo };

inline const char* to_string(Geometry g) { return g == Geometry::sphere ? "sphere" : "ball"; }
inline const char* to_string(Mode m) { return m == Mode::exact ? "exact" : "monte-carlo"; }

/// A countable input set stratified by a size function.
///
/// sphere_count(n) returns the exact cardinality of the sphere of radius n,
/// or nullopt when it is not known in closed form. Enumeration is offered
/// only while the count stays under the domain's cap; for_each_in_sphere
/// visits each element exactly once in a fixed order. sample_sphere draws
/// uniformly (or per the domain's attached measure) and is reproducible:
/// equal rng states yield equal elements.
template <typename D>
concept SizedDomain = requires(const D d, const typename D::element_type& e, std::uint64_t n,
                               RngState& rng,
                               const std::function<void(const typename D::element_type&)>& visit) {
    typename D::element_type;
    { d.size_of(e) } -> std::convertible_to<std::uint64_t>;
    { d.sphere_count(n) } -> std::convertible_to<std::optional<BigInt>>;
    { d.can_enumerate_sphere(n) } -> std::convertible_to<bool>;
    { d.for_each_in_sphere(n, visit) };
    { d.sample_sphere(n, rng) } -> std::convertible_to<typename D::element_type>;
};

template <SizedDomain D>
std::vector<typename D::element_type> enumerate_sphere(const D& domain, std::uint64_t n) {
    std::vector<typename D::element_type> out;
    domain.for_each_in_sphere(n, [&](const typename D::element_type& e) { out.push_back(e); });
    return out;
}

}  // namespace gencase
