#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>

#include "gencase/domain.hpp"
#include "gencase/errors.hpp"

namespace gencase {

/// Per-radius probability distributions {mu_n} on spheres or balls.
template <typename Element>
struct Ensemble {
    Geometry geometry = Geometry::sphere;
    bool normalized = true;
    // mu_n(x): weight of x under the distribution at radius n.
    std::function<double(std::uint64_t, const Element&)> weight;
};

/// Conditions an atomic measure mu on each sphere/ball: per-n weights are mu
/// restricted to the stratum and renormalized. Needs enumerable strata; a
/// stratum of zero total mass is an error.
template <SizedDomain D, typename Mu>
Ensemble<typename D::element_type> conditional_ensemble(Mu mu, const D& domain,
                                                        Geometry geometry) {
    using Element = typename D::element_type;
    auto masses = std::make_shared<std::map<std::uint64_t, double>>();
    auto mass_at = [mu, &domain, geometry, masses](std::uint64_t n) {
        auto it = masses->find(n);
        if (it != masses->end()) return it->second;
        double total = 0.0;
        const std::uint64_t lo = (geometry == Geometry::sphere) ? n : 0;
        for (std::uint64_t m = lo; m <= n; ++m) {
            auto count = domain.sphere_count(m);
            if (count && *count == 0) continue;
            domain.for_each_in_sphere(m, [&](const Element& e) {
                const double w = mu(e);
                if (w < 0.0) throw ValidationError("conditional_ensemble: negative weight");
                total += w;
            });
        }
        if (total <= 0.0)
            throw ZeroMassError("conditional_ensemble: zero total mass at n=" + std::to_string(n));
        (*masses)[n] = total;
        return total;
    };
    Ensemble<Element> ensemble;
    ensemble.geometry = geometry;
    ensemble.normalized = true;
    ensemble.weight = [mu, mass_at](std::uint64_t n, const Element& e) {
        return mu(e) / mass_at(n);
    };
    return ensemble;
}

}  // namespace gencase
