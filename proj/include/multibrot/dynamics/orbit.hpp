#pragma once

// Critical orbits 0 -> c -> c^d + c -> ... in exact rational arithmetic
// (cycles detected by exact repetition, escape certified past the radius
// R = max(|c|, 2^(1/(d-1)))), in dyadic interval arithmetic for irrational
// c, and a floating-point probe for attracting cycles.

#include "multibrot/algebraic/evaluate.hpp"
#include "multibrot/dynamics/family.hpp"
#include "multibrot/exact/dyadic.hpp"
#include "multibrot/exact/json.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace multibrot::dynamics {

using exact::DyadicInterval;
using exact::Json;

enum class OrbitOutcome { escaped, cycle, converged, budget_exhausted };

inline std::string to_string(OrbitOutcome o) {
    switch (o) {
        case OrbitOutcome::escaped: return "escaped";
        case OrbitOutcome::cycle: return "cycle";
        case OrbitOutcome::converged: return "converged";
        case OrbitOutcome::budget_exhausted: return "budget_exhausted";
    }
    return "?";
}

struct OrbitRecord {
    unsigned d = 2;
    std::vector<Rational> iterates;              // exact mode
    std::vector<DyadicInterval> enclosures;      // enclosure mode
    OrbitOutcome outcome = OrbitOutcome::budget_exhausted;
    std::size_t step = 0;                        // escape step or orbit length examined
    std::size_t preperiod = 0, period = 0;       // for cycle / converged
    std::optional<double> limit;                 // converged: a point of the limit cycle
    bool certified = false;                      // escape / cycle proven exactly

    Json to_json() const {
        Json j;
        j["d"] = d;
        j["outcome"] = to_string(outcome);
        j["certified"] = certified;
        if (outcome == OrbitOutcome::escaped) j["step"] = step;
        if (outcome == OrbitOutcome::cycle || outcome == OrbitOutcome::converged) {
            j["preperiod"] = preperiod;
            j["period"] = period;
        }
        if (limit) j["limit_estimate"] = *limit;
        Json its = Json::array();
        for (const auto& z : iterates) its.push_back(exact::to_string(z));
        for (const auto& z : enclosures) its.push_back({exact::to_string(z.lo_rational()), exact::to_string(z.hi_rational())});
        j["iterates"] = its;
        return j;
    }
};

namespace detail {

/// |z| > max(|c|, 2^(1/(d-1))), decided exactly.
inline bool beyond_escape_radius(unsigned d, const Rational& z, const Rational& c) {
    Rational az = abs(z);
    return az > abs(c) && exact::pow(az, static_cast<long>(d - 1)) > 2;
}

inline Rational step(unsigned d, const Rational& z, const Rational& c) {
    return exact::pow(z, static_cast<long>(d)) + c;
}

}  // namespace detail

/// Exact critical orbit for rational c. Iterates whose size exceeds
/// `max_bits` end the run as budget_exhausted.
inline OrbitRecord critical_orbit(unsigned d, const Rational& c, std::size_t budget, std::size_t max_bits = 1u << 16) {
    require_degree(d);
    if (budget < 1) throw std::invalid_argument("critical_orbit: budget >= 1");
    OrbitRecord rec;
    rec.d = d;
    std::map<Rational, std::size_t> seen;
    Rational z = 0;
    for (std::size_t k = 0; k <= budget; ++k) {
        rec.iterates.push_back(z);
        if (auto it = seen.find(z); it != seen.end()) {
            rec.outcome = OrbitOutcome::cycle;
            rec.preperiod = it->second;
            rec.period = k - it->second;
            rec.step = k;
            rec.certified = true;
            rec.iterates.pop_back();
            return rec;
        }
        seen.emplace(z, k);
        if (detail::beyond_escape_radius(d, z, c)) {
            rec.outcome = OrbitOutcome::escaped;
            rec.step = k;
            rec.certified = true;
            return rec;
        }
        if (exact::bit_length(z.get_num()) + exact::bit_length(z.get_den()) > max_bits) break;
        if (k < budget) z = detail::step(d, z, c);
    }
    rec.outcome = OrbitOutcome::budget_exhausted;
    rec.step = rec.iterates.size();
    return rec;
}

/// Floating-point search for an attracting cycle of the critical orbit.
struct CycleProbe {
    std::size_t period;
    double multiplier;
    double point;
};

inline std::optional<CycleProbe> attracting_cycle_probe(unsigned d, double c, std::size_t budget = 200000,
                                                        std::size_t max_period = 64, double tol = 1e-13) {
    require_degree(d);
    double z = 0.0;
    const double radius = std::max(std::abs(c), std::pow(2.0, 1.0 / (d - 1)));
    std::size_t k = 0;
    const std::size_t check_every = 256;
    while (k < budget) {
        for (std::size_t j = 0; j < check_every && k < budget; ++j, ++k) {
            z = std::pow(z, static_cast<double>(d)) + c;
            if (!std::isfinite(z) || std::abs(z) > radius * (1 + 1e-12) + 1e-12) return std::nullopt;
        }
        // look for the smallest p with f^p(z) = z
        double w = z;
        for (std::size_t p = 1; p <= max_period; ++p) {
            w = std::pow(w, static_cast<double>(d)) + c;
            if (std::abs(w - z) <= tol * std::max(1.0, std::abs(z))) {
                double mult = 1.0, u = z;
                for (std::size_t i = 0; i < p; ++i) {
                    mult *= d * std::pow(u, static_cast<double>(d - 1));
                    u = std::pow(u, static_cast<double>(d)) + c;
                }
                if (std::abs(mult) < 1.0) return CycleProbe{p, mult, z};
                return std::nullopt;
            }
        }
    }
    return std::nullopt;
}

/// Enclosure-mode orbit for a real algebraic c: escape is certified, a
/// cycle can only be reported heuristically (converged).
inline OrbitRecord critical_orbit(unsigned d, const AlgebraicNumber& c, std::size_t budget, unsigned bits = 256) {
    if (c.is_rational()) return critical_orbit(d, c.rational_value(), budget);
    require_degree(d);
    if (!c.is_real()) throw std::domain_error("critical_orbit: c must be real");
    OrbitRecord rec;
    rec.d = d;
    DyadicInterval cc = algebraic::enclosure(c, bits);
    // R = max(|c|, 2^(1/(d-1))) from above
    DyadicInterval two_root = DyadicInterval::exact(2, bits).root(d - 1);
    Rational abs_c_hi = std::max(abs(cc.lo_rational()), abs(cc.hi_rational()));
    Rational radius_hi = std::max(abs_c_hi, two_root.hi_rational());
    DyadicInterval z = DyadicInterval::exact(0, bits);
    for (std::size_t k = 0; k <= budget; ++k) {
        rec.enclosures.push_back(z);
        Rational mag_lo = z.contains_zero() ? Rational(0) : std::min(abs(z.lo_rational()), abs(z.hi_rational()));
        if (mag_lo > radius_hi) {
            rec.outcome = OrbitOutcome::escaped;
            rec.step = k;
            rec.certified = true;
            return rec;
        }
        if (z.width() > 1) break;  // precision exhausted
        if (k < budget) z = z.pow(d) + cc;
    }
    rec.step = rec.enclosures.size();
    if (auto probe = attracting_cycle_probe(d, c.approx())) {
        rec.outcome = OrbitOutcome::converged;
        rec.period = probe->period;
        rec.limit = probe->point;
    } else {
        rec.outcome = OrbitOutcome::budget_exhausted;
    }
    return rec;
}

struct PcfVerdict {
    bool pcf = false;
    std::string reason;
    OrbitRecord orbit;
};

/// Decision procedure for rational c. A denominator q > 1 forces
/// v_l(f^n(0)) = d^(n-1) v_l(c) for every prime l | q, so the orbit is
/// infinite; integral c has an integral orbit that either repeats or leaves
/// the escape radius.
inline PcfVerdict is_pcf_verdict(unsigned d, const Rational& c) {
    require_degree(d);
    PcfVerdict v;
    if (c.get_den() != 1) {
        auto small = exact::small_prime_divisors(c.get_den(), 1u << 16);
        if (small.empty()) {
            v.reason = "denominator: for every prime l dividing it, the valuation at l of the n-th iterate is d^(n-1) v_l(c), unbounded below";
        } else {
            v.reason = "denominator: valuation at " + exact::to_string(small.front()) + " of the n-th iterate is d^(n-1) * (" +
                       std::to_string(exact::valuation(c, small.front())) + "), unbounded below";
        }
        v.orbit = critical_orbit(d, c, 4);
        return v;
    }
    // integers with |z| <= R are finitely many, so this terminates
    BigInt bound = abs(c.get_num()) + 3;
    std::size_t budget = static_cast<std::size_t>(2 * bound.get_ui() + 8);
    v.orbit = critical_orbit(d, c, budget);
    if (v.orbit.outcome == OrbitOutcome::cycle) {
        v.pcf = true;
        v.reason = "exact cycle";
    } else if (v.orbit.outcome == OrbitOutcome::escaped) {
        v.reason = "escaped";
    } else {
        throw std::logic_error("is_pcf: integral orbit neither cycled nor escaped");
    }
    return v;
}

inline bool is_pcf(unsigned d, const Rational& c) { return is_pcf_verdict(d, c).pcf; }

}  // namespace multibrot::dynamics
