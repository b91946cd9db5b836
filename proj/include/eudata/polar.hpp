#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eudata/config.hpp"
#include "eudata/errors.hpp"
#include "eudata/ideal.hpp"
#include "eudata/matrix.hpp"
#include "eudata/seeding.hpp"
#include "eudata/variety.hpp"

namespace eudata {

// The polar multiplicity sequence of a d-dimensional variety: d+1 values,
// 1-based by convention (at(1) .. at(d+1)).
struct AlphaSeries {
    std::vector<long long> values;
    std::vector<std::uint64_t> seeds_used;
    int trials = 0;

    long long at(int j) const {
        if (j < 1 || static_cast<std::size_t>(j) > values.size())
            throw InvalidArgument("series index " + std::to_string(j) + " out of range");
        return values[static_cast<std::size_t>(j - 1)];
    }
};

namespace detail {

// One draw of the critical-point count of a generic linear functional on
// the smooth part: rank-drop minors of the Jacobian augmented by the
// gradient of the functional, with the singular locus saturated away.
inline long long alpha_one_single(const VarietySpec& v, std::uint64_t form_seed,
                                  std::uint64_t count_seed) {
    const auto& vars = v.vars();
    const std::size_t n = vars.size();
    Polynomial ell =
        generic_linear_form(static_cast<int>(n), form_seed, config().coeff_bound)
            .to_polynomial(vars);

    PolyMatrix aug(v.equations().size() + 1, n, vars);
    for (std::size_t r = 0; r < v.equations().size(); ++r)
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = v.equations()[r].derivative(c);
    for (std::size_t c = 0; c < n; ++c) aug.at(v.equations().size(), c) = ell.derivative(c);

    const std::size_t size = n - static_cast<std::size_t>(v.expected_dim()) + 1;
    std::vector<Polynomial> gens = v.equations();
    for (auto& m : minors(aug, size)) gens.push_back(std::move(m));
    Ideal critical(vars, std::move(gens));

    Ideal morse = saturation(critical, singular_ideal(v));
    auto dim = krull_dimension(morse);
    if (!dim.has_value()) return 0;  // no critical points away from the singular set
    if (*dim == 0) return distinct_point_count(morse, count_seed).count;
    throw GenericityFailure("critical locus stayed positive-dimensional for this draw");
}

inline long long agree_or_fail(const std::vector<long long>& counts, const std::string& what) {
    for (std::size_t i = 1; i < counts.size(); ++i)
        if (counts[i] != counts[0])
            throw GenericityFailure(what + " disagreed across independent trials (" +
                                    std::to_string(counts[0]) + " vs " +
                                    std::to_string(counts[i]) + ")");
    return counts[0];
}

}  // namespace detail

// Number of critical points of a generic linear functional on the smooth
// part, validated by full agreement across independent trials.
inline long long alpha_one(const VarietySpec& v, std::uint64_t seed) {
    if (v.expected_dim() == 0)
        throw DimensionMismatch("critical-point count needs positive dimension");
    const int trials = config().trials;
    std::vector<long long> counts;
    for (int t = 0; t < trials; ++t)
        counts.push_back(detail::alpha_one_single(
            v, derive_seed(seed, "alpha-one-form", static_cast<std::uint64_t>(t)),
            derive_seed(seed, "alpha-one-count", static_cast<std::uint64_t>(t))));
    return detail::agree_or_fail(counts, "critical-point count");
}

// The full polar sequence: entry j comes from the (j-1)-fold generic slice,
// and the last entry is the generic plane-section count. Every entry is
// recomputed along `trials` independently seeded slice chains and accepted
// only on full agreement.
inline AlphaSeries alpha_series(const VarietySpec& v, std::uint64_t seed) {
    AlphaSeries out;
    out.trials = config().trials;

    const int d = v.expected_dim();
    if (d == 0) {
        std::uint64_t s = derive_seed(seed, "alpha-point-count", 0);
        out.seeds_used.push_back(s);
        out.values.push_back(distinct_point_count(v.ideal(), s).count);
        return out;
    }

    for (int k = 1; k <= d; ++k) {
        std::vector<long long> counts;
        for (int t = 0; t < out.trials; ++t) {
            const std::uint64_t tag = (static_cast<std::uint64_t>(k) << 16) |
                                      (static_cast<std::uint64_t>(t) << 8);
            VarietySpec w = v;
            for (int step = 0; step < k - 1; ++step)
                w = generic_slice(
                    w, derive_seed(seed, "alpha-chain", tag | static_cast<std::uint64_t>(step)));
            std::uint64_t form_seed = derive_seed(seed, "alpha-form", tag);
            out.seeds_used.push_back(form_seed);
            counts.push_back(detail::alpha_one_single(
                w, form_seed, derive_seed(seed, "alpha-count", tag)));
        }
        out.values.push_back(
            detail::agree_or_fail(counts, "polar value " + std::to_string(k)));
    }

    std::vector<long long> sections;
    for (int t = 0; t < out.trials; ++t) {
        std::uint64_t s = derive_seed(seed, "alpha-section", static_cast<std::uint64_t>(t));
        out.seeds_used.push_back(s);
        sections.push_back(plane_section_count(v, s));
    }
    out.values.push_back(detail::agree_or_fail(sections, "plane-section count"));
    return out;
}

}  // namespace eudata
