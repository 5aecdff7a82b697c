#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <thread>
#include <unordered_map>
#include <vector>

#include "singlab/bounds.hpp"
#include "singlab/graded.hpp"
#include "singlab/groebner.hpp"
#include "singlab/random.hpp"

namespace singlab {

enum class CensusMode { sample, exhaustive };

struct CensusConfig {
    std::size_t n = 3;
    std::size_t b = 1;
    unsigned l = 3;
    std::uint64_t q = 2;
    CensusMode mode = CensusMode::sample;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::uint64_t cap = kDefaultEnumerationCap;
    unsigned threads = 1;
    bool timing = true;  // false zeroes elapsed_ms for byte-stable output
};

struct CensusRecord {
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
    std::uint64_t q = 0;
    std::size_t n = 0, b = 0;
    unsigned l = 0;
    int sing_dim = -1;
    std::int64_t sing_deg = 0;
    double elapsed_ms = 0;
};

struct CensusSummary {
    std::uint64_t trials = 0;
    std::map<int, std::uint64_t> histogram;  // sing_dim -> count
    std::uint64_t count_ge_b = 0;
    Rational prob_ge_b;
};

struct CensusResult {
    CensusSummary summary;
    std::vector<CensusRecord> records;  // ordered by trial index
};

namespace detail {

/// Runs body(i) for i in [0, count) on `threads` workers in contiguous chunks.
template <class Body>
void parallel_for(std::uint64_t count, unsigned threads, Body body) {
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(count, 256))));
    if (threads <= 1) {
        for (std::uint64_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    const std::uint64_t chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                const std::uint64_t lo = t * chunk;
                const std::uint64_t hi = std::min(count, lo + chunk);
                for (std::uint64_t i = lo; i < hi; ++i) body(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

/// Nonzero form drawn from the trial's own stream.
inline Polynomial sample_nonzero(const GradedSpace& space, Rng& rng) {
    for (;;) {
        Polynomial f = space.sample(rng);
        if (!f.is_zero()) return f;
    }
}

}  // namespace detail

inline void validate_census(const CensusConfig& c) {
    validate_nb(static_cast<std::int64_t>(c.n), static_cast<std::int64_t>(c.b));
    detail::require(c.n + 1 <= kMaxVars, "n too large");
    detail::require(c.l >= 1, "l ≥ 1 required");
    validate_prime(static_cast<std::int64_t>(c.q), "q");
}

/// Singular-locus dimension census of degree-l hypersurfaces in P^n.
/// Exhaustive mode walks every nonzero form (trial i is form number i+1 in
/// mixed-radix order); sample mode draws nonzero forms uniformly.
inline CensusResult census(const CensusConfig& c) {
    validate_census(c);
    const PrimeField field(c.q);
    const auto space = GradedSpace::forms(field, c.n + 1, c.l);
    std::uint64_t count = c.trials;
    if (c.mode == CensusMode::exhaustive) {
        const auto size = space.cardinality();
        check_cap(size ? std::optional<std::uint64_t>(*size - 1) : std::nullopt, c.cap, "exhaustive census");
        count = *size - 1;
    }
    CensusResult out;
    out.records.resize(count);
    detail::parallel_for(count, c.threads, [&](std::uint64_t i) {
        const auto start = std::chrono::steady_clock::now();
        Polynomial F(field, c.n + 1);
        if (c.mode == CensusMode::exhaustive) {
            F = space.element(i + 1);
        } else {
            Rng rng = Rng::for_trial(c.seed, i);
            F = detail::sample_nonzero(space, rng);
        }
        const auto dd = sing_dim_deg(F);
        CensusRecord& r = out.records[i];
        r.seed = c.seed;
        r.trial = i;
        r.q = c.q;
        r.n = c.n;
        r.b = c.b;
        r.l = c.l;
        r.sing_dim = dd.projective_dim;
        r.sing_deg = dd.degree;
        if (c.timing) {
            r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
    });
    auto& s = out.summary;
    s.trials = count;
    for (const auto& r : out.records) {
        ++s.histogram[r.sing_dim];
        if (r.sing_dim >= static_cast<int>(c.b)) ++s.count_ge_b;
    }
    s.prob_ge_b = count == 0 ? Rational(0) : Rational(BigInt(s.count_ge_b), BigInt(count));
    s.prob_ge_b.canonicalize();
    return out;
}

struct SquarefreeReport {
    std::uint64_t pairs = 0;       // (G, H) pairs over all d, both nonzero
    std::uint64_t image_size = 0;  // distinct products G^2 H
    std::uint64_t max_fiber = 0;
    std::map<unsigned, std::uint64_t> image_by_d;
    std::uint64_t member_violations = 0;  // image members with sing_dim < n-1
    std::uint64_t checked = 0;            // forms F tested against the image
    std::uint64_t in_image = 0;
    std::uint64_t sing_ge = 0;
    std::uint64_t exceptions = 0;         // F with (sing_dim >= n-1) != (F in image)
};

/// For b = n-1: F has sing_dim >= n-1 exactly when F = G^2 H with
/// deg G = d in 1..floor(l/2). Builds the image by enumeration and checks
/// the equivalence on samples or on every nonzero form.
inline SquarefreeReport squarefree_census(std::size_t n, unsigned l, std::uint64_t q, CensusMode mode,
                                          std::uint64_t trials, std::uint64_t seed,
                                          std::uint64_t cap = kDefaultEnumerationCap) {
    detail::require(n >= 1 && n + 1 <= kMaxVars, "n out of range");
    detail::require(l >= 2, "l ≥ 2 required");
    validate_prime(static_cast<std::int64_t>(q), "q");
    const PrimeField field(q);
    const auto target = GradedSpace::forms(field, n + 1, l);
    const auto target_size = target.cardinality();
    detail::require(target_size.has_value(), "S_l too large to index");

    std::uint64_t pairs_needed = 0;
    for (unsigned d = 1; 2 * d <= l; ++d) {
        const auto g = GradedSpace::forms(field, n + 1, d).cardinality();
        const auto h = GradedSpace::forms(field, n + 1, l - 2 * d).cardinality();
        if (!g || !h || (*h != 0 && *g > UINT64_MAX / *h)) {
            check_cap(std::nullopt, cap, "G^2 H enumeration");
        }
        pairs_needed += (*g - 1) * (*h - 1);
    }
    check_cap(pairs_needed, cap, "G^2 H enumeration");

    SquarefreeReport r;
    std::unordered_map<std::uint64_t, std::uint64_t> fibers;
    for (unsigned d = 1; 2 * d <= l; ++d) {
        const auto gs = GradedSpace::forms(field, n + 1, d);
        const auto hs = GradedSpace::forms(field, n + 1, l - 2 * d);
        std::unordered_map<std::uint64_t, char> this_d;
        for (std::uint64_t gi = 1; gi < *gs.cardinality(); ++gi) {
            const Polynomial g2 = gs.element(gi).pow(2);
            for (std::uint64_t hi = 1; hi < *hs.cardinality(); ++hi) {
                const std::uint64_t key = target.index(g2 * hs.element(hi));
                ++fibers[key];
                this_d[key] = 1;
                ++r.pairs;
            }
        }
        r.image_by_d[d] = this_d.size();
    }
    r.image_size = fibers.size();
    for (const auto& [key, count] : fibers) {
        r.max_fiber = std::max(r.max_fiber, count);
        if (sing_dim_deg(target.element(key)).projective_dim < static_cast<int>(n) - 1) ++r.member_violations;
    }

    auto check = [&](const Polynomial& F) {
        const bool in = fibers.contains(target.index(F));
        const bool sing = sing_dim_deg(F).projective_dim >= static_cast<int>(n) - 1;
        ++r.checked;
        r.in_image += in;
        r.sing_ge += sing;
        r.exceptions += in != sing;
    };
    if (mode == CensusMode::exhaustive) {
        check_cap(*target_size - 1, cap, "exhaustive squarefree census");
        for (std::uint64_t i = 1; i < *target_size; ++i) check(target.element(i));
    } else {
        for (std::uint64_t t = 0; t < trials; ++t) {
            Rng rng = Rng::for_trial(seed, t);
            check(detail::sample_nonzero(target, rng));
        }
    }
    return r;
}

}  // namespace singlab
