#pragma once

#include "peelkit/peeling/indicator.h"
#include "peelkit/util/rng.h"

#include <vector>

namespace peelkit::peeling {

// One-step law of peeling the half-plane at a boundary edge, targeted at
// infinity.  The configuration catalogue:
//
//   (inf)                mass 3/8          (both face corners fresh)
//   (k, inf), k odd      (1/12) 54^{(1-k)/2} Z(k+1)    pocket right, 1 new edge
//   (k, inf), k even     (1/12) 54^{-k/2}  Z(k+2)      pocket right, 2 new edges
//   (inf, k)             same masses, pocket left
//   (k1, k2, inf) etc.   54^{-(k1+k2)/2} Z(k1+1) Z(k2+1), k1 k2 odd,
//                        for each of the three placements of the target slot
//
// Sampling uses inverse-CDF tables truncated at `table_size`; the lumped
// beyond-table mass is resolved exactly on hit by extending the mass
// recursion on the fly, so the sampled law carries no truncation bias.
class UihpqLaw {
public:
    struct Config {
        long long table_size = 10000;
        double deficit_tol = 1e-6; // construction fails if mass goes missing
    };

    UihpqLaw() : UihpqLaw(Config{}) {}
    explicit UihpqLaw(Config cfg);

    // A full event (face colour left Uncolored); consumes one uniform for the
    // shape and one per finite arc.
    PeelEvent sample(Rng& rng) const;

    // Exact mass of a single configuration (0 for parity-impossible ones).
    double indicator_mass(const PeelIndicator& ind) const;

    // Analytic P[Co^L = k] (== P[Co^R = k] by symmetry).
    double covered_left_pmf(long long k) const;

    // Series values of E[Ex] and E[Co^L]; the law gives exactly 2 and 1/2.
    double mean_exposed() const;
    double mean_covered_left() const;

    // Top-level shape masses: 3/8, 1/2, 1/8.
    double mass_one_part() const { return 0.375; }
    double mass_two_parts() const { return 2.0 * side_total_; }
    double mass_three_parts() const { return 3.0 * pocket_total_ * pocket_total_; }

    // Probability that every finite arc of the drawn configuration is inside
    // the truncated tables, and the lumped remainder.
    double table_mass() const { return table_mass_; }
    double tail_mass() const { return tail_mass_; }
    // Unaccounted mass: |catalogue total - 1| plus summation remainder bounds.
    double normalization_deficit() const { return deficit_; }

    long long table_size() const { return cfg_.table_size; }

private:
    long long draw_single_arc(Rng& rng) const;
    long long draw_pocket_arc(Rng& rng) const;

    Config cfg_;
    std::vector<double> single_mass_; // index k = 0..K: mass of (k, inf)
    std::vector<double> single_cum_;
    std::vector<double> pocket_mass_; // g(k) for odd k <= K, 0 at even slots
    std::vector<double> pocket_cum_;
    double side_total_ = 0;   // sum over all k of mass(k, inf)  (= 1/4)
    double side_table_ = 0;
    double pocket_total_ = 0; // sum of g(k)                      (= sqrt(54)/36)
    double pocket_table_ = 0;
    double first_moment_single_ = 0; // sum of k * mass(k, inf)
    double first_moment_pocket_ = 0; // sum of k * g(k)
    double table_mass_ = 0;
    double tail_mass_ = 0;
    double deficit_ = 0;
};

// Shared default-configuration instance (built once).
const UihpqLaw& uihpq_law();

// One half-plane peeling event drawn from the shared instance.
PeelEvent sample_indicator_uihpq(Rng& rng);

} // namespace peelkit::peeling
