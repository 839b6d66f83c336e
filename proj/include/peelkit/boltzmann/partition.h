#pragma once

#include "peelkit/util/bigrat.h"

#include <cstdint>
#include <string>
#include <vector>

namespace peelkit::boltzmann {

// Weight sequence for quadrangulations with a simple boundary of even
// perimeter p, counted with a factor 12^{-n} per inner vertex.  For p >= 4
// the closed form is
//
//     Z(2l) = 8^l (3l-4)! / ((l-2)! (2l)!),
//
// and at p = 2 the value is 4/3.  Plugging l = 1 into the closed form with
// the convention (-1)! = 1 would give 4 instead; that value is wrong for the
// weighted count (the series over the map census converges to 4/3, and only
// 4/3 makes the one-step peeling decomposition sum to Z).  Both the series
// bracket and the decomposition identity are enforced in tests.
BigRat partition_z_exact(unsigned perimeter);

// log Z(p) for even p >= 2, evaluated with lgamma so it stays usable at
// perimeters where the exact value has thousands of digits.
double partition_z_log(unsigned perimeter);

// Z(p) as a double; overflows to +inf for large p, prefer partition_z_log.
double partition_z(unsigned perimeter);

// Z(p) * 54^{-p/2}: stays in double range at every perimeter (decays like
// p^{-5/2}); computed by a cached ratio recursion.  Thread-safe.
double partition_z_scaled(unsigned perimeter);

// Leading-order constant in Z(p) ~ kZGrowth^{p/2} * kZPolynomial * p^{-5/2}.
inline constexpr double kZGrowth = 54.0;
// 4 / (3^{7/2} sqrt(2 pi))
double z_asymptotic_constant();

// Z(p) / (c 54^{p/2} p^{-5/2}) with c = z_asymptotic_constant(); tends to 1.
double z_asymptotic_ratio(unsigned perimeter);

// Weighted census term t_n = 12^{-n} * count(n, perimeter): the weight that
// maps with n inner vertices contribute to Z(perimeter).
BigRat z_series_term(unsigned n_inner, unsigned perimeter);

// Rigorous two-sided bracket for Z(perimeter) from the census series:
// lower = sum of t_n for n <= n_terms, upper = lower + tail bound.  The tail
// bound uses t_n <= K 2^{3l-3} C(2n,n) 4^{-n} / n^2 and C(2n,n) <= 4^n/sqrt(pi n),
// so t_n <= A n^{-5/2}, then
//     sum_{n>N} t_n <= t_N * N / 0.737
// via the ratio bound t_{n+1}/t_n <= 1 - 1.737/n, valid for n >= 30 when
// perimeter <= 6.  Requires n_terms >= 30.
struct SeriesBracket {
    double lower = 0.0;
    double upper = 0.0;
};
SeriesBracket z_series_bracket(unsigned perimeter, unsigned n_terms);

// Append-only memo of exact values; value(p) is safe to call from several
// readers once warm_up(p_max) has run.
class PartitionTable {
public:
    explicit PartitionTable(unsigned p_max = 0) { warm_up(p_max); }
    void warm_up(unsigned p_max);
    const BigRat& value(unsigned perimeter) const; // throws if not warmed up
    unsigned max_perimeter() const { return 2 * unsigned(even_.size()); }

private:
    std::vector<BigRat> even_; // even_[l-1] = Z(2l)
};

// One row per boundary half-length: l, exact numerator/denominator, double
// value, and the ratio against the leading-order asymptotics.
std::string partition_csv(unsigned l_max);

} // namespace peelkit::boltzmann
