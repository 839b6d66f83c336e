#include "peelkit/boltzmann/partition.h"

#include "peelkit/boltzmann/count.h"

#include <cmath>
#include <mutex>
#include <vector>
#include <sstream>
#include <stdexcept>

namespace peelkit::boltzmann {

namespace {

void require_even_positive(unsigned p) {
    if (p == 0 || p % 2 != 0)
        throw std::invalid_argument("partition: perimeter must be even and positive");
}

} // namespace

BigRat partition_z_exact(unsigned perimeter) {
    if (perimeter % 2 != 0) return BigRat(0); // no odd-perimeter quadrangulations
    require_even_positive(perimeter);
    unsigned l = perimeter / 2;
    if (l == 1) return BigRat(4, 3);
    // 8^l (3l-4)! / ((l-2)! (2l)!)
    BigInt num = factorial(3 * l - 4);
    BigInt pow8 = 1;
    for (unsigned i = 0; i < l; ++i) pow8 *= 8;
    num *= pow8;
    BigInt den = factorial(l - 2) * factorial(2 * l);
    return BigRat(num, den);
}

double partition_z_log(unsigned perimeter) {
    require_even_positive(perimeter);
    unsigned l = perimeter / 2;
    if (l == 1) return std::log(4.0 / 3.0);
    return double(l) * std::log(8.0) + std::lgamma(3.0 * l - 3.0) -
           std::lgamma(double(l) - 1.0) - std::lgamma(2.0 * l + 1.0);
}

double partition_z(unsigned perimeter) {
    return std::exp(partition_z_log(perimeter));
}

double partition_z_scaled(unsigned perimeter) {
    require_even_positive(perimeter);
    static std::mutex mu;
    static std::vector<double> s = {4.0 / 3.0 / 54.0, 16.0 / 3.0 / 54.0 / 54.0};
    unsigned l = perimeter / 2;
    std::lock_guard<std::mutex> lock(mu);
    while (s.size() < l) {
        // Z(2l+2)/Z(2l) = 8 (3l-1)(3l-2)(3l-3) / ((l-1)(2l+1)(2l+2))
        double m = double(s.size()); // current largest half-perimeter
        double ratio = 8.0 * (3 * m - 1) * (3 * m - 2) * (3 * m - 3) /
                       ((m - 1) * (2 * m + 1) * (2 * m + 2));
        s.push_back(s.back() * ratio / 54.0);
    }
    return s[l - 1];
}

double z_asymptotic_constant() {
    return 4.0 / (std::pow(3.0, 3.5) * std::sqrt(2.0 * M_PI));
}

double z_asymptotic_ratio(unsigned perimeter) {
    double log_asym = std::log(z_asymptotic_constant()) +
                      (perimeter / 2.0) * std::log(kZGrowth) -
                      2.5 * std::log(double(perimeter));
    return std::exp(partition_z_log(perimeter) - log_asym);
}

BigRat z_series_term(unsigned n_inner, unsigned perimeter) {
    require_even_positive(perimeter);
    BigInt pow12 = 1;
    for (unsigned i = 0; i < n_inner; ++i) pow12 *= 12;
    return BigRat(count_maps(n_inner, perimeter / 2), pow12);
}

SeriesBracket z_series_bracket(unsigned perimeter, unsigned n_terms) {
    require_even_positive(perimeter);
    if (perimeter > 6)
        throw std::invalid_argument("z_series_bracket: tail constants assume perimeter <= 6");
    if (n_terms < 30)
        throw std::invalid_argument("z_series_bracket: need n_terms >= 30 for the tail bound");
    unsigned l = perimeter / 2;
    // Terms advance by the exact ratio
    //   t_{n+1}/t_n = (2n+3l-1)(2n+3l-2) / (4 (n+1)(n+3l)),
    // which keeps every term a small rational instead of re-deriving the
    // factorials each time.  The first term is anchored to the closed-form
    // count so the two routes stay tied together.
    BigRat t = BigRat(count_maps(0, l));
    BigRat partial = t;
    for (unsigned n = 0; n < n_terms; ++n) {
        t *= BigRat(BigInt(2 * n + 3 * l - 1) * (2 * n + 3 * l - 2),
                    BigInt(4) * (n + 1) * (n + 3 * l));
        partial += t;
    }
    if (t != z_series_term(n_terms, perimeter))
        throw std::logic_error("z_series_bracket: term recurrence drifted from the census");
    // For l <= 3 the same ratio is at most 1 - c/n for all n >= N with
    //   c = N (10N - 20) / (4 (N+1)(N+9))   (c > 1 once N >= 30),
    // because n (1 - ratio) increases in n.  Hence t_n <= t_N (n/N)^{-c} and
    //   sum_{n>N} t_n <= t_N * N / (c - 1).
    double N = double(n_terms);
    double c = N * (10.0 * N - 20.0) / (4.0 * (N + 1.0) * (N + 9.0));
    double tail = to_double(t) * N / (c - 1.0);
    SeriesBracket b;
    b.lower = to_double(partial);
    b.upper = b.lower + tail;
    return b;
}

void PartitionTable::warm_up(unsigned p_max) {
    for (unsigned l = unsigned(even_.size()) + 1; 2 * l <= p_max; ++l)
        even_.push_back(partition_z_exact(2 * l));
}

const BigRat& PartitionTable::value(unsigned perimeter) const {
    require_even_positive(perimeter);
    unsigned l = perimeter / 2;
    if (l > even_.size())
        throw std::out_of_range("PartitionTable: perimeter beyond warm_up");
    return even_[l - 1];
}

std::string partition_csv(unsigned l_max) {
    std::ostringstream out;
    out << "l,Z_exact_num,Z_exact_den,Z_float,asymptotic_ratio\n";
    for (unsigned l = 1; l <= l_max; ++l) {
        BigRat z = partition_z_exact(2 * l);
        out << l << ',' << numerator(z) << ',' << denominator(z) << ','
            << to_double(z) << ',' << z_asymptotic_ratio(2 * l) << '\n';
    }
    return out.str();
}

} // namespace peelkit::boltzmann
