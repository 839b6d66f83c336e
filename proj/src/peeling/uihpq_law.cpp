#include "peelkit/peeling/uihpq_law.h"

#include "peelkit/boltzmann/partition.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace peelkit::peeling {

namespace {

constexpr double kSqrt54 = 7.3484692283495345; // sqrt(54)

// Streams Z(2l) 54^{-l} upward without storing the table.
struct ScaledZWalker {
    unsigned long long l;
    double value;

    explicit ScaledZWalker(unsigned long long l0)
        : l(l0), value(boltzmann::partition_z_scaled(unsigned(2 * l0))) {}

    void advance() {
        double m = double(l);
        value *= 8.0 * (3 * m - 1) * (3 * m - 2) * (3 * m - 3) /
                 ((m - 1) * (2 * m + 1) * (2 * m + 2)) / 54.0;
        ++l;
    }
};

// mass of (k, inf): 4.5 * Z(p)54^{-p/2} at p = k+1 (k odd) or k+2 (k even)
double single_mass(long long k) {
    unsigned p = unsigned(k % 2 != 0 ? k + 1 : k + 2);
    return 4.5 * boltzmann::partition_z_scaled(p);
}

// g(k) = Z(k+1) 54^{-k/2} for odd k: one finite pocket of a three-part split
double pocket_mass_at(long long k) {
    return kSqrt54 * boltzmann::partition_z_scaled(unsigned(k + 1));
}

} // namespace

UihpqLaw::UihpqLaw(Config cfg) : cfg_(cfg) {
    if (cfg_.table_size < 2) throw std::invalid_argument("UihpqLaw: table too small");
    long long K = cfg_.table_size;

    single_mass_.assign(std::size_t(K) + 1, 0.0);
    single_cum_.assign(std::size_t(K) + 1, 0.0);
    pocket_mass_.assign(std::size_t(K) + 1, 0.0);
    pocket_cum_.assign(std::size_t(K) + 1, 0.0);
    double cum_s = 0.0, cum_p = 0.0;
    for (long long k = 0; k <= K; ++k) {
        single_mass_[k] = single_mass(k);
        cum_s += single_mass_[k];
        single_cum_[k] = cum_s;
        if (k % 2 != 0) cum_p += pocket_mass_[k] = pocket_mass_at(k);
        pocket_cum_[k] = cum_p;
    }
    side_table_ = cum_s;
    pocket_table_ = cum_p;

    // Extend G = sum_l Z(2l) 54^{-l} far beyond the table; everything else
    // has a closed form in G.  Also accumulate the first-moment sums used by
    // mean_covered_left().
    const unsigned long long kExtent = 5'000'000; // half-perimeters
    double G = 0.0, sum_e1 = 0.0, sum_t = 0.0;
    ScaledZWalker w(1);
    for (unsigned long long l = 1; l <= kExtent; ++l) {
        G += w.value;
        sum_e1 += w.value * double(4 * l - 3);
        sum_t += w.value * double(2 * l - 1);
        if (l == 1) w = ScaledZWalker(2); // ratio recursion starts at l = 2
        else w.advance();
    }
    // remainder bound from Z(p)54^{-p/2} <= 0.05 p^{-5/2}
    double rem_G = 0.05 * std::pow(2.0, -2.5) * (2.0 / 3.0) * std::pow(double(kExtent), -1.5);

    side_total_ = 9.0 * G;
    pocket_total_ = kSqrt54 * G;
    first_moment_single_ = 4.5 * sum_e1;
    first_moment_pocket_ = kSqrt54 * sum_t;

    double total = 0.375 + 2.0 * side_total_ + 3.0 * pocket_total_ * pocket_total_;
    table_mass_ = 0.375 + 2.0 * side_table_ + 3.0 * pocket_table_ * pocket_table_;
    tail_mass_ = total - table_mass_;
    deficit_ = std::abs(total - 1.0) + 2.0 * 9.0 * rem_G +
               3.0 * kSqrt54 * rem_G * (2.0 * pocket_total_);
    if (deficit_ > cfg_.deficit_tol)
        throw std::runtime_error("UihpqLaw: normalization deficit " +
                                 std::to_string(deficit_) + " exceeds tolerance");
}

long long UihpqLaw::draw_single_arc(Rng& rng) const {
    double u = rng.uniform() * side_total_;
    if (u < side_table_) {
        auto it = std::upper_bound(single_cum_.begin(), single_cum_.end(), u);
        return it - single_cum_.begin();
    }
    // beyond-table hit: resolve the lumped mass exactly by extending the sum
    double rest = u - side_table_;
    long long k = cfg_.table_size;
    while (true) {
        ++k;
        double m = single_mass(k);
        if (rest < m || k > cfg_.table_size * 1024) return k;
        rest -= m;
    }
}

long long UihpqLaw::draw_pocket_arc(Rng& rng) const {
    double u = rng.uniform() * pocket_total_;
    if (u < pocket_table_) {
        auto it = std::upper_bound(pocket_cum_.begin(), pocket_cum_.end(), u);
        long long k = it - pocket_cum_.begin();
        return (k % 2 != 0) ? k : k + 1; // cum is flat across even slots
    }
    double rest = u - pocket_table_;
    long long k = cfg_.table_size - 1;
    if (k % 2 == 0) ++k;
    while (true) {
        k += 2;
        double m = pocket_mass_at(k);
        if (rest < m || k > cfg_.table_size * 1024) return k;
        rest -= m;
    }
}

PeelEvent UihpqLaw::sample(Rng& rng) const {
    double total = 0.375 + 2.0 * side_total_ + 3.0 * pocket_total_ * pocket_total_;
    double u = rng.uniform() * total;
    PeelIndicator ind;
    if (u < 0.375) {
        ind.n_parts = 1;
        ind.arc[0] = kInfiniteArc;
    } else if (u < 0.375 + 2.0 * side_total_) {
        bool pocket_right = u < 0.375 + side_total_;
        long long k = draw_single_arc(rng);
        ind.n_parts = 2;
        ind.arc[0] = pocket_right ? k : kInfiniteArc;
        ind.arc[1] = pocket_right ? kInfiniteArc : k;
    } else {
        double v = (u - 0.375 - 2.0 * side_total_) / (pocket_total_ * pocket_total_);
        int slot = std::min(2, int(v)); // placement of the infinite part: 2,1,0
        long long k1 = draw_pocket_arc(rng);
        long long k2 = draw_pocket_arc(rng);
        ind.n_parts = 3;
        int at = 0;
        for (int i = 0; i < 3; ++i)
            ind.arc[i] = (i == 2 - slot) ? kInfiniteArc : (at++ == 0 ? k1 : k2);
    }
    PeelEvent ev = complete_event(ind, ind.infinite_part());
    return ev;
}

double UihpqLaw::indicator_mass(const PeelIndicator& ind) const {
    int inf = ind.infinite_part();
    if (ind.n_parts == 1)
        return inf == 0 ? 0.375 : 0.0;
    if (ind.n_parts == 2) {
        if (inf < 0) return 0.0;
        long long k = ind.arc[1 - inf];
        return k >= 0 ? single_mass(k) : 0.0;
    }
    if (ind.n_parts == 3) {
        if (inf < 0) return 0.0;
        double m = 1.0;
        for (int i = 0; i < 3; ++i) {
            if (i == inf) continue;
            if (ind.arc[i] < 1 || ind.arc[i] % 2 == 0) return 0.0;
            m *= pocket_mass_at(ind.arc[i]);
        }
        return m;
    }
    return 0.0;
}

double UihpqLaw::covered_left_pmf(long long k) const {
    if (k < 0) return 0.0;
    // k = 0: nothing engulfed clockwise.  Contributions: the lone-component
    // step, every right-pocket step, the left pocket of zero arc, and the
    // two-pocket split whose target component is leftmost.
    if (k == 0)
        return 0.375 + side_total_ + single_mass(0) +
               pocket_total_ * pocket_total_;
    double p = single_mass(k);
    if (k % 2 != 0) {
        p += pocket_total_ * pocket_mass_at(k);
    } else {
        for (long long k1 = 1; k1 < k; k1 += 2)
            p += pocket_mass_at(k1) * pocket_mass_at(k - k1);
    }
    return p;
}

double UihpqLaw::mean_exposed() const {
    // 3 on (inf); 2 on odd single arcs, 1 on even ones; 1 on three-part splits
    double G = side_total_ / 9.0;
    return 3.0 * 0.375 + 2.0 * (2.0 * 4.5 * G + 1.0 * 4.5 * G) +
           3.0 * pocket_total_ * pocket_total_;
}

double UihpqLaw::mean_covered_left() const {
    return first_moment_single_ + 3.0 * pocket_total_ * first_moment_pocket_;
}

const UihpqLaw& uihpq_law() {
    static const UihpqLaw law{};
    return law;
}

PeelEvent sample_indicator_uihpq(Rng& rng) { return uihpq_law().sample(rng); }

} // namespace peelkit::peeling
