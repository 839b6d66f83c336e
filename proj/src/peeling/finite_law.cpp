#include "peelkit/peeling/finite_law.h"

#include "peelkit/boltzmann/partition.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace peelkit::peeling {

namespace {

double t_of(long long p) { return boltzmann::partition_z_scaled(unsigned(p)); }

// conv2(s) = sum over odd m of w(m+1) w(s-m+1): total scaled weight of a pair
// of pockets whose old arcs add up to s.  Global, grown on demand.
double conv2(long long s) {
    static std::mutex mu;
    static std::vector<double> cache; // cache[s/2 - 1] for even s >= 2
    if (s < 2 || s % 2 != 0) throw std::invalid_argument("conv2: bad arc total");
    std::lock_guard<std::mutex> lock(mu);
    while (2 * (long long)cache.size() < s) {
        long long n = 2 * (long long)(cache.size() + 1);
        double acc = 0.0;
        for (long long m = 1; m < n; m += 2) acc += t_of(m + 1) * t_of(n - m + 1);
        cache.push_back(acc);
    }
    return cache[s / 2 - 1];
}

long long locate(const std::vector<double>& cum, double u) {
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    if (it == cum.end()) --it;
    return it - cum.begin();
}

} // namespace

FinitePeelLaw::FinitePeelLaw(unsigned perimeter) : p_(perimeter) {
    if (p_ < 2 || p_ % 2 != 0)
        throw std::invalid_argument("FinitePeelLaw: perimeter must be even and positive");
    double tp = t_of(p_);
    trivial_ = (p_ == 2) ? 0.75 : 0.0; // edge map weight 1 against Z(2) = 4/3
    free_ = (54.0 / 144.0) * t_of(p_ + 2) / tp;

    pocket_cum_.reserve(p_ / 2);
    double acc = 0.0;
    for (long long m = 1; m + 1 <= p_; m += 2) {
        acc += 4.5 * t_of(m + 1) * t_of(p_ + 1 - m) / tp;
        pocket_cum_.push_back(acc);
    }
    pocket_sum_ = acc;

    acc = 0.0;
    for (long long m1 = 1; m1 + 3 <= p_; m1 += 2) {
        acc += 54.0 * t_of(m1 + 1) * conv2(p_ - 1 - m1) / tp;
        split_cum_.push_back(acc);
    }
    split_sum_ = acc;

    total_ = trivial_ + free_ + 2.0 * pocket_sum_ + split_sum_;
    if (std::abs(total_ - 1.0) > 1e-8)
        throw std::runtime_error("FinitePeelLaw: decomposition total " +
                                 std::to_string(total_) + " at perimeter " +
                                 std::to_string(p_));
}

PeelIndicator FinitePeelLaw::sample_indicator(Rng& rng) const {
    double u = rng.uniform() * total_;
    PeelIndicator ind;
    if (u < trivial_) return ind; // empty: the map was the bare edge
    u -= trivial_;
    if (u < free_) {
        ind.n_parts = 1;
        ind.arc[0] = p_ - 1;
        return ind;
    }
    u -= free_;
    if (u < 2.0 * pocket_sum_) {
        bool right = u < pocket_sum_;
        long long m = 2 * locate(pocket_cum_, right ? u : u - pocket_sum_) + 1;
        ind.n_parts = 2;
        ind.arc[0] = right ? m : p_ - 1 - m;
        ind.arc[1] = right ? p_ - 1 - m : m;
        return ind;
    }
    u -= 2.0 * pocket_sum_;
    long long m1 = 2 * locate(split_cum_, u) + 1;
    long long s = p_ - 1 - m1;
    double r = rng.uniform() * conv2(s);
    long long m2 = 1;
    for (; m2 + 2 <= s - 1; m2 += 2) {
        double term = t_of(m2 + 1) * t_of(s - m2 + 1);
        if (r < term) break;
        r -= term;
    }
    ind.n_parts = 3;
    ind.arc[0] = m1;
    ind.arc[1] = m2;
    ind.arc[2] = s - m2;
    return ind;
}

double FinitePeelLaw::pocket_right_prob(long long m) const {
    if (m < 1 || m % 2 == 0 || m > p_ - 1) return 0.0;
    return 4.5 * t_of(m + 1) * t_of(p_ + 1 - m) / t_of(p_);
}

double FinitePeelLaw::pocket_left_prob(long long m) const { return pocket_right_prob(m); }

double FinitePeelLaw::two_pocket_prob(long long m1, long long m2) const {
    long long m3 = (long long)p_ - 1 - m1 - m2;
    if (m1 < 1 || m2 < 1 || m3 < 1) return 0.0;
    if (m1 % 2 == 0 || m2 % 2 == 0 || m3 % 2 == 0) return 0.0;
    return 54.0 * t_of(m1 + 1) * t_of(m2 + 1) * t_of(m3 + 1) / t_of(p_);
}

double FinitePeelLaw::indicator_prob(const PeelIndicator& ind) const {
    switch (ind.n_parts) {
    case 0:
        return trivial_;
    case 1:
        return ind.arc[0] == p_ - 1 ? free_ : 0.0;
    case 2: {
        if (ind.arc[0] + ind.arc[1] != p_ - 1 || ind.arc[0] < 0 || ind.arc[1] < 0)
            return 0.0;
        long long m = (ind.arc[0] % 2 != 0) ? ind.arc[0] : ind.arc[1];
        if (m % 2 == 0) return 0.0; // both arcs even cannot sum to odd p-1
        return pocket_right_prob(m);
    }
    case 3:
        return two_pocket_prob(ind.arc[0], ind.arc[1]);
    default:
        return 0.0;
    }
}

const FinitePeelLaw& finite_law(unsigned perimeter) {
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<FinitePeelLaw>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[perimeter];
    if (!slot) slot = std::make_unique<FinitePeelLaw>(perimeter);
    return *slot;
}

PeelEvent sample_indicator_fb(unsigned perimeter, Rng& rng, long long s_star) {
    PeelEvent ev;
    if (perimeter == 0) {
        ev.kind = kStepClose;
        return ev; // nothing left to explore
    }
    const FinitePeelLaw& law = finite_law(perimeter);
    if (s_star < 0) s_star = perimeter - 1;
    if (s_star < 1 || s_star > perimeter - 1)
        throw std::invalid_argument("sample_indicator_fb: target slot out of range");
    PeelIndicator ind = law.sample_indicator(rng);
    if (ind.trivial_close()) {
        ev.kind = kStepClose;
        ev.covered_left = 1; // the one remaining boundary edge sits left
        return ev;
    }
    return complete_event(ind, target_part_at(ind, s_star));
}

BigRat finite_law_total_exact(unsigned perimeter) {
    using boltzmann::partition_z_exact;
    if (perimeter < 2 || perimeter % 2 != 0)
        throw std::invalid_argument("finite_law_total_exact: bad perimeter");
    long long p = perimeter;
    BigRat acc = perimeter == 2 ? BigRat(1) : BigRat(0);
    acc += partition_z_exact(perimeter + 2) / 144;
    for (long long m = 1; m + 1 <= p; m += 2)
        acc += 2 * partition_z_exact(unsigned(m + 1)) *
               partition_z_exact(unsigned(p + 1 - m)) / 12;
    for (long long m1 = 1; m1 + 3 <= p; m1 += 2)
        for (long long m2 = 1; m1 + m2 + 1 <= p; m2 += 2)
            acc += partition_z_exact(unsigned(m1 + 1)) *
                   partition_z_exact(unsigned(m2 + 1)) *
                   partition_z_exact(unsigned(p - m1 - m2)); // third arc + its edge
    return acc / partition_z_exact(perimeter);
}

} // namespace peelkit::peeling
