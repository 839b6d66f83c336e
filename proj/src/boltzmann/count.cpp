#include "peelkit/boltzmann/count.h"

#include <map>
#include <stdexcept>
#include <utility>

namespace peelkit::boltzmann {

BigInt count_maps(unsigned n, unsigned l) {
    if (l == 0) throw std::invalid_argument("count_maps: l must be positive");
    // 3^{n-1} (3l)! (3l-3+2n)! / (n! l! (2l-1)! (n+3l-1)!)
    BigInt num = factorial(3 * l) * factorial(3 * l - 3 + 2 * n);
    BigInt den = factorial(n) * factorial(l) * factorial(2 * l - 1) *
                 factorial(n + 3 * l - 1);
    if (n == 0) {
        den *= 3;
    } else {
        for (unsigned i = 1; i < n; ++i) num *= 3;
    }
    BigInt q = num / den;
    if (q * den != num)
        throw std::logic_error("count_maps: formula did not divide evenly");
    return q;
}

namespace {

using Key = std::pair<unsigned, unsigned>; // (n, perimeter)

// Removing the face behind the root edge of a perimeter-p map leaves either
// nothing (p = 2, the edge map), one map of perimeter p+2 (two fresh face
// corners), two maps (one corner lands back on the boundary at odd arc
// distance m, in one of two mirror-symmetric ways), or three maps (both
// corners land on the boundary).  Fresh corners become inner vertices of the
// parent, which fixes how n splits.
BigInt count_rec(unsigned n, unsigned p, std::map<Key, BigInt>& memo) {
    if (p % 2 != 0 || p < 2) return 0;
    auto it = memo.find({n, p});
    if (it != memo.end()) return it->second;

    BigInt total = (p == 2 && n == 0) ? 1 : 0;
    if (n >= 2) total += count_rec(n - 2, p + 2, memo);
    if (n >= 1) {
        for (unsigned m = 1; m <= p - 1; m += 2) {
            BigInt pair_sum = 0;
            for (unsigned n1 = 0; n1 + 1 <= n; ++n1)
                pair_sum += count_rec(n1, m + 1, memo) *
                            count_rec(n - 1 - n1, p + 1 - m, memo);
            total += 2 * pair_sum;
        }
    }
    for (unsigned m1 = 1; m1 + 2 <= p - 1; m1 += 2)
        for (unsigned m2 = 1; m1 + m2 + 1 <= p - 1; m2 += 2) {
            unsigned m3 = p - 1 - m1 - m2;
            for (unsigned n1 = 0; n1 <= n; ++n1)
                for (unsigned n2 = 0; n1 + n2 <= n; ++n2)
                    total += count_rec(n1, m1 + 1, memo) *
                             count_rec(n2, m2 + 1, memo) *
                             count_rec(n - n1 - n2, m3 + 1, memo);
        }

    memo.emplace(Key{n, p}, total);
    return memo[{n, p}];
}

} // namespace

BigInt count_maps_recursive(unsigned n, unsigned l) {
    std::map<Key, BigInt> memo;
    return count_rec(n, 2 * l, memo);
}

} // namespace peelkit::boltzmann
