#include "ecl/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace ecl {

namespace {

// smallest integer p >= 1 with (3/2)^p >= x/2, an upper bound on
// log_{3/2}(x/2); integer arithmetic only
int ceil_log32_half(int x) {
    long long three = 3, two = 2;
    int p = 1;
    // 2*3^p >= x*2^p  <=>  (3/2)^p >= x/2
    while (p < 37 && 2 * three < static_cast<long long>(x) * two) {
        ++p;
        three *= 3;
        two *= 2;
    }
    return p;
}

// (5/4)^(mu-1) >= p, exactly: 5^(mu-1) >= p * 4^(mu-1)
bool pow54_at_least(int mu_minus_1, long long p) {
    if (mu_minus_1 < 0) return false;
    long double lhs = std::pow(5.0L, mu_minus_1);
    long double rhs = static_cast<long double>(p) * std::pow(4.0L, mu_minus_1);
    if (mu_minus_1 <= 25) { // exact in 64-bit
        long long l = 1, r = p;
        for (int i = 0; i < mu_minus_1; ++i) {
            l *= 5;
            r *= 4;
        }
        return l >= r;
    }
    return lhs >= rhs * (1.0L + 1e-15L);
}

} // namespace

std::pair<long long, long long> jakobsen_threshold(int m, int delta) {
    if (m < 3) throw std::invalid_argument("jakobsen threshold needs m >= 3");
    return {static_cast<long long>(m) * delta + (m - 3), m - 1};
}

bool jakobsen_exceeded(int m, int delta, int chi) {
    auto [num, den] = jakobsen_threshold(m, delta);
    return static_cast<long long>(chi) * den > num;
}

long long main3_lower_bound(int k, int delta) {
    if (k < delta + 1) throw std::invalid_argument("needs k >= Delta+1");
    long long d = k - delta;
    return std::max((2 * d + 1) * (2 * d + 1) + 6, 22 * d + 17);
}

std::optional<int> elementary_set_cap(int s, int delta, int k) {
    if (s < 2) throw std::invalid_argument("needs s >= 2");
    // k > (s/(s-1))Delta + (s-3)/(s-1)  <=>  (s-1)k > s*Delta + s - 3
    if (static_cast<long long>(s - 1) * k > static_cast<long long>(s) * delta + s - 3)
        return s - 1;
    return std::nullopt;
}

std::vector<BoundVerdict> guarantee_classifier(const BoundInputs& in) {
    if (in.delta < 1 || in.mu < 1 || in.chi < in.delta)
        throw std::invalid_argument("need Delta >= 1, mu >= 1, chi' >= Delta");
    std::vector<BoundVerdict> out;

    {
        // chi' >= Delta + cbrt(Delta/4): cube both sides, exact
        BoundVerdict v;
        v.criterion = "cubic";
        long long excess = in.chi - in.delta;
        v.guaranteed = 4 * excess * excess * excess >= in.delta;
        v.note = "chi' >= Delta + cbrt(Delta/4)";
        out.push_back(v);
    }
    {
        BoundVerdict v;
        v.criterion = "jakobsen39";
        auto [num, den] = jakobsen_threshold(39, in.delta);
        v.threshold_num = num;
        v.threshold_den = den;
        v.guaranteed = jakobsen_exceeded(39, in.delta, in.chi);
        v.note = "chi' > (39 Delta + 36)/38";
        out.push_back(v);
    }
    {
        BoundVerdict v;
        v.criterion = "order39";
        bool small = in.delta <= 39 || (in.n && *in.n <= 39);
        v.applicable = small;
        v.guaranteed = small && in.chi >= in.delta + 2;
        v.note = "Delta <= 39 or |V| <= 39, chi' >= Delta+2";
        out.push_back(v);
    }
    {
        // chi' = Delta + mu together with mu >= log_{5/4} log_{3/2}(Delta/2) + 1
        BoundVerdict v;
        v.criterion = "mu-threshold";
        if (in.delta <= 2) {
            v.applicable = false;
            v.note = "log log undefined for Delta <= 2";
        } else {
            int p = ceil_log32_half(in.delta); // upper bound on the inner log
            v.guaranteed = (in.chi == in.delta + in.mu) && pow54_at_least(in.mu - 1, p);
            v.note = "mu >= loglog threshold and chi' = Delta + mu";
        }
        out.push_back(v);
    }
    {
        // chi' >= Delta + min{2 sqrt(mu(loglog(Delta/2) + log 2mu)),
        //                     cbrt(mu log(Delta/2))}, natural logs; needs chi' > Delta+1
        BoundVerdict v;
        v.criterion = "sqrt-log";
        if (in.delta <= 2) {
            v.applicable = false;
            v.note = "log(Delta/2) <= 0";
        } else if (in.chi <= in.delta + 1) {
            v.guaranteed = false;
            v.note = "needs chi' > Delta + 1";
        } else {
            long double half = in.delta / 2.0L;
            long double slack = 1.0L + 1e-12L;
            long double best = -1;
            long double log_half = std::log(half);
            if (log_half > 0) {
                long double inner = std::log(log_half) + std::log(2.0L * in.mu);
                if (inner >= 0) {
                    long double b1 = 2 * std::sqrt(in.mu * inner) * slack;
                    best = b1;
                }
                long double b2 = std::cbrt(in.mu * log_half) * slack;
                if (best < 0 || b2 < best) best = b2;
            }
            if (best < 0) {
                v.applicable = false;
                v.note = "thresholds undefined";
            } else {
                v.guaranteed = static_cast<long double>(in.chi - in.delta) >= best;
                v.note = "chi' >= Delta + min{2 sqrt(...), cbrt(...)}";
            }
        }
        out.push_back(v);
    }
    return out;
}

} // namespace ecl
