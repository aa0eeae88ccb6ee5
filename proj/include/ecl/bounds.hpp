#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ecl {

struct BoundVerdict {
    std::string criterion;
    bool applicable = true;
    bool guaranteed = false;
    // exact rational threshold when the criterion has one (chi' compared
    // against threshold_num/threshold_den)
    long long threshold_num = 0;
    long long threshold_den = 1;
    std::string note;
};

struct BoundInputs {
    int delta = 0;
    int mu = 0;
    int chi = 0;
    std::optional<int> n; // |V(G)|, only the Delta<=39 corollary uses it
};

// One verdict per closed-form "guaranteed elementary" criterion. Rational
// thresholds are decided in exact integer arithmetic; transcendental ones
// with outward rounding, so guaranteed=true is never overclaimed.
std::vector<BoundVerdict> guarantee_classifier(const BoundInputs& in);

inline bool any_guaranteed(const std::vector<BoundVerdict>& vs) {
    for (const auto& v : vs)
        if (v.guaranteed) return true;
    return false;
}

// Jakobsen-form threshold (m/(m-1))*Delta + (m-3)/(m-1) as an exact fraction
std::pair<long long, long long> jakobsen_threshold(int m, int delta);
// strict comparison chi' > threshold in integers
bool jakobsen_exceeded(int m, int delta, int chi);

// max{(2(k-Delta)+1)^2 + 6, 22(k-Delta)+17}
long long main3_lower_bound(int k, int delta);

// |X| <= s-1 for elementary X when k > (s/(s-1))Delta + (s-3)/(s-1)
std::optional<int> elementary_set_cap(int s, int delta, int k);

} // namespace ecl
