#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ecl {

// Minimal arbitrary-precision unsigned integer: just enough for exact
// evaluation of 2*(mu+t)^s / mu^s with s up to the palette width, where
// 128-bit arithmetic can overflow. Little-endian 32-bit limbs.
class BigNat {
  public:
    BigNat() : limbs_{0} {}
    explicit BigNat(uint64_t v) {
        limbs_.push_back(static_cast<uint32_t>(v & 0xffffffffULL));
        if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
    }

    void mul_small(uint64_t f) {
        uint64_t carry = 0;
        for (auto& limb : limbs_) {
            unsigned __int128 cur = static_cast<unsigned __int128>(limb) * f + carry;
            limb = static_cast<uint32_t>(cur & 0xffffffffULL);
            carry = static_cast<uint64_t>(cur >> 32);
        }
        while (carry) {
            limbs_.push_back(static_cast<uint32_t>(carry & 0xffffffffULL));
            carry >>= 32;
        }
        trim();
    }

    static BigNat pow(uint64_t base, int exp) {
        BigNat r(1);
        for (int i = 0; i < exp; ++i) r.mul_small(base);
        return r;
    }

    int compare(const BigNat& o) const {
        if (limbs_.size() != o.limbs_.size())
            return limbs_.size() < o.limbs_.size() ? -1 : 1;
        for (size_t i = limbs_.size(); i-- > 0;) {
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
        }
        return 0;
    }
    bool operator==(const BigNat& o) const { return compare(o) == 0; }
    bool operator<(const BigNat& o) const { return compare(o) < 0; }
    bool operator>(const BigNat& o) const { return compare(o) > 0; }

    double as_double() const {
        double v = 0;
        for (size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
        return v;
    }

    std::string to_string() const {
        std::vector<uint32_t> work = limbs_;
        std::string out;
        auto all_zero = [&] {
            for (uint32_t w : work)
                if (w) return false;
            return true;
        };
        if (all_zero()) return "0";
        while (!all_zero()) {
            // divide by 10^9, emit remainder
            uint64_t rem = 0;
            for (size_t i = work.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | work[i];
                work[i] = static_cast<uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            std::string chunk = std::to_string(rem);
            if (all_zero())
                out = chunk + out;
            else
                out = std::string(9 - chunk.size(), '0') + chunk + out;
        }
        return out;
    }

  private:
    void trim() {
        while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
    }
    std::vector<uint32_t> limbs_;
};

} // namespace ecl
