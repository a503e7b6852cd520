#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nmu {

// Unsigned arbitrary-precision integer, little-endian 32-bit limbs.
// Covers what exact preimage counting needs: +, -, *, divmod, gcd,
// decimal rendering. Values stay desk-scale (a few hundred bits).
class BigUint {
public:
    BigUint() = default;
    BigUint(uint64_t v) {
        while (v) {
            limbs_.push_back(static_cast<uint32_t>(v));
            v >>= 32;
        }
    }

    bool is_zero() const { return limbs_.empty(); }

    static BigUint factorial(unsigned n) {
        BigUint r(1);
        for (unsigned i = 2; i <= n; ++i) r = r * BigUint(i);
        return r;
    }

    static BigUint pow(const BigUint& base, unsigned exp) {
        BigUint r(1);
        for (unsigned i = 0; i < exp; ++i) r = r * base;
        return r;
    }

    friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return !(a == b); }
    friend bool operator<(const BigUint& a, const BigUint& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigUint& a, const BigUint& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigUint& a, const BigUint& b) { return cmp(a, b) >= 0; }

    friend BigUint operator+(const BigUint& a, const BigUint& b) {
        BigUint r;
        size_t n = std::max(a.limbs_.size(), b.limbs_.size());
        r.limbs_.reserve(n + 1);
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t s = carry;
            if (i < a.limbs_.size()) s += a.limbs_[i];
            if (i < b.limbs_.size()) s += b.limbs_[i];
            r.limbs_.push_back(static_cast<uint32_t>(s));
            carry = s >> 32;
        }
        if (carry) r.limbs_.push_back(static_cast<uint32_t>(carry));
        return r;
    }

    // requires a >= b
    friend BigUint operator-(const BigUint& a, const BigUint& b) {
        if (a < b) throw std::underflow_error("BigUint subtraction underflow");
        BigUint r;
        r.limbs_.resize(a.limbs_.size());
        int64_t borrow = 0;
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            int64_t d = static_cast<int64_t>(a.limbs_[i]) - borrow;
            if (i < b.limbs_.size()) d -= b.limbs_[i];
            if (d < 0) {
                d += (int64_t(1) << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r.limbs_[i] = static_cast<uint32_t>(d);
        }
        r.trim();
        return r;
    }

    friend BigUint operator*(const BigUint& a, const BigUint& b) {
        if (a.is_zero() || b.is_zero()) return BigUint();
        BigUint r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.limbs_.size(); ++j) {
                uint64_t cur = r.limbs_[i + j] +
                               static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
                r.limbs_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            r.limbs_[i + b.limbs_.size()] += static_cast<uint32_t>(carry);
        }
        r.trim();
        return r;
    }

    struct DivMod;
    DivMod divmod(const BigUint& d) const;

    static BigUint gcd(BigUint a, BigUint b);

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<uint32_t> work(limbs_);
        std::string digits;
        while (!work.empty()) {
            uint64_t rem = 0;
            for (size_t i = work.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | work[i];
                work[i] = static_cast<uint32_t>(cur / 10);
                rem = cur % 10;
            }
            digits.push_back(static_cast<char>('0' + rem));
            while (!work.empty() && work.back() == 0) work.pop_back();
        }
        return std::string(digits.rbegin(), digits.rend());
    }

    uint64_t to_u64() const {
        if (limbs_.size() > 2) throw std::overflow_error("BigUint does not fit in 64 bits");
        uint64_t v = 0;
        for (size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
        return v;
    }

    double to_double() const {
        double v = 0;
        for (size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
        return v;
    }

private:
    std::vector<uint32_t> limbs_;

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
    size_t bit_length() const {
        if (limbs_.empty()) return 0;
        size_t n = (limbs_.size() - 1) * 32;
        uint32_t top = limbs_.back();
        while (top) {
            ++n;
            top >>= 1;
        }
        return n;
    }
    bool bit(size_t i) const { return (limbs_[i / 32] >> (i % 32)) & 1; }
    void shl1() {
        uint32_t carry = 0;
        for (auto& limb : limbs_) {
            uint32_t next = limb >> 31;
            limb = (limb << 1) | carry;
            carry = next;
        }
        if (carry) limbs_.push_back(carry);
    }
    static int cmp(const BigUint& a, const BigUint& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
        for (size_t i = a.limbs_.size(); i-- > 0;) {
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
        }
        return 0;
    }
};

struct BigUint::DivMod {
    BigUint quot;
    BigUint rem;
};

// Shift-and-subtract long division; quadratic in bit length, fine here.
inline BigUint::DivMod BigUint::divmod(const BigUint& d) const {
    if (d.is_zero()) throw std::domain_error("BigUint division by zero");
    DivMod out;
    if (*this < d) {
        out.rem = *this;
        return out;
    }
    size_t bits = bit_length();
    out.quot.limbs_.assign((bits + 31) / 32, 0);
    for (size_t i = bits; i-- > 0;) {
        out.rem.shl1();
        if (bit(i)) {
            if (out.rem.limbs_.empty())
                out.rem.limbs_.push_back(1);
            else
                out.rem.limbs_[0] |= 1;
        }
        if (out.rem >= d) {
            out.rem = out.rem - d;
            out.quot.limbs_[i / 32] |= (uint32_t(1) << (i % 32));
        }
    }
    out.quot.trim();
    return out;
}

inline BigUint operator/(const BigUint& a, const BigUint& b) { return a.divmod(b).quot; }
inline BigUint operator%(const BigUint& a, const BigUint& b) { return a.divmod(b).rem; }

inline BigUint BigUint::gcd(BigUint a, BigUint b) {
    while (!b.is_zero()) {
        BigUint r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// Exact nonnegative rational, kept in lowest terms.
struct Rational {
    BigUint num;
    BigUint den{1};

    static Rational make(BigUint n, BigUint d) {
        if (d.is_zero()) throw std::domain_error("Rational with zero denominator");
        if (n.is_zero()) return Rational{BigUint(), BigUint(1)};
        BigUint g = BigUint::gcd(n, d);
        return Rational{n / g, d / g};
    }

    std::string to_string() const { return num.to_string() + "/" + den.to_string(); }
    double to_double() const { return num.to_double() / den.to_double(); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(a.num * b.den + b.num * a.den, a.den * b.den);
    }
};

}  // namespace nmu
