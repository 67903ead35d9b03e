#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hgr {

// Arbitrary-precision signed integer, sign + little-endian base-2^32 magnitude.
// Magnitude never has trailing zero limbs; zero is sign 0 with empty magnitude.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long u = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
        while (u != 0) {
            mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffULL));
            u >>= 32;
        }
    }

    static BigInt from_decimal(std::string_view s) {
        std::size_t pos = 0;
        int sign = 1;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            if (s[pos] == '-') sign = -1;
            ++pos;
        }
        if (pos == s.size())
            throw std::invalid_argument("empty integer literal");
        BigInt r;
        for (; pos < s.size(); ++pos) {
            char c = s[pos];
            if (c < '0' || c > '9')
                throw std::invalid_argument("bad digit in integer literal: " + std::string(s));
            r.mul_small_inplace(10);
            r.add_small_inplace(static_cast<std::uint32_t>(c - '0'));
        }
        if (!r.mag_.empty()) r.sign_ = sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    bool is_odd() const { return !mag_.empty() && (mag_[0] & 1u); }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.mag_ = mul_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Truncating division: q rounds toward zero, remainder carries a's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt division by zero");
        if (a.sign_ == 0) {
            q = BigInt();
            r = BigInt();
            return;
        }
        std::vector<std::uint32_t> qm, rm;
        divmod_mag(a.mag_, b.mag_, qm, rm);
        q.mag_ = std::move(qm);
        r.mag_ = std::move(rm);
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.mag_.empty() ? 0 : 1;
        b.sign_ = b.mag_.empty() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    std::string to_decimal() const {
        if (sign_ == 0) return "0";
        std::string out;
        std::vector<std::uint32_t> m = mag_;
        while (!m.empty()) {
            std::uint32_t rem = divmod_small_mag(m, 1000000000u);
            std::string chunk = std::to_string(rem);
            if (m.empty()) {
                out.insert(0, chunk);
            } else {
                out.insert(0, std::string(9 - chunk.size(), '0') + chunk);
            }
        }
        if (sign_ < 0) out.insert(0, "-");
        return out;
    }

    double to_double() const {
        double v = 0.0;
        for (std::size_t i = mag_.size(); i-- > 0;)
            v = v * 4294967296.0 + static_cast<double>(mag_[i]);
        return sign_ < 0 ? -v : v;
    }

    // Fits in long long (for HalfInt conversions and small-value fast paths).
    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        unsigned long long u = 0;
        if (mag_.size() == 2) u = (static_cast<unsigned long long>(mag_[1]) << 32) | mag_[0];
        else if (mag_.size() == 1) u = mag_[0];
        if (sign_ >= 0) return u <= 0x7fffffffffffffffULL;
        return u <= 0x8000000000000000ULL;
    }

    long long to_int64() const {
        if (!fits_int64()) throw std::overflow_error("BigInt does not fit in 64 bits");
        unsigned long long u = 0;
        if (mag_.size() == 2) u = (static_cast<unsigned long long>(mag_[1]) << 32) | mag_[0];
        else if (mag_.size() == 1) u = mag_[0];
        return sign_ < 0 ? -static_cast<long long>(u - 1) - 1 : static_cast<long long>(u);
    }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    static void trim(std::vector<std::uint32_t>& m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& lo = a.size() < b.size() ? a : b;
        const auto& hi = a.size() < b.size() ? b : a;
        std::vector<std::uint32_t> r(hi.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < hi.size(); ++i) {
            std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
            r[i] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        r[hi.size()] = static_cast<std::uint32_t>(carry);
        trim(r);
        return r;
    }

    // Requires a >= b.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow -
                             (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (s < 0) {
                s += 0x100000000LL;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(s);
        }
        trim(r);
        return r;
    }

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t s = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
                r[i + j] = static_cast<std::uint32_t>(s);
                carry = s >> 32;
            }
            r[i + b.size()] += static_cast<std::uint32_t>(carry);
        }
        trim(r);
        return r;
    }

    static std::size_t bit_length(const std::vector<std::uint32_t>& m) {
        if (m.empty()) return 0;
        std::uint32_t top = m.back();
        std::size_t bits = 0;
        while (top) {
            ++bits;
            top >>= 1;
        }
        return (m.size() - 1) * 32 + bits;
    }

    static bool get_bit(const std::vector<std::uint32_t>& m, std::size_t i) {
        return (m[i / 32] >> (i % 32)) & 1u;
    }

    // Restoring binary long division on magnitudes.
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        if (b.size() == 1) {
            q = a;
            std::uint32_t rem = divmod_small_mag(q, b[0]);
            r.clear();
            if (rem) r.push_back(rem);
            return;
        }
        q.assign(a.size(), 0);
        r.clear();
        for (std::size_t i = bit_length(a); i-- > 0;) {
            shift_left1(r);
            if (get_bit(a, i)) r.empty() ? r.push_back(1) : void(r[0] |= 1u);
            if (cmp_mag(r, b) >= 0) {
                r = sub_mag(r, b);
                q[i / 32] |= (1u << (i % 32));
            }
        }
        trim(q);
        trim(r);
    }

    static void shift_left1(std::vector<std::uint32_t>& m) {
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint32_t next = m[i] >> 31;
            m[i] = (m[i] << 1) | carry;
            carry = next;
        }
        if (carry) m.push_back(carry);
    }

    static std::uint32_t divmod_small_mag(std::vector<std::uint32_t>& m, std::uint32_t d) {
        std::uint64_t rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        trim(m);
        return static_cast<std::uint32_t>(rem);
    }

    void mul_small_inplace(std::uint32_t f) {
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < mag_.size(); ++i) {
            std::uint64_t s = static_cast<std::uint64_t>(mag_[i]) * f + carry;
            mag_[i] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
        trim(mag_);
        if (mag_.empty()) sign_ = 0;
    }

    void add_small_inplace(std::uint32_t v) {
        if (v == 0) return;
        std::uint64_t carry = v;
        for (std::size_t i = 0; i < mag_.size() && carry; ++i) {
            std::uint64_t s = mag_[i] + carry;
            mag_[i] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
        if (!mag_.empty() && sign_ == 0) sign_ = 1;
    }
};

}  // namespace hgr
