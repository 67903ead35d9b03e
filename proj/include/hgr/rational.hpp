#pragma once

#include <cassert>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hgr/bigint.hpp"

namespace hgr {

// Exact rational scalar. Canonical form: denominator > 0, gcd(|num|, den) = 1.
// All arithmetic re-normalizes, so values are canonical by construction; debug
// builds audit the invariant after construction.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }
    int sign() const { return num_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // "p/q", or "p" when q = 1.
    std::string str() const {
        std::string s = num_.to_decimal();
        if (!is_integer()) {
            s += "/";
            s += den_.to_decimal();
        }
        return s;
    }

    // Accepts "p/q", integer literals, and finite decimal literals, all exact.
    static Rational parse(std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        if (s.empty()) throw std::invalid_argument("empty rational literal");
        std::size_t slash = s.find('/');
        if (slash != std::string_view::npos) {
            BigInt n = BigInt::from_decimal(s.substr(0, slash));
            BigInt d = BigInt::from_decimal(s.substr(slash + 1));
            if (d.is_zero()) throw std::invalid_argument("zero denominator: " + std::string(s));
            return Rational(std::move(n), std::move(d));
        }
        std::size_t dot = s.find('.');
        if (dot == std::string_view::npos) return Rational(BigInt::from_decimal(s));
        std::string digits(s.substr(0, dot));
        std::string_view frac = s.substr(dot + 1);
        if (frac.empty()) throw std::invalid_argument("bad decimal literal: " + std::string(s));
        digits.append(frac);
        BigInt n = BigInt::from_decimal(digits);
        BigInt d(1);
        for (std::size_t i = 0; i < frac.size(); ++i) d *= BigInt(10);
        return Rational(std::move(n), std::move(d));
    }

    double to_double() const { return num_.to_double() / den_.to_double(); }

    // Exact fixed-point decimal with `places` fraction digits, truncated toward
    // zero. Deterministic across platforms (integer arithmetic only).
    std::string to_decimal_string(int places) const {
        BigInt scale(1);
        for (int i = 0; i < places; ++i) scale *= BigInt(10);
        BigInt scaled_q, scaled_r;
        BigInt::divmod(num_.abs() * scale, den_, scaled_q, scaled_r);
        std::string digits = scaled_q.to_decimal();
        if (static_cast<int>(digits.size()) <= places)
            digits.insert(0, std::string(places + 1 - digits.size(), '0'));
        std::string out = digits.substr(0, digits.size() - places);
        if (places > 0) {
            std::string frac = digits.substr(digits.size() - places);
            while (!frac.empty() && frac.back() == '0') frac.pop_back();
            if (!frac.empty()) out += "." + frac;
        }
        if (sign() < 0 && out != "0") out.insert(0, "-");
        return out;
    }

private:
    BigInt num_;
    BigInt den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (g != BigInt(1)) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        assert(audit_canonical());
    }

#ifndef NDEBUG
    bool audit_canonical() const {
        if (den_.sign() <= 0) return false;
        if (num_.is_zero()) return den_ == BigInt(1);
        return BigInt::gcd(num_, den_) == BigInt(1);
    }
#else
    bool audit_canonical() const { return true; }
#endif
};

}  // namespace hgr
