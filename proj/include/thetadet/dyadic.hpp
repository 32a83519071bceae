#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <string>

#include "thetadet/errors.hpp"

namespace thetadet {

using BigInt = boost::multiprecision::cpp_int;

// A dyadic rational num / 2^exp with arbitrary-precision numerator.
// Kept normalized: exp == 0, or num odd; zero is 0 / 2^0.  Dyadics form a
// ring (no general division), which is exactly what signed-graph Laplacians
// with half-integer edge weights need.
class Dyadic {
public:
    Dyadic() : num_(0), exp_(0) {}
    Dyadic(long long n) : num_(n), exp_(0) {}
    explicit Dyadic(BigInt n) : num_(std::move(n)), exp_(0) {}

    // num / 2^exp, normalized.
    static Dyadic ratio(BigInt num, unsigned exp) {
        Dyadic d;
        d.num_ = std::move(num);
        d.exp_ = exp;
        d.normalize();
        return d;
    }

    static Dyadic half() { return ratio(1, 1); }

    const BigInt& numerator() const { return num_; }
    unsigned exponent() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return exp_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }
    bool is_odd_integer() const { return exp_ == 0 && num_ % 2 != 0; }

    // Valid only when is_integer().
    const BigInt& as_integer() const {
        if (exp_ != 0) throw std::logic_error("Dyadic::as_integer: not an integer: " + str());
        return num_;
    }

    Dyadic operator-() const { return raw(-num_, exp_); }

    Dyadic& operator+=(const Dyadic& o) {
        unsigned e = std::max(exp_, o.exp_);
        num_ = (num_ << (e - exp_)) + (o.num_ << (e - o.exp_));
        exp_ = e;
        normalize();
        return *this;
    }
    Dyadic& operator-=(const Dyadic& o) { return *this += -o; }
    Dyadic& operator*=(const Dyadic& o) {
        num_ *= o.num_;
        exp_ += o.exp_;
        normalize();
        return *this;
    }

    friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
    friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
    friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.exp_ == b.exp_ && a.num_ == b.num_;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b) {
        unsigned e = std::max(a.exp_, b.exp_);
        return (a.num_ << (e - a.exp_)) < (b.num_ << (e - b.exp_));
    }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return !(a < b); }

    Dyadic abs() const { return num_ < 0 ? -*this : *this; }

    // "3", "-5", "1/2", "-7/4".
    std::string str() const {
        if (exp_ == 0) return num_.str();
        return num_.str() + "/" + (BigInt(1) << exp_).str();
    }

    // Accepts the same shapes str() produces; the denominator must be a
    // power of two.
    static Dyadic parse(const std::string& text);

    friend std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.str(); }

private:
    static Dyadic raw(BigInt n, unsigned e) {
        Dyadic d;
        d.num_ = std::move(n);
        d.exp_ = e;
        return d;
    }

    void normalize() {
        if (num_ == 0) {
            exp_ = 0;
            return;
        }
        while (exp_ > 0 && num_ % 2 == 0) {
            num_ >>= 1;
            --exp_;
        }
    }

    BigInt num_;
    unsigned exp_;
};

inline Dyadic Dyadic::parse(const std::string& text) {
    auto bad = [&] { throw ParseError("bad dyadic weight '" + text + "'"); };
    if (text.empty()) bad();
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Dyadic(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den <= 0) bad();
        unsigned exp = 0;
        while (den % 2 == 0) {
            den >>= 1;
            ++exp;
        }
        if (den != 1) bad();  // denominator must be a power of two
        return ratio(std::move(num), exp);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const ParseError*>(&e)) throw;
        bad();
    }
    return Dyadic();  // unreachable
}

} // namespace thetadet
