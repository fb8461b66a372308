#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pslab {

// Minimal arbitrary-precision unsigned integer: little-endian 32-bit limbs.
// Supports exactly what exact rational arithmetic needs (add, sub, mul,
// compare, binary gcd, decimal printing).
class BigUint {
public:
    BigUint() = default;
    BigUint(uint64_t v);

    bool is_zero() const { return limbs_.empty(); }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

    static int cmp(const BigUint& a, const BigUint& b);
    friend bool operator==(const BigUint& a, const BigUint& b) { return cmp(a, b) == 0; }
    friend bool operator<(const BigUint& a, const BigUint& b) { return cmp(a, b) < 0; }

    friend BigUint operator+(const BigUint& a, const BigUint& b);
    friend BigUint operator-(const BigUint& a, const BigUint& b);  // requires a >= b
    friend BigUint operator*(const BigUint& a, const BigUint& b);

    void shr1();  // halve
    void shl1();  // double

    static BigUint gcd(BigUint a, BigUint b);  // binary gcd

    uint32_t divmod_small(uint32_t d);  // in-place divide, returns remainder

    size_t bit_length() const;
    double to_double() const;
    // mantissa in [0.5, 1) and exponent with value = mantissa * 2^exp2
    double to_double_exp(long& exp2) const;
    std::string to_string() const;  // decimal

private:
    void trim();
    std::vector<uint32_t> limbs_;
};

// Signed exact rational, always stored in lowest terms with positive
// denominator.
class Rational {
public:
    Rational() : sign_(0), num_(0), den_(1) {}
    Rational(int64_t n);
    Rational(int64_t n, int64_t d);

    static Rational make(int sign, BigUint num, BigUint den);

    int sign() const { return sign_; }
    const BigUint& num() const { return num_; }
    const BigUint& den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    // a < b
    static int cmp(const Rational& a, const Rational& b);
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }

    double to_double() const;
    std::string to_string() const;  // "num/den" (or "num" when den == 1)

private:
    void normalize();
    int sign_;      // -1, 0, +1
    BigUint num_;
    BigUint den_;
};

}  // namespace pslab
