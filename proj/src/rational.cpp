#include "pslab/rational.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace pslab {

BigUint::BigUint(uint64_t v) {
    while (v) {
        limbs_.push_back(static_cast<uint32_t>(v & 0xffffffffu));
        v >>= 32;
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

int BigUint::cmp(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigUint operator+(const BigUint& a, const BigUint& b) {
    BigUint r;
    const size_t n = std::max(a.limbs_.size(), b.limbs_.size());
    r.limbs_.resize(n);
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
        uint64_t s = carry;
        if (i < a.limbs_.size()) s += a.limbs_[i];
        if (i < b.limbs_.size()) s += b.limbs_[i];
        r.limbs_[i] = static_cast<uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    if (carry) r.limbs_.push_back(static_cast<uint32_t>(carry));
    return r;
}

BigUint operator-(const BigUint& a, const BigUint& b) {
    assert(BigUint::cmp(a, b) >= 0);
    BigUint r;
    r.limbs_.resize(a.limbs_.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        int64_t s = static_cast<int64_t>(a.limbs_[i]) - borrow;
        if (i < b.limbs_.size()) s -= b.limbs_[i];
        if (s < 0) {
            s += (int64_t(1) << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.limbs_[i] = static_cast<uint32_t>(s);
    }
    r.trim();
    return r;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
    BigUint r;
    if (a.is_zero() || b.is_zero()) return r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.limbs_.size(); ++j) {
            uint64_t cur = r.limbs_[i + j] +
                           static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
            r.limbs_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        size_t k = i + b.limbs_.size();
        while (carry) {
            uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

void BigUint::shr1() {
    uint32_t carry = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        uint32_t next = limbs_[i] & 1u;
        limbs_[i] = (limbs_[i] >> 1) | (carry << 31);
        carry = next;
    }
    trim();
}

void BigUint::shl1() {
    uint32_t carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint32_t next = limbs_[i] >> 31;
        limbs_[i] = (limbs_[i] << 1) | carry;
        carry = next;
    }
    if (carry) limbs_.push_back(carry);
}

BigUint BigUint::gcd(BigUint a, BigUint b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int shift = 0;
    while (a.is_even() && b.is_even()) {
        a.shr1();
        b.shr1();
        ++shift;
    }
    while (a.is_even()) a.shr1();
    while (!b.is_zero()) {
        while (b.is_even()) b.shr1();
        if (cmp(a, b) > 0) std::swap(a, b);
        b = b - a;
    }
    while (shift--) a.shl1();
    return a;
}

uint32_t BigUint::divmod_small(uint32_t d) {
    uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<uint32_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<uint32_t>(rem);
}

size_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    uint32_t top = limbs_.back();
    size_t bits = (limbs_.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

double BigUint::to_double_exp(long& exp2) const {
    if (limbs_.empty()) {
        exp2 = 0;
        return 0.0;
    }
    const size_t bits = bit_length();
    // fold the top three limbs, then keep exactly the top <= 64 bits
    unsigned __int128 t = 0;
    const size_t consumed = std::min<size_t>(limbs_.size(), 3);
    for (size_t i = limbs_.size(); i-- > limbs_.size() - consumed;)
        t = (t << 32) | limbs_[i];
    size_t tb = bits - 32 * (limbs_.size() - consumed);  // significant bits in t
    if (tb > 64) {
        t >>= (tb - 64);
        tb = 64;
    }
    exp2 = static_cast<long>(bits);
    return static_cast<double>(static_cast<uint64_t>(t)) *
           std::pow(2.0, -static_cast<double>(tb));
}

double BigUint::to_double() const {
    long e;
    double m = to_double_exp(e);
    return std::ldexp(m, static_cast<int>(e));
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    BigUint tmp = *this;
    std::string s;
    while (!tmp.is_zero()) s += char('0' + tmp.divmod_small(10));
    std::reverse(s.begin(), s.end());
    return s;
}

Rational::Rational(int64_t n) : Rational(n, 1) {}

Rational::Rational(int64_t n, int64_t d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    sign_ = (n == 0) ? 0 : ((n < 0) == (d < 0) ? 1 : -1);
    num_ = BigUint(static_cast<uint64_t>(n < 0 ? -n : n));
    den_ = BigUint(static_cast<uint64_t>(d < 0 ? -d : d));
    normalize();
}

Rational Rational::make(int sign, BigUint num, BigUint den) {
    if (den.is_zero()) throw std::invalid_argument("Rational: zero denominator");
    Rational r;
    r.sign_ = num.is_zero() ? 0 : sign;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.normalize();
    return r;
}

// Exact division helper (quotient assumed exact): binary long division.
static BigUint exact_div(const BigUint& a, const BigUint& b) {
    if (BigUint::cmp(b, BigUint(1)) == 0) return a;
    // binary long division
    BigUint q(0), rem(0);
    // iterate bits of a from most significant
    // reconstruct bit count
    std::string bits;
    {
        BigUint t = a;
        while (!t.is_zero()) {
            bits += (t.is_even() ? '0' : '1');
            t.shr1();
        }
        std::reverse(bits.begin(), bits.end());
    }
    for (char c : bits) {
        rem.shl1();
        if (c == '1') rem = rem + BigUint(1);
        q.shl1();
        if (BigUint::cmp(rem, b) >= 0) {
            rem = rem - b;
            q = q + BigUint(1);
        }
    }
    return q;
}

void Rational::normalize() {
    if (sign_ == 0 || num_.is_zero()) {
        sign_ = 0;
        num_ = BigUint(0);
        den_ = BigUint(1);
        return;
    }
    BigUint g = BigUint::gcd(num_, den_);
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigUint lhs = a.num_ * b.den_;
    BigUint rhs = b.num_ * a.den_;
    BigUint den = a.den_ * b.den_;
    if (a.sign_ == b.sign_) return Rational::make(a.sign_, lhs + rhs, std::move(den));
    int c = BigUint::cmp(lhs, rhs);
    if (c == 0) return Rational(0);
    return c > 0 ? Rational::make(a.sign_, lhs - rhs, std::move(den))
                 : Rational::make(b.sign_, rhs - lhs, std::move(den));
}

Rational operator-(const Rational& a, const Rational& b) {
    return a + Rational::make(-b.sign_, b.num_, b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return Rational(0);
    return Rational::make(a.sign_ * b.sign_, a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.sign_ == 0) throw std::invalid_argument("Rational: division by zero");
    if (a.sign_ == 0) return Rational(0);
    return Rational::make(a.sign_ * b.sign_, a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const Rational& a, const Rational& b) {
    return a.sign_ == b.sign_ && a.num_ == b.num_ && a.den_ == b.den_;
}

int Rational::cmp(const Rational& a, const Rational& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    if (a.sign_ == 0) return 0;
    int c = BigUint::cmp(a.num_ * b.den_, b.num_ * a.den_);
    return a.sign_ > 0 ? c : -c;
}

double Rational::to_double() const {
    if (sign_ == 0) return 0.0;
    long en, ed;
    const double mn = num_.to_double_exp(en);
    const double md = den_.to_double_exp(ed);
    return sign_ * std::ldexp(mn / md, static_cast<int>(en - ed));
}

std::string Rational::to_string() const {
    std::string s;
    if (sign_ < 0) s += "-";
    s += num_.to_string();
    if (!(BigUint::cmp(den_, BigUint(1)) == 0)) s += "/" + den_.to_string();
    return s;
}

}  // namespace pslab
