#include "heapcrys/rational.hpp"

#include <gmpxx.h>

#include <climits>
#include <ostream>

#include "heapcrys/errors.hpp"

namespace heapcrys {

struct Rational::Big {
    mpq_class value;
};

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        const u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(i128 v) { return v > static_cast<i128>(LLONG_MIN) && v <= static_cast<i128>(LLONG_MAX); }

mpz_class to_mpz(i128 v) {
    const bool negative = v < 0;
    u128 magnitude = abs128(v);
    const auto high = static_cast<unsigned long>(magnitude >> 64);
    const auto low = static_cast<unsigned long>(magnitude & 0xffffffffffffffffULL);
    mpz_class result = high;
    result <<= 64;
    result += low;
    return negative ? mpz_class(-result) : result;
}

}  // namespace

Rational::Rational(long long numerator, long long denominator) {
    if (denominator == 0) throw Error("rational with zero denominator");
    i128 n = numerator;
    i128 d = denominator;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const u128 g = gcd128(abs128(n), static_cast<u128>(d));
    if (g > 1) {
        n /= static_cast<i128>(g);
        d /= static_cast<i128>(g);
    }
    if (fits(n) && fits(d)) {
        num_ = static_cast<long long>(n);
        den_ = static_cast<long long>(d);
    } else {
        assign_big(Big{mpq_class(to_mpz(n), to_mpz(d))});
    }
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && (s[start] == ' ' || s[start] == '\t')) ++start;
    s = s.substr(start);
    if (s.empty()) throw Error("empty rational literal");
    if (s[0] == '+') s = s.substr(1);
    mpq_class value;
    if (value.set_str(s, 10) != 0) throw Error("malformed rational literal '" + std::string(text) + "'");
    if (value.get_den() == 0) throw Error("rational with zero denominator: '" + std::string(text) + "'");
    value.canonicalize();
    Rational result;
    result.assign_big(Big{value});
    return result;
}

void Rational::assign_big(Big value) {
    const mpz_class& n = value.value.get_num();
    const mpz_class& d = value.value.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != LONG_MIN) {
        num_ = n.get_si();
        den_ = d.get_si();
        big_.reset();
        return;
    }
    big_ = std::make_shared<const Big>(std::move(value));
    num_ = 0;
    den_ = 1;
}

Rational::Big Rational::to_big() const {
    if (big_) return *big_;
    mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    return Big{q};
}

bool Rational::is_integer() const {
    if (big_) return big_->value.get_den() == 1;
    return den_ == 1;
}

int Rational::sign() const {
    if (big_) return sgn(big_->value);
    return (num_ > 0) - (num_ < 0);
}

std::string Rational::numerator_string() const {
    if (big_) return big_->value.get_num().get_str();
    return std::to_string(num_);
}

std::string Rational::denominator_string() const {
    if (big_) return big_->value.get_den().get_str();
    return std::to_string(den_);
}

std::string Rational::str() const {
    if (is_integer()) return numerator_string();
    return numerator_string() + "/" + denominator_string();
}

long long Rational::to_int64() const {
    if (big_ || den_ != 1) throw Error("rational " + str() + " is not a 64-bit integer");
    return num_;
}

Rational Rational::operator-() const {
    if (!big_) {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational r;
    r.assign_big(Big{-big_->value});
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            long long sum = 0;
            if (!__builtin_add_overflow(num_, rhs.num_, &sum) && sum != LLONG_MIN) {
                num_ = sum;
                return *this;
            }
        }
        const i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
        const i128 d = static_cast<i128>(den_) * rhs.den_;
        const u128 g = gcd128(abs128(n), static_cast<u128>(d));
        const i128 rn = g > 1 ? n / static_cast<i128>(g) : n;
        const i128 rd = g > 1 ? d / static_cast<i128>(g) : d;
        if (fits(rn) && fits(rd)) {
            num_ = static_cast<long long>(rn);
            den_ = static_cast<long long>(rd);
            return *this;
        }
    }
    Big a = to_big();
    a.value += rhs.to_big().value;
    assign_big(std::move(a));
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            long long product = 0;
            if (!__builtin_mul_overflow(num_, rhs.num_, &product) && product != LLONG_MIN) {
                num_ = product;
                return *this;
            }
        }
        const i128 n = static_cast<i128>(num_) * rhs.num_;
        const i128 d = static_cast<i128>(den_) * rhs.den_;
        const u128 g = gcd128(abs128(n), static_cast<u128>(d));
        const i128 rn = g > 1 ? n / static_cast<i128>(g) : n;
        const i128 rd = g > 1 ? d / static_cast<i128>(g) : d;
        if (fits(rn) && fits(rd)) {
            num_ = static_cast<long long>(rn);
            den_ = static_cast<long long>(rd);
            return *this;
        }
    }
    Big a = to_big();
    a.value *= rhs.to_big().value;
    assign_big(std::move(a));
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw Error("division by zero rational");
    if (!big_ && !rhs.big_) {
        i128 n = static_cast<i128>(num_) * rhs.den_;
        i128 d = static_cast<i128>(den_) * rhs.num_;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const u128 g = gcd128(abs128(n), static_cast<u128>(d));
        const i128 rn = g > 1 ? n / static_cast<i128>(g) : n;
        const i128 rd = g > 1 ? d / static_cast<i128>(g) : d;
        if (fits(rn) && fits(rd)) {
            num_ = static_cast<long long>(rn);
            den_ = static_cast<long long>(rd);
            return *this;
        }
    }
    Big a = to_big();
    a.value /= rhs.to_big().value;
    assign_big(std::move(a));
    return *this;
}

bool operator==(const Rational& lhs, const Rational& rhs) {
    if (!lhs.big_ && !rhs.big_) return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    if (static_cast<bool>(lhs.big_) != static_cast<bool>(rhs.big_)) return false;
    return lhs.big_->value == rhs.big_->value;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    if (!lhs.big_ && !rhs.big_) {
        const i128 a = static_cast<i128>(lhs.num_) * rhs.den_;
        const i128 b = static_cast<i128>(rhs.num_) * lhs.den_;
        return a <=> b;
    }
    const int c = cmp(lhs.to_big().value, rhs.to_big().value);
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& out, const Rational& value) { return out << value.str(); }

}  // namespace heapcrys
