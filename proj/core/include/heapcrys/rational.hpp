#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace heapcrys {

// Exact rational number. Values whose numerator and denominator fit in a
// signed 64-bit integer are stored inline; anything larger is promoted to a
// GMP rational and demoted again as soon as it fits.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long long numerator, long long denominator);

    static Rational parse(std::string_view text);

    [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] int sign() const;
    [[nodiscard]] bool is_big() const { return static_cast<bool>(big_); }

    // Numerator/denominator as decimal strings (exact for big values).
    [[nodiscard]] std::string numerator_string() const;
    [[nodiscard]] std::string denominator_string() const;
    [[nodiscard]] std::string str() const;

    // Throws heapcrys::Error if the value is not an integer fitting in 64 bits.
    [[nodiscard]] long long to_int64() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs);
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

private:
    struct Big;
    long long num_ = 0;
    long long den_ = 1;
    std::shared_ptr<const Big> big_;

    void assign_big(Big value);
    [[nodiscard]] Big to_big() const;
};

std::ostream& operator<<(std::ostream& out, const Rational& value);

}  // namespace heapcrys
