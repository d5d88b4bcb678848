#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace infomarket {

/// Exact rational number, kept in lowest terms with a positive denominator.
///
/// Every probability, measure, payoff, and price in this library is a
/// Rational; no computation path touches floating point. Arithmetic reduces
/// eagerly and throws std::overflow_error if a reduced result no longer fits
/// in 64 bits -- results are exact or refused, never rounded.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return (num_ > 0) - (num_ < 0); }

    /// "p/q", or plain "p" when the denominator is 1.
    std::string str() const;

    /// Parses "p/q" or "p". Throws std::invalid_argument on anything else.
    static Rational parse(std::string_view text);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Decimal expansion with at most `significant` significant digits, computed
/// by exact long division. Non-terminating or overlong expansions get a
/// trailing "..." so truncation is never mistaken for exactness.
std::string to_decimal(const Rational& r, int significant = 20);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace infomarket
