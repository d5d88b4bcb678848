#include "infomarket/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace infomarket {

namespace {

using int128 = __int128;

int128 abs128(int128 v) { return v < 0 ? -v : v; }

int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr int128 kMin64 = std::numeric_limits<std::int64_t>::min();
constexpr int128 kMax64 = std::numeric_limits<std::int64_t>::max();

// Reduce num/den to lowest terms with den > 0 and narrow back to 64 bits.
Rational make_reduced(int128 num, int128 den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return Rational();
    int128 g = gcd128(num, den);
    num /= g;
    den /= g;
    if (num < kMin64 || num > kMax64 || den > kMax64)
        throw std::overflow_error("rational overflow");
    return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    int128 n = num;
    int128 d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return;
    int128 g = gcd128(n, d);
    n /= g;
    d /= g;
    if (n < kMin64 || n > kMax64 || d > kMax64) throw std::overflow_error("rational overflow");
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
}

Rational operator+(const Rational& a, const Rational& b) {
    return make_reduced(int128(a.num_) * b.den_ + int128(b.num_) * a.den_,
                        int128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return make_reduced(int128(a.num_) * b.den_ - int128(b.num_) * a.den_,
                        int128(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return make_reduced(int128(a.num_) * b.num_, int128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("rational division by zero");
    return make_reduced(int128(a.num_) * b.den_, int128(a.den_) * b.num_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int128 lhs = int128(a.num_) * b.den_;
    int128 rhs = int128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
        s += '/';
        s += std::to_string(den_);
    }
    return s;
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view part) {
        std::int64_t value = 0;
        const char* first = part.data();
        const char* last = part.data() + part.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last)
            throw std::invalid_argument("malformed rational '" + std::string(part) + "'");
        return value;
    };
    if (text.empty()) throw std::invalid_argument("malformed rational ''");
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    std::int64_t num = parse_int(text.substr(0, slash));
    std::int64_t den = parse_int(text.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("malformed rational '" + std::string(text) +
                                              "': denominator must be positive");
    return Rational(num, den);
}

std::string to_decimal(const Rational& r, int significant) {
    if (significant < 1) significant = 1;
    if (r.is_zero()) return "0";

    std::string out;
    int128 num = r.num();
    if (num < 0) {
        out += '-';
        num = -num;
    }
    int128 den = r.den();

    std::string integral = [&] {
        int128 q = num / den;
        if (q == 0) return std::string("0");
        std::string digits;
        while (q > 0) {
            digits += char('0' + int(q % 10));
            q /= 10;
        }
        return std::string(digits.rbegin(), digits.rend());
    }();
    out += integral;

    int sig_used = integral == "0" ? 0 : int(integral.size());
    int128 rem = num % den;
    if (rem == 0) return out;
    if (sig_used >= significant) {
        out += "...";
        return out;
    }

    out += '.';
    bool truncated = true;
    std::string frac;
    while (int(frac.size()) < 64) {  // hard stop; leading zeros don't count as significant
        rem *= 10;
        int digit = int(rem / den);
        rem %= den;
        frac += char('0' + digit);
        if (digit != 0 || sig_used > 0) ++sig_used;
        if (rem == 0) {
            truncated = false;
            break;
        }
        if (sig_used >= significant) break;
    }
    out += frac;
    if (truncated) out += "...";
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace infomarket
