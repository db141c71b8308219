#include "vilenkin/group.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace vilenkin {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in exact arithmetic");
    return out;
}

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0)
        throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator+(const Rational& other) const {
    const std::int64_t g = std::gcd(den, other.den);
    const std::int64_t scale = other.den / g;
    std::int64_t lhs = checked_mul(num, scale);
    std::int64_t rhs = checked_mul(other.num, den / g);
    std::int64_t n = 0;
    if (__builtin_add_overflow(lhs, rhs, &n))
        throw std::overflow_error("integer overflow in exact arithmetic");
    return Rational(n, checked_mul(den, scale));
}

Rational Rational::operator*(const Rational& other) const {
    // Cross-reduce before multiplying to keep intermediates small.
    const std::int64_t g1 = std::gcd(num < 0 ? -num : num, other.den);
    const std::int64_t g2 = std::gcd(other.num < 0 ? -other.num : other.num, den);
    return Rational(checked_mul(num / g1, other.num / g2),
                    checked_mul(den / g2, other.den / g1));
}

RadixProfile::RadixProfile(const std::vector<int>& radices, std::size_t resolution) {
    if (radices.empty())
        throw std::invalid_argument("radix sequence must not be empty");
    if (resolution == 0)
        throw std::invalid_argument("resolution must be at least 1");
    radices_.reserve(resolution);
    for (std::size_t k = 0; k < resolution; ++k) {
        const int m = radices[k % radices.size()];
        if (m < 2) {
            std::ostringstream msg;
            msg << "invalid radix " << m << " at position " << (k % radices.size())
                << ": every radix must be >= 2";
            throw std::invalid_argument(msg.str());
        }
        radices_.push_back(m);
    }
    orders_.reserve(resolution + 1);
    orders_.push_back(1);
    for (std::size_t k = 0; k < resolution; ++k) {
        std::int64_t next = 0;
        if (__builtin_mul_overflow(orders_.back(), static_cast<std::int64_t>(radices_[k]), &next))
            throw std::overflow_error("resolution too large: group order exceeds exact integer range");
        orders_.push_back(next);
    }
}

RadixProfile::RadixProfile(const std::vector<int>& radices)
    : RadixProfile(radices, radices.size()) {}

std::vector<int> parse_radices(const std::string& text) {
    std::vector<int> out;
    std::string entry;
    std::istringstream in(text);
    while (std::getline(in, entry, ',')) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(entry, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("radix list entry '" + entry + "' is not an integer");
        }
        if (pos != entry.size())
            throw std::invalid_argument("radix list entry '" + entry + "' is not an integer");
        if (value < 2)
            throw std::invalid_argument("radix list entry '" + entry + "' is invalid: radices must be >= 2");
        out.push_back(value);
    }
    if (out.empty())
        throw std::invalid_argument("radix list is empty");
    return out;
}

NaturalIndex digits_of(std::int64_t n, const RadixProfile& profile) {
    if (n < 0 || n >= profile.size())
        throw std::out_of_range("index out of representable range at this resolution");
    NaturalIndex out;
    out.value = n;
    out.digits.resize(profile.resolution());
    std::int64_t rest = n;
    for (std::size_t k = 0; k < profile.resolution(); ++k) {
        const int m = profile.radix(k);
        out.digits[k] = static_cast<int>(rest % m);
        rest /= m;
        if (out.digits[k] != 0)
            out.order = k;
    }
    return out;
}

std::int64_t index_of(const GroupPoint& x, const RadixProfile& profile) {
    if (x.digits.size() != profile.resolution())
        throw std::invalid_argument("point does not match profile resolution");
    std::int64_t idx = 0;
    for (std::size_t k = 0; k < profile.resolution(); ++k) {
        const int d = x.digits[k];
        if (d < 0 || d >= profile.radix(k))
            throw std::out_of_range("digit out of range for its radix");
        idx += static_cast<std::int64_t>(d) * profile.order(k);
    }
    return idx;
}

GroupPoint point_of(std::int64_t index, const RadixProfile& profile) {
    NaturalIndex n = digits_of(index, profile);
    return GroupPoint{std::move(n.digits)};
}

GroupPoint group_add(const GroupPoint& x, const GroupPoint& y, const RadixProfile& profile) {
    if (x.digits.size() != profile.resolution() || y.digits.size() != profile.resolution())
        throw std::invalid_argument("profile mismatch in group_add");
    GroupPoint out;
    out.digits.resize(profile.resolution());
    for (std::size_t k = 0; k < profile.resolution(); ++k)
        out.digits[k] = (x.digits[k] + y.digits[k]) % profile.radix(k);
    return out;
}

GroupPoint group_sub(const GroupPoint& x, const GroupPoint& y, const RadixProfile& profile) {
    if (x.digits.size() != profile.resolution() || y.digits.size() != profile.resolution())
        throw std::invalid_argument("profile mismatch in group_sub");
    GroupPoint out;
    out.digits.resize(profile.resolution());
    for (std::size_t k = 0; k < profile.resolution(); ++k) {
        const int m = profile.radix(k);
        out.digits[k] = (x.digits[k] - y.digits[k] + m) % m;
    }
    return out;
}

std::int64_t cylinder_coset(const GroupPoint& x, std::size_t level, const RadixProfile& profile) {
    if (level > profile.resolution())
        throw std::out_of_range("cylinder level exceeds resolution");
    return index_of(x, profile) % profile.order(level);
}

Rational cell_measure(std::size_t level, const RadixProfile& profile) {
    if (level > profile.resolution())
        throw std::out_of_range("cylinder level exceeds resolution");
    return Rational(1, profile.order(level));
}

} // namespace vilenkin
