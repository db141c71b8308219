#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vilenkin {

/// Reduced fraction with positive denominator. Construction and arithmetic
/// throw std::overflow_error instead of wrapping.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    Rational operator+(const Rational& other) const;
    Rational operator*(const Rational& other) const;
    bool operator==(const Rational& other) const = default;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// A bounded radix sequence m_0..m_{R-1} together with the cumulative
/// orders M_0..M_R (M_0 = 1, M_{k+1} = m_k * M_k). The orders are exact
/// 64-bit integers; construction fails instead of overflowing.
///
/// A point of the group carries one digit per radix; its linear index is
/// idx = sum_k x_k * M_k, so the level-N cells are residue classes mod M_N.
class RadixProfile {
  public:
    /// Builds a profile of length `resolution` by cyclic extension of
    /// `radices` (m_k = radices[k % radices.size()]).
    RadixProfile(const std::vector<int>& radices, std::size_t resolution);

    /// Length == resolution.
    explicit RadixProfile(const std::vector<int>& radices);

    std::size_t resolution() const { return radices_.size(); }
    int radix(std::size_t k) const { return radices_[k]; }
    const std::vector<int>& radices() const { return radices_; }

    /// M_k for 0 <= k <= resolution().
    std::int64_t order(std::size_t k) const { return orders_[k]; }
    /// M_R, the number of points at this resolution.
    std::int64_t size() const { return orders_.back(); }

    bool operator==(const RadixProfile& other) const { return radices_ == other.radices_; }

  private:
    std::vector<int> radices_;
    std::vector<std::int64_t> orders_;
};

/// Parses a comma-separated radix list such as "2,3,2". Rejects empty
/// entries and entries < 2 with a message naming the offender.
std::vector<int> parse_radices(const std::string& text);

/// Group point as a digit vector, 0 <= digits[k] < m_k.
struct GroupPoint {
    std::vector<int> digits;
};

/// Mixed-radix expansion of 0 <= value < M_R along a profile.
struct NaturalIndex {
    std::int64_t value = 0;
    std::vector<int> digits;
    /// max{j : digits[j] != 0}, with order 0 for value 0.
    std::size_t order = 0;
};

/// Digits of n with respect to the profile, plus the expansion order |n|.
NaturalIndex digits_of(std::int64_t n, const RadixProfile& profile);

/// Linear index sum_k x_k * M_k of a point.
std::int64_t index_of(const GroupPoint& x, const RadixProfile& profile);

/// Point with the given linear index.
GroupPoint point_of(std::int64_t index, const RadixProfile& profile);

/// Componentwise (x_k + y_k) mod m_k.
GroupPoint group_add(const GroupPoint& x, const GroupPoint& y, const RadixProfile& profile);

/// Componentwise (x_k - y_k) mod m_k, the inverse operation of group_add.
GroupPoint group_sub(const GroupPoint& x, const GroupPoint& y, const RadixProfile& profile);

/// Identifier of the level-N cell containing x: the first N digits packed
/// as index_of(x) mod M_N. Cells at level 0 collapse to the whole group.
std::int64_t cylinder_coset(const GroupPoint& x, std::size_t level, const RadixProfile& profile);

/// Haar measure of a level-N cell, exactly 1/M_N.
Rational cell_measure(std::size_t level, const RadixProfile& profile);

} // namespace vilenkin
