#include "vilenkin/transform.hpp"

#include <cmath>
#include <stdexcept>

namespace vilenkin {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_samples(const RadixProfile& profile, std::size_t count) {
    if (static_cast<std::int64_t>(count) != profile.size())
        throw std::invalid_argument("sample count does not match profile size");
}

// One dense DFT of size m along every digit axis. `sign` +1 synthesizes
// (uses the roots as-is), -1 analyzes (uses conjugates).
void staged_transform(std::vector<Complex>& data, const RadixProfile& profile,
                      const RootTable& table, int sign) {
    const std::int64_t total = profile.size();
    std::vector<Complex> slot;
    for (std::size_t axis = 0; axis < profile.resolution(); ++axis) {
        const int m = profile.radix(axis);
        const std::int64_t stride = profile.order(axis);
        const std::int64_t block = stride * m;
        slot.resize(static_cast<std::size_t>(m));
        for (std::int64_t base = 0; base < total; base += block) {
            for (std::int64_t inner = 0; inner < stride; ++inner) {
                const std::int64_t at = base + inner;
                for (int j = 0; j < m; ++j)
                    slot[static_cast<std::size_t>(j)] = data[static_cast<std::size_t>(at + j * stride)];
                for (int a = 0; a < m; ++a) {
                    Complex acc = slot[0];
                    for (int j = 1; j < m; ++j) {
                        const int t = static_cast<int>((static_cast<std::int64_t>(a) * j) % m);
                        Complex w = table.root(axis, t);
                        if (sign < 0)
                            w = std::conj(w);
                        acc += slot[static_cast<std::size_t>(j)] * w;
                    }
                    data[static_cast<std::size_t>(at + a * stride)] = acc;
                }
            }
        }
    }
}

} // namespace

GridFunction GridFunction::zeros(const RadixProfile& profile) {
    return GridFunction{profile, std::vector<Complex>(static_cast<std::size_t>(profile.size()))};
}

GridFunction GridFunction::constant(const RadixProfile& profile, Complex value) {
    return GridFunction{profile,
                        std::vector<Complex>(static_cast<std::size_t>(profile.size()), value)};
}

Spectrum Spectrum::zeros(const RadixProfile& profile) {
    return Spectrum{profile, std::vector<Complex>(static_cast<std::size_t>(profile.size()))};
}

RootTable::RootTable(const RadixProfile& profile) {
    roots_.resize(profile.resolution());
    for (std::size_t k = 0; k < profile.resolution(); ++k) {
        const int m = profile.radix(k);
        roots_[k].resize(static_cast<std::size_t>(m));
        for (int t = 0; t < m; ++t)
            roots_[k][static_cast<std::size_t>(t)] =
                std::polar(1.0, kTwoPi * static_cast<double>(t) / static_cast<double>(m));
    }
}

Complex character(std::int64_t n, const GroupPoint& x, const RadixProfile& profile) {
    const RootTable table(profile);
    const NaturalIndex digits = digits_of(n, profile);
    if (x.digits.size() != profile.resolution())
        throw std::invalid_argument("point does not match profile resolution");
    Complex out{1.0, 0.0};
    for (std::size_t k = 0; k < profile.resolution(); ++k) {
        const int t = static_cast<int>(
            (static_cast<std::int64_t>(digits.digits[k]) * x.digits[k]) % profile.radix(k));
        if (t != 0)
            out *= table.root(k, t);
    }
    return out;
}

GridFunction character_function(std::int64_t n, const RadixProfile& profile) {
    Spectrum s = Spectrum::zeros(profile);
    if (n < 0 || n >= profile.size())
        throw std::out_of_range("character index out of range");
    s.coefficients[static_cast<std::size_t>(n)] = Complex{1.0, 0.0};
    return inverse(s);
}

Spectrum forward(const GridFunction& f) {
    check_samples(f.profile, f.samples.size());
    const RootTable table(f.profile);
    Spectrum out{f.profile, f.samples};
    staged_transform(out.coefficients, f.profile, table, -1);
    const double scale = 1.0 / static_cast<double>(f.profile.size());
    for (Complex& c : out.coefficients)
        c *= scale;
    return out;
}

GridFunction inverse(const Spectrum& s) {
    check_samples(s.profile, s.coefficients.size());
    const RootTable table(s.profile);
    GridFunction out{s.profile, s.coefficients};
    staged_transform(out.samples, s.profile, table, +1);
    return out;
}

Spectrum forward_naive(const GridFunction& f) {
    check_samples(f.profile, f.samples.size());
    const RadixProfile& profile = f.profile;
    const RootTable table(profile);
    const std::int64_t total = profile.size();
    const std::size_t axes = profile.resolution();

    // Digit tables once, so the inner loop is pure lookups.
    std::vector<std::vector<int>> digit(static_cast<std::size_t>(total));
    for (std::int64_t i = 0; i < total; ++i)
        digit[static_cast<std::size_t>(i)] = digits_of(i, profile).digits;

    Spectrum out = Spectrum::zeros(profile);
    const double scale = 1.0 / static_cast<double>(total);
    for (std::int64_t n = 0; n < total; ++n) {
        const std::vector<int>& nd = digit[static_cast<std::size_t>(n)];
        Complex acc{0.0, 0.0};
        for (std::int64_t x = 0; x < total; ++x) {
            const std::vector<int>& xd = digit[static_cast<std::size_t>(x)];
            Complex chi{1.0, 0.0};
            for (std::size_t k = 0; k < axes; ++k) {
                const int t = static_cast<int>(
                    (static_cast<std::int64_t>(nd[k]) * xd[k]) % profile.radix(k));
                if (t != 0)
                    chi *= table.root(k, t);
            }
            acc += f.samples[static_cast<std::size_t>(x)] * std::conj(chi);
        }
        out.coefficients[static_cast<std::size_t>(n)] = acc * scale;
    }
    return out;
}

GridFunction inverse_naive(const Spectrum& s) {
    check_samples(s.profile, s.coefficients.size());
    const RadixProfile& profile = s.profile;
    const RootTable table(profile);
    const std::int64_t total = profile.size();
    const std::size_t axes = profile.resolution();

    std::vector<std::vector<int>> digit(static_cast<std::size_t>(total));
    for (std::int64_t i = 0; i < total; ++i)
        digit[static_cast<std::size_t>(i)] = digits_of(i, profile).digits;

    GridFunction out = GridFunction::zeros(profile);
    for (std::int64_t x = 0; x < total; ++x) {
        const std::vector<int>& xd = digit[static_cast<std::size_t>(x)];
        Complex acc{0.0, 0.0};
        for (std::int64_t n = 0; n < total; ++n) {
            const std::vector<int>& nd = digit[static_cast<std::size_t>(n)];
            Complex chi{1.0, 0.0};
            for (std::size_t k = 0; k < axes; ++k) {
                const int t = static_cast<int>(
                    (static_cast<std::int64_t>(nd[k]) * xd[k]) % profile.radix(k));
                if (t != 0)
                    chi *= table.root(k, t);
            }
            acc += s.coefficients[static_cast<std::size_t>(n)] * chi;
        }
        out.samples[static_cast<std::size_t>(x)] = acc;
    }
    return out;
}

} // namespace vilenkin
