#include "vilenkin/kernels.hpp"

#include <stdexcept>

namespace vilenkin {

namespace {

void check_degree(std::int64_t n, const RadixProfile& profile) {
    if (n < 1 || n > profile.size())
        throw std::out_of_range("kernel degree out of range [1, M_R]");
}

} // namespace

GridFunction dirichlet_kernel(std::int64_t n, const RadixProfile& profile) {
    check_degree(n, profile);
    Spectrum s = Spectrum::zeros(profile);
    for (std::int64_t j = 0; j < n; ++j)
        s.coefficients[static_cast<std::size_t>(j)] = Complex{1.0, 0.0};
    return inverse(s);
}

GridFunction fejer_kernel(std::int64_t n, const RadixProfile& profile) {
    check_degree(n, profile);
    Spectrum s = Spectrum::zeros(profile);
    const double dn = static_cast<double>(n);
    for (std::int64_t j = 0; j < n; ++j)
        s.coefficients[static_cast<std::size_t>(j)] = Complex{static_cast<double>(n - j) / dn, 0.0};
    return inverse(s);
}

GridFunction partial_sum(const Spectrum& s, std::int64_t n) {
    if (n < 0 || n > s.profile.size())
        throw std::out_of_range("partial sum degree exceeds resolution");
    Spectrum cut = Spectrum::zeros(s.profile);
    for (std::int64_t j = 0; j < n; ++j)
        cut.coefficients[static_cast<std::size_t>(j)] = s.coefficients[static_cast<std::size_t>(j)];
    return inverse(cut);
}

GridFunction partial_sum(const GridFunction& f, std::int64_t n) {
    return partial_sum(forward(f), n);
}

GridFunction fejer_mean(const Spectrum& s, std::int64_t n) {
    if (n < 1 || n > s.profile.size())
        throw std::out_of_range("Fejer mean degree out of range [1, M_R]");
    Spectrum weighted = Spectrum::zeros(s.profile);
    const double dn = static_cast<double>(n);
    for (std::int64_t j = 0; j < n; ++j)
        weighted.coefficients[static_cast<std::size_t>(j)] =
            s.coefficients[static_cast<std::size_t>(j)] * (static_cast<double>(n - j) / dn);
    return inverse(weighted);
}

GridFunction fejer_mean(const GridFunction& f, std::int64_t n) {
    return fejer_mean(forward(f), n);
}

GridFunction fejer_mean_direct(const GridFunction& f, std::int64_t n) {
    if (n < 1 || n > f.profile.size())
        throw std::out_of_range("Fejer mean degree out of range [1, M_R]");
    const Spectrum s = forward(f);
    GridFunction acc = GridFunction::zeros(f.profile);
    for (std::int64_t k = 1; k <= n; ++k) {
        const GridFunction sk = partial_sum(s, k);
        for (std::size_t i = 0; i < acc.samples.size(); ++i)
            acc.samples[i] += sk.samples[i];
    }
    const double scale = 1.0 / static_cast<double>(n);
    for (Complex& v : acc.samples)
        v *= scale;
    return acc;
}

GridFunction convolve(const GridFunction& f, const GridFunction& g) {
    if (!(f.profile == g.profile))
        throw std::invalid_argument("profile mismatch in convolve");
    const RadixProfile& profile = f.profile;
    const std::int64_t total = profile.size();
    const std::size_t axes = profile.resolution();

    std::vector<int> digit(static_cast<std::size_t>(total) * axes);
    for (std::int64_t i = 0; i < total; ++i) {
        const NaturalIndex d = digits_of(i, profile);
        for (std::size_t k = 0; k < axes; ++k)
            digit[static_cast<std::size_t>(i) * axes + k] = d.digits[k];
    }

    GridFunction out = GridFunction::zeros(profile);
    const double scale = 1.0 / static_cast<double>(total);
    for (std::int64_t x = 0; x < total; ++x) {
        const int* xd = digit.data() + static_cast<std::size_t>(x) * axes;
        Complex acc{0.0, 0.0};
        for (std::int64_t t = 0; t < total; ++t) {
            const int* td = digit.data() + static_cast<std::size_t>(t) * axes;
            std::int64_t diff = 0;
            for (std::size_t k = 0; k < axes; ++k) {
                const int m = profile.radix(k);
                diff += static_cast<std::int64_t>((xd[k] - td[k] + m) % m) * profile.order(k);
            }
            acc += f.samples[static_cast<std::size_t>(t)] * g.samples[static_cast<std::size_t>(diff)];
        }
        out.samples[static_cast<std::size_t>(x)] = acc * scale;
    }
    return out;
}

} // namespace vilenkin
