#include "vilenkin/hardy.hpp"

#include "vilenkin/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vilenkin {

GridFunction conditional_expectation(const GridFunction& f, std::size_t level) {
    const RadixProfile& profile = f.profile;
    if (level > profile.resolution())
        throw std::out_of_range("level exceeds resolution");
    const std::int64_t total = profile.size();
    const std::int64_t cell = profile.order(level);
    const std::int64_t members = total / cell;

    GridFunction out = GridFunction::zeros(profile);
    for (std::int64_t r = 0; r < cell; ++r) {
        Complex acc{0.0, 0.0};
        for (std::int64_t j = 0; j < members; ++j)
            acc += f.samples[static_cast<std::size_t>(r + j * cell)];
        acc /= static_cast<double>(members);
        for (std::int64_t j = 0; j < members; ++j)
            out.samples[static_cast<std::size_t>(r + j * cell)] = acc;
    }
    return out;
}

MartingaleView martingale_view(const GridFunction& f) {
    MartingaleView view{f.profile, {}};
    view.levels.reserve(f.profile.resolution() + 1);
    for (std::size_t k = 0; k <= f.profile.resolution(); ++k)
        view.levels.push_back(conditional_expectation(f, k));
    return view;
}

GridFunction maximal_function(const GridFunction& f) {
    GridFunction out = GridFunction::zeros(f.profile);
    for (std::size_t k = 0; k <= f.profile.resolution(); ++k) {
        const GridFunction level = conditional_expectation(f, k);
        for (std::size_t i = 0; i < out.samples.size(); ++i)
            out.samples[i].real(std::max(out.samples[i].real(), std::abs(level.samples[i])));
    }
    return out;
}

namespace {

double lp_norm(const std::vector<Complex>& values, double p) {
    double acc = 0.0;
    for (const Complex& v : values)
        acc += std::pow(std::abs(v), p);
    acc /= static_cast<double>(values.size());
    return std::pow(acc, 1.0 / p);
}

double weak_lp_norm(const std::vector<Complex>& values, double p) {
    std::vector<double> mags(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        mags[i] = std::abs(values[i]);
    std::sort(mags.begin(), mags.end());

    // The sup of lambda * mu(|f| > lambda)^(1/p) over lambda > 0 is
    // attained in the limit lambda -> v from below, for v a value of |f|;
    // there mu(|f| > lambda) = mu(|f| >= v) = (count of entries >= v)/n.
    const double n = static_cast<double>(mags.size());
    double best = 0.0;
    std::size_t i = 0;
    while (i < mags.size()) {
        std::size_t j = i;
        while (j + 1 < mags.size() && mags[j + 1] == mags[i])
            ++j;
        const double v = mags[i];
        if (v > 0.0) {
            const double measure = static_cast<double>(mags.size() - i) / n;
            best = std::max(best, v * std::pow(measure, 1.0 / p));
        }
        i = j + 1;
    }
    return best;
}

} // namespace

double quasi_norm(const GridFunction& f, const QuasiNormParams& params) {
    if (!(params.p > 0.0) || !std::isfinite(params.p))
        throw std::invalid_argument("quasi-norm exponent must be positive and finite");
    switch (params.flavor) {
    case NormFlavor::Lp:
        return lp_norm(f.samples, params.p);
    case NormFlavor::weakLp:
        return weak_lp_norm(f.samples, params.p);
    case NormFlavor::Hp:
        return lp_norm(maximal_function(f).samples, params.p);
    }
    throw std::logic_error("unknown norm flavor");
}

double modulus_of_continuity(const GridFunction& f, std::size_t level, double p) {
    if (level > f.profile.resolution())
        throw std::out_of_range("level exceeds resolution");
    const GridFunction approx = conditional_expectation(f, level);
    GridFunction residual = GridFunction::zeros(f.profile);
    for (std::size_t i = 0; i < f.samples.size(); ++i)
        residual.samples[i] = f.samples[i] - approx.samples[i];
    return quasi_norm(residual, {p, NormFlavor::Hp});
}

GridFunction sigma_star(const GridFunction& f, std::int64_t n_max) {
    if (n_max < 1 || n_max > f.profile.size())
        throw std::out_of_range("sigma* range out of [1, M_R]");
    const Spectrum s = forward(f);
    GridFunction out = GridFunction::zeros(f.profile);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const GridFunction mean = fejer_mean(s, n);
        for (std::size_t i = 0; i < out.samples.size(); ++i)
            out.samples[i].real(std::max(out.samples[i].real(), std::abs(mean.samples[i])));
    }
    return out;
}

GridFunction sigma_sharp(const GridFunction& f) {
    const Spectrum s = forward(f);
    GridFunction out = GridFunction::zeros(f.profile);
    for (std::size_t k = 0; k <= f.profile.resolution(); ++k) {
        const GridFunction mean = fejer_mean(s, f.profile.order(k));
        for (std::size_t i = 0; i < out.samples.size(); ++i)
            out.samples[i].real(std::max(out.samples[i].real(), std::abs(mean.samples[i])));
    }
    return out;
}

GridFunction sigma_tilde(const GridFunction& f, double p, std::int64_t n_max) {
    if (!(p > 0.0) || p > 0.5)
        throw std::invalid_argument("sigma-tilde requires 0 < p <= 1/2");
    if (n_max < 1 || n_max > f.profile.size())
        throw std::out_of_range("sigma-tilde range out of [1, M_R]");
    const int log_power = 2 * static_cast<int>(std::floor(0.5 + p));
    const Spectrum s = forward(f);
    GridFunction out = GridFunction::zeros(f.profile);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const double weight = std::pow(static_cast<double>(n), 1.0 / p - 2.0) *
                              std::pow(std::log2(static_cast<double>(n) + 1.0), log_power);
        const GridFunction mean = fejer_mean(s, n);
        for (std::size_t i = 0; i < out.samples.size(); ++i)
            out.samples[i].real(std::max(out.samples[i].real(), std::abs(mean.samples[i]) / weight));
    }
    return out;
}

} // namespace vilenkin
