#include "vilenkin/constructions.hpp"

#include "vilenkin/hardy.hpp"
#include "vilenkin/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace vilenkin {

CounterexampleSpec::CounterexampleSpec(std::size_t level, RadixProfile p)
    : A(level), profile(std::move(p)) {
    if (A + 1 > profile.resolution())
        throw std::invalid_argument("witness level needs resolution >= A+1");
}

GridFunction build_counterexample(const CounterexampleSpec& spec) {
    const RadixProfile& profile = spec.profile;
    const std::int64_t ma = profile.order(spec.A);
    const std::int64_t ma1 = profile.order(spec.A + 1);

    GridFunction out = GridFunction::zeros(profile);
    for (std::int64_t idx = 0; idx < profile.size(); ++idx) {
        if (idx % ma1 == 0)
            out.samples[static_cast<std::size_t>(idx)] = Complex{static_cast<double>(ma1 - ma), 0.0};
        else if (idx % ma == 0)
            out.samples[static_cast<std::size_t>(idx)] = Complex{static_cast<double>(-ma), 0.0};
    }
    return out;
}

GridFunction counterexample_partial_sum(const CounterexampleSpec& spec, std::int64_t i) {
    const RadixProfile& profile = spec.profile;
    if (i < 0 || i > profile.size())
        throw std::out_of_range("partial sum index out of range");
    const std::int64_t ma = profile.order(spec.A);
    const std::int64_t ma1 = profile.order(spec.A + 1);

    if (i <= ma)
        return GridFunction::zeros(profile);
    if (i >= ma1)
        return build_counterexample(spec);

    // D_i - D_{M_A}
    const GridFunction di = dirichlet_kernel(i, profile);
    const GridFunction da = dirichlet_kernel(ma, profile);
    GridFunction out = GridFunction::zeros(profile);
    for (std::size_t x = 0; x < out.samples.size(); ++x)
        out.samples[x] = di.samples[x] - da.samples[x];
    return out;
}

Rational fejer_witness_value(const CounterexampleSpec& spec) {
    const std::int64_t ma = spec.profile.order(spec.A);
    const std::int64_t ma1 = spec.profile.order(spec.A + 1);
    const std::int64_t top = (spec.profile.radix(spec.A) - 1) * ma;
    return Rational(top, 2 * ma1) * Rational(top + 1, 1);
}

HardyRatioRow hardy_ratio(const CounterexampleSpec& spec, double p) {
    if (!(p > 0.0) || p > 1.0)
        throw std::invalid_argument("hardy_ratio requires 0 < p <= 1");

    const GridFunction witness = build_counterexample(spec);
    const GridFunction mean = fejer_mean(witness, spec.profile.order(spec.A + 1));
    GridFunction mean_mod = GridFunction::zeros(spec.profile);
    for (std::size_t i = 0; i < mean.samples.size(); ++i)
        mean_mod.samples[i] = Complex{std::abs(mean.samples[i]), 0.0};

    HardyRatioRow row;
    row.A = spec.A;
    row.p = p;
    row.M_A = spec.profile.order(spec.A);
    row.den_exact = quasi_norm(witness, {p, NormFlavor::Hp});
    row.num = quasi_norm(mean_mod, {p, NormFlavor::Hp});
    row.ratio = row.num / row.den_exact;
    row.envelope = p < 1.0 ? std::pow(static_cast<double>(row.M_A), 1.0 / p - 1.0)
                           : static_cast<double>(spec.A);
    row.c_est = row.ratio / row.envelope;
    return row;
}

} // namespace vilenkin
