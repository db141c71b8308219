#include "vilenkin/experiments.hpp"

#include "vilenkin/constructions.hpp"
#include "vilenkin/hardy.hpp"
#include "vilenkin/kernels.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace vilenkin {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::string join_doubles(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out += (i == 0 ? "" : ",") + format_double(values[i]);
    return out;
}

std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out += (i == 0 ? "" : ",") + std::to_string(values[i]);
    return out;
}

std::vector<std::string> meta_lines(const ExperimentConfig& c) {
    std::ostringstream cfg;
    cfg << "config: experiment=" << c.experiment << " radices=" << join_ints(c.radices)
        << " resolution=" << c.resolution << " p=" << join_doubles(c.p_list) << " A=" << c.a_min
        << ".." << c.a_max << " n_max=" << c.n_max << " index_set=" << c.index_set
        << " count=" << c.random_count << " seed=" << c.seed
        << " alpha=" << format_double(c.alpha) << " kernel=" << c.kernel_kind << ":" << c.kernel_n;
    return {std::string("vilenkin-lab ") + kVersion, cfg.str()};
}

GridFunction subtract(const GridFunction& a, const GridFunction& b) {
    GridFunction out = GridFunction::zeros(a.profile);
    for (std::size_t i = 0; i < out.samples.size(); ++i)
        out.samples[i] = a.samples[i] - b.samples[i];
    return out;
}

// Level N with M_N < n <= M_{N+1}; 0 for n = 1.
std::size_t block_level(std::int64_t n, const RadixProfile& profile) {
    if (n <= 1)
        return 0;
    return digits_of(n - 1, profile).order;
}

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

} // namespace

GridFunction random_function(const RadixProfile& profile, double alpha, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Spectrum s = Spectrum::zeros(profile);
    s.coefficients[0] = Complex{1.0, 0.0};
    for (std::int64_t n = 1; n < profile.size(); ++n) {
        const double magnitude = std::pow(static_cast<double>(n) + 1.0, -alpha);
        s.coefficients[static_cast<std::size_t>(n)] = std::polar(magnitude, kTwoPi * unit(rng));
    }
    return inverse(s);
}

GridFunction normalize_hp(const GridFunction& f, double p) {
    const double norm = quasi_norm(f, {p, NormFlavor::Hp});
    if (!(norm > 0.0))
        throw std::invalid_argument("cannot normalize the zero function");
    GridFunction out = f;
    for (Complex& v : out.samples)
        v /= norm;
    return out;
}

Report run_theorem1_bounded(const ExperimentConfig& config) {
    const bool all_indices = config.index_set == "all";
    if (!all_indices && config.index_set != "Mk")
        throw std::invalid_argument("index_set must be 'Mk' or 'all'");
    if (config.p_list.empty())
        throw std::invalid_argument("exponent list must not be empty");
    for (double p : config.p_list) {
        if (!(p > 0.0))
            throw std::invalid_argument("exponents must be positive");
        if (all_indices && !(p > 0.5 && p <= 1.0))
            throw std::invalid_argument("the all-indices sweep requires 1/2 < p <= 1");
    }

    const RadixProfile profile(config.radices, config.resolution);
    const std::int64_t n_max = config.n_max > 0 ? config.n_max : profile.size();
    if (n_max > profile.size())
        throw std::invalid_argument("n_max exceeds M_R");

    std::vector<std::int64_t> indices;
    if (all_indices) {
        for (std::int64_t n = 1; n <= n_max; ++n)
            indices.push_back(n);
    } else {
        for (std::size_t k = 0; k <= profile.resolution() && profile.order(k) <= n_max; ++k)
            indices.push_back(profile.order(k));
    }

    Report report({"p", "n", "max_ratio", "running_max"}, meta_lines(config));
    for (double p : config.p_list) {
        std::vector<double> max_ratio(indices.size(), 0.0);
        for (std::size_t i = 0; i < config.random_count; ++i) {
            const GridFunction f = normalize_hp(
                random_function(profile, config.alpha, config.seed + 977 * i), p);
            const Spectrum s = forward(f);
            for (std::size_t j = 0; j < indices.size(); ++j) {
                const double ratio = quasi_norm(fejer_mean(s, indices[j]), {p, NormFlavor::Hp});
                max_ratio[j] = std::max(max_ratio[j], ratio);
            }
        }
        double running = 0.0;
        for (std::size_t j = 0; j < indices.size(); ++j) {
            running = std::max(running, max_ratio[j]);
            report.add_row({Cell{p}, Cell{indices[j]}, Cell{max_ratio[j]}, Cell{running}});
        }
    }
    return report;
}

Report run_theorem1_growth(const ExperimentConfig& config) {
    if (config.p_list.empty())
        throw std::invalid_argument("exponent list must not be empty");
    for (double p : config.p_list)
        if (!(p > 0.0 && p <= 0.5))
            throw std::invalid_argument("the growth sweep requires 0 < p <= 1/2");

    Report report({"p", "A", "M_A", "best_n", "max_ratio", "max_normalized"},
                  meta_lines(config));
    for (double p : config.p_list) {
        const int log_power = 2 * static_cast<int>(std::floor(0.5 + p));
        for (std::size_t A = config.a_min; A <= config.a_max; ++A) {
            const RadixProfile profile(config.radices, A + 2);
            const CounterexampleSpec spec(A, profile);
            const GridFunction witness = build_counterexample(spec);
            const double den = quasi_norm(witness, {p, NormFlavor::Hp});
            const Spectrum s = forward(witness);

            double best_ratio = 0.0;
            std::int64_t best_n = 2;
            double best_normalized = 0.0;
            for (std::int64_t n = 2; n <= profile.size(); ++n) {
                const double num = quasi_norm(fejer_mean(s, n), {p, NormFlavor::Hp});
                const double ratio = num / den;
                const double envelope = std::pow(static_cast<double>(n), 1.0 / p - 2.0) *
                                        std::pow(std::log2(static_cast<double>(n)), log_power);
                if (ratio > best_ratio) {
                    best_ratio = ratio;
                    best_n = n;
                }
                best_normalized = std::max(best_normalized, ratio / envelope);
            }
            report.add_row({Cell{p}, Cell{static_cast<std::int64_t>(A)},
                            Cell{profile.order(A)}, Cell{best_n}, Cell{best_ratio},
                            Cell{best_normalized}});
        }
    }
    return report;
}

Report run_convergence(const ExperimentConfig& config) {
    if (config.p_list.empty())
        throw std::invalid_argument("exponent list must not be empty");
    const RadixProfile profile(config.radices, config.resolution);
    const std::int64_t total = profile.size();

    // Geometric grid of degrees plus every order M_k and the half point.
    std::vector<std::int64_t> grid;
    for (std::int64_t n = 2; n < total; n = std::max(n + 1, (n * 3) / 2))
        grid.push_back(n);
    for (std::size_t k = 0; k <= profile.resolution(); ++k)
        grid.push_back(profile.order(k));
    grid.push_back(std::max<std::int64_t>(1, total / 2));
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    grid.erase(std::remove_if(grid.begin(), grid.end(),
                              [&](std::int64_t n) { return n < 1 || n > total; }),
               grid.end());

    std::vector<GridFunction> functions;
    for (std::size_t i = 0; i < config.random_count; ++i)
        functions.push_back(random_function(profile, config.alpha, config.seed + 977 * i));

    Report report({"p", "n", "level", "max_err", "max_err_rel", "max_omega"},
                  meta_lines(config));
    for (double p : config.p_list) {
        if (!(p > 0.0))
            throw std::invalid_argument("exponents must be positive");
        std::vector<double> norms;
        std::vector<Spectrum> spectra;
        for (const GridFunction& f : functions) {
            norms.push_back(quasi_norm(f, {p, NormFlavor::Hp}));
            spectra.push_back(forward(f));
        }
        for (std::int64_t n : grid) {
            const std::size_t level = block_level(n, profile);
            double max_err = 0.0;
            double max_rel = 0.0;
            double max_omega = 0.0;
            for (std::size_t i = 0; i < functions.size(); ++i) {
                const GridFunction err = subtract(fejer_mean(spectra[i], n), functions[i]);
                const double e = quasi_norm(err, {p, NormFlavor::Hp});
                max_err = std::max(max_err, e);
                max_rel = std::max(max_rel, e / norms[i]);
                max_omega = std::max(max_omega, modulus_of_continuity(functions[i], level, p));
            }
            report.add_row({Cell{p}, Cell{n}, Cell{static_cast<std::int64_t>(level)},
                            Cell{max_err}, Cell{max_rel}, Cell{max_omega}});
        }
    }
    return report;
}

Report run_theorem2(const ExperimentConfig& config) {
    if (config.p_list.empty())
        throw std::invalid_argument("exponent list must not be empty");
    Report report({"A", "p", "M_A", "den_exact", "num", "ratio", "envelope", "c_est"},
                  meta_lines(config));
    for (std::size_t A = config.a_min; A <= config.a_max; ++A) {
        // One extra level above A+1 keeps the point count small while the
        // Fejer mean is already constant on level-(A+1) cells.
        const RadixProfile profile(config.radices, A + 2);
        for (double p : config.p_list) {
            const HardyRatioRow row = hardy_ratio(CounterexampleSpec(A, profile), p);
            report.add_row({Cell{static_cast<std::int64_t>(row.A)}, Cell{row.p}, Cell{row.M_A},
                            Cell{row.den_exact}, Cell{row.num}, Cell{row.ratio},
                            Cell{row.envelope}, Cell{row.c_est}});
        }
    }
    return report;
}

Report run_corollary(const ExperimentConfig& config) {
    if (config.p_list.empty())
        throw std::invalid_argument("exponent list must not be empty");
    Report report({"A", "p", "M_A", "den_exact", "sharp_num", "sharp_ratio", "block_ratio"},
                  meta_lines(config));
    for (std::size_t A = config.a_min; A <= config.a_max; ++A) {
        const RadixProfile profile(config.radices, A + 2);
        const CounterexampleSpec spec(A, profile);
        const GridFunction witness = build_counterexample(spec);
        const GridFunction sharp = sigma_sharp(witness);
        for (double p : config.p_list) {
            const HardyRatioRow row = hardy_ratio(spec, p);
            const double sharp_num = quasi_norm(sharp, {p, NormFlavor::Hp});
            report.add_row({Cell{static_cast<std::int64_t>(A)}, Cell{p}, Cell{row.M_A},
                            Cell{row.den_exact}, Cell{sharp_num},
                            Cell{sharp_num / row.den_exact}, Cell{row.ratio}});
        }
    }
    return report;
}

Report run_kernel_dump(const ExperimentConfig& config) {
    const RadixProfile profile(config.radices, config.resolution);
    GridFunction kernel = GridFunction::zeros(profile);
    if (config.kernel_kind == "dirichlet")
        kernel = dirichlet_kernel(config.kernel_n, profile);
    else if (config.kernel_kind == "fejer")
        kernel = fejer_kernel(config.kernel_n, profile);
    else
        throw std::invalid_argument("kernel kind must be 'dirichlet' or 'fejer'");

    Report report({"index", "value_re", "value_im"}, meta_lines(config));
    for (std::size_t i = 0; i < kernel.samples.size(); ++i)
        report.add_row({Cell{static_cast<std::int64_t>(i)}, Cell{kernel.samples[i].real()},
                        Cell{kernel.samples[i].imag()}});
    return report;
}

Report run_transform_bench(const ExperimentConfig& config) {
    if (config.bench_min_log2 < 4 || config.bench_min_log2 > config.resolution)
        throw std::invalid_argument("bench range must satisfy 4 <= min <= resolution");

    Report report({"kind", "log2_size", "size", "seconds_per_transform", "ratio_to_previous"},
                  meta_lines(config));

    std::vector<double> log_sizes;
    std::vector<double> log_times;
    double previous = 0.0;
    for (std::size_t r = config.bench_min_log2; r <= config.resolution; ++r) {
        const RadixProfile profile({2}, r);
        const GridFunction f = random_function(profile, 0.0, config.seed);
        const std::int64_t reps =
            std::max<std::int64_t>(1, (std::int64_t{1} << 22) / profile.size());
        std::vector<double> samples;
        for (int run = 0; run < 3; ++run) {
            const double t0 = now_seconds();
            for (std::int64_t i = 0; i < reps; ++i) {
                const Spectrum s = forward(f);
                if (s.coefficients.empty())
                    throw std::logic_error("empty spectrum");
            }
            samples.push_back((now_seconds() - t0) / static_cast<double>(reps));
        }
        std::sort(samples.begin(), samples.end());
        const double median = samples[1];
        const double ratio = previous > 0.0 ? median / previous : 0.0;
        report.add_row({Cell{std::string("fast")}, Cell{static_cast<std::int64_t>(r)},
                        Cell{profile.size()}, Cell{median}, Cell{ratio}});
        log_sizes.push_back(static_cast<double>(r));
        log_times.push_back(std::log2(median));
        previous = median;
    }

    // Least-squares slope of log2(time) against log2(size).
    const double count = static_cast<double>(log_sizes.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < log_sizes.size(); ++i) {
        sx += log_sizes[i];
        sy += log_times[i];
        sxx += log_sizes[i] * log_sizes[i];
        sxy += log_sizes[i] * log_times[i];
    }
    const double exponent = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    report.add_row({Cell{std::string("fit_exponent")}, Cell{std::int64_t{0}}, Cell{std::int64_t{0}},
                    Cell{exponent}, Cell{0.0}});

    // Naive comparison at 2^10.
    if (config.resolution >= 10) {
        const RadixProfile profile({2}, 10);
        const GridFunction f = random_function(profile, 0.0, config.seed);
        const double t0 = now_seconds();
        const Spectrum fast = forward(f);
        const double fast_time = now_seconds() - t0;
        const double t1 = now_seconds();
        const Spectrum naive = forward_naive(f);
        const double naive_time = now_seconds() - t1;
        double max_diff = 0.0;
        for (std::size_t i = 0; i < fast.coefficients.size(); ++i)
            max_diff = std::max(max_diff, std::abs(fast.coefficients[i] - naive.coefficients[i]));
        if (max_diff > 1e-12)
            throw NumericViolation("fast and naive transforms disagree beyond 1e-12");
        report.add_row({Cell{std::string("naive")}, Cell{std::int64_t{10}},
                        Cell{profile.size()}, Cell{naive_time}, Cell{naive_time / fast_time}});
    }

    if (exponent >= 1.3)
        throw NumericViolation("transform cost grows faster than the near-linear bound");
    return report;
}

Report run_experiment(const ExperimentConfig& config) {
    if (config.experiment == "theorem1-bounded")
        return run_theorem1_bounded(config);
    if (config.experiment == "theorem1-growth")
        return run_theorem1_growth(config);
    if (config.experiment == "theorem1-convergence")
        return run_convergence(config);
    if (config.experiment == "theorem2")
        return run_theorem2(config);
    if (config.experiment == "corollary")
        return run_corollary(config);
    if (config.experiment == "kernel-dump")
        return run_kernel_dump(config);
    if (config.experiment == "transform-bench")
        return run_transform_bench(config);
    throw std::invalid_argument("unknown experiment: " + config.experiment);
}

} // namespace vilenkin
