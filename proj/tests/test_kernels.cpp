#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vilenkin/kernels.hpp"

#include <cmath>
#include <random>

using namespace vilenkin;

namespace {

GridFunction random_grid(const RadixProfile& profile, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    GridFunction f = GridFunction::zeros(profile);
    for (Complex& v : f.samples)
        v = Complex{unit(rng), unit(rng)};
    return f;
}

double max_diff(const GridFunction& a, const GridFunction& b) {
    double out = 0.0;
    for (std::size_t i = 0; i < a.samples.size(); ++i)
        out = std::max(out, std::abs(a.samples[i] - b.samples[i]));
    return out;
}

} // namespace

TEST_CASE("block Dirichlet kernels collapse onto cylinder cells") {
    // D_{M_N} is M_N on the level-N cell of 0 and vanishes elsewhere.
    for (const RadixProfile& p :
         {RadixProfile({2, 2, 2, 2}), RadixProfile({2, 3, 2, 3}), RadixProfile({3, 3, 3})}) {
        for (std::size_t N = 0; N <= p.resolution(); ++N) {
            const std::int64_t mn = p.order(N);
            const GridFunction d = dirichlet_kernel(mn, p);
            for (std::int64_t x = 0; x < p.size(); ++x) {
                const double expected = (x % mn == 0) ? static_cast<double>(mn) : 0.0;
                CHECK(std::abs(d.samples[static_cast<std::size_t>(x)] - expected) < 1e-10);
            }
        }
    }
}

TEST_CASE("small Dirichlet kernels") {
    const RadixProfile dyadic({2, 2, 2});
    const GridFunction d1 = dirichlet_kernel(1, dyadic);
    for (const Complex& v : d1.samples)
        CHECK(std::abs(v - Complex{1.0, 0.0}) < 1e-14);

    const GridFunction d3 = dirichlet_kernel(3, dyadic);
    const double expected[8] = {3, 1, 1, -1, 3, 1, 1, -1};
    for (std::size_t x = 0; x < 8; ++x)
        CHECK(std::abs(d3.samples[x] - Complex{expected[x], 0.0}) < 1e-12);

    CHECK_THROWS_AS(dirichlet_kernel(0, dyadic), std::out_of_range);
    CHECK_THROWS_AS(dirichlet_kernel(9, dyadic), std::out_of_range);
}

TEST_CASE("Fejer kernel is the average of Dirichlet kernels") {
    const RadixProfile p({2, 3, 2, 2}, 5); // M_R = 48
    for (std::int64_t n = 1; n <= 32; ++n) {
        GridFunction sum = GridFunction::zeros(p);
        for (std::int64_t k = 1; k <= n; ++k) {
            const GridFunction d = dirichlet_kernel(k, p);
            for (std::size_t i = 0; i < sum.samples.size(); ++i)
                sum.samples[i] += d.samples[i];
        }
        const GridFunction kn = fejer_kernel(n, p);
        double diff = 0.0;
        for (std::size_t i = 0; i < sum.samples.size(); ++i)
            diff = std::max(diff, std::abs(static_cast<double>(n) * kn.samples[i] - sum.samples[i]));
        CHECK(diff < 1e-12);
    }

    const GridFunction k1 = fejer_kernel(1, p);
    for (const Complex& v : k1.samples)
        CHECK(std::abs(v - Complex{1.0, 0.0}) < 1e-14);
}

TEST_CASE("Fejer kernel coefficients carry triangular weights") {
    const RadixProfile p({2, 3, 2});
    for (std::int64_t n : {1, 5, 7, 12}) {
        const Spectrum s = forward(fejer_kernel(n, p));
        for (std::int64_t j = 0; j < p.size(); ++j) {
            const double expected =
                j < n ? static_cast<double>(n - j) / static_cast<double>(n) : 0.0;
            CHECK(std::abs(s.coefficients[static_cast<std::size_t>(j)] - Complex{expected, 0.0}) <
                  1e-13);
        }
    }
}

TEST_CASE("partial sums") {
    const RadixProfile p22({2, 2});
    // averaging the indicator of 0 over level-1 cells
    GridFunction ind = GridFunction::zeros(p22);
    ind.samples[0] = Complex{1.0, 0.0};
    const GridFunction s2 = partial_sum(ind, p22.order(1));
    CHECK(s2.samples[0].real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(s2.samples[2].real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(s2.samples[1]) < 1e-13);
    CHECK(std::abs(s2.samples[3]) < 1e-13);

    const RadixProfile p({2, 3, 2});
    const GridFunction f = random_grid(p, 5);
    CHECK(max_diff(partial_sum(f, p.size()), f) < 1e-12);

    const GridFunction psi2 = character_function(2, p);
    const GridFunction s = partial_sum(psi2, 2);
    for (const Complex& v : s.samples)
        CHECK(std::abs(v) < 1e-13);

    const GridFunction s0 = partial_sum(f, 0);
    for (const Complex& v : s0.samples)
        CHECK(std::abs(v) == 0.0);

    CHECK_THROWS_AS(partial_sum(f, p.size() + 1), std::out_of_range);
}

TEST_CASE("Fejer mean reproduces constants and shrinks characters") {
    const RadixProfile dyadic({2, 2, 2});
    const GridFunction c = GridFunction::constant(dyadic, Complex{2.5, -1.0});
    for (std::int64_t n = 1; n <= dyadic.size(); ++n)
        CHECK(max_diff(fejer_mean(c, n), c) < 1e-12);

    // mean of S_1..S_4 applied to psi_1 leaves 3/4 of it
    const GridFunction psi1 = character_function(1, dyadic);
    const GridFunction mean = fejer_mean(psi1, 4);
    for (std::size_t i = 0; i < mean.samples.size(); ++i)
        CHECK(std::abs(mean.samples[i] - 0.75 * psi1.samples[i]) < 1e-13);

    CHECK_THROWS_AS(fejer_mean(psi1, 0), std::out_of_range);
    CHECK_THROWS_AS(fejer_mean(psi1, 9), std::out_of_range);
}

TEST_CASE("Fejer mean of the two-block difference kernel on its inner cell") {
    const RadixProfile dyadic({2, 2, 2});
    const GridFunction d4 = dirichlet_kernel(4, dyadic);
    const GridFunction d2 = dirichlet_kernel(2, dyadic);
    GridFunction f1 = GridFunction::zeros(dyadic);
    for (std::size_t i = 0; i < f1.samples.size(); ++i)
        f1.samples[i] = d4.samples[i] - d2.samples[i];
    const GridFunction mean = fejer_mean(f1, 4);
    CHECK(mean.samples[0].real() == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(mean.samples[4].real() == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("weighted, averaged and convolved Fejer means all agree") {
    for (const RadixProfile& p : {RadixProfile({2, 3, 2, 3}), RadixProfile({2}, 6)}) {
        const GridFunction f = random_grid(p, 17);
        for (std::int64_t n = 1; n <= p.size(); ++n) {
            const GridFunction weighted = fejer_mean(f, n);
            CHECK(max_diff(weighted, fejer_mean_direct(f, n)) < 1e-12);
            CHECK(max_diff(weighted, convolve(f, fejer_kernel(n, p))) < 1e-12);
        }
    }
}

TEST_CASE("coefficients of the Fejer mean") {
    const RadixProfile p({2, 3, 2});
    const GridFunction f = random_grid(p, 23);
    const Spectrum sf = forward(f);
    for (std::int64_t n : {1, 4, 9, 12}) {
        const Spectrum sm = forward(fejer_mean(f, n));
        for (std::int64_t j = 0; j < p.size(); ++j) {
            const Complex expected =
                j < n ? sf.coefficients[static_cast<std::size_t>(j)] *
                            (static_cast<double>(n - j) / static_cast<double>(n))
                      : Complex{0.0, 0.0};
            CHECK(std::abs(sm.coefficients[static_cast<std::size_t>(j)] - expected) < 1e-13);
        }
    }
}

TEST_CASE("Fejer mean is linear") {
    const RadixProfile p({3, 2, 2});
    const GridFunction f = random_grid(p, 31);
    const GridFunction g = random_grid(p, 37);
    const Complex a{1.25, -0.5};
    const Complex b{-2.0, 0.75};
    GridFunction combo = GridFunction::zeros(p);
    for (std::size_t i = 0; i < combo.samples.size(); ++i)
        combo.samples[i] = a * f.samples[i] + b * g.samples[i];
    for (std::int64_t n : {1, 3, 7, 12}) {
        const GridFunction lhs = fejer_mean(combo, n);
        const GridFunction mf = fejer_mean(f, n);
        const GridFunction mg = fejer_mean(g, n);
        double diff = 0.0;
        for (std::size_t i = 0; i < lhs.samples.size(); ++i)
            diff = std::max(diff, std::abs(lhs.samples[i] - (a * mf.samples[i] + b * mg.samples[i])));
        CHECK(diff < 1e-12);
    }
}

TEST_CASE("convolution identities") {
    const RadixProfile p({2, 3, 2});
    const GridFunction f = random_grid(p, 41);

    // full-resolution Dirichlet kernel acts as the identity
    CHECK(max_diff(convolve(f, dirichlet_kernel(p.size(), p)), f) < 1e-12);

    // convolving with 1 gives the mean
    Complex mean{0.0, 0.0};
    for (const Complex& v : f.samples)
        mean += v;
    mean /= static_cast<double>(p.size());
    const GridFunction averaged = convolve(f, GridFunction::constant(p, Complex{1.0, 0.0}));
    for (const Complex& v : averaged.samples)
        CHECK(std::abs(v - mean) < 1e-13);

    // partial sums are Dirichlet convolutions
    for (std::int64_t n = 1; n <= p.size(); ++n)
        CHECK(max_diff(convolve(f, dirichlet_kernel(n, p)), partial_sum(f, n)) < 1e-12);

    const RadixProfile other({2, 2, 2});
    CHECK_THROWS_AS(convolve(f, GridFunction::zeros(other)), std::invalid_argument);
}

TEST_CASE("convolution is commutative") {
    const RadixProfile p({2, 3, 2});
    const GridFunction f = random_grid(p, 43);
    const GridFunction g = random_grid(p, 47);
    CHECK(max_diff(convolve(f, g), convolve(g, f)) < 1e-12);
}
