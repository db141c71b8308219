#pragma once

#include "vilenkin/transform.hpp"

namespace vilenkin {

enum class KernelKind { dirichlet, fejer };

/// D_n = sum of the first n characters. For n = M_N this collapses to
/// M_N on the level-N cell of 0 and vanishes elsewhere.
GridFunction dirichlet_kernel(std::int64_t n, const RadixProfile& profile);

/// K_n = (1/n) * (D_1 + ... + D_n); coefficient j carries weight (n-j)/n.
GridFunction fejer_kernel(std::int64_t n, const RadixProfile& profile);

/// Synthesis of the first n coefficients of f (n = 0 gives the zero
/// function). Throws if n exceeds the resolution's coefficient count.
GridFunction partial_sum(const GridFunction& f, std::int64_t n);
GridFunction partial_sum(const Spectrum& s, std::int64_t n);

/// Mean of the first n partial sums, computed through the triangular
/// coefficient weights (n-j)/n. fejer_mean_direct is the literal average
/// and stays as the oracle.
GridFunction fejer_mean(const GridFunction& f, std::int64_t n);
GridFunction fejer_mean(const Spectrum& s, std::int64_t n);
GridFunction fejer_mean_direct(const GridFunction& f, std::int64_t n);

/// (f*g)(x) = (1/M_R) * sum_t f(t) g(x-t). Point-domain double loop;
/// convolving with D_n or K_n reproduces partial sums and Fejer means.
GridFunction convolve(const GridFunction& f, const GridFunction& g);

} // namespace vilenkin
