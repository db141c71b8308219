#pragma once

#include "vilenkin/transform.hpp"

namespace vilenkin {

/// The sequence of cell averages of f at levels 0..R, i.e. the discrete
/// martingale that f generates. Level k is constant on level-k cells and
/// level R is f itself.
struct MartingaleView {
    RadixProfile profile;
    std::vector<GridFunction> levels;
};

enum class NormFlavor { Lp, weakLp, Hp };

struct QuasiNormParams {
    double p = 1.0;
    NormFlavor flavor = NormFlavor::Lp;
};

/// Cell average: the value at x is the mean of f over the level-N cell
/// containing x. Coincides with partial_sum(f, M_N) (tested both ways).
GridFunction conditional_expectation(const GridFunction& f, std::size_t level);

MartingaleView martingale_view(const GridFunction& f);

/// Pointwise max over 0 <= k <= R of |cell average at level k|.
GridFunction maximal_function(const GridFunction& f);

/// Lp:    ((1/M_R) * sum |f(x)|^p)^(1/p)
/// weakLp: sup over lambda > 0 of lambda * mu(|f| > lambda)^(1/p); exact
///         because |f| takes finitely many values, the sup is
///         max over values v of v * mu(|f| >= v)^(1/p).
/// Hp:    Lp norm of the maximal function.
double quasi_norm(const GridFunction& f, const QuasiNormParams& params);

/// || f - cell_average(f, N) ||_{Hp}: the residual above level N.
double modulus_of_continuity(const GridFunction& f, std::size_t level, double p);

/// Pointwise max of |fejer_mean(f, n)| over 1 <= n <= n_max.
GridFunction sigma_star(const GridFunction& f, std::int64_t n_max);

/// Pointwise max of |fejer_mean(f, M_k)| over 0 <= k <= R.
GridFunction sigma_sharp(const GridFunction& f);

/// Pointwise max of |fejer_mean(f, n)| / w(n) over 1 <= n <= n_max, with
/// w(n) = n^(1/p-2) * log2(n+1)^(2*floor(1/2+p)); requires 0 < p <= 1/2,
/// so the log factor only appears at p = 1/2.
GridFunction sigma_tilde(const GridFunction& f, double p, std::int64_t n_max);

} // namespace vilenkin
