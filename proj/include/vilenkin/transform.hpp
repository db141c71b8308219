#pragma once

#include <complex>
#include <vector>

#include "vilenkin/group.hpp"

namespace vilenkin {

using Complex = std::complex<double>;

/// Function on the group, constant on level-R cells: M_R complex samples
/// indexed by linear point index.
struct GridFunction {
    RadixProfile profile;
    std::vector<Complex> samples;

    static GridFunction zeros(const RadixProfile& profile);
    static GridFunction constant(const RadixProfile& profile, Complex value);
};

/// Fourier coefficients of a GridFunction; entry n is the coefficient of
/// the n-th character.
struct Spectrum {
    RadixProfile profile;
    std::vector<Complex> coefficients;

    static Spectrum zeros(const RadixProfile& profile);
};

/// Per-axis tables of m_k-th roots of unity, exp(2*pi*i*t/m_k). Both the
/// pointwise character evaluation and the transforms read these, so every
/// code path sees identical rounding.
class RootTable {
  public:
    explicit RootTable(const RadixProfile& profile);

    /// exp(2*pi*i*t/m_k) for 0 <= t < m_k.
    Complex root(std::size_t axis, int t) const { return roots_[axis][static_cast<std::size_t>(t)]; }

  private:
    std::vector<std::vector<Complex>> roots_;
};

/// Character value: product over axes of exp(2*pi*i*n_k*x_k/m_k).
Complex character(std::int64_t n, const GroupPoint& x, const RadixProfile& profile);

/// The n-th character sampled over the whole grid.
GridFunction character_function(std::int64_t n, const RadixProfile& profile);

/// Analysis: coefficient n = (1/M_R) * sum_x f(x) * conj(psi_n(x)).
/// Staged algorithm: one dense size-m_k sub-transform per digit axis,
/// O(M_R * sum_k m_k) total. Summation order is fixed, so results are
/// bit-for-bit reproducible for a given profile.
Spectrum forward(const GridFunction& f);

/// Synthesis: f(x) = sum_n coeff(n) * psi_n(x); inverse of forward.
GridFunction inverse(const Spectrum& s);

/// O(M_R^2) double-loop analysis; oracle for forward().
Spectrum forward_naive(const GridFunction& f);

/// O(M_R^2) double-loop synthesis; oracle for inverse().
GridFunction inverse_naive(const Spectrum& s);

} // namespace vilenkin
