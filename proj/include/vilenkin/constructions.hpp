#pragma once

#include "vilenkin/transform.hpp"

namespace vilenkin {

/// Parameters of the witness function D_{M_{A+1}} - D_{M_A}: the level A
/// and a profile with resolution at least A+1.
struct CounterexampleSpec {
    std::size_t A = 1;
    RadixProfile profile;

    CounterexampleSpec(std::size_t level, RadixProfile p);
};

/// The witness itself, built directly in the point domain:
/// M_{A+1}-M_A on the level-(A+1) cell of 0, -M_A on the rest of the
/// level-A cell, 0 elsewhere. Its spectrum is the indicator of
/// [M_A, M_{A+1}).
GridFunction build_counterexample(const CounterexampleSpec& spec);

/// Partial sum of the witness in closed form: 0 for i <= M_A,
/// D_i - D_{M_A} for M_A <= i < M_{A+1}, the witness itself beyond.
GridFunction counterexample_partial_sum(const CounterexampleSpec& spec, std::int64_t i);

/// Exact constant value of the M_{A+1}-th Fejer mean of the witness on
/// the level-(A+1) cell: with K = (m_A - 1) * M_A this is
/// K*(K+1) / (2*M_{A+1}).
Rational fejer_witness_value(const CounterexampleSpec& spec);

/// One row of the unboundedness sweep at exponent p.
struct HardyRatioRow {
    std::size_t A = 0;
    double p = 0.0;
    std::int64_t M_A = 0;
    double den_exact = 0.0; ///< Hp quasi-norm of the witness; M_A^(1-1/p) in the dyadic case.
    double num = 0.0;       ///< Hp quasi-norm of |fejer_mean(witness, M_{A+1})|.
    double ratio = 0.0;
    double envelope = 0.0; ///< M_A^(1/p-1) for p < 1, A for p = 1.
    double c_est = 0.0;    ///< ratio / envelope.
};

/// num / den for the operator f -> |fejer_mean(f, M_{A+1})| evaluated on
/// the witness family, with the growth envelope alongside. Requires
/// 0 < p <= 1.
HardyRatioRow hardy_ratio(const CounterexampleSpec& spec, double p);

} // namespace vilenkin
