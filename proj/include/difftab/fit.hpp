#pragma once

#include "difftab/grid.hpp"
#include "difftab/rational.hpp"

#include <string>
#include <vector>

namespace difftab {

/**
 * Difference values of f(x) = x^power against order k = 0..power at a fixed
 * grid index, converted to binary64 for fitting.  For atIndex <= 0 the
 * entries are the forward differences at x_i (the descending-tail sequence
 * the difference table prints on negative rows); for atIndex > 0 they are
 * the backward differences at x_i.
 */
struct DiffSequence {
    std::vector<double> values;
    unsigned power;
    int atIndex;
    double step;
};

DiffSequence backwardSequence(unsigned power, int atIndex, const GridSpec& grid);

struct FitDiagnostics {
    /// Root-mean-square of log|data| - log|model| over nonzero entries.
    double logMagnitudeRmse;
    /// Entries whose sign the model reproduces (zeros count as matched).
    int signMatches;
};

/**
 * Damped sine A * exp(-damping*k) * sin(frequency*k + phase) fitted to a
 * difference sequence.  Canonical form: amplitude > 0, frequency in [0, pi],
 * phase in [0, 2*pi).
 */
struct OscillatorFit {
    double amplitude;
    double damping;
    double frequency;
    double phase;
    FitDiagnostics diagnostics;

    double operator()(double k) const;
};

/**
 * Least-squares fit of the damped-sine model to seq.values at k = 0..n.
 *
 * The loss is the sum of squared residuals in log magnitude (the values
 * span many decades, so raw residuals would see only the first entries);
 * the sign pattern is carried by the sine factor and checked explicitly.
 * Gauss-Newton with backtracking line search over a fixed deterministic
 * set of starts: the data-driven initialization (amplitude |v0|, damping
 * ln|v0/v1|, frequency pi, phase pi/2) plus a frequency/phase grid.  Among
 * converged candidates, full-sign-match fits win, then lower loss; the
 * result is deterministic for identical input.
 *
 * Throws TooFewPoints for fewer than 5 values, DegenerateInput when the
 * values are all zero, fewer than 5 are nonzero, or no candidate reproduces
 * the sign pattern (no single frequency is compatible with it).
 */
OscillatorFit fitDampedSine(const DiffSequence& seq);

/**
 * The model's prediction for the opposite-direction difference sequence,
 * obtained by applying the stated factor (-1)^(power-1) to the fitted
 * model at k = 0..power.
 */
std::vector<double> forwardFromBackwardFit(const OscillatorFit& fit, unsigned power);

/**
 * Sign comparison of the (-1)^(power-1)-scaled model prediction against the
 * exact opposite-direction differences at the mirrored index.  The exact
 * mirror law alternates with the order parity instead of carrying one
 * global sign, so for even powers roughly half the entries disagree; the
 * report records the comparison rather than asserting it.
 */
struct ForwardPredictionReport {
    std::vector<double> predicted;
    std::vector<Rational> exact;
    std::vector<bool> signAgrees;
    int agreements;

    std::string summary() const;
};

ForwardPredictionReport compareForwardPrediction(const OscillatorFit& fit, unsigned power,
                                                 int atIndex, const GridSpec& grid);

}  // namespace difftab
