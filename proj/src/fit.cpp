#include "difftab/fit.hpp"

#include "difftab/differences.hpp"
#include "difftab/errors.hpp"
#include "difftab/polynomial.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace difftab {

DiffSequence backwardSequence(unsigned power, int atIndex, const GridSpec& grid) {
    const int n = static_cast<int>(power);
    const int half = grid.halfRange();
    const bool descending = atIndex <= 0;
    const int lo = descending ? atIndex : atIndex - n;
    const int hi = descending ? atIndex + n : atIndex;
    if (lo < -half || hi > half) {
        throw StencilOutOfRange("backwardSequence: order-" + std::to_string(power) +
                                " stencil at index " + std::to_string(atIndex) +
                                " spans [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "] outside the grid");
    }
    const Polynomial f = Polynomial::monomial(power);
    const DifferenceKind kind = descending ? DifferenceKind::Forward : DifferenceKind::Backward;
    DiffSequence seq;
    seq.power = power;
    seq.atIndex = atIndex;
    seq.step = grid.step().toDouble();
    seq.values.reserve(power + 1);
    for (unsigned k = 0; k <= power; ++k) {
        seq.values.push_back(
            nthDifference(f, {kind, k, grid.step(), grid.point(atIndex)}).toDouble());
    }
    return seq;
}

double OscillatorFit::operator()(double k) const {
    return amplitude * std::exp(-damping * k) * std::sin(frequency * k + phase);
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTau = 2.0 * std::numbers::pi;

struct LogParams {
    double logAmp;
    double damping;
    double frequency;
    double phase;
};

double wrapTau(double x) {
    double y = std::fmod(x, kTau);
    return y < 0.0 ? y + kTau : y;
}

/// Sum of squared log-magnitude residuals over nonzero entries, or infinity
/// when the model passes through a sine zero at a sampled k.
double logLoss(const std::vector<double>& values, const LogParams& p) {
    double sum = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k] == 0.0) {
            continue;
        }
        double s = std::sin(p.frequency * static_cast<double>(k) + p.phase);
        if (std::fabs(s) < 1e-12) {
            return std::numeric_limits<double>::infinity();
        }
        double r = std::log(std::fabs(values[k])) -
                   (p.logAmp - p.damping * static_cast<double>(k) + std::log(std::fabs(s)));
        sum += r * r;
    }
    return sum;
}

bool solve4(std::array<std::array<double, 4>, 4>& m, std::array<double, 4>& rhs) {
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int row = col + 1; row < 4; ++row) {
            if (std::fabs(m[row][col]) > std::fabs(m[pivot][col])) {
                pivot = row;
            }
        }
        if (std::fabs(m[pivot][col]) < 1e-300) {
            return false;
        }
        std::swap(m[col], m[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (int row = 0; row < 4; ++row) {
            if (row == col) {
                continue;
            }
            double f = m[row][col] / m[col][col];
            for (int c = col; c < 4; ++c) {
                m[row][c] -= f * m[col][c];
            }
            rhs[row] -= f * rhs[col];
        }
    }
    for (int i = 0; i < 4; ++i) {
        rhs[i] /= m[i][i];
    }
    return true;
}

/// Gauss-Newton with backtracking on the log-magnitude residuals
/// r_k = log|v_k| - (logAmp - damping*k + log|sin(frequency*k + phase)|).
LogParams gaussNewton(const std::vector<double>& values, LogParams p, double* finalLoss) {
    double loss = logLoss(values, p);
    for (int iter = 0; iter < 200 && std::isfinite(loss); ++iter) {
        std::array<std::array<double, 4>, 4> jtj{};
        std::array<double, 4> jtr{};
        for (std::size_t k = 0; k < values.size(); ++k) {
            if (values[k] == 0.0) {
                continue;
            }
            double kk = static_cast<double>(k);
            double theta = p.frequency * kk + p.phase;
            double s = std::sin(theta);
            double cot = std::cos(theta) / s;
            double r = std::log(std::fabs(values[k])) -
                       (p.logAmp - p.damping * kk + std::log(std::fabs(s)));
            std::array<double, 4> row{-1.0, kk, -kk * cot, -cot};
            for (int a = 0; a < 4; ++a) {
                jtr[a] += row[a] * r;
                for (int b = 0; b < 4; ++b) {
                    jtj[a][b] += row[a] * row[b];
                }
            }
        }
        for (int a = 0; a < 4; ++a) {
            jtj[a][a] += 1e-12;
            jtr[a] = -jtr[a];
        }
        if (!solve4(jtj, jtr)) {
            break;
        }
        double t = 1.0;
        bool improved = false;
        for (int back = 0; back < 45; ++back) {
            LogParams next{p.logAmp + t * jtr[0], p.damping + t * jtr[1],
                           p.frequency + t * jtr[2], p.phase + t * jtr[3]};
            double nextLoss = logLoss(values, next);
            if (nextLoss < loss - 1e-15) {
                double stepNorm = std::fabs(t * jtr[0]) + std::fabs(t * jtr[1]) +
                                  std::fabs(t * jtr[2]) + std::fabs(t * jtr[3]);
                p = next;
                loss = nextLoss;
                improved = true;
                if (stepNorm < 1e-12) {
                    iter = 200;
                }
                break;
            }
            t *= 0.5;
        }
        if (!improved) {
            break;
        }
    }
    *finalLoss = loss;
    return p;
}

int signOf(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

/// Puts amplitude > 0, frequency in [0, pi], phase in [0, 2*pi) without
/// changing any model value.
void canonicalize(double& amplitude, double& frequency, double& phase) {
    if (amplitude < 0.0) {
        amplitude = -amplitude;
        phase += kPi;
    }
    frequency = wrapTau(frequency);
    if (frequency > kPi) {
        frequency = kTau - frequency;
        phase = kPi - phase;
    }
    phase = wrapTau(phase);
}

}  // namespace

OscillatorFit fitDampedSine(const DiffSequence& seq) {
    const std::vector<double>& v = seq.values;
    const std::size_t n = v.size();
    if (n < 5) {
        throw TooFewPoints("fitDampedSine: need at least 5 values, got " +
                           std::to_string(n));
    }
    std::size_t nonzero = 0;
    for (double x : v) {
        if (x != 0.0) {
            ++nonzero;
        }
    }
    if (nonzero == 0) {
        throw DegenerateInput("fitDampedSine: all values are zero");
    }
    if (nonzero < 5) {
        throw DegenerateInput("fitDampedSine: only " + std::to_string(nonzero) +
                              " nonzero values, four parameters need at least 5");
    }

    // Least-squares line through log|v_k| supplies amplitude/damping starts
    // for the frequency/phase grid.
    double mx = 0.0;
    double my = 0.0;
    double count = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (v[k] == 0.0) {
            continue;
        }
        mx += static_cast<double>(k);
        my += std::log(std::fabs(v[k]));
        count += 1.0;
    }
    mx /= count;
    my /= count;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (v[k] == 0.0) {
            continue;
        }
        double dx = static_cast<double>(k) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(std::fabs(v[k])) - my);
    }
    double lineDamping = sxx > 0.0 ? -sxy / sxx : 0.0;
    double lineLogAmp = my + lineDamping * mx;

    std::vector<LogParams> starts;
    if (v[0] != 0.0 && v[1] != 0.0) {
        starts.push_back({std::log(std::fabs(v[0])), std::log(std::fabs(v[0] / v[1])),
                          kPi, kPi / 2.0});
    }
    for (int m = 1; m < 32; ++m) {
        for (int j = 1; j < 16; ++j) {
            if (j == 8) {
                continue;
            }
            starts.push_back(
                {lineLogAmp, lineDamping, kPi * m / 32.0, kPi * j / 8.0});
        }
    }

    std::vector<int> target(n);
    for (std::size_t k = 0; k < n; ++k) {
        target[k] = signOf(v[k]);
    }

    bool haveBest = false;
    bool bestFullMatch = false;
    double bestLoss = std::numeric_limits<double>::infinity();
    OscillatorFit best{};
    for (const LogParams& start : starts) {
        double loss = 0.0;
        LogParams p = gaussNewton(v, start, &loss);
        if (!std::isfinite(loss)) {
            continue;
        }
        double baseAmp = std::exp(p.logAmp);
        // The log-magnitude loss cannot see a global sign flip, so both
        // sign assignments are candidates; canonicalization folds the
        // flip into the phase.
        for (double ampSign : {1.0, -1.0}) {
            double amplitude = ampSign * baseAmp;
            double frequency = p.frequency;
            double phase = p.phase;
            canonicalize(amplitude, frequency, phase);
            OscillatorFit candidate{amplitude, p.damping, frequency, phase, {}};
            int matches = 0;
            for (std::size_t k = 0; k < n; ++k) {
                int ms = signOf(candidate(static_cast<double>(k)));
                if (target[k] == 0 || ms == target[k]) {
                    ++matches;
                }
            }
            bool fullMatch = matches == static_cast<int>(n);
            candidate.diagnostics.signMatches = matches;
            candidate.diagnostics.logMagnitudeRmse = std::sqrt(loss / static_cast<double>(nonzero));
            bool better = !haveBest || (fullMatch && !bestFullMatch) ||
                          (fullMatch == bestFullMatch && loss < bestLoss);
            if (better) {
                haveBest = true;
                bestFullMatch = fullMatch;
                bestLoss = loss;
                best = candidate;
            }
        }
    }

    if (!haveBest) {
        throw DegenerateInput("fitDampedSine: no start converged to a usable fit");
    }
    if (!bestFullMatch) {
        throw DegenerateInput(
            "fitDampedSine: sign pattern incompatible with a single frequency (best "
            "candidate matches " +
            std::to_string(best.diagnostics.signMatches) + " of " + std::to_string(n) +
            " signs)");
    }
    return best;
}

std::vector<double> forwardFromBackwardFit(const OscillatorFit& fit, unsigned power) {
    double factor = power % 2 == 0 ? -1.0 : 1.0;
    std::vector<double> out;
    out.reserve(power + 1);
    for (unsigned k = 0; k <= power; ++k) {
        out.push_back(factor * fit(static_cast<double>(k)));
    }
    return out;
}

std::string ForwardPredictionReport::summary() const {
    std::ostringstream os;
    os << agreements << " of " << signAgrees.size() << " signs agree";
    return os.str();
}

ForwardPredictionReport compareForwardPrediction(const OscillatorFit& fit, unsigned power,
                                                 int atIndex, const GridSpec& grid) {
    ForwardPredictionReport report;
    report.predicted = forwardFromBackwardFit(fit, power);
    const int mirrored = -atIndex;
    const Polynomial f = Polynomial::monomial(power);
    const bool descending = mirrored <= 0;
    const int lo = descending ? mirrored : mirrored - static_cast<int>(power);
    const int hi = descending ? mirrored + static_cast<int>(power) : mirrored;
    if (lo < -grid.halfRange() || hi > grid.halfRange()) {
        throw StencilOutOfRange("compareForwardPrediction: mirrored stencil leaves the grid");
    }
    const DifferenceKind kind =
        descending ? DifferenceKind::Forward : DifferenceKind::Backward;
    report.agreements = 0;
    for (unsigned k = 0; k <= power; ++k) {
        Rational exact = nthDifference(f, {kind, k, grid.step(), grid.point(mirrored)});
        bool agrees = signOf(report.predicted[k]) == exact.sign();
        report.exact.push_back(std::move(exact));
        report.signAgrees.push_back(agrees);
        if (agrees) {
            ++report.agreements;
        }
    }
    return report;
}

}  // namespace difftab
