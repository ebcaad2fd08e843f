#include "difftab/error_order.hpp"

#include "difftab/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace difftab {

ResidualReport residualPolynomial(const Polynomial& p, unsigned k, const Rational& step) {
    if (!(step > Rational(0))) {
        throw std::invalid_argument("residualPolynomial: step must be positive");
    }
    auto deg = p.degree();
    if (k < 1 || !deg.has_value() || k > *deg) {
        throw std::invalid_argument("residualPolynomial: need 1 <= k <= degree");
    }
    // Order-k forward difference of p as a polynomial in x, via exact shifts.
    Polynomial diff;
    for (unsigned j = 0; j <= k; ++j) {
        Rational coeff(binomial(k, j));
        if (j % 2 == 1) {
            coeff = -coeff;
        }
        diff += coeff * p.shifted(Rational(static_cast<long long>(k - j)) * step);
    }
    Polynomial divided = (Rational(1) / step.pow(k)) * diff;
    ResidualReport report;
    report.residual = divided - p.derivative(k);
    report.looseBoundDegree = *deg - k;
    report.actualDegree = report.residual.degree();
    return report;
}

ResidualReport residualPolynomial(unsigned n, unsigned k, const Rational& step) {
    return residualPolynomial(Polynomial::monomial(n), k, step);
}

namespace {

double floatDifference(const std::function<double(double)>& f, DifferenceKind kind,
                       unsigned k, double x0, double h) {
    double sum = 0.0;
    for (unsigned j = 0; j <= k; ++j) {
        double coeff = binomial(k, j).convert_to<double>();
        if (j % 2 == 1) {
            coeff = -coeff;
        }
        double offset = stencilOffset(kind, k, j).toDouble();
        sum += coeff * f(x0 + offset * h);
    }
    return sum;
}

}  // namespace

double empiricalOrder(const std::function<double(double)>& f, double exactDerivative,
                      DifferenceKind kind, unsigned k, double x0,
                      const std::vector<double>& steps) {
    if (steps.size() < 3) {
        throw TooFewPoints("empiricalOrder: need at least 3 steps");
    }
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (!(steps[i] > 0.0)) {
            throw std::invalid_argument("empiricalOrder: steps must be positive");
        }
        if (i > 0 && !(steps[i] < steps[i - 1])) {
            throw std::invalid_argument("empiricalOrder: steps must be strictly decreasing");
        }
    }
    double span = kind == DifferenceKind::CentralFull ? 2.0 : 1.0;
    std::vector<double> logH;
    std::vector<double> logE;
    logH.reserve(steps.size());
    logE.reserve(steps.size());
    for (double h : steps) {
        double divided = floatDifference(f, kind, k, x0, h) / std::pow(span * h, k);
        double error = divided - exactDerivative;
        if (error == 0.0) {
            throw DegenerateInput(
                "empiricalOrder: exact-zero error, difference is exact at step " +
                std::to_string(h));
        }
        logH.push_back(std::log(h));
        logE.push_back(std::log(std::fabs(error)));
    }
    double n = static_cast<double>(logH.size());
    double mh = 0.0;
    double me = 0.0;
    for (std::size_t i = 0; i < logH.size(); ++i) {
        mh += logH[i];
        me += logE[i];
    }
    mh /= n;
    me /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < logH.size(); ++i) {
        sxx += (logH[i] - mh) * (logH[i] - mh);
        sxy += (logH[i] - mh) * (logE[i] - me);
    }
    return sxy / sxx;
}

}  // namespace difftab
