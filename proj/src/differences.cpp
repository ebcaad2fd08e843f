#include "difftab/differences.hpp"

#include <utility>
#include <vector>

namespace difftab {

std::string_view kindName(DifferenceKind kind) {
    switch (kind) {
        case DifferenceKind::Forward: return "forward";
        case DifferenceKind::Backward: return "backward";
        case DifferenceKind::CentralHalf: return "central-half";
        case DifferenceKind::CentralFull: return "central-full";
    }
    return "?";
}

std::optional<DifferenceKind> kindFromName(std::string_view name) {
    if (name == "forward") return DifferenceKind::Forward;
    if (name == "backward") return DifferenceKind::Backward;
    if (name == "central-half") return DifferenceKind::CentralHalf;
    if (name == "central-full") return DifferenceKind::CentralFull;
    return std::nullopt;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt c = 1;
    for (unsigned i = 0; i < k; ++i) {
        c *= n - i;
        c /= i + 1;
    }
    return c;
}

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

namespace {

void checkStep(const DifferenceRequest& req) {
    if (!(req.step > Rational(0))) {
        throw std::invalid_argument("difference: step must be positive");
    }
}

}  // namespace

Rational stencilOffset(DifferenceKind kind, unsigned order, unsigned k) {
    long long n = order;
    long long kk = k;
    switch (kind) {
        case DifferenceKind::Forward:
            return Rational(n - kk);
        case DifferenceKind::Backward:
            return Rational(-kk);
        case DifferenceKind::CentralHalf:
            return Rational(BigInt(n), BigInt(2)) - Rational(kk);
        case DifferenceKind::CentralFull:
            return Rational(n - 2 * kk);
    }
    throw std::logic_error("unreachable");
}

Rational nthDifference(const Polynomial& f, const DifferenceRequest& req) {
    checkStep(req);
    Rational sum(0);
    for (unsigned k = 0; k <= req.order; ++k) {
        Rational coeff(binomial(req.order, k));
        if (k % 2 == 1) {
            coeff = -coeff;
        }
        sum += coeff * f(req.at + stencilOffset(req.kind, req.order, k) * req.step);
    }
    return sum;
}

Rational nthDifferenceCascade(const Polynomial& f, const DifferenceRequest& req) {
    checkStep(req);
    // Sample the full stencil once, then fold adjacent pairs order times.
    // Values are kept so that v[0] always carries the running difference
    // anchored at the requested point.
    std::vector<Rational> v;
    v.reserve(req.order + 1);
    const bool forward = req.kind == DifferenceKind::Forward;
    for (unsigned i = 0; i <= req.order; ++i) {
        unsigned k = forward ? req.order - i : i;
        v.push_back(f(req.at + stencilOffset(req.kind, req.order, k) * req.step));
    }
    // After sampling, v runs from the highest stencil offset down for the
    // non-forward kinds and from the lowest up for Forward, so one pairwise
    // rule covers all four stencils.
    for (unsigned round = 0; round < req.order; ++round) {
        for (std::size_t i = 0; i + 1 + round < v.size(); ++i) {
            v[i] = forward ? v[i + 1] - v[i] : v[i] - v[i + 1];
        }
    }
    return v.empty() ? Rational(0) : v[0];
}

Rational dividedDifference(const Polynomial& f, const DifferenceRequest& req) {
    Rational span = req.kind == DifferenceKind::CentralFull ? Rational(2) * req.step : req.step;
    return nthDifference(f, req) / span.pow(req.order);
}

NotEqualError::NotEqualError(Rational forward, Rational backward, Rational centralHalf)
    : std::domain_error("equalityOperator: divided differences disagree (forward " +
                        forward.str() + ", backward " + backward.str() + ", central " +
                        centralHalf.str() + ")"),
      forward_(std::move(forward)),
      backward_(std::move(backward)),
      centralHalf_(std::move(centralHalf)) {}

Rational equalityOperator(const Polynomial& f, unsigned order, const Rational& step,
                          const Rational& at) {
    Rational fwd = dividedDifference(f, {DifferenceKind::Forward, order, step, at});
    Rational bwd = dividedDifference(f, {DifferenceKind::Backward, order, step, at});
    Rational ctr = dividedDifference(f, {DifferenceKind::CentralHalf, order, step, at});
    if (fwd != bwd || bwd != ctr) {
        throw NotEqualError(fwd, bwd, ctr);
    }
    return fwd;
}

CentralIdentity centralIdentity(const Polynomial& f, const Rational& x, const Rational& h) {
    Rational central = dividedDifference(f, {DifferenceKind::CentralFull, 1, h, x});
    Rational fwd = nthDifference(f, {DifferenceKind::Forward, 1, h, x});
    Rational bwd = nthDifference(f, {DifferenceKind::Backward, 1, h, x});
    return {Rational(2) * central * h, fwd + bwd};
}

bool linearityCheck(const Polynomial& f, const Polynomial& g, const Rational& c,
                    const DifferenceRequest& req) {
    Rational df = nthDifference(f, req);
    Rational dg = nthDifference(g, req);
    bool additive = nthDifference(f + g, req) == df + dg;
    bool homogeneous = nthDifference(c * f, req) == c * df;
    return additive && homogeneous;
}

}  // namespace difftab
