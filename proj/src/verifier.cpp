#include "gkz/verifier.hpp"

#include <algorithm>
#include <functional>

#include "gkz/error.hpp"
#include "gkz/linalg.hpp"

namespace gkz {

FormalSolution from_series(const TruncatedGammaSeries& s) {
    FormalSolution sol;
    sol.config = s.data.config;
    sol.lattice = s.data.lattice;
    sol.gamma = s.data.gamma;
    sol.ring = s.data.ring;
    sol.epsilon = s.data.epsilon;
    for (const auto& [n, t] : s.terms) sol.terms.emplace(t.ell, t.coeff);
    sol.domain.insert(s.domain.begin(), s.domain.end());
    return sol;
}

FormalSolution from_polynomial(const PointConfiguration& config, const RelationLattice& lattice,
                               const std::vector<std::pair<IntVec, Int>>& poly) {
    FormalSolution sol;
    sol.config = config;
    sol.lattice = lattice;
    sol.gamma.assign(config.size(), Rat(0));
    sol.ring = trivial_ring();
    sol.epsilon.assign(config.size(), RingElement::zero(sol.ring));
    for (const auto& [ell, c] : poly) {
        sol.terms.emplace(ell, RingElement::scalar(sol.ring, Rat(c)));
        sol.domain.insert(ell);
    }
    sol.complete = true;
    return sol;
}

namespace {

RingElement exponent(const FormalSolution& sol, const IntVec& ell, int j) {
    return sol.epsilon[j] + RingElement::scalar(sol.ring, sol.gamma[j] + Rat(ell[j]));
}

// s (s-1) ... (s-p+1)
RingElement falling(const RingElement& s, long p) {
    RingElement out = RingElement::one(s.ring());
    for (long i = 0; i < p; ++i) out = out * (s - RingElement::scalar(s.ring(), Rat(i)));
    return out;
}

}  // namespace

FormalSolution apply_partial(const FormalSolution& sol, int j) {
    if (j < 0 || j >= sol.config.size()) fail("BadIndex", "no such point");
    FormalSolution out = sol;
    for (auto& [ell, c] : out.terms) c = c * exponent(sol, ell, j);
    for (auto it = out.terms.begin(); it != out.terms.end();)
        it = it->second.is_zero() ? out.terms.erase(it) : std::next(it);
    out.gamma[j] -= 1;
    return out;
}

VerifierReport check_box(const FormalSolution& sol, const IntVec& lambda) {
    if (!sol.lattice.contains(lambda)) fail("LatticeViolation", "lambda is not in the lattice of relations");
    VerifierReport rep;
    rep.lambda = lambda;
    const std::size_t N = lambda.size();
    auto coeff = [&](const IntVec& ell) {
        auto it = sol.terms.find(ell);
        return it == sol.terms.end() ? RingElement::zero(sol.ring) : it->second;
    };
    std::set<IntVec> points = sol.domain;
    if (sol.complete)
        for (const auto& [ell, c] : sol.terms) {
            IntVec shifted(N);
            for (std::size_t j = 0; j < N; ++j) shifted[j] = ell[j] + lambda[j];
            points.insert(shifted);
        }
    for (const IntVec& ell : points) {
        IntVec partner(N);
        for (std::size_t j = 0; j < N; ++j) partner[j] = ell[j] - lambda[j];
        if (!sol.complete && !sol.domain.count(partner)) {
            ++rep.unchecked_boundary;
            continue;
        }
        ++rep.checked;
        // both sides at the monomial u^(gamma + ell - lambda^+ + epsilon)
        RingElement lhs = coeff(ell), rhs = coeff(partner);
        for (std::size_t j = 0; j < N; ++j) {
            if (lambda[j] > 0 && !lhs.is_zero()) lhs = lhs * falling(exponent(sol, ell, j), lambda[j].get_si());
            if (lambda[j] < 0 && !rhs.is_zero())
                rhs = rhs * falling(exponent(sol, partner, j), -lambda[j].get_si());
        }
        if (lhs != rhs) rep.violations.push_back(ell);
    }
    if (rep.checked == 0) fail("InsufficientOrder", "no term has its partner within the computed range");
    return rep;
}

VerifierReport check_euler(const FormalSolution& sol, const RatVec& c) {
    VerifierReport rep;
    const IntMatrix& A = sol.config.matrix();
    for (const auto& [ell, coeff] : sol.terms) {
        ++rep.checked;
        for (int i = 0; i < sol.config.rows(); ++i) {
            RingElement s = RingElement::scalar(sol.ring, -c[i]);
            for (int j = 0; j < sol.config.size(); ++j)
                if (A(i, j) != 0) s += exponent(sol, ell, j) * Rat(A(i, j));
            if (!(s * coeff).is_zero()) {
                rep.violations.push_back(ell);
                break;
            }
        }
    }
    return rep;
}

std::vector<IntVec> box_generator_set(const RelationLattice& lattice, int bound) {
    const int d = lattice.rank(), N = lattice.size();
    std::vector<IntVec> out;
    if (bound < 1 || d == 0) return out;
    std::optional<RatMatrix> inv;
    for (const Index& J : subsets(N, d)) {
        inv = inverse(to_rat(lattice.basis().select_cols(J)));
        if (inv) break;
    }
    // every lambda with |lambda|_1 <= bound has |lambda_J|_1 <= bound
    IntVec x(d, Int(0));
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == d) {
            IntVec m;
            for (int c = 0; c < d; ++c) {
                Rat v = 0;
                for (int r = 0; r < d; ++r) v += Rat(x[r]) * (*inv)(r, c);
                if (!is_integral(v)) return;
                m.push_back(v.get_num());
            }
            IntVec ell = lattice.element(m);
            Int l1 = 0;
            for (const auto& v : ell) l1 += abs(v);
            if (l1 == 0 || l1 > bound) return;
            auto first = std::find_if(ell.begin(), ell.end(), [](const Int& v) { return v != 0; });
            if (*first > 0) out.push_back(ell);
            return;
        }
        for (int v = -left; v <= left; ++v) {
            x[i] = v;
            rec(i + 1, left - std::abs(v));
        }
        x[i] = 0;
    };
    rec(0, bound);
    std::sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b) {
        Int la = 0, lb = 0;
        for (const auto& v : a) la += abs(v);
        for (const auto& v : b) lb += abs(v);
        return la != lb ? la < lb : a < b;
    });
    return out;
}

}  // namespace gkz
