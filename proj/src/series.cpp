#include "gkz/series.hpp"

#include <algorithm>
#include <functional>

#include "gkz/error.hpp"
#include "gkz/linalg.hpp"
#include "gkz/polyhedral.hpp"

namespace gkz {

RingPtr trivial_ring() {
    static const RingPtr ring = make_truncated_polynomial_ring(0, {});
    return ring;
}

Rat pochhammer(const Rat& s, long n) {
    Rat p = 1;
    for (long i = 0; i < n; ++i) p *= s + i;
    return p;
}

RingElement gamma_ratio_deformed(long m, const RingElement& e) {
    if (e.constant() != 0) fail("NotNilpotent", "deformation element has a constant term");
    const RingPtr& R = e.ring();
    RingElement one = RingElement::one(R);
    if (m == 0) return one;
    RingElement p = one;
    if (m < 0) {
        for (long i = 0; i < -m; ++i) {
            p = p * (e - one * Rat(i));
            if (p.is_zero()) break;
        }
        return p;
    }
    for (long i = 1; i <= m; ++i) p = p * (e + one * Rat(i));
    return p.inverse();
}

Rat plain_coefficient(const RatVec& gamma, const IntVec& ell) {
    if (gamma.size() != ell.size()) fail("ShapeMismatch", "gamma and ell differ in length");
    Rat out = 1;
    for (std::size_t j = 0; j < gamma.size(); ++j) {
        const Rat& s = gamma[j];
        long m = ell[j].get_si();
        if (m >= 0) {
            Rat den = 1;
            for (long i = 1; i <= m; ++i) den *= s + i;
            if (den == 0)
                fail("NonNormalizable", "Gamma(gamma_j + 1) has a pole that the shift does not cancel");
            out /= den;
        } else {
            for (long i = m + 1; i <= 0; ++i) out *= s + i;
        }
        if (out == 0) return out;
    }
    return out;
}

namespace {

IntVec primitive(const RatVec& v) {
    Int l = lcm_of_denominators(v);
    IntVec out;
    for (const auto& x : v) out.push_back(Int(x * l));
    Int g = gcd_of(out);
    if (g != 0)
        for (auto& x : out) x /= g;
    return out;
}

// Generators of the dual cone of the chamber, in lattice coordinates.
std::vector<IntVec> dual_generators(const RelationLattice& lattice, const RegularTriangulation& T) {
    RatMatrix g = chamber_normals(lattice, T.simplices);
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        IntVec p = primitive(g.row(i));
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
    return out;
}

bool in_dual_cone(const std::vector<IntVec>& gens, const IntVec& m) {
    // Farkas: m is outside iff some t has g.t >= 0 for all g and m.t < 0
    const std::size_t d = m.size();
    std::vector<Inequality> sys;
    for (const auto& g : gens) sys.push_back({to_rat(g), Rat(0), false});
    RatVec neg;
    for (const auto& x : m) neg.push_back(Rat(-x));
    sys.push_back({neg, Rat(1), false});
    return !feasible_point(d, sys);
}

bool generates_monoid(const std::vector<IntVec>& gens, const IntMatrix& S) {
    Int dt = det(S);
    if (dt != 1 && dt != -1) return false;
    RatMatrix inv = *inverse(to_rat(S));
    for (const auto& g : gens) {
        // coordinates x with x S = g
        RatVec x(S.rows(), Rat(0));
        for (std::size_t j = 0; j < S.rows(); ++j)
            for (std::size_t i = 0; i < S.cols(); ++i) x[j] += Rat(g[i]) * inv(i, j);
        for (const auto& v : x)
            if (v < 0) return false;
    }
    for (std::size_t r = 0; r < S.rows(); ++r)
        if (!in_dual_cone(gens, S.row(r))) return false;
    return true;
}

bool integral_outside_some_simplex(const RatVec& gamma, const RegularTriangulation& T) {
    for (const Index& I : T.simplices) {
        bool ok = true;
        for (std::size_t j = 0; j < gamma.size() && ok; ++j)
            if (!std::binary_search(I.begin(), I.end(), static_cast<int>(j)) && !is_integral(gamma[j])) ok = false;
        if (ok) return true;
    }
    return false;
}

RatVec offset_parameter(const PointConfiguration& config, const RatVec& gamma) {
    RatVec c(config.rows(), Rat(0));
    for (int j = 0; j < config.size(); ++j)
        for (int i = 0; i < config.rows(); ++i) c[i] += Rat(config.matrix()(i, j)) * gamma[j];
    return c;
}

GammaData common_data(const PointConfiguration& config, const RelationLattice& lattice,
                      const RegularTriangulation& T, const RatVec& gamma) {
    if (static_cast<int>(gamma.size()) != config.size()) fail("ShapeMismatch", "gamma must have one entry per point");
    GammaData data;
    data.config = config;
    data.lattice = lattice;
    data.chamber = T;
    data.gamma = gamma;
    data.c = offset_parameter(config, gamma);
    if (auto b = adapted_basis(lattice, T)) {
        data.basis = *b;
    } else {
        data.basis = lattice.basis();
        data.adapted = false;
    }
    return data;
}

IntVec combine(const IntMatrix& basis, const MultiIndex& n) {
    IntVec ell(basis.cols(), Int(0));
    for (std::size_t i = 0; i < basis.rows(); ++i)
        if (n[i] != 0)
            for (std::size_t j = 0; j < basis.cols(); ++j) ell[j] += n[i] * basis(i, j);
    return ell;
}

// Lattice coordinates to visit: N^d over an adapted basis, otherwise the
// chamber monoid inside an l1-box of radius N * beta * order.
std::vector<MultiIndex> summation_keys(const GammaData& data, int order) {
    if (data.adapted) return multi_indices(data.basis.rows(), order);
    const RelationLattice& L = data.lattice;
    const int d = L.rank(), N = L.size();
    const Index& J = data.chamber.simplices.front();
    const Index Jc = complement(J, N);
    Rat beta = enumeration_bound(L, J);
    Int radius = rat_ceil(beta * N * order);
    IntMatrix BJ = L.basis().select_cols(Jc);
    RatMatrix BJinv = *inverse(to_rat(BJ));
    auto gens = dual_generators(L, data.chamber);
    std::vector<MultiIndex> keys;
    IntVec x(d, Int(0));
    std::function<void(int, Int)> rec = [&](int i, Int left) {
        if (i == d) {
            // m B_{J'} = x
            RatVec m(d, Rat(0));
            for (int c = 0; c < d; ++c)
                for (int r = 0; r < d; ++r) m[c] += Rat(x[r]) * BJinv(r, c);
            if (!std::all_of(m.begin(), m.end(), [](const Rat& v) { return is_integral(v); })) return;
            IntVec mi;
            for (const auto& v : m) mi.push_back(v.get_num());
            IntVec ell = L.element(mi);
            Int l1 = 0;
            for (const auto& v : ell) l1 += abs(v);
            if (l1 > radius || !in_dual_cone(gens, mi)) return;
            MultiIndex key;
            for (const auto& v : mi) key.push_back(static_cast<int>(v.get_si()));
            keys.push_back(key);
            return;
        }
        for (Int v = -left; v <= left; ++v) {
            x[i] = v;
            rec(i + 1, left - abs(v));
        }
        x[i] = 0;
    };
    rec(0, radius);
    std::sort(keys.begin(), keys.end());
    return keys;
}

template <class Coefficient>
TruncatedGammaSeries expand(const GammaData& data, int order, Coefficient coefficient) {
    if (order < 0) fail("BadOrder", "order must be nonnegative");
    TruncatedGammaSeries s{data, order, {}, {}};
    for (const MultiIndex& n : summation_keys(data, order)) {
        IntVec ell = combine(data.basis, n);
        s.domain.push_back(ell);
        RingElement c = coefficient(ell);
        if (!c.is_zero()) s.terms.emplace(n, SeriesTerm{ell, std::move(c)});
    }
    return s;
}

}  // namespace

std::optional<IntMatrix> adapted_basis(const RelationLattice& lattice, const RegularTriangulation& T) {
    const int d = lattice.rank();
    auto gens = dual_generators(lattice, T);
    auto to_ell = [&](const IntMatrix& S) {
        IntMatrix out(0, lattice.size());
        for (std::size_t r = 0; r < S.rows(); ++r) out.append_row(lattice.element(S.row(r)));
        return out;
    };
    IntMatrix id = IntMatrix::identity(d);
    if (generates_monoid(gens, id)) return lattice.basis();
    if (static_cast<int>(gens.size()) < d) return std::nullopt;
    for (const Index& S : subsets(static_cast<int>(gens.size()), d)) {
        std::vector<IntVec> rows;
        for (int i : S) rows.push_back(gens[i]);
        IntMatrix M = IntMatrix::from_rows(rows);
        if (generates_monoid(gens, M)) return to_ell(M);
    }
    return std::nullopt;
}

GammaData plain_data(const PointConfiguration& config, const RelationLattice& lattice,
                     const RegularTriangulation& T, const RatVec& gamma) {
    GammaData data = common_data(config, lattice, T, gamma);
    if (!integral_outside_some_simplex(gamma, T))
        fail("NonIntegralOffset", "gamma must be integral outside some simplex of the triangulation");
    data.ring = trivial_ring();
    data.epsilon.assign(config.size(), RingElement::zero(data.ring));
    return data;
}

GammaData deformed_data(const PointConfiguration& config, const RelationLattice& lattice,
                        const RegularTriangulation& T, const RatVec& gamma, const RingPtr& ring) {
    if (!is_unimodular(config, T)) fail("NotUnimodular", "deformed series need a unimodular triangulation");
    for (const auto& g : gamma)
        if (!is_integral(g)) fail("NonIntegralOffset", "deformed series need integral gamma");
    if (ring->num_generators() != config.size()) fail("ShapeMismatch", "ring has the wrong number of generators");
    GammaData data = common_data(config, lattice, T, gamma);
    data.ring = ring;
    for (int j = 0; j < config.size(); ++j) data.epsilon.push_back(ring->generator(j));
    return data;
}

TruncatedGammaSeries expand_plain(const GammaData& data, int order) {
    return expand(data, order, [&](const IntVec& ell) {
        return RingElement::scalar(data.ring, plain_coefficient(data.gamma, ell));
    });
}

TruncatedGammaSeries expand_deformed(const GammaData& data, int order) {
    if (!is_unimodular(data.config, data.chamber)) fail("NotUnimodular", "deformed series need a unimodular triangulation");
    return expand(data, order, [&](const IntVec& ell) {
        RingElement c = RingElement::one(data.ring);
        for (std::size_t j = 0; j < ell.size(); ++j) {
            long m = Rat(data.gamma[j] + Rat(ell[j])).get_num().get_si();
            c = c * gamma_ratio_deformed(m, data.epsilon[j]);
            if (c.is_zero()) break;
        }
        return c;
    });
}

std::vector<std::pair<IntVec, Int>> polynomial_solution(const PointConfiguration& config, int m) {
    if (m < 1) fail("BadOrder", "degree must be positive");
    const IntMatrix& A = config.matrix();
    const int N = config.size();
    int hrow = -1;
    for (int i = 0; i < config.rows() && hrow < 0; ++i) {
        bool ones = true;
        for (int j = 0; j < N; ++j) ones &= A(i, j) == 1;
        if (ones) hrow = i;
    }
    if (hrow < 0) fail("NoHomogeneityRow", "configuration has no row of ones");
    std::vector<std::pair<IntVec, Int>> out;
    IntVec tuple(N, Int(0));
    Int mfact = 1;
    for (int i = 2; i <= m; ++i) mfact *= i;
    std::function<void(int, int)> rec = [&](int j, int left) {
        if (j == N - 1) {
            tuple[j] = left;
            for (int i = 0; i < config.rows(); ++i) {
                if (i == hrow) continue;
                Int s = 0;
                for (int k = 0; k < N; ++k) s += tuple[k] * A(i, k);
                if (s != 0) return;
            }
            Int den = 1;
            for (const auto& t : tuple)
                for (Int i = 2; i <= t; ++i) den *= i;
            out.emplace_back(tuple, mfact / den);
            return;
        }
        for (int e = left; e >= 0; --e) {
            tuple[j] = e;
            rec(j + 1, left - e);
        }
    };
    rec(0, m);
    return out;
}

}  // namespace gkz
