#include "gkz/mirror.hpp"

#include <numeric>

#include "gkz/error.hpp"
#include "gkz/linalg.hpp"

namespace gkz {

std::vector<int> default_signs(const IntMatrix& B) {
    std::vector<int> out;
    for (std::size_t i = 0; i < B.rows(); ++i) {
        Int neg = 0;
        for (std::size_t j = 0; j < B.cols(); ++j)
            if (B(i, j) < 0) neg -= B(i, j);
        out.push_back(neg % 2 == 0 ? 1 : -1);
    }
    return out;
}

MirrorModel make_model(std::string name, const IntMatrix& B, const IntVec& gamma, int kappa,
                       std::optional<std::vector<int>> signs, int order) {
    MirrorModel m;
    m.name = std::move(name);
    m.config = configuration_from_relations(B);
    m.lattice = RelationLattice(m.config, B);
    const int d = m.lattice.rank(), N = m.lattice.size();
    if (static_cast<int>(gamma.size()) != N) fail("ShapeMismatch", "gamma must have one entry per column of B");
    RatVec t(d, Rat(0));
    for (int j = N - d; j < N; ++j)
        for (int i = 0; i < d; ++i) t[i] += Rat(B(i, j));
    m.chamber = triangulation_from_t(m.config, m.lattice, t);
    m.gamma = to_rat(gamma);
    if (kappa <= 0) fail("BadParameter", "kappa must be positive");
    m.kappa = kappa;
    m.signs = signs ? *signs : default_signs(B);
    if (static_cast<int>(m.signs.size()) != d) fail("ShapeMismatch", "one sign per row of B");
    for (int s : m.signs)
        if (s != 1 && s != -1) fail("BadParameter", "signs must be +1 or -1");
    m.order = order;
    return m;
}

RingSeries ring_series_product(const GradedQuotientRing& R, const RingSeries& a, const RingSeries& b) {
    const int n = R.rank();
    int order = std::min(a[0].order(), b[0].order());
    RingSeries out(n, MultiSeries(a[0].vars(), order));
    for (int i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (b[j].is_zero() || R.product(i, j).empty()) continue;
            MultiSeries p = a[i] * b[j];
            for (const auto& [k, v] : R.product(i, j)) out[k] += p * Rat(v);
        }
    }
    return out;
}

ComponentSeries component_series(const MirrorModel& model, int order) {
    ComponentSeries out;
    out.ring = build_ring(model.config, model.lattice, model.chamber);
    auto data = deformed_data(model.config, model.lattice, model.chamber, model.gamma, out.ring);
    if (!data.adapted || data.basis != model.lattice.basis())
        fail("NotAdapted", "the rows of B must generate the chamber monoid");
    auto s = expand_deformed(data, order);
    const int d = model.lattice.rank();
    auto zero = s.terms.find(MultiIndex(d, 0));
    if (zero == s.terms.end()) fail("ZeroElement", "the series has no constant term");
    out.x = zero->second.coeff;
    out.quotient = quotient_by_annihilator(out.ring, out.x);
    const GradedQuotientRing& Q = *out.quotient;

    // x * lift(.) embeds R-bar in R; solve it by a left inverse
    const int r = out.ring->rank(), q = Q.rank();
    RatMatrix M(r, q);
    for (int i = 0; i < q; ++i) {
        RatVec e(q, Rat(0));
        e[i] = 1;
        RingElement img = out.x * Q.lift(RingElement(out.quotient, e));
        for (int k = 0; k < r; ++k) M(k, i) = img[k];
    }
    RatMatrix Mt = M.transpose();
    auto left = inverse(Mt * M);
    if (!left) fail("InternalError", "multiplication by x is not injective on R-bar");
    RatMatrix P = *left * Mt;

    RingSeries G(q, MultiSeries(d, order));
    for (const auto& [n, t] : s.terms) {
        RatVec g = mat_vec(P, t.coeff.coords());
        if (mat_vec(M, g) != t.coeff.coords()) fail("InternalError", "coefficient is not divisible by x");
        for (int i = 0; i < q; ++i) G[i].set(n, g[i]);
    }
    out.F0 = G[0];
    MultiSeries inv = reciprocal(out.F0);
    out.normalized.resize(q);
    for (int i = 0; i < q; ++i) out.normalized[i] = G[i] * inv;

    RingSeries N = out.normalized;
    N[0] = N[0] - MultiSeries::constant(d, order, Rat(1));
    if (!N[0].is_zero()) fail("InternalError", "normalized series has a nonconstant unit component");
    out.log.assign(q, MultiSeries(d, order));
    RingSeries power = N;
    for (int k = 1; k <= Q.top_degree(); ++k) {
        for (int i = 0; i < q; ++i) out.log[i] += power[i] * Rat(k % 2 ? 1 : -1, k);
        power = ring_series_product(Q, power, N);
    }
    return out;
}

namespace {

int variable_index(const GradedQuotientRing& Q, int i) {
    RingElement v = Q.variable(i);
    int idx = Q.offset(1) + i;
    for (int k = 0; k < Q.rank(); ++k)
        if (v[k] != (k == idx ? 1 : 0)) fail("NonMonomialBasis", "degree one basis of R-bar is not delta-bar");
    return idx;
}

// f / z_i, requiring divisibility
MultiSeries divide_by_variable(const MultiSeries& f, int i) {
    MultiSeries out(f.vars(), f.order());
    for (const auto& [n, v] : f.coefficients()) {
        if (n[i] == 0) fail("BadLinearPart", "series is not divisible by its own variable");
        MultiIndex m = n;
        --m[i];
        out.set(m, v);
    }
    return out;
}

}  // namespace

std::vector<MultiSeries> canonical_coordinates(const MirrorModel& model, const ComponentSeries& comps) {
    const int d = model.lattice.rank();
    std::vector<MultiSeries> q;
    for (int i = 0; i < d; ++i) {
        const MultiSeries& f1 = comps.log[variable_index(*comps.quotient, i)];
        MultiSeries zi = MultiSeries::variable(d, f1.order(), i) * Rat(model.signs[i]);
        q.push_back(zi * exp(f1));
    }
    return q;
}

std::vector<MultiSeries> invert_mirror_map(const std::vector<MultiSeries>& q, int order) {
    const int d = static_cast<int>(q.size());
    std::vector<int> sigma(d);
    std::vector<MultiSeries> unit(d);  // q_i / (sigma_i z_i)
    for (int i = 0; i < d; ++i) {
        MultiIndex e(d, 0);
        e[i] = 1;
        Rat lin = q[i].coeff(e);
        if (lin != 1 && lin != -1) fail("BadLinearPart", "linear part must be +-z_i");
        for (int j = 0; j < d; ++j) {
            MultiIndex f(d, 0);
            f[j] = 1;
            if (j != i && q[i].coeff(f) != 0) fail("BadLinearPart", "linear part mixes variables");
        }
        sigma[i] = lin > 0 ? 1 : -1;
        unit[i] = reciprocal(divide_by_variable(q[i].truncated(order + 1), i) * Rat(sigma[i])).truncated(order);
    }
    // z_i = sigma_i q_i / (q_i(z) / (sigma_i z_i)); each pass fixes one more order
    std::vector<MultiSeries> z(d);
    for (int i = 0; i < d; ++i) z[i] = MultiSeries::variable(d, order, i) * Rat(sigma[i]);
    for (int pass = 0; pass < order; ++pass) {
        std::vector<MultiSeries> next(d);
        for (int i = 0; i < d; ++i)
            next[i] = MultiSeries::variable(d, order, i) * Rat(sigma[i]) * compose(unit[i], z);
        if (next == z) break;
        z = std::move(next);
    }
    return z;
}

MultiSeries instanton_part(const MirrorModel& model, const ComponentSeries& comps,
                           const std::vector<MultiSeries>& z_of_q) {
    const GradedQuotientRing& Q = *comps.quotient;
    if (Q.ranks().back() != 1) fail("TopRankNotOne", "top degree of R-bar must have rank one");
    const MultiSeries& tau = comps.log[Q.offset(Q.top_degree())];
    return compose(tau, z_of_q) * Rat(-model.kappa, 2);
}

bool InstantonTable::all_integral() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return is_integral(e.second); });
}

bool InstantonTable::all_positive() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.second > 0; });
}

InstantonTable extract_instanton_numbers(const MultiSeries& part) {
    if (part.constant_term() != 0) fail("ConstantTerm", "instanton part must vanish at q = 0");
    InstantonTable table;
    const int d = part.vars();
    for (const MultiIndex& m : multi_indices(d, part.order())) {
        if (total_degree(m) == 0) continue;
        Rat value = part.coeff(m);
        int g = 0;
        for (int x : m) g = std::gcd(g, x);
        for (int n = 2; n <= g; ++n) {
            if (g % n) continue;
            MultiIndex sub = m;
            for (int& x : sub) x /= n;
            value -= table.entries.at(sub) / Rat(n * n * n);
        }
        table.entries[m] = value;
    }
    return table;
}

PairingReport pairing_report(const MirrorModel& model, const RingPtr& quotient) {
    std::vector<RingElement> basis;
    if (model.pairing_basis.empty())
        basis = standard_basis(quotient);
    else
        for (const auto& m : model.pairing_basis) basis.push_back(quotient->monomial(m));
    PairingReport rep;
    rep.form_dimension = monodromy_invariant_forms(quotient, basis).size();
    rep.gramm = tau_pairing(quotient, basis);
    const RatMatrix& G = rep.gramm;
    rep.tau_invariant = true;
    for (int a = 0; a < quotient->num_variables(); ++a) {
        RatMatrix M = multiplication_matrix(quotient->variable(a), basis);
        RatMatrix lhs = M * G, rhs = G * M.transpose();
        for (std::size_t i = 0; i < G.rows(); ++i)
            for (std::size_t j = 0; j < G.cols(); ++j)
                if (lhs(i, j) != -rhs(i, j)) rep.tau_invariant = false;
    }
    const int d = model.lattice.rank(), n = static_cast<int>(basis.size());
    if (n != 2 * d + 2) return rep;
    Rat s = G(0, n - 1);
    bool ok = s == 1 || s == -1;
    for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j) {
            Rat expect = 0;
            if (i == 0 && j == n - 1) expect = s;
            if (j == 0 && i == n - 1) expect = -s;
            if (i >= 1 && i <= d && j == i + d) expect = -s;
            if (j >= 1 && j <= d && i == j + d) expect = s;
            ok = G(i, j) == expect;
        }
    rep.sign_pattern = ok;
    return rep;
}

MirrorResult run_mirror(const MirrorModel& model, int order) {
    MirrorResult r;
    r.components = component_series(model, order);
    r.q = canonical_coordinates(model, r.components);
    r.z = invert_mirror_map(r.q, order);
    r.part = instanton_part(model, r.components, r.z);
    r.table = extract_instanton_numbers(r.part);
    r.pairing = pairing_report(model, r.components.quotient);
    return r;
}

}  // namespace gkz
