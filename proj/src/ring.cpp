#include "gkz/ring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "gkz/error.hpp"
#include "gkz/linalg.hpp"

namespace gkz {

// ---------------------------------------------------------------- elements

RingElement::RingElement(RingPtr ring, RatVec coords) : ring_(std::move(ring)), c_(std::move(coords)) {
    if (static_cast<int>(c_.size()) != ring_->rank()) fail("ShapeMismatch", "coordinate vector has wrong length");
}

RingElement RingElement::zero(const RingPtr& ring) { return RingElement(ring, RatVec(ring->rank(), Rat(0))); }

RingElement RingElement::one(const RingPtr& ring) { return scalar(ring, Rat(1)); }

RingElement RingElement::scalar(const RingPtr& ring, const Rat& c) {
    RatVec v(ring->rank(), Rat(0));
    v[0] = c;
    return RingElement(ring, std::move(v));
}

RingElement RingElement::operator+(const RingElement& o) const {
    RingElement r = *this;
    r += o;
    return r;
}

RingElement RingElement::operator-(const RingElement& o) const {
    RingElement r = *this;
    r -= o;
    return r;
}

RingElement RingElement::operator-() const {
    RingElement r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

RingElement& RingElement::operator+=(const RingElement& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

RingElement RingElement::operator*(const RingElement& o) const {
    const GradedQuotientRing& R = *ring_;
    const int n = R.rank(), top = R.top_degree();
    RatVec out(n, Rat(0));
    Rat prod;
    for (int a = 0; a < n; ++a) {
        if (c_[a] == 0) continue;
        for (int b = 0; b < n; ++b) {
            if (o.c_[b] == 0) continue;
            if (R.degree(a) + R.degree(b) > top) break;
            const SparseIntVec& t = R.product(a, b);
            if (t.empty()) continue;
            prod = c_[a] * o.c_[b];
            for (const auto& [idx, v] : t) out[idx] += prod * v;
        }
    }
    return RingElement(ring_, std::move(out));
}

RingElement& RingElement::operator*=(const RingElement& o) {
    *this = *this * o;
    return *this;
}

RingElement RingElement::operator*(const Rat& s) const {
    RingElement r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

bool RingElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
}

RingElement RingElement::part(int m) const {
    RatVec v(c_.size(), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (ring_->degree(static_cast<int>(i)) == m) v[i] = c_[i];
    return RingElement(ring_, std::move(v));
}

std::optional<int> RingElement::homogeneous_degree() const {
    std::optional<int> deg;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        int d = ring_->degree(static_cast<int>(i));
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

RingElement RingElement::inverse() const {
    if (c_[0] == 0) fail("NotAUnit", "element has zero constant term");
    Rat c = c_[0];
    RingElement nil = *this;
    nil.c_[0] = 0;
    RingElement step = nil * (-1 / c);
    // u^{-1} = c^{-1} sum_i (-n/c)^i, the sum stopping by nilpotency
    RingElement term = one(ring_), sum = one(ring_);
    for (int i = 1; i <= ring_->top_degree(); ++i) {
        term = term * step;
        sum += term;
    }
    return sum * (1 / c);
}

// ------------------------------------------------------------------- rings

void GradedQuotientRing::finish_offsets() {
    offsets_.assign(ranks_.size() + 1, 0);
    for (std::size_t m = 0; m < ranks_.size(); ++m) offsets_[m + 1] = offsets_[m] + ranks_[m];
    degree_.clear();
    for (std::size_t m = 0; m < ranks_.size(); ++m)
        for (int i = 0; i < ranks_[m]; ++i) degree_.push_back(static_cast<int>(m));
}

RingElement GradedQuotientRing::generator(int j) const { return RingElement(ptr(), generators_.at(j)); }

RingElement GradedQuotientRing::variable(int i) const { return RingElement(ptr(), variables_.at(i)); }

RingElement GradedQuotientRing::monomial(const Monomial& m) const {
    RingElement r = RingElement::one(ptr());
    for (int i = 0; i < nvars_; ++i)
        for (int e = 0; e < m[i]; ++e) r = r * variable(i);
    return r;
}

RingElement GradedQuotientRing::project(const RingElement& v) const {
    if (!parent_) return v;
    const GradedQuotientRing& P = *parent_;
    RatVec w = v.coords();
    for (int m = 0; m <= P.top_degree(); ++m)
        for (const auto& [pivot, row] : reducers_[m]) {
            Rat f = w[pivot];
            if (f == 0) continue;
            for (int i = 0; i < P.ranks()[m]; ++i) w[P.offset(m) + i] -= f * row[i];
        }
    RatVec out(rank());
    for (int i = 0; i < rank(); ++i) out[i] = w[lift_index_[i]];
    return RingElement(ptr(), std::move(out));
}

RingElement GradedQuotientRing::lift(const RingElement& e) const {
    if (!parent_) return e;
    RatVec out(parent_->rank(), Rat(0));
    for (int i = 0; i < rank(); ++i) out[lift_index_[i]] = e[i];
    return RingElement(parent_, std::move(out));
}

namespace {

using Poly = std::map<Monomial, Int>;

std::vector<Monomial> monomials_of_degree(int d, int m) {
    std::vector<Monomial> out;
    Monomial cur(d, 0);
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == d - 1) {
            cur[var] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[var] = e;
            rec(var + 1, left - e);
        }
    };
    if (d == 0) {
        if (m == 0) out.push_back({});
        return out;
    }
    rec(0, m);
    return out;
}

Poly multiply(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Monomial m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out[m] += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

int total_degree(const Monomial& m) {
    int s = 0;
    for (int e : m) s += e;
    return s;
}

bool is_face(const std::vector<Index>& simplices, const Index& S) {
    return std::any_of(simplices.begin(), simplices.end(), [&](const Index& I) { return is_subset(S, I); });
}

bool has_torsion(const IntMatrix& rows) {
    auto inv = smith_invariants(rows);
    return std::any_of(inv.begin(), inv.end(), [](const Int& x) { return x != 1; });
}

bool unit_pivots(const Hnf& h) {
    for (std::size_t r = 0; r < h.pivots.size(); ++r)
        if (h.H(r, h.pivots[r]) != 1) return false;
    return true;
}

void require_unit_pivots(const Hnf& h, const IntMatrix& rows, const std::string& what) {
    if (unit_pivots(h)) return;
    if (has_torsion(rows)) fail("TorsionQuotient", what + " has torsion");
    fail("NonMonomialBasis", what + " has no complement among the basis elements");
}

// Coordinates over the chosen basis of every monomial of one degree.
using NormalForms = std::map<Monomial, IntVec>;

struct DegreePiece {
    NormalForms forms;
    std::vector<Poly> lifts;      // basis elements as polynomials
    std::vector<Monomial> labels;  // a monomial naming each basis element
};

// Z^mons / rowspace(rel), which must be free. Standard monomials of the
// Hermite form are used when the pivots are units; otherwise the dual
// lattice ker(rel) gives the coordinates, preferring a monomial basis.
DegreePiece reduce_degree(const std::vector<Monomial>& mons, const IntMatrix& rel, const std::string& what) {
    const std::size_t M = mons.size();
    DegreePiece out;
    Hnf h;
    if (rel.rows() > 0) h = hermite(rel);
    if (rel.rows() == 0 || unit_pivots(h)) {
        std::vector<bool> is_pivot(M, false);
        for (int p : h.pivots) is_pivot[p] = true;
        std::vector<int> local(M, -1);
        for (std::size_t i = 0; i < M; ++i)
            if (!is_pivot[i]) {
                local[i] = static_cast<int>(out.labels.size());
                out.labels.push_back(mons[i]);
                out.lifts.push_back(Poly{{mons[i], Int(1)}});
            }
        const std::size_t r = out.labels.size();
        for (std::size_t i = 0; i < M; ++i) {
            IntVec v(r, Int(0));
            if (!is_pivot[i]) v[local[i]] = 1;
            out.forms[mons[i]] = v;
        }
        for (std::size_t p = 0; p < h.pivots.size(); ++p) {
            IntVec v(r, Int(0));
            for (std::size_t c = 0; c < M; ++c)
                if (!is_pivot[c] && h.H(p, c) != 0) v[local[c]] = -h.H(p, c);
            out.forms[mons[h.pivots[p]]] = v;
        }
        return out;
    }
    if (has_torsion(rel)) fail("TorsionQuotient", what + " has torsion; the chamber is not unimodular");
    IntMatrix phi = integer_kernel(rel);
    const std::size_t r = phi.rows();
    if (r == 0) return out;
    IntMatrix coords = phi;
    std::optional<Index> chosen;
    int tried = 0;
    for (const Index& C : subsets(static_cast<int>(M), static_cast<int>(r))) {
        if (++tried > 20000) break;
        Int dt = det(phi.select_cols(C));
        if (dt == 1 || dt == -1) {
            chosen = C;
            break;
        }
    }
    if (chosen) {
        RatMatrix sub = to_rat(phi.select_cols(*chosen));
        RatMatrix full = to_rat(phi);
        RatMatrix c = *inverse(sub) * full;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < M; ++j) coords(i, j) = c(i, j).get_num();
        for (int j : *chosen) {
            out.labels.push_back(mons[j]);
            out.lifts.push_back(Poly{{mons[j], Int(1)}});
        }
    } else {
        Hnf t = hermite(phi.transpose(), true);
        for (std::size_t i = 0; i < r; ++i) {
            Poly p;
            for (std::size_t j = 0; j < M; ++j)
                if (t.U(i, j) != 0) p[mons[j]] = t.U(i, j);
            out.labels.push_back(p.rbegin()->first);
            out.lifts.push_back(std::move(p));
        }
    }
    for (std::size_t j = 0; j < M; ++j) out.forms[mons[j]] = coords.col(j);
    return out;
}

}  // namespace

std::vector<Index> minimal_nonfaces(const RegularTriangulation& T, int N) {
    std::vector<Index> out;
    int maxsize = 0;
    for (const auto& I : T.simplices) maxsize = std::max<int>(maxsize, static_cast<int>(I.size()));
    for (int s = 1; s <= std::min(N, maxsize + 1); ++s)
        for (const Index& S : subsets(N, s)) {
            if (is_face(T.simplices, S)) continue;
            bool minimal = true;
            for (std::size_t drop = 0; drop < S.size() && minimal; ++drop) {
                Index sub;
                for (std::size_t i = 0; i < S.size(); ++i)
                    if (i != drop) sub.push_back(S[i]);
                if (!is_face(T.simplices, sub)) minimal = false;
            }
            if (minimal) out.push_back(S);
        }
    return out;
}

RingPtr build_ring(const PointConfiguration& config, const RelationLattice& lattice,
                   const RegularTriangulation& T) {
    const int d = lattice.rank(), N = lattice.size();
    auto ring = std::make_shared<GradedQuotientRing>();
    ring->nvars_ = d;

    std::vector<Poly> eps(N);
    for (int j = 0; j < N; ++j)
        for (int i = 0; i < d; ++i) {
            if (lattice.basis()(i, j) == 0) continue;
            Monomial m(d, 0);
            m[i] = 1;
            eps[j][m] = lattice.basis()(i, j);
        }
    std::vector<Poly> sr;
    for (const Index& S : minimal_nonfaces(T, N)) {
        Poly p{{Monomial(d, 0), Int(1)}};
        for (int j : S) p = multiply(p, eps[j]);
        sr.push_back(std::move(p));
    }

    std::vector<NormalForms> nf;
    std::vector<std::vector<Poly>> lifts;
    std::vector<std::vector<Monomial>> labels;
    const int cap = config.rows() + 2;
    for (int m = 0; m <= cap; ++m) {
        std::vector<Monomial> mons = monomials_of_degree(d, m);
        std::map<Monomial, int> col;
        for (std::size_t i = 0; i < mons.size(); ++i) col[mons[i]] = static_cast<int>(i);
        IntMatrix rel(0, mons.size());
        for (const Poly& p : sr) {
            int pd = total_degree(p.begin()->first);
            if (pd > m) continue;
            for (const Monomial& mu : monomials_of_degree(d, m - pd)) {
                IntVec row(mons.size(), Int(0));
                for (const auto& [mono, c] : p) {
                    Monomial t(d);
                    for (int i = 0; i < d; ++i) t[i] = mono[i] + mu[i];
                    row[col.at(t)] += c;
                }
                rel.append_row(row);
            }
        }
        DegreePiece piece = reduce_degree(mons, rel, "degree " + std::to_string(m) + " piece");
        if (piece.lifts.empty()) break;
        nf.push_back(std::move(piece.forms));
        lifts.push_back(std::move(piece.lifts));
        labels.push_back(std::move(piece.labels));
        if (m == cap) fail("InternalError", "graded pieces do not vanish above k");
    }

    for (auto& b : labels) {
        ring->ranks_.push_back(static_cast<int>(b.size()));
        for (auto& mono : b) ring->basis_.push_back(mono);
    }
    ring->finish_offsets();
    const int n = ring->rank(), top = ring->top_degree();
    std::vector<const Poly*> lift_of;
    for (auto& l : lifts)
        for (auto& p : l) lift_of.push_back(&p);
    ring->table_.assign(n, std::vector<SparseIntVec>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int deg = ring->degree_[a] + ring->degree_[b];
            if (deg > top) continue;
            IntVec acc(ring->ranks_[deg], Int(0));
            for (const auto& [mono, c] : multiply(*lift_of[a], *lift_of[b]))
                for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * nf[deg].at(mono)[i];
            SparseIntVec sp;
            for (std::size_t i = 0; i < acc.size(); ++i)
                if (acc[i] != 0) sp.emplace_back(ring->offsets_[deg] + static_cast<int>(i), acc[i]);
            ring->table_[a][b] = std::move(sp);
        }
    auto dense = [&](int deg, const RatVec& local) {
        RatVec v(n, Rat(0));
        for (std::size_t i = 0; i < local.size(); ++i) v[ring->offsets_[deg] + i] = local[i];
        return v;
    };
    for (int i = 0; i < d; ++i) {
        Monomial m(d, 0);
        m[i] = 1;
        ring->variables_.push_back(top >= 1 ? dense(1, to_rat(nf[1].at(m))) : RatVec(n, Rat(0)));
    }
    for (int j = 0; j < N; ++j) {
        RatVec v(n, Rat(0));
        for (int i = 0; i < d; ++i)
            for (int c = 0; c < n; ++c) v[c] += Rat(lattice.basis()(i, j)) * ring->variables_[i][c];
        ring->generators_.push_back(v);
    }
    return ring;
}

bool poincare_check(const GradedQuotientRing& ring, const RegularTriangulation& T, int k1) {
    std::set<Index> faces;
    for (const Index& I : T.simplices)
        for (int s = 1; s <= static_cast<int>(I.size()); ++s)
            for (const Index& sub : subsets(static_cast<int>(I.size()), s)) {
                Index f;
                for (int x : sub) f.push_back(I[x]);
                faces.insert(f);
            }
    std::vector<Int> S(k1 + 1, Int(0));
    S[0] = 1;
    for (const Index& f : faces) {
        if (static_cast<int>(f.size()) > k1) return false;
        S[f.size()] += 1;
    }
    // sum_m S_m T^m (1-T)^{k+1-m}
    std::vector<Int> poly(k1 + 1, Int(0));
    for (int m = 0; m <= k1; ++m) {
        int e = k1 - m;
        Int binom = 1;
        for (int i = 0; i <= e; ++i) {
            Int term = S[m] * binom * ((i % 2) ? -1 : 1);
            poly[m + i] += term;
            binom = binom * (e - i) / (i + 1);
        }
    }
    for (int i = 0; i <= k1; ++i) {
        Int r = i < static_cast<int>(ring.ranks().size()) ? Int(ring.ranks()[i]) : Int(0);
        if (r != poly[i]) return false;
    }
    return static_cast<int>(ring.ranks().size()) <= k1 + 1;
}

RingPtr quotient_by_annihilator(const RingPtr& R, const RingElement& x0) {
    if (x0.is_zero()) fail("ZeroElement", "cannot quotient by the annihilator of zero");
    auto sdeg = x0.homogeneous_degree();
    if (!sdeg) fail("NotHomogeneous", "element must be homogeneous");
    const int s = *sdeg;
    RingElement x = x0 * Rat(lcm_of_denominators(x0.coords()));

    auto Q = std::make_shared<GradedQuotientRing>();
    Q->nvars_ = R->num_variables();
    Q->parent_ = R;
    Q->reducers_.resize(R->top_degree() + 1);
    std::vector<int> ranks;
    for (int m = 0; m <= R->top_degree(); ++m) {
        const int rm = R->ranks()[m], off = R->offset(m);
        std::vector<bool> is_pivot(rm, false);
        if (m + s > R->top_degree()) {
            for (int i = 0; i < rm; ++i) {
                RatVec row(rm, Rat(0));
                row[i] = 1;
                Q->reducers_[m].emplace_back(off + i, row);
                is_pivot[i] = true;
            }
        } else {
            const int rs = R->ranks()[m + s], offs = R->offset(m + s);
            IntMatrix M(rs, rm, Int(0));
            for (int b = 0; b < rm; ++b) {
                RatVec e(R->rank(), Rat(0));
                e[off + b] = 1;
                RingElement p = x * RingElement(R, e);
                for (int i = 0; i < rs; ++i) M(i, b) = p[offs + i].get_num();
            }
            IntMatrix K = integer_kernel(M);
            if (K.rows() > 0) {
                Hnf h = hermite(K);
                require_unit_pivots(h, K, "annihilator in degree " + std::to_string(m));
                for (std::size_t r = 0; r < h.pivots.size(); ++r) {
                    Q->reducers_[m].emplace_back(off + h.pivots[r], to_rat(h.H.row(r)));
                    is_pivot[h.pivots[r]] = true;
                }
            }
        }
        int count = 0;
        for (int i = 0; i < rm; ++i)
            if (!is_pivot[i]) {
                Q->lift_index_.push_back(off + i);
                Q->basis_.push_back(R->basis()[off + i]);
                ++count;
            }
        ranks.push_back(count);
    }
    while (!ranks.empty() && ranks.back() == 0) ranks.pop_back();
    Q->ranks_ = ranks;
    Q->finish_offsets();
    const int n = Q->rank();
    Q->table_.assign(n, std::vector<SparseIntVec>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (Q->degree_[a] + Q->degree_[b] > Q->top_degree()) continue;
            RatVec ea(R->rank(), Rat(0)), eb(R->rank(), Rat(0));
            ea[Q->lift_index_[a]] = 1;
            eb[Q->lift_index_[b]] = 1;
            RingElement prod = RingElement(R, ea) * RingElement(R, eb);
            RingElement pr = Q->project(prod);
            SparseIntVec sp;
            for (int i = 0; i < n; ++i) {
                if (pr[i] == 0) continue;
                if (!is_integral(pr[i])) fail("InternalError", "non-integral structure constant");
                sp.emplace_back(i, Int(pr[i].get_num()));
            }
            Q->table_[a][b] = std::move(sp);
        }
    for (int i = 0; i < R->num_variables(); ++i) Q->variables_.push_back(Q->project(R->variable(i)).coords());
    for (int j = 0; j < R->num_generators(); ++j) Q->generators_.push_back(Q->project(R->generator(j)).coords());
    return Q;
}

RingPtr make_truncated_polynomial_ring(int d, const std::vector<int>& nil) {
    auto ring = std::make_shared<GradedQuotientRing>();
    ring->nvars_ = d;
    int maxdeg = 0;
    for (int e : nil) maxdeg += e - 1;
    std::map<Monomial, int> index;
    for (int m = 0; m <= maxdeg; ++m) {
        int count = 0;
        for (const Monomial& mono : monomials_of_degree(d, m)) {
            bool ok = true;
            for (int i = 0; i < d; ++i) ok &= mono[i] < nil[i];
            if (!ok) continue;
            index[mono] = static_cast<int>(ring->basis_.size());
            ring->basis_.push_back(mono);
            ++count;
        }
        ring->ranks_.push_back(count);
    }
    ring->finish_offsets();
    const int n = ring->rank();
    ring->table_.assign(n, std::vector<SparseIntVec>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Monomial m(d);
            for (int i = 0; i < d; ++i) m[i] = ring->basis_[a][i] + ring->basis_[b][i];
            auto it = index.find(m);
            if (it != index.end()) ring->table_[a][b] = {{it->second, Int(1)}};
        }
    for (int i = 0; i < d; ++i) {
        RatVec v(n, Rat(0));
        Monomial m(d, 0);
        m[i] = 1;
        auto it = index.find(m);
        if (it != index.end()) v[it->second] = 1;
        ring->variables_.push_back(v);
    }
    return ring;
}

std::vector<RingElement> standard_basis(const RingPtr& ring) {
    std::vector<RingElement> out;
    for (int i = 0; i < ring->rank(); ++i) {
        RatVec v(ring->rank(), Rat(0));
        v[i] = 1;
        out.emplace_back(ring, v);
    }
    return out;
}

namespace {

RatMatrix basis_matrix(const std::vector<RingElement>& basis) {
    const std::size_t n = basis.size();
    RatMatrix P(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) P(i, j) = basis[j][i];
    return P;
}

}  // namespace

RatMatrix multiplication_matrix(const RingElement& x, const std::vector<RingElement>& basis) {
    RatMatrix P = basis_matrix(basis);
    auto Pinv = inverse(P);
    if (!Pinv) fail("NotABasis", "ordered basis is not a basis of the ring");
    RatMatrix img(P.rows(), P.cols());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        RingElement p = x * basis[j];
        for (std::size_t i = 0; i < basis.size(); ++i) img(i, j) = p[i];
    }
    return *Pinv * img;
}

RatMatrix tau_pairing(const RingPtr& ring, const std::vector<RingElement>& basis) {
    const int top = ring->top_degree();
    if (ring->ranks()[top] != 1) fail("TopRankNotOne", "top graded piece must have rank one");
    const int t = ring->offset(top);
    const std::size_t n = basis.size();
    RatMatrix G(n, n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        auto di = basis[i].homogeneous_degree();
        if (!di) fail("NotHomogeneous", "pairing basis elements must be homogeneous");
        for (std::size_t j = 0; j < n; ++j) {
            Rat v = (basis[i] * basis[j])[t];
            G(i, j) = (*di % 2) ? -v : v;
        }
    }
    return G;
}

RatMatrix tau_pairing(const RingPtr& ring) { return tau_pairing(ring, standard_basis(ring)); }

std::vector<RatMatrix> monodromy_invariant_forms(const RingPtr& ring, const std::vector<RingElement>& basis) {
    const int n = static_cast<int>(basis.size());
    std::map<std::pair<int, int>, int> var;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) var[{i, j}] = static_cast<int>(var.size());
    auto coef = [&](int i, int j, RatVec& row, const Rat& c) {
        if (i == j) return;
        if (i < j)
            row[var.at({i, j})] += c;
        else
            row[var.at({j, i})] -= c;
    };
    RatMatrix system(0, var.size());
    for (int a = 0; a < ring->num_variables(); ++a) {
        RatMatrix M = multiplication_matrix(ring->variable(a), basis);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                RatVec row(var.size(), Rat(0));
                for (int k = 0; k < n; ++k) {
                    if (M(p, k) != 0) coef(k, q, row, M(p, k));
                    if (M(q, k) != 0) coef(p, k, row, M(q, k));
                }
                if (std::any_of(row.begin(), row.end(), [](const Rat& x) { return x != 0; })) system.append_row(row);
            }
    }
    std::vector<RatMatrix> out;
    RatMatrix ns = system.rows() ? nullspace(system) : RatMatrix::identity(var.size());
    for (std::size_t r = 0; r < ns.rows(); ++r) {
        RatMatrix G(n, n, Rat(0));
        for (const auto& [ij, v] : var) {
            G(ij.first, ij.second) = ns(r, v);
            G(ij.second, ij.first) = -ns(r, v);
        }
        out.push_back(G);
    }
    return out;
}

std::vector<RatMatrix> monodromy_invariant_forms(const RingPtr& ring) {
    return monodromy_invariant_forms(ring, standard_basis(ring));
}

}  // namespace gkz
