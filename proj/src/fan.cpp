#include "gkz/fan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "gkz/error.hpp"
#include "gkz/linalg.hpp"
#include "gkz/polyhedral.hpp"

namespace gkz {

WeightVector make_weight(const RelationLattice& lattice, const RatVec& alpha) {
    if (static_cast<int>(alpha.size()) != lattice.size())
        fail("ShapeMismatch", "weight must have N entries");
    RatVec t(lattice.rank(), Rat(0));
    for (int i = 0; i < lattice.rank(); ++i)
        for (int j = 0; j < lattice.size(); ++j) t[i] += alpha[j] * Rat(lattice.basis()(i, j));
    return {alpha, t};
}

std::vector<Index> vertex_list(const RelationLattice& lattice, const RatVec& t) {
    const int d = lattice.rank(), n = lattice.size();
    if (static_cast<int>(t.size()) != d) fail("ShapeMismatch", "t must have d entries");
    const RatMatrix B = to_rat(lattice.basis());
    std::vector<Index> out;
    bool t_zero = std::all_of(t.begin(), t.end(), [](const Rat& x) { return x == 0; });
    if (t_zero) {
        Index all(n);
        std::iota(all.begin(), all.end(), 0);
        return {all};
    }
    for (int s = 1; s <= d; ++s) {
        for (const Index& Jc : subsets(n, s)) {
            RatMatrix BJ = B.select_cols(Jc);
            if (rank(BJ) != s) continue;
            auto tau = solve(BJ, t);
            if (!tau) continue;
            if (std::all_of(tau->begin(), tau->end(), [](const Rat& x) { return x > 0; }))
                out.push_back(complement(Jc, n));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

RatVec integral_scaled(const RatVec& v) {
    Int l = lcm_of_denominators(v);
    RatVec out(v.size());
    IntVec ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) ints[i] = Rat(v[i] * l).get_num();
    Int g = gcd_of(ints);
    if (g == 0) g = 1;
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(ints[i] / g);
    return out;
}

// Weight supported on the complement of the first simplex, realizing t.
WeightVector witness_from_t(const RelationLattice& lattice, const Index& first_simplex, RatVec t) {
    Index Jc = complement(first_simplex, lattice.size());
    RatMatrix BJ = to_rat(lattice.basis().select_cols(Jc));
    auto tau = solve(BJ, t);
    if (!tau) fail("NonGenericWeight", "t is not in the span of the complement columns");
    Int l = lcm_of_denominators(*tau);
    RatVec alpha(lattice.size(), Rat(0));
    for (std::size_t i = 0; i < Jc.size(); ++i) alpha[Jc[i]] = (*tau)[i] * l;
    for (auto& x : t) x *= l;
    return {alpha, t};
}

}  // namespace

RegularTriangulation triangulation_from_t(const PointConfiguration& config,
                                          const RelationLattice& lattice, const RatVec& t0) {
    RatVec t = integral_scaled(t0);
    std::vector<Index> list = vertex_list(lattice, t);
    const std::size_t k1 = static_cast<std::size_t>(config.rows());
    for (const Index& I : list)
        if (I.size() != k1)
            fail("NonGenericWeight", "t lies on a wall; list member " + index_to_string(I) +
                                         " is not a simplex");
    if (list.empty()) fail("NonGenericWeight", "empty vertex list");
    RegularTriangulation T;
    T.simplices = list;
    T.witness = witness_from_t(lattice, list.front(), t);
    return T;
}

RegularTriangulation triangulation_from_weight(const PointConfiguration& config,
                                               const RelationLattice& lattice, const RatVec& alpha) {
    WeightVector w = make_weight(lattice, alpha);
    if (std::all_of(w.t.begin(), w.t.end(), [](const Rat& x) { return x == 0; }))
        fail("NonGenericWeight", "t = 0 lies on every wall");
    RegularTriangulation T = triangulation_from_t(config, lattice, w.t);
    T.witness = w;
    return T;
}

bool is_unimodular(const PointConfiguration& config, const RegularTriangulation& T) {
    return std::all_of(T.simplices.begin(), T.simplices.end(),
                       [&](const Index& I) { return simplex_volume(config, I) == 1; });
}

Int total_volume(const PointConfiguration& config, const RelationLattice& lattice) {
    if (lattice.rank() == 0) return simplex_volume(config, complement({}, config.size()));
    std::mt19937_64 rng(20240607);
    std::uniform_int_distribution<long> dist(1, 1000003);
    for (int attempt = 0; attempt < 64; ++attempt) {
        RatVec t(lattice.rank());
        for (auto& x : t) x = Rat(dist(rng));
        try {
            RegularTriangulation T = triangulation_from_t(config, lattice, t);
            Int v = 0;
            for (const Index& I : T.simplices) v += simplex_volume(config, I);
            return v;
        } catch (const MathError&) {
        }
    }
    fail("NonGenericWeight", "could not find a generic weight");
}

IntVec gkz_vector(const PointConfiguration& config, const RegularTriangulation& T) {
    IntVec q(config.size(), Int(0));
    for (const Index& I : T.simplices) {
        Int v = simplex_volume(config, I);
        for (int j : I) q[j] += v;
    }
    return q;
}

RatMatrix chamber_normals(const RelationLattice& lattice, const std::vector<Index>& simplices) {
    RatMatrix out(0, lattice.rank());
    const RatMatrix B = to_rat(lattice.basis());
    for (const Index& I : simplices) {
        auto inv = inverse(B.select_cols(complement(I, lattice.size())));
        if (!inv) fail("SingularComplement", "complement of " + index_to_string(I) + " is singular");
        for (std::size_t r = 0; r < inv->rows(); ++r) out.append_row(inv->row(r));
    }
    if (out.rows() == 0) return RatMatrix(0, lattice.rank());
    return out;
}

bool intersect_properly(const PointConfiguration& config, const Index& I1, const Index& I2) {
    Index U;
    std::set_union(I1.begin(), I1.end(), I2.begin(), I2.end(), std::back_inserter(U));
    RatMatrix K = nullspace(to_rat(config.matrix().select_cols(U)));
    if (K.rows() == 0) return true;
    // Improper iff some relation among U is >= 0 on I1\I2, <= 0 on I2\I1
    // and nonzero there.
    std::vector<Inequality> sys;
    RatVec norm(K.rows(), Rat(0));
    for (std::size_t u = 0; u < U.size(); ++u) {
        bool in1 = std::binary_search(I1.begin(), I1.end(), U[u]);
        bool in2 = std::binary_search(I2.begin(), I2.end(), U[u]);
        if (in1 && in2) continue;
        Rat sgn = in1 ? 1 : -1;
        RatVec a(K.rows());
        for (std::size_t r = 0; r < K.rows(); ++r) a[r] = sgn * K(r, u);
        for (std::size_t r = 0; r < K.rows(); ++r) norm[r] += a[r];
        sys.push_back({a, Rat(0), false});
    }
    sys.push_back({norm, Rat(1), false});
    return !feasible_point(K.rows(), std::move(sys)).has_value();
}

bool is_triangulation(const PointConfiguration& config, const RelationLattice& lattice,
                      const std::vector<Index>& simplices) {
    Int vol = 0;
    for (const Index& I : simplices) {
        if (static_cast<int>(I.size()) != config.rows()) return false;
        Int v = simplex_volume(config, I);
        if (v == 0) return false;
        vol += v;
    }
    if (vol != total_volume(config, lattice)) return false;
    for (std::size_t a = 0; a < simplices.size(); ++a)
        for (std::size_t b = a + 1; b < simplices.size(); ++b)
            if (!intersect_properly(config, simplices[a], simplices[b])) return false;
    return true;
}

namespace {

struct FacetInfo {
    IntVec normal;
    bool boundary = false;
};

int sign_of(const Int& x) { return sgn(x); }

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

class TriangulationSearch {
public:
    TriangulationSearch(const PointConfiguration& config, const RelationLattice& lattice)
        : config_(config), lattice_(lattice), n_(config.size()), k1_(config.rows()) {
        volume_ = total_volume(config, lattice);
        for (int j = 0; j < n_; ++j) points_.push_back(config.point(j));
    }

    std::vector<std::vector<Index>> run() {
        for (const Index& S : start_simplices()) {
            state_.clear();
            facet_count_.clear();
            push(S);
            dfs(simplex_volume(config_, S));
        }
        return std::vector<std::vector<Index>>(found_.begin(), found_.end());
    }

private:
    const FacetInfo& facet(const Index& F) {
        auto it = facets_.find(F);
        if (it != facets_.end()) return it->second;
        FacetInfo info;
        IntMatrix ker = integer_kernel(config_.matrix().select_cols(F).transpose());
        info.normal = ker.row(0);
        bool pos = false, neg = false;
        for (const auto& p : points_) {
            int s = sign_of(dot(info.normal, p));
            pos |= s > 0;
            neg |= s < 0;
        }
        info.boundary = !(pos && neg);
        return facets_.emplace(F, info).first->second;
    }

    bool proper(const Index& a, const Index& b) {
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        auto it = proper_.find(key);
        if (it != proper_.end()) return it->second;
        bool r = intersect_properly(config_, a, b);
        proper_.emplace(key, r);
        return r;
    }

    // Simplices containing a fixed generic interior point; every
    // triangulation has exactly one of them.
    std::vector<Index> start_simplices() {
        std::vector<Index> candidates;
        for (const Index& S : subsets(n_, k1_))
            if (simplex_volume(config_, S) != 0) candidates.push_back(S);
        std::mt19937_64 rng(7919);
        std::uniform_int_distribution<long> dist(1, 1000003);
        for (int attempt = 0; attempt < 64; ++attempt) {
            RatVec p(k1_, Rat(0));
            for (int j = 0; j < n_; ++j) {
                Rat w(dist(rng));
                for (int i = 0; i < k1_; ++i) p[i] += w * Rat(points_[j][i]);
            }
            std::vector<Index> hits;
            bool generic = true;
            for (const Index& S : candidates) {
                auto coords = solve(to_rat(config_.matrix().select_cols(S)), p);
                if (std::any_of(coords->begin(), coords->end(), [](const Rat& x) { return x == 0; })) {
                    generic = false;
                    break;
                }
                if (std::all_of(coords->begin(), coords->end(), [](const Rat& x) { return x > 0; }))
                    hits.push_back(S);
            }
            if (generic) return hits;
        }
        fail("NonGenericWeight", "could not find a generic interior point");
    }

    void push(const Index& S) {
        state_.push_back(S);
        for (int v : S) facet_count_[without(S, v)]++;
    }

    void pop() {
        const Index S = state_.back();
        for (int v : S) {
            auto it = facet_count_.find(without(S, v));
            if (--it->second == 0) facet_count_.erase(it);
        }
        state_.pop_back();
    }

    static Index without(const Index& S, int v) {
        Index F;
        for (int x : S)
            if (x != v) F.push_back(x);
        return F;
    }

    // The first interior facet covered only once decides the branching:
    // exactly one simplex on its other side belongs to any completion.
    bool open_facet(Index& F, int& apex_vertex) {
        for (const Index& S : state_)
            for (int v : S) {
                Index G = without(S, v);
                if (facet_count_.at(G) != 1 || facet(G).boundary) continue;
                F = G;
                apex_vertex = v;
                return true;
            }
        return false;
    }

    void dfs(const Int& vol) {
        Index F;
        int v = -1;
        if (!open_facet(F, v)) {
            if (vol != volume_) return;
            std::vector<Index> T = state_;
            std::sort(T.begin(), T.end());
            found_.insert(T);
            return;
        }
        const IntVec normal = facet(F).normal;
        int apex = sign_of(dot(normal, points_[v]));
        for (int j = 0; j < n_; ++j) {
            if (sign_of(dot(normal, points_[j])) != -apex) continue;
            Index C = F;
            C.insert(std::upper_bound(C.begin(), C.end(), j), j);
            Int cv = simplex_volume(config_, C);
            if (vol + cv > volume_) continue;
            bool ok = true;
            for (const Index& other : state_)
                if (!proper(C, other)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            push(C);
            dfs(vol + cv);
            pop();
        }
    }

    const PointConfiguration& config_;
    const RelationLattice& lattice_;
    int n_, k1_;
    Int volume_;
    std::vector<IntVec> points_;
    std::map<Index, FacetInfo> facets_;
    std::map<std::pair<Index, Index>, bool> proper_;
    std::vector<Index> state_;
    std::map<Index, int> facet_count_;
    std::set<std::vector<Index>> found_;
};

}  // namespace

std::vector<RegularTriangulation> enumerate_regular_triangulations(const PointConfiguration& config,
                                                                   const RelationLattice& lattice) {
    if (lattice.size() - lattice.rank() != config.rows())
        fail("ShapeMismatch", "lattice rank must be N-(k+1)");
    std::vector<RegularTriangulation> out;
    if (lattice.rank() == 0) {
        RegularTriangulation T;
        T.simplices = {complement({}, config.size())};
        T.witness = {RatVec(config.size(), Rat(0)), RatVec{}};
        return {T};
    }
    TriangulationSearch search(config, lattice);
    for (const auto& simplices : search.run()) {
        auto t = open_cone_point(chamber_normals(lattice, simplices));
        if (!t) continue;  // not regular
        RegularTriangulation T = triangulation_from_t(config, lattice, to_rat(*t));
        if (T.simplices != simplices) fail("InternalError", "witness does not reproduce triangulation");
        out.push_back(std::move(T));
    }
    std::sort(out.begin(), out.end(),
              [](const RegularTriangulation& a, const RegularTriangulation& b) { return a.simplices < b.simplices; });
    return out;
}

SecondaryPolytope secondary_polytope(const PointConfiguration& config, const RelationLattice& lattice) {
    SecondaryPolytope sp;
    for (auto& T : enumerate_regular_triangulations(config, lattice)) {
        IntVec q = gkz_vector(config, T);
        sp.vertices.emplace_back(std::move(T), std::move(q));
    }
    return sp;
}

bool is_resonant(const PointConfiguration& config, const RelationLattice& lattice,
                 const std::vector<Index>& simplices, const RatVec& c) {
    if (!is_triangulation(config, lattice, simplices))
        fail("NotATriangulation", "simplices do not triangulate the convex hull");
    if (static_cast<int>(c.size()) != config.rows()) fail("ShapeMismatch", "c must have k+1 entries");
    const IntMatrix& A = config.matrix();
    for (std::size_t a = 0; a < simplices.size(); ++a)
        for (std::size_t b = a + 1; b < simplices.size(); ++b) {
            Index S;
            std::set_intersection(simplices[a].begin(), simplices[a].end(), simplices[b].begin(),
                                  simplices[b].end(), std::back_inserter(S));
            // Project away span{a_j : j in S}; the remaining coordinates of
            // c must be an integral combination of the other points.
            IntMatrix P = S.empty() ? IntMatrix::identity(A.rows())
                                    : integer_kernel(A.select_cols(S).transpose());
            RatMatrix Pr = to_rat(P);
            RatVec target = mat_vec(Pr, c);
            IntMatrix gens(0, P.rows());
            for (int j : complement(S, config.size())) {
                IntVec pj(P.rows(), Int(0));
                for (std::size_t r = 0; r < P.rows(); ++r)
                    for (std::size_t i = 0; i < A.rows(); ++i) pj[r] += P(r, i) * A(i, j);
                gens.append_row(pj);
            }
            if (P.rows() == 0) return true;
            if (gens.rows() == 0) gens = IntMatrix(0, P.rows());
            if (in_lattice(gens, target)) return true;
        }
    return false;
}

FdData fd_configuration(int k) {
    if (k < 2) fail("BadParameter", "F_D needs k >= 2");
    IntMatrix A(k + 1, 2 * k, Int(0));
    for (int i = 0; i < k; ++i) {
        A(0, k + i) = 1;
        A(1 + i, i) = 1;
        A(1 + i, k + i) = 1;
    }
    IntMatrix B(k - 1, 2 * k, Int(0));
    for (int i = 2; i <= k; ++i) {
        int r = i - 2;
        B(r, 0) = 1;
        B(r, i - 1) = -1;
        B(r, k) = -1;
        B(r, k + i - 1) = 1;
    }
    PointConfiguration config(std::move(A));
    RelationLattice lattice(config, std::move(B));
    return {std::move(config), std::move(lattice)};
}

RegularTriangulation fd_triangulation(int k, const std::vector<int>& tau) {
    if (static_cast<int>(tau.size()) != k) fail("BadParameter", "permutation must have k entries");
    std::vector<int> check = tau;
    std::sort(check.begin(), check.end());
    for (int i = 0; i < k; ++i)
        if (check[i] != i) fail("BadParameter", "not a permutation");
    FdData fd = fd_configuration(k);
    RegularTriangulation T;
    for (int j = 0; j < k; ++j) {
        Index s;
        for (int i = j; i < k; ++i) s.push_back(tau[i]);
        for (int i = 0; i <= j; ++i) s.push_back(k + tau[i]);
        std::sort(s.begin(), s.end());
        T.simplices.push_back(s);
    }
    std::sort(T.simplices.begin(), T.simplices.end());
    // t_{tau(i)} = i, shifted so that t_1 = 0
    std::vector<int> pos(k);
    for (int i = 0; i < k; ++i) pos[tau[i]] = i;
    RatVec t(k - 1);
    for (int h = 1; h < k; ++h) t[h - 1] = Rat(pos[h] - pos[0]);
    T.witness = witness_from_t(fd.lattice, T.simplices.front(), t);
    return T;
}

std::vector<int> fd_permutation_from_weight(int k, const RatVec& t) {
    if (static_cast<int>(t.size()) != k - 1) fail("ShapeMismatch", "t must have k-1 entries");
    RatVec full(k);
    full[0] = 0;
    for (int i = 1; i < k; ++i) full[i] = t[i - 1];
    std::vector<int> tau(k);
    std::iota(tau.begin(), tau.end(), 0);
    std::sort(tau.begin(), tau.end(), [&](int a, int b) { return full[a] < full[b]; });
    for (int i = 0; i + 1 < k; ++i)
        if (full[tau[i]] == full[tau[i + 1]]) fail("OnWall", "two coordinates of t coincide");
    return tau;
}

}  // namespace gkz
