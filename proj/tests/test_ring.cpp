#include "doctest.h"

#include <functional>

#include "fixtures.hpp"
#include "gkz/error.hpp"
#include "gkz/linalg.hpp"
#include "gkz/ring.hpp"

using namespace gkz;
using namespace fx;

namespace {

std::string error_kind(const std::function<void()>& f) {
    try {
        f();
    } catch (const MathError& e) {
        return e.kind();
    }
    return "";
}

RegularTriangulation given(std::vector<Index> simplices) { return RegularTriangulation{std::move(simplices), {}}; }

RatVec ones(int d) { return RatVec(d, Rat(1)); }

RingPtr chamber_ring(const Bundle& b, const RatVec& t) {
    return build_ring(b.config, b.lattice, triangulation_from_t(b.config, b.lattice, t));
}

RingElement pow(const RingElement& x, int n) {
    RingElement r = RingElement::one(x.ring());
    for (int i = 0; i < n; ++i) r = r * x;
    return r;
}

RatMatrix ratm(std::initializer_list<std::initializer_list<long>> rs) {
    IntMatrix m = rows(rs);
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

RatMatrix neg(RatMatrix m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
    return m;
}

// Basis independent structural checks.
void check_ring_axioms(const RingPtr& R) {
    auto e = standard_basis(R);
    for (std::size_t a = 0; a < e.size(); ++a)
        for (std::size_t b = 0; b < e.size(); ++b) {
            CHECK(e[a] * e[b] == e[b] * e[a]);
            for (std::size_t c = 0; c < e.size(); ++c) CHECK((e[a] * e[b]) * e[c] == e[a] * (e[b] * e[c]));
        }
    CHECK(R->ranks()[0] == 1);
    CHECK(e[0] == RingElement::one(R));
}

}  // namespace

TEST_CASE("rank one examples with explicit generators") {
    auto b = z211();
    auto R = chamber_ring(b, ones(1));
    CHECK(R->ranks() == std::vector<int>{1, 1});
    auto eps = R->variable(0);
    CHECK((eps * eps).is_zero());
    CHECK(R->generator(0) == eps * Rat(-2));
    CHECK(R->generator(1) == eps);
    CHECK(R->generator(2) == eps);

    auto c = z3111();
    auto S = chamber_ring(c, ones(1));
    CHECK(S->ranks() == std::vector<int>{1, 1, 1});
    auto e = S->variable(0);
    CHECK(!(e * e).is_zero());
    CHECK(pow(e, 3).is_zero());
    CHECK(S->generator(0) == e * Rat(-3));
}

TEST_CASE("Gauss rings in both chambers") {
    auto g = gauss_bundle();
    for (int s : {1, -1}) {
        auto R = chamber_ring(g, RatVec{Rat(s)});
        CHECK(R->ranks() == std::vector<int>{1, 1});
        auto e = R->variable(0);
        CHECK((e * e).is_zero());
        CHECK(R->generator(0) == e);
        CHECK(R->generator(2) == -e);
    }
}

TEST_CASE("two-parameter examples") {
    auto b = f1();
    auto R = build_ring(b.config, b.lattice, given(list1({{3, 4, 5, 6}, {1, 2, 3, 4}, {2, 3, 4, 5}})));
    CHECK(R->ranks() == std::vector<int>{1, 2});
    auto e = R->variable(0), d = R->variable(1);
    CHECK((e * e).is_zero());
    CHECK((d * d).is_zero());
    CHECK((e * d).is_zero());
    CHECK((R->generator(0) * R->generator(4)).is_zero());
    CHECK((R->generator(0) * R->generator(5)).is_zero());
    CHECK((R->generator(1) * R->generator(5)).is_zero());

    auto c = f4();
    auto S = build_ring(c.config, c.lattice, given(list1({{1, 3, 4, 6}, {1, 3, 4, 5}, {1, 2, 3, 5}, {1, 2, 3, 6}})));
    CHECK(S->ranks() == std::vector<int>{1, 2, 1});
    auto x = S->variable(0), y = S->variable(1);
    CHECK((x * x).is_zero());
    CHECK((y * y).is_zero());
    CHECK(!(x * y).is_zero());
    CHECK((S->generator(1) * S->generator(3)).is_zero());
    CHECK((S->generator(4) * S->generator(5)).is_zero());
}

TEST_CASE("ambient cohomology rings of the hypersurface examples") {
    auto q = chamber_ring(quintic(), ones(1));
    CHECK(q->ranks() == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(pow(q->variable(0), 5).is_zero());

    auto tc = chamber_ring(two_cubics(), ones(1));
    CHECK(tc->ranks() == std::vector<int>{1, 1, 1, 1, 1, 1});

    auto p = chamber_ring(p2p2_33(), ones(2));
    CHECK(p->ranks() == std::vector<int>{1, 2, 3, 2, 1});
    CHECK(pow(p->variable(0), 3).is_zero());
    CHECK(pow(p->variable(1), 3).is_zero());
    CHECK(!(pow(p->variable(0), 2) * pow(p->variable(1), 2)).is_zero());
}

TEST_CASE("minimal non-faces") {
    auto q = quintic();
    auto T = triangulation_from_t(q.config, q.lattice, ones(1));
    CHECK(minimal_nonfaces(T, 6) == std::vector<Index>{set1({2, 3, 4, 5, 6})});
    auto p = p2p2_33();
    auto U = triangulation_from_t(p.config, p.lattice, ones(2));
    CHECK(minimal_nonfaces(U, 7) == list1({{2, 4, 6}, {3, 5, 7}}));
}

TEST_CASE("rank equals volume and the Poincare series on every unimodular chamber") {
    for (auto b : {gauss_bundle(), z211(), z3111(), f1(), f4(), pentagon_bundle(), p2p2_33()}) {
        Int vol = total_volume(b.config, b.lattice);
        int k1 = static_cast<int>(b.config.rows());
        for (const auto& T : enumerate_regular_triangulations(b.config, b.lattice)) {
            if (!is_unimodular(b.config, T)) {
                CHECK(error_kind([&] { build_ring(b.config, b.lattice, T); }) == "TorsionQuotient");
                continue;
            }
            auto R = build_ring(b.config, b.lattice, T);
            CHECK(Int(R->rank()) == vol);
            CHECK(poincare_check(*R, T, k1));
            CHECK(R->top_degree() < k1);
            check_ring_axioms(R);
            for (const Index& S : minimal_nonfaces(T, b.lattice.size())) {
                RingElement p = RingElement::one(R);
                for (int j : S) p = p * R->generator(j);
                CHECK(p.is_zero());
            }
            // degree one is the dual lattice: the generators span it over Z
            IntMatrix deg1(0, R->ranks()[1]);
            for (int j = 0; j < b.lattice.size(); ++j) {
                IntVec row;
                for (int i = 0; i < R->ranks()[1]; ++i) row.push_back(R->generator(j)[R->offset(1) + i].get_num());
                deg1.append_row(row);
            }
            CHECK(maximal_minor_gcd(deg1.transpose()) == 1);
        }
    }
}

TEST_CASE("quotient by an annihilator") {
    auto R = chamber_ring(quintic(), ones(1));
    auto Q = quotient_by_annihilator(R, R->generator(0));
    CHECK(Q->ranks() == std::vector<int>{1, 1, 1, 1});
    CHECK(Q->parent() == R);
    auto e = Q->variable(0);
    CHECK(pow(e, 4).is_zero());
    CHECK(!pow(e, 3).is_zero());
    CHECK(Q->project(R->generator(0)) == e * Rat(-5));
    CHECK(error_kind([&] { quotient_by_annihilator(R, RingElement::zero(R)); }) == "ZeroElement");
    CHECK(error_kind([&] { quotient_by_annihilator(R, R->variable(0) + RingElement::one(R)); }) ==
          "NotHomogeneous");

    // x * lift(project(y)) == x * y for the annihilated element x
    auto x = R->generator(0);
    for (const auto& y : standard_basis(R)) CHECK(x * Q->lift(Q->project(y)) == x * y);
}

TEST_CASE("the (3,3) quotient ring, monodromy matrices and the alternating form") {
    auto R = chamber_ring(p2p2_33(), ones(2));
    auto Q = quotient_by_annihilator(R, R->generator(0));
    CHECK(Q->ranks() == std::vector<int>{1, 2, 2, 1});
    check_ring_axioms(Q);
    std::vector<RingElement> basis{Q->monomial({0, 0}), Q->monomial({1, 0}), Q->monomial({0, 1}),
                                   Q->monomial({0, 2}), Q->monomial({2, 0}), Q->monomial({2, 1})};
    auto m1 = multiplication_matrix(Q->variable(0), basis);
    auto m2 = multiplication_matrix(Q->variable(1), basis);
    CHECK(m1 == ratm({{0, 0, 0, 0, 0, 0},
                      {1, 0, 0, 0, 0, 0},
                      {0, 0, 0, 0, 0, 0},
                      {0, 0, 1, 0, 0, 0},
                      {0, 1, 1, 0, 0, 0},
                      {0, 0, 0, 1, 0, 0}}));
    CHECK(m2 == ratm({{0, 0, 0, 0, 0, 0},
                      {0, 0, 0, 0, 0, 0},
                      {1, 0, 0, 0, 0, 0},
                      {0, 1, 1, 0, 0, 0},
                      {0, 1, 0, 0, 0, 0},
                      {0, 0, 0, 0, 1, 0}}));

    auto forms = monodromy_invariant_forms(Q, basis);
    CHECK(forms.size() == 3);
    RatMatrix G = tau_pairing(Q, basis);
    CHECK(G == ratm({{0, 0, 0, 0, 0, 1},
                     {0, 0, 0, -1, 0, 0},
                     {0, 0, 0, 0, -1, 0},
                     {0, 1, 0, 0, 0, 0},
                     {0, 0, 1, 0, 0, 0},
                     {-1, 0, 0, 0, 0, 0}}));
    for (auto M : {m1, m2}) CHECK(M * G == neg(G * M.transpose()));
    for (const auto& F : forms) {
        CHECK(F.transpose() == neg(F));
        for (auto M : {m1, m2}) CHECK(M * F == neg(F * M.transpose()));
    }
}

TEST_CASE("pairing on the quintic quotient") {
    auto R = chamber_ring(quintic(), ones(1));
    auto Q = quotient_by_annihilator(R, R->generator(0));
    RatMatrix G = tau_pairing(Q);
    auto e = Q->variable(0);
    Rat s = pow(e, 3)[Q->offset(3)];
    CHECK(s != 0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(G(i, j) == (i + j == 3 ? ((i % 2) ? -s : s) : Rat(0)));
    CHECK(monodromy_invariant_forms(Q).size() == 2);
}

TEST_CASE("truncated polynomial rings and inverses") {
    auto T = make_truncated_polynomial_ring(2, {3, 2});
    CHECK(T->ranks() == std::vector<int>{1, 2, 2, 1});
    check_ring_axioms(T);
    auto u = RingElement::one(T) * Rat(3) + T->variable(0) - T->variable(1) * Rat(2);
    CHECK(u * u.inverse() == RingElement::one(T));
    CHECK(error_kind([&] { T->variable(0).inverse(); }) == "NotAUnit");
}
