#pragma once

#include <set>
#include <vector>

#include "gkz/fan.hpp"
#include "gkz/lattice.hpp"

namespace fx {

using gkz::Index;
using gkz::Int;
using gkz::IntMatrix;
using gkz::IntVec;
using gkz::Rat;
using gkz::RatVec;

inline IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

inline IntMatrix rows(std::initializer_list<std::initializer_list<long>> rs) {
    std::vector<IntVec> v;
    for (auto r : rs) v.push_back(iv(r));
    return IntMatrix::from_rows(v);
}

inline gkz::PointConfiguration columns(std::initializer_list<std::initializer_list<long>> cs) {
    std::vector<IntVec> v;
    for (auto c : cs) v.push_back(iv(c));
    return gkz::PointConfiguration::from_columns(v);
}

/// 1-based sets converted to 0-based.
inline Index set1(std::initializer_list<int> xs) {
    Index s;
    for (int x : xs) s.push_back(x - 1);
    std::sort(s.begin(), s.end());
    return s;
}

inline std::vector<Index> list1(std::initializer_list<std::initializer_list<int>> ls) {
    std::vector<Index> out;
    for (auto l : ls) out.push_back(set1(l));
    std::sort(out.begin(), out.end());
    return out;
}

inline gkz::PointConfiguration gauss() { return columns({{1, 1, 1}, {-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }

inline gkz::PointConfiguration pentagon() {
    return columns({{1, 0, 1}, {1, 1, 1}, {1, -1, 0}, {1, 0, 0}, {1, 1, 0}, {1, 0, -1}});
}

struct Bundle {
    gkz::PointConfiguration config;
    gkz::RelationLattice lattice;
};

inline Bundle from_relations(IntMatrix B) {
    auto config = gkz::configuration_from_relations(B);
    gkz::RelationLattice lattice(config, std::move(B));
    return {std::move(config), std::move(lattice)};
}

inline Bundle z211() { return from_relations(rows({{-2, 1, 1}})); }
inline Bundle z3111() { return from_relations(rows({{-3, 1, 1, 1}})); }
inline Bundle gauss_bundle() {
    auto c = gauss();
    gkz::RelationLattice l(c, rows({{1, 1, -1, -1}}));
    return {c, l};
}
inline Bundle f1() { return from_relations(rows({{1, -1, 0, -1, 1, 0}, {1, 0, -1, -1, 0, 1}})); }
inline Bundle f4() { return from_relations(rows({{1, -1, 1, -1, 0, 0}, {1, 0, 1, 0, -1, -1}})); }
inline Bundle quintic() { return from_relations(rows({{-5, 1, 1, 1, 1, 1}})); }
inline Bundle two_cubics() { return from_relations(rows({{-3, -3, 1, 1, 1, 1, 1, 1}})); }
inline Bundle p2p2_33() {
    return from_relations(rows({{-3, 1, 0, 1, 0, 1, 0}, {-3, 0, 1, 0, 1, 0, 1}}));
}
inline Bundle pentagon_bundle() {
    auto c = pentagon();
    return {c, gkz::kernel_basis(c)};
}

/// Cofactor-expansion determinant on machine integers; independent of the
/// library's fraction-free elimination.
inline long cofactor_det(const std::vector<std::vector<long>>& m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    long s = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<long>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<long> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        long term = m[0][c] * cofactor_det(minor);
        s += (c % 2 ? -term : term);
    }
    return s;
}

inline std::vector<std::vector<long>> small(const IntMatrix& m) {
    std::vector<std::vector<long>> out(m.rows(), std::vector<long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
    return out;
}

inline std::set<std::vector<Index>> triangulation_sets(const std::vector<gkz::RegularTriangulation>& ts) {
    std::set<std::vector<Index>> out;
    for (const auto& t : ts) out.insert(t.simplices);
    return out;
}

}  // namespace fx
