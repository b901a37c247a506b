#pragma once

#include <string>

#include "gkz/series.hpp"

namespace gkz {

struct MirrorModel {
    std::string name;
    PointConfiguration config;
    RelationLattice lattice;
    RegularTriangulation chamber;  // positive span of the last d columns of B
    RatVec gamma;
    int kappa = 1;
    std::vector<int> signs;
    std::vector<Monomial> pairing_basis;  // ordered basis of R-bar; empty means the ring's own
    int order = 9;
};

/// sigma_i = (-1)^(sum of the negative entries of row i), in absolute value.
std::vector<int> default_signs(const IntMatrix& B);

MirrorModel make_model(std::string name, const IntMatrix& B, const IntVec& gamma, int kappa,
                       std::optional<std::vector<int>> signs = std::nullopt, int order = 9);

/// Series with coefficients in R-bar, one MultiSeries per basis element.
using RingSeries = std::vector<MultiSeries>;

struct ComponentSeries {
    RingPtr ring;            // R
    RingPtr quotient;        // R-bar = R / Ann(x)
    RingElement x;           // coefficient of z^0, the element whose annihilator is divided out
    MultiSeries F0;          // unit component of G
    RingSeries normalized;   // G / F0 = 1 + f
    RingSeries log;          // log(G / F0)
};

ComponentSeries component_series(const MirrorModel& model, int order);

RingSeries ring_series_product(const GradedQuotientRing& R, const RingSeries& a, const RingSeries& b);

/// q_i = sigma_i z_i exp(f_{1,i}), f_{1,i} the delta-bar_i component of the log.
std::vector<MultiSeries> canonical_coordinates(const MirrorModel& model, const ComponentSeries& comps);

/// z(q) for a map whose i-th entry is sigma_i z_i (1 + O(z)).
std::vector<MultiSeries> invert_mirror_map(const std::vector<MultiSeries>& q, int order);

/// -(kappa/2) tau(log(G / F0)) evaluated at z(q).
MultiSeries instanton_part(const MirrorModel& model, const ComponentSeries& comps,
                           const std::vector<MultiSeries>& z_of_q);

struct InstantonTable {
    std::map<MultiIndex, Rat> entries;
    bool all_integral() const;
    bool all_positive() const;
};

/// Peels off multiple covers: a_m = sum_{n | m} N_{m/n} / n^3.
InstantonTable extract_instanton_numbers(const MultiSeries& part);

struct PairingReport {
    std::size_t form_dimension = 0;
    RatMatrix gramm;
    bool tau_invariant = false;  // tau pairing is monodromy invariant
    bool sign_pattern = false;   // <e0,e3> = s, <e1i,e2j> = -s delta_ij, rest zero
};

PairingReport pairing_report(const MirrorModel& model, const RingPtr& quotient);

struct MirrorResult {
    ComponentSeries components;
    std::vector<MultiSeries> q, z;
    MultiSeries part;
    InstantonTable table;
    PairingReport pairing;
};

MirrorResult run_mirror(const MirrorModel& model, int order);

}  // namespace gkz
