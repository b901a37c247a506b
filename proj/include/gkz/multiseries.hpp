#pragma once

#include <map>

#include "gkz/numeric.hpp"

namespace gkz {

using MultiIndex = std::vector<int>;

int total_degree(const MultiIndex& n);

/// All n in N^d with |n| <= order, by total degree then lex descending.
std::vector<MultiIndex> multi_indices(int d, int order);

/// Truncated power series in d variables with rational coefficients; terms
/// of total degree above the order are dropped.
class MultiSeries {
public:
    MultiSeries() = default;
    MultiSeries(int vars, int order) : vars_(vars), order_(order) {}
    static MultiSeries constant(int vars, int order, const Rat& c);
    static MultiSeries variable(int vars, int order, int i);

    int vars() const { return vars_; }
    int order() const { return order_; }
    const std::map<MultiIndex, Rat>& coefficients() const { return c_; }
    Rat coeff(const MultiIndex& n) const;
    Rat constant_term() const { return coeff(MultiIndex(vars_, 0)); }
    void set(const MultiIndex& n, const Rat& v);
    void add(const MultiIndex& n, const Rat& v);
    bool is_zero() const { return c_.empty(); }
    MultiSeries truncated(int order) const;

    MultiSeries operator+(const MultiSeries& o) const;
    MultiSeries operator-(const MultiSeries& o) const;
    MultiSeries operator-() const;
    MultiSeries operator*(const MultiSeries& o) const;
    MultiSeries operator*(const Rat& s) const;
    MultiSeries& operator+=(const MultiSeries& o);
    bool operator==(const MultiSeries& o) const { return c_ == o.c_ && vars_ == o.vars_; }

private:
    int vars_ = 0, order_ = 0;
    std::map<MultiIndex, Rat> c_;  // nonzero entries only
};

/// exp(f) for f without constant term.
MultiSeries exp(const MultiSeries& f);
/// log(1 + f) for f without constant term.
MultiSeries log1p(const MultiSeries& f);
/// 1/f for f with nonzero constant term.
MultiSeries reciprocal(const MultiSeries& f);
/// f(z_1(q), ..., z_d(q)); every z_i must lack a constant term.
MultiSeries compose(const MultiSeries& f, const std::vector<MultiSeries>& z);

}  // namespace gkz
