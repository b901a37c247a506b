#include "gkz/multiseries.hpp"

#include <functional>

#include "gkz/error.hpp"

namespace gkz {

int total_degree(const MultiIndex& n) {
    int s = 0;
    for (int x : n) s += x;
    return s;
}

std::vector<MultiIndex> multi_indices(int d, int order) {
    std::vector<MultiIndex> out;
    MultiIndex cur(d, 0);
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
    for (int m = 0; m <= order; ++m) {
        if (d == 0) {
            if (m == 0) out.push_back({});
            continue;
        }
        rec(0, m);
    }
    return out;
}

MultiSeries MultiSeries::constant(int vars, int order, const Rat& c) {
    MultiSeries s(vars, order);
    s.set(MultiIndex(vars, 0), c);
    return s;
}

MultiSeries MultiSeries::variable(int vars, int order, int i) {
    MultiSeries s(vars, order);
    MultiIndex n(vars, 0);
    n[i] = 1;
    s.set(n, Rat(1));
    return s;
}

Rat MultiSeries::coeff(const MultiIndex& n) const {
    auto it = c_.find(n);
    return it == c_.end() ? Rat(0) : it->second;
}

void MultiSeries::set(const MultiIndex& n, const Rat& v) {
    if (total_degree(n) > order_) return;
    if (v == 0)
        c_.erase(n);
    else
        c_[n] = v;
}

void MultiSeries::add(const MultiIndex& n, const Rat& v) {
    if (v == 0 || total_degree(n) > order_) return;
    auto [it, fresh] = c_.emplace(n, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) c_.erase(it);
    }
}

MultiSeries MultiSeries::truncated(int order) const {
    MultiSeries s(vars_, order);
    for (const auto& [n, v] : c_) s.set(n, v);
    return s;
}

MultiSeries MultiSeries::operator+(const MultiSeries& o) const {
    MultiSeries r = *this;
    r += o;
    return r;
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
    if (o.order_ < order_) *this = truncated(o.order_);
    for (const auto& [n, v] : o.c_) add(n, v);
    return *this;
}

MultiSeries MultiSeries::operator-() const { return *this * Rat(-1); }

MultiSeries MultiSeries::operator-(const MultiSeries& o) const { return *this + (-o); }

MultiSeries MultiSeries::operator*(const Rat& s) const {
    MultiSeries r(vars_, order_);
    if (s == 0) return r;
    for (const auto& [n, v] : c_) r.c_[n] = v * s;
    return r;
}

MultiSeries MultiSeries::operator*(const MultiSeries& o) const {
    MultiSeries r(vars_, std::min(order_, o.order_));
    MultiIndex m(vars_);
    for (const auto& [a, va] : c_) {
        int da = total_degree(a);
        for (const auto& [b, vb] : o.c_) {
            if (da + total_degree(b) > r.order_) continue;
            for (int i = 0; i < vars_; ++i) m[i] = a[i] + b[i];
            r.add(m, va * vb);
        }
    }
    return r;
}

namespace {

void require_no_constant(const MultiSeries& f, const char* what) {
    if (f.constant_term() != 0) fail("ConstantTerm", std::string(what) + " needs a series without constant term");
}

}  // namespace

MultiSeries exp(const MultiSeries& f) {
    require_no_constant(f, "exp");
    MultiSeries sum = MultiSeries::constant(f.vars(), f.order(), Rat(1));
    MultiSeries term = sum;
    for (int k = 1; k <= f.order(); ++k) {
        term = term * f * Rat(1, k);
        if (term.is_zero()) break;
        sum += term;
    }
    return sum;
}

MultiSeries log1p(const MultiSeries& f) {
    require_no_constant(f, "log1p");
    MultiSeries sum(f.vars(), f.order());
    MultiSeries power = MultiSeries::constant(f.vars(), f.order(), Rat(1));
    for (int k = 1; k <= f.order(); ++k) {
        power = power * f;
        if (power.is_zero()) break;
        sum += power * Rat(k % 2 ? 1 : -1, k);
    }
    return sum;
}

MultiSeries reciprocal(const MultiSeries& f) {
    Rat c = f.constant_term();
    if (c == 0) fail("NotAUnit", "series has zero constant term");
    MultiSeries g = f * (1 / c) - MultiSeries::constant(f.vars(), f.order(), Rat(1));
    // 1/(1+g) = sum (-g)^k
    MultiSeries sum = MultiSeries::constant(f.vars(), f.order(), Rat(1));
    MultiSeries power = sum;
    for (int k = 1; k <= f.order(); ++k) {
        power = power * (-g);
        if (power.is_zero()) break;
        sum += power;
    }
    return sum * (1 / c);
}

MultiSeries compose(const MultiSeries& f, const std::vector<MultiSeries>& z) {
    if (static_cast<int>(z.size()) != f.vars()) fail("ShapeMismatch", "one substitution per variable required");
    const int vars = z.empty() ? 0 : z[0].vars();
    int order = f.order();
    for (const auto& s : z) {
        require_no_constant(s, "compose");
        order = std::min(order, s.order());
    }
    // powers[i][e] = z_i^e
    std::vector<std::vector<MultiSeries>> powers(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        powers[i].push_back(MultiSeries::constant(vars, order, Rat(1)));
        for (int e = 1; e <= order; ++e) powers[i].push_back(powers[i].back() * z[i].truncated(order));
    }
    MultiSeries out(vars, order);
    for (const auto& [n, v] : f.coefficients()) {
        if (total_degree(n) > order) continue;
        MultiSeries term = MultiSeries::constant(vars, order, v);
        for (std::size_t i = 0; i < z.size(); ++i)
            if (n[i] > 0) term = term * powers[i][n[i]];
        out += term;
    }
    return out;
}

}  // namespace gkz
