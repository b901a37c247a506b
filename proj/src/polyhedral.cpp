#include "gkz/polyhedral.hpp"

#include <algorithm>
#include <map>

namespace gkz {

namespace {

// Scale so the first nonzero coefficient has modulus one; lets duplicate
// rows collapse to a single representative.
Inequality normalized(Inequality q) {
    for (const auto& c : q.a)
        if (c != 0) {
            Rat s = abs(c);
            for (auto& x : q.a) x /= s;
            q.b /= s;
            break;
        }
    return q;
}

// Among rows with the same left-hand side keep the tightest.
std::vector<Inequality> prune(std::vector<Inequality> rows) {
    std::map<RatVec, Inequality> best;
    for (auto& r : rows) {
        Inequality q = normalized(std::move(r));
        auto it = best.find(q.a);
        if (it == best.end()) {
            best.emplace(q.a, q);
            continue;
        }
        Inequality& cur = it->second;
        if (q.b > cur.b || (q.b == cur.b && q.strict)) cur = q;
    }
    std::vector<Inequality> out;
    out.reserve(best.size());
    for (auto& [k, v] : best) out.push_back(std::move(v));
    return out;
}

Int floor_int(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

bool constant_ok(const Inequality& q) { return q.strict ? Rat(0) > q.b : Rat(0) >= q.b; }

}  // namespace

std::optional<RatVec> feasible_point(std::size_t n, std::vector<Inequality> system) {
    // stages[v] holds the system in variables 0..v (later ones eliminated)
    std::vector<std::vector<Inequality>> stages(n + 1);
    stages[n] = prune(std::move(system));
    for (std::size_t v = n; v-- > 0;) {
        std::vector<Inequality> pos, neg, next;
        for (const auto& q : stages[v + 1]) {
            if (q.a[v] > 0)
                pos.push_back(q);
            else if (q.a[v] < 0)
                neg.push_back(q);
            else
                next.push_back(q);
        }
        for (const auto& p : pos)
            for (const auto& m : neg) {
                Rat fp = -m.a[v], fm = p.a[v];
                Inequality c;
                c.a.resize(n);
                for (std::size_t j = 0; j < n; ++j) c.a[j] = fp * p.a[j] + fm * m.a[j];
                c.a[v] = 0;
                c.b = fp * p.b + fm * m.b;
                c.strict = p.strict || m.strict;
                next.push_back(std::move(c));
            }
        stages[v] = prune(std::move(next));
        for (const auto& q : stages[v]) {
            bool zero = std::all_of(q.a.begin(), q.a.end(), [](const Rat& x) { return x == 0; });
            if (zero && !constant_ok(q)) return std::nullopt;
        }
    }
    for (const auto& q : stages[0])
        if (!constant_ok(q)) return std::nullopt;

    RatVec x(n, Rat(0));
    for (std::size_t v = 0; v < n; ++v) {
        std::optional<Rat> lo, hi;
        bool lo_strict = false, hi_strict = false;
        for (const auto& q : stages[v + 1]) {
            if (q.a[v] == 0) continue;
            Rat rest = q.b;
            for (std::size_t j = 0; j < v; ++j) rest -= q.a[j] * x[j];
            Rat bound = rest / q.a[v];
            if (q.a[v] > 0) {
                if (!lo || bound > *lo || (bound == *lo && q.strict)) {
                    lo = bound;
                    lo_strict = q.strict;
                }
            } else {
                if (!hi || bound < *hi || (bound == *hi && q.strict)) {
                    hi = bound;
                    hi_strict = q.strict;
                }
            }
        }
        if (lo && hi) {
            if (*lo == *hi) {
                if (lo_strict || hi_strict) return std::nullopt;
                x[v] = *lo;
            } else {
                x[v] = (*lo + *hi) / 2;
            }
        } else if (lo) {
            x[v] = Rat(floor_int(*lo) + 1);
        } else if (hi) {
            x[v] = Rat(-floor_int(-*hi) - 1);
        }
    }
    return x;
}

std::optional<IntVec> open_cone_point(const RatMatrix& normals) {
    std::vector<Inequality> sys;
    for (std::size_t i = 0; i < normals.rows(); ++i) sys.push_back({normals.row(i), Rat(1), false});
    auto x = feasible_point(normals.cols(), std::move(sys));
    if (!x) return std::nullopt;
    Int l = lcm_of_denominators(*x);
    IntVec out(x->size());
    for (std::size_t i = 0; i < x->size(); ++i) out[i] = Rat((*x)[i] * l).get_num();
    Int g = gcd_of(out);
    if (g > 1)
        for (auto& v : out) v /= g;
    return out;
}

}  // namespace gkz
