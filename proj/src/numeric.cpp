#include "gkz/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkz {

RatMatrix to_rat(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

RatVec to_rat(const IntVec& v) { return RatVec(v.begin(), v.end()); }

bool is_integral(const Rat& q) { return q.get_den() == 1; }

bool is_integral(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& q) { return is_integral(q); });
}

std::string to_string(const Rat& q) { return q.get_str(); }
std::string to_string(const Int& z) { return z.get_str(); }

Rat parse_rational(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

Int gcd_of(const IntVec& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

Int lcm_of_denominators(const RatVec& v) {
    Int l = 1;
    for (const auto& x : v) l = lcm(l, Int(x.get_den()));
    return l;
}

std::vector<Index> subsets(int n, int k) {
    std::vector<Index> out;
    if (k < 0 || k > n) return out;
    Index cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

Index complement(const Index& s, int n) {
    Index out;
    std::size_t p = 0;
    for (int i = 0; i < n; ++i) {
        if (p < s.size() && s[p] == i) {
            ++p;
            continue;
        }
        out.push_back(i);
    }
    return out;
}

bool is_subset(const Index& a, const Index& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string index_to_string(const Index& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i] + 1);
    }
    return out + "}";
}

}  // namespace gkz

namespace gkz {

Int rat_floor(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Int rat_ceil(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

}  // namespace gkz
