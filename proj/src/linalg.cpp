#include "gkz/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkz {

namespace {

void combine_rows(IntMatrix& m, std::size_t r, std::size_t i, const Int& s, const Int& t,
                  const Int& u, const Int& v) {
    // (row r, row i) <- (s*r + t*i, u*r + v*i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Int a = m(r, j), b = m(i, j);
        m(r, j) = s * a + t * b;
        m(i, j) = u * a + v * b;
    }
}

void add_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
    if (f == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= f * m(src, j);
}

}  // namespace

Hnf hermite(const IntMatrix& m, bool with_transform) {
    Hnf out;
    out.H = m;
    IntMatrix& H = out.H;
    if (with_transform) out.U = IntMatrix::identity(m.rows());
    std::size_t r = 0;
    for (std::size_t c = 0; c < H.cols() && r < H.rows(); ++c) {
        for (std::size_t i = r + 1; i < H.rows(); ++i) {
            if (H(i, c) == 0) continue;
            if (H(r, c) == 0) {
                H.swap_rows(r, i);
                if (with_transform) out.U.swap_rows(r, i);
                continue;
            }
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), H(r, c).get_mpz_t(),
                       H(i, c).get_mpz_t());
            Int u = -H(i, c) / g, v = H(r, c) / g;
            combine_rows(H, r, i, s, t, u, v);
            if (with_transform) combine_rows(out.U, r, i, s, t, u, v);
        }
        if (H(r, c) == 0) continue;
        if (H(r, c) < 0) {
            for (std::size_t j = 0; j < H.cols(); ++j) H(r, j) = -H(r, j);
            if (with_transform)
                for (std::size_t j = 0; j < out.U.cols(); ++j) out.U(r, j) = -out.U(r, j);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), H(i, c).get_mpz_t(), H(r, c).get_mpz_t());
            add_multiple(H, i, r, q);
            if (with_transform) add_multiple(out.U, i, r, q);
        }
        out.pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return out;
}

IntMatrix hnf_rows(const IntMatrix& m) {
    Hnf h = hermite(m);
    IntMatrix out(h.pivots.size(), m.cols());
    for (std::size_t i = 0; i < h.pivots.size(); ++i) out.set_row(i, h.H.row(i));
    return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
    std::size_t n = m.cols();
    Hnf h = hermite(m.transpose(), true);
    IntMatrix ker(0, n);
    for (std::size_t i = h.pivots.size(); i < n; ++i) ker.append_row(h.U.row(i));
    if (ker.rows() == 0) return IntMatrix(0, n);
    return hnf_rows(ker);
}

std::vector<Int> smith_invariants(const IntMatrix& m0) {
    IntMatrix m = m0;
    std::vector<Int> inv;
    std::size_t t = 0;
    while (t < m.rows() && t < m.cols()) {
        // pick the smallest nonzero entry of the remaining block as pivot
        bool found = false;
        std::size_t pi = 0, pj = 0;
        for (std::size_t i = t; i < m.rows(); ++i)
            for (std::size_t j = t; j < m.cols(); ++j)
                if (m(i, j) != 0 && (!found || abs(m(i, j)) < abs(m(pi, pj)))) {
                    found = true;
                    pi = i;
                    pj = j;
                }
        if (!found) break;
        m.swap_rows(t, pi);
        for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, t), m(i, pj));
        bool clean = true;
        for (std::size_t i = t + 1; i < m.rows(); ++i) {
            Int q = m(i, t) / m(t, t);
            add_multiple(m, i, t, q);
            if (m(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < m.cols(); ++j) {
            Int q = m(t, j) / m(t, t);
            if (q != 0)
                for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) -= q * m(i, t);
            if (m(t, j) != 0) clean = false;
        }
        if (!clean) continue;
        // pivot must divide the rest of the block
        bool divides = true;
        for (std::size_t i = t + 1; i < m.rows() && divides; ++i)
            for (std::size_t j = t + 1; j < m.cols(); ++j)
                if (m(i, j) % m(t, t) != 0) {
                    for (std::size_t k = 0; k < m.cols(); ++k) m(t, k) += m(i, k);
                    divides = false;
                    break;
                }
        if (!divides) continue;
        inv.push_back(abs(m(t, t)));
        ++t;
    }
    return inv;
}

Int det(const IntMatrix& m0) {
    if (m0.rows() != m0.cols()) throw std::invalid_argument("det of non-square matrix");
    std::size_t n = m0.rows();
    if (n == 0) return 1;
    IntMatrix m = m0;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

Rref rref(const RatMatrix& m) {
    RatMatrix a = m;
    std::vector<int> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(r, p);
        Rat inv = 1 / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        piv.push_back(static_cast<int>(c));
        ++r;
    }
    Rref out{RatMatrix(r, a.cols()), piv};
    for (std::size_t i = 0; i < r; ++i) out.R.set_row(i, a.row(i));
    return out;
}

Rat det(const RatMatrix& m0) {
    if (m0.rows() != m0.cols()) throw std::invalid_argument("det of non-square matrix");
    RatMatrix a = m0;
    std::size_t n = a.rows();
    Rat d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            a.swap_rows(p, c);
            d = -d;
        }
        d *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            Rat f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return d;
}

int rank(const RatMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }
int rank(const IntMatrix& m) { return static_cast<int>(hermite(m).pivots.size()); }

RatMatrix nullspace(const RatMatrix& m) {
    Rref r = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (int p : r.pivots) is_piv[p] = true;
    RatMatrix out(0, m.cols());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        RatVec v(m.cols(), Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.R(i, f);
        out.append_row(v);
    }
    if (out.rows() == 0) return RatMatrix(0, m.cols());
    return out;
}

std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b) {
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    Rref r = rref(aug);
    RatVec x(m.cols(), Rat(0));
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] == static_cast<int>(m.cols())) return std::nullopt;
        x[r.pivots[i]] = r.R(i, m.cols());
    }
    return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
    std::size_t n = m.rows();
    if (n != m.cols()) return std::nullopt;
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    Rref r = rref(aug);
    if (r.pivots.size() < n || r.pivots[n - 1] != static_cast<int>(n - 1)) return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.R(i, n + j);
    return inv;
}

bool in_lattice(const IntMatrix& gens, const RatVec& v) {
    if (!is_integral(v)) return false;
    IntVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i].get_num();
    if (gens.rows() == 0) return std::all_of(w.begin(), w.end(), [](const Int& x) { return x == 0; });
    Hnf h = hermite(gens);
    std::size_t next = 0;
    for (std::size_t c = 0; c < w.size(); ++c) {
        if (next < h.pivots.size() && h.pivots[next] == static_cast<int>(c)) {
            if (w[c] % h.H(next, c) != 0) return false;
            Int q = w[c] / h.H(next, c);
            for (std::size_t j = c; j < w.size(); ++j) w[j] -= q * h.H(next, j);
            ++next;
        } else if (w[c] != 0) {
            return false;
        }
    }
    return true;
}

std::optional<IntVec> lattice_coordinates(const IntMatrix& gens, const IntVec& v) {
    Hnf h = hermite(gens, true);
    IntVec w = v;
    IntVec c(gens.rows(), Int(0));
    std::size_t next = 0;
    for (std::size_t col = 0; col < w.size(); ++col) {
        if (next < h.pivots.size() && h.pivots[next] == static_cast<int>(col)) {
            if (w[col] % h.H(next, col) != 0) return std::nullopt;
            c[next] = w[col] / h.H(next, col);
            for (std::size_t j = col; j < w.size(); ++j) w[j] -= c[next] * h.H(next, j);
            ++next;
        } else if (w[col] != 0) {
            return std::nullopt;
        }
    }
    IntVec x(gens.rows(), Int(0));
    for (std::size_t i = 0; i < gens.rows(); ++i)
        if (c[i] != 0)
            for (std::size_t j = 0; j < gens.rows(); ++j) x[j] += c[i] * h.U(i, j);
    return x;
}

Int maximal_minor_gcd(const IntMatrix& m) {
    std::vector<Int> inv = smith_invariants(m);
    if (inv.size() < m.rows()) return 0;
    Int p = 1;
    for (const auto& x : inv) p *= x;
    return p;
}

RatVec mat_vec(const RatMatrix& m, const RatVec& v) {
    RatVec out(m.rows(), Rat(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (v[j] != 0) out[i] += m(i, j) * v[j];
    return out;
}

}  // namespace gkz
