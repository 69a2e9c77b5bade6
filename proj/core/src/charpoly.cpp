#include "weylwalk/charpoly.hpp"

#include "weylwalk/errors.hpp"
#include "weylwalk/fp.hpp"

namespace weylwalk {

IntPoly charpoly_exact(const IntMatrix& M) {
    const std::size_t n = M.dim();
    // Berkowitz: iteratively extend the char poly of the leading r x r block
    // by a lower-triangular Toeplitz product. p holds coefficients in
    // descending degree; after step r it is the char poly of the r x r block.
    std::vector<mpz_class> p{1};
    std::vector<mpz_class> v, w, w2, q;
    for (std::size_t r = 1; r <= n; ++r) {
        // Toeplitz column: 1, -a_rr, -(R C), -(R A C), -(R A^2 C), ...
        // with A the (r-1) x (r-1) block, R the row below it, C the column
        // right of it.
        v.assign(r + 1, 0);
        v[0] = 1;
        v[1] = -M.at(r - 1, r - 1);
        if (r >= 2) {
            w.resize(r - 1);
            for (std::size_t i = 0; i < r - 1; ++i) w[i] = M.at(i, r - 1);
            for (std::size_t k = 2; k <= r; ++k) {
                mpz_class dot = 0;
                for (std::size_t i = 0; i < r - 1; ++i) dot += M.at(r - 1, i) * w[i];
                v[k] = -dot;
                if (k == r) break;
                w2.assign(r - 1, 0);
                for (std::size_t i = 0; i < r - 1; ++i) {
                    for (std::size_t j = 0; j < r - 1; ++j) w2[i] += M.at(i, j) * w[j];
                }
                w.swap(w2);
            }
        }
        q.assign(r + 1, 0);
        for (std::size_t i = 0; i <= r; ++i) {
            for (std::size_t j = 0; j < p.size() && j <= i; ++j) q[i] += v[i - j] * p[j];
        }
        p.swap(q);
    }
    std::vector<mpz_class> asc(p.rbegin(), p.rend());
    return IntPoly(std::move(asc));
}

ModPoly charpoly_mod(const ModMatrix& M) {
    const std::size_t n = M.dim();
    const std::uint64_t p = M.modulus();
    std::vector<std::uint64_t> h = M.entries();
    auto e = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return h[i * n + j]; };

    // similarity reduction to upper Hessenberg form
    for (std::size_t c = 0; c + 2 < n; ++c) {
        std::size_t piv = c + 1;
        while (piv < n && e(piv, c) == 0) ++piv;
        if (piv == n) continue;
        if (piv != c + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(e(c + 1, j), e(piv, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(e(i, c + 1), e(i, piv));
        }
        const std::uint64_t inv = invmod(e(c + 1, c), p);
        for (std::size_t i = c + 2; i < n; ++i) {
            if (e(i, c) == 0) continue;
            const std::uint64_t f = mulmod(e(i, c), inv, p);
            // row_i -= f * row_{c+1}, then col_{c+1} += f * col_i
            for (std::size_t j = 0; j < n; ++j)
                e(i, j) = submod(e(i, j), mulmod(f, e(c + 1, j), p), p);
            for (std::size_t i2 = 0; i2 < n; ++i2)
                e(i2, c + 1) = addmod(e(i2, c + 1), mulmod(f, e(i2, i), p), p);
        }
    }

    // charpolys q_r of the leading r x r minors of the Hessenberg matrix:
    // q_r = (T - h_rr) q_{r-1} - sum_k h_{k,r} (prod of subdiagonals) q_{k-1}
    std::vector<std::vector<std::uint64_t>> q(n + 1);
    q[0] = {1};
    for (std::size_t r = 1; r <= n; ++r) {
        std::vector<std::uint64_t>& out = q[r];
        out.assign(r + 1, 0);
        const std::vector<std::uint64_t>& prev = q[r - 1];
        const std::uint64_t d = e(r - 1, r - 1);
        for (std::size_t i = 0; i < prev.size(); ++i) {
            out[i + 1] = addmod(out[i + 1], prev[i], p);
            out[i] = submod(out[i], mulmod(d, prev[i], p), p);
        }
        std::uint64_t sub = 1 % p;
        for (std::size_t k = r - 1; k >= 1; --k) {
            sub = mulmod(sub, e(k, k - 1), p);
            if (sub == 0) break;
            const std::uint64_t factor = mulmod(e(k - 1, r - 1), sub, p);
            if (factor == 0) continue;
            for (std::size_t i = 0; i < q[k - 1].size(); ++i)
                out[i] = submod(out[i], mulmod(factor, q[k - 1][i], p), p);
        }
    }
    return ModPoly(p, std::move(q[n]));
}

mpz_class discriminant(const IntPoly& P) {
    require(P.is_monic() && P.degree() >= 1, "discriminant: P must be monic of degree >= 1");
    const std::size_t m = static_cast<std::size_t>(P.degree());
    if (m == 1) return 1;
    const IntPoly D = P.derivative();
    // Sylvester matrix of (P, P'): (m-1) rows of P shifts, m rows of P' shifts
    const std::size_t n = 2 * m - 1;
    IntMatrix S(n);
    for (std::size_t r = 0; r < m - 1; ++r)
        for (std::size_t j = 0; j <= m; ++j) S.at(r, r + j) = P.coeff(m - j);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j <= m - 1; ++j) S.at(m - 1 + r, r + j) = D.coeff(m - 1 - j);
    mpz_class res = S.det();
    if ((m * (m - 1) / 2) % 2 == 1) res = -res;
    return res;
}

} // namespace weylwalk
