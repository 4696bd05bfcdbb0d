#pragma once

// Reference computations for the tests. Each one works from first
// principles (floating point, naive expansion, brute force) and shares no
// code with the library beyond the GMP rational type.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Cx = std::complex<long double>;
using QVec = std::vector<Q>;  // dense polynomial, low degree first

inline const long double kPi = 3.141592653589793238462643383279502884L;

// sum c_j exp(2 pi i k j / n)
inline Cx embed(const QVec& coords, unsigned n, unsigned k) {
    Cx s = 0;
    for (std::size_t j = 0; j < coords.size(); ++j) {
        const long double ang = 2 * kPi * static_cast<long double>((k * j) % n) / n;
        s += static_cast<long double>(coords[j].get_d()) * Cx(std::cos(ang), std::sin(ang));
    }
    return s;
}

inline long double house(const QVec& coords, unsigned n) {
    long double h = 0;
    for (unsigned k = 1; k <= std::max(1u, n); ++k)
        if (std::gcd(k, n) == 1 || n == 1) h = std::max(h, std::abs(embed(coords, n, k)));
    return h;
}

inline void trim(QVec& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QVec mul(const QVec& a, const QVec& b) {
    if (a.empty() || b.empty()) return {};
    QVec out(a.size() + b.size() - 1, Q(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

inline QVec add(QVec a, const QVec& b, const Q& s = 1) {
    if (a.size() < b.size()) a.resize(b.size(), Q(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
    trim(a);
    return a;
}

// f(g(x)) by summing c_i g^i.
inline QVec compose(const QVec& f, const QVec& g) {
    QVec out, pw{Q(1)};
    for (const Q& c : f) {
        out = add(out, pw, c);
        pw = mul(pw, g);
    }
    return out;
}

inline Q binom(long n, long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Q(r);
}

// Closed form T_d(x) = sum_k (-1)^k d/(d-k) C(d-k, k) x^(d-2k).
inline QVec chebyshev(long d) {
    if (d == 0) return {Q(2)};
    QVec out(static_cast<std::size_t>(d + 1), Q(0));
    for (long k = 0; 2 * k <= d; ++k) {
        Q c = Q(d, d - k) * binom(d - k, k);
        c.canonicalize();
        out[static_cast<std::size_t>(d - 2 * k)] = (k % 2 ? -c : c);
    }
    return out;
}

// Laurent polynomials as exponent -> coefficient.
using Laurent = std::map<long, Q>;

inline Laurent lmul(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [e1, c1] : a)
        for (const auto& [e2, c2] : b) out[e1 + e2] += c1 * c2;
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

inline Laurent lcompose(const QVec& g, const Laurent& q) {
    Laurent out, pw{{0, Q(1)}};
    for (const Q& c : g) {
        for (const auto& [e, v] : pw) out[e] += c * v;
        pw = lmul(pw, q);
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// Exponent of p in a nonzero rational, by repeated division.
inline long valuation(const Q& q, long p) {
    long v = 0;
    mpz_class n = q.get_num(), d = q.get_den();
    if (n < 0) n = -n;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    while (d % p == 0) {
        d /= p;
        --v;
    }
    return v;
}

// Smallest number of roots of unity of order dividing `order` summing to
// `target` (given by its complex value), up to max_b; -1 if none. Brute
// force over nondecreasing exponent tuples, compared numerically.
inline int min_roots_of_unity_sum(Cx target, unsigned order, int max_b) {
    if (std::abs(target) < 1e-12L) return 0;
    std::vector<Cx> roots(order);
    for (unsigned e = 0; e < order; ++e) roots[e] = std::polar(1.0L, 2 * kPi * e / order);
    for (int b = 1; b <= max_b; ++b) {
        std::vector<unsigned> idx(static_cast<std::size_t>(b), 0);
        for (;;) {
            Cx s = 0;
            for (unsigned i : idx) s += roots[i];
            if (std::abs(s - target) < 1e-9L) return b;
            int pos = b - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == order - 1) --pos;
            if (pos < 0) break;
            const unsigned v = ++idx[static_cast<std::size_t>(pos)];
            for (int j = pos + 1; j < b; ++j) idx[static_cast<std::size_t>(j)] = v;
        }
    }
    return -1;
}

}  // namespace oracle
