#include "cyclodyn/radicals.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "cyclodyn/cyclo_field.hpp"
#include "cyclodyn/embedding.hpp"

namespace cyclodyn {

namespace {

using LC = std::complex<long double>;

constexpr unsigned long kTrialLimit = 1000000;

// Squarefree kernel s of m > 0 (m = s * t^2); nullopt if a cofactor above
// the trial limit remains that is not a perfect square.
std::optional<std::vector<unsigned long>> squarefree_primes(Integer m) {
    std::vector<unsigned long> primes;
    for (unsigned long p = 2; p <= kTrialLimit && Integer(p) * p <= m; ++p) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
            m /= p;
            ++e;
        }
        if (e % 2 == 1) primes.push_back(p);
    }
    if (m == 1) return primes;
    if (m.fits_ulong_p() && m.get_ui() <= kTrialLimit * kTrialLimit) {
        primes.push_back(m.get_ui());  // remaining cofactor is prime
        return primes;
    }
    if (mpz_perfect_square_p(m.get_mpz_t())) return primes;
    return std::nullopt;
}

// Square root of the prime p as an element of Q(zeta_p) or Q(zeta_4p).
CycloNum sqrt_prime(unsigned long p) {
    if (p == 2) return CycloNum::zeta(8, 1) + CycloNum::zeta(8, 7);
    const unsigned n = static_cast<unsigned>(p);
    CycloNum g(0L);
    Integer pp(p);
    for (unsigned long x = 1; x < p; ++x) {
        Integer r;
        mpz_powm_ui(r.get_mpz_t(), Integer(x).get_mpz_t(), (p - 1) / 2, pp.get_mpz_t());
        g += CycloNum::zeta(n, static_cast<long>(x)) * CycloNum(r == 1 ? 1L : -1L);
    }
    // g^2 = p for p = 1 mod 4 and -p for p = 3 mod 4
    if (p % 4 == 3) g *= CycloNum::zeta(4, 3);
    return g;
}

// Inverse of the complex matrix rows j, columns i: omega_j^i.
std::optional<std::vector<LC>> invert(std::vector<LC> a, std::size_t n) {
    std::vector<LC> inv(n * n);
    for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
        if (std::abs(a[piv * n + c]) < 1e-12L) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a[c * n + j], a[piv * n + j]);
            std::swap(inv[c * n + j], inv[piv * n + j]);
        }
        const LC d = a[c * n + c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c * n + j] /= d;
            inv[c * n + j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            const LC f = a[r * n + c];
            if (f == LC(0)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a[r * n + j] -= f * a[c * n + j];
                inv[r * n + j] -= f * inv[c * n + j];
            }
        }
    }
    return inv;
}

LC to_lc(const ComplexInterval& z) {
    auto mid = [](const Interval& x) {
        return (mpfr_get_ld(x.lo().get(), MPFR_RNDN) + mpfr_get_ld(x.hi().get(), MPFR_RNDN)) / 2;
    };
    return {mid(z.re), mid(z.im)};
}

std::optional<CycloNum> search_field(const CycloNum& c, unsigned k, unsigned M) {
    const std::vector<unsigned> units = units_mod(M);
    const std::size_t phi = units.size();
    const long double two_pi = 2 * 3.14159265358979323846264338327950288L;

    std::vector<LC> vand(phi * phi);
    for (std::size_t r = 0; r < phi; ++r)
        for (std::size_t i = 0; i < phi; ++i)
            vand[r * phi + i] = std::polar(1.0L, two_pi * static_cast<long double>((units[r] * i) % M) / M);
    auto inv = invert(vand, phi);
    if (!inv) return std::nullopt;

    // e * r is integral whenever r^k = c, e = denominator_clearing(c).
    const Integer e = denominator_clearing(c);
    const long double scale = e.get_d();

    // Conjugate pairs (j, M - j) share a branch up to conjugation.
    std::vector<std::size_t> reps;
    std::vector<std::size_t> partner(phi);
    for (std::size_t r = 0; r < phi; ++r) {
        const unsigned j = units[r];
        const unsigned mj = (M - j) % M;
        if (j <= mj || M <= 2) reps.push_back(r);
        for (std::size_t s = 0; s < phi; ++s)
            if (units[s] == mj) partner[r] = s;
    }
    if (M <= 2) partner[0] = 0;

    std::vector<std::vector<LC>> branches(phi);
    for (std::size_t r : reps) {
        const LC v = to_lc(embed(c, units[r], 80));
        const long double mod = std::pow(std::abs(v), 1.0L / k);
        const long double arg = std::arg(v);
        for (unsigned b = 0; b < k; ++b) branches[r].push_back(std::polar(mod, (arg + two_pi * b) / k));
    }

    std::size_t total = 1;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        total *= k;
        if (total > 1u << 16) return std::nullopt;
    }
    std::vector<LC> values(phi);
    for (std::size_t combo = 0; combo < total; ++combo) {
        std::size_t rest = combo;
        for (std::size_t r : reps) {
            values[r] = branches[r][rest % k] * scale;
            values[partner[r]] = std::conj(values[r]);
            if (partner[r] == r) values[r] = LC(values[r].real(), 0);
            rest /= k;
        }
        std::vector<Rational> coords(phi);
        bool ok = true;
        for (std::size_t i = 0; i < phi && ok; ++i) {
            LC x = 0;
            for (std::size_t r = 0; r < phi; ++r) x += (*inv)[i * phi + r] * values[r];
            const long double rounded = std::nearbyint(x.real());
            if (std::abs(x.real() - rounded) > 1e-6L || std::abs(x.imag()) > 1e-6L ||
                std::abs(rounded) > 9e15L) {
                ok = false;
                break;
            }
            coords[i] = Rational(static_cast<long>(rounded)) / e;
        }
        if (!ok) continue;
        CycloNum cand = CycloNum::from_coords(M, std::move(coords));
        if (cand.pow(k) == c) return canonicalize_conductor(cand);
    }
    return std::nullopt;
}

}  // namespace

std::optional<CycloNum> sqrt_rational(const Rational& q) {
    if (q == 0) return CycloNum(0L);
    // sqrt(a/b) = sqrt(a*b) / b
    Integer m = abs(q.get_num()) * q.get_den();
    auto primes = squarefree_primes(m);
    if (!primes) return std::nullopt;
    Integer s = 1;
    CycloNum root(1L);
    for (unsigned long p : *primes) {
        root *= sqrt_prime(p);
        s *= p;
    }
    Integer t;
    mpz_divexact(t.get_mpz_t(), m.get_mpz_t(), s.get_mpz_t());
    mpz_sqrt(t.get_mpz_t(), t.get_mpz_t());
    root *= CycloNum(make_rational(t, q.get_den()));
    if (q < 0) root *= CycloNum::zeta(4, 1);
    return canonicalize_conductor(root);
}

std::optional<CycloNum> cyclo_root(const CycloNum& c_in, unsigned k, unsigned conductor_cap) {
    const CycloNum c = canonicalize_conductor(c_in);
    if (k == 0) return std::nullopt;
    if (k == 1 || c.is_zero()) return c;
    if (c.is_rational()) {
        const Rational& q = c.rational_value();
        if (auto r = rational_root(q, k)) return CycloNum(*r);
        if (q < 0 && k % 2 == 1) {
            if (auto r = rational_root(-q, k)) return CycloNum(-*r);
        }
        if (k == 2) return sqrt_rational(q);
        if (q < 0) {
            // (-1)^(1/k) = zeta_2k
            if (auto r = rational_root(-q, k)) return canonicalize_conductor(CycloNum::zeta(2 * k, 1) * CycloNum(*r));
        }
    }
    const unsigned n = c.conductor();
    for (unsigned M = n; M <= conductor_cap; M += n) {
        if (M % 4 == 2) continue;  // Q(zeta_M) = Q(zeta_{M/2})
        if (euler_phi(M) > 12) continue;
        if (auto r = search_field(c, k, M)) return r;
    }
    return std::nullopt;
}

}  // namespace cyclodyn
