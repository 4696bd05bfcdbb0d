#include "cyclodyn/cyclo_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <utility>

#include "cyclodyn/errors.hpp"

namespace cyclodyn {

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p : prime_divisors(n)) result = result / p * (p - 1);
    return result;
}

std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

unsigned lcm(unsigned a, unsigned b) { return std::lcm(a, b); }

std::vector<unsigned> units_mod(unsigned n) {
    std::vector<unsigned> out;
    if (n == 1) return {0};
    for (unsigned k = 1; k < n; ++k)
        if (std::gcd(k, n) == 1) out.push_back(k);
    return out;
}

namespace {

using IntPoly = std::vector<Integer>;

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() <= dd) return {Integer(0)};
    IntPoly q(num.size() - dd);
    for (std::size_t i = num.size(); i-- > dd;) {
        Integer c = num[i];
        q[i - dd] = c;
        if (c != 0)
            for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    return q;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw PreconditionViolated("cyclotomic polynomial of order 0");
    // Phi_n = prod_{d | n} (X^d - 1)^mu(n/d)
    auto mobius = [](unsigned k) {
        int sign = 1;
        for (unsigned p = 2; p * p <= k; ++p) {
            if (k % p) continue;
            k /= p;
            if (k % p == 0) return 0;
            sign = -sign;
        }
        return k > 1 ? -sign : sign;
    };
    auto times_binomial = [](const IntPoly& a, unsigned d) {
        IntPoly out(a.size() + d, Integer(0));
        for (std::size_t i = 0; i < a.size(); ++i) {
            out[i + d] += a[i];
            out[i] -= a[i];
        }
        return out;
    };
    IntPoly num{Integer(1)}, den{Integer(1)};
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d) continue;
        int mu = mobius(n / d);
        if (mu == 1) num = times_binomial(num, d);
        if (mu == -1) den = times_binomial(den, d);
    }
    // den is a product of (X^d - 1): monic up to the sign (-1)^k.
    Integer sign = den.back();
    for (auto& c : den) c *= sign;
    IntPoly q = divide_monic(num, den);
    for (auto& c : q) c *= sign;
    return q;
}

namespace detail {

namespace {

std::shared_ptr<const CycloField> build_field(unsigned n) {
    auto f = std::make_shared<CycloField>();
    f->n = n;
    f->phi = euler_phi(n);
    const unsigned phi = f->phi;
    auto poly = cyclotomic_polynomial(n);
    std::vector<std::int64_t> phi_low(phi);
    for (unsigned j = 0; j < phi; ++j) phi_low[j] = poly[j].get_si();

    f->powers.assign(std::size_t(n) * phi, 0);
    std::vector<std::int64_t> cur(phi, 0);
    cur[0] = 1;
    for (unsigned e = 0; e < n; ++e) {
        std::copy(cur.begin(), cur.end(), f->powers.begin() + std::size_t(e) * phi);
        // multiply by z and reduce with z^phi = -sum phi_low[j] z^j
        std::int64_t top = cur[phi - 1];
        for (unsigned j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (top != 0)
            for (unsigned j = 0; j < phi; ++j) cur[j] -= top * phi_low[j];
    }
    return f;
}

}  // namespace

const CycloField& field(unsigned n) {
    if (n == 0) throw PreconditionViolated("conductor must be positive");
    static std::mutex mutex;
    static std::map<unsigned, std::shared_ptr<const CycloField>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return *it->second;
    }
    auto built = build_field(n);
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(n, std::move(built));
    return *it->second;
}

namespace {

std::shared_ptr<const SubfieldProjection> build_projection(unsigned n, unsigned m) {
    const auto& big = field(n);
    const auto& small = field(m);
    const unsigned step = n / m;
    // Column j: coordinates of zeta_m^j = zeta_n^(j*step) in Q(zeta_n).
    std::vector<std::vector<Rational>> cols(small.phi, std::vector<Rational>(big.phi));
    for (unsigned j = 0; j < small.phi; ++j) {
        const auto* p = big.power(j * step);
        for (unsigned r = 0; r < big.phi; ++r) cols[j][r] = Rational(static_cast<long>(p[r]));
    }
    // Greedy row selection by elimination on the transpose.
    std::vector<unsigned> rows;
    std::vector<std::vector<Rational>> basis;  // reduced row vectors (length phi(m))
    std::vector<unsigned> pivot_col;
    for (unsigned r = 0; r < big.phi && rows.size() < small.phi; ++r) {
        std::vector<Rational> v(small.phi);
        for (unsigned j = 0; j < small.phi; ++j) v[j] = cols[j][r];
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const Rational c = v[pivot_col[b]];
            if (c != 0)
                for (unsigned j = 0; j < small.phi; ++j) v[j] -= c * basis[b][j];
        }
        unsigned piv = small.phi;
        for (unsigned j = 0; j < small.phi; ++j)
            if (v[j] != 0) {
                piv = j;
                break;
            }
        if (piv == small.phi) continue;
        const Rational inv = 1 / v[piv];
        for (auto& x : v) x *= inv;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const Rational c = basis[b][piv];
            if (c != 0)
                for (unsigned j = 0; j < small.phi; ++j) basis[b][j] -= c * v[j];
        }
        basis.push_back(std::move(v));
        pivot_col.push_back(piv);
        rows.push_back(r);
    }
    if (rows.size() != small.phi) throw Error("subfield basis is degenerate");

    // Invert S where S[i][j] = cols[j][rows[i]].
    const unsigned k = small.phi;
    std::vector<Rational> a(std::size_t(k) * 2 * k);
    for (unsigned i = 0; i < k; ++i) {
        for (unsigned j = 0; j < k; ++j) a[i * 2 * k + j] = cols[j][rows[i]];
        a[i * 2 * k + k + i] = 1;
    }
    for (unsigned c = 0; c < k; ++c) {
        unsigned p = c;
        while (a[p * 2 * k + c] == 0) ++p;
        if (p != c)
            for (unsigned j = 0; j < 2 * k; ++j) std::swap(a[p * 2 * k + j], a[c * 2 * k + j]);
        const Rational inv = 1 / a[c * 2 * k + c];
        for (unsigned j = 0; j < 2 * k; ++j) a[c * 2 * k + j] *= inv;
        for (unsigned i = 0; i < k; ++i) {
            if (i == c) continue;
            const Rational f = a[i * 2 * k + c];
            if (f == 0) continue;
            for (unsigned j = 0; j < 2 * k; ++j) a[i * 2 * k + j] -= f * a[c * 2 * k + j];
        }
    }
    auto proj = std::make_shared<SubfieldProjection>();
    proj->n = n;
    proj->m = m;
    proj->rows = std::move(rows);
    proj->inverse.resize(std::size_t(k) * k);
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) proj->inverse[i * k + j] = a[i * 2 * k + k + j];
    return proj;
}

}  // namespace

const SubfieldProjection& subfield_projection(unsigned n, unsigned m) {
    if (m == 0 || n % m != 0) throw PreconditionViolated("subfield conductor must divide n");
    static std::mutex mutex;
    static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const SubfieldProjection>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({n, m}); it != cache.end()) return *it->second;
    }
    auto built = build_projection(n, m);
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(std::make_pair(n, m), std::move(built));
    return *it->second;
}

}  // namespace detail
}  // namespace cyclodyn
