#include "cyclodyn/cyclotomic.hpp"

#include <numeric>

#include "cyclodyn/cyclo_field.hpp"
#include "cyclodyn/errors.hpp"

namespace cyclodyn {

using detail::field;

CycloNum CycloNum::zeta(unsigned n, long k) {
    const auto& f = field(n);
    long e = k % static_cast<long>(n);
    if (e < 0) e += n;
    const auto* p = f.power(static_cast<unsigned>(e));
    std::vector<Rational> c(f.phi);
    for (unsigned j = 0; j < f.phi; ++j) c[j] = Rational(static_cast<long>(p[j]));
    return CycloNum(n, std::move(c));
}

CycloNum CycloNum::from_coords(unsigned n, std::vector<Rational> coords) {
    const auto& f = field(n);
    if (coords.size() != f.phi)
        throw PreconditionViolated("Q(zeta_" + std::to_string(n) + ") needs " + std::to_string(f.phi) +
                                   " coordinates, got " + std::to_string(coords.size()));
    return CycloNum(n, std::move(coords));
}

bool CycloNum::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycloNum::is_rational() const {
    for (std::size_t j = 1; j < c_.size(); ++j)
        if (c_[j] != 0) return false;
    return true;
}

CycloNum CycloNum::lift(unsigned big) const {
    if (big == n_) return *this;
    if (big % n_ != 0) throw PreconditionViolated("lift target must be a multiple of the conductor");
    const auto& f = field(big);
    std::vector<Rational> out(f.phi);
    if (is_rational()) {
        out[0] = c_[0];
        return CycloNum(big, std::move(out));
    }
    const unsigned step = big / n_;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const auto* p = f.power(static_cast<unsigned>(j) * step);
        for (unsigned r = 0; r < f.phi; ++r)
            if (p[r] != 0) out[r] += c_[j] * p[r];
    }
    return CycloNum(big, std::move(out));
}

CycloNum CycloNum::galois(long k) const {
    if (n_ <= 2 || is_rational()) return *this;
    long e = k % static_cast<long>(n_);
    if (e < 0) e += n_;
    if (std::gcd(static_cast<unsigned>(e), n_) != 1) throw PreconditionViolated("galois exponent not a unit");
    const auto& f = field(n_);
    std::vector<Rational> out(f.phi);
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const auto* p = f.power(static_cast<unsigned>((j * e) % n_));
        for (unsigned r = 0; r < f.phi; ++r)
            if (p[r] != 0) out[r] += c_[j] * p[r];
    }
    return CycloNum(n_, std::move(out));
}

CycloNum& CycloNum::operator+=(const CycloNum& b) {
    if (b.is_rational()) {
        c_[0] += b.c_[0];
        return *this;
    }
    const unsigned m = lcm(n_, b.n_);
    if (m != n_) *this = lift(m);
    if (b.n_ == m) {
        for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += b.c_[j];
    } else {
        CycloNum bl = b.lift(m);
        for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += bl.c_[j];
    }
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& b) { return *this += -b; }

CycloNum CycloNum::operator-() const {
    CycloNum r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycloNum& CycloNum::operator*=(const CycloNum& b) {
    if (b.is_rational()) {
        for (auto& x : c_) x *= b.c_[0];
        return *this;
    }
    if (is_rational()) {
        Rational s = c_[0];
        *this = b;
        for (auto& x : c_) x *= s;
        return *this;
    }
    const unsigned m = lcm(n_, b.n_);
    const CycloNum x = lift(m);
    const CycloNum y = b.lift(m);
    const auto& f = field(m);
    // Schoolbook product in Z[X]/(X^m - 1), then reduce each power.
    std::vector<Rational> full(2 * f.phi - 1);
    for (unsigned i = 0; i < f.phi; ++i) {
        if (x.c_[i] == 0) continue;
        for (unsigned j = 0; j < f.phi; ++j)
            if (y.c_[j] != 0) full[i + j] += x.c_[i] * y.c_[j];
    }
    std::vector<Rational> out(f.phi);
    for (unsigned e = 0; e < full.size(); ++e) {
        if (full[e] == 0) continue;
        if (e < f.phi) {
            out[e] += full[e];
            continue;
        }
        const auto* p = f.power(e);
        for (unsigned r = 0; r < f.phi; ++r)
            if (p[r] != 0) out[r] += full[e] * p[r];
    }
    n_ = m;
    c_ = std::move(out);
    return *this;
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return CycloNum(Rational(1 / c_[0]));
    // Solve (multiplication-by-this matrix) * x = e_0 by Gauss-Jordan.
    const unsigned k = static_cast<unsigned>(c_.size());
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k + 1));
    for (unsigned j = 0; j < k; ++j) {
        CycloNum col = *this * zeta(n_, j);
        for (unsigned i = 0; i < k; ++i) a[i][j] = col.c_[i];
    }
    a[0][k] = 1;
    for (unsigned c = 0; c < k; ++c) {
        unsigned p = c;
        while (p < k && a[p][c] == 0) ++p;
        if (p == k) throw Error("singular multiplication matrix");
        std::swap(a[p], a[c]);
        const Rational inv = 1 / a[c][c];
        for (unsigned j = c; j <= k; ++j) a[c][j] *= inv;
        for (unsigned i = 0; i < k; ++i) {
            if (i == c || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (unsigned j = c; j <= k; ++j) a[i][j] -= f * a[c][j];
        }
    }
    std::vector<Rational> out(k);
    for (unsigned i = 0; i < k; ++i) out[i] = a[i][k];
    return CycloNum(n_, std::move(out));
}

CycloNum CycloNum::pow(unsigned long e) const {
    CycloNum result(1L);
    CycloNum base = *this;
    while (e) {
        if (e & 1UL) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
    const unsigned m = lcm(a.n_, b.n_);
    return a.lift(m).c_ == b.lift(m).c_;
}

std::optional<CycloNum> restrict_to(const CycloNum& a, unsigned m) {
    const unsigned n = a.conductor();
    if (m == n) return a;
    if (a.is_rational()) return CycloNum::from_coords(m, [&] {
        std::vector<Rational> c(euler_phi(m));
        c[0] = a.rational_value();
        return c;
    }());
    if (n % m != 0) return std::nullopt;
    const auto& proj = detail::subfield_projection(n, m);
    const unsigned k = static_cast<unsigned>(proj.rows.size());
    std::vector<Rational> x(k);
    for (unsigned i = 0; i < k; ++i) {
        Rational s = 0;
        for (unsigned j = 0; j < k; ++j) {
            const auto& v = a.coords()[proj.rows[j]];
            if (v != 0) s += proj.inverse[i * k + j] * v;
        }
        x[i] = s;
    }
    CycloNum candidate = CycloNum::from_coords(m, std::move(x));
    if (candidate.lift(n).coords() != a.coords()) return std::nullopt;
    return candidate;
}

CycloNum canonicalize_conductor(const CycloNum& a) {
    if (a.is_rational()) return CycloNum(a.rational_value());
    CycloNum cur = a;
    bool shrunk = true;
    while (shrunk && cur.conductor() > 1) {
        shrunk = false;
        for (unsigned p : prime_divisors(cur.conductor())) {
            if (auto r = restrict_to(cur, cur.conductor() / p)) {
                cur = std::move(*r);
                shrunk = true;
                break;
            }
        }
    }
    return cur;
}

bool is_algebraic_integer(const CycloNum& a) {
    for (const auto& x : a.coords())
        if (x.get_den() != 1) return false;
    return true;
}

Integer denominator_clearing(const CycloNum& a) {
    Integer d = 1;
    for (const auto& x : a.coords()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
    return d;
}

std::optional<unsigned> root_of_unity_order(const CycloNum& a) {
    if (a.is_zero() || !is_algebraic_integer(a)) return std::nullopt;
    const unsigned n = a.conductor();
    const unsigned w = lcm(2, n);  // roots of unity in Q(zeta_n) have order | lcm(2, n)
    if (!(a.pow(w) == CycloNum(1L))) return std::nullopt;
    unsigned order = w;
    for (unsigned p : prime_divisors(w)) {
        while (order % p == 0 && a.pow(order / p) == CycloNum(1L)) order /= p;
    }
    return order;
}

bool is_root_of_unity(const CycloNum& a) { return root_of_unity_order(a).has_value(); }

std::strong_ordering canonical_compare(const CycloNum& a, const CycloNum& b) {
    if (auto c = a.conductor() <=> b.conductor(); c != 0) return c;
    const auto& x = a.coords();
    const auto& y = b.coords();
    for (std::size_t i = 0; i < x.size(); ++i) {
        int c = cmp(x[i], y[i]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

}  // namespace cyclodyn
