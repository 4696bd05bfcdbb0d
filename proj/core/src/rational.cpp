#include "cyclodyn/rational.hpp"

#include <cctype>

#include "cyclodyn/errors.hpp"

namespace cyclodyn {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero();
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

Integer parse_integer(std::string_view text, std::size_t offset) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw ParseError("expected digits", offset + i);
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw ParseError("unexpected character '" + std::string(1, text[j]) + "'", offset + j);
    }
    Integer v(std::string(text.substr(i)), 10);
    return negative ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, 0));
    Integer num = parse_integer(text.substr(0, slash), 0);
    Integer den = parse_integer(text.substr(slash + 1), slash + 1);
    return make_rational(num, den);
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_prime(const Integer& p) {
    if (p < 2) return false;
    return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

std::optional<long> padic_val(const Rational& q, const Integer& p) {
    if (!is_prime(p)) throw InvalidPlace("not a prime: " + p.get_str());
    if (q == 0) return std::nullopt;
    auto count = [&p](Integer n) {
        long v = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
            ++v;
        }
        return v;
    };
    return count(abs(q.get_num())) - count(q.get_den());
}

Rational padic_abs(const Rational& q, const Integer& p) {
    auto v = padic_val(q, p);
    if (!v) return Rational(0);
    return pow(Rational(p), -*v);
}

long floor_log2(const Rational& q) {
    if (q <= 0) throw PreconditionViolated("floor_log2 of a non-positive value");
    const long nb = static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 2));
    const long db = static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2));
    // 2^(nb-1) <= num < 2^nb and 2^(db-1) <= den < 2^db, so the answer is
    // nb - db or nb - db - 1.
    long e = nb - db;
    Rational probe = e >= 0 ? Rational(Integer(1) << e) : Rational(1, Integer(1) << -e);
    probe.canonicalize();
    return q >= probe ? e : e - 1;
}

std::optional<Rational> rational_root(const Rational& q, unsigned long k) {
    if (k == 0) throw PreconditionViolated("zeroth root");
    if (k == 1) return q;
    if (q < 0 && k % 2 == 0) return std::nullopt;
    auto int_root = [k](const Integer& n) -> std::optional<Integer> {
        Integer r;
        Integer a = abs(n);
        if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), k) == 0) return std::nullopt;
        return n < 0 ? Integer(-r) : r;
    };
    auto num = int_root(q.get_num());
    auto den = int_root(q.get_den());
    if (!num || !den) return std::nullopt;
    return make_rational(*num, *den);
}

Rational pow(const Rational& q, long e) {
    if (e < 0) {
        if (q == 0) throw DivisionByZero();
        Rational inv(q.get_den(), q.get_num());
        inv.canonicalize();
        return pow(inv, -e);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), q.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);  // already reduced
}

Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Integer ceil(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

}  // namespace cyclodyn
