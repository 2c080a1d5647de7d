#include <numeric>
#include <stdexcept>

#include "qvm/shor.hpp"

namespace qvm {

std::uint64_t modpow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
    if (modulus == 0) throw std::domain_error("zero modulus");
    if (modulus == 1) return 0;
    unsigned __int128 acc = 1;
    unsigned __int128 b = base % modulus;
    while (exponent > 0) {
        if (exponent & 1u) acc = acc * b % modulus;
        b = b * b % modulus;
        exponent >>= 1;
    }
    return std::uint64_t(acc);
}

std::uint64_t mod_inverse(std::uint64_t e, std::uint64_t phi) {
    if (phi == 0) throw std::domain_error("zero modulus");
    if (phi == 1) return 0;
    if (std::gcd(e, phi) != 1) {
        throw std::domain_error("no inverse: " + std::to_string(e) + " and " +
                                std::to_string(phi) + " share a factor");
    }
    // extended Euclid on (e mod phi, phi)
    std::int64_t r0 = std::int64_t(phi), r1 = std::int64_t(e % phi);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t quot = r0 / r1;
        std::int64_t r2 = r0 - quot * r1;
        std::int64_t t2 = t0 - quot * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    std::int64_t d = t0 % std::int64_t(phi);
    if (d < 0) d += std::int64_t(phi);
    return std::uint64_t(d);
}

Fraction continued_fraction_approx(std::uint64_t k, std::uint64_t q, std::uint64_t bound) {
    if (q == 0 || bound == 0) throw std::domain_error("bad continued-fraction arguments");
    if (k == 0) return Fraction{0, 1};

    // Convergents h_i / d_i of k/q; keep the last denominator below bound.
    std::uint64_t a = k, b = q;
    std::uint64_t h_m2 = 0, h_m1 = 1;
    std::uint64_t d_m2 = 1, d_m1 = 0;
    Fraction best{0, 1};
    while (b != 0) {
        std::uint64_t coeff = a / b;
        std::uint64_t rem = a % b;
        std::uint64_t h = coeff * h_m1 + h_m2;
        std::uint64_t d = coeff * d_m1 + d_m2;
        if (d >= bound) break;
        best = Fraction{h, d};
        h_m2 = h_m1;
        h_m1 = h;
        d_m2 = d_m1;
        d_m1 = d;
        a = b;
        b = rem;
    }
    return best;
}

std::uint64_t order_brute_force(std::uint64_t y, std::uint64_t n) {
    if (n < 2 || std::gcd(y, n) != 1) throw std::domain_error("order needs gcd(y, n) = 1");
    std::uint64_t acc = y % n;
    std::uint64_t r = 1;
    while (acc != 1 % n) {
        acc = acc * y % n;
        ++r;
        if (r > n) throw std::logic_error("order exceeded the modulus");
    }
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::optional<std::uint64_t> prime_power_root(std::uint64_t n) {
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0 || !is_prime(p)) continue;
        std::uint64_t m = n;
        while (m % p == 0) m /= p;
        return m == 1 ? std::optional<std::uint64_t>(p) : std::nullopt;
    }
    return std::nullopt;
}

}  // namespace qvm
