#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qvm/rng.hpp"

namespace qvm {

// ---- Classical number theory ----

std::uint64_t modpow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);
// E D = 1 mod phi with 0 < D < phi (D = 0 for the degenerate phi = 1).
std::uint64_t mod_inverse(std::uint64_t e, std::uint64_t phi);

struct Fraction {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;
};

// The continued-fraction convergent of k/q with the largest denominator
// strictly below `bound`.
Fraction continued_fraction_approx(std::uint64_t k, std::uint64_t q, std::uint64_t bound);

// Brute-force order of y mod n (test oracle and verification step).
std::uint64_t order_brute_force(std::uint64_t y, std::uint64_t n);

bool is_prime(std::uint64_t n);
// p with n = p^k, k >= 2, if n is a perfect prime power.
std::optional<std::uint64_t> prime_power_root(std::uint64_t n);

// ---- Quantum order finding ----

struct OrderProblem {
    std::uint64_t modulus = 0;    // N
    std::uint64_t base = 0;       // Y, coprime to N
    std::uint64_t fourier_q = 0;  // power of two >= N^2 (0: pick the smallest)
};

struct OrderRepeat {
    std::uint64_t measured_k = 0;
    std::uint64_t second_register = 0;
    Fraction convergent;
    std::uint64_t candidate = 0;
    bool accepted = false;
    std::string note;
};

struct OrderResult {
    std::optional<std::uint64_t> order;
    std::vector<OrderRepeat> repeats;
    std::size_t qubits_used = 0;
};

// Shor's order finding: uniform first register, modular-exponentiation
// query, measurement of the second register, Fourier transform over Z_Q,
// measurement, continued fractions, verification; repeated to max_repeats.
OrderResult shor_order(const OrderProblem& problem, RandomSource& rng,
                       std::size_t max_repeats = 20);

// Exact distribution of the first-register measurement (no sampling),
// marginalized over the second register.
std::vector<double> shor_measured_k_distribution(const OrderProblem& problem);

// Total mass of k satisfying -r/2 <= kr mod Q <= r/2 (centered residue).
double shor_good_k_mass(const OrderProblem& problem, std::uint64_t order);

// Order finding through eigenvalue readout of |g> -> |gY mod N>, starting
// from |1>, Kitaev-style. precision_bits 0 picks ceil(2 log2 N) + 1.
OrderResult kitaev_order(std::uint64_t modulus, std::uint64_t base, unsigned precision_bits,
                         RandomSource& rng, std::size_t max_repeats = 20);

// ---- Factoring ----

struct FactorAttempt {
    std::uint64_t y = 0;
    std::string note;
    std::optional<std::uint64_t> order;
};

struct FactorResult {
    std::optional<std::uint64_t> factor;
    std::string method;  // "gcd", "order", "prime-power", "even", ...
    std::vector<FactorAttempt> attempts;
};

// Random-Y reduction from factoring to order finding; use_kitaev selects the
// order-finding route.
FactorResult factor(std::uint64_t n, RandomSource& rng, bool use_kitaev = false,
                    std::size_t max_attempts = 20);

// ---- Toy RSA ----

struct RsaKey {
    std::uint64_t modulus = 0;  // N = P * Q
    std::uint64_t e = 0;        // public exponent
    std::uint64_t p = 0, q = 0; // secret primes
    std::uint64_t d = 0;        // secret exponent
};

RsaKey rsa_keygen(std::uint64_t p, std::uint64_t q, std::uint64_t e);
std::uint64_t rsa_encrypt(std::uint64_t message, const RsaKey& key);
std::uint64_t rsa_decrypt(std::uint64_t cipher, const RsaKey& key);

struct RsaCrackResult {
    std::uint64_t message = 0;
    std::string route;  // "order" or "gcd-factor"
    std::optional<std::uint64_t> order;
};

// Recovers the plaintext from (cipher, N, E) alone: order of the cipher via
// the chosen quantum order finder, D' = E^-1 mod r; ciphers sharing a factor
// with N fall back to factoring by gcd.
RsaCrackResult rsa_crack(std::uint64_t cipher, std::uint64_t modulus, std::uint64_t e,
                         RandomSource& rng, bool use_kitaev = false);

}  // namespace qvm
