#include <numeric>
#include <stdexcept>

#include "qvm/shor.hpp"

namespace qvm {

RsaKey rsa_keygen(std::uint64_t p, std::uint64_t q, std::uint64_t e) {
    if (!is_prime(p) || !is_prime(q) || p == q) {
        throw std::domain_error("need two distinct primes");
    }
    std::uint64_t phi = (p - 1) * (q - 1);
    if (std::gcd(e, phi) != 1) {
        throw std::domain_error("public exponent must be coprime to (P-1)(Q-1)");
    }
    RsaKey key;
    key.p = p;
    key.q = q;
    key.modulus = p * q;
    key.e = e;
    key.d = mod_inverse(e, phi);
    return key;
}

std::uint64_t rsa_encrypt(std::uint64_t message, const RsaKey& key) {
    if (message >= key.modulus) throw std::domain_error("message must be below N");
    return modpow(message, key.e, key.modulus);
}

std::uint64_t rsa_decrypt(std::uint64_t cipher, const RsaKey& key) {
    if (cipher >= key.modulus) throw std::domain_error("cipher must be below N");
    return modpow(cipher, key.d, key.modulus);
}

RsaCrackResult rsa_crack(std::uint64_t cipher, std::uint64_t modulus, std::uint64_t e,
                         RandomSource& rng, bool use_kitaev) {
    RsaCrackResult result;
    if (cipher == 0) {
        result.message = 0;
        result.route = "trivial";
        return result;
    }
    std::uint64_t g = std::gcd(cipher, modulus);
    if (g > 1) {
        // The cipher exposes a factor of N outright; decrypt with the
        // reconstructed secret key.
        std::uint64_t p = g, q = modulus / g;
        std::uint64_t d = mod_inverse(e, (p - 1) * (q - 1));
        result.message = modpow(cipher, d, modulus);
        result.route = "gcd-factor";
        return result;
    }

    // Order of the cipher equals the order of the message (E is coprime to
    // phi); D' = E^-1 mod r decrypts without the secret key.
    OrderResult order = use_kitaev ? kitaev_order(modulus, cipher, 0, rng)
                                   : shor_order(OrderProblem{modulus, cipher, 0}, rng);
    if (!order.order) throw std::runtime_error("order finding failed for the cipher");
    std::uint64_t r = *order.order;
    result.order = r;
    result.route = "order";
    if (r == 1) {
        result.message = cipher;  // cipher = 1: the message was 1
        return result;
    }
    // gcd(E, r) = 1 since r divides phi(N); mod_inverse rejects bogus keys.
    std::uint64_t d_prime = mod_inverse(e, r);
    result.message = modpow(cipher, d_prime, modulus);
    return result;
}

}  // namespace qvm
