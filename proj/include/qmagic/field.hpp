#pragma once

// Exact arithmetic in the prime field Z_p. Residues are kept fully reduced;
// division means multiplication by the extended-Euclid inverse, so fractional
// spellings like -1/12 are ordinary field expressions.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "qmagic/errors.hpp"

namespace qmagic {

// Trial division. The library targets small primes (p <= 1000), so nothing
// fancier is needed.
inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline constexpr std::int64_t kMaxModulus = 1000;

class Fp {
  public:
    Fp(std::int64_t value, std::int64_t modulus) : p_(modulus) {
        if (modulus > kMaxModulus)
            throw UnsupportedDimension("Fp: modulus " + std::to_string(modulus) +
                                       " exceeds the design limit of 1000");
        if (!is_prime(modulus))
            throw UnsupportedDimension("Fp: modulus " + std::to_string(modulus) +
                                       " is not prime");
        v_ = value % p_;
        if (v_ < 0) v_ += p_;
    }

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }

    friend Fp operator+(Fp a, Fp b) { return Fp(a.v_ + b.check(a).v_, a.p_); }
    friend Fp operator-(Fp a, Fp b) { return Fp(a.v_ - b.check(a).v_, a.p_); }
    friend Fp operator*(Fp a, Fp b) { return Fp(a.v_ * b.check(a).v_, a.p_); }
    friend Fp operator/(Fp a, Fp b) { return a * inv(b.check(a)); }
    Fp operator-() const { return Fp(-v_, p_); }

    friend bool operator==(Fp a, Fp b) { return a.p_ == b.p_ && a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return !(a == b); }

    // Multiplicative inverse by extended Euclid.
    friend Fp inv(Fp x) {
        if (x.v_ == 0)
            throw InversionOfZero("inv: zero has no multiplicative inverse mod " +
                                  std::to_string(x.p_));
        std::int64_t r0 = x.p_, r1 = x.v_, s0 = 0, s1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t r2 = r0 - q * r1;
            std::int64_t s2 = s0 - q * s1;
            r0 = r1; r1 = r2;
            s0 = s1; s1 = s2;
        }
        return Fp(s0, x.p_);
    }

    Fp pow(std::int64_t e) const {
        if (e < 0) return inv(*this).pow(-e);
        Fp r(1, p_), b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

  private:
    const Fp& check(const Fp& other) const {
        if (p_ != other.p_)
            throw ModulusMismatch("Fp: mixed moduli " + std::to_string(other.p_) +
                                  " and " + std::to_string(p_));
        return *this;
    }

    std::int64_t v_;
    std::int64_t p_;
};

// Convenience for the paper-style fractions: fp_ratio(-1, 12, p) is -1/12.
inline Fp fp_ratio(std::int64_t num, std::int64_t den, std::int64_t p) {
    return Fp(num, p) / Fp(den, p);
}

inline std::int64_t inv_mod(std::int64_t x, std::int64_t p) {
    return inv(Fp(x, p)).value();
}

// a k^3 + b k^2 + c k in Z_p, the exponent shared by magic states and the
// cubic exponential sums.
inline Fp eval_cubic(Fp a, Fp b, Fp c, Fp k) {
    return ((a * k + b) * k + c) * k;
}

// Partition of Z_p* into equivalence classes of cubic residues and their
// cosets: one class when p = 2 mod 3 (cubing is a bijection), three classes
// of size (p-1)/3 when p = 1 mod 3, the first being the cubic residues.
inline std::vector<std::vector<std::int64_t>> cubic_residue_classes(std::int64_t p) {
    if (!is_prime(p) || p <= 3)
        throw UnsupportedDimension("cubic_residue_classes: need prime p > 3");
    std::vector<bool> is_cube(p, false);
    for (std::int64_t k = 1; k < p; ++k) is_cube[k * k % p * k % p] = true;

    std::vector<std::int64_t> cubes;
    for (std::int64_t a = 1; a < p; ++a)
        if (is_cube[a]) cubes.push_back(a);

    if (static_cast<std::int64_t>(cubes.size()) == p - 1) return {cubes};

    std::int64_t g = 1;
    while (is_cube[g]) ++g;
    std::vector<std::vector<std::int64_t>> classes{cubes, {}, {}};
    for (std::int64_t m = 1; m <= 2; ++m) {
        std::int64_t mult = (m == 1) ? g : g * g % p;
        for (std::int64_t a : cubes) classes[m].push_back(a * mult % p);
        std::sort(classes[m].begin(), classes[m].end());
    }
    // Present the cosets in order of their smallest member.
    if (classes[1][0] > classes[2][0]) std::swap(classes[1], classes[2]);
    return classes;
}

// Index of the class containing a (0 = cubic residues).
inline std::size_t cubic_class_of(std::int64_t a, std::int64_t p) {
    auto classes = cubic_residue_classes(p);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::int64_t m : classes[i])
            if (m == a % p) return i;
    throw Error("cubic_class_of: a not in Z_p*");
}

}  // namespace qmagic
