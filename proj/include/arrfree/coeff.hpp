#ifndef ARRFREE_COEFF_HPP
#define ARRFREE_COEFF_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "arrfree/errors.hpp"
#include "arrfree/prime_util.hpp"

namespace arrfree {

// Exact coefficient domains: Int (= mpz_class), Rat (= mpq_class, kept
// canonical by GMP: lowest terms, positive denominator) and Fp below.
// No floating point anywhere.

// Prime field element. p == 0 marks a modulus-less zero so that a
// default-constructed Fp is a usable additive identity.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t modulus) : v(value % modulus), p(modulus) {}

    static Fp from_int(const Int& z, std::uint64_t p) {
        Int r = z % Int(static_cast<unsigned long>(p));
        if (r < 0) r += Int(static_cast<unsigned long>(p));
        return Fp(r.get_ui(), p);
    }
    static Fp from_long(long long z, std::uint64_t p) {
        long long r = z % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return Fp(static_cast<std::uint64_t>(r), p);
    }
};

inline std::uint64_t fp_modulus(const Fp& a, const Fp& b) {
    if (a.p && b.p && a.p != b.p) throw internal_error("mixed prime-field moduli");
    return a.p ? a.p : b.p;
}

inline Fp operator+(const Fp& a, const Fp& b) {
    std::uint64_t p = fp_modulus(a, b);
    if (!p) return Fp{};
    std::uint64_t s = a.v + b.v;
    if (s >= p) s -= p;
    return Fp(s, p);
}

inline Fp operator-(const Fp& a, const Fp& b) {
    std::uint64_t p = fp_modulus(a, b);
    if (!p) return Fp{};
    return Fp(a.v >= b.v ? a.v - b.v : a.v + p - b.v, p);
}

inline Fp operator-(const Fp& a) {
    if (!a.p || a.v == 0) return a;
    return Fp(a.p - a.v, a.p);
}

inline Fp operator*(const Fp& a, const Fp& b) {
    std::uint64_t p = fp_modulus(a, b);
    if (!p) return Fp{};
    return Fp(static_cast<std::uint64_t>(
                  static_cast<unsigned __int128>(a.v) * b.v % p),
              p);
}

inline bool operator==(const Fp& a, const Fp& b) {
    return a.v == b.v && (a.v == 0 || a.p == b.p);
}
inline bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

inline Fp fp_pow(Fp a, std::uint64_t e) {
    Fp r(1, a.p), base = a;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

inline Fp inv(const Fp& a) {
    if (a.v == 0) throw internal_error("inverse of zero in F_p");
    return fp_pow(a, a.p - 2);
}

// --- generic coefficient helpers -------------------------------------

inline bool is_zero(const Int& c) { return sgn(c) == 0; }
inline bool is_zero(const Rat& c) { return sgn(c) == 0; }
inline bool is_zero(const Fp& c) { return c.v == 0; }

inline bool is_one(const Int& c) { return c == 1; }
inline bool is_one(const Rat& c) { return c == 1; }
inline bool is_one(const Fp& c) { return c.v == 1; }

inline Rat inv(const Rat& c) {
    if (is_zero(c)) throw internal_error("inverse of zero rational");
    return Rat(1) / c;
}

// c * k for a machine integer k (derivative exponents etc.).
inline Int scale_int(const Int& c, long k) { return c * k; }
inline Rat scale_int(const Rat& c, long k) { return c * k; }
inline Fp scale_int(const Fp& c, long k) { return c * Fp::from_long(k, c.p ? c.p : 2); }

inline std::string coeff_str(const Int& c) { return c.get_str(); }
inline std::string coeff_str(const Rat& c) { return c.get_str(); }
inline std::string coeff_str(const Fp& c) { return std::to_string(c.v); }

template <class C>
inline constexpr bool is_field_v = true;
template <>
inline constexpr bool is_field_v<Int> = false;

}  // namespace arrfree

#endif
