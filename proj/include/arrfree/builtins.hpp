#ifndef ARRFREE_BUILTINS_HPP
#define ARRFREE_BUILTINS_HPP

#include <string>
#include <vector>

#include "arrfree/arrangement.hpp"

namespace arrfree {

// Named example arrangements available from the command line.

inline Arrangement builtin_boolean(int l) {
    if (l < 1 || l > 6) throw input_error("boolean-<l>: l must be in 1..6");
    std::vector<std::vector<long long>> v;
    for (int i = 0; i < l; ++i) {
        std::vector<long long> f(l, 0);
        f[i] = 1;
        v.push_back(std::move(f));
    }
    return new_arrangement(std::move(v), "boolean-" + std::to_string(l));
}

// Q = xyz(x-y)(x+z)(y+z)(x+y+z): free with exponents (1,3,3) over Q,
// (1,2,4) in characteristic 2.
inline Arrangement builtin_example_435() {
    return new_arrangement({{1, 0, 0},
                            {0, 1, 0},
                            {0, 0, 1},
                            {1, -1, 0},
                            {1, 0, 1},
                            {0, 1, 1},
                            {1, 1, 1}},
                           "example-435");
}

// Q = xyz(y+z)(x-y)(x+z): interesting over F_3 (free, 3 | n).
inline Arrangement builtin_sextic_f3() {
    return new_arrangement({{1, 0, 0},
                            {0, 1, 0},
                            {0, 0, 1},
                            {0, 1, 1},
                            {1, -1, 0},
                            {1, 0, 1}},
                           "sextic-f3");
}

// Q = z(x+2y-4z)(y+4z)(x+3y-6z): not free over Q, free mod 2 and 3
// with exponents (1,1,2); both primes are zero divisors in S/J.
inline Arrangement builtin_nonfree_s6() {
    return new_arrangement({{0, 0, 1},
                            {1, 2, -4},
                            {0, 1, 4},
                            {1, 3, -6}},
                           "nonfree-s6");
}

// Cone over the Shi-Catalan arrangement of type B2 with parameter
// range [-2,2]: forms alpha - c*z for alpha in {x, y, x-y, x+y},
// c in {-2,...,2}, plus the cone variable z. n = 21, l = 3.
inline Arrangement builtin_shicatalan_b2_cone() {
    std::vector<std::vector<long long>> v;
    std::vector<std::vector<long long>> roots{{1, 0}, {0, 1}, {1, -1}, {1, 1}};
    for (auto& r : roots)
        for (long long c = -2; c <= 2; ++c) v.push_back({r[0], r[1], -c});
    v.push_back({0, 0, 1});
    return new_arrangement(std::move(v), "shicatalan-b2-cone");
}

// Cone over the Shi-Catalan arrangement of type B3 with parameter
// range [-2,2]: 9 roots x 5 levels + cone variable. n = 46, l = 4.
inline Arrangement builtin_shicatalan_b3_cone() {
    std::vector<std::vector<long long>> roots;
    for (int i = 0; i < 3; ++i) {
        std::vector<long long> e(3, 0);
        e[i] = 1;
        roots.push_back(e);
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            std::vector<long long> d(3, 0), s(3, 0);
            d[i] = 1;
            d[j] = -1;
            s[i] = 1;
            s[j] = 1;
            roots.push_back(d);
            roots.push_back(s);
        }
    std::vector<std::vector<long long>> v;
    for (auto& r : roots)
        for (long long c = -2; c <= 2; ++c) v.push_back({r[0], r[1], r[2], -c});
    v.push_back({0, 0, 0, 1});
    return new_arrangement(std::move(v), "shicatalan-b3-cone");
}

// The nine lines of P^2(F_3) not through the point (1,1,1), as integer
// forms with entries in {0,1,2}; intended for use over F_3.
inline Arrangement builtin_ziegler_f3() {
    std::vector<std::vector<long long>> v;
    for (long long a = 0; a < 3; ++a)
        for (long long b = 0; b < 3; ++b)
            for (long long c = 0; c < 3; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                // projective normalization: first nonzero entry is 1
                long long lead = a ? a : (b ? b : c);
                if (lead != 1) continue;
                if ((a + b + c) % 3 == 0) continue;
                v.push_back({a, b, c});
            }
    return new_arrangement(std::move(v), "ziegler-f3");
}

// Four lines in the plane: x, y, x+y, x-y.
inline Arrangement builtin_pm2_lines() {
    return new_arrangement({{1, 0}, {0, 1}, {1, 1}, {1, -1}}, "pm2-lines");
}

inline Arrangement builtin_arrangement(const std::string& name) {
    if (name.rfind("boolean-", 0) == 0) {
        try {
            return builtin_boolean(std::stoi(name.substr(8)));
        } catch (const input_error&) {
            throw;
        } catch (...) {
            throw input_error("unknown builtin: " + name);
        }
    }
    if (name == "example-435") return builtin_example_435();
    if (name == "sextic-f3") return builtin_sextic_f3();
    if (name == "nonfree-s6") return builtin_nonfree_s6();
    if (name == "shicatalan-b2-cone") return builtin_shicatalan_b2_cone();
    if (name == "shicatalan-b3-cone") return builtin_shicatalan_b3_cone();
    if (name == "ziegler-f3") return builtin_ziegler_f3();
    if (name == "pm2-lines") return builtin_pm2_lines();
    throw input_error("unknown builtin: " + name);
}

inline std::vector<std::string> builtin_names() {
    return {"boolean-1", "boolean-2", "boolean-3", "boolean-4",
            "example-435", "sextic-f3", "nonfree-s6",
            "shicatalan-b2-cone", "shicatalan-b3-cone",
            "ziegler-f3", "pm2-lines"};
}

}  // namespace arrfree

#endif
