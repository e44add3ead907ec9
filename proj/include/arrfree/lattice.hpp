#ifndef ARRFREE_LATTICE_HPP
#define ARRFREE_LATTICE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "arrfree/arrangement.hpp"

namespace arrfree {

// Intersection lattice of a central arrangement, flats keyed by the set
// of hyperplanes containing them (bitmask; at most 64 hyperplanes).
struct Flat {
    int rank = 0;
    std::uint64_t hyps = 0;  // bit i set <=> hyperplane i contains the flat
};

struct IntersectionLattice {
    int dim = 0;
    int n = 0;
    std::vector<Flat> flats;    // sorted by (rank, hyps)
    std::vector<Int> mobius;    // mu(top, flat), parallel to flats
};

namespace detail {

// Row echelon machinery over a field C for the span of linear forms.
template <class C>
struct Echelon {
    int l;
    std::vector<std::vector<C>> rows;  // reduced rows, pivot columns increasing

    explicit Echelon(int dim) : l(dim) {}

    int rank() const { return static_cast<int>(rows.size()); }

    // Reduce v against the rows; returns the residue.
    std::vector<C> residue(std::vector<C> v) const {
        for (auto& r : rows) {
            int piv = pivot_of(r);
            if (is_zero(v[piv])) continue;
            C f = v[piv] * inv(r[piv]);
            for (int k = 0; k < l; ++k) v[k] = v[k] - f * r[k];
        }
        return v;
    }

    bool contains(const std::vector<C>& v) const {
        for (auto& c : residue(v))
            if (!is_zero(c)) return false;
        return true;
    }

    // Add v to the span; returns false if it was already contained.
    bool add(std::vector<C> v) {
        v = residue(std::move(v));
        for (auto& c : v)
            if (!is_zero(c)) {
                rows.push_back(std::move(v));
                return true;
            }
        return false;
    }

    static int pivot_of(const std::vector<C>& r) {
        for (size_t k = 0; k < r.size(); ++k)
            if (!is_zero(r[k])) return static_cast<int>(k);
        throw internal_error("echelon: zero row");
    }
};

template <class C>
std::vector<C> form_vector(const Arrangement& a, int i, std::uint64_t p) {
    std::vector<C> v;
    for (long long c : a.hyperplanes[i]) v.push_back(coeff_from_ll<C>(c, p));
    return v;
}

}  // namespace detail

// Build L(A). Over F_p (C = Fp) the arrangement must be good at p.
template <class C>
IntersectionLattice intersection_lattice(const Arrangement& a, std::uint64_t p = 0) {
    static_assert(is_field_v<C>);
    if constexpr (std::is_same_v<C, Fp>) {
        if (!distinct_mod_p(a, p))
            throw refusal_error("prime " + std::to_string(p) + " not good");
    }
    int n = a.n(), l = a.dim;
    if (n > 64) throw input_error("intersection_lattice: more than 64 hyperplanes");

    std::vector<std::vector<C>> forms;
    for (int i = 0; i < n; ++i) forms.push_back(detail::form_vector<C>(a, i, p));

    // Flats discovered so far, with their echelon bases kept per rank
    // level only while expanding.
    std::map<std::uint64_t, int> seen;  // mask -> rank
    std::vector<std::pair<std::uint64_t, detail::Echelon<C>>> frontier;
    frontier.push_back({0, detail::Echelon<C>(l)});
    seen[0] = 0;

    auto closure_mask = [&](const detail::Echelon<C>& e) {
        std::uint64_t m = 0;
        for (int j = 0; j < n; ++j)
            if (e.contains(forms[j])) m |= (1ull << j);
        return m;
    };

    int rank = 0;
    while (!frontier.empty()) {
        ++rank;
        std::vector<std::pair<std::uint64_t, detail::Echelon<C>>> next;
        for (auto& [mask, ech] : frontier) {
            for (int j = 0; j < n; ++j) {
                if (mask & (1ull << j)) continue;
                detail::Echelon<C> e2 = ech;
                if (!e2.add(forms[j]))
                    throw internal_error("intersection_lattice: closure missed a form");
                std::uint64_t m2 = closure_mask(e2);
                if (seen.emplace(m2, rank).second) next.push_back({m2, std::move(e2)});
            }
        }
        frontier = std::move(next);
    }

    IntersectionLattice lat;
    lat.dim = l;
    lat.n = n;
    for (auto& [mask, r] : seen) lat.flats.push_back({r, mask});
    std::sort(lat.flats.begin(), lat.flats.end(), [](const Flat& x, const Flat& y) {
        if (x.rank != y.rank) return x.rank < y.rank;
        return x.hyps < y.hyps;
    });

    // Moebius function from the bottom element V: mu(V)=1,
    // mu(X) = -sum over Y strictly below X (Y.hyps strictly contained).
    lat.mobius.resize(lat.flats.size());
    for (size_t i = 0; i < lat.flats.size(); ++i) {
        if (lat.flats[i].rank == 0) {
            lat.mobius[i] = 1;
            continue;
        }
        Int s = 0;
        for (size_t k = 0; k < i; ++k)
            if ((lat.flats[k].hyps & lat.flats[i].hyps) == lat.flats[k].hyps &&
                lat.flats[k].hyps != lat.flats[i].hyps)
                s += lat.mobius[k];
        lat.mobius[i] = -s;
    }
    return lat;
}

// Characteristic polynomial chi(A, t) = sum_X mu(X) t^(dim - rank X).
struct CharPoly {
    std::vector<Int> c;  // c[k] is the coefficient of t^k; size dim+1

    int degree() const { return static_cast<int>(c.size()) - 1; }

    Int evaluate(const Int& t) const {
        Int acc = 0;
        for (int k = degree(); k >= 0; --k) acc = acc * t + c[k];
        return acc;
    }
    bool operator==(const CharPoly& o) const { return c == o.c; }
};

inline CharPoly characteristic_polynomial(const IntersectionLattice& lat) {
    CharPoly chi;
    chi.c.assign(lat.dim + 1, Int(0));
    for (size_t i = 0; i < lat.flats.size(); ++i)
        chi.c[lat.dim - lat.flats[i].rank] += lat.mobius[i];
    return chi;
}

template <class C>
CharPoly characteristic_polynomial(const Arrangement& a, std::uint64_t p = 0) {
    return characteristic_polynomial(intersection_lattice<C>(a, p));
}

// Product (t - e_1)...(t - e_l), for comparing with chi.
inline CharPoly expand_exponent_product(const std::vector<int>& exps, int dim) {
    CharPoly f;
    f.c.assign(dim + 1, Int(0));
    f.c[0] = 1;
    int deg = 0;
    for (int e : exps) {
        for (int k = deg + 1; k >= 1; --k) f.c[k] = f.c[k - 1] - Int(e) * f.c[k];
        f.c[0] = -Int(e) * f.c[0];
        ++deg;
    }
    if (deg != dim) throw input_error("expand_exponent_product: need dim exponents");
    return f;
}

inline bool factorization_matches(const CharPoly& chi, const std::vector<int>& exps) {
    return chi == expand_exponent_product(exps, chi.degree());
}

// Free arrangements must satisfy chi(A, t) = prod (t - e_i).
inline bool terao_factorization_check(const FreenessReport& rep, const CharPoly& chi) {
    if (!rep.free_arrangement)
        throw input_error("terao_factorization_check: report is not free");
    return factorization_matches(chi, rep.exponents);
}

// Brute-force count of points of F_p^l avoiding every hyperplane of
// the reduced arrangement; equals chi(A_p, p) when p is good.
inline Int count_complement_points(const Arrangement& a, std::uint64_t p,
                                   std::uint64_t box_limit = 100000000ull) {
    if (!distinct_mod_p(a, p))
        throw refusal_error("prime " + std::to_string(p) + " not good");
    int l = a.dim, n = a.n();
    // p^l points
    std::uint64_t total = 1;
    for (int i = 0; i < l; ++i) {
        if (total > box_limit / p)
            throw input_error("count_complement_points: p^l exceeds the enumeration bound");
        total *= p;
    }
    Int count = 0;
    std::vector<std::uint64_t> pt(l, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t v = idx;
        for (int i = 0; i < l; ++i) {
            pt[i] = v % p;
            v /= p;
        }
        bool on_some = false;
        for (int i = 0; i < n && !on_some; ++i) {
            unsigned __int128 s = 0;
            for (int k = 0; k < l; ++k) {
                long long c = a.hyperplanes[i][k];
                std::uint64_t cm = Fp::from_long(c, p).v;
                s += (unsigned __int128)cm * pt[k];
            }
            if (s % p == 0) on_some = true;
        }
        if (!on_some) count += 1;
    }
    return count;
}

// --- freeness criteria from point counts --------------------------------

struct Yoshinaga3dResult {
    bool applicable = false;
    int case_id = 0;  // 1: n >= 2p, 2: n == 2p-1, 3: n == 2p-2
    bool predicts_free = false;
    Int chi_at_p;  // chi(A_p, p)
};

// Dimension-3 criterion over F_p by |A| against 2p; freeness of A_p is
// equivalent to a characteristic polynomial condition.
inline Yoshinaga3dResult yoshinaga_3d(const Arrangement& a, std::uint64_t p) {
    if (a.dim != 3) throw input_error("yoshinaga_3d: needs dimension 3");
    Yoshinaga3dResult res;
    int n = a.n();
    CharPoly chi = characteristic_polynomial<Fp>(a, p);  // refuses when p not good
    res.chi_at_p = chi.evaluate(Int(static_cast<unsigned long>(p)));
    long long pp = static_cast<long long>(p);
    if (n >= 2 * pp) {
        res.applicable = true;
        res.case_id = 1;
        res.predicts_free = (res.chi_at_p == 0);
    } else if (n == 2 * pp - 1) {
        res.applicable = true;
        res.case_id = 2;
        res.predicts_free =
            (res.chi_at_p == 0) ||
            chi == expand_exponent_product({1, static_cast<int>(p) - 1,
                                            static_cast<int>(p) - 1}, 3);
    } else if (n == 2 * pp - 2) {
        res.applicable = true;
        res.case_id = 3;
        res.predicts_free =
            (res.chi_at_p == 0) ||
            chi == expand_exponent_product({1, static_cast<int>(p) - 2,
                                            static_cast<int>(p) - 1}, 3);
    }
    return res;
}

struct YoshinagaLdResult {
    bool concluded = false;       // chi(A_p, p^(l-2)) == 0 => free
    Int chi_value;                // chi(A_p, p^(l-2))
    std::vector<int> exponents;   // sorted, when concluded
};

// General-dimension sufficient criterion: if chi(A_p, p^(l-2)) = 0 then
// A_p is free with exponents (1, p, ..., p^(l-2), n-1-(p+...+p^(l-2))).
inline YoshinagaLdResult yoshinaga_ld(const Arrangement& a, std::uint64_t p) {
    int l = a.dim, n = a.n();
    if (l < 2) throw input_error("yoshinaga_ld: needs dimension >= 2");
    CharPoly chi = characteristic_polynomial<Fp>(a, p);
    Int q = 1;
    for (int k = 0; k < l - 2; ++k) q *= static_cast<unsigned long>(p);
    YoshinagaLdResult res;
    res.chi_value = chi.evaluate(q);
    if (res.chi_value != 0) return res;
    res.concluded = true;
    Int rest = n - 1;
    Int pk = 1;
    res.exponents.push_back(1);
    for (int k = 1; k <= l - 2; ++k) {
        pk *= static_cast<unsigned long>(p);
        res.exponents.push_back(static_cast<int>(pk.get_si()));
        rest -= pk;
    }
    if (rest < 0)
        throw internal_error("yoshinaga_ld: negative residual exponent");
    res.exponents.push_back(static_cast<int>(rest.get_si()));
    std::sort(res.exponents.begin(), res.exponents.end());
    return res;
}

}  // namespace arrfree

#endif
