#ifndef ARRFREE_MODULE_GB_HPP
#define ARRFREE_MODULE_GB_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "arrfree/polynomial.hpp"

namespace arrfree {

// Element of a graded free module S(-s_0) + ... + S(-s_{r-1}), stored
// per component. Field coefficients only.
template <class C>
struct ModElem {
    std::vector<Poly<C>> comp;

    ModElem() = default;
    ModElem(int rank, int nvars) : comp(rank, Poly<C>(nvars)) {}

    int rank() const { return static_cast<int>(comp.size()); }
    bool is_zero() const {
        for (auto& f : comp)
            if (!f.is_zero()) return false;
        return true;
    }
    // Position-over-term leading component: the first nonzero one.
    int lead_comp() const {
        for (int i = 0; i < rank(); ++i)
            if (!comp[i].is_zero()) return i;
        throw internal_error("leading term of zero module element");
    }
};

template <class C>
ModElem<C> mod_sub_scaled(const ModElem<C>& u, const ModElem<C>& v,
                          const Monomial& m, const C& c, const TermOrder& ord) {
    ModElem<C> r = u;
    for (int i = 0; i < r.rank(); ++i)
        r.comp[i] = poly_sub(r.comp[i], poly_mul_term(v.comp[i], m, c), ord);
    return r;
}

// Degree of a homogeneous element with respect to component shifts.
template <class C>
int mod_degree(const ModElem<C>& v, const std::vector<int>& shifts) {
    int d = -1;
    for (int i = 0; i < v.rank(); ++i) {
        if (v.comp[i].is_zero()) continue;
        if (!v.comp[i].homogeneous())
            throw input_error("expected homogeneous module element");
        int di = static_cast<int>(v.comp[i].degree()) + shifts[i];
        if (d != -1 && d != di)
            throw input_error("module element not homogeneous for the given shifts");
        d = di;
    }
    return d;
}

// Buchberger engine for submodules of a free module over a polynomial
// ring with field coefficients, position-over-term order (lower
// component dominates). Rank 1 recovers ideal Groebner bases.
template <class C>
class ModuleGB {
    static_assert(is_field_v<C>, "ModuleGB requires a field domain");

  public:
    struct Entry {
        ModElem<C> g;  // monic
        int comp;
        Monomial lm;
        int deg;  // lm.deg + shift[comp]
    };

    ModuleGB(int nvars, int rank, std::vector<int> shifts, TermOrder ord)
        : nvars_(nvars), rank_(rank), shifts_(std::move(shifts)), ord_(std::move(ord)) {
        if (static_cast<int>(shifts_.size()) != rank_)
            throw internal_error("ModuleGB: shifts/rank mismatch");
    }

    const TermOrder& order() const { return ord_; }
    const std::vector<Entry>& basis() const { return basis_; }

    // Add a generator and restore the Groebner property.
    void add_generator(const ModElem<C>& v) {
        ModElem<C> r = normal_form(v);
        if (!r.is_zero()) insert(std::move(r));
        complete();
    }

    void add_generators(const std::vector<ModElem<C>>& vs) {
        for (auto& v : vs) {
            ModElem<C> r = normal_form(v);
            if (!r.is_zero()) insert(std::move(r));
        }
        complete();
    }

    ModElem<C> normal_form(const ModElem<C>& v) const {
        // Working representation: one descending map per component.
        auto cmp = [this](const Monomial& a, const Monomial& b) {
            return ord_.compare(a, b) > 0;  // descending
        };
        using Map = std::map<Monomial, C, decltype(cmp)>;
        std::vector<Map> work;
        work.reserve(rank_);
        for (int i = 0; i < rank_; ++i) work.emplace_back(cmp);
        for (int i = 0; i < v.rank(); ++i)
            for (auto& t : v.comp[i].terms) work[i][t.m] = t.c;

        ModElem<C> rem(rank_, nvars_);
        for (int c = 0; c < rank_; ++c) {
            auto& m = work[c];
            while (!m.empty()) {
                auto it = m.begin();
                Monomial mon = it->first;
                C coef = it->second;
                const Entry* red = find_reducer(c, mon);
                if (!red) {
                    rem.comp[c].terms.push_back({mon, coef});
                    m.erase(it);
                    continue;
                }
                Monomial q = mono_div(mon, red->lm);
                // subtract coef * q * red->g from the whole working element
                for (int i = red->comp; i < rank_; ++i) {
                    for (auto& t : red->g.comp[i].terms) {
                        Monomial key = mono_mul(t.m, q);
                        C delta = coef * t.c;
                        auto [pos, fresh] = work[i].try_emplace(key, C{});
                        if (fresh)
                            pos->second = -delta;
                        else
                            pos->second = pos->second - delta;
                        if (arrfree::is_zero(pos->second)) work[i].erase(pos);
                    }
                }
            }
        }
        return rem;
    }

    bool reduces_to_zero(const ModElem<C>& v) const { return normal_form(v).is_zero(); }

    // Make the basis reduced: minimal lead terms, tails in normal form,
    // monic, sorted ascending by (component, lm).
    void interreduce() {
        // drop entries whose lead is divisible by another's
        std::vector<Entry> kept;
        for (size_t i = 0; i < basis_.size(); ++i) {
            bool redundant = false;
            for (size_t j = 0; j < basis_.size() && !redundant; ++j) {
                if (i == j) continue;
                if (basis_[j].comp == basis_[i].comp &&
                    mono_divides(basis_[j].lm, basis_[i].lm)) {
                    if (basis_[j].lm == basis_[i].lm) {
                        redundant = j < i;  // keep the first of equals
                    } else {
                        redundant = true;
                    }
                }
            }
            if (!redundant) kept.push_back(basis_[i]);
        }
        basis_ = std::move(kept);
        // tail-reduce each against the rest
        for (size_t i = 0; i < basis_.size(); ++i) {
            Entry e = basis_[i];
            std::vector<Entry> others;
            for (size_t j = 0; j < basis_.size(); ++j)
                if (j != i) others.push_back(basis_[j]);
            std::swap(basis_, others);
            ModElem<C> r = normal_form(e.g);
            std::swap(basis_, others);
            basis_[i].g = make_monic(r);
        }
        std::sort(basis_.begin(), basis_.end(), [this](const Entry& a, const Entry& b) {
            if (a.comp != b.comp) return a.comp < b.comp;
            return ord_.compare(a.lm, b.lm) < 0;
        });
    }

  private:
    int nvars_, rank_;
    std::vector<int> shifts_;
    TermOrder ord_;
    std::vector<Entry> basis_;

    struct PairKey {
        int deg;
        Monomial lcm;
        int comp;
        int i, j;
        bool operator<(const PairKey& o) const {
            if (deg != o.deg) return deg < o.deg;
            if (lcm.e != o.lcm.e) return lcm.e < o.lcm.e;  // lex tie-break
            if (comp != o.comp) return comp < o.comp;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    std::set<PairKey> pending_;
    std::set<std::pair<int, int>> pending_idx_;

    const Entry* find_reducer(int comp, const Monomial& mon) const {
        for (auto& e : basis_)
            if (e.comp == comp && mono_divides(e.lm, mon)) return &e;
        return nullptr;
    }

    ModElem<C> make_monic(ModElem<C> v) const {
        if (v.is_zero()) return v;
        int c = v.lead_comp();
        C s = inv(v.comp[c].lc());
        if (!arrfree::is_one(v.comp[c].lc()))
            for (auto& f : v.comp) f = poly_scalar_mul(f, s);
        return v;
    }

    void insert(ModElem<C> v) {
        v = make_monic(std::move(v));
        Entry e;
        e.comp = v.lead_comp();
        e.lm = v.comp[e.comp].lm();
        e.deg = static_cast<int>(e.lm.deg) + shifts_[e.comp];
        e.g = std::move(v);
        int idx = static_cast<int>(basis_.size());
        basis_.push_back(std::move(e));
        for (int k = 0; k < idx; ++k) {
            if (basis_[k].comp != basis_[idx].comp) continue;
            Monomial l = mono_lcm(basis_[k].lm, basis_[idx].lm);
            pending_.insert(PairKey{static_cast<int>(l.deg) + shifts_[basis_[k].comp],
                                    l, basis_[k].comp, k, idx});
            pending_idx_.insert({k, idx});
        }
    }

    void complete() {
        while (!pending_.empty()) {
            PairKey pk = *pending_.begin();
            pending_.erase(pending_.begin());
            pending_idx_.erase({pk.i, pk.j});
            const Entry& a = basis_[pk.i];
            const Entry& b = basis_[pk.j];
            // Buchberger's first criterion: only valid for ideals.
            if (rank_ == 1 && mono_coprime(a.lm, b.lm)) continue;
            if (chain_criterion(pk)) continue;
            Monomial qa = mono_div(pk.lcm, a.lm), qb = mono_div(pk.lcm, b.lm);
            ModElem<C> s = mod_sub_scaled(scaled(a.g, qa), b.g, qb, C(b.g.comp[b.comp].lc()),
                                          ord_);
            ModElem<C> r = normal_form(s);
            if (!r.is_zero()) insert(std::move(r));
        }
    }

    ModElem<C> scaled(const ModElem<C>& v, const Monomial& m) const {
        ModElem<C> r(rank_, nvars_);
        for (int i = 0; i < rank_; ++i) {
            r.comp[i].terms.reserve(v.comp[i].terms.size());
            for (auto& t : v.comp[i].terms) r.comp[i].terms.push_back({mono_mul(t.m, m), t.c});
        }
        return r;
    }

    // Skip (i,j) when some k with lm_k | lcm(i,j) has both (i,k) and
    // (j,k) already treated (classic second criterion).
    bool chain_criterion(const PairKey& pk) const {
        for (int k = 0; k < static_cast<int>(basis_.size()); ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (basis_[k].comp != pk.comp) continue;
            if (!mono_divides(basis_[k].lm, pk.lcm)) continue;
            auto key = [&](int x, int y) {
                return std::make_pair(std::min(x, y), std::max(x, y));
            };
            if (pending_idx_.count(key(pk.i, k))) continue;
            if (pending_idx_.count(key(pk.j, k))) continue;
            return true;
        }
        return false;
    }
};

// --- ideal-level wrappers ---------------------------------------------

template <class C>
ModElem<C> as_mod_elem(const Poly<C>& f) {
    ModElem<C> v;
    v.comp.push_back(f);
    return v;
}

// Remainder of f on division by G (any generating set; unique when G is
// a Groebner basis).
template <class C>
Poly<C> normal_form(const Poly<C>& f, const std::vector<Poly<C>>& G,
                    const TermOrder& ord) {
    struct Red {
        const Poly<C>* g;
        Monomial lm;
        C lcinv;
    };
    std::vector<Red> reds;
    for (auto& g : G)
        if (!g.is_zero()) reds.push_back({&g, g.lm(), inv(g.lc())});
    auto cmp = [&ord](const Monomial& a, const Monomial& b) {
        return ord.compare(a, b) > 0;
    };
    std::map<Monomial, C, decltype(cmp)> work(cmp);
    for (auto& t : f.terms) work[t.m] = t.c;
    Poly<C> rem(f.nv);
    while (!work.empty()) {
        auto it = work.begin();
        Monomial mon = it->first;
        C coef = it->second;
        const Red* red = nullptr;
        for (auto& r : reds)
            if (mono_divides(r.lm, mon)) { red = &r; break; }
        if (!red) {
            rem.terms.push_back({mon, coef});
            work.erase(it);
            continue;
        }
        Monomial q = mono_div(mon, red->lm);
        C scale = coef * red->lcinv;
        for (auto& t : red->g->terms) {
            Monomial key = mono_mul(t.m, q);
            C delta = scale * t.c;
            auto [pos, fresh] = work.try_emplace(key, C{});
            if (fresh)
                pos->second = -delta;
            else
                pos->second = pos->second - delta;
            if (arrfree::is_zero(pos->second)) work.erase(pos);
        }
    }
    return rem;
}

// Unique reduced Groebner basis (monic, auto-reduced, sorted ascending
// by leading monomial). The zero ideal yields the empty basis.
template <class C>
std::vector<Poly<C>> buchberger_field(const std::vector<Poly<C>>& gens,
                                      const TermOrder& ord) {
    int nv = -1;
    for (auto& g : gens)
        if (!g.is_zero()) nv = g.nv;
    if (nv < 0) return {};
    ModuleGB<C> gb(nv, 1, {0}, ord);
    std::vector<ModElem<C>> vs;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.nv != nv) throw input_error("buchberger: mismatched variable counts");
        vs.push_back(as_mod_elem(g));
    }
    gb.add_generators(vs);
    gb.interreduce();
    std::vector<Poly<C>> out;
    for (auto& e : gb.basis()) out.push_back(e.g.comp[0]);
    return out;
}

// Membership test against a precomputed reduced GB.
template <class C>
bool in_ideal(const Poly<C>& f, const std::vector<Poly<C>>& gb, const TermOrder& ord) {
    return normal_form(f, gb, ord).is_zero();
}

// --- syzygies and minimal generators ----------------------------------

// Generating set (in fact a Groebner basis) of the syzygy module of the
// given homogeneous elements of S(-shifts)^rank. Returned elements live
// in S(-d_1) + ... + S(-d_m) where d_i are the input element degrees.
template <class C>
std::vector<ModElem<C>> syzygies(const std::vector<ModElem<C>>& vs,
                                 const std::vector<int>& shifts, int nvars,
                                 const TermOrder& ord,
                                 std::vector<int>* out_degrees = nullptr) {
    int k = static_cast<int>(shifts.size());
    int m = static_cast<int>(vs.size());
    std::vector<int> degs(m);
    for (int i = 0; i < m; ++i) {
        if (vs[i].is_zero()) throw input_error("syzygies: zero input element");
        if (static_cast<int>(vs[i].comp.size()) != k)
            throw input_error("syzygies: element rank does not match the shift vector");
        degs[i] = mod_degree(vs[i], shifts);
    }
    std::vector<int> full_shifts = shifts;
    full_shifts.insert(full_shifts.end(), degs.begin(), degs.end());
    ModuleGB<C> gb(nvars, k + m, full_shifts, ord);
    std::vector<ModElem<C>> emb;
    for (int i = 0; i < m; ++i) {
        ModElem<C> w(k + m, nvars);
        for (int cpt = 0; cpt < k; ++cpt) w.comp[cpt] = vs[i].comp[cpt];
        w.comp[k + i] = Poly<C>::constant(nvars, unit_coeff(vs[i]));
        emb.push_back(std::move(w));
    }
    gb.add_generators(emb);
    std::vector<ModElem<C>> out;
    for (auto& e : gb.basis()) {
        if (e.comp < k) continue;  // head part nonzero
        ModElem<C> s(m, nvars);
        for (int i = 0; i < m; ++i) s.comp[i] = e.g.comp[k + i];
        out.push_back(std::move(s));
    }
    if (out_degrees) *out_degrees = degs;
    return out;
}

template <class C>
C unit_coeff(const ModElem<C>& sample) {
    // a "one" in the coefficient field, with the right modulus for Fp
    for (auto& f : sample.comp)
        if (!f.is_zero()) {
            C c = f.terms.front().c;
            return c * inv(c);
        }
    throw internal_error("unit_coeff of zero element");
}

// Minimal homogeneous generators, greedily by degree (graded Nakayama):
// an element is redundant iff it lies in the submodule generated by the
// elements kept before it.
template <class C>
std::vector<ModElem<C>> minimal_generators(const std::vector<ModElem<C>>& gens,
                                           const std::vector<int>& shifts, int nvars,
                                           const TermOrder& ord,
                                           std::vector<int>* out_degrees = nullptr) {
    int rank = static_cast<int>(shifts.size());
    std::vector<std::pair<int, int>> order;  // (degree, index)
    for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
        if (gens[i].is_zero()) continue;
        order.push_back({mod_degree(gens[i], shifts), i});
    }
    std::stable_sort(order.begin(), order.end(),
                     [](auto& a, auto& b) { return a.first < b.first; });
    ModuleGB<C> gb(nvars, rank, shifts, ord);
    std::vector<ModElem<C>> kept;
    std::vector<int> degs;
    for (auto& [d, i] : order) {
        if (gb.reduces_to_zero(gens[i])) continue;
        kept.push_back(gens[i]);
        degs.push_back(d);
        gb.add_generator(gens[i]);
    }
    if (out_degrees) *out_degrees = degs;
    return kept;
}

}  // namespace arrfree

#endif
