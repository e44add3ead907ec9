#ifndef ARRFREE_BETTI_HPP
#define ARRFREE_BETTI_HPP

#include <map>
#include <optional>
#include <vector>

#include "arrfree/module_gb.hpp"

namespace arrfree {

// Graded Betti numbers of a minimal graded free resolution.
struct BettiTable {
    std::map<std::pair<int, int>, long long> entries;  // (i, j) -> beta_{i,j}

    long long beta(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    void add(int i, int j, long long v = 1) {
        if (v) entries[{i, j}] += v;
    }
    int length() const {  // max homological index with a nonzero entry
        int h = 0;
        for (auto& [k, v] : entries)
            if (v) h = std::max(h, k.first);
        return h;
    }
    bool operator==(const BettiTable& o) const {
        for (auto& [k, v] : entries)
            if (v != o.beta(k.first, k.second)) return false;
        for (auto& [k, v] : o.entries)
            if (v != beta(k.first, k.second)) return false;
        return true;
    }
};

inline int hdim(const BettiTable& b) { return b.length(); }

// Minimal free resolution of S/I for a homogeneous ideal I over a
// field: minimal generators, then iterated minimal syzygies. The
// length is capped by the number of variables (Hilbert syzygy).
// The unit ideal yields the empty table (zero module).
template <class C>
BettiTable minimal_free_resolution(const std::vector<Poly<C>>& gens,
                                   const TermOrder& ord, int max_length = -1) {
    static_assert(is_field_v<C>, "resolutions are computed over a field");
    BettiTable out;
    int nv = -1;
    std::vector<ModElem<C>> level;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        nv = g.nv;
        if (!g.homogeneous())
            throw input_error("minimal_free_resolution: non-homogeneous generator");
        level.push_back(as_mod_elem(g));
    }
    if (nv < 0) {  // zero ideal: S itself
        out.add(0, 0, 1);
        return out;
    }
    if (max_length < 0) max_length = nv;

    // unit ideal => zero module => empty table
    {
        std::vector<Poly<C>> flat;
        for (auto& v : level) flat.push_back(v.comp[0]);
        auto gb = buchberger_field(flat, ord);
        if (!gb.empty() && gb.front().lm().is_one()) return out;
    }

    out.add(0, 0, 1);
    std::vector<int> shifts{0};
    std::vector<int> degs;
    level = minimal_generators(level, shifts, nv, ord, &degs);
    for (int d : degs) out.add(1, d, 1);

    int i = 1;
    while (!level.empty()) {
        if (i > max_length)
            throw internal_error("resolution exceeds the Hilbert syzygy bound");
        std::vector<int> elem_degs;
        std::vector<ModElem<C>> syz = syzygies(level, shifts, nv, ord, &elem_degs);
        if (syz.empty()) break;
        std::vector<int> next_degs;
        syz = minimal_generators(syz, elem_degs, nv, ord, &next_degs);
        for (int d : next_degs) out.add(i + 1, d, 1);
        level = std::move(syz);
        shifts = std::move(elem_degs);
        ++i;
    }
    return out;
}

// Decide whether `to` is reachable from `from` by consecutive
// cancellations (decrement beta_{i,j} and beta_{i+1,j} together).
// Returns the multiplicities m_{i,j} (number of cancellations joining
// rows i and i+1 in internal degree j) when reachable.
inline std::optional<std::map<std::pair<int, int>, long long>>
consecutive_cancellation(const BettiTable& from, const BettiTable& to) {
    std::set<int> js;
    int maxi = 0;
    for (auto& [k, v] : from.entries) {
        js.insert(k.second);
        maxi = std::max(maxi, k.first);
    }
    for (auto& [k, v] : to.entries) {
        js.insert(k.second);
        maxi = std::max(maxi, k.first);
    }
    std::map<std::pair<int, int>, long long> mult;
    for (int j : js) {
        long long carry = 0;
        for (int i = 0; i <= maxi; ++i) {
            long long d = from.beta(i, j) - to.beta(i, j);
            long long m = d - carry;  // cancellations pairing rows i, i+1
            if (m < 0) return std::nullopt;
            if (m) mult[{i, j}] = m;
            carry = m;
        }
        if (carry != 0) return std::nullopt;
    }
    return mult;
}

inline bool consecutive_cancellation_reachable(const BettiTable& from,
                                               const BettiTable& to) {
    return consecutive_cancellation(from, to).has_value();
}

}  // namespace arrfree

#endif
