#pragma once
// Session context: interned module iso classes with orbit-stabilizer
// automorphism counts, cached minimal resolutions, the canonical complex
// invariant (homology part + acyclic part), and shared counting caches.

#include <map>
#include <mutex>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coeff.hpp"
#include "complex.hpp"
#include "ffenum.hpp"

namespace bhall {

inline Integer gl_order(int d, int q) {
    Integer r = 1;
    Integer qd = integer_pow(q, d);
    for (int i = 0; i < d; ++i) r *= qd - integer_pow(q, i);
    return r;
}

struct ClassEntry {
    Representation rep;  // lex-least encoding in the basis-change orbit
    Integer aut;         // |Aut M| = prod_v |GL_{d_v}| / orbit size
    Integer orbit;
};

struct ClassTable {
    const Quiver* qv = nullptr;
    int q = 2;
    long long budget = 1000000;
    std::vector<ClassEntry> entries;
    std::unordered_map<std::string, int> seen;  // every visited encoding -> id
    // (total, dims) -> ids in canonical order (ascending representative encoding)
    std::map<std::pair<int, std::vector<int>>, std::vector<int>> by_dims;
    int enumerated_to = -1;

    int intern(const Representation& M) {
        auto e0 = rep_encode(M);
        if (auto it = seen.find(e0); it != seen.end()) return it->second;
        const Quiver& Q = *qv;
        std::vector<std::vector<std::pair<FFMatrix, FFMatrix>>> gens(static_cast<size_t>(Q.n));
        for (int v = 0; v < Q.n; ++v)
            gens[static_cast<size_t>(v)] = gl_generators(q, M.dims[static_cast<size_t>(v)]);
        std::map<std::string, Representation> visited;
        visited.emplace(e0, M);
        std::vector<Representation> work{M};
        while (!work.empty()) {
            Representation cur = std::move(work.back());
            work.pop_back();
            for (int v = 0; v < Q.n; ++v)
                for (const auto& [g, gi] : gens[static_cast<size_t>(v)]) {
                    Representation nxt = cur;
                    for (size_t ai = 0; ai < Q.arrows.size(); ++ai) {
                        if (Q.arrows[ai].to == v) nxt.maps[ai] = g * nxt.maps[ai];
                        if (Q.arrows[ai].from == v) nxt.maps[ai] = nxt.maps[ai] * gi;
                    }
                    auto en = rep_encode(nxt);
                    if (visited.emplace(en, nxt).second) {
                        check_budget(Integer(visited.size()), budget, "class orbit");
                        work.push_back(std::move(nxt));
                    }
                }
        }
        int id = static_cast<int>(entries.size());
        ClassEntry ent;
        ent.rep = visited.begin()->second;
        ent.orbit = Integer(visited.size());
        Integer glprod = 1;
        for (int v = 0; v < Q.n; ++v) glprod *= gl_order(M.dims[static_cast<size_t>(v)], q);
        check_internal(glprod % ent.orbit == 0, "intern: orbit does not divide group order");
        ent.aut = glprod / ent.orbit;
        entries.push_back(std::move(ent));
        for (const auto& [en, _] : visited) seen.emplace(en, id);
        return id;
    }

    void ensure_enumerated(int max_total) {
        const Quiver& Q = *qv;
        for (int t = enumerated_to + 1; t <= max_total; ++t) {
            std::vector<std::vector<int>> dvecs;
            std::vector<int> cur(static_cast<size_t>(Q.n), 0);
            std::function<void(int, int)> rec = [&](int p, int rest) {
                if (p == Q.n - 1) {
                    cur[static_cast<size_t>(p)] = rest;
                    dvecs.push_back(cur);
                    return;
                }
                for (int x = 0; x <= rest; ++x) {
                    cur[static_cast<size_t>(p)] = x;
                    rec(p + 1, rest - x);
                }
            };
            if (Q.n > 0) rec(0, t);
            for (const auto& dims : dvecs) {
                std::vector<int> ids;
                std::set<int> got;
                enumerate_rep_tuples(Q, q, dims, budget, [&](const Representation& r) {
                    int id = intern(r);
                    if (got.insert(id).second) ids.push_back(id);  // first hit = least encoding
                    return true;
                });
                by_dims[{t, dims}] = std::move(ids);
            }
        }
        if (max_total > enumerated_to) enumerated_to = max_total;
    }

    // canonical flat ordering: dims by (total, lex), then representative encoding
    std::vector<int> class_list(int max_total) {
        ensure_enumerated(max_total);
        std::vector<int> out;
        for (const auto& [key, ids] : by_dims) {
            if (key.first > max_total) break;
            out.insert(out.end(), ids.begin(), ids.end());
        }
        return out;
    }
};

// canonical invariant of a complex iso class: homology module classes per slot
// plus projective multiplicities of the acyclic summands, keyed by shift r
// (K_P[r] occupies slots -r-1 -> -r)
struct ComplexClass {
    std::map<int, int> hom;                      // slot -> module class id
    std::map<int, std::vector<long long>> acyc;  // r -> projective multiplicities
    friend auto operator<=>(const ComplexClass&, const ComplexClass&) = default;
    bool reduced() const { return acyc.empty(); }
    bool empty() const { return hom.empty() && acyc.empty(); }
};

struct Context {
    Quiver qv;
    int q = 2;
    int m = 0;
    long long budget = 1000000;
    ClassTable table;
    mutable std::recursive_mutex mu;

    std::map<int, ProjResolution> res_cache;
    std::map<std::tuple<int, int, int>, Integer> hall_cache;
    std::map<std::pair<int, int>, std::map<int, Integer>> extmid_cache;
    std::map<std::pair<int, int>, std::map<std::pair<int, int>, Rational>> gamma_cache;
    std::map<std::pair<ComplexClass, ComplexClass>, std::map<ComplexClass, Coefficient>> htw_cache;

    Context(const Quiver& Q, int q_, int m_, long long budget_ = 1000000)
        : qv(Q), q(q_), m(m_), budget(budget_) {
        bool prime = q >= 2;
        for (int d = 2; d * d <= q; ++d)
            if (q % d == 0) prime = false;
        check_input(prime, "context: q must be prime");
        check_input(m == 0 || m >= 3, "context: m must be 0 or >= 3");
        table.qv = &qv;
        table.q = q;
        table.budget = budget;
        table.intern(rep_zero(qv, q));  // id 0 = zero module
    }
    Context(const Context&) = delete;
    Context& operator=(const Context&) = delete;

    int intern(const Representation& r) {
        std::lock_guard<std::recursive_mutex> lk(mu);
        return table.intern(r);
    }
    Representation rep(int id) const {
        std::lock_guard<std::recursive_mutex> lk(mu);
        check_input(id >= 0 && id < static_cast<int>(table.entries.size()), "unknown class id");
        return table.entries[static_cast<size_t>(id)].rep;
    }
    GrothendieckClass cls(int id) const { return rep(id).cls(); }
    Integer aut(int id) const {
        std::lock_guard<std::recursive_mutex> lk(mu);
        check_input(id >= 0 && id < static_cast<int>(table.entries.size()), "unknown class id");
        return table.entries[static_cast<size_t>(id)].aut;
    }
    const ProjResolution& resolution(int id) {
        std::lock_guard<std::recursive_mutex> lk(mu);
        auto it = res_cache.find(id);
        if (it == res_cache.end())
            it = res_cache.emplace(id, min_proj_resolution(qv, q, rep(id), budget)).first;
        return it->second;
    }
    GrothendieckClass cover_class(int id) { return resolution(id).cover.cls(); }
    GrothendieckClass omega_class(int id) { return resolution(id).omega.cls(); }
    bool same_slot(int a, int b) const { return slot_mod(a, m) == slot_mod(b, m); }
};

inline std::map<int, int> ctx_homology(Context& C, const CyclicComplex& X) {
    std::map<int, int> H;
    for (const auto& [s, Hs] : cx_homology(X)) H.emplace(s, C.intern(Hs));
    return H;
}

// Krull-Schmidt invariant: X ≅ (+)_j C_{H_j}[-j] (+) (+)_r K_{P_r}[r].
// The acyclic part at image slot j is im(d_{j-1}) minus the syzygy of H_j;
// any bookkeeping mismatch is a bug, not bad input.
inline ComplexClass ctx_decompose(Context& C, const CyclicComplex& X) {
    ComplexClass cc;
    auto Hreps = cx_homology(X);
    std::map<int, int> hid;
    for (const auto& [s, Hs] : Hreps) hid.emplace(s, C.intern(Hs));
    std::map<int, GrothendieckClass> qhat;  // image slot -> acyclic class there
    for (int j : cx_var_slots(X)) {
        GrothendieckClass g = cx_image_class(X, j - 1);
        if (auto it = hid.find(j); it != hid.end()) g = gk_sub(g, C.omega_class(it->second));
        if (!gk_is_zero(g)) qhat.emplace(j, g);
    }
    for (const auto& [j, g] : qhat)
        cc.acyc[X.m != 0 ? slot_mod(-j, X.m) : -j] = C.qv.proj_multiplicities(g);
    cc.hom = hid;
    auto qhat_at = [&](int s) {
        auto it = qhat.find(X.m != 0 ? slot_mod(s, X.m) : s);
        return it != qhat.end() ? it->second : C.qv.zero_class();
    };
    auto hid_at = [&](int s) {
        auto it = hid.find(X.m != 0 ? slot_mod(s, X.m) : s);
        return it != hid.end() ? it->second : 0;
    };
    for (int i : cx_var_slots(X)) {
        GrothendieckClass want = cx_obj(X, i).cls();
        GrothendieckClass have = gk_add(qhat_at(i), qhat_at(i + 1));
        if (int h = hid_at(i)) have = gk_add(have, C.cover_class(h));
        if (int h = hid_at(i + 1)) have = gk_add(have, C.omega_class(h));
        check_internal(want == have, "decompose: slot bookkeeping mismatch");
    }
    return cc;
}

inline CyclicComplex ctx_rebuild(Context& C, const ComplexClass& cc) {
    CyclicComplex X = cx_zero(C.qv, C.q, C.m);
    for (const auto& [j, id] : cc.hom)
        X = cx_sum(X, cx_two_term(C.qv, C.q, C.m, C.rep(id), j, C.budget));
    for (const auto& [r, mult] : cc.acyc)
        X = cx_sum(X, cx_kp(C.qv, C.q, C.m, projective_rep(C.qv, C.q, mult), r, C.budget));
    return X;
}

// class of the rebuilt complex's term at slot j, read off the invariant
inline GrothendieckClass ctx_slot_class(Context& C, const ComplexClass& cc, int j) {
    GrothendieckClass g = C.qv.zero_class();
    for (const auto& [s, id] : cc.hom) {
        if (C.same_slot(j, s)) g = gk_add(g, C.cover_class(id));
        if (C.same_slot(j, s - 1)) g = gk_add(g, C.omega_class(id));
    }
    for (const auto& [r, mult] : cc.acyc) {
        if (C.same_slot(j, -r) || C.same_slot(j, -r - 1)) {
            for (int v = 0; v < C.qv.n; ++v)
                if (mult[static_cast<size_t>(v)])
                    g = gk_add(g, [&] {
                        GrothendieckClass p = C.qv.proj_class(v);
                        for (auto& x : p) x *= mult[static_cast<size_t>(v)];
                        return p;
                    }());
        }
    }
    return g;
}

}  // namespace bhall
