#pragma once
// Hall-number oracles and the Ringel-Hall products.
//
// Module level: hall_number counts submodules directly; ext_middle_count
// counts extension classes by middle term via pushouts along Hom(Omega_M, N);
// gamma_count tallies Hom(M, N) by (kernel, cokernel).  These are independent
// routes into the same structure constants, so tests can cross them
// (Riedtmann's formula) without either side assuming the other.
//
// Complex level: htw_multiply implements the twisted product
//   [M.] * [N.] = v^{<M., N.>} sum_L |Ext^1(M., N.)_L| / |Hom(M., N.)| [L]
// over canonical representatives of complex classes.

#include "context.hpp"

namespace bhall {

// Enumerate families of subspaces (one per vertex) of the given dimensions
// inside an ambient dimension vector.  Budget is the product of Gaussian
// binomials.  Callback returns false to stop early.
inline void enumerate_subspace_families(const Quiver& Q, int q, const std::vector<int>& amb,
                                        const std::vector<int>& sub, long long budget,
                                        const std::function<bool(const SubspaceFamily&)>& fn) {
    Integer total = 1;
    for (int v = 0; v < Q.n; ++v) {
        if (sub[static_cast<size_t>(v)] > amb[static_cast<size_t>(v)]) return;
        total *= gaussian_binomial(amb[static_cast<size_t>(v)], sub[static_cast<size_t>(v)], q);
    }
    check_budget(total, budget, "subspace family enumeration");
    SubspaceFamily W;
    W.bases.resize(static_cast<size_t>(Q.n), FFMatrix(q, 0, 0));
    bool stop = false;
    std::function<void(int)> rec = [&](int v) {
        if (stop) return;
        if (v == Q.n) {
            if (!fn(W)) stop = true;
            return;
        }
        ff_enumerate_subspaces(q, amb[static_cast<size_t>(v)], sub[static_cast<size_t>(v)], budget,
                               [&](const FFMatrix& B) {
                                   W.bases[static_cast<size_t>(v)] = B;
                                   rec(v + 1);
                                   return !stop;
                               });
    };
    rec(0);
}

// F^L_{MN} = #{ U <= L : U iso N, L/U iso M }, by direct submodule counting.
inline Integer hall_number(Context& C, int lid, int mid, int nid) {
    std::lock_guard<std::recursive_mutex> lk(C.mu);
    auto key = std::make_tuple(lid, mid, nid);
    if (auto it = C.hall_cache.find(key); it != C.hall_cache.end()) return it->second;
    Representation L = C.rep(lid), N = C.rep(nid);
    Integer count = 0;
    if (gk_add(C.cls(mid), C.cls(nid)) == C.cls(lid)) {
        enumerate_subspace_families(C.qv, C.q, L.dims, N.dims, C.budget, [&](const SubspaceFamily& W) {
            if (!subspaces_arrow_stable(C.qv, L, W)) return true;
            if (C.intern(sub_representation(C.qv, C.q, L, W).rep) != nid) return true;
            if (C.intern(quotient_representation(C.qv, C.q, L, W).rep) != mid) return true;
            ++count;
            return true;
        });
    }
    C.hall_cache.emplace(key, count);
    return count;
}

// |Ext^1(M, N)_L| for every middle L at once.  Extensions are realized as
// pushouts: phi in Hom(Omega_M, N) gives the quotient of N (+) P_M by the
// graph {(phi(w), -delta(w))}.  Each Ext class is hit by exactly
// q^{dim Hom(P_M, N) - dim Hom(M, N)} choices of phi.
inline std::map<int, Integer> ext_middle_count(Context& C, int mid, int nid) {
    std::lock_guard<std::recursive_mutex> lk(C.mu);
    auto key = std::make_pair(mid, nid);
    if (auto it = C.extmid_cache.find(key); it != C.extmid_cache.end()) return it->second;
    const ProjResolution& R = C.resolution(mid);
    Representation M = C.rep(mid), N = C.rep(nid);
    auto hb = hom_basis(C.qv, C.q, R.omega, N);
    SumResult S = rep_direct_sum(C.qv, C.q, N, R.cover);
    std::map<int, Integer> tally;
    ff_enumerate_tuples(C.q, static_cast<int>(hb.size()), C.budget,
                        [&](const std::vector<uint8_t>& t) {
                            Morphism phi = morphism_combination(C.qv, C.q, R.omega, N, hb, t);
                            Morphism g;
                            for (int v = 0; v < C.qv.n; ++v)
                                g.mats.push_back(S.inA.mats[static_cast<size_t>(v)] *
                                                     phi.mats[static_cast<size_t>(v)] +
                                                 S.inB.mats[static_cast<size_t>(v)] *
                                                     R.delta.mats[static_cast<size_t>(v)].scaled(C.q - 1));
                            auto W = image_subspaces(C.qv, S.rep, g);
                            int l = C.intern(quotient_representation(C.qv, C.q, S.rep, W).rep);
                            tally[l] += 1;
                            return true;
                        });
    long long fib = hom_dim(C.qv, C.q, R.cover, N) - hom_dim(C.qv, C.q, M, N);
    check_internal(fib >= 0, "ext_middle_count: negative fiber dimension");
    Integer denom = integer_pow(C.q, fib);
    for (auto& [l, c] : tally) {
        check_internal(c % denom == 0, "ext_middle_count: fiber count not divisible");
        c /= denom;
    }
    C.extmid_cache.emplace(key, tally);
    return tally;
}

// gamma^{XY}_{MN} = |W^{XY}_{MN}| / (a_M a_N) where W^{XY}_{MN} is the set of
// exact sequences 0 -> X -> M -> N -> Y -> 0.  Since (g, h) range over a free
// orbit once f is fixed, |W| = #{f : ker f iso X, coker f iso Y} a_X a_Y.
// Returns (X, Y) class pair -> gamma as an exact rational.
inline std::map<std::pair<int, int>, Rational> gamma_count(Context& C, int mid, int nid) {
    std::lock_guard<std::recursive_mutex> lk(C.mu);
    auto key = std::make_pair(mid, nid);
    if (auto it = C.gamma_cache.find(key); it != C.gamma_cache.end()) return it->second;
    Representation M = C.rep(mid), N = C.rep(nid);
    auto hb = hom_basis(C.qv, C.q, M, N);
    std::map<std::pair<int, int>, Integer> tally;
    Integer mass = 0;
    ff_enumerate_tuples(C.q, static_cast<int>(hb.size()), C.budget,
                        [&](const std::vector<uint8_t>& t) {
                            Morphism f = morphism_combination(C.qv, C.q, M, N, hb, t);
                            int x = C.intern(sub_representation(C.qv, C.q, M, kernel_subspaces(C.qv, M, f)).rep);
                            int y = C.intern(quotient_representation(C.qv, C.q, N, image_subspaces(C.qv, N, f)).rep);
                            tally[{x, y}] += 1;
                            ++mass;
                            return true;
                        });
    check_internal(mass == integer_pow(C.q, static_cast<long long>(hb.size())),
                   "gamma_count: Hom mass mismatch");
    std::map<std::pair<int, int>, Rational> out;
    Integer aM = C.aut(mid), aN = C.aut(nid);
    for (auto& [xy, c] : tally)
        out.emplace(xy, Rational(c * C.aut(xy.first) * C.aut(xy.second), aM * aN));
    C.gamma_cache.emplace(key, out);
    return out;
}

// ---- Ringel-Hall algebra elements ---------------------------------------

// Formal linear combination of module classes, keyed by class id.
using HallElement = std::map<int, Coefficient>;

inline void hall_add_term(HallElement& x, int cls, const Coefficient& c) {
    auto it = x.find(cls);
    if (it == x.end()) {
        if (!c.is_zero()) x.emplace(cls, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
}

inline HallElement hall_add(const HallElement& x, const HallElement& y) {
    HallElement out = x;
    for (const auto& [cls, c] : y) hall_add_term(out, cls, c);
    return out;
}

inline HallElement hall_scale(const HallElement& x, const Coefficient& s, int q) {
    HallElement out;
    for (const auto& [cls, c] : x) hall_add_term(out, cls, coeff_mul(c, s, q));
    return out;
}

// [M] * [N] = (v^{<M,N>} if twisted) sum_L F^L_{MN} [L].  The support comes
// from ext_middle_count (extensions of N by M are exactly the L with
// F^L != 0); the coefficient comes from submodule counting.
inline HallElement rh_multiply(Context& C, const HallElement& x, const HallElement& y,
                               bool twisted = true) {
    HallElement out;
    for (const auto& [mc, a] : x) {
        for (const auto& [nc, b] : y) {
            Coefficient base = coeff_mul(a, b, C.q);
            if (twisted)
                base = coeff_mul(base, v_power(euler_form(C.qv, C.cls(mc), C.cls(nc)), C.q), C.q);
            for (const auto& [lc, cnt] : ext_middle_count(C, mc, nc)) {
                Integer f = hall_number(C, lc, mc, nc);
                check_internal(f > 0, "rh_multiply: middle with zero Hall number");
                hall_add_term(out, lc, coeff_mul(base, Coefficient{Rational(f), Rational(0)}, C.q));
            }
        }
    }
    return out;
}

// ---- extended Hall algebra (adjoined K_alpha) ----------------------------

enum class CommForm { euler, symmetric };

inline long long comm_form(const Quiver& Q, CommForm f, const GrothendieckClass& a,
                           const GrothendieckClass& b) {
    return f == CommForm::euler ? euler_form(Q, a, b) : sym_euler_form(Q, a, b);
}

// Basis monomial K_alpha [M] of the extended Hall algebra.
struct ExtTermKey {
    GrothendieckClass alpha;
    int cls = 0;
    friend auto operator<=>(const ExtTermKey&, const ExtTermKey&) = default;
};

using ExtElement = std::map<ExtTermKey, Coefficient>;

inline void ext_add_term(ExtElement& x, const ExtTermKey& k, const Coefficient& c) {
    auto it = x.find(k);
    if (it == x.end()) {
        if (!c.is_zero()) x.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
}

inline ExtElement ext_unit(const Quiver& Q) {
    return {{ExtTermKey{Q.zero_class(), 0}, Coefficient::one()}};
}

// (K_alpha [M]) * (K_beta [N]) = v^{-c(beta, Mhat)} v^{<Mhat,Nhat>}
//   sum_L F^L_{MN} K_{alpha+beta} [L],
// where c is the chosen commutation form (K_beta moves left past [M]).
inline ExtElement extended_multiply(Context& C, const ExtElement& x, const ExtElement& y,
                                    CommForm form = CommForm::symmetric) {
    ExtElement out;
    for (const auto& [kx, a] : x) {
        for (const auto& [ky, b] : y) {
            long long tw = euler_form(C.qv, C.cls(kx.cls), C.cls(ky.cls)) -
                           comm_form(C.qv, form, ky.alpha, C.cls(kx.cls));
            Coefficient base = coeff_mul(coeff_mul(a, b, C.q), v_power(tw, C.q), C.q);
            GrothendieckClass alpha = gk_add(kx.alpha, ky.alpha);
            for (const auto& [lc, cnt] : ext_middle_count(C, kx.cls, ky.cls)) {
                Integer f = hall_number(C, lc, kx.cls, ky.cls);
                ext_add_term(out, ExtTermKey{alpha, lc},
                             coeff_mul(base, Coefficient{Rational(f), Rational(0)}, C.q));
            }
        }
    }
    return out;
}

// ---- twisted product of complex classes ----------------------------------

// [M.] * [N.] over canonical representatives; memoized per context.  The
// total cocycle tally is checked against q^{dim Z^1}.
inline std::map<ComplexClass, Coefficient> htw_multiply(Context& C, const ComplexClass& a,
                                                        const ComplexClass& b) {
    std::lock_guard<std::recursive_mutex> lk(C.mu);
    auto key = std::make_pair(a, b);
    if (auto it = C.htw_cache.find(key); it != C.htw_cache.end()) return it->second;
    CyclicComplex M = ctx_rebuild(C, a), N = ctx_rebuild(C, b);
    long long twist = cx_pair_euler(M, N);
    long long hom_chain = cx_hom_dims(M, N).chain;
    long long cobound = cx_coboundary_dim(M, N);
    long long zdim = cx_ext1_dim(M, N) + cobound;
    std::map<ComplexClass, Integer> tally;
    Integer total = 0;
    cx_ext1_enumerate(M, N, C.budget, [&](const SlotMap&, const CyclicComplex& L) {
        tally[ctx_decompose(C, L)] += 1;
        ++total;
    });
    check_internal(total == integer_pow(C.q, zdim), "htw_multiply: cocycle mass mismatch");
    std::map<ComplexClass, Coefficient> out;
    // tally counts cocycles; each Ext class is a B^1-coset of them, and the
    // displayed product divides the class count by |Hom(M., N.)|
    Integer denom = integer_pow(C.q, hom_chain + cobound);
    Coefficient tw = v_power(twist, C.q);
    for (const auto& [l, c] : tally)
        out.emplace(l, coeff_mul(tw, Coefficient{Rational(c, denom), Rational(0)}, C.q));
    C.htw_cache.emplace(key, out);
    return out;
}

// One extension class with its middle: a representative cocycle, the middle's
// canonical class, and how many classes share that middle.
struct Ext1Group {
    ComplexClass middle;
    Integer count;
    SlotMap datum;
};

// Ext^1(M., N.) grouped by middle term.  Counts satisfy
// sum_L count_L = q^{dim Ext^1} (each class is hit by q^{dim B^1} cocycles).
inline std::vector<Ext1Group> ext1_classes(Context& C, const CyclicComplex& M,
                                           const CyclicComplex& N) {
    std::map<ComplexClass, std::pair<Integer, SlotMap>> tally;
    cx_ext1_enumerate(M, N, C.budget, [&](const SlotMap& h, const CyclicComplex& L) {
        auto cc = ctx_decompose(C, L);
        auto it = tally.find(cc);
        if (it == tally.end())
            tally.emplace(cc, std::make_pair(Integer(1), h));
        else
            it->second.first += 1;
    });
    Integer denom = integer_pow(C.q, cx_coboundary_dim(M, N));
    std::vector<Ext1Group> out;
    for (auto& [cc, pc] : tally) {
        check_internal(pc.first % denom == 0, "ext1_classes: coboundary orbit mismatch");
        out.push_back(Ext1Group{cc, pc.first / denom, pc.second});
    }
    return out;
}

}  // namespace bhall
