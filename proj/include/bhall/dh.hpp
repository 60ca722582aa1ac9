#pragma once
// The localized Hall algebra DH_m(A).  Elements are combinations of normal
// forms K-monomial * [reduced complex]: the K-monomial is a product of
// K_{alpha, r} = [K_P[r]] * [K_Q[r]]^{-1} (alpha = Phat - Qhat) kept in
// increasing slot order on the left, and the reduced part is a direct sum of
// C_M[r], recorded as shift -> module class.
//
// Multiplication rewrites a product of two normal forms back into normal
// form using three commutation facts, each computed from the twisted product
// on explicit complexes:
//   [R] * K_{beta, s}   = v^{-(beta, Delta_R(s))} K_{beta, s} * [R],
//       Delta_R(s) = Rhat_{-s} - Rhat_{-s-1}  (slotwise classes of R),
//   K_{alpha, r} K_{beta, s} = v^{g(alpha, beta)} K_{beta, s} K_{alpha, r},
//       g = (alpha, beta) for s = r - 1, -(alpha, beta) for s = r + 1 (mod m),
//       0 otherwise; same-slot K's merge freely,
//   [R1] * [R2] by htw_multiply, followed by peeling acyclic summands of each
//       product term: [K_P[r] + Rest] = v^{-<Phat, Delta_Rest(r)>} K_{Phat, r} * [Rest].
// (x, y) is the symmetrized Euler form; < , > the plain one.

#include "hall.hpp"

namespace bhall {

// slot r -> alpha, every alpha nonzero; slots normalized to [0, m) when m > 0
using KMonomial = std::map<int, GrothendieckClass>;

struct DHTermKey {
    KMonomial kappa;
    std::map<int, int> c;  // shift r -> module class id of the summand C_M[r]
    friend auto operator<=>(const DHTermKey&, const DHTermKey&) = default;
};

using DHElement = std::map<DHTermKey, Coefficient>;

inline DHElement dh_zero() { return {}; }

inline DHElement dh_unit() { return {{DHTermKey{}, Coefficient::one()}}; }

inline void dh_add_term(DHElement& x, const DHTermKey& k, const Coefficient& c) {
    auto it = x.find(k);
    if (it == x.end()) {
        if (!c.is_zero()) x.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
}

inline DHElement dh_add(const DHElement& x, const DHElement& y) {
    DHElement out = x;
    for (const auto& [k, c] : y) dh_add_term(out, k, c);
    return out;
}

inline DHElement dh_scale(const DHElement& x, const Coefficient& s, int q) {
    DHElement out;
    for (const auto& [k, c] : x) dh_add_term(out, k, coeff_mul(c, s, q));
    return out;
}

// reduced part as a complex class: C_M[r] has homology M in slot -r
inline ComplexClass dh_cpart_class(const Context& C, const std::map<int, int>& c) {
    ComplexClass cc;
    for (const auto& [r, id] : c) cc.hom.emplace(slot_mod(-r, C.m), id);
    return cc;
}

inline std::map<int, int> dh_class_cpart(const Context& C, const ComplexClass& cc) {
    check_internal(cc.acyc.empty(), "dh: reduced part carries acyclic summands");
    std::map<int, int> c;
    for (const auto& [j, id] : cc.hom) c.emplace(slot_mod(-j, C.m), id);
    return c;
}

inline DHElement k_monomial(Context& C, const GrothendieckClass& alpha, int r) {
    DHTermKey k;
    if (!gk_is_zero(alpha)) k.kappa.emplace(slot_mod(r, C.m), alpha);
    return {{k, Coefficient::one()}};
}

// e_{M, r} = a_M^{-1} v^{<Omegahat_M, Mhat>} K_{-Omegahat_M, r} * [C_M[r]].
// The exponent is the plain Euler form: the symmetric form breaks the slotwise
// embedding (e_M e_N vs. the twisted Hall product) whenever Omega_M != 0.
inline DHElement e_generator(Context& C, int mid, int r) {
    if (mid == 0) return dh_unit();
    r = slot_mod(r, C.m);
    GrothendieckClass om = C.omega_class(mid);
    DHTermKey k;
    if (!gk_is_zero(om)) {
        GrothendieckClass neg = om;
        for (auto& x : neg) x = -x;
        k.kappa.emplace(r, neg);
    }
    k.c.emplace(r, mid);
    Coefficient coef = coeff_mul(v_power(euler_form(C.qv, om, C.cls(mid)), C.q),
                                 Coefficient{Rational(Integer(1), C.aut(mid)), Rational(0)}, C.q);
    return {{k, coef}};
}

// Delta of a reduced part at slot s: class of slot -s minus class of slot -s-1.
inline GrothendieckClass dh_delta(Context& C, const std::map<int, int>& c, int s) {
    ComplexClass cc = dh_cpart_class(C, c);
    return gk_sub(ctx_slot_class(C, cc, -s), ctx_slot_class(C, cc, -s - 1));
}

// Normal-order kappa * extra: bubble each factor of extra leftward into kappa.
// Returns the accumulated v-exponent; kappa is updated in place.
inline long long dh_merge_k(Context& C, KMonomial& kappa, const KMonomial& extra) {
    long long n = 0;
    for (const auto& [s, beta] : extra) {
        for (const auto& [r, alpha] : kappa) {
            if (r <= s) continue;
            // passing K_{beta, s} left through K_{alpha, r}
            int g = 0;
            if (C.same_slot(s, r - 1)) g += 1;
            if (C.same_slot(s, r + 1)) g -= 1;
            if (g != 0) n += static_cast<long long>(g) * sym_euler_form(C.qv, alpha, beta);
        }
        auto it = kappa.find(s);
        if (it == kappa.end()) {
            kappa.emplace(s, beta);
        } else {
            it->second = gk_add(it->second, beta);
            if (gk_is_zero(it->second)) kappa.erase(it);
        }
    }
    return n;
}

// [L] = v^n * K-monomial * [reduced]: peel acyclic summands in increasing
// slot order, each contributing <Phat, Delta_Rest(r)> against what remains.
inline std::pair<Coefficient, DHTermKey> dh_normalize_parts(Context& C, const ComplexClass& cc) {
    DHTermKey key;
    long long n = 0;
    ComplexClass rest = cc;
    for (const auto& [r, mult] : cc.acyc) {
        rest.acyc.erase(r);
        GrothendieckClass p = C.qv.zero_class();
        for (int v = 0; v < C.qv.n; ++v) {
            GrothendieckClass pv = C.qv.proj_class(v);
            for (int u = 0; u < C.qv.n; ++u) p[static_cast<size_t>(u)] += mult[static_cast<size_t>(v)] * pv[static_cast<size_t>(u)];
        }
        GrothendieckClass delta = gk_sub(ctx_slot_class(C, rest, -r), ctx_slot_class(C, rest, -r - 1));
        n -= euler_form(C.qv, p, delta);
        key.kappa.emplace(r, p);
    }
    ComplexClass red = rest;
    key.c = dh_class_cpart(C, red);
    return {v_power(n, C.q), key};
}

inline DHElement normalize_class(Context& C, const ComplexClass& cc) {
    auto [coef, key] = dh_normalize_parts(C, cc);
    return {{key, coef}};
}

inline DHElement dh_multiply(Context& C, const DHElement& x, const DHElement& y) {
    DHElement out;
    for (const auto& [k1, a] : x) {
        for (const auto& [k2, b] : y) {
            // move the reduced part of the left factor past the right kappa
            long long s1 = 0;
            for (const auto& [s, beta] : k2.kappa)
                s1 -= sym_euler_form(C.qv, beta, dh_delta(C, k1.c, s));
            KMonomial kap = k1.kappa;
            long long s2 = dh_merge_k(C, kap, k2.kappa);
            Coefficient base = coeff_mul(coeff_mul(a, b, C.q), v_power(s1 + s2, C.q), C.q);
            auto prod = htw_multiply(C, dh_cpart_class(C, k1.c), dh_cpart_class(C, k2.c));
            for (const auto& [lcc, w] : prod) {
                auto [pc, pkey] = dh_normalize_parts(C, lcc);
                KMonomial kf = kap;
                long long s3 = dh_merge_k(C, kf, pkey.kappa);
                Coefficient coef = coeff_mul(coeff_mul(base, w, C.q),
                                             coeff_mul(pc, v_power(s3, C.q), C.q), C.q);
                dh_add_term(out, DHTermKey{std::move(kf), pkey.c}, coef);
            }
        }
    }
    return out;
}

// ---- printing (diagnostics and reports) ----------------------------------

inline std::string gk_str(const GrothendieckClass& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

inline std::string dh_term_str(const Context& C, const DHTermKey& k) {
    std::string s;
    for (const auto& [r, alpha] : k.kappa) s += "K" + std::to_string(r) + gk_str(alpha);
    for (const auto& [r, id] : k.c) s += "Z" + std::to_string(r) + gk_str(C.cls(id)) + "#" + std::to_string(id);
    return s.empty() ? "1" : s;
}

inline std::string dh_str(const Context& C, const DHElement& x) {
    if (x.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : x) {
        if (!s.empty()) s += " + ";
        s += "[" + c.str() + "]" + dh_term_str(C, k);
    }
    return s;
}

// ---- PBW rank check -------------------------------------------------------

// tau grade of a term: class contributed to each slot.  K_{alpha, r} covers
// slots -r and -r-1 with alpha; C_M[r] covers -r with the projective cover
// class and -r-1 with Omegahat.  Every rewrite above is tau-homogeneous.
using TauGrade = std::map<int, GrothendieckClass>;

inline TauGrade dh_tau(Context& C, const DHTermKey& k) {
    TauGrade tau;
    auto add = [&](int slot, const GrothendieckClass& g) {
        if (gk_is_zero(g)) return;
        slot = slot_mod(slot, C.m);
        auto it = tau.find(slot);
        if (it == tau.end()) {
            tau.emplace(slot, g);
        } else {
            it->second = gk_add(it->second, g);
            if (gk_is_zero(it->second)) tau.erase(it);
        }
    };
    for (const auto& [r, alpha] : k.kappa) {
        add(-r, alpha);
        add(-r - 1, alpha);
    }
    for (const auto& [r, id] : k.c) {
        add(-r, C.cover_class(id));
        add(-r - 1, C.omega_class(id));
    }
    return tau;
}

// Rank of a family of DHElements over Q(v).  Rows are bucketed by tau grade
// (each row must be homogeneous); Gaussian elimination runs per bucket.
inline long long dh_rank(Context& C, const std::vector<DHElement>& rows) {
    std::map<TauGrade, std::vector<const DHElement*>> buckets;
    for (const auto& row : rows) {
        if (row.empty()) continue;
        TauGrade tau = dh_tau(C, row.begin()->first);
        for (const auto& [k, c] : row)
            check_internal(dh_tau(C, k) == tau, "dh_rank: inhomogeneous row");
        buckets[tau].push_back(&row);
    }
    long long rank = 0;
    for (auto& [tau, block] : buckets) {
        std::map<DHTermKey, DHElement> basis;  // lead term -> reduced row
        for (const DHElement* rp : block) {
            DHElement r = *rp;
            for (const auto& [lead, b] : basis) {
                auto it = r.find(lead);
                if (it == r.end()) continue;
                Coefficient f = it->second;
                for (const auto& [k, c] : b) dh_add_term(r, k, -coeff_mul(f, c, C.q));
            }
            if (r.empty()) continue;
            Coefficient inv = coeff_inv(r.begin()->second, C.q);
            DHElement unitrow;
            for (const auto& [k, c] : r) unitrow.emplace(k, coeff_mul(c, inv, C.q));
            basis.emplace(unitrow.begin()->first, std::move(unitrow));
            ++rank;
        }
    }
    return rank;
}

struct PbwReport {
    long long count = 0;
    long long rank = 0;
};

inline TauGrade tau_add(const TauGrade& a, const TauGrade& b) {
    TauGrade out = a;
    for (const auto& [s, g] : b) {
        auto it = out.find(s);
        if (it == out.end()) {
            out.emplace(s, g);
        } else {
            it->second = gk_add(it->second, g);
            if (gk_is_zero(it->second)) out.erase(it);
        }
    }
    return out;
}

// All ordered products prod_i (K_{alpha_i, i} * e_{M_i, i}) over the window,
// with alpha coordinates bounded by alpha_bound and dim M_i <= dim_bound;
// reports how many products there are and the rank they span.  Products are
// grouped by tau grade up front (tau is additive over factors) so only one
// grade's rows are ever held in memory.
inline PbwReport pbw_matrix_rank(Context& C, int dim_bound, int alpha_bound,
                                 std::vector<int> window = {}) {
    if (window.empty()) {
        check_input(C.m != 0, "pbw: window required when m = 0");
        for (int i = 0; i < C.m; ++i) window.push_back(i);
    }
    std::vector<GrothendieckClass> alphas;
    GrothendieckClass cur(static_cast<size_t>(C.qv.n), 0);
    std::function<void(int)> gen = [&](int v) {
        if (v == C.qv.n) {
            alphas.push_back(cur);
            return;
        }
        for (int t = -alpha_bound; t <= alpha_bound; ++t) {
            cur[static_cast<size_t>(v)] = t;
            gen(v + 1);
        }
    };
    gen(0);
    std::vector<int> mods = C.table.class_list(dim_bound);
    std::vector<std::vector<DHElement>> gens;
    std::vector<std::vector<TauGrade>> gtau;
    for (int i : window) {
        std::vector<DHElement> slot_gens;
        std::vector<TauGrade> slot_tau;
        for (const auto& alpha : alphas)
            for (int mid : mods) {
                DHElement g = dh_multiply(C, k_monomial(C, alpha, i), e_generator(C, mid, i));
                slot_tau.push_back(dh_tau(C, g.begin()->first));
                slot_gens.push_back(std::move(g));
            }
        gens.push_back(std::move(slot_gens));
        gtau.push_back(std::move(slot_tau));
    }
    std::map<TauGrade, std::vector<std::vector<size_t>>> plan;
    std::vector<size_t> pick(gens.size(), 0);
    std::function<void(size_t, const TauGrade&)> sort_products = [&](size_t level, const TauGrade& tau) {
        if (level == gens.size()) {
            plan[tau].push_back(pick);
            return;
        }
        for (size_t j = 0; j < gens[level].size(); ++j) {
            pick[level] = j;
            sort_products(level + 1, tau_add(tau, gtau[level][j]));
        }
    };
    sort_products(0, TauGrade{});
    PbwReport rep;
    for (const auto& [tau, tuples] : plan) {
        std::vector<DHElement> rows;
        for (const auto& t : tuples) {
            DHElement p = dh_unit();
            for (size_t level = 0; level < t.size(); ++level)
                p = dh_multiply(C, p, gens[level][t[level]]);
            rows.push_back(std::move(p));
        }
        rep.count += static_cast<long long>(rows.size());
        rep.rank += dh_rank(C, rows);
    }
    return rep;
}

}  // namespace bhall
