#pragma once
// Periodic complexes of projective representations: the category C_m(P) for
// m = 0 (Z-graded, bounded support) or m >= 3 (slots mod m).  Differentials
// ascend, d_i : X_i -> X_{i+1}; homology convention H_i = ker d_i / im d_{i-1}.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "representation.hpp"

namespace bhall {

inline int slot_mod(int s, int m) {
    if (m == 0) return s;
    int r = s % m;
    return r < 0 ? r + m : r;
}

inline Morphism morphism_add(const Morphism& f, const Morphism& g) {
    Morphism r = f;
    for (size_t v = 0; v < r.mats.size(); ++v) r.mats[v] = r.mats[v] + g.mats[v];
    return r;
}

inline Morphism morphism_sub(const Morphism& f, const Morphism& g) {
    Morphism r = f;
    for (size_t v = 0; v < r.mats.size(); ++v) r.mats[v] = r.mats[v] - g.mats[v];
    return r;
}

inline Morphism morphism_scaled(const Morphism& f, int s) {
    Morphism r = f;
    for (auto& m : r.mats) m = m.scaled(s);
    return r;
}

struct CyclicComplex {
    const Quiver* qv = nullptr;
    int q = 2;
    int m = 0;   // period: 0 (Z-graded) or >= 3
    int lo = 0;  // m == 0: slot of obj[0]; m >= 3: always 0
    std::vector<Representation> obj;  // m >= 3: exactly m terms, obj[i] at slot i
    std::vector<Morphism> dif;        // dif[i] : obj[i] -> next term; m == 0: len-1 entries
};

inline Representation cx_obj(const CyclicComplex& X, int s) {
    if (X.m != 0) return X.obj[static_cast<size_t>(slot_mod(s, X.m))];
    int i = s - X.lo;
    if (i >= 0 && i < static_cast<int>(X.obj.size())) return X.obj[static_cast<size_t>(i)];
    return rep_zero(*X.qv, X.q);
}

// differential leaving slot s (s -> s+1); zero outside the stored window
inline Morphism cx_dif(const CyclicComplex& X, int s) {
    if (X.m != 0) return X.dif[static_cast<size_t>(slot_mod(s, X.m))];
    int i = s - X.lo;
    if (i >= 0 && i + 1 < static_cast<int>(X.obj.size())) return X.dif[static_cast<size_t>(i)];
    return morphism_zero(*X.qv, X.q, cx_obj(X, s), cx_obj(X, s + 1));
}

// slots a pair-operation must visit: full period, or the window for m = 0
inline std::vector<int> cx_var_slots(const CyclicComplex& X) {
    std::vector<int> s;
    if (X.m != 0) {
        for (int i = 0; i < X.m; ++i) s.push_back(i);
    } else {
        for (int i = 0; i < static_cast<int>(X.obj.size()); ++i) s.push_back(X.lo + i);
    }
    return s;
}

inline std::vector<int> cx_union_slots(const CyclicComplex& A, const CyclicComplex& B) {
    if (A.m != 0) return cx_var_slots(A);
    if (A.obj.empty()) return cx_var_slots(B);
    if (B.obj.empty()) return cx_var_slots(A);
    int lo = std::min(A.lo, B.lo);
    int hi = std::max(A.lo + static_cast<int>(A.obj.size()), B.lo + static_cast<int>(B.obj.size()));
    std::vector<int> s;
    for (int i = lo; i < hi; ++i) s.push_back(i);
    return s;
}

// drop zero terms at both window ends (m = 0 canonical storage)
inline void cx_trim(CyclicComplex& X) {
    if (X.m != 0) return;
    while (!X.obj.empty() && X.obj.back().total_dim() == 0) {
        X.obj.pop_back();
        if (!X.dif.empty()) X.dif.pop_back();
    }
    while (!X.obj.empty() && X.obj.front().total_dim() == 0) {
        X.obj.erase(X.obj.begin());
        if (!X.dif.empty()) X.dif.erase(X.dif.begin());
        ++X.lo;
    }
    if (X.obj.empty()) X.lo = 0;
}

// projective <=> trivial syzygy
inline bool rep_is_projective(const Quiver& Q, int q, const Representation& M, long long budget) {
    return min_proj_resolution(Q, q, M, budget).omega.total_dim() == 0;
}

inline void cx_validate(const CyclicComplex& X) {
    check_input(X.m == 0 || X.m >= 3, "complex: period must be 0 or >= 3");
    if (X.m != 0) {
        check_internal(static_cast<int>(X.obj.size()) == X.m &&
                           static_cast<int>(X.dif.size()) == X.m,
                       "complex: storage size");
        check_internal(X.lo == 0, "complex: lo must be 0 when m > 0");
    } else {
        check_internal(X.dif.size() == (X.obj.empty() ? 0 : X.obj.size() - 1),
                       "complex: storage size");
    }
    for (int s : cx_var_slots(X)) {
        check_input(is_morphism(*X.qv, cx_obj(X, s), cx_obj(X, s + 1), cx_dif(X, s)),
                    "complex: differential is not a morphism");
        check_input(morphism_compose(cx_dif(X, s + 1), cx_dif(X, s)).is_zero(),
                    "complex: d^2 != 0");
    }
}

inline CyclicComplex cx_zero(const Quiver& Q, int q, int m) {
    check_input(m == 0 || m >= 3, "complex: period must be 0 or >= 3");
    CyclicComplex X;
    X.qv = &Q;
    X.q = q;
    X.m = m;
    if (m != 0) {
        X.obj.assign(static_cast<size_t>(m), rep_zero(Q, q));
        for (int i = 0; i < m; ++i)
            X.dif.push_back(morphism_zero(Q, q, X.obj[static_cast<size_t>(i)],
                                          X.obj[static_cast<size_t>((i + 1) % m)]));
    }
    return X;
}

// assemble from sparse slot data; dif[s] : term s -> term s+1
inline CyclicComplex cx_make(const Quiver& Q, int q, int m,
                             const std::map<int, Representation>& terms,
                             const std::map<int, Morphism>& difs) {
    CyclicComplex X = cx_zero(Q, q, m);
    if (m != 0) {
        for (const auto& [s, M] : terms) {
            int i = slot_mod(s, m);
            check_input(X.obj[static_cast<size_t>(i)].total_dim() == 0, "cx_make: slot collision");
            X.obj[static_cast<size_t>(i)] = M;
        }
        for (int i = 0; i < m; ++i)
            X.dif[static_cast<size_t>(i)] = morphism_zero(Q, q, X.obj[static_cast<size_t>(i)],
                                                          X.obj[static_cast<size_t>((i + 1) % m)]);
        for (const auto& [s, f] : difs) X.dif[static_cast<size_t>(slot_mod(s, m))] = f;
    } else if (!terms.empty()) {
        int lo = terms.begin()->first, hi = terms.rbegin()->first;
        X.lo = lo;
        for (int s = lo; s <= hi; ++s) {
            auto it = terms.find(s);
            X.obj.push_back(it != terms.end() ? it->second : rep_zero(Q, q));
        }
        for (int s = lo; s < hi; ++s) {
            auto it = difs.find(s);
            X.dif.push_back(it != difs.end()
                                ? it->second
                                : morphism_zero(Q, q, X.obj[static_cast<size_t>(s - lo)],
                                                X.obj[static_cast<size_t>(s - lo + 1)]));
        }
        for (const auto& [s, f] : difs)
            check_input(s >= lo && s < hi, "cx_make: differential outside support");
    }
    cx_trim(X);
    cx_validate(X);
    return X;
}

inline CyclicComplex cx_stalk(const Quiver& Q, int q, int m, const Representation& M, int s) {
    if (M.total_dim() == 0) return cx_zero(Q, q, m);
    return cx_make(Q, q, m, {{s, M}}, {});
}

inline CyclicComplex cx_shift(const CyclicComplex& X, int t) {
    CyclicComplex Y;
    Y.qv = X.qv;
    Y.q = X.q;
    Y.m = X.m;
    int sg = (t % 2 == 0) ? 1 : -1;
    if (X.m != 0) {
        Y.obj.resize(static_cast<size_t>(X.m));
        Y.dif.resize(static_cast<size_t>(X.m));
        for (int i = 0; i < X.m; ++i) {
            int j = slot_mod(i + t, X.m);
            Y.obj[static_cast<size_t>(i)] = X.obj[static_cast<size_t>(j)];
            Y.dif[static_cast<size_t>(i)] = morphism_scaled(X.dif[static_cast<size_t>(j)], sg);
        }
    } else {
        Y.lo = X.lo - t;
        Y.obj = X.obj;
        for (const auto& d : X.dif) Y.dif.push_back(morphism_scaled(d, sg));
    }
    return Y;
}

// C_f for f : A -> B, with A at slot -1 and B at slot 0
inline CyclicComplex cx_cf(const Quiver& Q, int q, int m, const Representation& A,
                           const Representation& B, const Morphism& f, long long budget) {
    check_input(is_morphism(Q, A, B, f), "cx_cf: not a morphism");
    check_input(rep_is_projective(Q, q, A, budget) && rep_is_projective(Q, q, B, budget),
                "cx_cf: terms must be projective");
    std::map<int, Representation> terms;
    std::map<int, Morphism> difs;
    if (A.total_dim() > 0) terms.emplace(-1, A);
    if (B.total_dim() > 0) terms.emplace(0, B);
    if (A.total_dim() > 0 && B.total_dim() > 0) difs.emplace(-1, f);
    return cx_make(Q, q, m, terms, difs);
}

// K_P[r]: P at slots -r-1 -> -r with (shifted) identity differential
inline CyclicComplex cx_kp(const Quiver& Q, int q, int m, const Representation& P, int r,
                           long long budget) {
    return cx_shift(cx_cf(Q, q, m, P, P, morphism_identity(Q, q, P), budget), r);
}

// C_M = C_{delta_M} from the minimal projective resolution; H_0 = M
inline CyclicComplex cx_cm(const Quiver& Q, int q, int m, const Representation& M,
                           long long budget) {
    ProjResolution R = min_proj_resolution(Q, q, M, budget);
    return cx_cf(Q, q, m, R.omega, R.cover, R.delta, budget);
}

// C_H[-j]: Omega_H at slot j-1, P_H at slot j; homology H at slot j
inline CyclicComplex cx_two_term(const Quiver& Q, int q, int m, const Representation& H, int j,
                                 long long budget) {
    return cx_shift(cx_cm(Q, q, m, H, budget), -j);
}

inline CyclicComplex cx_sum(const CyclicComplex& A, const CyclicComplex& B) {
    check_input(A.m == B.m && A.q == B.q, "cx_sum: period/field mismatch");
    const Quiver& Q = *A.qv;
    auto slots = cx_union_slots(A, B);
    std::map<int, SumResult> sums;
    for (int s : slots) sums.emplace(s, rep_direct_sum(Q, A.q, cx_obj(A, s), cx_obj(B, s)));
    auto sum_at = [&](int s) -> const SumResult& {
        auto it = sums.find(A.m != 0 ? slot_mod(s, A.m) : s);
        return it->second;
    };
    std::map<int, Representation> terms;
    std::map<int, Morphism> difs;
    for (int s : slots) terms.emplace(s, sum_at(s).rep);
    for (int s : slots) {
        if (A.m == 0 && s == slots.back()) break;  // boundary differential is zero
        const SumResult& s0 = sum_at(s);
        const SumResult& s1 = sum_at(s + 1);
        Morphism d = morphism_add(
            morphism_compose(s1.inA, morphism_compose(cx_dif(A, s), s0.prA)),
            morphism_compose(s1.inB, morphism_compose(cx_dif(B, s), s0.prB)));
        difs.emplace(s, d);
    }
    return cx_make(Q, A.q, A.m, terms, difs);
}

inline std::string cx_encode(const CyclicComplex& X) {
    std::string s = std::to_string(X.m) + "|" + std::to_string(X.lo) + "|";
    for (const auto& M : X.obj) s += rep_encode(M) + ";";
    s += "|";
    for (const auto& d : X.dif) {
        for (const auto& m : d.mats) {
            s += std::to_string(m.rows) + "x" + std::to_string(m.cols) + ":";
            for (uint8_t x : m.a) s += static_cast<char>('0' + x);
            s += ",";
        }
        s += ";";
    }
    return s;
}

// ---- graded map spaces between two complexes ----------------------------
// A degree-g map assigns h_s : A_s -> B_{s+g} for s in the source frame.

using SlotMap = std::map<int, Morphism>;

struct CxDegBasis {
    int g = 0;
    std::vector<int> slots;
    std::vector<std::vector<Morphism>> hb;  // hb[k]: hom_basis(A_s, B_{s+g}) at slots[k]
    std::vector<int> off;
    int dim = 0;
};

inline CxDegBasis cx_deg_basis(const CyclicComplex& A, const CyclicComplex& B, int g) {
    CxDegBasis D;
    D.g = g;
    D.slots = cx_var_slots(A);
    for (int s : D.slots) {
        D.off.push_back(D.dim);
        D.hb.push_back(hom_basis(*A.qv, A.q, cx_obj(A, s), cx_obj(B, s + g)));
        D.dim += static_cast<int>(D.hb.back().size());
    }
    return D;
}

inline SlotMap cx_expand(const CyclicComplex& A, const CyclicComplex& B, const CxDegBasis& D,
                         const std::vector<uint8_t>& coeff) {
    SlotMap F;
    for (size_t k = 0; k < D.slots.size(); ++k) {
        int s = D.slots[k];
        Morphism f = morphism_zero(*A.qv, A.q, cx_obj(A, s), cx_obj(B, s + D.g));
        for (size_t j = 0; j < D.hb[k].size(); ++j) {
            int c = coeff[static_cast<size_t>(D.off[k]) + j];
            if (c) f = morphism_add(f, morphism_scaled(D.hb[k][j], c));
        }
        F.emplace(s, std::move(f));
    }
    return F;
}

inline Morphism slotmap_get(const CyclicComplex& A, const CyclicComplex& B, int g,
                            const SlotMap& F, int s) {
    auto it = F.find(A.m != 0 ? slot_mod(s, A.m) : s);
    if (it != F.end()) return it->second;
    return morphism_zero(*A.qv, A.q, cx_obj(A, s), cx_obj(B, s + g));
}

// hom-complex differential: (Dh)_s = dB_{s+g} h_s - (-1)^g h_{s+1} dA_s.
// Kernel at g=0: chain maps; kernel at g=1: extension cocycles; the g=-1
// operator is the homotopy map s |-> s_{i+1} dA_i + dB_{i-1} s_i.
inline SlotMap cx_dop(const CyclicComplex& A, const CyclicComplex& B, int g, const SlotMap& h) {
    SlotMap out;
    for (int s : cx_var_slots(A)) {
        Morphism t1 = morphism_compose(cx_dif(B, s + g), slotmap_get(A, B, g, h, s));
        Morphism t2 = morphism_compose(slotmap_get(A, B, g, h, s + 1), cx_dif(A, s));
        out.emplace(s, (g % 2 == 0) ? morphism_sub(t1, t2) : morphism_add(t1, t2));
    }
    return out;
}

// flatten a degree-g1 slot map to its ambient entry vector (slot, vertex, row-major)
inline std::vector<uint8_t> cx_flatten(const CyclicComplex& A, const CyclicComplex& B, int g1,
                                       const SlotMap& F) {
    std::vector<uint8_t> out;
    for (int s : cx_var_slots(A)) {
        Morphism f = slotmap_get(A, B, g1, F, s);
        for (const auto& m : f.mats)
            for (uint8_t x : m.a) out.push_back(x);
    }
    return out;
}

// matrix of the hom-complex differential on degree-g coordinates
inline FFMatrix cx_dop_matrix(const CyclicComplex& A, const CyclicComplex& B,
                              const CxDegBasis& D) {
    std::vector<std::vector<uint8_t>> cols;
    size_t rows = 0;
    for (int j = 0; j < D.dim; ++j) {
        std::vector<uint8_t> e(static_cast<size_t>(D.dim), 0);
        e[static_cast<size_t>(j)] = 1;
        cols.push_back(cx_flatten(A, B, D.g + 1, cx_dop(A, B, D.g, cx_expand(A, B, D, e))));
        rows = cols.back().size();
    }
    FFMatrix M(A.q, static_cast<int>(rows), D.dim);
    for (int j = 0; j < D.dim; ++j)
        for (size_t i = 0; i < rows; ++i) M.at(static_cast<int>(i), j) = cols[static_cast<size_t>(j)][i];
    return M;
}

struct CxHomDims {
    int chain = 0;   // dim Hom_{C_m}
    int stable = 0;  // dim Hom_{K_m}
};

inline CxHomDims cx_hom_dims(const CyclicComplex& A, const CyclicComplex& B) {
    check_input(A.m == B.m, "hom_dims: period mismatch");
    CxDegBasis D0 = cx_deg_basis(A, B, 0);
    int chain = D0.dim - ff_rank(cx_dop_matrix(A, B, D0));
    CxDegBasis Dm1 = cx_deg_basis(A, B, -1);
    int hrank = ff_rank(cx_dop_matrix(A, B, Dm1));
    check_internal(hrank <= chain, "hom_dims: homotopies escape chain maps");
    return {chain, chain - hrank};
}

// dim_Fq B^1 for extensions of M by N (rank of the degree-0 differential)
inline int cx_coboundary_dim(const CyclicComplex& M, const CyclicComplex& N) {
    CxDegBasis D0 = cx_deg_basis(M, N, 0);
    return ff_rank(cx_dop_matrix(M, N, D0));
}

// dim_Fq Ext^1(M, N) = dim Z^1 - dim B^1
inline int cx_ext1_dim(const CyclicComplex& M, const CyclicComplex& N) {
    CxDegBasis D1 = cx_deg_basis(M, N, 1);
    FFMatrix Z = cx_dop_matrix(M, N, D1);
    int zdim = D1.dim - ff_rank(Z);
    return zdim - cx_coboundary_dim(M, N);
}

// middle term of the extension 0 -> N -> L -> M -> 0 classified by cocycle h:
// L_i = N_i + M_i with differential [[dN, h], [0, dM]] in (N, M) block order
inline CyclicComplex cx_build_middle(const CyclicComplex& M, const CyclicComplex& N,
                                     const SlotMap& h) {
    const Quiver& Q = *M.qv;
    auto slots = cx_union_slots(M, N);
    std::map<int, SumResult> sums;
    for (int s : slots) sums.emplace(s, rep_direct_sum(Q, M.q, cx_obj(N, s), cx_obj(M, s)));
    auto sum_at = [&](int s) -> const SumResult& {
        return sums.find(M.m != 0 ? slot_mod(s, M.m) : s)->second;
    };
    std::map<int, Representation> terms;
    std::map<int, Morphism> difs;
    for (int s : slots) terms.emplace(s, sum_at(s).rep);
    for (int s : slots) {
        if (M.m == 0 && s == slots.back()) break;
        const SumResult& s0 = sum_at(s);
        const SumResult& s1 = sum_at(s + 1);
        Morphism d = morphism_add(
            morphism_compose(s1.inA, morphism_compose(cx_dif(N, s), s0.prA)),
            morphism_add(
                morphism_compose(s1.inA, morphism_compose(slotmap_get(M, N, 1, h, s), s0.prB)),
                morphism_compose(s1.inB, morphism_compose(cx_dif(M, s), s0.prB))));
        difs.emplace(s, d);
    }
    return cx_make(Q, M.q, M.m, terms, difs);
}

// visit every extension cocycle h in Z^1 together with its middle term
inline void cx_ext1_enumerate(const CyclicComplex& M, const CyclicComplex& N, long long budget,
                              const std::function<void(const SlotMap&, const CyclicComplex&)>& fn) {
    check_input(M.m == N.m, "ext1: period mismatch");
    CxDegBasis D1 = cx_deg_basis(M, N, 1);
    FFMatrix Z = cx_dop_matrix(M, N, D1);
    FFMatrix K = ff_kernel(Z);
    ff_enumerate_tuples(M.q, K.rows, budget, [&](const std::vector<uint8_t>& t) {
        std::vector<uint8_t> c(static_cast<size_t>(D1.dim), 0);
        for (int j = 0; j < K.rows; ++j) {
            if (!t[static_cast<size_t>(j)]) continue;
            for (int i = 0; i < K.cols; ++i)
                c[static_cast<size_t>(i)] = static_cast<uint8_t>(
                    (c[static_cast<size_t>(i)] + t[static_cast<size_t>(j)] * K.at(j, i)) % M.q);
        }
        SlotMap h = cx_expand(M, N, D1, c);
        fn(h, cx_build_middle(M, N, h));
        return true;
    });
}

inline GrothendieckClass cx_image_class(const CyclicComplex& X, int s) {
    Morphism d = cx_dif(X, s);
    GrothendieckClass c = X.qv->zero_class();
    for (size_t v = 0; v < d.mats.size(); ++v) c[v] = ff_rank(d.mats[v]);
    return c;
}

// H_s = ker d_s / im d_{s-1}; only nonzero slots are returned
inline std::map<int, Representation> cx_homology(const CyclicComplex& X) {
    const Quiver& Q = *X.qv;
    std::map<int, Representation> H;
    for (int s : cx_var_slots(X)) {
        Representation Xs = cx_obj(X, s);
        if (Xs.total_dim() == 0) continue;
        SubrepResult ker = sub_representation(Q, X.q, Xs, kernel_subspaces(Q, Xs, cx_dif(X, s)));
        SubspaceFamily img = image_subspaces(Q, Xs, cx_dif(X, s - 1));
        SubspaceFamily in_ker;  // image rows rewritten in kernel coordinates
        for (int v = 0; v < Q.n; ++v) {
            const FFMatrix& rows = img.bases[static_cast<size_t>(v)];
            FFMatrix W(X.q, rows.rows, ker.rep.dims[static_cast<size_t>(v)]);
            for (int r = 0; r < rows.rows; ++r) {
                std::vector<uint8_t> b(static_cast<size_t>(rows.cols));
                for (int c = 0; c < rows.cols; ++c) b[static_cast<size_t>(c)] = rows.at(r, c);
                auto y = ff_solve(ker.incl.mats[static_cast<size_t>(v)], b);
                check_internal(y.has_value(), "homology: image not inside kernel");
                for (int c = 0; c < W.cols; ++c) W.at(r, c) = (*y)[static_cast<size_t>(c)];
            }
            in_ker.bases.push_back(std::move(W));
        }
        Representation Hs = quotient_representation(Q, X.q, ker.rep, in_ker).rep;
        if (Hs.total_dim() > 0) H.emplace(s, std::move(Hs));
    }
    return H;
}

inline bool cx_is_acyclic(const CyclicComplex& X) { return cx_homology(X).empty(); }

// brute-force isomorphism: invertible chain map found by scanning Hom_{C_m}(A, B)
inline std::optional<SlotMap> cx_find_isomorphism(const CyclicComplex& A, const CyclicComplex& B,
                                                  long long budget) {
    check_input(A.m == B.m, "cx_find_isomorphism: period mismatch");
    for (int s : cx_union_slots(A, B))
        if (cx_obj(A, s).dims != cx_obj(B, s).dims) return std::nullopt;
    CxDegBasis D0 = cx_deg_basis(A, B, 0);
    FFMatrix K = ff_kernel(cx_dop_matrix(A, B, D0));
    std::optional<SlotMap> found;
    ff_enumerate_tuples(A.q, K.rows, budget, [&](const std::vector<uint8_t>& t) {
        std::vector<uint8_t> c(static_cast<size_t>(D0.dim), 0);
        for (int j = 0; j < K.rows; ++j) {
            if (!t[static_cast<size_t>(j)]) continue;
            for (int i = 0; i < K.cols; ++i)
                c[static_cast<size_t>(i)] = static_cast<uint8_t>(
                    (c[static_cast<size_t>(i)] + t[static_cast<size_t>(j)] * K.at(j, i)) % A.q);
        }
        SlotMap f = cx_expand(A, B, D0, c);
        for (const auto& [s, fs] : f)
            if (!morphism_invertible(fs)) return true;
        found = f;
        return false;
    });
    return found;
}

inline bool cx_isomorphic(const CyclicComplex& A, const CyclicComplex& B, long long budget) {
    return cx_find_isomorphism(A, B, budget).has_value();
}

// sum over slots of <A_i, B_i>; the twist exponent of the twisted product
inline long long cx_pair_euler(const CyclicComplex& A, const CyclicComplex& B) {
    long long e = 0;
    for (int s : cx_union_slots(A, B))
        e += euler_form(*A.qv, cx_obj(A, s).cls(), cx_obj(B, s).cls());
    return e;
}

}  // namespace bhall
