#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "bhall/errors.hpp"

namespace bhall {

struct Arrow {
    int from = 0;
    int to = 0;
};

// Coordinate vector in the Grothendieck group K(A), indexed by vertex.
using GrothendieckClass = std::vector<long long>;

inline GrothendieckClass gk_add(GrothendieckClass a, const GrothendieckClass& b) {
    check_internal(a.size() == b.size(), "gk_add: size");
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline GrothendieckClass gk_sub(GrothendieckClass a, const GrothendieckClass& b) {
    check_internal(a.size() == b.size(), "gk_sub: size");
    for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline bool gk_is_zero(const GrothendieckClass& a) {
    for (long long x : a)
        if (x) return false;
    return true;
}

// Finite acyclic quiver; vertices are 0..n-1. Validation and the path/Cartan
// data are fixed at construction.
struct Quiver {
    int n = 0;
    std::vector<Arrow> arrows;
    std::vector<int> topo;                        // vertex order, arrows go forward
    std::vector<std::vector<long long>> npaths;   // npaths[v][w] = #paths v -> w

    Quiver() = default;
    Quiver(int n_, std::vector<Arrow> arrows_) : n(n_), arrows(std::move(arrows_)) {
        check_input(n >= 1, "quiver: need at least one vertex");
        for (const auto& a : arrows)
            check_input(a.from >= 0 && a.from < n && a.to >= 0 && a.to < n,
                        "quiver: arrow endpoint out of range");
        // Kahn topological sort; rejects cycles.
        std::vector<int> indeg(static_cast<size_t>(n), 0);
        for (const auto& a : arrows) ++indeg[static_cast<size_t>(a.to)];
        std::vector<int> stack;
        for (int v = n - 1; v >= 0; --v)
            if (!indeg[static_cast<size_t>(v)]) stack.push_back(v);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            topo.push_back(v);
            for (const auto& a : arrows)
                if (a.from == v && --indeg[static_cast<size_t>(a.to)] == 0) stack.push_back(a.to);
        }
        check_input(static_cast<int>(topo.size()) == n, "quiver: cycle detected");
        npaths.assign(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
        for (int w : topo) {
            npaths[static_cast<size_t>(w)][static_cast<size_t>(w)] = 1;
            // prefix paths: every path v->w with a final arrow u->w
            for (size_t ai = 0; ai < arrows.size(); ++ai) {
                if (arrows[ai].to != w) continue;
                int u = arrows[ai].from;
                for (int v = 0; v < n; ++v)
                    npaths[static_cast<size_t>(v)][static_cast<size_t>(w)] +=
                        npaths[static_cast<size_t>(v)][static_cast<size_t>(u)];
            }
        }
    }

    GrothendieckClass zero_class() const { return GrothendieckClass(static_cast<size_t>(n), 0); }

    GrothendieckClass unit_class(int v) const {
        auto c = zero_class();
        c[static_cast<size_t>(v)] = 1;
        return c;
    }

    // Class of the indecomposable projective P_v.
    GrothendieckClass proj_class(int v) const {
        GrothendieckClass c(static_cast<size_t>(n));
        for (int w = 0; w < n; ++w) c[static_cast<size_t>(w)] = npaths[static_cast<size_t>(v)][static_cast<size_t>(w)];
        return c;
    }

    // Multiplicities s with sum_v s_v * proj_class(v) == cls; the system is
    // unitriangular in topological order. Throws internal_error if cls is not
    // a nonnegative projective class.
    std::vector<long long> proj_multiplicities(const GrothendieckClass& cls) const {
        check_internal(static_cast<int>(cls.size()) == n, "proj_multiplicities: size");
        std::vector<long long> s(static_cast<size_t>(n), 0);
        GrothendieckClass rest = cls;
        for (int v : topo) {
            long long m = rest[static_cast<size_t>(v)];
            check_internal(m >= 0, "proj_multiplicities: not a projective class");
            s[static_cast<size_t>(v)] = m;
            if (m)
                for (int w = 0; w < n; ++w)
                    rest[static_cast<size_t>(w)] -= m * npaths[static_cast<size_t>(v)][static_cast<size_t>(w)];
        }
        check_internal(gk_is_zero(rest), "proj_multiplicities: leftover class");
        return s;
    }
};

// Euler form <a,b> = sum_v a_v b_v - sum_{arrows i->j} a_i b_j.
inline long long euler_form(const Quiver& Q, const GrothendieckClass& a, const GrothendieckClass& b) {
    check_internal(static_cast<int>(a.size()) == Q.n && static_cast<int>(b.size()) == Q.n,
                   "euler_form: size");
    long long s = 0;
    for (int v = 0; v < Q.n; ++v) s += a[static_cast<size_t>(v)] * b[static_cast<size_t>(v)];
    for (const auto& ar : Q.arrows) s -= a[static_cast<size_t>(ar.from)] * b[static_cast<size_t>(ar.to)];
    return s;
}

inline long long sym_euler_form(const Quiver& Q, const GrothendieckClass& a, const GrothendieckClass& b) {
    return euler_form(Q, a, b) + euler_form(Q, b, a);
}

// FNV-1a over the structural data; stamps CLI output rows.
inline std::string quiver_hash(const Quiver& Q) {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<uint64_t>(Q.n));
    for (const auto& a : Q.arrows) {
        mix(static_cast<uint64_t>(a.from));
        mix(static_cast<uint64_t>(a.to));
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

inline Quiver linear_quiver(int n) {  // A_n, arrows i -> i+1
    std::vector<Arrow> arrows;
    for (int i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1});
    return Quiver(n, std::move(arrows));
}

}  // namespace bhall
