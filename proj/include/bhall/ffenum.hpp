#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "bhall/coeff.hpp"
#include "bhall/errors.hpp"
#include "bhall/ffmatrix.hpp"

namespace bhall {

inline Integer integer_pow(int q, long long e) {
    check_internal(e >= 0, "integer_pow: negative exponent");
    return boost::multiprecision::pow(Integer(q), static_cast<unsigned>(e));
}

inline void check_budget(const Integer& count, long long budget, const char* where) {
    if (count > budget)
        throw budget_exceeded(std::string(where) + ": " + count.str() + " tuples exceed budget " +
                              std::to_string(budget));
}

// All tuples in {0..q-1}^n, lexicographic (first coordinate most significant).
// The callback may return false to stop early.
inline void ff_enumerate_tuples(int q, int n, long long budget,
                                const std::function<bool(const std::vector<uint8_t>&)>& fn) {
    check_budget(integer_pow(q, n), budget, "ff_enumerate_tuples");
    std::vector<uint8_t> t(static_cast<size_t>(n), 0);
    while (true) {
        if (!fn(t)) return;
        int i = n - 1;
        while (i >= 0 && t[static_cast<size_t>(i)] == q - 1) t[static_cast<size_t>(i--)] = 0;
        if (i < 0) return;
        ++t[static_cast<size_t>(i)];
    }
}

using MapShape = std::vector<std::pair<int, int>>;  // (rows, cols) per slot

inline long long map_shape_entries(const MapShape& shape) {
    long long n = 0;
    for (auto [r, c] : shape) n += static_cast<long long>(r) * c;
    return n;
}

// All matrix tuples of the given shape, in lexicographic entry order (slot
// order, then row-major within a slot; first entry most significant).
inline void ff_enumerate_maps(int q, const MapShape& shape, long long budget,
                              const std::function<bool(const std::vector<FFMatrix>&)>& fn) {
    long long entries = map_shape_entries(shape);
    check_budget(integer_pow(q, entries), budget, "ff_enumerate_maps");
    std::vector<FFMatrix> mats;
    mats.reserve(shape.size());
    for (auto [r, c] : shape) mats.emplace_back(q, r, c);
    std::vector<uint8_t*> flat;
    flat.reserve(static_cast<size_t>(entries));
    for (auto& m : mats)
        for (auto& x : m.a) flat.push_back(&x);
    while (true) {
        if (!fn(mats)) return;
        long long i = entries - 1;
        while (i >= 0 && *flat[static_cast<size_t>(i)] == q - 1) *flat[static_cast<size_t>(i--)] = 0;
        if (i < 0) return;
        ++*flat[static_cast<size_t>(i)];
    }
}

inline Integer gaussian_binomial(int n, int k, int q) {
    if (k < 0 || k > n) return 0;
    Integer num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= integer_pow(q, n - i) - 1;
        den *= integer_pow(q, i + 1) - 1;
    }
    check_internal(num % den == 0, "gaussian_binomial: not integral");
    return num / den;
}

// All k-dimensional subspaces of F_q^d as RREF row bases: pivot column sets in
// lexicographic order, free entries odometer (row-major) within each set.
inline void ff_enumerate_subspaces(int q, int d, int k, long long budget,
                                   const std::function<bool(const FFMatrix&)>& fn) {
    check_budget(gaussian_binomial(d, k, q), budget, "ff_enumerate_subspaces");
    if (k == 0) {
        fn(FFMatrix(q, 0, d));
        return;
    }
    if (k > d) return;
    std::vector<int> piv(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) piv[static_cast<size_t>(i)] = i;
    while (true) {
        std::vector<bool> is_piv(static_cast<size_t>(d), false);
        for (int p : piv) is_piv[static_cast<size_t>(p)] = true;
        std::vector<std::pair<int, int>> free_pos;  // (row, col)
        for (int r = 0; r < k; ++r)
            for (int c = piv[static_cast<size_t>(r)] + 1; c < d; ++c)
                if (!is_piv[static_cast<size_t>(c)]) free_pos.emplace_back(r, c);
        FFMatrix B(q, k, d);
        for (int r = 0; r < k; ++r) B.at(r, piv[static_cast<size_t>(r)]) = 1;
        bool stop = false;
        std::function<bool(size_t)> rec = [&](size_t i) -> bool {
            if (i == free_pos.size()) return fn(B);
            for (int v = 0; v < q; ++v) {
                B.at(free_pos[i].first, free_pos[i].second) = static_cast<uint8_t>(v);
                if (!rec(i + 1)) return false;
            }
            B.at(free_pos[i].first, free_pos[i].second) = 0;
            return true;
        };
        if (!rec(0)) stop = true;
        if (stop) return;
        // next pivot combination, lexicographic
        int i = k - 1;
        while (i >= 0 && piv[static_cast<size_t>(i)] == d - k + i) --i;
        if (i < 0) return;
        ++piv[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) piv[static_cast<size_t>(j)] = piv[static_cast<size_t>(j - 1)] + 1;
    }
}

}  // namespace bhall
