// Acceptance gate: one pass/fail line per shipped criterion, exact equality
// throughout, exit 0 only when every line passes.  Contexts are shared per
// (quiver, q, m) so the class tables are built once.

#include <chrono>
#include <cstdio>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "bhall/verify.hpp"

using namespace bhall;

namespace {

constexpr long long kBudget = 10000000;

struct ContextPool {
    std::map<std::tuple<int, int, int>, std::unique_ptr<Context>> pool;  // (n, q, m)
    Context& get(int n, int q, int m) {
        auto key = std::make_tuple(n, q, m);
        auto it = pool.find(key);
        if (it == pool.end()) {
            Quiver Q = n == 1 ? Quiver(1, {}) : Quiver(2, {{0, 1}});
            it = pool.emplace(key, std::make_unique<Context>(Q, q, m, kBudget)).first;
        }
        return *it->second;
    }
};

struct Gate {
    int failed = 0;

    void line(int num, const std::string& label, const std::vector<VerifyReport>& reps,
              double secs) {
        long long inst = 0;
        bool ok = true;
        for (const auto& r : reps) {
            inst += r.instances;
            ok = ok && r.ok();
        }
        std::printf("[%s] criterion %d %s -- %lld instances, %zu context%s, %.1fs\n",
                    ok ? "PASS" : "FAIL", num, label.c_str(), inst, reps.size(),
                    reps.size() == 1 ? "" : "s", secs);
        for (const auto& r : reps)
            for (const auto& n : r.notes)
                std::printf("       note [%s %s]: %s\n", r.suite.c_str(), r.config.c_str(),
                            n.c_str());
        if (!ok) {
            ++failed;
            int shown = 0;
            for (const auto& r : reps)
                for (const auto& f : r.failures) {
                    if (++shown > 6) break;
                    std::printf("       fail [%s %s] %s\n                 lhs: %s\n                 rhs: %s\n",
                                r.suite.c_str(), r.config.c_str(), f.context.c_str(),
                                f.lhs.c_str(), f.rhs.c_str());
                }
        }
        std::fflush(stdout);
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    ContextPool ctx;
    Gate gate;
    // a criterion that throws still prints its FAIL line; later criteria run
    auto criterion = [&](int num, auto&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            ++gate.failed;
            std::printf("[FAIL] criterion %d -- exception: %s\n", num, e.what());
            std::fflush(stdout);
        }
    };
    {
        // 1. Riedtmann's formula, both routes, everything of total dim <= 3.
        criterion(1, [&] {
            auto t0 = std::chrono::steady_clock::now();
            VerifyConfig cfg;
            cfg.dim = 3;
            std::vector<VerifyReport> reps;
            for (int n : {1, 2})
                for (int q : {2, 3}) reps.push_back(verify_suite(ctx.get(n, q, 3), "riedtmann", cfg));
            gate.line(1, "riedtmann: F^L_{MN} = |Ext^1(M,N)_L| a_L / (|Hom(M,N)| a_M a_N)", reps,
                      seconds_since(t0));
        });
        // 2. |Ext^1(N, M)| = q^{dim Hom_K(N, M[1])} on 200 random complex pairs.
        criterion(2, [&] {
            auto t0 = std::chrono::steady_clock::now();
            std::vector<VerifyReport> reps;
            for (int n : {1, 2})
                for (int m : {3, 4}) {
                    VerifyConfig cfg;
                    cfg.dim = 2;
                    cfg.samples = 50;
                    cfg.seed = static_cast<unsigned>(12345 + 10 * n + m);
                    reps.push_back(verify_suite(ctx.get(n, 2, m), "lemma2.1", cfg));
                }
            gate.line(2, "lemma2.1: |Ext^1| = q^{dim stable Hom shift} on random pairs", reps,
                      seconds_since(t0));
        });
        // 3. Acyclic complexes decompose uniquely into K_P[r] summands.
        criterion(3, [&] {
            auto t0 = std::chrono::steady_clock::now();
            VerifyConfig cfg;
            cfg.dim = 2;
            gate.line(3, "lemma2.3: acyclic decomposition is a complete isomorphism invariant",
                      {verify_suite(ctx.get(2, 2, 3), "lemma2.3", cfg)}, seconds_since(t0));
        });
        // 4. The five K-commutation identities by direct twisted products.
        criterion(4, [&] {
            auto t0 = std::chrono::steady_clock::now();
            VerifyConfig cfg;
            cfg.dim = 2;
            std::vector<VerifyReport> reps;
            for (int n : {1, 2})
                for (int q : {2, 3})
                    for (int m : {3, 4}) reps.push_back(verify_suite(ctx.get(n, q, m), "lemma2.5", cfg));
            gate.line(4, "lemma2.5: K-commutation identities (2.2)-(2.6), exponents logged", reps,
                      seconds_since(t0));
        });
        // 5. Slotwise Hall embeddings and full PBW rank on the graded pieces.
        criterion(5, [&] {
            auto t0 = std::chrono::steady_clock::now();
            VerifyConfig cfg;
            cfg.dim = 2;
            cfg.alpha_bound = 1;
            std::vector<VerifyReport> reps;
            reps.push_back(verify_suite(ctx.get(1, 2, 3), "prop2.7", cfg));
            reps.push_back(verify_suite(ctx.get(2, 2, 3), "prop2.7", cfg));
            gate.line(5, "prop2.7: slotwise embeddings, ordered PBW products independent", reps,
                      seconds_since(t0));
        });
        // 6. Phi is an algebra map on every ordered generator pair.
        criterion(6, [&] {
            auto t0 = std::chrono::steady_clock::now();
            VerifyConfig cfg;
            cfg.dim = 2;
            std::vector<VerifyReport> reps;
            for (int n : {1, 2})
                for (int q : {2, 3})
                    for (int m : {3, 4}) reps.push_back(verify_suite(ctx.get(n, q, m), "thm3.2", cfg));
            VerifyConfig c0 = cfg;
            c0.window = {-1, 0, 1, 2, 3};
            for (int n : {1, 2}) reps.push_back(verify_suite(ctx.get(n, 2, 0), "thm3.2", c0));
            gate.line(6, "thm3.2: Phi(x y) = Phi(x) Phi(y) on all ordered generator pairs", reps,
                      seconds_since(t0));
        });
        // 7. Exchange exponent and multiplicity bookkeeping of e_{M,1} e_{N,0},
        //    plus the smallest instance pinned by hand.
        criterion(7, [&] {
            auto t0 = std::chrono::steady_clock::now();
            VerifyConfig cfg;
            cfg.dim = 2;
            std::vector<VerifyReport> reps;
            reps.push_back(verify_suite(ctx.get(2, 2, 3), "x5", cfg));
            Context& C = ctx.get(1, 2, 3);
            int k = verify_modules(C, 1).front();  // the one-dimensional module
            VerifyReport hand{"x5-smallest", "a1 q=2 m=3"};
            DHElement lhs = dh_multiply(C, e_generator(C, k, 1), e_generator(C, k, 0));
            DHElement rhs = dh_add(dh_multiply(C, e_generator(C, k, 0), e_generator(C, k, 1)),
                                   k_monomial(C, C.cls(k), 0));
            ++hand.instances;
            if (lhs != rhs)
                verify_fail(hand, "e_{k,1} e_{k,0} = e_{k,0} e_{k,1} + K_{k,0}", dh_str(C, lhs),
                            dh_str(C, rhs));
            reps.push_back(hand);
            gate.line(7, "x5: exchange coefficients v^{<M-X,X-Y>} gamma^{XY}_{MN}, all routes", reps,
                      seconds_since(t0));
        });
        // 8. The Heisenberg relations under every adjacent embedding J_i.
        criterion(8, [&] {
            auto t0 = std::chrono::steady_clock::now();
            VerifyConfig cfg;
            cfg.dim = 2;
            std::vector<VerifyReport> reps;
            for (int n : {1, 2})
                for (int q : {2, 3})
                    for (int m : {3, 4}) reps.push_back(verify_suite(ctx.get(n, q, m), "cor3.3", cfg));
            VerifyConfig c0 = cfg;
            c0.window = {-1, 0, 1, 2, 3};
            for (int n : {1, 2}) reps.push_back(verify_suite(ctx.get(n, 2, 0), "cor3.3", c0));
            gate.line(8, "cor3.3: Heisenberg relations H1-H8 at every slot pair", reps,
                      seconds_since(t0));
        });
        // 9. Engine sanity: associativity of both products and confluence of the
        //    straightener under randomized rewrite order.
        criterion(9, [&] {
            auto t0 = std::chrono::steady_clock::now();
            Context& C = ctx.get(2, 2, 3);
            VerifyReport rep{"engine", "a2 q=2 m=3 dim=2"};
            std::mt19937 rng(20240817);
            std::vector<int> mods = C.table.class_list(2);
            auto rand_alpha = [&] {
                GrothendieckClass a(2, 0);
                for (auto& x : a) x = static_cast<long long>(rng() % 3) - 1;
                return a;
            };
            auto rand_mid = [&] { return mods[rng() % mods.size()]; };
            auto rand_slot = [&] { return static_cast<int>(rng() % 3); };
            auto rand_dh = [&] {
                DHElement x = dh_multiply(C, k_monomial(C, rand_alpha(), rand_slot()),
                                          e_generator(C, rand_mid(), rand_slot()));
                return dh_multiply(C, x, e_generator(C, rand_mid(), rand_slot()));
            };
            for (int t = 0; t < 100; ++t) {
                DHElement x = rand_dh(), y = rand_dh(), z = rand_dh();
                ++rep.instances;
                DHElement l = dh_multiply(C, dh_multiply(C, x, y), z);
                DHElement r = dh_multiply(C, x, dh_multiply(C, y, z));
                if (l != r)
                    verify_fail(rep, "dh associativity, sample " + std::to_string(t), dh_str(C, l),
                                dh_str(C, r));
            }
            auto rand_lat = [&] {
                LatticeElement x = lat_multiply(C, lat_k(C, rand_alpha(), rand_slot()),
                                                lat_z(C, rand_mid(), rand_slot()));
                return lat_multiply(C, x, lat_z(C, rand_mid(), rand_slot()));
            };
            for (int t = 0; t < 100; ++t) {
                LatticeElement x = rand_lat(), y = rand_lat(), z = rand_lat();
                ++rep.instances;
                LatticeElement l = lat_multiply(C, lat_multiply(C, x, y), z);
                LatticeElement r = lat_multiply(C, x, lat_multiply(C, y, z));
                if (l != r)
                    verify_fail(rep, "lat associativity, sample " + std::to_string(t), lat_str(C, l),
                                lat_str(C, r));
            }
            for (int t = 0; t < 100; ++t) {
                LatticeElement x = rand_lat(), y = rand_lat();
                LatticeElement base = lat_multiply(C, x, y);
                ++rep.instances;
                for (unsigned s : {1u, 1000u, 70000u}) {
                    LatRewriteCfg rw;
                    rw.chooser_seed = s + static_cast<unsigned>(t);
                    if (lat_multiply(C, x, y, rw) != base) {
                        verify_fail(rep, "straightening confluence, sample " + std::to_string(t) +
                                             " seed " + std::to_string(rw.chooser_seed),
                                    lat_str(C, lat_multiply(C, x, y, rw)), lat_str(C, base));
                        break;
                    }
                }
            }
            gate.line(9, "engine: product associativity and straightening confluence", {rep},
                      seconds_since(t0));
        });
    }
    if (gate.failed) {
        std::printf("%d criterion(s) failed\n", gate.failed);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
