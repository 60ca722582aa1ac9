// command-line driver: quiver data in, exact tables and products out as JSON
//
// exit codes: 0 success, 1 verification failure (a checked identity does not
// hold, or an internal cross-check tripped), 2 invalid input, 3 budget
// exhausted.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bhall/verify.hpp"

using nlohmann::json;
using namespace bhall;

namespace {

Quiver load_quiver(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open quiver file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw invalid_input("quiver file is not valid JSON: " + std::string(e.what()));
    }
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw invalid_input("quiver file needs a \"vertices\" array");
    std::map<std::string, int> index;  // file order fixes the coordinates
    std::vector<std::string> names;
    for (const auto& v : j["vertices"]) {
        std::string name = v.get<std::string>();
        if (index.count(name)) throw invalid_input("duplicate vertex name: " + name);
        index.emplace(name, static_cast<int>(names.size()));
        names.push_back(name);
    }
    std::vector<Arrow> arrows;
    if (j.contains("arrows")) {
        for (const auto& a : j["arrows"]) {
            std::string f = a.at("from").get<std::string>(), t = a.at("to").get<std::string>();
            if (!index.count(f) || !index.count(t))
                throw invalid_input("arrow endpoint is not a declared vertex");
            arrows.push_back({index[f], index[t]});
        }
    }
    return Quiver(static_cast<int>(names.size()), std::move(arrows));
}

std::vector<long long> parse_ints(const std::string& s) {
    std::vector<long long> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (cur.empty()) throw invalid_input("empty entry in integer list: " + s);
            out.push_back(std::stoll(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    return out;
}

struct Atom {
    char kind;  // 'K', 'e', 'Z', 'C'
    GrothendieckClass alpha;
    int cls = 0;
    int slot = 0;
};

// product grammar: atoms separated by '*'; K(a1,..,an,i) takes the class in
// quiver coordinates then the slot, e/Z/C take (class index, slot).  With
// k_is_vertex set (htw-mul), K(v,r) names the vertex of P_v instead.
std::vector<Atom> parse_atoms(const Quiver& Q, const std::string& expr, char sep,
                              bool k_is_vertex = false) {
    std::vector<Atom> out;
    size_t pos = 0;
    auto skip = [&] {
        while (pos < expr.size() && std::isspace(static_cast<unsigned char>(expr[pos]))) ++pos;
    };
    while (skip(), pos < expr.size()) {
        char kind = expr[pos];
        if (kind != 'K' && kind != 'e' && kind != 'Z' && kind != 'C')
            throw invalid_input("expected atom K/e/Z/C at: " + expr.substr(pos));
        ++pos;
        skip();
        if (pos >= expr.size() || expr[pos] != '(') throw invalid_input("expected ( after atom name");
        size_t close = expr.find(')', pos);
        if (close == std::string::npos) throw invalid_input("unclosed atom in: " + expr);
        auto args = parse_ints(expr.substr(pos + 1, close - pos - 1));
        pos = close + 1;
        Atom a;
        a.kind = kind;
        if (kind == 'K' && !k_is_vertex) {
            if (args.size() != static_cast<size_t>(Q.n) + 1)
                throw invalid_input("K atom needs " + std::to_string(Q.n) + " class entries and a slot");
            a.alpha.assign(args.begin(), args.end() - 1);
            a.slot = static_cast<int>(args.back());
        } else {
            if (args.size() != 2) throw invalid_input("atom needs (class index, slot)");
            a.cls = static_cast<int>(args[0]);
            a.slot = static_cast<int>(args[1]);
        }
        out.push_back(a);
        skip();
        if (pos < expr.size()) {
            if (expr[pos] != sep) throw invalid_input(std::string("expected '") + sep + "' between atoms");
            ++pos;
        }
    }
    if (out.empty()) throw invalid_input("empty element expression");
    return out;
}

json coeff_json(const Coefficient& c) {
    return json{{"rat", c.rat.str()}, {"rad", c.rad.str()}};
}

json gk_json(const GrothendieckClass& a) {
    json out = json::array();
    for (long long x : a) out.push_back(x);
    return out;
}

json dh_json(const DHElement& x) {
    json terms = json::array();
    for (const auto& [k, c] : x) {  // map order = canonical term order
        json kap = json::array();
        for (const auto& [r, a] : k.kappa) kap.push_back(json{{"slot", r}, {"alpha", gk_json(a)}});
        json cs = json::array();
        for (const auto& [r, id] : k.c) cs.push_back(json{{"slot", r}, {"class", id}});
        terms.push_back(json{{"kappa", kap}, {"c", cs}, {"coeff", coeff_json(c)}});
    }
    return json{{"terms", terms}};
}

json lat_json(const LatticeElement& x) {
    json terms = json::array();
    for (const auto& [w, c] : x) {
        json word = json::array();
        for (const auto& [slot, f] : w)
            word.push_back(json{{"slot", slot}, {"alpha", gk_json(f.alpha)}, {"class", f.cls}});
        terms.push_back(json{{"word", word}, {"coeff", coeff_json(c)}});
    }
    return json{{"terms", terms}};
}

json class_json(const ComplexClass& cc) {
    json hom = json::array(), acyc = json::array();
    for (const auto& [s, id] : cc.hom) hom.push_back(json::array({s, id}));
    for (const auto& [r, m] : cc.acyc) acyc.push_back(json::array({r, gk_json(m)}));
    return json{{"hom", hom}, {"acyc", acyc}};
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw invalid_input("cannot open output file: " + out_path);
        out << j.dump(2) << "\n";
    }
}

int require_class(Context& C, int dim, int id) {
    auto ids = C.table.class_list(dim);
    if (id < 0 || std::find(ids.begin(), ids.end(), id) == ids.end())
        throw invalid_input("class index " + std::to_string(id) +
                            " is not in the enumeration up to dim " + std::to_string(dim) +
                            " (run `enumerate` to list indices)");
    return id;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact Hall-algebra computations for cyclic complexes of projectives\n"
        "over a finite-field path algebra.\n\n"
        "element grammar (dh-mul, lat-mul): atoms joined by '*', applied left\n"
        "to right.  K(a1,..,an,i) is a Cartan element with class (a1..an) at\n"
        "slot i; e(M,i) / Z(M,i) is the normalized generator of the module\n"
        "with class index M at slot i.  Class indices follow the canonical\n"
        "enumeration printed by `enumerate` for the same quiver, q and dim.\n"
        "htw-mul takes one complex class per side: atoms C(M,t) (stalk of\n"
        "module M at shift t) and K(v,r) (acyclic on projective P_v at shift\n"
        "r) joined by '+', meaning direct sum."};
    app.require_subcommand(1);

    std::string quiver_path, out_path;
    int q = 2, m = 3, dim = 2;
    long long budget = 1000000;
    app.add_option("--quiver", quiver_path, "quiver JSON file {vertices, arrows}")
        ->envname("BHALL_QUIVER");
    app.add_option("--q", q, "field size (prime)")->envname("BHALL_Q");
    app.add_option("--m", m, "period (0 or >= 3)")->envname("BHALL_M");
    app.add_option("--dim", dim, "total dimension bound for enumerations")->envname("BHALL_DIM");
    app.add_option("--budget", budget, "enumeration budget")->envname("BHALL_BUDGET");
    app.add_option("--out", out_path, "write JSON here instead of stdout");

    auto* c_enum = app.add_subcommand("enumerate", "list module classes up to --dim");
    auto* c_euler = app.add_subcommand("euler", "Euler form of two classes");
    std::string alpha_s, beta_s;
    c_euler->add_option("--alpha", alpha_s, "first class, comma separated")->required();
    c_euler->add_option("--beta", beta_s, "second class, comma separated")->required();
    auto* c_hall = app.add_subcommand("hall", "Hall numbers F^L_{M,N} up to --dim");
    auto* c_gamma = app.add_subcommand("gamma", "gamma^{XY}_{MN} table for one pair");
    int gm = 0, gn = 0;
    c_gamma->add_option("--M", gm, "class index of M")->required();
    c_gamma->add_option("--N", gn, "class index of N")->required();
    auto* c_htw = app.add_subcommand("htw-mul", "twisted product of two complex classes");
    std::string lhs_s, rhs_s;
    c_htw->add_option("--lhs", lhs_s, "left class, '+'-joined atoms")->required();
    c_htw->add_option("--rhs", rhs_s, "right class, '+'-joined atoms")->required();
    auto* c_dh = app.add_subcommand("dh-mul", "product in the double, normal form out");
    c_dh->add_option("--lhs", lhs_s, "left element, '*'-joined atoms")->required();
    c_dh->add_option("--rhs", rhs_s, "right element, '*'-joined atoms")->required();
    auto* c_lat = app.add_subcommand("lat-mul", "product in the lattice algebra, normal form out");
    c_lat->add_option("--lhs", lhs_s, "left element, '*'-joined atoms")->required();
    c_lat->add_option("--rhs", rhs_s, "right element, '*'-joined atoms")->required();
    auto* c_verify = app.add_subcommand("verify", "run a named identity suite");
    std::string suite, window_s;
    long long samples = 200;
    unsigned seed = 12345;
    c_verify->add_option("--suite", suite,
                         "one of: lemma2.1 lemma2.3 lemma2.5 riedtmann prop2.7 eq3.6 eq3.7 "
                         "thm3.2 cor3.3 x5")
        ->required();
    c_verify->add_option("--samples", samples, "randomized sample count");
    c_verify->add_option("--seed", seed, "random seed");
    c_verify->add_option("--window", window_s, "slot window, comma separated (m = 0 suites)");

    // the global options may follow the subcommand name
    for (CLI::App* sc : app.get_subcommands([](CLI::App*) { return true; })) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : 2;
    }

    try {
        if (quiver_path.empty()) throw invalid_input("--quiver is required");
        Quiver Q = load_quiver(quiver_path);

        if (c_euler->parsed()) {
            auto a = parse_ints(alpha_s), b = parse_ints(beta_s);
            if (a.size() != static_cast<size_t>(Q.n) || b.size() != static_cast<size_t>(Q.n))
                throw invalid_input("classes need one entry per vertex");
            emit(json{{"euler", euler_form(Q, a, b)}, {"sym", sym_euler_form(Q, a, b)}}, out_path);
            return 0;
        }

        Context C(Q, q, m, budget);

        if (c_enum->parsed()) {
            json rows = json::array();
            for (int id : C.table.class_list(dim)) {
                const Representation& R = C.rep(id);
                json dims = json::array();
                for (int d : R.dims) dims.push_back(d);
                rows.push_back(json{{"index", id},
                                    {"dims", dims},
                                    {"class", gk_json(C.cls(id))},
                                    {"aut", C.aut(id).str()}});
            }
            emit(json{{"classes", rows}}, out_path);
        } else if (c_hall->parsed()) {
            auto ids = C.table.class_list(dim);
            json rows = json::array();
            for (int lid : ids)
                for (int mid : ids)
                    for (int nid : ids) {
                        if (C.cls(lid) != gk_add(C.cls(mid), C.cls(nid))) continue;
                        Integer f = hall_number(C, lid, mid, nid);
                        if (f == 0) continue;
                        rows.push_back(
                            json{{"L", lid}, {"M", mid}, {"N", nid}, {"F", f.str()}});
                    }
            emit(json{{"table", rows}}, out_path);
        } else if (c_gamma->parsed()) {
            require_class(C, dim, gm);
            require_class(C, dim, gn);
            json rows = json::array();
            for (const auto& [xy, g] : gamma_count(C, gm, gn))
                rows.push_back(json{{"X", xy.first}, {"Y", xy.second}, {"gamma", g.str()}});
            emit(json{{"terms", rows}}, out_path);
        } else if (c_htw->parsed()) {
            auto build = [&](const std::string& s) {
                ComplexClass cc;
                for (const Atom& a : parse_atoms(Q, s, '+', true)) {
                    if (a.kind == 'C') {
                        require_class(C, dim, a.cls);
                        if (a.cls == 0) continue;
                        int slot = slot_mod(-a.slot, C.m);
                        auto [it, fresh] = cc.hom.emplace(slot, a.cls);
                        if (!fresh)
                            it->second = C.intern(
                                rep_direct_sum(Q, C.q, C.rep(it->second), C.rep(a.cls)).rep);
                    } else if (a.kind == 'K') {
                        // K(v, r): one copy of the acyclic complex on P_v
                        int v = a.cls;
                        if (v < 0 || v >= Q.n) throw invalid_input("K(v, r): v must be a vertex index");
                        int slot = C.m != 0 ? slot_mod(a.slot, C.m) : a.slot;
                        auto& mult = cc.acyc[slot];
                        if (mult.empty()) mult.assign(static_cast<size_t>(Q.n), 0);
                        mult[static_cast<size_t>(v)] += 1;
                    } else {
                        throw invalid_input("htw-mul sides take C and K atoms only");
                    }
                }
                return cc;
            };
            ComplexClass a = build(lhs_s), b = build(rhs_s);
            json terms = json::array();
            for (const auto& [cc, co] : htw_multiply(C, a, b))
                terms.push_back(json{{"class", class_json(cc)}, {"coeff", coeff_json(co)}});
            emit(json{{"lhs", class_json(a)}, {"rhs", class_json(b)}, {"terms", terms}}, out_path);
        } else if (c_dh->parsed()) {
            auto build = [&](const std::string& s) {
                DHElement x = dh_unit();
                for (const Atom& a : parse_atoms(Q, s, '*')) {
                    if (a.kind == 'K')
                        x = dh_multiply(C, x, k_monomial(C, a.alpha, a.slot));
                    else if (a.kind == 'e' || a.kind == 'Z')
                        x = dh_multiply(C, x, e_generator(C, require_class(C, dim, a.cls), a.slot));
                    else
                        throw invalid_input("dh-mul takes K and e atoms");
                }
                return x;
            };
            DHElement r = dh_multiply(C, build(lhs_s), build(rhs_s));
            emit(dh_json(r), out_path);
            std::cerr << dh_str(C, r) << "\n";
        } else if (c_lat->parsed()) {
            auto build = [&](const std::string& s) {
                LatticeElement x = lat_unit();
                for (const Atom& a : parse_atoms(Q, s, '*')) {
                    if (a.kind == 'K')
                        x = lat_multiply(C, x, lat_k(C, a.alpha, a.slot));
                    else if (a.kind == 'Z' || a.kind == 'e')
                        x = lat_multiply(C, x, lat_z(C, require_class(C, dim, a.cls), a.slot));
                    else
                        throw invalid_input("lat-mul takes K and Z atoms");
                }
                return x;
            };
            LatticeElement r = lat_multiply(C, build(lhs_s), build(rhs_s));
            emit(lat_json(r), out_path);
            std::cerr << lat_str(C, r) << "\n";
        } else if (c_verify->parsed()) {
            VerifyConfig cfg;
            cfg.dim = dim;
            cfg.samples = samples;
            cfg.seed = seed;
            if (!window_s.empty())
                for (long long w : parse_ints(window_s)) cfg.window.push_back(static_cast<int>(w));
            VerifyReport rep = verify_suite(C, suite, cfg);
            emit(json::parse(verify_report_json(rep)), out_path);
            if (!rep.ok()) {
                std::cerr << rep.suite << ": " << rep.failures.size() << " failures over "
                          << rep.instances << " instances\n";
                return 1;
            }
            std::cerr << rep.suite << ": ok, " << rep.instances << " instances\n";
        }
        return 0;
    } catch (const budget_exceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const invalid_input& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const bhall_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    }
}
