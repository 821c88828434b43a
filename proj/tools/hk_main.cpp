// hk: exact-arithmetic verification CLI for the hyper-Kahler contraction /
// Brauer-class computations. Subcommand per module; JSON reports on stdout,
// --pretty for a table. Exit 0 iff all checks pass (2: bad usage, 3: bad input).
#include "CLI11.hpp"
#include "json.hpp"

#include "hk/brauer.hpp"
#include "hk/chern.hpp"
#include "hk/fermat.hpp"
#include "hk/heegner.hpp"
#include "hk/lattice.hpp"
#include "hk/mukai.hpp"
#include "hk/pell.hpp"
#include "hk/verify.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

using nlohmann::json;
using namespace hk;

namespace {

bool g_pretty = false;

int emit(const Report& rep) {
    if (g_pretty)
        std::cout << report_table(rep);
    else
        std::cout << report_json(rep) << "\n";
    return rep.all_pass() ? 0 : 1;
}

void emit_json(const json& j) {
    std::cout << (g_pretty ? j.dump(2) : j.dump()) << "\n";
}

json rat_json(const Rat& r) { return rat_str(r); }

json vec_json(const QVec& v) {
    json a = json::array();
    for (auto& x : v) a.push_back(rat_str(x));
    return a;
}

json mat_json(const ZMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json r = json::array();
        for (int j = 0; j < m.cols; ++j) r.push_back(m(i, j).convert_to<long long>());
        rows.push_back(r);
    }
    return rows;
}

Lattice lattice_from_json(const json& j) {
    ZMat g(int(j.at("gram").size()), int(j.at("gram").size()));
    for (int i = 0; i < g.rows; ++i)
        for (int c = 0; c < g.cols; ++c)
            g(i, c) = Int(j.at("gram")[i][c].get<long long>());
    if (j.contains("rank") && j["rank"].get<int>() != g.rows)
        throw std::invalid_argument("rank field disagrees with the Gram matrix");
    return Lattice{g};
}

json lattice_json(const Lattice& L) {
    return json{{"rank", L.rank()}, {"gram", mat_json(L.gram)}};
}

json read_input(const std::string& spec) {
    if (spec == "-") return json::parse(std::cin);
    std::ifstream in(spec);
    if (!in) throw std::runtime_error("cannot open " + spec);
    return json::parse(in);
}

ZVec zvec_from_json(const json& j) {
    ZVec v;
    for (auto& x : j) {
        if (x.is_string())
            v.push_back(num(parse_rat(x.get<std::string>())));
        else
            v.push_back(Int(x.get<long long>()));
    }
    return v;
}

QVec qvec_from_json(const json& j) {
    QVec v;
    for (auto& x : j) {
        if (x.is_string())
            v.push_back(parse_rat(x.get<std::string>()));
        else
            v.push_back(Rat(x.get<long long>()));
    }
    return v;
}

MukaiElement mukai_from_json(const json& j) {
    MukaiElement m;
    m.r = j.at("r").is_string() ? parse_rat(j["r"].get<std::string>()) : Rat(j["r"].get<long long>());
    m.lam = qvec_from_json(j.at("lam"));
    if (m.lam.size() != 22) throw std::invalid_argument("lam must have 22 coordinates");
    m.s = j.at("s").is_string() ? parse_rat(j["s"].get<std::string>()) : Rat(j["s"].get<long long>());
    return m;
}

unsigned long long env_seed() {
    if (const char* s = std::getenv("HK_SEED")) return std::strtoull(s, nullptr, 0);
    return 0x5eedULL;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification suite for hyper-Kahler fourfold contractions"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--pretty", g_pretty, "human-readable tables instead of JSON");

    // ---- lattice ----
    auto* lat = app.add_subcommand("lattice", "integral lattice computations");
    lat->require_subcommand(1);
    std::string lat_name = "U", lat_input = "-", lat_vec;
    long long lat_param = 0;
    long long hyp_bound = 0;
    auto* lmake = lat->add_subcommand("make", "construct a standard lattice");
    lmake->add_option("--name", lat_name, "U|E8_minus|diag|K3|Lambda_K3_2|MukaiK3|Lambda_prime");
    lmake->add_option("--param", lat_param, "parameter n for diag(n)");
    auto* ldisc = lat->add_subcommand("disc", "discriminant group of a lattice (JSON input)");
    ldisc->add_option("--json", lat_input, "file with {\"rank\":n,\"gram\":[[..]]}, or -");
    auto* ldiv = lat->add_subcommand("div", "divisibility of a vector");
    ldiv->add_option("--json", lat_input);
    ldiv->add_option("--vector", lat_vec, "comma-separated integer coords")->required();
    auto* lhyp = lat->add_subcommand("hyperbolic", "bounded search for a hyperbolic pair");
    lhyp->add_option("--json", lat_input);
    lhyp->add_option("--bound", hyp_bound);

    // ---- brauer ----
    auto* br = app.add_subcommand("brauer", "order-two Brauer classes on a degree-2d K3");
    br->require_subcommand(1);
    int br_d = 1, br_a = 0, br_l4 = 0;
    auto* bcl = br->add_subcommand("classify", "type and lattice data of a class");
    bcl->add_option("--d", br_d)->required();
    bcl->add_option("--a", br_a)->required();
    bcl->add_option("--lambda-sq-mod4", br_l4)->required();
    br->add_subcommand("count", "bucket counts over all 2^21 - 1 classes");

    // ---- mukai ----
    auto* mu = app.add_subcommand("mukai", "twisted Mukai-lattice arithmetic");
    mu->require_subcommand(1);
    std::string mu_x, mu_y, mu_type;
    int mu_d = 1;
    auto* mpair = mu->add_subcommand("pair", "Mukai pairing of two elements");
    mpair->add_option("--x", mu_x, "JSON {\"r\":..,\"lam\":[..],\"s\":..}")->required();
    mpair->add_option("--y", mu_y)->required();
    auto* mex = mu->add_subcommand("exists-minus2", "rank-two sheaf with square -2");
    mex->add_option("--d", mu_d)->required();
    mex->add_option("--type", mu_type, "brauer type label")->required();

    // ---- chern ----
    auto* ch = app.add_subcommand("chern", "truncated Chern-class computations");
    ch->require_subcommand(1);
    std::string ch_name, ch_gram, ch_vectors;
    auto* cex = ch->add_subcommand("example", "worked second Chern classes");
    cex->add_option("--name", ch_name, "order-two|odd-theta|even-theta|bx")->required();
    auto* cfv = ch->add_subcommand("fujiki", "quadruple intersection from a rank-2 form");
    cfv->add_option("--gram", ch_gram, "a,b;b,c")->required();
    cfv->add_option("--vectors", ch_vectors, "x0,x1;y0,y1;z0,z1;w0,w1")->required();

    // ---- heegner ----
    auto* he = app.add_subcommand("heegner", "period-divisor case constructions");
    he->require_subcommand(1);
    std::string he_label, he_name;
    int he_param = 1;
    bool he_verify = false;
    auto* hcase = he->add_subcommand("case", "build (and verify) a table column");
    hcase->add_option("--label", he_label,
                      "HC_2d2d_a|BN_8k8k_b|BN_2d8d_a|BN_8k2_b|BN_8k6_a")->required();
    hcase->add_option("--param", he_param, "the integer d")->required();
    hcase->add_flag("--verify", he_verify);
    auto* hcl = he->add_subcommand("classical", "classical example identities");
    hcl->add_option("--name", he_name, "fano_plane|boss|dv|ir|s4k|div416")->required();

    // ---- pell ----
    auto* pe = app.add_subcommand("pell", "Pell equations and birationality criteria");
    pe->require_subcommand(1);
    long long pe_D = 0, pe_N = 1;
    std::string pe_parity, pe_column;
    long long pe_bound = 1000000;
    int pe_d = 0;
    auto* psolve = pe->add_subcommand("solve", "solutions of x^2 - D y^2 = N");
    psolve->add_option("--D", pe_D)->required();
    psolve->add_option("--N", pe_N);
    psolve->add_option("--parity", pe_parity, "comma list of a-odd,a-even,b-odd,b-even");
    psolve->add_option("--bound", pe_bound);
    auto* ph2 = pe->add_subcommand("hilb2", "birationality to a Hilbert square");
    ph2->add_option("--column", pe_column, "8d8d_b|2d2d_2")->required();
    ph2->add_option("--d", pe_d)->required();
    pe->add_subcommand("boss", "nef cone rays of the degree-16 Hilbert square");

    // ---- fermat ----
    auto* fe = app.add_subcommand("fermat", "quartic-surface / sextic-fourfold checks");
    fe->require_subcommand(1);
    std::string fe_check;
    int fe_samples = 25;
    unsigned long long fe_seed = env_seed();
    auto* fver = fe->add_subcommand("verify", "run one polynomial verification");
    fver->add_option("--check", fe_check, "del-pezzo|mu|sextic|very-singular|line|conic")
        ->required();
    fver->add_option("--samples", fe_samples);
    fver->add_option("--seed", fe_seed);

    // ---- verify-all ----
    auto* va = app.add_subcommand("verify-all", "run the full reproduction suite");
    int va_samples = 25;
    unsigned long long va_seed = env_seed();
    bool va_fast = false;
    va->add_option("--samples", va_samples);
    va->add_option("--seed", va_seed);
    va->add_flag("--fast", va_fast, "skip the 2^21 class enumeration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (lmake->parsed()) {
            Lattice L = make_standard(lat_name, Int(lat_param));
            emit_json(json{{"name", lat_name},
                           {"rank", L.rank()},
                           {"gram", mat_json(L.gram)},
                           {"det", rat_str(Rat(det_z(L.gram)))}});
            return 0;
        }
        if (ldisc->parsed()) {
            Lattice L = lattice_from_json(read_input(lat_input));
            auto dg = discriminant_group(L);
            json orders = json::array(), qs = json::array();
            for (auto& o : dg.cyclic_orders) orders.push_back(o.convert_to<long long>());
            for (auto& q : dg.q_values) qs.push_back(rat_str(q));
            emit_json(json{{"orders", orders}, {"q", qs},
                           {"order", rat_str(Rat(dg.order()))}});
            return 0;
        }
        if (ldiv->parsed()) {
            Lattice L = lattice_from_json(read_input(lat_input));
            ZVec v;
            std::stringstream ss(lat_vec);
            std::string tok;
            while (std::getline(ss, tok, ',')) v.push_back(Int(tok));
            emit_json(json{{"divisibility", rat_str(Rat(divisibility(L, v)))}});
            return 0;
        }
        if (lhyp->parsed()) {
            Lattice L = lattice_from_json(read_input(lat_input));
            auto pair = find_hyperbolic_pair(L, Int(hyp_bound));
            if (!pair) {
                emit_json(json{{"found", false}, {"note", "not found (bounded search)"}});
                return 0;
            }
            emit_json(json{{"found", true},
                           {"u", vec_json(to_q(pair->first))},
                           {"v", vec_json(to_q(pair->second))}});
            return 0;
        }
        if (bcl->parsed()) {
            auto cls = class_from(br_d, br_a, br_l4);
            auto ty = brauer_type(cls);
            auto sub = gamma_alpha(cls);
            auto dg = discriminant_group(sub.induced);
            json orders = json::array();
            for (auto& o : dg.cyclic_orders) orders.push_back(o.convert_to<long long>());
            json out{{"type", ty.label},
                     {"Bh", rat_str(ty.bh)},
                     {"B2", ty.b2 ? rat_str(*ty.b2) : "not an invariant"},
                     {"gamma_disc", orders}};
            if (!ty.classical.empty()) out["classical"] = ty.classical;
            emit_json(out);
            return 0;
        }
        if (br->get_subcommand("count")->parsed()) {
            auto c = count_classes();
            emit_json(json{{"bh0_l0", c.bh0_l0},
                           {"bh0_l2", c.bh0_l2},
                           {"bhhalf_l0", c.bhhalf_l0},
                           {"bhhalf_l2", c.bhhalf_l2},
                           {"total", c.total()}});
            return 0;
        }
        if (mpair->parsed()) {
            auto x = mukai_from_json(json::parse(mu_x));
            auto y = mukai_from_json(json::parse(mu_y));
            emit_json(json{{"pairing", rat_str(mukai_pairing(x, y))}});
            return 0;
        }
        if (mex->parsed()) {
            auto res = exists_minus2_sheaf(mu_d, type_from_string(mu_type, mu_d));
            json out{{"exists", res.exists}};
            if (res.exists) {
                out["witness"] = json{{"r", rat_str(res.witness->r)},
                                      {"lam", vec_json(res.witness->lam)},
                                      {"s", rat_str(res.witness->s)}};
            } else {
                json residues = json::array();
                for (auto& [k, m] : res.residues)
                    residues.push_back(json{{"k_mod2", k}, {"v2_mod4", m}});
                out["residues"] = residues;
            }
            emit_json(out);
            return 0;
        }
        if (cex->parsed()) {
            TruncatedClass one(1);
            json out;
            if (ch_name == "order-two") {
                out = json{{"got", rat_str(Rat(order_two_example().result))}};
            } else if (ch_name == "odd-theta") {
                auto p = chern_product({{-1, 3, one}, {-2, 3, one}, {-3, 1, one}});
                out = json{{"got", rat_str(Rat(pushforward_c2(4, p)))}};
            } else if (ch_name == "even-theta") {
                auto p = chern_product({{-1, 15, one}, {-2, 15, one}, {-3, 1, one}});
                out = json{{"got", rat_str(Rat(pushforward_c2(16, p)))}};
            } else if (ch_name == "bx") {
                auto p =
                    chern_product({{-2, 1, one}, {0, 2, omega1_plane()}, {-1, 1, one}, {-3, 1, one}});
                out = json{{"got", rat_str(Rat(pushforward_c2(4, p)))}};
            } else {
                throw std::invalid_argument("unknown example: " + ch_name);
            }
            emit_json(out);
            return 0;
        }
        if (cfv->parsed()) {
            auto parse_pairs = [](const std::string& s) {
                std::vector<QVec> out;
                std::stringstream ss(s);
                std::string grp;
                while (std::getline(ss, grp, ';')) {
                    QVec v;
                    std::stringstream gs(grp);
                    std::string tok;
                    while (std::getline(gs, tok, ',')) v.push_back(parse_rat(tok));
                    out.push_back(v);
                }
                return out;
            };
            auto g = parse_pairs(ch_gram);
            auto vs = parse_pairs(ch_vectors);
            if (g.size() != 2 || g[0].size() != 2 || vs.size() != 4)
                throw std::invalid_argument("fujiki: need a 2x2 Gram and four 2-vectors");
            QMat q(2, 2);
            q(0, 0) = g[0][0];
            q(0, 1) = g[0][1];
            q(1, 0) = g[1][0];
            q(1, 1) = g[1][1];
            emit_json(json{{"product", rat_str(fujiki_product(q, vs[0], vs[1], vs[2], vs[3]))}});
            return 0;
        }
        if (hcase->parsed()) {
            auto label = case_from_string(he_label);
            auto c = build_case(label, he_param);
            json out{{"label", he_label},
                     {"d", c.d},
                     {"dT", c.dT},
                     {"gamma", c.gamma},
                     {"v", json{{"r", rat_str(c.v.r)}, {"lam", vec_json(c.v.lam)}, {"s", rat_str(c.v.s)}}},
                     {"H", json{{"r", rat_str(c.H.r)}, {"lam", vec_json(c.H.lam)}, {"s", rat_str(c.H.s)}}},
                     {"E", json{{"r", rat_str(c.E.r)}, {"lam", vec_json(c.E.lam)}, {"s", rat_str(c.E.s)}}},
                     {"B", vec_json(c.B.coords)}};
            if (!he_verify) {
                emit_json(out);
                return 0;
            }
            return emit(verify_case(c));
        }
        if (hcl->parsed()) return emit(classical_example(he_name));
        if (psolve->parsed()) {
            ParityReq req;
            std::stringstream ss(pe_parity);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                if (tok == "a-odd") req.y = ParityReq::Odd;
                else if (tok == "a-even") req.y = ParityReq::Even;
                else if (tok == "b-odd") req.x = ParityReq::Odd;
                else if (tok == "b-even") req.x = ParityReq::Even;
                else if (!tok.empty()) throw std::invalid_argument("bad parity token: " + tok);
            }
            auto sols = solve_pell(pe_D, pe_N, req, pe_bound);
            json arr = json::array();
            for (auto& s : sols)
                arr.push_back(json{{"a", rat_str(Rat(s.y))},
                                   {"b", rat_str(Rat(s.x))},
                                   {"fundamental", s.fundamental}});
            emit_json(json{{"equation", "b^2 - " + std::to_string(pe_D) +
                                            " a^2 = " + std::to_string(pe_N)},
                           {"solutions", arr}});
            return 0;
        }
        if (ph2->parsed()) {
            auto dec = birational_to_hilb2(pe_column, pe_d);
            json out{{"decision", dec.birational ? "birational" : "not birational"}};
            if (dec.witness)
                out["witness"] = json{{"a", rat_str(Rat(dec.witness->y))},
                                      {"b", rat_str(Rat(dec.witness->x))}};
            if (dec.certificate)
                out["certificate"] = json{{"kind", dec.certificate->kind},
                                          {"detail", dec.certificate->detail}};
            if (!dec.note.empty()) out["note"] = dec.note;
            emit_json(out);
            return 0;
        }
        if (pe->get_subcommand("boss")->parsed()) return emit(nef_rays_boss().checks);
        if (fver->parsed()) {
            if (fe_check == "del-pezzo") return emit(verify_del_pezzo());
            if (fe_check == "mu") return emit(verify_mukai_umemura());
            if (fe_check == "sextic") return emit(verify_sextic(fe_samples, fe_seed));
            if (fe_check == "very-singular") return emit(verify_very_singular());
            if (fe_check == "line") return emit(verify_line_on_s10());
            if (fe_check == "conic") return emit(verify_conic_image());
            throw std::invalid_argument("unknown check: " + fe_check);
        }
        if (va->parsed()) {
            VerifyOptions opt;
            opt.seed = va_seed;
            opt.sextic_samples = va_samples;
            opt.run_slow = !va_fast;
            return emit(verify_all(opt));
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::runtime_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
