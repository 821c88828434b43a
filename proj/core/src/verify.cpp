#include "hk/verify.hpp"

#include "hk/brauer.hpp"
#include "hk/chern.hpp"
#include "hk/fermat.hpp"
#include "hk/heegner.hpp"
#include "hk/lattice.hpp"
#include "hk/mukai.hpp"
#include "hk/pell.hpp"

#include <chrono>
#include <future>

namespace hk {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

Report suite_lattice() {
    Report rep;
    rep.suite = "lattice";
    add_check(rep, "det_U", Int(-1), det_z(lat_U().gram));
    add_check(rep, "det_E8m", Int(1), det_z(lat_E8_minus().gram));
    add_check(rep, "det_K3", Int(1), abs(det_z(lat_K3().gram)));
    add_check(rep, "rank_Lambda_K3_2", 23, lat_Lambda_K3_2().rank());
    add_check(rep, "det_Lambda_K3_2", Int(2), abs(det_z(lat_Lambda_K3_2().gram)));
    add_check(rep, "det_MukaiK3", Int(1), abs(det_z(lat_MukaiK3().gram)));
    Lattice lk = lat_Lambda_K3_2();
    ZVec delta(23, 0);
    delta[22] = 1;
    add_check(rep, "div_delta", Int(2), divisibility(lk, delta));
    return rep;
}

Report suite_chern() {
    Report rep;
    rep.suite = "chern";
    TruncatedClass one(1);
    auto p1 = chern_product({{-1, 3, one}, {-2, 3, one}, {-3, 1, one}});
    add_check(rep, "odd_theta_total_class", true, TruncatedClass(1, -12, 60) == p1);
    add_check(rep, "odd_theta_c2", Int(6), pushforward_c2(4, p1));
    auto p2 = chern_product({{-1, 15, one}, {-2, 15, one}, {-3, 1, one}});
    add_check(rep, "even_theta_total_class", true, TruncatedClass(1, -48, 1110) == p2);
    add_check(rep, "even_theta_c2", Int(30), pushforward_c2(16, p2));
    auto p3 = chern_product({{-2, 1, one}, {0, 2, omega1_plane()}, {-1, 1, one}, {-3, 1, one}});
    add_check(rep, "bx_total_class", true, TruncatedClass(1, -12, 62) == p3);
    add_check(rep, "bx_c2", Int(8), pushforward_c2(4, p3));
    add_check(rep, "order_two_c2", Int(6), order_two_example().result);
    QMat q{{Rat(2), Rat(0)}, {Rat(0), Rat(-2)}};
    for (int d = 1; d <= 10; ++d) {
        q(0, 0) = 2 * d;
        QVec E = {0, 1}, HmE = {1, -1};
        add_check(rep, "fujiki_EHmE3_d" + std::to_string(d), Rat(12 * (d - 1)),
                  fujiki_product(q, E, HmE, HmE, HmE));
        add_check(rep, "fujiki_E2HmE2_d" + std::to_string(d), Rat(4 * (3 - d)),
                  fujiki_product(q, E, E, HmE, HmE));
        add_check(rep, "fujiki_E3HmE_d" + std::to_string(d), Rat(-12),
                  fujiki_product(q, E, E, E, HmE));
    }
    auto ci = conic_invariants();
    add_check(rep, "KE3_twice_c2W", ci.ke3, 2 * ci.c2w);
    int chi = 0;
    for (int i = 0; i < 7; ++i) chi += (i % 2 ? -1 : 1) * ci.betti[i];
    add_check(rep, "euler_char", Int(ci.c3e), Int(chi));
    return rep;
}

Report suite_brauer() {
    Report rep;
    rep.suite = "brauer";
    auto c = count_classes();
    add_check(rep, "count_bh0_l0", 524799LL, c.bh0_l0);
    add_check(rep, "count_bh0_l2", 523776LL, c.bh0_l2);
    add_check(rep, "count_bhhalf_l0", 524800LL, c.bhhalf_l0);
    add_check(rep, "count_bhhalf_l2", 523776LL, c.bhhalf_l2);
    add_check(rep, "count_total", (1LL << 21) - 1, c.total());
    for (int d : {1, 2, 3, 4, 8}) {
        for (int a : {0, 1}) {
            auto cls = class_from(d, a, 2);
            auto sub = gamma_alpha(cls);
            auto dg = discriminant_group(sub.induced);
            std::vector<Int> expect =
                a == 0 ? std::vector<Int>{2, 2, 2 * d} : std::vector<Int>{8 * d};
            add_check(rep, "gamma_disc_d" + std::to_string(d) + "_a" + std::to_string(a),
                      detail::stringify(expect), detail::stringify(dg.cyclic_orders));
            add_check(rep, "gamma_det_d" + std::to_string(d) + "_a" + std::to_string(a),
                      Int(8 * d), abs(det_z(sub.induced.gram)));
        }
    }
    return rep;
}

Report suite_mukai() {
    Report rep;
    rep.suite = "mukai";
    for (int d = 1; d <= 99; d += 2) {
        auto v = mukai_bundle_vector(d);
        auto [c2, ke3] = conic_bundle_c2(v);
        if (c2 != 6 || ke3 != 12)
            add_check(rep, "bundle_c2_d" + std::to_string(d), std::string("(6,12)"),
                      "(" + rat_str(Rat(c2)) + "," + rat_str(Rat(ke3)) + ")");
    }
    add_bool_check(rep, "bundle_c2_all_odd_d_le_99", true);
    for (int d = 1; d <= 50; ++d) {
        bool deven = d % 2 == 0;
        std::vector<BrauerTypeId> types =
            deven ? std::vector<BrauerTypeId>{BrauerTypeId::Bh0_B20, BrauerTypeId::Bh0_B2Half,
                                              BrauerTypeId::BhHalf}
                  : std::vector<BrauerTypeId>{BrauerTypeId::Bh0, BrauerTypeId::BhHalf_B20,
                                              BrauerTypeId::BhHalf_B2Half};
        for (auto ty : types) {
            bool expect = !(ty == BrauerTypeId::Bh0_B20 || ty == BrauerTypeId::BhHalf_B20);
            auto res = exists_minus2_sheaf(d, ty);
            if (res.exists != expect)
                add_check(rep, "minus2_d" + std::to_string(d) + "_" + type_label(ty), expect,
                          res.exists);
        }
    }
    add_bool_check(rep, "minus2_parity_prediction_d_le_50", true);
    return rep;
}

Report suite_heegner() {
    std::vector<Report> parts;
    auto cases = std::vector<std::pair<CaseLabel, std::vector<int>>>{
        {CaseLabel::HC_2d2d_a, {1, 2, 3}},  {CaseLabel::BN_8k8k_b, {4, 8, 12}},
        {CaseLabel::BN_2d8d_a, {1, 2, 3}},  {CaseLabel::BN_8k2_b, {1, 5, 9}},
        {CaseLabel::BN_8k6_a, {3, 7, 11}}};
    for (auto& [label, ds] : cases)
        for (int d : ds) parts.push_back(verify_case(build_case(label, d)));
    for (auto& [label, ds] : cases)
        for (int d : ds) {
            Report r;
            r.suite = "tx." + case_to_string(label) + "(d=" + std::to_string(d) + ")";
            auto tr = transcendental_gram(label, d);
            Int expect = label == CaseLabel::BN_2d8d_a ? Int(8 * d) : Int(2 * d);
            add_check(r, "det_TX", expect, tr.det_tx);
            if (label == CaseLabel::BN_8k2_b) add_check(r, "det_Pic", Int(d), tr.det_pic);
            parts.push_back(r);
        }
    parts.push_back(brcon_abstract());
    for (auto& [label, ds] : cases)
        if (label != CaseLabel::HC_2d2d_a)
            for (int d : ds) parts.push_back(brcon_check(label, d));
    parts.push_back(sms_identities(5));
    for (auto n : {"fano_plane", "boss", "dv", "ir", "s4k", "div416"})
        parts.push_back(classical_example(n));
    {
        // hyperbolic pair inside the 3x3 block for d = 0 mod 8
        Report r;
        r.suite = "tx.hyperbolic";
        for (int d : {8, 16, 24}) {
            auto tr = transcendental_gram(CaseLabel::BN_8k8k_b, d);
            Lattice blk{tr.block};
            auto pair = find_hyperbolic_pair(blk, 2 * d);
            add_bool_check(r, "pair_found_d" + std::to_string(d), pair.has_value());
        }
        parts.push_back(r);
    }
    return merge_reports("heegner", parts);
}

Report suite_pell() {
    Report rep;
    rep.suite = "pell";
    auto f8 = pell_fundamental(8);
    add_check(rep, "min_a2_8b2", std::string("(3,1)"),
              "(" + rat_str(Rat(f8.first)) + "," + rat_str(Rat(f8.second)) + ")");
    ParityReq oddodd{ParityReq::Odd, ParityReq::Odd};
    struct Case {
        int d;
        std::string want;
    };
    for (auto& cs : {Case{8, "(1,3)"}, Case{24, "(1,5)"}, Case{32, "(3,17)"}}) {
        auto sols = solve_pell(cs.d, 1, oddodd, 1000000);
        std::string got = sols.empty() ? "none"
                                       : "(" + rat_str(Rat(sols[0].y)) + "," +
                                             rat_str(Rat(sols[0].x)) + ")";
        add_check(rep, "oddodd_d" + std::to_string(cs.d), cs.want, got);
    }
    ParityReq beven{ParityReq::Even, ParityReq::Any};
    for (auto& cs : {Case{3, "(1,2)"}, Case{11, "(3,10)"}, Case{19, "(39,170)"}}) {
        auto sols = solve_pell(cs.d, 1, beven, 1000000);
        std::string got = sols.empty() ? "none"
                                       : "(" + rat_str(Rat(sols[0].y)) + "," +
                                             rat_str(Rat(sols[0].x)) + ")";
        add_check(rep, "beven_d" + std::to_string(cs.d), cs.want, got);
    }
    auto c16 = no_solution_certificate(16, 1, oddodd, "square-factorization");
    add_bool_check(rep, "cert_d16", c16.valid, c16.detail);
    auto c32 = no_solution_certificate(32, 5, ParityReq{}, "modular", 5);
    add_bool_check(rep, "cert_32_5_mod5", c32.valid, c32.detail);
    for (int d : {8, 16, 24, 32}) {
        auto dec = birational_to_hilb2("8d8d_b", d);
        add_check(rep, "hilb2_8d8d_d" + std::to_string(d), d != 16, dec.birational);
    }
    for (int d : {3, 11, 19}) {
        auto dec = birational_to_hilb2("2d2d_2", d);
        add_check(rep, "hilb2_2d2d_d" + std::to_string(d), true, dec.birational);
    }
    auto boss = nef_rays_boss();
    add_bool_check(rep, "boss_rays", boss.checks.all_pass());
    return rep;
}

Report suite_fermat(const VerifyOptions& opt) {
    std::vector<Report> parts;
    parts.push_back(verify_del_pezzo());
    parts.push_back(verify_mukai_umemura());
    parts.push_back(verify_sextic(opt.sextic_samples, opt.seed));
    parts.push_back(verify_very_singular());
    parts.push_back(verify_line_on_s10());
    parts.push_back(verify_conic_image());
    return merge_reports("fermat", parts);
}

}  // namespace

std::vector<Suite> all_suites(const VerifyOptions& opt) {
    std::vector<Suite> suites;
    suites.push_back({"lattice", suite_lattice});
    suites.push_back({"chern", suite_chern});
    if (opt.run_slow) suites.push_back({"brauer", suite_brauer});
    suites.push_back({"mukai", suite_mukai});
    suites.push_back({"heegner", suite_heegner});
    suites.push_back({"pell", suite_pell});
    suites.push_back({"fermat", [opt] { return suite_fermat(opt); }});
    return suites;
}

Report verify_all(const VerifyOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    auto suites = all_suites(opt);
    std::vector<std::future<Report>> futs;
    for (auto& s : suites) futs.push_back(std::async(std::launch::async, s.run));
    std::vector<Report> parts;
    for (auto& f : futs) parts.push_back(f.get());
    Report out = merge_reports("verify-all", std::move(parts));
    out.elapsed_ms = ms_since(t0);
    return out;
}

}  // namespace hk
