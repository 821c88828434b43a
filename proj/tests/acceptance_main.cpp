// Acceptance suite: every headline identity, at exact (zero-tolerance)
// comparison, with the stated runtime budgets. One pass/fail line per
// criterion; exit 0 iff all pass.
#include "hk/brauer.hpp"
#include "hk/chern.hpp"
#include "hk/fermat.hpp"
#include "hk/heegner.hpp"
#include "hk/lattice.hpp"
#include "hk/mukai.hpp"
#include "hk/pell.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

using namespace hk;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::function<void(Report&)> run;
    double budget_ms = 0;  // 0 = no budget
};

double run_timed(const std::function<void(Report&)>& f, Report& rep) {
    auto t0 = std::chrono::steady_clock::now();
    f(rep);
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// ---- criterion 1: worked second Chern classes, < 1 ms each ----
void crit1(Report& rep) {
    TruncatedClass one(1);
    struct Case {
        std::string name;
        std::function<Int()> f;
        Int want;
    };
    std::vector<Case> cases = {
        {"odd_theta", [&] {
             return pushforward_c2(4, chern_product({{-1, 3, one}, {-2, 3, one}, {-3, 1, one}}));
         }, 6},
        {"even_theta", [&] {
             return pushforward_c2(16,
                                   chern_product({{-1, 15, one}, {-2, 15, one}, {-3, 1, one}}));
         }, 30},
        {"bx", [&] {
             return pushforward_c2(4, chern_product({{-2, 1, one},
                                                     {0, 2, omega1_plane()},
                                                     {-1, 1, one},
                                                     {-3, 1, one}}));
         }, 8},
        {"order_two", [] { return order_two_example().result; }, 6}};
    for (auto& c : cases) {
        auto t0 = std::chrono::steady_clock::now();
        Int got = c.f();
        double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        add_check(rep, c.name, c.want, got);
        add_check(rep, c.name + "_under_1ms", true, ms < 1.0);
    }
}

// ---- criterion 2: truncated products, term-exact ----
void crit2(Report& rep) {
    TruncatedClass one(1);
    add_check(rep, "product_1m12H_60H2", true,
              chern_product({{-1, 3, one}, {-2, 3, one}, {-3, 1, one}}) ==
                  TruncatedClass(1, -12, 60));
    add_check(rep, "product_1m48H_1110H2", true,
              chern_product({{-1, 15, one}, {-2, 15, one}, {-3, 1, one}}) ==
                  TruncatedClass(1, -48, 1110));
    add_check(rep, "product_1m12H_62H2", true,
              chern_product({{-2, 1, one}, {0, 2, omega1_plane()}, {-1, 1, one}, {-3, 1, one}}) ==
                  TruncatedClass(1, -12, 62));
}

// ---- criterion 3: brute-force class counts over 2^21 pairs ----
void crit3(Report& rep) {
    auto c = count_classes();
    add_check(rep, "bh0_l0", (1LL << 9) * ((1LL << 10) + 1) - 1, c.bh0_l0);
    add_check(rep, "bh0_l2", (1LL << 9) * ((1LL << 10) - 1), c.bh0_l2);
    add_check(rep, "bhhalf_l0", (1LL << 9) * ((1LL << 10) + 1), c.bhhalf_l0);
    add_check(rep, "bhhalf_l2", (1LL << 9) * ((1LL << 10) - 1), c.bhhalf_l2);
    add_check(rep, "total", (1LL << 21) - 1, c.total());
}

// ---- criterion 4: discriminant groups of the index-two sublattices ----
void crit4(Report& rep) {
    for (int d : {1, 2, 3, 4, 8}) {
        auto c0 = class_from(d, 0, 2);
        auto s0 = gamma_alpha(c0);
        auto g0 = discriminant_group(s0.induced);
        add_check(rep, "group_a0_d" + std::to_string(d),
                  detail::stringify(std::vector<Int>{2, 2, 2 * d}),
                  detail::stringify(g0.cyclic_orders));
        auto c1 = class_from(d, 1, 2);
        auto g1 = discriminant_group(gamma_alpha(c1).induced);
        add_check(rep, "group_a1_d" + std::to_string(d),
                  detail::stringify(std::vector<Int>{8 * d}),
                  detail::stringify(g1.cyclic_orders));
        // q on the dual generators v/2d, lambda/2, mu (a = 0): the closed form
        // with q(x) = x^2 is -a^2/2d + b^2 lambda^2/4 + bc since v^2 = -2d
        Lattice TK = t_K(d);
        QVec gv(21, Rat(0)), gl(21, Rat(0)), mu(21, Rat(0));
        gv[0] = Rat(1, 2 * d);
        gl[1] = gl[2] = Rat(1, 2);  // lambda = (1,1) in the first block of the rest
        mu[2] = 1;                  // lambda.mu = 1
        for (auto* g : {&gv, &gl, &mu})
            for (int i = 0; i < s0.basis.rows; ++i)
                if (!is_integer(inner(TK, *g, to_q(s0.basis.row(i)))))
                    add_bool_check(rep, "dual_membership_d" + std::to_string(d), false);
        auto q = [&](const QVec& x) { return mod_reduce(inner(TK, x, x), Rat(2)); };
        add_check(rep, "q_v_over_2d_d" + std::to_string(d), mod_reduce(Rat(-1, 2 * d), Rat(2)),
                  q(gv));
        add_check(rep, "q_lambda_half_d" + std::to_string(d), Rat(1, 2), q(gl));
        add_check(rep, "q_mu_d" + std::to_string(d), Rat(0), q(mu));
        bool closed_ok = true;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 2; ++b)
                for (int cc = 0; cc < 2; ++cc) {
                    QVec x(21, Rat(0));
                    for (int i = 0; i < 21; ++i)
                        x[i] = Rat(a) * gv[i] + Rat(b) * gl[i] + Rat(cc) * mu[i];
                    Rat closed = Rat(-a * a, 2 * d) + Rat(b * b) * Rat(2, 4) + Rat(b * cc);
                    closed_ok = closed_ok && q(x) == mod_reduce(closed, Rat(2));
                }
        add_bool_check(rep, "closed_form_d" + std::to_string(d), closed_ok);
    }
}

// ---- criterion 5: the five table columns ----
void crit5(Report& rep) {
    std::vector<std::pair<CaseLabel, std::vector<int>>> cases = {
        {CaseLabel::HC_2d2d_a, {1, 2, 3}},  {CaseLabel::BN_8k8k_b, {4, 8, 12}},
        {CaseLabel::BN_2d8d_a, {1, 2, 3}},  {CaseLabel::BN_8k2_b, {1, 5, 9}},
        {CaseLabel::BN_8k6_a, {3, 7, 11}}};
    for (auto& [label, ds] : cases)
        for (int d : ds) {
            auto r = verify_case(build_case(label, d));
            add_bool_check(rep, case_to_string(label) + "_d" + std::to_string(d), r.all_pass(),
                           std::to_string(r.failures()) + " failures");
        }
}

// ---- criterion 6: transcendental lattices and basis changes ----
void crit6(Report& rep) {
    auto expect_det = [](CaseLabel l, int d) {
        return l == CaseLabel::BN_2d8d_a ? Int(8 * d) : Int(2 * d);
    };
    std::vector<std::pair<CaseLabel, std::vector<int>>> cases = {
        {CaseLabel::HC_2d2d_a, {1, 2, 3}},  {CaseLabel::BN_8k8k_b, {4, 8, 12}},
        {CaseLabel::BN_2d8d_a, {1, 2, 3}},  {CaseLabel::BN_8k2_b, {1, 5, 9}},
        {CaseLabel::BN_8k6_a, {3, 7, 11}}};
    for (auto& [label, ds] : cases)
        for (int d : ds) {
            auto tr = transcendental_gram(label, d);
            add_check(rep, "det_" + case_to_string(label) + "_d" + std::to_string(d),
                      expect_det(label, d), tr.det_tx);
            if (label == CaseLabel::BN_8k2_b)
                add_check(rep, "picdet_d" + std::to_string(d), Int(d), tr.det_pic);
        }
    auto sms = sms_identities(5);
    add_bool_check(rep, "sms_identities_k0_5", sms.all_pass(),
                   std::to_string(sms.failures()) + " failures");
}

// ---- criterion 7: index-two image and induced B-field ----
void crit7(Report& rep) {
    add_bool_check(rep, "abstract_index", brcon_abstract().all_pass());
    std::vector<std::pair<CaseLabel, std::vector<int>>> cases = {
        {CaseLabel::BN_8k8k_b, {4, 8, 12}},
        {CaseLabel::BN_2d8d_a, {1, 2, 3}},
        {CaseLabel::BN_8k2_b, {1, 5, 9}},
        {CaseLabel::BN_8k6_a, {3, 7, 11}}};
    for (auto& [label, ds] : cases)
        for (int d : ds) {
            auto r = brcon_check(label, d);
            add_bool_check(rep, case_to_string(label) + "_d" + std::to_string(d), r.all_pass(),
                           std::to_string(r.failures()) + " failures");
        }
}

// ---- criterion 8: quadruple intersection numbers ----
void crit8(Report& rep) {
    for (int d = 1; d <= 10; ++d) {
        QMat q(2, 2);
        q(0, 0) = 2 * d;
        q(1, 1) = -2;
        QVec E = {0, 1}, HmE = {1, -1};
        add_check(rep, "EHmE3_d" + std::to_string(d), Rat(12 * (d - 1)),
                  fujiki_product(q, E, HmE, HmE, HmE));
        add_check(rep, "E2HmE2_d" + std::to_string(d), Rat(4 * (3 - d)),
                  fujiki_product(q, E, E, HmE, HmE));
        add_check(rep, "E3HmE_d" + std::to_string(d), Rat(-12),
                  fujiki_product(q, E, E, E, HmE));
    }
}

// ---- criterion 9: Pell suite with brute-force cross-check to 10^6 ----
void crit9(Report& rep) {
    auto f8 = pell_fundamental(8);
    add_check(rep, "min_a2_8b2", std::string("(3,1)"),
              "(" + rat_str(Rat(f8.first)) + "," + rat_str(Rat(f8.second)) + ")");
    ParityReq oddodd{ParityReq::Odd, ParityReq::Odd};
    ParityReq beven{ParityReq::Even, ParityReq::Any};
    struct Case {
        int d;
        ParityReq req;
        long long a, b;
    };
    std::vector<Case> cases = {{8, oddodd, 1, 3},  {24, oddodd, 1, 5}, {32, oddodd, 3, 17},
                               {3, beven, 1, 2},   {11, beven, 3, 10}, {19, beven, 39, 170}};
    for (auto& cs : cases) {
        auto sols = solve_pell(cs.d, 1, cs.req, 1000000);
        bool ok = !sols.empty() && sols[0].y == cs.a && sols[0].x == cs.b;
        add_bool_check(rep, "min_d" + std::to_string(cs.d), ok);
        auto brute = solve_pell_brute(cs.d, 1, cs.req, 1000000);
        bool agree = sols.size() == brute.size();
        for (size_t i = 0; agree && i < sols.size(); ++i)
            agree = sols[i].x == brute[i].x && sols[i].y == brute[i].y;
        add_bool_check(rep, "brute_agree_d" + std::to_string(cs.d), agree);
    }
    {
        auto brute16 = solve_pell_brute(16, 1, oddodd, 1000000);
        add_check(rep, "d16_brute_empty", size_t(0), brute16.size());
        auto c16 = no_solution_certificate(16, 1, oddodd, "square-factorization");
        add_bool_check(rep, "cert_16", c16.valid);
        auto c32 = no_solution_certificate(32, 5, ParityReq{}, "modular", 5);
        add_bool_check(rep, "cert_32_5", c32.valid);
        auto brute32 = solve_pell_brute(32, 5, ParityReq{}, 1000000);
        add_check(rep, "cert_32_5_brute_empty", size_t(0), brute32.size());
    }
}

// ---- criterion 10: classical examples ----
void crit10(Report& rep) {
    for (auto name : {"fano_plane", "boss", "dv", "ir", "s4k", "div416"}) {
        auto r = classical_example(name);
        add_bool_check(rep, name, r.all_pass(), std::to_string(r.failures()) + " failures");
    }
    // the two headline integer identities, explicitly
    add_check(rep, "ir_H_sq", Int(38), Int(38 * 170 * 170 - 2 * 741 * 741));
    add_check(rep, "ir_E_sq", Int(-2), Int(38 * 39 * 39 - 2 * 170 * 170));
}

// ---- criterion 11: the polynomial suite ----
void crit11(Report& rep) {
    auto dp = verify_del_pezzo();
    add_bool_check(rep, "del_pezzo", dp.all_pass(), std::to_string(dp.failures()) + " failures");
    auto mu = verify_mukai_umemura();
    add_bool_check(rep, "mukai_umemura", mu.all_pass(),
                   std::to_string(mu.failures()) + " failures");
    auto sx = verify_sextic(25, 0x5eed);
    add_bool_check(rep, "sextic_25_samples", sx.all_pass(),
                   std::to_string(sx.failures()) + " failures");
    auto vs = verify_very_singular();
    add_bool_check(rep, "very_singular", vs.all_pass());
    auto ln = verify_line_on_s10();
    add_bool_check(rep, "line_zeta8", ln.all_pass());
    auto cn = verify_conic_image();
    add_bool_check(rep, "conic_image", cn.all_pass());
}

// ---- criterion 12: property suites ----
void crit12(Report& rep) {
    bool parity_ok = true;
    for (int d = 1; d <= 50 && parity_ok; ++d) {
        bool deven = d % 2 == 0;
        auto no_type = deven ? BrauerTypeId::Bh0_B20 : BrauerTypeId::BhHalf_B20;
        auto yes1 = deven ? BrauerTypeId::Bh0_B2Half : BrauerTypeId::Bh0;
        auto yes2 = deven ? BrauerTypeId::BhHalf : BrauerTypeId::BhHalf_B2Half;
        parity_ok = !exists_minus2_sheaf(d, no_type).exists &&
                    exists_minus2_sheaf(d, yes1).exists && exists_minus2_sheaf(d, yes2).exists;
    }
    add_bool_check(rep, "minus2_parity_d_le_50", parity_ok);

    const Lattice k3 = lat_K3();
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> coin(0, 3);
    int tested = 0;
    bool norm_ok = true;
    while (tested < 1000) {
        int d = 1 + int(rng() % 8);
        QVec coords(22);
        for (auto& x : coords) x = Rat(coin(rng) - 1, 2);
        BField B{d, coords};
        auto cls = class_of_bfield(B);
        if (cls.is_trivial) continue;
        ++tested;
        BField N = normalize_bfield(B);
        Rat bh = inner(k3, N.coords, to_q(k3_h(d)));
        Rat b2 = inner(k3, N.coords, N.coords);
        bool ok = (bh == 0 || bh == Rat(1, 2)) && (b2 == 0 || b2 == Rat(1, 2));
        ok = ok && invariant_Bh(N) == invariant_Bh(B);
        auto i2 = invariant_B2(B);
        if (i2) ok = ok && invariant_B2(N) == *i2;
        BField NN = normalize_bfield(N);
        ok = ok && NN.coords == N.coords;
        auto cn = class_of_bfield(N);
        ok = ok && cn.a == cls.a;
        for (int i = 0; i < 20 && ok; ++i) ok = (cn.lambda[i] - cls.lambda[i]) % 2 == 0;
        norm_ok = norm_ok && ok;
    }
    add_bool_check(rep, "normalize_1000_random", norm_ok);

    // discriminant group order equals |det| on random small lattices, against
    // a dual-coset counting oracle
    std::uniform_int_distribution<int> diag(-3, 3), off(-2, 2);
    int done = 0;
    bool disc_ok = true;
    while (done < 200) {
        int n = 1 + int(rng() % 3);
        ZMat g(n, n);
        for (int i = 0; i < n; ++i) {
            g(i, i) = 2 * diag(rng);
            for (int j = i + 1; j < n; ++j) g(i, j) = g(j, i) = off(rng);
        }
        Int dt = det_z(g);
        if (dt == 0 || abs(dt) > 40) continue;
        ++done;
        Lattice L{g};
        auto dg = discriminant_group(L);
        long long D = abs(dt).convert_to<long long>();
        // oracle: count x in (1/D)Z^n mod Z^n pairing integrally with Z^n
        long long count = 0;
        std::vector<long long> k(n, 0);
        for (;;) {
            bool integral = true;
            for (int i = 0; i < n && integral; ++i) {
                long long s = 0;
                for (int j = 0; j < n; ++j) s += g(i, j).convert_to<long long>() * k[j];
                integral = (s % D) == 0;
            }
            if (integral) ++count;
            int p = 0;
            while (p < n && ++k[p] == D) k[p++] = 0;
            if (p == n) break;
        }
        disc_ok = disc_ok && dg.order() == Int(count) && Int(count) == abs(dt);
    }
    add_bool_check(rep, "disc_order_200_random", disc_ok);
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "worked c2 values (6, 30, 8, 6) under 1 ms each", crit1, 0},
        {2, "truncated total Chern class products, term-exact", crit2, 0},
        {3, "class counts 2^9(2^10+1)-1 / 2^9(2^10-1) / ... over 2^21 pairs", crit3, 10000},
        {4, "discriminant groups Z/2d+Z/2+Z/2 and Z/8d with the dual q-form", crit4, 0},
        {5, "five table columns: squares, pairings, divisibilities", crit5, 1000},
        {6, "transcendental determinants and S M S^T identities", crit6, 0},
        {7, "index-two image and induced B-field per column", crit7, 0},
        {8, "quadruple intersection numbers for d = 1..10", crit8, 0},
        {9, "Pell minima, certificates, brute force to 10^6", crit9, 5000},
        {10, "classical example identities", crit10, 0},
        {11, "quartic/sextic polynomial suite", crit11, 30000},
        {12, "property suites (parity sweep, 1000 normalizations, 200 lattices)", crit12, 0},
    };
    int failures = 0;
    for (auto& c : criteria) {
        Report rep;
        rep.suite = "criterion" + std::to_string(c.id);
        double ms = run_timed(c.run, rep);
        bool in_budget = c.budget_ms <= 0 || ms < c.budget_ms;
        bool pass = rep.all_pass() && in_budget;
        std::printf("[%s] criterion %2d: %s (%.1f ms%s)\n", pass ? "PASS" : "FAIL", c.id,
                    c.title.c_str(), ms,
                    in_budget ? "" : " OVER BUDGET");
        if (!pass) {
            ++failures;
            for (auto& ch : rep.checks)
                if (!ch.pass)
                    std::printf("       %s: expected=%s got=%s %s\n", ch.name.c_str(),
                                ch.expected.c_str(), ch.got.c_str(), ch.context.c_str());
        }
    }
    std::printf("%d/12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
