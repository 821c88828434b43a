#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hk/heegner.hpp"

using namespace hk;

TEST_CASE("build_case instantiates the table columns") {
    auto c = build_case(CaseLabel::BN_2d8d_a, 1);
    CHECK(c.v.r == 2);
    CHECK(c.v.s == 0);
    CHECK(c.H.r == 0);
    CHECK(c.E.s == 1);
    CHECK(mukai_pairing(c.E, c.E) == -2);

    auto hc = build_case(CaseLabel::HC_2d2d_a, 3);
    CHECK(hc.v.r == 1);
    CHECK(hc.v.s == -1);
    CHECK(hc.E.r == 2);
    CHECK(hc.E.s == 2);
    CHECK(mukai_pairing(hc.E, hc.E) == -8);
    CHECK(mukai_pairing(hc.E_minus2, hc.E_minus2) == -2);

    auto k0 = build_case(CaseLabel::BN_8k6_a, 3);  // 2d = 6
    CHECK(k0.v.s == 1);
    CHECK(k0.H.s == 3);
    CHECK(k0.E.s == 2);

    CHECK_THROWS(build_case(CaseLabel::BN_8k8k_b, 6));
    CHECK_THROWS(build_case(CaseLabel::BN_8k2_b, 2));
    CHECK_THROWS(build_case(CaseLabel::BN_8k6_a, 4));
    CHECK_THROWS(build_case(CaseLabel::HC_2d2d_a, 0));
}

TEST_CASE("verify_case passes on all columns") {
    std::vector<std::pair<CaseLabel, std::vector<int>>> cases = {
        {CaseLabel::HC_2d2d_a, {1, 2, 3, 5}},  {CaseLabel::BN_8k8k_b, {4, 8, 12}},
        {CaseLabel::BN_2d8d_a, {1, 2, 3, 4}},  {CaseLabel::BN_8k2_b, {1, 5, 9}},
        {CaseLabel::BN_8k6_a, {3, 7, 11}}};
    for (auto& [label, ds] : cases)
        for (int d : ds) {
            auto rep = verify_case(build_case(label, d));
            INFO(report_table(rep));
            CHECK(rep.all_pass());
        }
}

TEST_CASE("transcendental lattices") {
    CHECK(transcendental_gram(CaseLabel::HC_2d2d_a, 2).det_tx == 4);
    CHECK(transcendental_gram(CaseLabel::BN_2d8d_a, 1).det_tx == 8);
    auto t8 = transcendental_gram(CaseLabel::BN_8k8k_b, 8);
    CHECK(t8.det_tx == 16);
    ZMat M8{{Int(0), Int(0), Int(2)}, {Int(0), Int(-4), Int(1)}, {Int(2), Int(1), Int(-2)}};
    CHECK(t8.block == M8);
    CHECK(det_z(t8.block) == 16);
    auto t5 = transcendental_gram(CaseLabel::BN_8k2_b, 5);
    CHECK(t5.det_tx == 10);
    CHECK(t5.det_pic == 5);
    auto t7 = transcendental_gram(CaseLabel::BN_8k6_a, 7);
    CHECK(t7.det_tx == 14);
    // all block generators pair to zero with the Picard embedding by
    // construction; the full complement has rank 21
    CHECK(t7.full.basis.rows == 21);
}

TEST_CASE("basis-change identities for k = 0..5") {
    auto rep = sms_identities(5);
    INFO(report_table(rep));
    CHECK(rep.all_pass());
}

TEST_CASE("index-two image and the induced B-field") {
    auto abs_rep = brcon_abstract();
    INFO(report_table(abs_rep));
    CHECK(abs_rep.all_pass());
    std::vector<std::pair<CaseLabel, std::vector<int>>> cases = {
        {CaseLabel::BN_8k8k_b, {4, 8, 12}},
        {CaseLabel::BN_2d8d_a, {1, 2, 3}},
        {CaseLabel::BN_8k2_b, {1, 5, 9}},
        {CaseLabel::BN_8k6_a, {3, 7, 11}}};
    for (auto& [label, ds] : cases)
        for (int d : ds) {
            auto rep = brcon_check(label, d);
            INFO(report_table(rep));
            CHECK(rep.all_pass());
        }
    CHECK_THROWS(brcon_check(CaseLabel::HC_2d2d_a, 1));
}

TEST_CASE("classical examples") {
    for (auto name : {"fano_plane", "boss", "dv", "ir", "s4k", "div416"}) {
        auto rep = classical_example(name);
        INFO(report_table(rep));
        CHECK(rep.all_pass());
    }
    CHECK_THROWS(classical_example("nope"));
}

TEST_CASE("hyperbolic pair in the 8k8k block certifies the K3 transcendental lattice") {
    for (int d : {8, 16, 24}) {
        auto tr = transcendental_gram(CaseLabel::BN_8k8k_b, d);
        Lattice blk{tr.block};
        auto pair = find_hyperbolic_pair(blk, 2 * d);
        REQUIRE(pair.has_value());
        CHECK(inner_z(blk, pair->first, pair->first) == 0);
        CHECK(inner_z(blk, pair->second, pair->second) == 0);
        CHECK(inner_z(blk, pair->first, pair->second) == 1);
    }
    // no pair for d = 4 (T_X is not the K3 transcendental lattice there)
    auto tr4 = transcendental_gram(CaseLabel::BN_8k8k_b, 4);
    CHECK_FALSE(find_hyperbolic_pair(Lattice{tr4.block}, 12).has_value());
}

TEST_CASE("case labels round-trip") {
    for (auto l : {CaseLabel::HC_2d2d_a, CaseLabel::BN_8k8k_b, CaseLabel::BN_2d8d_a,
                   CaseLabel::BN_8k2_b, CaseLabel::BN_8k6_a})
        CHECK(case_from_string(case_to_string(l)) == l);
    CHECK_THROWS(case_from_string("XX"));
}
