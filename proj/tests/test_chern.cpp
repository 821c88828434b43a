#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hk/chern.hpp"

#include <random>

using namespace hk;

TEST_CASE("truncated products match the worked examples") {
    TruncatedClass one(1);
    CHECK(chern_product({{-1, 3, one}, {-2, 3, one}, {-3, 1, one}}) ==
          TruncatedClass(1, -12, 60));
    CHECK(chern_product({{-1, 15, one}, {-2, 15, one}, {-3, 1, one}}) ==
          TruncatedClass(1, -48, 1110));
    CHECK(chern_product({{-2, 1, one}, {0, 2, omega1_plane()}, {-1, 1, one}, {-3, 1, one}}) ==
          TruncatedClass(1, -12, 62));
}

TEST_CASE("truncated ring is commutative and associative") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-6, 6);
    for (int i = 0; i < 50; ++i) {
        TruncatedClass a(c(rng), c(rng), c(rng)), b(c(rng), c(rng), c(rng)),
            d(c(rng), c(rng), c(rng));
        CHECK(trunc_mul(a, b) == trunc_mul(b, a));
        CHECK(trunc_mul(trunc_mul(a, b), d) == trunc_mul(a, trunc_mul(b, d)));
        CHECK(trunc_mul(TruncatedClass(0, 0, c(rng)), TruncatedClass(0, c(rng), 0)).c2 == 0);
    }
}

TEST_CASE("pushforward c2") {
    CHECK(pushforward_c2(4, TruncatedClass(1, -12, 60)) == 6);
    CHECK(pushforward_c2(16, TruncatedClass(1, -48, 1110)) == 30);
    CHECK(pushforward_c2(4, TruncatedClass(1, -12, 62)) == 8);
    CHECK_THROWS(pushforward_c2(4, TruncatedClass(1, -11, 60)));
}

TEST_CASE("order-two example") {
    auto t = order_two_example();
    CHECK(t.c2_E_dual == 6);
    CHECK(t.c1_correction == 0);
    CHECK(t.c2_correction == 0);
    CHECK(t.result == 6);
}

TEST_CASE("fujiki polarization identities") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> c(-5, 5);
    QMat q(2, 2);
    for (int iter = 0; iter < 100; ++iter) {
        q(0, 0) = 2 * c(rng);
        q(1, 1) = 2 * c(rng);
        q(0, 1) = q(1, 0) = c(rng);
        QVec x = {c(rng), c(rng)}, y = {c(rng), c(rng)};
        auto ip = [&](const QVec& a, const QVec& b) {
            Rat s = 0;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) s += a[i] * q(i, j) * b[j];
            return s;
        };
        CHECK(fujiki_product(q, x, x, x, x) == Rat(3) * ip(x, x) * ip(x, x));
        CHECK(fujiki_product(q, x, x, x, y) == Rat(3) * ip(x, x) * ip(x, y));
        CHECK(fujiki_product(q, x, x, y, y) ==
              Rat(2) * ip(x, y) * ip(x, y) + ip(x, x) * ip(y, y));
    }
    // the exceptional-divisor intersection numbers
    for (int d = 1; d <= 10; ++d) {
        QMat g(2, 2);
        g(0, 0) = 2 * d;
        g(1, 1) = -2;
        QVec E = {0, 1}, HmE = {1, -1};
        CHECK(fujiki_product(g, E, HmE, HmE, HmE) == Rat(12 * (d - 1)));
        CHECK(fujiki_product(g, E, E, HmE, HmE) == Rat(4 * (3 - d)));
        CHECK(fujiki_product(g, E, E, E, HmE) == Rat(-12));
    }
}

TEST_CASE("conic invariants") {
    auto ci = conic_invariants();
    CHECK(ci.ke3 == 2 * ci.c2w);
    CHECK(ci.ke3 == 12);
    CHECK(ci.hodge == std::array<int, 6>{1, 0, 1, 21, 0, 0});
    int chi = 0;
    for (int i = 0; i < 7; ++i) chi += (i % 2 ? -1 : 1) * ci.betti[i];
    CHECK(Int(chi) == ci.c3e);
}
