#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hk/brauer.hpp"

#include <random>

using namespace hk;

namespace {
BField bfield_from(int d, QVec coords) { return BField{d, std::move(coords)}; }

QVec zero22() { return QVec(22, Rat(0)); }

const Lattice& K3() {
    static Lattice L = lat_K3();
    return L;
}
}  // namespace

TEST_CASE("bfield_of_class normal forms") {
    BrauerClass c{1, 1, ZVec(20, 0), false};
    BField B = bfield_of_class(c);
    CHECK(B.coords[0] == 0);
    CHECK(B.coords[1] == Rat(1, 2));
    CHECK(invariant_Bh(B) == Rat(1, 2));
    CHECK(bfield_b2(B) == 0);

    BrauerClass triv{1, 0, ZVec(20, 0), true};
    BField B0 = bfield_of_class(triv);
    CHECK(bfield_b2(B0) == 0);
    CHECK(invariant_Bh(B0) == 0);

    auto c2 = class_from(2, 0, 2);
    BField B2 = bfield_of_class(c2);
    CHECK(invariant_Bh(B2) == 0);
    CHECK(bfield_b2(B2) == Rat(1, 2));
}

TEST_CASE("invariants") {
    QVec b = zero22();
    b[1] = Rat(1, 2);  // (0, 1/2)_1
    for (int d : {1, 2, 5}) CHECK(invariant_Bh(bfield_from(d, b)) == Rat(1, 2));
    QVec half11 = zero22();
    half11[2] = half11[3] = Rat(1, 2);
    CHECK(invariant_Bh(bfield_from(3, half11)) == 0);

    // B^2 is an invariant iff 4Bh + h^2 = 0 mod 4
    CHECK(invariant_B2(bfield_from(2, half11)) == Rat(1, 2));
    CHECK_FALSE(invariant_B2(bfield_from(1, half11)).has_value());
    CHECK(invariant_B2(bfield_from(1, b)).has_value());
}

TEST_CASE("normalize_bfield worked cases") {
    // subtract an integral class
    QVec v = zero22();
    v[1] = Rat(3, 2);
    auto n1 = normalize_bfield(bfield_from(1, v));
    CHECK(n1.coords[1] == Rat(1, 2));
    for (int i = 0; i < 22; ++i)
        if (i != 1) CHECK(n1.coords[i] == 0);

    QVec w = zero22();
    w[2] = w[3] = Rat(3, 2);  // 3 * (1/2)(1,1)_2
    auto n2 = normalize_bfield(bfield_from(1, w));
    CHECK(n2.coords[2] == Rat(1, 2));
    CHECK(n2.coords[3] == Rat(1, 2));

    // integral Bh gets cleared exactly
    QVec u = zero22();
    u[2] = u[3] = Rat(1, 2);
    u[0] = 1;  // adds an integer to Bh
    auto n3 = normalize_bfield(bfield_from(2, u));
    CHECK(inner(K3(), n3.coords, to_q(k3_h(2))) == 0);

    CHECK_THROWS(normalize_bfield(bfield_from(1, zero22())));
    QVec hhalf = zero22();
    hhalf[0] = Rat(1, 2);
    hhalf[1] = Rat(1, 2);  // (1/2) h for d = 1: the trivial class
    CHECK_THROWS(normalize_bfield(bfield_from(1, hhalf)));
}

TEST_CASE("normalize_bfield is idempotent and preserves the class") {
    std::mt19937_64 rng(0xb5);
    std::uniform_int_distribution<int> coin(0, 3);
    int tested = 0;
    while (tested < 300) {
        int d = 1 + int(rng() % 6);
        QVec coords(22);
        for (auto& x : coords) x = Rat(coin(rng) - 1, 2);  // in {-1/2, 0, 1/2, 1}
        BField B = bfield_from(d, coords);
        BrauerClass cls = class_of_bfield(B);
        if (cls.is_trivial) continue;
        ++tested;
        BField N = normalize_bfield(B);
        // exact postconditions
        Rat bh = inner(K3(), N.coords, to_q(k3_h(d)));
        Rat b2 = inner(K3(), N.coords, N.coords);
        CHECK((bh == 0 || bh == Rat(1, 2)));
        CHECK((b2 == 0 || b2 == Rat(1, 2)));
        CHECK(invariant_Bh(N) == invariant_Bh(B));
        // 2B' primitive
        Int g = 0;
        for (auto& x : N.coords) g = gcd_int(g, num(Rat(2) * x));
        CHECK(abs(g) == 1);
        // same class: (a, lambda mod 2) is unchanged
        BrauerClass cn = class_of_bfield(N);
        CHECK(cn.a == cls.a);
        for (int i = 0; i < 20; ++i)
            CHECK(((cn.lambda[i] - cls.lambda[i]) % 2) == 0);
        // idempotent
        BField NN = normalize_bfield(N);
        CHECK(NN.coords == N.coords);
        // when B^2 is an invariant it is preserved
        auto i2 = invariant_B2(B);
        if (i2) CHECK(invariant_B2(N) == *i2);
    }
}

TEST_CASE("brauer types") {
    auto t1 = brauer_type(class_from(1, 0, 2));
    CHECK(t1.id == BrauerTypeId::Bh0);
    CHECK(t1.classical == "order-two point");
    CHECK_FALSE(t1.b2.has_value());
    auto t2 = brauer_type(class_from(1, 1, 2));
    CHECK(t2.id == BrauerTypeId::BhHalf_B2Half);
    CHECK(t2.classical == "odd theta");
    CHECK(t2.b2 == Rat(1, 2));
    auto t3 = brauer_type(class_from(1, 1, 0));
    CHECK(t3.classical == "even theta");
    auto t4 = brauer_type(class_from(2, 0, 0));
    CHECK(t4.id == BrauerTypeId::Bh0_B20);
    CHECK(t4.b2 == Rat(0));
    CHECK_THROWS(brauer_type(BrauerClass{1, 0, ZVec(20, 0), true}));
    CHECK_THROWS(type_from_string("odd-theta", 2));
    CHECK(type_from_string("bhhalf", 2) == BrauerTypeId::BhHalf);
}

TEST_CASE("gamma_alpha structure") {
    for (int d : {1, 2, 3, 4, 8}) {
        for (int a : {0, 1}) {
            auto sub = gamma_alpha(class_from(d, a, 2));
            CHECK(sub.basis.rows == 21);
            CHECK(abs(det_z(sub.induced.gram)) == 8 * d);
            auto dg = discriminant_group(sub.induced);
            if (a == 0)
                CHECK(dg.cyclic_orders == std::vector<Int>{2, 2, 2 * d});
            else
                CHECK(dg.cyclic_orders == std::vector<Int>{8 * d});
        }
    }
    CHECK_THROWS(gamma_alpha(BrauerClass{1, 0, ZVec(20, 0), true}));
}

TEST_CASE("discriminant form on the dual generators, a = 0") {
    // generators v/2d, lambda/2, mu with lambda.mu = 1; on them the form is
    // q(a,b,c) = -a^2/2d + b^2 lambda^2/4 + bc  (mod 2Z); note v^2 = -2d makes
    // the first term negative
    for (int d : {1, 2, 3, 4, 8}) {
        auto cls = class_from(d, 0, 2);
        Lattice TK = t_K(d);
        auto sub = gamma_alpha(cls);
        QVec g1(21, Rat(0)), g2(21, Rat(0)), mu(21, Rat(0));
        g1[0] = Rat(1, 2 * d);
        for (int i = 0; i < 20; ++i) g2[1 + i] = Rat(cls.lambda[i], 2);
        mu[1 + 1] = 1;  // (0,1) in the first hyperbolic block of Lambda'
        Lattice LP = lat_Lambda_prime();
        ZVec lam = cls.lambda, muz(20, 0);
        muz[1] = 1;
        REQUIRE(inner_z(LP, lam, muz) == 1);
        // all three pair integrally with the sublattice
        for (auto* g : {&g1, &g2, &mu})
            for (int i = 0; i < sub.basis.rows; ++i)
                CHECK(is_integer(inner(TK, *g, to_q(sub.basis.row(i)))));
        auto q = [&](const QVec& x) { return mod_reduce(inner(TK, x, x), Rat(2)); };
        CHECK(q(g1) == mod_reduce(Rat(-1, 2 * d), Rat(2)));
        CHECK(q(g2) == Rat(1, 2));  // lambda^2 = 2
        CHECK(q(mu) == 0);
        // the closed form at a few (a,b,c)
        std::mt19937 rng(23);
        for (int iter = 0; iter < 10; ++iter) {
            int a = int(rng() % 5), b = int(rng() % 3), c = int(rng() % 3);
            QVec x(21, Rat(0));
            for (int i = 0; i < 21; ++i)
                x[i] = Rat(a) * g1[i] + Rat(b) * g2[i] + Rat(c) * mu[i];
            Rat closed = Rat(-a * a, 2 * d) + Rat(b * b * 2, 4) + Rat(b * c);
            CHECK(q(x) == mod_reduce(closed, Rat(2)));
        }
    }
}

TEST_CASE("class counts") {
    auto c = count_classes();
    CHECK(c.bh0_l0 == (1LL << 9) * ((1LL << 10) + 1) - 1);
    CHECK(c.bh0_l2 == (1LL << 9) * ((1LL << 10) - 1));
    CHECK(c.bhhalf_l0 == (1LL << 9) * ((1LL << 10) + 1));
    CHECK(c.bhhalf_l2 == (1LL << 9) * ((1LL << 10) - 1));
    CHECK(c.total() == (1LL << 21) - 1);
    CHECK(c.bh0_l0 + 1 + c.bh0_l2 == (1LL << 20));
}

TEST_CASE("random classes: Bh equals a/2") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 50; ++iter) {
        int d = 1 + int(rng() % 9);
        int a = int(rng() % 2);
        ZVec lam(20);
        bool nz = a == 1;
        for (auto& x : lam) {
            x = int(rng() % 2);
            nz = nz || x != 0;
        }
        if (!nz) continue;
        BrauerClass c{d, a, lam, false};
        CHECK(invariant_Bh(bfield_of_class(c)) == Rat(a, 2));
        auto sub = gamma_alpha(c);
        CHECK(abs(det_z(sub.induced.gram)) == 8 * d);
    }
}
