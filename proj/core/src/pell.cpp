#include "hk/pell.hpp"

#include <set>
#include <stdexcept>

namespace hk {

std::pair<Int, Int> pell_fundamental(const Int& D) {
    if (D <= 0) throw std::invalid_argument("pell: D must be positive");
    Int a0 = isqrt(D);
    if (a0 * a0 == D) throw std::invalid_argument("pell: D must not be a perfect square");
    // continued fraction of sqrt(D); convergents until h^2 - D q^2 = 1
    Int m = 0, dd = 1, a = a0;
    Int h0 = 1, h1 = a0, q0 = 0, q1 = 1;
    for (;;) {
        if (h1 * h1 - D * q1 * q1 == 1) return {h1, q1};
        m = dd * a - m;
        dd = (D - m * m) / dd;
        a = (a0 + m) / dd;
        Int h2 = a * h1 + h0, q2 = a * q1 + q0;
        h0 = h1;
        h1 = h2;
        q0 = q1;
        q1 = q2;
    }
}

std::vector<PellSolution> solve_pell_brute(const Int& D, const Int& N, const ParityReq& req,
                                           const Int& bound) {
    std::vector<PellSolution> out;
    for (Int y = 1; y <= bound; ++y) {
        Int rhs = N + D * y * y;
        Int x;
        if (rhs >= 0 && is_square(rhs, &x) && x > 0 && req.ok(x, y))
            out.push_back(PellSolution{x, y, false});
    }
    if (!out.empty()) out.front().fundamental = true;
    return out;
}

std::vector<PellSolution> solve_pell(const Int& D, const Int& N, const ParityReq& req,
                                     const Int& bound) {
    if (D <= 0) throw std::invalid_argument("pell: D must be positive");
    Int r;
    if (is_square(D, &r)) {
        if (N == 1) throw std::invalid_argument("pell: D a perfect square is degenerate for N=1");
        return solve_pell_brute(D, N, req, bound);
    }
    if (N != 1 && N != -1) return solve_pell_brute(D, N, req, bound);
    auto [x1, y1] = pell_fundamental(D);
    std::vector<PellSolution> out;
    if (N == -1) {
        // x^2 - D y^2 = -1 solvable iff the half-period convergent gives -1;
        // scan convergent powers of a brute-force seed instead
        auto seed = solve_pell_brute(D, N, req, std::min<Int>(bound, 100000));
        if (seed.empty()) return {};
        Int x = seed.front().x, y = seed.front().y;
        bool first = true;
        while (y <= bound) {
            if (req.ok(x, y)) {
                out.push_back(PellSolution{x, y, first});
                first = false;
            }
            // multiply by the fundamental unit of norm 1
            Int xn = x1 * x + D * y1 * y, yn = x1 * y + y1 * x;
            x = xn;
            y = yn;
        }
        return out;
    }
    Int x = x1, y = y1;
    bool first = true;
    while (y <= bound) {
        if (req.ok(x, y)) {
            out.push_back(PellSolution{x, y, first});
            first = false;
        }
        Int xn = x1 * x + D * y1 * y, yn = x1 * y + y1 * x;
        x = xn;
        y = yn;
    }
    return out;
}

Certificate no_solution_certificate(const Int& D, const Int& N, const ParityReq& req,
                                    const std::string& kind, const Int& modulus) {
    if (kind == "square-factorization") {
        Int c;
        if (!is_square(D, &c)) throw std::invalid_argument("square-factorization: D not a square");
        if (N != 1) throw std::invalid_argument("square-factorization: needs N = 1");
        // (x - c y)(x + c y) = 1 over Z forces both factors +-1, hence y = 0
        if (req.y != ParityReq::Odd)
            throw std::invalid_argument(
                "square-factorization: certificate needs the constraint y odd (y = 0 otherwise "
                "solves the equation)");
        Certificate cert;
        cert.kind = kind;
        cert.detail = "(x-" + rat_str(Rat(c)) + "y)(x+" + rat_str(Rat(c)) +
                      "y)=1 forces y=0, contradicting y odd";
        cert.valid = true;
        return cert;
    }
    if (kind == "modular") {
        Int m = modulus;
        if (m <= 1) throw std::invalid_argument("modular: modulus must be > 1");
        // viable residue pairs (x,y) mod m with x^2 - D y^2 = N; pairs with
        // x = y = 0 mod p for a prime p | m with p^2 not dividing N cannot lift
        std::vector<Int> primes;
        Int mm = m;
        for (Int p = 2; p * p <= mm; ++p)
            while (mm % p == 0) {
                if (primes.empty() || primes.back() != p) primes.push_back(p);
                mm /= p;
            }
        if (mm > 1) primes.push_back(mm);
        long long viable = 0;
        std::string example;
        for (Int x = 0; x < m; ++x)
            for (Int y = 0; y < m; ++y) {
                Int v = ((x * x - D * y * y - N) % m + m) % m;
                if (v != 0) continue;
                bool killed = false;
                for (auto& p : primes)
                    if (x % p == 0 && y % p == 0 && N % (p * p) != 0) killed = true;
                if (!killed) {
                    ++viable;
                    if (example.empty())
                        example = "(" + rat_str(Rat(x)) + "," + rat_str(Rat(y)) + ")";
                }
            }
        if (viable != 0)
            throw std::invalid_argument("modular: viable residue " + example + " mod " +
                                        rat_str(Rat(m)) + "; certificate fails");
        Certificate cert;
        cert.kind = kind;
        cert.modulus = m;
        cert.detail = "no viable residues of x^2-" + rat_str(Rat(D)) + "y^2=" + rat_str(Rat(N)) +
                      " mod " + rat_str(Rat(m));
        cert.valid = true;
        return cert;
    }
    throw std::invalid_argument("unknown certificate kind: " + kind);
}

Hilb2Decision birational_to_hilb2(const std::string& column, int d) {
    Hilb2Decision dec;
    ParityReq req;
    if (column == "8d8d_b") {
        if (d % 8 != 0) throw std::invalid_argument("column 8d8d_b needs d = 0 mod 8");
        req.x = ParityReq::Odd;  // b odd
        req.y = ParityReq::Odd;  // a odd
    } else if (column == "2d2d_2") {
        if (d % 4 != 3) throw std::invalid_argument("column 2d2d_2 needs d = 3 mod 4");
        req.x = ParityReq::Even;  // b even
    } else {
        throw std::invalid_argument("unknown column: " + column);
    }
    Int D = d, root;
    if (is_square(D, &root)) {
        // e.g. d = 16: (b - 4a)(b + 4a) = 1 with a odd is impossible
        dec.birational = false;
        dec.certificate = no_solution_certificate(D, 1, req, "square-factorization");
        dec.note = "d is a perfect square";
        return dec;
    }
    auto sols = solve_pell(D, 1, req, Int(1000000));
    if (!sols.empty()) {
        dec.birational = true;
        dec.witness = sols.front();
    } else {
        dec.birational = false;
        dec.note = "no admissible solution with a <= 10^6 (bounded search)";
    }
    return dec;
}

BossRays nef_rays_boss() {
    BossRays b;
    Report rep;
    rep.suite = "boss";
    auto [x, y] = pell_fundamental(8);  // a^2 - 8 b^2 = 1 -> (a,b) = (3,1)
    b.min_solution = PellSolution{x, y, true};
    add_check(rep, "min_solution_a2_8b2", std::string("(3,1)"),
              "(" + rat_str(Rat(x)) + "," + rat_str(Rat(y)) + ")");
    // rays H and a H - 8 b xi = 3H - 8 xi; contracted -2 classes xi, H - 3 xi
    b.ray1 = {1, 0};
    b.ray2 = {x, -8 * y};
    b.contracted1 = {0, 1};
    b.contracted2 = {1, -Int(x)};
    // Pic = <16> + <-2>
    ZMat g{{Int(16), Int(0)}, {Int(0), Int(-2)}};
    auto ip = [&](const ZVec& u, const ZVec& v) {
        return u[0] * g(0, 0) * v[0] + u[1] * g(1, 1) * v[1];
    };
    add_check(rep, "H16_sq", Int(16), ip(b.ray2, b.ray2));
    add_check(rep, "Hm3xi_sq", Int(-2), ip(b.contracted2, b.contracted2));
    add_check(rep, "Hm3xi_dot_H16", Int(0), ip(b.contracted2, b.ray2));
    add_check(rep, "xi_dot_H", Int(0), ip(b.contracted1, b.ray1));
    b.no_flops = no_solution_certificate(32, 5, ParityReq{}, "modular", 5);
    add_bool_check(rep, "no_flops_cert", b.no_flops.valid, b.no_flops.detail);
    b.checks = rep;
    return b;
}

}  // namespace hk
