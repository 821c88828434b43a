#include "hk/fermat.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hk {

MultiPoly<Rat> parse_poly(const std::string& text) {
    MultiPoly<Rat> p;
    std::istringstream is(text);
    std::string line;
    int nvars = -1;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string ctok;
        if (!(ls >> ctok)) continue;
        if (ctok[0] == '#') continue;
        Rat c = parse_rat(ctok);
        Expo e;
        int x;
        while (ls >> x) e.push_back(x);
        if (nvars < 0) {
            nvars = int(e.size());
            p.nvars = nvars;
        }
        if (int(e.size()) != nvars) throw std::invalid_argument("inconsistent exponent arity");
        p.add_term(e, c);
    }
    if (nvars < 0) throw std::invalid_argument("empty polynomial file");
    return p;
}

MultiPoly<Rat> load_poly_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open polynomial file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_poly(ss.str());
}

std::string poly_to_data(const MultiPoly<Rat>& p) {
    std::ostringstream os;
    for (auto& [e, c] : p.terms) {
        os << (c > 0 ? "+" : "") << c;
        for (int x : e) os << " " << x;
        os << "\n";
    }
    return os.str();
}

std::string fermat_data_dir() {
    if (const char* env = std::getenv("HK_DATA_DIR")) return std::string(env) + "/fermat";
#ifdef HK_SOURCE_DATA_DIR
    return std::string(HK_SOURCE_DATA_DIR) + "/fermat";
#else
    return "data/fermat";
#endif
}

const FermatData& fermat_data() {
    static FermatData d = [] {
        FermatData d;
        std::string dir = fermat_data_dir() + "/";
        d.f = load_poly_file(dir + "f.poly");
        d.q = load_poly_file(dir + "q.poly");
        d.f1 = load_poly_file(dir + "f1.poly");
        d.f2 = load_poly_file(dir + "f2.poly");
        d.f3 = load_poly_file(dir + "f3.poly");
        for (int j = 0; j < 6; ++j) d.F[j] = load_poly_file(dir + "F" + std::to_string(j) + ".poly");
        for (int j = 0; j < 5; ++j) d.A[j] = load_poly_file(dir + "A" + std::to_string(j) + ".poly");
        d.sextic = load_poly_file(dir + "sextic.poly");
        // the map: quadric times coordinates, then the cubics through the
        // residual quartic curve, taken with the sign that puts the image on
        // the five quadrics
        for (int i = 0; i < 4; ++i)
            d.phi[i] = MultiPoly<Rat>::variable(4, i, Rat(1)) * d.q;
        d.phi[4] = d.f1.scaled(Rat(-1));
        d.phi[5] = d.f2.scaled(Rat(-1));
        d.phi[6] = d.f3.scaled(Rat(-1));
        return d;
    }();
    return d;
}

QMat bilinear_form(const MultiPoly<Rat>& F) {
    if (F.total_degree() != 2) throw std::invalid_argument("bilinear_form: not a quadratic form");
    const int n = F.nvars;
    QMat B(n, n);
    for (auto& [e, c] : F.terms) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < e[i]; ++k) idx.push_back(i);
        if (idx.size() != 2) throw std::invalid_argument("bilinear_form: inhomogeneous input");
        if (idx[0] == idx[1]) {
            B(idx[0], idx[0]) += c;
        } else {
            B(idx[0], idx[1]) += c / Rat(2);
            B(idx[1], idx[0]) += c / Rat(2);
        }
    }
    return B;
}

namespace {

Rat bval(const QMat& B, const QVec& p, const QVec& q) {
    Rat s = 0;
    for (int i = 0; i < B.rows; ++i) {
        if (p[i] == 0) continue;
        for (int j = 0; j < B.cols; ++j) s += p[i] * B(i, j) * q[j];
    }
    return s;
}

const std::array<QMat, 6>& bforms() {
    static std::array<QMat, 6> B = [] {
        std::array<QMat, 6> B;
        for (int j = 0; j < 6; ++j) B[j] = bilinear_form(fermat_data().F[j]);
        return B;
    }();
    return B;
}

bool on_s10(const QVec& p) {
    for (int j = 0; j < 6; ++j)
        if (fermat_data().F[j].eval(p) != 0) return false;
    return true;
}

QVec normalize_pt(QVec v) {
    // clear denominators, remove content, first nonzero coordinate positive
    Int l = 1;
    for (auto& x : v) l = l / gcd_int(l, den(x)) * den(x);
    ZVec w(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        w[i] = num(v[i] * Rat(l));
        g = gcd_int(g, w[i]);
    }
    if (g == 0) throw std::invalid_argument("zero projective point");
    g = abs(g);
    Int sgn = 0;
    for (auto& x : w)
        if (x != 0) {
            sgn = x > 0 ? 1 : -1;
            break;
        }
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(w[i] / g * sgn);
    return out;
}

}  // namespace

QVec phi_L(const QVec& p, const QVec& q) {
    if (!on_s10(p) || !on_s10(q))
        throw std::invalid_argument("phi_L: points must satisfy all six quadrics");
    static const int order[6] = {5, 0, 1, 2, 4, 3};
    QVec x(6);
    bool all_zero = true;
    for (int j = 0; j < 6; ++j) {
        x[j] = bval(bforms()[order[j]], p, q);
        all_zero = all_zero && x[j] == 0;
    }
    if (all_zero) throw std::domain_error("phi_L: indeterminacy point (all six forms vanish)");
    return normalize_pt(x);
}

QVec conic_point(const Int& s, const Int& t) {
    if (s == 0 || t == 0 || abs(s) == abs(t))
        throw std::invalid_argument("conic_point: need s t (s^8 - t^8) != 0");
    QVec p(7, Rat(0));
    p[4] = Rat(-s * s);
    p[5] = Rat(s * t);
    p[6] = Rat(t * t);
    return normalize_pt(p);
}

std::optional<QVec> second_quartic_point(const Int& u, const Int& w) {
    const FermatData& D = fermat_data();
    if (u == 0 && w == 0) return std::nullopt;
    // P = n'(u, w) on the quartic surface
    QVec P = {Rat(u * u * u * u), Rat(u * u * u * w), Rat(u * w * w * w), Rat(w * w * w * w)};
    const QVec& Pv = P;
    // gradient of the quartic at P cuts out the tangent space of the cone
    QVec gf(4);
    for (int i = 0; i < 4; ++i) gf[i] = D.f.derivative(i).eval(Pv);
    int piv = -1;
    for (int i = 0; i < 4; ++i)
        if (gf[i] != 0) {
            piv = i;
            break;
        }
    if (piv < 0) return std::nullopt;
    // value of the map along a tangent direction transverse to the curve
    std::array<QVec, 7> grads;
    for (int j = 0; j < 7; ++j) {
        grads[j].resize(4);
        for (int i = 0; i < 4; ++i) grads[j][i] = D.phi[j].derivative(i).eval(Pv);
    }
    std::optional<QVec> result;
    for (int i = 0; i < 4; ++i) {
        if (i == piv) continue;
        QVec dir(4, Rat(0));
        dir[i] = 1;
        dir[piv] = -gf[i] / gf[piv];
        QVec val(7);
        bool nz = false;
        for (int j = 0; j < 7; ++j) {
            Rat v = 0;
            for (int k = 0; k < 4; ++k) v += grads[j][k] * dir[k];
            val[j] = v;
            nz = nz || v != 0;
        }
        if (!nz) continue;
        QVec pt = normalize_pt(val);
        if (result && !(*result == pt)) return std::nullopt;  // map not defined here
        result = pt;
    }
    if (result && !on_s10(*result)) return std::nullopt;
    return result;
}

Report verify_del_pezzo() {
    Report rep;
    rep.suite = "del_pezzo";
    const FermatData& D = fermat_data();
    std::vector<MultiPoly<Rat>> phi(D.phi.begin(), D.phi.end());
    for (int j = 0; j < 5; ++j) {
        auto comp = D.F[j].compose(phi);
        add_check(rep, "F" + std::to_string(j) + "_pullback_zero", true, comp.is_zero());
    }
    auto comp5 = D.F[5].compose(phi);
    add_check(rep, "F5_pullback_degree", 6, comp5.total_degree());
    auto quot = poly_divide_exact(comp5, D.f);
    add_check(rep, "F5_divisible_by_f", true, quot.has_value());
    if (quot) {
        add_check(rep, "F5_quotient_degree", 2, quot->total_degree());
        add_check(rep, "F5_quotient_is_minus_q", true, *quot == D.q.scaled(Rat(-1)));
    }
    return rep;
}

Report verify_mukai_umemura() {
    Report rep;
    rep.suite = "mukai_umemura";
    const FermatData& D = fermat_data();
    const NumberField& K = field_r5_18();
    // y_j = scale_j * h_{idx_j}
    const int idx[7] = {1, 2, 4, 5, 0, 3, 6};
    const NFElem scale[7] = {
        NFElem(18),             NFElem::gen(K, 3, -3),  NFElem::gen(K, 4, -3),
        NFElem::gen(K, 2, -18), NFElem::gen(K, 2, 1),   NFElem::gen(K, 1, 12),
        NFElem(18)};
    // the exact proportionality factors; the printed uniform constant 324
    // appears (up to sign) only at j = 3
    const NFElem cj[5] = {NFElem::gen(K, 1, 54), NFElem::gen(K, 4, 18), NFElem::gen(K, 2, 18),
                          NFElem(-324), NFElem::gen(K, 3, 54)};
    std::vector<MultiPoly<NFElem>> subst;
    for (int i = 0; i < 7; ++i) {
        Expo e(7, 0);
        e[idx[i]] = 1;
        subst.push_back(MultiPoly<NFElem>::monomial(7, e, scale[i]));
    }
    auto lift = [&](const MultiPoly<Rat>& p) {
        MultiPoly<NFElem> out(p.nvars);
        for (auto& [e, c] : p.terms) out.add_term(e, NFElem(c));
        return out;
    };
    for (int j = 0; j < 5; ++j) {
        auto lhs = lift(D.F[j]).compose(subst);
        auto rhs = lift(D.A[j]).scaled(cj[j]);
        add_check(rep, "F" + std::to_string(j) + "_proportional_to_A" + std::to_string(j), true,
                  (lhs - rhs).is_zero(), "factor " + cj[j].str());
    }
    add_check(rep, "factor_j3_magnitude", std::string("324"),
              rat_str(-cj[3].rational_part()));
    // transcription spot check from the defining data
    Expo e04(7, 0);
    e04[0] = 1;
    e04[4] = 1;
    auto it = D.A[0].terms.find(e04);
    add_check(rep, "coeff_h0h4_in_324A0", Rat(324),
              it == D.A[0].terms.end() ? Rat(0) : it->second * 324);
    return rep;
}

Report verify_very_singular() {
    Report rep;
    rep.suite = "very_singular";
    const FermatData& D = fermat_data();
    std::vector<QVec> pts = {{1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}};
    for (size_t k = 0; k < pts.size(); ++k) {
        const QVec& pt = pts[k];
        std::string tag = k == 0 ? "e0" : "e3";
        add_check(rep, "value_at_" + tag, Rat(0), D.sextic.eval(pt));
        for (int v = 0; v < 6; ++v)
            add_check(rep, "grad" + std::to_string(v) + "_at_" + tag, Rat(0),
                      D.sextic.derivative(v).eval(pt));
    }
    return rep;
}

Report verify_line_on_s10() {
    Report rep;
    rep.suite = "line_zeta8";
    const FermatData& D = fermat_data();
    const NumberField& K = field_zeta8();
    NFElem i = NFElem::gen(K, 2);       // i = z^2
    NFElem z = NFElem::gen(K, 1);       // zeta_8
    NFElem z3 = NFElem::gen(K, 3);
    add_check(rep, "zeta8_pow8_is_1", true, (z * z * z * z * z * z * z * z) == NFElem(1));
    add_check(rep, "i_squared_is_minus1", true, (i * i) == NFElem(-1));
    // line (i s : i t : z t : s : z^3 t : 0 : t)
    auto S = MultiPoly<NFElem>::variable(2, 0, NFElem(1));
    auto T = MultiPoly<NFElem>::variable(2, 1, NFElem(1));
    std::vector<MultiPoly<NFElem>> line = {S.scaled(i), T.scaled(i), T.scaled(z), S,
                                           T.scaled(z3), MultiPoly<NFElem>(2), T};
    auto lift = [&](const MultiPoly<Rat>& p) {
        MultiPoly<NFElem> out(p.nvars);
        for (auto& [e, c] : p.terms) out.add_term(e, NFElem(c));
        return out;
    };
    for (int j = 0; j < 6; ++j)
        add_check(rep, "F" + std::to_string(j) + "_on_line", true,
                  lift(D.F[j]).compose(line).is_zero());
    return rep;
}

Report verify_conic_image() {
    Report rep;
    rep.suite = "conic_image";
    const FermatData& D = fermat_data();
    // n(s,t) = (s^4, s t^3, s^3 t, t^4) as polynomials in (s, t)
    auto m = [&](int es, int et) {
        return MultiPoly<Rat>::monomial(2, Expo{es, et}, Rat(1));
    };
    std::vector<MultiPoly<Rat>> n = {m(4, 0), m(1, 3), m(3, 1), m(0, 4)};
    std::array<MultiPoly<Rat>, 7> img;
    for (int j = 0; j < 7; ++j) img[j] = D.phi[j].compose(n);
    for (int j = 0; j < 4; ++j)
        add_check(rep, "coord" + std::to_string(j) + "_zero", true, img[j].is_zero());
    // content s t (s^8 - t^8)
    MultiPoly<Rat> content = (m(9, 1) - m(1, 9));
    std::array<MultiPoly<Rat>, 3> red;
    bool exact = true;
    for (int j = 0; j < 3; ++j) {
        auto q = poly_divide_exact(img[4 + j], content);
        exact = exact && q.has_value();
        if (q) red[j] = *q;
    }
    add_check(rep, "content_divides", true, exact);
    if (exact) {
        std::array<MultiPoly<Rat>, 3> want = {m(2, 0).scaled(Rat(-1)), m(1, 1), m(0, 2)};
        bool plus = true, minus = true;
        for (int j = 0; j < 3; ++j) {
            plus = plus && red[j] == want[j];
            minus = minus && red[j] == want[j].scaled(Rat(-1));
        }
        add_bool_check(rep, "reduced_is_minus_s2_st_t2_up_to_sign", plus || minus,
                       plus ? "+" : (minus ? "-" : "mismatch"));
        // y4 y6 + y5^2 on the reduced image
        auto rel = red[0] * red[2] + red[1] * red[1];
        add_check(rep, "conic_relation", true, rel.is_zero());
    }
    return rep;
}

Report verify_sextic(int samples, unsigned long long seed) {
    Report rep;
    rep.suite = "sextic";
    const FermatData& D = fermat_data();
    add_check(rep, "term_count", 53, D.sextic.size());
    add_check(rep, "total_degree", 6, D.sextic.total_degree());
    {
        std::vector<MultiPoly<Rat>> n = {
            MultiPoly<Rat>::monomial(2, Expo{4, 0}, Rat(1)),
            MultiPoly<Rat>::monomial(2, Expo{1, 3}, Rat(1)),
            MultiPoly<Rat>::monomial(2, Expo{3, 1}, Rat(1)),
            MultiPoly<Rat>::monomial(2, Expo{0, 4}, Rat(1))};
        std::vector<MultiPoly<Rat>> np = {
            MultiPoly<Rat>::monomial(2, Expo{4, 0}, Rat(1)),
            MultiPoly<Rat>::monomial(2, Expo{3, 1}, Rat(1)),
            MultiPoly<Rat>::monomial(2, Expo{1, 3}, Rat(1)),
            MultiPoly<Rat>::monomial(2, Expo{0, 4}, Rat(1))};
        add_check(rep, "f_on_n_zero", true, D.f.compose(n).is_zero());
        add_check(rep, "q_on_n_zero", true, D.q.compose(n).is_zero());
        add_check(rep, "f_on_nprime_zero", true, D.f.compose(np).is_zero());
        add_check(rep, "q_on_nprime_zero", true, D.q.compose(np).is_zero());
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    auto small = [&] { return dist(rng); };
    int done = 0, resampled = 0;
    bool all_vanish = true, all_qn = true;
    while (done < samples) {
        int s = small(), t = small();
        if (s == 0 || t == 0 || std::abs(s) == std::abs(t)) {
            ++resampled;
            continue;
        }
        int u = small(), w = small();
        if (u == 0 || w == 0) {
            ++resampled;
            continue;
        }
        auto q = second_quartic_point(u, w);
        if (!q) {
            ++resampled;
            continue;
        }
        QVec p = conic_point(s, t);
        QVec x = phi_L(p, *q);
        Rat val = D.sextic.eval(x);
        if (val != 0) {
            all_vanish = false;
            add_check(rep, "vanishes_at_sample_" + std::to_string(done), Rat(0), val,
                      "(s,t)=(" + std::to_string(s) + "," + std::to_string(t) + ") (u,w)=(" +
                          std::to_string(u) + "," + std::to_string(w) + ")");
        }
        // a point with one factor on the conic satisfies x1 x4 - x2 x5 = 0
        Rat qn = x[1] * x[4] - x[2] * x[5];
        if (qn != 0) {
            all_qn = false;
            add_check(rep, "qn_at_sample_" + std::to_string(done), Rat(0), qn);
        }
        ++done;
    }
    add_check(rep, "samples_evaluated", samples, done);
    add_bool_check(rep, "all_samples_vanish", all_vanish,
                   "", std::to_string(resampled) + " resampled");
    add_bool_check(rep, "all_samples_satisfy_qn", all_qn);
    // pairs with both points on the conic are contracted to (0:0:0:1:0:0)
    QVec vs = phi_L(conic_point(1, 2), conic_point(2, 1));
    QVec want = {0, 0, 0, 1, 0, 0};
    add_check(rep, "conic_pair_very_singular", detail::stringify(want), detail::stringify(vs));
    // a pair on the second quartic curve
    auto q1 = second_quartic_point(1, 2), q2 = second_quartic_point(2, 1);
    if (q1 && q2) {
        QVec x = phi_L(*q1, *q2);
        add_check(rep, "nprime_pair_on_sextic", Rat(0), D.sextic.eval(x));
    }
    return rep;
}

}  // namespace hk
