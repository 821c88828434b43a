#include "hk/numberfield.hpp"

#include <sstream>
#include <stdexcept>

namespace hk {

const NumberField& field_r5_18() {
    static NumberField F{"r", QVec{Rat(18), Rat(0), Rat(0), Rat(0), Rat(0)}};
    return F;
}

const NumberField& field_zeta8() {
    static NumberField F{"z", QVec{Rat(-1), Rat(0), Rat(0), Rat(0)}};
    return F;
}

namespace {

QVec reduce_mod(const NumberField& F, QVec v) {
    const int n = F.degree();
    for (int i = int(v.size()) - 1; i >= n; --i) {
        if (v[i] == 0) continue;
        Rat coef = v[i];
        v[i] = 0;
        for (int j = 0; j < n; ++j) v[i - n + j] += coef * F.tail[j];
    }
    v.resize(n, Rat(0));
    return v;
}

QVec aligned(const NumberField& F, const NFElem& x) {
    QVec v(F.degree(), Rat(0));
    for (size_t i = 0; i < x.c.size() && i < v.size(); ++i) v[i] = x.c[i];
    return v;
}

const NumberField* join(const NFElem& a, const NFElem& b) {
    if (a.F && b.F && a.F != b.F) throw std::invalid_argument("mixed number fields");
    return a.F ? a.F : b.F;
}

// polynomial helpers over Q for the extended Euclid
int pdeg(const QVec& p) {
    for (int i = int(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

QVec pmul(const QVec& a, const QVec& b) {
    if (pdeg(a) < 0 || pdeg(b) < 0) return {};
    QVec r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

QVec psub(QVec a, const QVec& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
}

// a = q b + r
std::pair<QVec, QVec> pdivmod(QVec a, const QVec& b) {
    int db = pdeg(b);
    if (db < 0) throw std::domain_error("polynomial division by zero");
    QVec q(std::max<size_t>(a.size(), 1), Rat(0));
    for (int da = pdeg(a); da >= db; da = pdeg(a)) {
        Rat c = a[da] / b[db];
        int sh = da - db;
        q[sh] += c;
        for (int i = 0; i <= db; ++i) a[sh + i] -= c * b[i];
    }
    return {q, a};
}

}  // namespace

NFElem NFElem::make(const NumberField& F, QVec coeffs) {
    NFElem e;
    e.F = &F;
    e.c = reduce_mod(F, std::move(coeffs));
    return e;
}

NFElem NFElem::gen(const NumberField& F, int power, Rat scale) {
    QVec v(power + 1, Rat(0));
    v[power] = std::move(scale);
    return make(F, std::move(v));
}

bool NFElem::is_rational() const {
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

Rat NFElem::rational_part() const { return c.empty() ? Rat(0) : c[0]; }

NFElem NFElem::operator+(const NFElem& o) const {
    const NumberField* F = join(*this, o);
    NFElem r;
    r.F = F;
    size_t n = F ? F->degree() : std::max(c.size(), o.c.size());
    r.c.assign(n, Rat(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

NFElem NFElem::operator-(const NFElem& o) const {
    NFElem neg = o;
    for (auto& x : neg.c) x = -x;
    return *this + neg;
}

NFElem NFElem::operator*(const NFElem& o) const {
    const NumberField* F = join(*this, o);
    if (is_zero() || o.is_zero()) {
        NFElem z;
        z.F = F;
        if (F) z.c.assign(F->degree(), Rat(0));
        return z;
    }
    QVec prod(c.size() + o.c.size() - 1, Rat(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) prod[i + j] += c[i] * o.c[j];
    NFElem r;
    r.F = F;
    r.c = F ? reduce_mod(*F, std::move(prod)) : std::move(prod);
    return r;
}

NFElem NFElem::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (!F) {
        if (c.size() > 1) throw std::domain_error("inverse of unreduced constant");
        NFElem r;
        r.c = {Rat(1) / c[0]};
        return r;
    }
    // extended Euclid of (this, modulus) over Q[x]
    const int n = F->degree();
    QVec mod(n + 1, Rat(0));
    mod[n] = 1;
    for (int i = 0; i < n; ++i) mod[i] -= F->tail[i];
    QVec r0 = mod, r1 = aligned(*F, *this);
    QVec s0 = {Rat(0)}, s1 = {Rat(1)};
    while (pdeg(r1) > 0) {
        auto [q, r2] = pdivmod(r0, r1);
        QVec s2 = psub(s0, pmul(q, s1));
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (pdeg(r1) < 0) throw std::domain_error("not invertible (modulus not coprime)");
    Rat lead = r1[0];
    QVec inv = s1;
    for (auto& x : inv) x /= lead;
    return make(*F, std::move(inv));
}

NFElem NFElem::operator/(const NFElem& o) const { return *this * o.inverse(); }

bool NFElem::operator==(const NFElem& o) const {
    NFElem d = *this - o;
    return d.is_zero();
}

std::string NFElem::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!first) os << " + ";
        os << c[i];
        if (i >= 1) os << "*" << (F ? F->var : "x");
        if (i >= 2) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace hk
