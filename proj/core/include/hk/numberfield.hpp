#pragma once

#include "hk/mat.hpp"

#include <string>

namespace hk {

// Q[x] / (x^n - tail), tail = tail[0] + tail[1] x + ... + tail[n-1] x^(n-1).
// The moduli used here (x^5 - 18, x^4 + 1) are irreducible over Q.
struct NumberField {
    std::string var = "x";
    QVec tail;
    int degree() const { return int(tail.size()); }
};

const NumberField& field_r5_18();   // r^5 = 18
const NumberField& field_zeta8();   // z^4 = -1, zeta_8 with i = z^2

struct NFElem {
    const NumberField* F = nullptr;  // nullptr: rational constant not yet embedded
    QVec c;

    NFElem() = default;
    NFElem(int v) {
        if (v != 0) c = {Rat(v)};
    }
    explicit NFElem(Rat v) {
        if (v != 0) c = {std::move(v)};
    }
    static NFElem make(const NumberField& F, QVec coeffs);
    static NFElem gen(const NumberField& F, int power = 1, Rat scale = Rat(1));

    bool is_zero() const {
        for (auto& x : c)
            if (x != 0) return false;
        return true;
    }
    bool is_rational() const;
    Rat rational_part() const;

    NFElem operator+(const NFElem& o) const;
    NFElem operator-(const NFElem& o) const;
    NFElem operator*(const NFElem& o) const;
    NFElem operator/(const NFElem& o) const;
    NFElem inverse() const;
    bool operator==(const NFElem& o) const;

    std::string str() const;
};

inline bool coeff_is_zero(const NFElem& x) { return x.is_zero(); }

}  // namespace hk
