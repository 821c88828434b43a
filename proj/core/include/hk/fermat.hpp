#pragma once

#include "hk/numberfield.hpp"
#include "hk/poly.hpp"
#include "hk/report.hpp"
#include "hk/mat.hpp"

#include <array>
#include <optional>

namespace hk {

// Polynomial data of the quartic-surface / sextic-fourfold example, loaded
// from the data directory (env HK_DATA_DIR overrides the compiled-in path).
struct FermatData {
    MultiPoly<Rat> f, q, f1, f2, f3;       // vars z0..z3
    std::array<MultiPoly<Rat>, 6> F;       // vars y0..y6
    std::array<MultiPoly<Rat>, 5> A;       // vars h0..h6
    MultiPoly<Rat> sextic;                 // vars x0..x5
    std::array<MultiPoly<Rat>, 7> phi;     // z0 q, .., z3 q, -f1, -f2, -f3
};

const FermatData& fermat_data();
std::string fermat_data_dir();

// polarization matrix B of a quadratic form: F(x) = x^T B x
QMat bilinear_form(const MultiPoly<Rat>& F);

// the map to P^5 given by the bilinear forms of F5, F0, F1, F2, F4, F3
// (in that order); p, q must satisfy all six quadrics, p != q.
QVec phi_L(const QVec& p, const QVec& q);

// exact rational points on the image of the map
QVec conic_point(const Int& s, const Int& t);                       // image of n
std::optional<QVec> second_quartic_point(const Int& u, const Int& w);  // limit along n'

Report verify_del_pezzo();
Report verify_mukai_umemura();
Report verify_sextic(int samples, unsigned long long seed);
Report verify_very_singular();
Report verify_line_on_s10();
Report verify_conic_image();

}  // namespace hk
