#pragma once

#include "hk/mukai.hpp"
#include "hk/report.hpp"

namespace hk {

// The five period-divisor cases: a Hilbert-Chow column and four Brill-Noether
// columns, labelled by (polarization square, complement discriminant, branch).
enum class CaseLabel { HC_2d2d_a, BN_8k8k_b, BN_2d8d_a, BN_8k2_b, BN_8k6_a };

CaseLabel case_from_string(const std::string& s);
std::string case_to_string(CaseLabel l);

struct HeegnerCase {
    CaseLabel label;
    int d = 1;       // polarization square 2d on the fourfold side
    int k = 0;       // column parameter where applicable
    int gamma = 1;   // divisibility of H
    int dT = 1;      // h_T^2 / 2 on the K3 side
    BField B;
    MukaiElement v, H, E;       // E is the class of the exceptional divisor
    MukaiElement E_minus2;      // the -2 class (E itself for BN, E/2 for HC)
    int div_lambda_E = 1, div_Hperp_E = 1;  // expected table values
};

// param is d; congruences: BN_8k8k_b needs d = 0 mod 4, BN_8k2_b d = 1 mod 4,
// BN_8k6_a d = 3 mod 4.
HeegnerCase build_case(CaseLabel label, int d);

// pairings, squares and both divisibilities, computed in v-perp of the rank-24
// Mukai lattice, with the per-case witness vectors double-checked.
Report verify_case(const HeegnerCase& c);

struct TranscendentalResult {
    ZMat block;        // Gram of the non-standard block
    ZMat block_basis;  // its generators (rows, ambient coords)
    Int det_tx = 0;    // |det| of the full rank-21 complement
    Int det_pic = 0;   // |det| of the Picard sublattice
    Sublattice full;
};

TranscendentalResult transcendental_gram(CaseLabel label, int d);

// Embedding of the Picard lattice into U^3+E8(-1)^2+<-2> used per case.
std::vector<ZVec> pic_embedding(CaseLabel label, int d);

// index-2 image computation and the B-field of the conic bundle; BN labels only.
Report brcon_check(CaseLabel label, int d);
Report brcon_abstract();

// basis-change identities S M S^T for the two untwisted columns, k = 0..kmax.
Report sms_identities(int kmax);

// names: fano_plane | boss | dv | ir | s4k | div416
Report classical_example(const std::string& name);

}  // namespace hk
