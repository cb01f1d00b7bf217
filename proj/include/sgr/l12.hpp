#pragma once

#include "sgr/derivation.hpp"
#include "sgr/leavitt.hpp"

namespace sgr {

// alpha beta^* -> (N_e(alpha) - N_e(beta)) alpha beta^*, a derivation of the
// whole Leavitt path algebra.
Derivation<LpaRing> edge_count_rule(const LpaRing& L, int edge);

// lambda * degree, the gauge derivation of a constant crossed homomorphism.
Derivation<LpaRing> degree_rule(const LpaRing& L, const Scalar& lambda);

// Largest |alpha| over the monomials alpha beta^* of a degree-0 element.
int l0_level(const LpaRing& L, const LpaElement& x);

// Spanning monomials alpha beta^* of L_0 for levels 0..level.
std::vector<LpaElement> l0_spanning(const LpaRing& L, int level);

// 2x2 matrix over L_0 parametrizing graded derivations of L(1,2).
using DeltaA = Mat<LpaElement>;

DeltaA delta_a_matrix(const LpaRing& L, const LpaElement& a1, const LpaElement& b, const LpaElement& c,
                      const LpaElement& a2);

// delta_A(e_j) = sum_i e_i A_ij and delta_A(e_j^*) = -sum_i A_ji e_i^*.
Derivation<LpaRing> delta_a_build(const LpaRing& L, const DeltaA& A);

// A_ij = e_i^* delta(e_j).
DeltaA delta_a_extract(const LpaRing& L, const Derivation<LpaRing>& d);

// [A1,A2] + delta_A1(A2) - delta_A2(A1). Throws OutOfWindow when an entry
// exceeds `level`.
DeltaA bracket_gr(const LpaRing& L, const DeltaA& A1, const DeltaA& A2, int level);

// Compares delta_{bracket_gr} with the commutator on e1, e2, e1^*, e2^*.
Report bracket_gr_check(const LpaRing& L, const DeltaA& A1, const DeltaA& A2, int level);

// delta_A(e1 r e1^*) = e1 delta_A(r) e1^* on spanning monomials up to `level`.
// Failures also check the predicted defect e1[a1,r]e1^* + e2 c r e1^* - e1 r b e2^*.
Report alpha1_commute_check(const LpaRing& L, const DeltaA& A, int level);

// A = diag(lambda, a) with lambda a scalar.
bool is_diag_scalar_form(const LpaRing& L, const DeltaA& A);

}  // namespace sgr
