#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cgm/gf2.hpp"
#include "cgm/intmat.hpp"
#include "cgm/isotropic.hpp"

namespace cgm {

// Real skew-symmetric matrix with zero diagonal. The constructor enforces
// skew-symmetry only; entries outside {-1,0,1} are admitted so that is_pu can
// report them as 2x2 violations (a PU matrix necessarily has entries in
// {-1,0,1}). Matrices produced by pu_sign always have entries in {-1,0,1}.
struct SignedSkewMatrix {
  IntMatrix mat;

  explicit SignedSkewMatrix(IntMatrix m);
  int n() const { return mat.rows; }
};

// GF(2) support: s(i,j) = 1 iff mat(i,j) != 0
Gf2Matrix support_of(const SignedSkewMatrix& a);

struct PuVerdict {
  bool pu = true;
  uint32_t violating = 0;  // first principal subset with |det| > 1, by size then mask
};

// every principal minor in {0,1,-1}; n <= 14
PuVerdict is_pu(const SignedSkewMatrix& a);

// Exhaustive search for a principally unimodular signing of a symmetric
// zero-diagonal GF(2) support; n <= 10. Signs on a spanning forest of the
// support graph are pinned to +1 (diagonal +-1 conjugation preserves all
// principal minors), the rest explored by DFS with stage-wise minor pruning.
// Returns the first signing in that order, or nullopt after exhaustion.
std::optional<SignedSkewMatrix> pu_sign(const Gf2Matrix& support);

// t-regularity of a 2-section of an isotropic 3-matroid: the section must be
// tight; decided through the delta-matroid bridge (extract, twist-normalize,
// reconstruct the support, sign).
bool is_t_regular_section(const MultimatroidSection& s);

struct TRegularResult {
  bool t_regular = true;
  std::optional<std::string> witness;  // lex-least pcs transversal whose tight section fails
};

// every tight section M[IAS(G)] - T is t-regular; 3^n transversals in lex
// order with digits p < c < s; guard at max_n (hard cap 10)
TRegularResult is_t_regular_isotropic(const IsotropicPresentation& p, int max_n = 7);

}  // namespace cgm
