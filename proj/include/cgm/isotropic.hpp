#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgm/gf2.hpp"
#include "cgm/graph.hpp"
#include "cgm/matroid.hpp"

namespace cgm {

// Presentation of the isotropic matroid of a looped graph: the n x 3n matrix
// (I | A | I+A) with column blocks phi, chi, psi, vertices in index order.
// Element ids: phi(v) = v, chi(v) = n+v, psi(v) = 2n+v.
struct IsotropicPresentation {
  LoopedGraph g;
  Gf2Matrix ias;  // n x 3n

  int n() const { return g.n; }
  int phi(int v) const { return v; }
  int chi(int v) const { return g.n + v; }
  int psi(int v) const { return 2 * g.n + v; }
  int vertex_of(int element) const { return element % g.n; }
  int letter_of(int element) const { return element / g.n; }  // 0=phi 1=chi 2=psi
  uint64_t column(int element) const { return ias.col_mask(element); }
  std::string element_label(int element) const;
};

IsotropicPresentation ias_presentation(const LoopedGraph& g);
BinaryMatroid isotropic_matroid(const IsotropicPresentation& p);

// Transversals and subtransversals over {p,c,s}; '-' marks unselected.
// A pcs-string has one character per vertex in index order.
bool is_total_transversal(const std::string& pcs);
std::vector<int> transversal_elements(const IsotropicPresentation& p, const std::string& pcs);
int transversal_rank(const IsotropicPresentation& p, const std::string& pcs);

BinaryMatroid transverse_matroid(const IsotropicPresentation& p, const std::string& pcs);

// circuits of the isotropic matroid that are subtransversals, size <= max_size,
// returned as pcs-strings with dashes, ordered by size then string
std::vector<std::string> transverse_circuits(const IsotropicPresentation& p, int max_size);

// (M / S) - S' where S is a subtransversal (pcs-with-dashes) and S' is the
// rest of the triples met by S; keeps labels of surviving elements
BinaryMatroid isotropic_minor(const IsotropicPresentation& p, const std::string& sub_pcs);

// Multimatroid-style section: the presentation with one transversal deleted
// (or nothing, for the full 3-matroid).
struct MultimatroidSection {
  IsotropicPresentation pres;
  std::optional<std::string> deleted;  // total pcs-string when present
  // remaining letters per vertex (2 when deleted, else 3), ascending
  std::vector<std::vector<int>> remaining;
};

MultimatroidSection multimatroid_section(const IsotropicPresentation& p, const std::string& pcs);
MultimatroidSection full_section(const IsotropicPresentation& p);

// every independent subtransversal of size n-1 extends to a dependent one
bool is_tight(const MultimatroidSection& s);

}  // namespace cgm
