#ifndef BERGE_CANONICAL_HPP
#define BERGE_CANONICAL_HPP

#include <string>

#include "berge/hypergraph.hpp"

namespace berge {

// Canonical representative of the isomorphism class: the relabeling whose
// colex-ordered subset-multiplicity vector is minimal.  Vertices are first
// partitioned by iterated incidence refinement; the minimizing permutation
// is found by backtracking inside the classes with prefix pruning.  Meant
// for desk-scale instances (the same guard as the exhaustive search).
MultiHypergraph canonical_form(const MultiHypergraph& h);

// Stable identity string of the class (serialization of canonical_form).
std::string canonical_key(const MultiHypergraph& h);

bool isomorphic(const MultiHypergraph& a, const MultiHypergraph& b);

} // namespace berge

#endif
