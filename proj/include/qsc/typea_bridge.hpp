#pragma once

#include <vector>

#include "qsc/grassmannian.hpp"
#include "qsc/rootsys.hpp"

namespace qsc {

// Type A_{n-1} dictionary: Weyl group = permutations of {1..n} acting on the
// coordinate weights, Schubert classes of Gr(r,n) = cosets of the maximal
// parabolic dropping node r.  Permutations are stored as 1-based image lists.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& f, const Perm& g);  // f after g
Perm perm_inverse(const Perm& f);

// The permutation i -> i-k mod n (zeros become n).
Perm subtract_perm(int n, int k);

// Minimal coset representative attached to an r-subset: the complement of I
// ascending on 1..r, then I ascending.  Its Schubert cell codimension in
// G/P_r equals codim(sigma(I)).
Perm subset_to_perm(const SchubertIndex& I);
SchubertIndex perm_to_subset(const GrContext& ctx, const Perm& p);

WeylElement perm_to_weyl(const RootSystem& rs, const Perm& p);
Perm weyl_to_perm(const RootSystem& rs, const WeylElement& w);

// The parabolic of Gr(r,n) inside A_{n-1}: every node except r.
ParabolicChoice grassmann_parabolic(const RootSystem& rs, int r);

// The center element whose shift action subtracts k: the mark-1 node n-k,
// or the identity when k is a multiple of n.
CentralElement cyclic_center_element(const RootSystem& rs, int k);

}  // namespace qsc
