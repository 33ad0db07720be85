#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsc/rational.hpp"

namespace qsc {

// Small dense integer matrix, checked arithmetic.
struct IntMatrix {
    int n = 0;
    std::vector<std::int64_t> a;  // row-major

    IntMatrix() = default;
    explicit IntMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0) {}

    static IntMatrix identity(int size);

    std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    std::vector<int> apply(const std::vector<int>& v) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;
};

// A Weyl group element carried as its action on the root lattice (simple-root
// coordinates) and on the Cartan subalgebra (simple-coroot coordinates),
// together with the inverse actions so that inversion is free.
struct WeylElement {
    IntMatrix root_act;
    IntMatrix coroot_act;
    IntMatrix root_inv;
    IntMatrix coroot_inv;

    static WeylElement identity(int rank);
    WeylElement inverse() const;
    bool is_identity() const;

    friend WeylElement operator*(const WeylElement& x, const WeylElement& y);
    friend bool operator==(const WeylElement& x, const WeylElement& y) {
        return x.root_act == y.root_act;
    }
    friend bool operator<(const WeylElement& x, const WeylElement& y) {
        return x.root_act.a < y.root_act.a;
    }
};

// A center element of the simply connected group, carried as its alcove
// vertex: the fundamental coweight of a mark-1 node, or zero for the identity.
struct CentralElement {
    int node;  // simple-root index, -1 for the identity
    std::vector<Rational> coweight;

    bool is_identity() const { return node < 0; }
};

// Subset of the simple roots generating the parabolic.
struct ParabolicChoice {
    std::vector<std::uint8_t> in_levi;

    explicit ParabolicChoice(int rank) : in_levi(rank, 0) {}
    static ParabolicChoice from_levi_nodes(int rank, const std::vector<int>& nodes);
    // Maximal parabolic: every node except sigma_node.
    static ParabolicChoice maximal(int rank, int sigma_node);

    std::vector<int> sigma() const;  // complement nodes, ascending
};

// Values of a curve class on the basis weights of the sigma nodes, ascending.
using DegreeVector = std::vector<std::int64_t>;

struct AlcoveWalkResult {
    WeylElement linear_part;
    std::vector<Rational> translation;
};

class RootSystem {
  public:
    // type_label: one of A,B,C,D,E,F,G.
    static RootSystem build(const std::string& type_label, int rank);

    std::string type_label;
    int rank = 0;
    // cartan[i][j] = alpha_i(H_j)
    std::vector<std::vector<int>> cartan;
    // All roots in simple-root coordinates, positive roots first (by height).
    std::vector<std::vector<int>> roots;
    int num_positive = 0;
    std::vector<int> marks;        // highest root coordinates
    std::vector<int> dual_marks;   // its coroot in coroot coordinates
    std::vector<int> symmetrizer;  // d_i with d_i a_ij = d_j a_ji, minimal positive
    int coxeter_number = 0;
    std::vector<WeylElement> simple_reflection;
    WeylElement theta_reflection;       // reflection in the highest root
    std::vector<Rational> rho_check;    // sum of fundamental coweights
    std::vector<Rational> alcove_point; // rho_check / (2h), interior of the alcove

    bool is_positive_root(const std::vector<int>& coords) const;
    bool is_root(const std::vector<int>& coords) const;
    // beta(x) for beta in simple-root coordinates, x in coroot coordinates.
    Rational eval_root(const std::vector<int>& beta, const std::vector<Rational>& x) const;
    std::int64_t eval_root_int(const std::vector<int>& beta, const std::vector<int>& x) const;
    // beta(H_j) row vector for a root beta.
    std::vector<std::int64_t> coroot_pairings(const std::vector<int>& beta) const;

    // Reflection in an arbitrary root.
    WeylElement reflection(const std::vector<int>& root_coords) const;

  private:
    RootSystem() = default;
};

// The identity plus one element per mark-1 simple root.
std::vector<CentralElement> center_elements(const RootSystem& rs);

// Walk a point into the closed fundamental alcove by affine simple
// reflections; the result applied to the start point lands there.
AlcoveWalkResult alcove_walk(const RootSystem& rs, const std::vector<Rational>& start);

// The Weyl element w_c with (fundamental alcove) - x_c = w_c^{-1}(alcove).
// The walk's translation part must vanish; a nonzero one is a bug.
WeylElement center_to_weyl(const RootSystem& rs, const CentralElement& c);

// Positive roots vanishing on x_c keep their sign under w_c; the ones with
// value 1 flip sign.
bool sign_check(const RootSystem& rs, const CentralElement& c);

// The unique center element whose vertex differs from x_1 + x_2 by a
// coroot-lattice vector.
CentralElement center_compose(const RootSystem& rs, const CentralElement& c1,
                              const CentralElement& c2);

CentralElement center_inverse(const RootSystem& rs, const CentralElement& c);

// The center-to-Weyl map is an injective group homomorphism.
bool phi_homomorphism_check(const RootSystem& rs);

// Minimal-length coset representative of w W_P.
WeylElement canonicalize(const RootSystem& rs, const ParabolicChoice& P, const WeylElement& w);

// Codimension of the Schubert cell of w in G/P: positive roots outside the
// Levi sent negative (canonicalizes first).
int bruhat_codim(const RootSystem& rs, const ParabolicChoice& P, const WeylElement& w);

// Sum over positive non-Levi roots beta of (w beta)(x_c); equals the
// codimension difference between w_c w and w.
std::int64_t codim_shift(const RootSystem& rs, const ParabolicChoice& P, const CentralElement& c,
                         const WeylElement& w);

// z'(omega_sigma) = z(omega_sigma) - sum_i omega_sigma(u_i^{-1} x_i), for
// center elements composing to the identity.  Intermediate values are
// rational; the result must be integral.
DegreeVector degree_shift(const RootSystem& rs, const ParabolicChoice& P, const DegreeVector& Z,
                          const std::vector<WeylElement>& us,
                          const std::vector<CentralElement>& cs);

// sum codim(w_i) == c1(T_{G/P}) . Z + dim(G/P).
bool dim_condition_check(const RootSystem& rs, const ParabolicChoice& P,
                         const std::vector<WeylElement>& ws, const DegreeVector& Z);

// For inverse center pairs: the Levi root sets correspond under w_{c1}, and
// the parabolic root-set dimensions add up transversally.
bool levi_conjugation_check(const RootSystem& rs, const CentralElement& c1,
                            const CentralElement& c2);

// Exponent vector omega_sigma(x - w^{-1} x) of the center-shift operator.
std::vector<std::int64_t> tc_exponent(const RootSystem& rs, const ParabolicChoice& P,
                                      const CentralElement& c, const WeylElement& w);

// Full Weyl group by closure; throws if the group exceeds max_size.
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, std::size_t max_size = 300000);

// Minimal-length representatives of W / W_P.
std::vector<WeylElement> min_coset_reps(const RootSystem& rs, const ParabolicChoice& P);

// Positive roots with support outside the Levi; their count is dim(G/P).
std::vector<std::vector<int>> non_levi_positive(const RootSystem& rs, const ParabolicChoice& P);

// Solve cartan * x = e_node: the fundamental coweight of a node.
std::vector<Rational> fundamental_coweight(const RootSystem& rs, int node);

}  // namespace qsc
