#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsc/classical.hpp"
#include "qsc/quantum.hpp"

namespace qsc {

struct CheckResult {
    std::string name;
    bool pass;
    std::string details;
    double seconds;
};

// Precomputed star products of all basis pairs of one Gr(r,n).
class ProductTable {
  public:
    explicit ProductTable(GrContext ctx);

    const GrContext& ctx() const { return ctx_; }
    const std::vector<SchubertIndex>& basis() const { return basis_; }
    int position(const std::vector<int>& elements) const;
    const QClass& product(int i, int j) const;
    const QClass& product(const SchubertIndex& I, const SchubertIndex& J) const;

    // Bilinear extension through the table.
    QClass mul(const QClass& x, const QClass& y) const;
    // 3-point invariant by coefficient lookup.
    std::int64_t gw(const SchubertIndex& I, const SchubertIndex& J, const SchubertIndex& K,
                    int d) const;

  private:
    GrContext ctx_;
    std::vector<SchubertIndex> basis_;
    std::map<std::vector<int>, int> positions_;
    std::vector<std::optional<QClass>> products_;  // upper triangle
};

// Cup products of all basis pairs, independent of the quantum path.
class CupTable {
  public:
    explicit CupTable(GrContext ctx);

    const std::vector<SchubertIndex>& basis() const { return basis_; }
    int position(const std::vector<int>& elements) const;
    const CohClass& product(int i, int j) const;
    CohClass mul(const CohClass& x, const CohClass& y) const;

  private:
    GrContext ctx_;
    std::vector<SchubertIndex> basis_;
    std::map<std::vector<int>, int> positions_;
    std::vector<std::optional<CohClass>> products_;
};

// Acceptance checks.  Each runs exhaustively at the stated bounds and
// reports pass/fail with a detail string.
CheckResult check_gr24_multiplication_table();
CheckResult check_transformation_formula(const std::vector<GrContext>& ctxs, int max_d);
CheckResult check_operator_identities(int max_n);
CheckResult check_fw_sweep(int max_n);
CheckResult check_pieri_degree_reduction(int max_n);
CheckResult check_lr_equivalence(int max_n);
CheckResult check_root_suite(int max_rank);
CheckResult check_bridge_consistency(const std::vector<GrContext>& ctxs);

// Further module-invariant sweeps used by the verify suites.
CheckResult check_cup_ring_axioms(int max_n);
CheckResult check_duality_pairing(int max_n);
CheckResult check_classical_limit(int max_n);
CheckResult check_q_homogeneity(int max_n);
CheckResult check_qmul_commutativity(int max_n);
CheckResult check_qmul_associativity(int max_n, int triples_per_ctx);
CheckResult check_giambelli_unit(int max_n);
CheckResult check_gw3_symmetry(int max_n);
CheckResult check_transform_roundtrip(int max_n);
CheckResult check_reduction_statistics(int max_n, int max_d);
CheckResult check_shift_composition(int max_n);

struct VerifyOptions {
    int max_n = 6;
    int max_rank = 8;
};

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts);

}  // namespace qsc
