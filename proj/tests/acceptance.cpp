// Acceptance suite: each criterion runs exhaustively at its stated bounds,
// demands exact integer equality throughout, and must finish within its time
// budget.  One line per criterion.

#include <cstdio>
#include <string>
#include <vector>

#include "qsc/verify.hpp"

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;
    qsc::CheckResult result;
};

}  // namespace

int main() {
    using qsc::CheckResult;
    std::vector<Criterion> rows;

    rows.push_back({"1. Gr(2,4) multiplication table vs shift-reduction oracle", 1.0,
                    qsc::check_gr24_multiplication_table()});
    rows.push_back({"2. transformation formula, Gr(2,4)/Gr(2,5)/Gr(3,6), d<=3, all shift triples",
                    300.0,
                    qsc::check_transformation_formula(
                        {qsc::GrContext(4, 2), qsc::GrContext(5, 2), qsc::GrContext(6, 3)}, 3)});
    rows.push_back({"3. operator identities T(x*y)=T(x)*y and T^n=q^r, n<=6", 60.0,
                    qsc::check_operator_identities(6)});
    rows.push_back({"4. minimal q-degree and lowest term, all pairs, n<=8", 300.0,
                    qsc::check_fw_sweep(8)});
    rows.push_back({"5. Pieri q-terms admit degree-zero shifts, n<=8", 120.0,
                    qsc::check_pieri_degree_reduction(8)});
    rows.push_back({"6. classical structure constants vs LR tableaux, n<=6", 120.0,
                    qsc::check_lr_equivalence(6)});
    rows.push_back({"7. root-system suite (marks, walks, signs, phi, codim shifts)", 30.0,
                    qsc::check_root_suite(8)});
    rows.push_back({"8. type A bridge vs center_transform, Gr(2,4) and Gr(2,5)", 30.0,
                    qsc::check_bridge_consistency({qsc::GrContext(4, 2), qsc::GrContext(5, 2)})});

    bool all_pass = true;
    for (const auto& row : rows) {
        bool in_budget = row.result.seconds <= row.budget_seconds;
        bool ok = row.result.pass && in_budget;
        all_pass = all_pass && ok;
        std::printf("%s  %s  (%.2fs / budget %.0fs)%s%s\n", ok ? "PASS" : "FAIL",
                    row.name.c_str(), row.result.seconds, row.budget_seconds,
                    row.result.details.empty() ? "" : "  -- ",
                    row.result.details.c_str());
        if (row.result.pass && !in_budget) std::printf("      exceeded time budget\n");
    }
    std::printf("%s\n", all_pass ? "ACCEPTANCE: all criteria passed"
                                 : "ACCEPTANCE: FAILURES PRESENT");
    return all_pass ? 0 : 1;
}
