#include <doctest.h>

#include "qsc/fulton_woodward.hpp"
#include "qsc/quantum.hpp"

using namespace qsc;

namespace {

SchubertIndex ix(int n, int r, std::vector<int> e) {
    return SchubertIndex(GrContext(n, r), std::move(e));
}

}  // namespace

TEST_SUITE("fulton_woodward") {

TEST_CASE("minimal degree examples") {
    CHECK(min_q_degree(ix(4, 2, {1, 2}), ix(4, 2, {1, 2})).d == 2);
    CHECK(min_q_degree(ix(4, 2, {1, 2}), ix(4, 2, {3, 4})).d == 0);
    CHECK(min_q_degree(ix(4, 2, {2, 4}), ix(4, 2, {1, 3})).d == 0);
    auto m = min_q_degree(ix(4, 2, {1, 2}), ix(4, 2, {1, 2}));
    CHECK(m.maximizer == std::pair<int, int>{2, 2});
}

TEST_CASE("lowest term examples") {
    LowestTerm lt = lowest_term(ix(4, 2, {1, 2}), ix(4, 2, {1, 2}));
    CHECK(lt.d == 2);
    CHECK(lt.cls == coh_basis(ix(4, 2, {3, 4})));

    lt = lowest_term(ix(4, 2, {1, 2}), ix(4, 2, {2, 4}));
    CHECK(lt.d == 1);
    CHECK(lt.maximizer == std::pair<int, int>{2, 2});
    CHECK(lt.cls == coh_basis(ix(4, 2, {2, 4})));

    lt = lowest_term(ix(4, 2, {3, 4}), ix(4, 2, {1, 3}));
    CHECK(lt.d == 0);
    CHECK(lt.cls == coh_basis(ix(4, 2, {1, 3})));
}

TEST_CASE("verify_fw examples and small sweeps") {
    CHECK(verify_fw(ix(4, 2, {3, 4}), ix(4, 2, {3, 4})));
    for (int n = 2; n <= 5; ++n)
        for (int r = 1; r < n; ++r) {
            auto basis = all_indices(GrContext(n, r));
            for (const auto& I : basis)
                for (const auto& J : basis) {
                    CHECK(verify_fw(I, J));
                    CHECK(min_q_degree(I, J).d == min_q_degree(J, I).d);
                }
        }
}

TEST_CASE("gr(3,6) pairs") {
    auto basis = all_indices(GrContext(6, 3));
    for (const auto& I : basis)
        for (const auto& J : basis) CHECK(verify_fw(I, J));
}

}  // TEST_SUITE
