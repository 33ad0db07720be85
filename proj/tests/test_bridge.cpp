#include <doctest.h>

#include "qsc/transform.hpp"
#include "qsc/typea_bridge.hpp"

using namespace qsc;

namespace {

SchubertIndex ix(int n, int r, std::vector<int> e) {
    return SchubertIndex(GrContext(n, r), std::move(e));
}

}  // namespace

TEST_SUITE("typea_bridge") {

TEST_CASE("permutation round trips") {
    RootSystem rs = RootSystem::build("A", 3);
    for (const auto& w : enumerate_weyl(rs)) {
        Perm p = weyl_to_perm(rs, w);
        CHECK(perm_to_weyl(rs, p) == w);
    }
    Perm p{2, 4, 1, 3};
    CHECK(perm_compose(perm_inverse(p), p) == perm_identity(4));
}

TEST_CASE("subset representatives") {
    GrContext ctx(4, 2);
    SchubertIndex I = ix(4, 2, {1, 3});
    Perm p = subset_to_perm(I);
    CHECK(p == Perm{2, 4, 1, 3});
    CHECK(perm_to_subset(ctx, p) == I);
}

TEST_CASE("center_to_weyl is the cyclic shift") {
    for (int n = 3; n <= 6; ++n) {
        RootSystem rs = RootSystem::build("A", n - 1);
        for (int k = 1; k < n; ++k) {
            WeylElement w = center_to_weyl(rs, cyclic_center_element(rs, k));
            CHECK(weyl_to_perm(rs, w) == subtract_perm(n, k));
        }
    }
}

TEST_CASE("bruhat codim matches index codim, n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        RootSystem rs = RootSystem::build("A", n - 1);
        for (int r = 1; r < n; ++r) {
            GrContext ctx(n, r);
            ParabolicChoice P = grassmann_parabolic(rs, r);
            for (const auto& I : all_indices(ctx)) {
                WeylElement w = perm_to_weyl(rs, subset_to_perm(I));
                CHECK(canonicalize(rs, P, w) == w);
                CHECK(bruhat_codim(rs, P, w) == codim(I));
            }
        }
    }
}

TEST_CASE("spec example: codims 3 and 4 in Gr(2,4)") {
    RootSystem rs = RootSystem::build("A", 3);
    ParabolicChoice P = grassmann_parabolic(rs, 2);
    CHECK(bruhat_codim(rs, P, perm_to_weyl(rs, subset_to_perm(ix(4, 2, {1, 3})))) == 3);
    CHECK(bruhat_codim(rs, P, perm_to_weyl(rs, subset_to_perm(ix(4, 2, {1, 2})))) == 4);
}

TEST_CASE("shifted cosets and codim shifts, Gr(2,4)") {
    GrContext ctx(4, 2);
    RootSystem rs = RootSystem::build("A", 3);
    ParabolicChoice P = grassmann_parabolic(rs, 2);
    for (const auto& I : all_indices(ctx)) {
        WeylElement w = perm_to_weyl(rs, subset_to_perm(I));
        for (int k = 1; k < 4; ++k) {
            CentralElement c = cyclic_center_element(rs, k);
            ShiftResult s = shift(I, k);
            WeylElement target = perm_to_weyl(rs, subset_to_perm(s.index));
            CHECK(canonicalize(rs, P, center_to_weyl(rs, c) * w) == target);
            CHECK(codim_shift(rs, P, c, w) == codim(s.index) - codim(I));
        }
    }
}

TEST_CASE("operator exponents match shift counts up to the power correction") {
    GrContext ctx(4, 2);
    RootSystem rs = RootSystem::build("A", 3);
    ParabolicChoice P = grassmann_parabolic(rs, 2);
    SchubertIndex unit = fundamental_index(ctx);
    for (const auto& I : all_indices(ctx)) {
        WeylElement w = perm_to_weyl(rs, subset_to_perm(I));
        for (int k = 0; k < 4; ++k) {
            auto e = tc_exponent(rs, P, cyclic_center_element(rs, k), w);
            REQUIRE(e.size() == 1);
            // T^k = q^{count(unit,k)} T_{Theta^k} as operators
            CHECK(e[0] == shift(I, k).count - shift(unit, k).count);
        }
    }
}

TEST_CASE("degree shift reproduces the instance transformation") {
    GrContext ctx(4, 2);
    RootSystem rs = RootSystem::build("A", 3);
    ParabolicChoice P = grassmann_parabolic(rs, 2);
    auto rep = [&](const SchubertIndex& I) { return perm_to_weyl(rs, subset_to_perm(I)); };

    // the pinned example: all classes the point, shifts (2,1,1)
    SchubertIndex pt = ix(4, 2, {1, 2});
    std::vector<WeylElement> us{rep(pt), rep(pt), rep(pt)};
    std::vector<CentralElement> cs{cyclic_center_element(rs, 2), cyclic_center_element(rs, 1),
                                   cyclic_center_element(rs, 1)};
    CHECK(degree_shift(rs, P, DegreeVector{2}, us, cs) == DegreeVector{0});

    // a sample sweep including shifts past the box width
    auto basis = all_indices(ctx);
    for (const auto& I1 : basis)
        for (const auto& I2 : basis) {
            const SchubertIndex& I3 = basis[(codim(I1) + 2 * codim(I2)) % basis.size()];
            GWInstance inst(ctx, {I1, I2, I3}, 3);
            std::vector<WeylElement> u{rep(I1), rep(I2), rep(I3)};
            for (std::vector<int> comp : {std::vector<int>{3, 1, 0}, std::vector<int>{1, 1, 2},
                                          std::vector<int>{4, 0, 0}, std::vector<int>{0, 3, 1}}) {
                std::vector<CentralElement> c;
                for (int m = 0; m < 3; ++m) c.push_back(cyclic_center_element(rs, comp[m]));
                DegreeVector zp = degree_shift(rs, P, DegreeVector{3}, u, c);
                TransformResult tr = transform_instance(inst, ShiftVector(ctx, comp));
                REQUIRE(zp.size() == 1);
                CHECK(zp[0] == tr.raw_degree);
            }
        }
}

TEST_CASE("dimension condition bridge, Gr(2,4), d <= 3") {
    GrContext ctx(4, 2);
    RootSystem rs = RootSystem::build("A", 3);
    ParabolicChoice P = grassmann_parabolic(rs, 2);
    auto basis = all_indices(ctx);
    for (const auto& I1 : basis)
        for (const auto& I2 : basis)
            for (const auto& I3 : basis) {
                std::vector<WeylElement> ws{perm_to_weyl(rs, subset_to_perm(I1)),
                                            perm_to_weyl(rs, subset_to_perm(I2)),
                                            perm_to_weyl(rs, subset_to_perm(I3))};
                for (int d = 0; d <= 3; ++d) {
                    bool lie = dim_condition_check(rs, P, ws, DegreeVector{d});
                    bool gr = codim(I1) + codim(I2) + codim(I3) == 4 * d + 4;
                    CHECK(lie == gr);
                }
            }
}

}  // TEST_SUITE
