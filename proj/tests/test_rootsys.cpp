#include <doctest.h>

#include "qsc/rootsys.hpp"

using namespace qsc;

namespace {

CentralElement find_node(const RootSystem& rs, int node) {
    for (const auto& c : center_elements(rs))
        if (c.node == node) return c;
    throw std::runtime_error("node not central");
}

}  // namespace

TEST_SUITE("rootsys") {

TEST_CASE("build: counts, marks, coxeter numbers") {
    struct Row {
        const char* label;
        int rank;
        int roots;
        int coxeter;
    };
    const Row rows[] = {
        {"A", 1, 2, 2},   {"A", 3, 12, 4},  {"A", 5, 30, 6},  {"B", 2, 8, 4},
        {"B", 4, 32, 8},  {"C", 3, 18, 6},  {"D", 4, 24, 6},  {"D", 5, 40, 8},
        {"E", 6, 72, 12}, {"E", 7, 126, 18}, {"E", 8, 240, 30}, {"F", 4, 48, 12},
        {"G", 2, 12, 6},
    };
    for (const auto& row : rows) {
        RootSystem rs = RootSystem::build(row.label, row.rank);
        CHECK(static_cast<int>(rs.roots.size()) == row.roots);
        CHECK(rs.coxeter_number == row.coxeter);
        // the highest root really is the marks vector
        CHECK(rs.is_root(rs.marks));
    }
    RootSystem a3 = RootSystem::build("A", 3);
    CHECK(a3.marks == std::vector<int>{1, 1, 1});
    RootSystem g2 = RootSystem::build("G", 2);
    CHECK(g2.marks == std::vector<int>{3, 2});
    RootSystem a1 = RootSystem::build("A", 1);
    CHECK(a1.roots.size() == 2);
    CHECK(a1.marks == std::vector<int>{1});
}

TEST_CASE("invalid type or rank is rejected") {
    CHECK_THROWS_AS(RootSystem::build("D", 3), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build("E", 5), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build("F", 3), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build("G", 3), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build("B", 1), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build("H", 3), std::invalid_argument);
}

TEST_CASE("center sizes") {
    CHECK(center_elements(RootSystem::build("A", 3)).size() == 4);
    CHECK(center_elements(RootSystem::build("B", 3)).size() == 2);
    CHECK(center_elements(RootSystem::build("C", 4)).size() == 2);
    CHECK(center_elements(RootSystem::build("D", 4)).size() == 4);
    CHECK(center_elements(RootSystem::build("E", 6)).size() == 3);
    CHECK(center_elements(RootSystem::build("E", 7)).size() == 2);
    CHECK(center_elements(RootSystem::build("E", 8)).size() == 1);
    CHECK(center_elements(RootSystem::build("F", 4)).size() == 1);
    CHECK(center_elements(RootSystem::build("G", 2)).size() == 1);
}

TEST_CASE("coweights evaluate correctly") {
    RootSystem rs = RootSystem::build("D", 4);
    for (const auto& c : center_elements(rs)) {
        if (c.is_identity()) continue;
        for (int i = 0; i < rs.rank; ++i) {
            std::vector<int> e(rs.rank, 0);
            e[i] = 1;
            Rational v = rs.eval_root(e, c.coweight);
            CHECK(v == Rational(i == c.node ? 1 : 0));
        }
        // every root evaluates in {-1,0,1}
        for (const auto& beta : rs.roots) {
            Rational v = rs.eval_root(beta, c.coweight);
            CHECK((v == Rational(-1) || v == Rational(0) || v == Rational(1)));
        }
    }
}

TEST_CASE("alcove point is interior") {
    for (const char* label : {"A", "B", "C", "D"}) {
        int rank = (label[0] == 'D') ? 4 : 3;
        RootSystem rs = RootSystem::build(label, rank);
        for (int i = 0; i < rs.rank; ++i) {
            std::vector<int> e(rs.rank, 0);
            e[i] = 1;
            CHECK(rs.eval_root(e, rs.alcove_point) > Rational(0));
        }
        CHECK(rs.eval_root(rs.marks, rs.alcove_point) < Rational(1));
    }
}

TEST_CASE("alcove walk lands inside and records the transform") {
    RootSystem rs = RootSystem::build("B", 3);
    // start well outside the fundamental alcove
    std::vector<Rational> start{Rational(-7, 3), Rational(5, 2), Rational(-11, 6)};
    AlcoveWalkResult res = alcove_walk(rs, start);
    std::vector<Rational> landed = res.linear_part.coroot_act.apply(start);
    for (int i = 0; i < rs.rank; ++i) landed[i] += res.translation[i];
    for (int i = 0; i < rs.rank; ++i) {
        std::vector<int> e(rs.rank, 0);
        e[i] = 1;
        CHECK(rs.eval_root(e, landed) >= Rational(0));
    }
    CHECK(rs.eval_root(rs.marks, landed) <= Rational(1));
    // a point already inside stays fixed
    AlcoveWalkResult noop = alcove_walk(rs, rs.alcove_point);
    CHECK(noop.linear_part.is_identity());
    for (const auto& t : noop.translation) CHECK(t.is_zero());
}

TEST_CASE("center_to_weyl identity and walk translation") {
    RootSystem rs = RootSystem::build("A", 3);
    auto elems = center_elements(rs);
    CHECK(center_to_weyl(rs, elems[0]).is_identity());
    for (const auto& c : elems) CHECK_NOTHROW(center_to_weyl(rs, c));
}

TEST_CASE("sign rule") {
    for (const char* label : {"A", "B", "C"}) {
        RootSystem rs = RootSystem::build(label, 3);
        for (const auto& c : center_elements(rs)) CHECK(sign_check(rs, c));
    }
    RootSystem d4 = RootSystem::build("D", 4);
    for (const auto& c : center_elements(d4)) CHECK(sign_check(d4, c));
}

TEST_CASE("center composition tables") {
    RootSystem a3 = RootSystem::build("A", 3);
    // Theta^1 corresponds to node 3 (0-based 2), Theta^2 to node 2 (0-based 1)
    CentralElement t1 = find_node(a3, 2);
    CentralElement t2 = center_compose(a3, t1, t1);
    CHECK(t2.node == 1);
    CentralElement t3 = center_compose(a3, t2, t1);
    CHECK(t3.node == 0);
    CHECK(center_compose(a3, t3, t1).is_identity());
    for (const auto& c : center_elements(a3))
        CHECK(center_compose(a3, c, center_elements(a3)[0]).node == c.node);

    // D4: the Klein four-group, every element its own inverse
    RootSystem d4 = RootSystem::build("D", 4);
    auto elems = center_elements(d4);
    for (const auto& c : elems) {
        CHECK(center_compose(d4, c, c).is_identity());
        CHECK(center_inverse(d4, c).node == c.node);
    }
    // composing two distinct nontrivial elements gives the third
    CentralElement x = find_node(d4, 0), y = find_node(d4, 2), z = find_node(d4, 3);
    CHECK(center_compose(d4, x, y).node == z.node);
    CHECK(center_compose(d4, y, z).node == x.node);

    // E6: cyclic of order three on the two end nodes
    RootSystem e6 = RootSystem::build("E", 6);
    auto els = center_elements(e6);
    REQUIRE(els.size() == 3);
    CHECK(center_compose(e6, els[1], els[1]).node == els[2].node);
    CHECK(center_compose(e6, els[1], els[2]).is_identity());
    CHECK(center_inverse(e6, els[1]).node == els[2].node);
}

TEST_CASE("sign rule pins the center image uniquely") {
    RootSystem rs = RootSystem::build("C", 2);
    auto elems = center_elements(rs);
    REQUIRE(elems.size() == 2);
    const CentralElement& c = elems[1];
    CHECK(sign_check(rs, c));
    // exactly one Weyl element satisfies both sign clauses for c
    WeylElement expected = center_to_weyl(rs, c).inverse();
    int matches = 0;
    for (const auto& w : enumerate_weyl(rs)) {
        bool ok = true;
        for (int k = 0; k < rs.num_positive && ok; ++k) {
            const auto& beta = rs.roots[k];
            bool pos = rs.is_positive_root(w.root_act.apply(beta));
            ok = (beta[c.node] == 0) ? pos : !pos;
        }
        if (ok) {
            ++matches;
            CHECK(w == expected);
        }
    }
    CHECK(matches == 1);
}

TEST_CASE("homomorphism and injectivity") {
    for (const char* label : {"A", "B", "C"}) {
        CHECK(phi_homomorphism_check(RootSystem::build(label, 4)));
    }
    CHECK(phi_homomorphism_check(RootSystem::build("D", 4)));
    CHECK(phi_homomorphism_check(RootSystem::build("E", 6)));
    CHECK(phi_homomorphism_check(RootSystem::build("G", 2)));  // vacuous
}

TEST_CASE("bruhat codim basics") {
    RootSystem rs = RootSystem::build("A", 3);
    ParabolicChoice P = ParabolicChoice::maximal(3, 1);
    CHECK(bruhat_codim(rs, P, WeylElement::identity(3)) == 0);
    auto reps = min_coset_reps(rs, P);
    CHECK(reps.size() == 6);  // C(4,2) cosets
    int max_codim = 0;
    for (const auto& w : reps) max_codim = std::max(max_codim, bruhat_codim(rs, P, w));
    CHECK(max_codim == 4);
    // codim is constant on cosets
    for (const auto& w : reps)
        for (const auto& s : rs.simple_reflection) {
            WeylElement moved = w * s;
            CHECK(bruhat_codim(rs, P, moved) >= 0);
        }
}

TEST_CASE("codim_shift equals the direct difference") {
    for (const char* label : {"A", "B"}) {
        RootSystem rs = RootSystem::build(label, 3);
        auto elems = center_elements(rs);
        for (int mask = 0; mask < 8; ++mask) {
            ParabolicChoice P(3);
            for (int i = 0; i < 3; ++i) P.in_levi[i] = (mask >> i) & 1;
            auto reps = min_coset_reps(rs, P);
            for (const auto& c : elems) {
                if (c.is_identity()) {
                    for (const auto& w : reps) CHECK(codim_shift(rs, P, c, w) == 0);
                    continue;
                }
                WeylElement wc = center_to_weyl(rs, c);
                for (const auto& w : reps)
                    CHECK(codim_shift(rs, P, c, w) ==
                          bruhat_codim(rs, P, wc * w) - bruhat_codim(rs, P, w));
            }
        }
    }
}

TEST_CASE("levi conjugation for inverse pairs") {
    RootSystem a3 = RootSystem::build("A", 3);
    auto elems = center_elements(a3);
    CHECK(levi_conjugation_check(a3, elems[0], elems[0]));
    for (const auto& c : elems)
        CHECK(levi_conjugation_check(a3, c, center_inverse(a3, c)));
    RootSystem d4 = RootSystem::build("D", 4);
    for (const auto& c : center_elements(d4))
        CHECK(levi_conjugation_check(d4, c, center_inverse(d4, c)));
    // non-inverse pairs are rejected
    CentralElement t1 = find_node(a3, 2);
    CHECK_THROWS_AS(levi_conjugation_check(a3, t1, t1), std::invalid_argument);
}

TEST_CASE("degree_shift basics") {
    RootSystem rs = RootSystem::build("A", 3);
    ParabolicChoice P = ParabolicChoice::maximal(3, 1);
    auto elems = center_elements(rs);
    std::vector<WeylElement> us{WeylElement::identity(3), WeylElement::identity(3),
                                WeylElement::identity(3)};
    std::vector<CentralElement> ids{elems[0], elems[0], elems[0]};
    CHECK(degree_shift(rs, P, DegreeVector{5}, us, ids) == DegreeVector{5});

    // s = 2 with an inverse pair on identity cosets: the rational vertex
    // pairings must combine to an integer
    CentralElement t1 = find_node(rs, 2);
    std::vector<WeylElement> us2{WeylElement::identity(3), WeylElement::identity(3)};
    std::vector<CentralElement> cs2{t1, center_inverse(rs, t1)};
    CHECK(degree_shift(rs, P, DegreeVector{0}, us2, cs2) == DegreeVector{1});

    // center elements must compose to the identity
    std::vector<CentralElement> bad{t1, t1};
    CHECK_THROWS_AS(degree_shift(rs, P, DegreeVector{0}, us2, bad), std::invalid_argument);
}

TEST_CASE("tc_exponent vanishes on the identity coset") {
    RootSystem rs = RootSystem::build("A", 4);
    ParabolicChoice P = ParabolicChoice::maximal(4, 1);
    for (const auto& c : center_elements(rs)) {
        auto e = tc_exponent(rs, P, c, WeylElement::identity(4));
        for (auto v : e) CHECK(v == 0);
    }
}

TEST_CASE("weyl enumeration sizes") {
    CHECK(enumerate_weyl(RootSystem::build("A", 3)).size() == 24);
    CHECK(enumerate_weyl(RootSystem::build("B", 3)).size() == 48);
    CHECK(enumerate_weyl(RootSystem::build("D", 4)).size() == 192);
    CHECK(enumerate_weyl(RootSystem::build("G", 2)).size() == 12);
}

}  // TEST_SUITE
