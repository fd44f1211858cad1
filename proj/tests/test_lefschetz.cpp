#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "snchodge/geometries.hpp"
#include "snchodge/golden.hpp"
#include "snchodge/lefschetz.hpp"

using namespace snchodge;

TEST_CASE("hard lefschetz on the product of two lines") {
    CohomologyPackage p = product_proj({1, 1});
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            if (a == 0 && b == 0) continue;
            LefschetzVerdict lv = component_lefschetz(p, {Scalar(a), Scalar(b)});
            CHECK(lv.overall == (a * b != 0));
            HRVerdict hr = component_hr(p, {Scalar(a), Scalar(b)});
            CHECK((hr.overall == TriState::yes) == (a * b > 0));
            if (a * b != 0) CHECK(hr.overall != TriState::inconclusive);
        }
}

TEST_CASE("hodge-riemann classes on the triple product need an even sign pattern") {
    CohomologyPackage p = product_proj({1, 1, 1});
    for (long a1 = -2; a1 <= 2; ++a1)
        for (long a2 = -2; a2 <= 2; ++a2)
            for (long a3 = -2; a3 <= 2; ++a3) {
                if (a1 == 0 || a2 == 0 || a3 == 0) continue;
                HRVerdict hr = component_hr(p, {Scalar(a1), Scalar(a2), Scalar(a3)});
                CHECK((hr.overall == TriState::yes) == (a1 * a2 * a3 > 0));
            }
    // not ample, still hodge-riemann
    HRVerdict hr = component_hr(p, {Scalar(-1), Scalar(-1), Scalar(1)});
    CHECK(hr.overall == TriState::yes);
}

TEST_CASE("a class and its inverse have matching lefschetz verdicts") {
    CohomologyPackage p = product_proj({1, 1});
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b) {
            LefschetzVerdict plus = component_lefschetz(p, {Scalar(a), Scalar(b)});
            LefschetzVerdict minus = component_lefschetz(p, {Scalar(-a), Scalar(-b)});
            CHECK(plus.overall == minus.overall);
        }
}

TEST_CASE("scaling a class preserves the verdicts") {
    CohomologyPackage p = product_proj({1, 1, 1});
    std::vector<Scalar> cls{Scalar(1), Scalar(2), Scalar(1)};
    HRVerdict base = component_hr(p, cls);
    for (long m : {2L, 3L, 5L}) {
        std::vector<Scalar> scaled{Scalar(m), Scalar(2 * m), Scalar(m)};
        LefschetzVerdict lv = component_lefschetz(p, scaled);
        CHECK(lv.overall == component_lefschetz(p, cls).overall);
        // power matrices scale by m^i
        for (const auto& pw : lv.per_power) {
            Mat expected = component_lefschetz(p, cls).per_power[std::size_t(pw.i - 1)].m;
            Scalar factor(1);
            for (int t = 0; t < pw.i; ++t) factor *= Scalar(m);
            CHECK(pw.m == expected.scaled(factor));
        }
        CHECK(component_hr(p, scaled).overall == base.overall);
    }
}

TEST_CASE("ample flagged classes satisfy both properties on every constructor package") {
    std::vector<CohomologyPackage> packages = {product_proj({1, 1}), product_proj({1, 1, 1}),
                                               hirzebruch(1), hirzebruch(3),
                                               k3_anticanonical_p1cubed()};
    for (const Scenario& s :
         {hopf_f1(), hashimoto_sano(1), clemens(2, {1, 1}), tyurin_quintic()}) {
        for (const auto& p : s.variety.components) packages.push_back(p);
        for (const auto& p : s.variety.loci) packages.push_back(p);
    }
    int flagged = 0;
    for (const CohomologyPackage& p : packages) {
        for (const auto& ample : p.ample_classes) {
            CHECK(component_lefschetz(p, ample).overall);
            CHECK(component_hr(p, ample).overall == TriState::yes);
            ++flagged;
        }
    }
    CHECK(flagged >= 10);
}

TEST_CASE("pullback of an ample class under a curve blow-up stays hodge-riemann") {
    CohomologyPackage base = product_proj({1, 1, 1});
    CurveData c{{Scalar(0), Scalar(2), Scalar(2)}, 1, Scalar(8)};
    CohomologyPackage b = blowup3fold_along_curve(base, {c});
    std::vector<Scalar> pullback{Scalar(1), Scalar(1), Scalar(1), Scalar(0)};
    LefschetzVerdict lv = component_lefschetz(b, pullback);
    CHECK(lv.overall);
    HRVerdict hr = component_hr(b, pullback);
    CHECK(hr.overall == TriState::yes);
}

TEST_CASE("fiber cup maps") {
    SUBCASE("hashimoto-sano middle map is injective and the trivial class is not") {
        Scenario s = hashimoto_sano(1);
        GluedLineBundle b = glue_line_bundle(s.variety, s.bundles.at("L"));
        FiberCupResult fc = fiber_cup_L(s.variety, b, 2, 1);
        CHECK(fc.mid.iso);
        CHECK(fc.squares_commute);
        CHECK(fc.low.src_dim == Dim(0));
        CHECK(fc.high.src_dim == Dim(0));
        CHECK(fc.all_iso);

        std::vector<std::vector<Scalar>> zero_classes = {
            std::vector<Scalar>(std::size_t(s.variety.components[0].explicit_dim(2))),
            std::vector<Scalar>(std::size_t(s.variety.components[1].explicit_dim(2)))};
        GluedLineBundle z = glue_line_bundle(s.variety, zero_classes);
        FiberCupResult fz = fiber_cup_L(s.variety, z, 2, 1);
        CHECK_FALSE(fz.mid.iso);
        CHECK(fz.mid.rank == 0);
    }
    SUBCASE("clemens fiber has nothing in degree two") {
        Scenario s = clemens(2, {1, 1});
        GluedLineBundle b = glue_line_bundle(s.variety, s.bundles.at("L"));
        FiberCupResult fc = fiber_cup_L(s.variety, b, 2, 1);
        CHECK(fc.vacuous);
        CHECK(fc.mid.src_dim == Dim(0));
    }
    SUBCASE("five-lemma consistency flag") {
        for (const Scenario& s :
             {hashimoto_sano(1), hashimoto_sano(2), clemens(1, {1}), tyurin_quintic()}) {
            GluedLineBundle b = glue_line_bundle(s.variety, s.bundles.at("L"));
            for (int i = 1; i <= s.variety.n; ++i) {
                FiberCupResult fc = fiber_cup_L(s.variety, b, s.variety.n - i, i);
                bool pieces = fc.low.iso && fc.mid.iso && fc.high.iso && fc.squares_commute;
                CHECK(fc.all_iso == pieces);
            }
        }
    }
}

TEST_CASE("fiber top powers") {
    SUBCASE("hashimoto-sano values") {
        for (long a : {1L, 2L, 3L}) {
            Scenario s = hashimoto_sano(a);
            GluedLineBundle b = glue_line_bundle(s.variety, s.bundles.at("L"));
            Scalar expected = Scalar(6) * (Scalar(1) + Scalar(8 * a * a + 1) *
                                                           Scalar(1 + 4 * a) *
                                                           Scalar(1 - 4 * a));
            CHECK(fiber_top_power(s.variety, b) == expected);
        }
    }
    SUBCASE("hopf glued squares cancel") {
        Scenario s = hopf_f1();
        for (long a1 = -2; a1 <= 2; ++a1)
            for (long a2 = -2; a2 <= 2; ++a2) {
                GluedLineBundle b = glue_line_bundle(
                    s.variety, {{Scalar(a1), Scalar(a2)}, {Scalar(-a1), Scalar(a2 - a1)}});
                CHECK(fiber_top_power(s.variety, b) == Scalar(0));
            }
    }
    SUBCASE("zero bundle") {
        Scenario s = tyurin_quintic();
        GluedLineBundle z = glue_line_bundle(
            s.variety, {{Scalar(0)}, {Scalar(0), Scalar(0)}});
        CHECK(fiber_top_power(s.variety, z) == Scalar(0));
    }
    SUBCASE("additivity over components") {
        Scenario s = tyurin_quintic();
        GluedLineBundle b = glue_line_bundle(s.variety, s.bundles.at("L"));
        Scalar parts = s.variety.components[0].top_power(b.classes[0]) +
                       s.variety.components[1].top_power(b.classes[1]);
        CHECK(fiber_top_power(s.variety, b) == parts);
    }
}

TEST_CASE("degree-two hodge-riemann fragment on the fiber") {
    SUBCASE("hashimoto-sano rejects the bundle and its inverse") {
        for (long a : {1L, 2L}) {
            Scenario s = hashimoto_sano(a);
            GluedLineBundle b = glue_line_bundle(s.variety, s.bundles.at("L"));
            FiberH2HR hr = fiber_h2_hr(s.variety, b);
            CHECK(hr.top_power.sign() < 0);
            CHECK(hr.lefschetz_mid);
            CHECK(hr.hr_L == TriState::no);
            CHECK(hr.hr_L_inverse == TriState::no);
        }
    }
    SUBCASE("with the genus resolved the fragment computes a full signature") {
        Scenario s = hashimoto_sano(1, 209);  // adjunction value of the last curve
        GluedLineBundle b = glue_line_bundle(s.variety, s.bundles.at("L"));
        FiberH2HR hr = fiber_h2_hr(s.variety, b);
        CHECK_FALSE(hr.symbolic_skipped);
        CHECK(hr.hr_L == TriState::no);
        CHECK(hr.hr_L_inverse == TriState::no);
    }
    SUBCASE("clemens fragment is vacuous") {
        Scenario s = clemens(1, {1});
        GluedLineBundle b = glue_line_bundle(s.variety, s.bundles.at("L"));
        FiberH2HR hr = fiber_h2_hr(s.variety, b);
        CHECK(hr.vacuous);
        CHECK(hr.top_power == Scalar(0));
    }
    SUBCASE("a projective-style gluing passes on the fiber degree two") {
        Scenario s = tyurin_quintic();
        GluedLineBundle b = glue_line_bundle(s.variety, s.bundles.at("L"));
        FiberH2HR hr = fiber_h2_hr(s.variety, b);
        CHECK(hr.top_power.sign() > 0);
        CHECK(hr.hr_L == TriState::yes);
        CHECK(hr.hr_L_inverse == TriState::no);
    }
}

TEST_CASE("hypothesis of the graded monodromy criterion") {
    SUBCASE("projective scenario with per-piece hodge-riemann restrictions") {
        Scenario s = tyurin_quintic();
        GluedLineBundle b = glue_line_bundle(s.variety, s.bundles.at("L"));
        CHECK(monodromy_iso_hypothesis(s.variety, b) == TriState::yes);
    }
    SUBCASE("hopf gluings always fail on one side") {
        Scenario s = hopf_f1();
        for (long a1 = -2; a1 <= 2; ++a1)
            for (long a2 = -2; a2 <= 2; ++a2) {
                GluedLineBundle b = glue_line_bundle(
                    s.variety, {{Scalar(a1), Scalar(a2)}, {Scalar(-a1), Scalar(a2 - a1)}});
                CHECK(monodromy_iso_hypothesis(s.variety, b) == TriState::no);
            }
    }
    SUBCASE("clemens gluing fails on the blown-up component") {
        Scenario s = clemens(2, {1, 1});
        GluedLineBundle b = glue_line_bundle(s.variety, s.bundles.at("L"));
        CHECK(monodromy_iso_hypothesis(s.variety, b) == TriState::no);
        HRVerdict hr = component_hr(s.variety.components[0], b.classes[0]);
        CHECK(hr.overall == TriState::no);
        CHECK(hr.lefschetz.overall);  // lefschetz holds, positivity fails
    }
}
