#include "snchodge/golden.hpp"

#include <ostream>
#include <sstream>

namespace snchodge {

namespace {

struct Checker {
    std::ostream& os;
    bool ok = true;

    void expect(const std::string& label, const std::string& expected,
                const std::string& computed) {
        bool match = expected == computed;
        ok = ok && match;
        os << (match ? "ok      " : "MISMATCH") << "  " << label << ": expected " << expected
           << ", computed " << computed << "\n";
    }
    void expect_scalar(const std::string& label, const Scalar& expected,
                       const Scalar& computed) {
        expect(label, expected.str(), computed.str());
    }
    void expect_bool(const std::string& label, bool expected, bool computed) {
        expect(label, expected ? "true" : "false", computed ? "true" : "false");
    }
    void expect_dim(const std::string& label, const Dim& expected, const Dim& computed) {
        expect(label, expected.str(), computed.str());
    }
};

}  // namespace

Scalar triple_with_bundle(const SncVariety& v,
                          const std::vector<std::vector<Scalar>>& x,
                          const std::vector<std::vector<Scalar>>& y,
                          const std::vector<std::vector<Scalar>>& bundle) {
    Scalar total;
    for (std::size_t j = 0; j < v.components.size(); ++j) {
        const auto& p = v.components[j];
        total += p.pair(4, p.cup_h2(x[j], y[j]), bundle[j]);
    }
    return total;
}

Mat folded_cup_matrix(const Scenario& s, const std::vector<std::string>& class_names,
                      const std::vector<int>& h4_rows) {
    const SncVariety& v = s.variety;
    if (v.components.size() != 2)
        throw std::invalid_argument("folding needs exactly two components");
    const auto& bundle = s.bundles.at("L");
    const CohomologyPackage& x1 = v.components[0];
    const CohomologyPackage& x2 = v.components[1];

    Mat out(int(h4_rows.size()), int(class_names.size()));
    for (int j = 0; j < int(class_names.size()); ++j) {
        const auto& cls = s.named_classes.at(class_names[std::size_t(j)]);
        std::vector<Scalar> u1 = x1.cup_h2(bundle[0], cls[0]);
        std::vector<Scalar> u2 = x2.cup_h2(bundle[1], cls[1]);
        // fold: pull the second component back into the first; its degree-4
        // coordinates sit at the front of the blown-up basis
        for (std::size_t t = 0; t < u2.size(); ++t) u1[t] += u2[t];
        for (int r = 0; r < int(h4_rows.size()); ++r)
            out.at(r, j) = u1[std::size_t(h4_rows[std::size_t(r)])];
    }
    return out;
}

namespace {

bool reproduce_hopf(std::ostream& os) {
    Checker c{os};
    Scenario s = hopf_f1();
    const SncVariety& v = s.variety;

    for (long a1 = -3; a1 <= 3; ++a1)
        for (long a2 = -3; a2 <= 3; ++a2) {
            std::vector<std::vector<Scalar>> classes = {{Scalar(a1), Scalar(a2)},
                                                        {Scalar(-a1), Scalar(a2 - a1)}};
            bool glued = true;
            Scalar sq1, sq2, top;
            try {
                GluedLineBundle b = glue_line_bundle(v, classes);
                sq1 = v.components[0].top_power(b.classes[0]);
                sq2 = v.components[1].top_power(b.classes[1]);
                top = fiber_top_power(v, b);
            } catch (const GluingMismatch&) {
                glued = false;
            }
            std::ostringstream tag;
            tag << "(a1,a2)=(" << a1 << "," << a2 << ")";
            c.expect_bool("gluing law " + tag.str(), true, glued);
            if (!glued) continue;
            c.expect_scalar("square on the first surface " + tag.str(),
                            Scalar(a1 * (-a1 + 2 * a2)), sq1);
            c.expect_scalar("square on the second surface " + tag.str(), -Scalar(a1 * (-a1 + 2 * a2)),
                            sq2);
            c.expect_scalar("summed top power " + tag.str(), Scalar(0), top);
        }
    {
        bool mismatch_detected = false;
        try {
            glue_line_bundle(v, {{Scalar(1), Scalar(0)}, {Scalar(1), Scalar(0)}});
        } catch (const GluingMismatch&) {
            mismatch_detected = true;
        }
        c.expect_bool("non-matching pair rejected", true, mismatch_detected);
    }
    c.expect_dim("b0", Dim(1), betti_fiber(v, 0));
    c.expect_dim("b1", Dim(1), betti_fiber(v, 1));
    c.expect_dim("b2", Dim(0), betti_fiber(v, 2));
    MonodromyVerdict m1 = n1_map(v, 1);
    c.expect_bool("degree-1 monodromy test is an isomorphism", false, m1.is_iso);
    c.expect_bool("degree-1 purity established", false, m1.pure_hs);
    EulerCheck ec = euler_check(v);
    c.expect_dim("euler characteristic of the fiber", Dim(0), ec.fiber_side);
    c.expect_bool("euler check", true, ec.equal);
    return c.ok;
}

bool reproduce_hashimoto(std::ostream& os, long a) {
    Checker c{os};
    Scenario s = hashimoto_sano(a);
    const SncVariety& v = s.variety;

    bool glued = true;
    GluedLineBundle bundle;
    try {
        bundle = glue_line_bundle(v, s.bundles.at("L"));
    } catch (const GluingMismatch&) {
        glued = false;
    }
    c.expect_bool("bundle glues", true, glued);
    if (!glued) return false;

    {
        auto perturbed = s.bundles.at("L");
        perturbed[1][0] += Scalar(1);
        bool rejected = false;
        try {
            glue_line_bundle(v, perturbed);
        } catch (const GluingMismatch&) {
            rejected = true;
        }
        c.expect_bool("perturbed bundle rejected", true, rejected);
    }

    Mat folded = folded_cup_matrix(s, {"F1t", "F2t", "F3t"}, {0, 1, 2});
    // normal forms of the three folded cup images
    Mat want_cols(3, 3);
    want_cols.at(0, 0) = Scalar(2 + 4 * a);
    want_cols.at(1, 0) = Scalar(2 - 4 * a);
    want_cols.at(0, 1) = Scalar(12 * a * a - 4 * a + 2);
    want_cols.at(1, 1) = Scalar(4 * a * a);
    want_cols.at(2, 1) = Scalar(2 - 4 * a);
    want_cols.at(0, 2) = Scalar(4 * a * a);
    want_cols.at(1, 2) = Scalar(12 * a * a + 4 * a + 2);
    want_cols.at(2, 2) = Scalar(2 + 4 * a);
    c.expect("folded degree-4 images", want_cols.str(), folded.str());
    Scalar want_det = Scalar(8) * (Scalar(64) * Scalar(a * a * a * a) - Scalar(2));
    c.expect_scalar("folded degree-4 determinant", want_det, det(folded));

    FiberCupResult fc = fiber_cup_L(v, bundle, 2, 1);
    c.expect_bool("middle piece map injective", true, fc.mid.iso);
    c.expect_bool("piecewise maps commute with the boundary maps", true, fc.squares_commute);

    Scalar want_top = Scalar(6) * (Scalar(1) + Scalar(8 * a * a + 1) * Scalar(1 + 4 * a) *
                                                   Scalar(1 - 4 * a));
    c.expect_scalar("top self-intersection", want_top, fiber_top_power(v, bundle));

    const auto& delta = s.named_classes.at("Delta21");
    {
        std::vector<Scalar> residual = mat_vec(rho_full(v, 2), concat_components_h2(v, delta));
        bool in_kernel = true;
        for (const Scalar& r : residual) in_kernel = in_kernel && r.is_zero();
        c.expect_bool("difference class restricts compatibly", true, in_kernel);
    }
    // Exact value from the stated classes. The source also states the closed
    // form -2+2(-32a^4-32a^3+8a-1) for this quantity, which disagrees with
    // its own class data; both evaluations are printed below.
    long a2 = a * a, a3 = a2 * a, a4 = a3 * a;
    Scalar want_q = Scalar(-192 * a4 - 128 * a3 + 16 * a2 + 8 * a - 4);
    Scalar got_q = triple_with_bundle(v, delta, delta, bundle.classes);
    c.expect_scalar("square of the difference class against the bundle", want_q, got_q);
    os << "note      stated closed form for that square evaluates to "
       << Scalar(-64 * a4 - 64 * a3 + 16 * a - 4).str()
       << " and does not match the stated classes\n";
    Scalar want_dl2 = Scalar(-384 * a4 - 128 * a3 + 24 * a2 - 4 * a);
    c.expect_scalar("difference class against the bundle square", want_dl2,
                    [&] {
                        std::vector<std::vector<Scalar>> l2;
                        for (std::size_t j = 0; j < v.components.size(); ++j)
                            l2.push_back(v.components[j].cup_h2(bundle.classes[j],
                                                                bundle.classes[j]));
                        Scalar val;
                        for (std::size_t j = 0; j < v.components.size(); ++j)
                            val += v.components[j].pair(2, delta[j], l2[j]);
                        return val;
                    }());
    c.expect_bool("square of the difference class is negative", true, got_q.sign() < 0);

    FiberH2HR hr = fiber_h2_hr(v, bundle);
    c.expect("degree-2 Hodge-Riemann for the bundle", "no",
             hr.hr_L == TriState::no ? "no" : "other");
    c.expect("degree-2 Hodge-Riemann for the inverse", "no",
             hr.hr_L_inverse == TriState::no ? "no" : "other");

    c.expect_dim("b2", Dim(a + 3), betti_fiber(v, 2));
    c.expect_dim("b1", Dim(0), betti_fiber(v, 1));
    c.expect_bool("euler check", true, euler_check(v).equal);
    return c.ok;
}

bool reproduce_clemens(std::ostream& os, long l, long d, long a) {
    Checker c{os};
    Scenario s = clemens(l, std::vector<long>(std::size_t(l), d), a);
    const SncVariety& v = s.variety;

    c.expect_dim("b2", Dim(0), betti_fiber(v, 2));
    GradedPieces gp3 = graded_pieces(v, 3);
    c.expect_dim("middle weight piece of degree 3", Dim(204), gp3.mid.dim);
    Mat r2 = rho_full(v, 2);
    long rk = rank(r2);
    c.expect("rank of the degree-2 restriction map", std::to_string(l + 1),
             std::to_string(rk));
    c.expect("gysin kernel dimension in degree 4", std::to_string(l - 1),
             gp3.high.dim.str());
    c.expect_dim("b3", Dim(204 + 2 * (l - 1)), betti_fiber(v, 3));
    MonodromyVerdict m3 = n1_map(v, 3);
    c.expect_bool("degree-3 monodromy test is an isomorphism", true, m3.is_iso);
    CupNondegVerdict cn = cup_nondeg_on_image_rho(v);
    c.expect_bool("cup nondegenerate on the restriction image", true, cn.nondeg);
    ConditionStarReport cs = condition_star(v, StarMode::automatic);
    c.expect("condition (*) overall", "positive_definite",
             cs.overall == StarVerdict::positive ? "positive_definite" : "other");
    c.expect_bool("euler check", true, euler_check(v).equal);

    bool glued = true;
    GluedLineBundle bundle;
    try {
        bundle = glue_line_bundle(v, s.bundles.at("L"));
    } catch (const GluingMismatch&) {
        glued = false;
    }
    c.expect_bool("bundle glues", true, glued);
    if (glued) {
        FiberH2HR hr = fiber_h2_hr(v, bundle);
        c.expect_bool("no degree-2 classes on the fiber", true, hr.vacuous);
        c.expect("hypothesis of the graded monodromy criterion", "no",
                 monodromy_iso_hypothesis(v, bundle) == TriState::no ? "no" : "other");
    }
    if (rk < r2.rows())
        os << "note      the degree-2 restriction map is not surjective (rank " << rk
           << " of " << r2.rows() << "); the degree-3 side pieces grow with the curve count\n";
    return c.ok;
}

bool reproduce_tyurin(std::ostream& os) {
    Checker c{os};
    Scenario s = tyurin_quintic();
    const SncVariety& v = s.variety;

    CupNondegVerdict cn = cup_nondeg_on_image_rho(v);
    c.expect_bool("cup nondegenerate on the restriction image", true, cn.nondeg);
    Subspace im = rank_kernel_image(rho_full(v, 2)).image;
    bool compat = lefschetz_compatible(v, {{Scalar(1)}}, im);
    c.expect_bool("restriction image compatible with the Lefschetz decomposition", true,
                  compat);
    MonodromyVerdict m3 = n1_map(v, 3);
    c.expect_bool("degree-3 monodromy test is an isomorphism", true, m3.is_iso);
    c.expect_bool("degree-3 purity established", true, m3.pure_hs);
    ConditionStarReport cs = condition_star(v, StarMode::sufficient);
    c.expect("sufficient test for the (2,1) pairing", "positive_definite",
             cs.qw3_sufficient == StarVerdict::positive ? "positive_definite" : "other");
    c.expect("sufficient test for the (1,1) pairing", "positive_definite",
             cs.qw2_sufficient == StarVerdict::positive ? "positive_definite" : "other");
    c.expect_dim("b3", Dim(204), betti_fiber(v, 3));
    HodgeNumbers hn = fiber_hodge_numbers(v, 3);
    c.expect_dim("h^{3,0}", Dim(1), hn.h[3].second);
    c.expect_dim("h^{2,1}", Dim(101), hn.h[2].second);
    c.expect_bool("hodge symmetry", true, hn.symmetric);
    c.expect_bool("euler check", true, euler_check(v).equal);
    GluedLineBundle bundle = glue_line_bundle(v, s.bundles.at("L"));
    c.expect("hypothesis of the graded monodromy criterion", "yes",
             monodromy_iso_hypothesis(v, bundle) == TriState::yes ? "yes" : "other");
    return c.ok;
}

}  // namespace

bool reproduce_scenario(const std::string& id, const std::map<std::string, long>& params,
                        std::ostream& os) {
    auto get = [&](const std::string& key, long fallback) {
        auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    };
    if (id == "hopf-f1") return reproduce_hopf(os);
    if (id == "hashimoto-sano") return reproduce_hashimoto(os, get("a", 1));
    if (id == "clemens") return reproduce_clemens(os, get("l", 1), get("d", 1), get("a", 1));
    if (id == "tyurin-quintic") return reproduce_tyurin(os);
    throw std::invalid_argument("unknown scenario: " + id);
}

}  // namespace snchodge
