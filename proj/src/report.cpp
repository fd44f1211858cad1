#include "snchodge/report.hpp"

#include <future>
#include <sstream>

namespace snchodge {

using nlohmann::json;

json json_of_mat(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json json_of_dim(const Dim& d) { return d.str(); }

namespace {

json json_of_vec(const std::vector<Scalar>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(s.str());
    return a;
}

json json_of_grading(const HodgeGrading& g) {
    json blocks = json::array();
    for (const auto& b : g.blocks) {
        if (b.dim().is_zero()) continue;
        json bj;
        bj["p"] = b.p;
        bj["q"] = b.q;
        bj["dim"] = json_of_dim(b.dim());
        if (b.has_free()) bj["basis_free"] = json_of_dim(b.free_dim);
        blocks.push_back(std::move(bj));
    }
    return blocks;
}

json json_of_piece(const Piece& piece) {
    json o;
    o["dim"] = json_of_dim(piece.dim);
    o["blocks"] = json_of_grading(piece.hodge);
    return o;
}

const char* tristate_name(TriState t) {
    switch (t) {
        case TriState::yes: return "yes";
        case TriState::no: return "no";
        default: return "inconclusive";
    }
}

const char* star_name(StarVerdict v) {
    switch (v) {
        case StarVerdict::positive: return "positive_definite";
        case StarVerdict::not_positive: return "not_positive_definite";
        default: return "inconclusive";
    }
}

json json_of_signature(const Signature& s) {
    return json{{"pos", s.n_pos}, {"neg", s.n_neg}, {"zero", s.n_zero}};
}

json degree_record(const SncVariety& v, int k) {
    json o;
    o["k"] = k;
    E1Page page = e1_page(v, k);
    o["e1"] = json{{"upper", json_of_dim(page.upper_dim)},
                   {"middle", json_of_dim(page.middle_dim)},
                   {"lower", json_of_dim(page.lower_dim)}};
    GradedPieces gp = graded_pieces(v, k);
    o["pieces"] = json{{"low", json_of_piece(gp.low)},
                       {"mid", json_of_piece(gp.mid)},
                       {"high", json_of_piece(gp.high)}};
    o["betti"] = json_of_dim(gp.low.dim + gp.mid.dim + gp.high.dim);

    MonodromyVerdict mv = n1_map(v, k);
    json nj;
    nj["matrix"] = json_of_mat(mv.n1);
    nj["is_iso"] = mv.is_iso;
    if (std::holds_alternative<Scalar>(mv.witness))
        nj["determinant"] = std::get<Scalar>(mv.witness).str();
    else if (std::holds_alternative<std::vector<Scalar>>(mv.witness))
        nj["kernel_vector"] = json_of_vec(std::get<std::vector<Scalar>>(mv.witness));
    else
        nj["note"] = std::get<std::string>(mv.witness);
    o["n1"] = std::move(nj);
    o["pure_hodge_structure"] =
        json{{"established", mv.pure_hs},
             {"note", mv.pure_hs
                          ? "weight pieces are exchanged isomorphically, purity follows"
                          : "criterion not established; this is not a disproof of purity"}};
    if (mv.is_iso) {
        try {
            HodgeNumbers hn = fiber_hodge_numbers(v, k);
            json hj = json::array();
            for (const auto& [p, d] : hn.h)
                hj.push_back(json{{"p", p}, {"q", k - p}, {"dim", json_of_dim(d)}});
            o["hodge_numbers"] = json{{"values", std::move(hj)},
                                      {"symmetric", hn.symmetric},
                                      {"total", json_of_dim(hn.total)}};
        } catch (const std::exception& e) {
            o["hodge_numbers"] = json{{"error", e.what()}};
        }
    }
    return o;
}

json bundle_record(const SncVariety& v, const std::vector<std::vector<Scalar>>& classes,
                   bool fiber_suite) {
    json o;
    json cls = json::array();
    for (const auto& c : classes) cls.push_back(json_of_vec(c));
    o["classes"] = std::move(cls);
    GluedLineBundle bundle;
    try {
        bundle = glue_line_bundle(v, classes);
    } catch (const GluingMismatch& e) {
        o["glued"] = false;
        o["residual"] = json_of_vec(e.residual);
        return o;
    }
    o["glued"] = true;
    o["residual"] = json_of_vec(std::vector<Scalar>(std::size_t(v.loci_dim(2))));
    json restr = json::array();
    for (const auto& r : bundle.locus_restriction) restr.push_back(json_of_vec(r));
    o["locus_restriction"] = std::move(restr);

    json per_piece;
    for (std::size_t i = 0; i < v.components.size(); ++i)
        per_piece[v.components[i].name] =
            tristate_name(component_hr(v.components[i], bundle.classes[i]).overall);
    for (std::size_t i = 0; i < v.loci.size(); ++i)
        per_piece[v.loci[i].name] =
            tristate_name(component_hr(v.loci[i], bundle.locus_restriction[i]).overall);
    o["restriction_hodge_riemann"] = std::move(per_piece);
    o["monodromy_iso_hypothesis"] = tristate_name(monodromy_iso_hypothesis(v, bundle));
    if (!fiber_suite) return o;

    try {
        o["top_power"] = fiber_top_power(v, bundle).str();
    } catch (const MissingCupData& e) {
        o["top_power"] = json{{"error", e.what()}};
    }

    json cups = json::array();
    for (int i = 1; i <= v.n; ++i) {
        int k = v.n - i;
        FiberCupResult fc = fiber_cup_L(v, bundle, k, i);
        json fj;
        fj["k"] = k;
        fj["i"] = i;
        auto piece = [&](const FiberCupPieceMap& pm) {
            json pj;
            pj["src_dim"] = json_of_dim(pm.src_dim);
            pj["dst_dim"] = json_of_dim(pm.dst_dim);
            pj["rank"] = pm.rank;
            pj["iso"] = pm.iso;
            if (pm.m && pm.m->rows() <= 16 && pm.m->cols() <= 16)
                pj["matrix"] = json_of_mat(*pm.m);
            return pj;
        };
        fj["low"] = piece(fc.low);
        fj["mid"] = piece(fc.mid);
        fj["high"] = piece(fc.high);
        fj["squares_commute"] = fc.squares_commute;
        fj["all_pieces_iso"] = fc.all_iso;
        fj["assembled_iso"] = fc.all_iso;  // three-step filtration argument
        fj["vacuous"] = fc.vacuous;
        if (!fc.findings.empty()) {
            json ff = json::array();
            for (const auto& f : fc.findings) ff.push_back(json{{f.code, f.detail}});
            fj["findings"] = std::move(ff);
        }
        cups.push_back(std::move(fj));
    }
    o["fiber_cup"] = std::move(cups);

    if (v.n == 3) {
        FiberH2HR hr = fiber_h2_hr(v, bundle);
        json hj;
        hj["top_power"] = hr.top_power.str();
        hj["lefschetz_mid"] = hr.lefschetz_mid;
        if (hr.primitive_sig) hj["primitive_signature"] = json_of_signature(*hr.primitive_sig);
        hj["symbolic_skipped"] = hr.symbolic_skipped;
        hj["vacuous"] = hr.vacuous;
        hj["hodge_riemann"] = tristate_name(hr.hr_L);
        hj["hodge_riemann_inverse"] = tristate_name(hr.hr_L_inverse);
        if (!hr.note.empty()) hj["note"] = hr.note;
        o["h2_hodge_riemann"] = std::move(hj);
    }
    return o;
}

}  // namespace

json build_report(const InputModel& m, const ReportOptions& opt) {
    const SncVariety& v = m.variety;
    json rep;
    rep["schema"] = "snc-hodge-report/1";
    rep["tool"] = json{{"name", "snc-hodge"}, {"version", kToolVersion}};
    rep["input_digest"] = [&] {
        std::ostringstream os;
        os << std::hex << fnv1a_digest(serialize_model(m));
        return os.str();
    }();
    rep["conventions"] = json{
        {"restriction_map", "pullback from the higher-indexed component minus the lower one"},
        {"gysin_map", "adjoint of the complementary restriction map for the Poincare Grams; "
                      "2*pi*i normalizations dropped throughout"},
        {"tate_twist", "label shift only, no scalars"},
        {"q_w3", "-i * cup(x, conj y) on (2,1) classes of the middle weight piece"},
        {"q_w2", "- cup(x, conj y) on (1,1) classes of the degree-4 gysin kernel"},
        {"hr_form", "(-1)^(k(k-1)/2) * i^(2p-k) * cup(x, conj y, L^(n-k))"},
        {"basis_free_fact", "recorded signature of i^(p-q) * cup(x, conj y)"}};

    std::vector<Finding> findings = validate(v);
    json fj = json::array();
    bool blocking = false;
    for (const auto& f : findings) {
        fj.push_back(json{{"code", f.code}, {"detail", f.detail}});
        if (f.code == "degenerate-pairing" || f.code == "dimension-mismatch" ||
            f.code == "incidence-range" || f.code == "pairing-shape")
            blocking = true;
    }
    rep["findings"] = std::move(fj);
    rep["blocking"] = blocking;
    if (!m.notes.empty()) rep["notes"] = m.notes;
    if (blocking) return rep;

    std::vector<int> ks;
    if (opt.degree)
        ks.push_back(*opt.degree);
    else if (!opt.skip_degrees)
        for (int k = 0; k <= 2 * v.n; ++k) ks.push_back(k);

    // Per-degree analyses are independent and pure; run them concurrently.
    std::vector<std::future<json>> futures;
    for (int k : ks)
        futures.push_back(std::async(std::launch::async, [&v, k] {
            try {
                return degree_record(v, k);
            } catch (const std::exception& e) {
                return json{{"k", k}, {"error", e.what()}};
            }
        }));
    json degs = json::array();
    for (auto& f : futures) degs.push_back(f.get());
    rep["degrees"] = std::move(degs);

    try {
        CupNondegVerdict cnd = cup_nondeg_on_image_rho(v);
        MonodromyVerdict mid = n1_map(v, v.n);
        json mj;
        mj["image_rho_dim"] = cnd.dim;
        mj["gram"] = json_of_mat(cnd.gram);
        mj["gram_rank"] = cnd.rank;
        mj["cup_nondegenerate_on_image_rho"] = cnd.nondeg;
        mj["n1_iso"] = mid.is_iso;
        mj["equivalence_holds"] = (cnd.nondeg == mid.is_iso);
        // When every locus flags an ample class, also decide nondegeneracy
        // through compatibility with the Lefschetz decomposition.
        bool all_flagged = !v.loci.empty();
        std::vector<std::vector<Scalar>> amples;
        for (const auto& d : v.loci) {
            if (d.ample_classes.empty()) {
                all_flagged = false;
                break;
            }
            amples.push_back(d.ample_classes.front());
        }
        if (all_flagged) {
            try {
                Subspace im = rank_kernel_image(rho_full(v, v.n - 1)).image;
                mj["image_rho_lefschetz_compatible"] = lefschetz_compatible(v, amples, im);
            } catch (const MissingCupData&) {
                mj["image_rho_lefschetz_compatible"] = "unavailable";
            }
        }
        rep["middle_degree"] = std::move(mj);
    } catch (const std::exception& e) {
        rep["middle_degree"] = json{{"error", e.what()}};
    }

    {
        Mat r2 = rho_full(v, 2);
        long rk = rank(r2);
        json sj;
        sj["rank"] = rk;
        sj["target_dim"] = r2.rows();
        sj["surjective"] = (rk == r2.rows());
        if (rk < r2.rows())
            sj["note"] =
                "the degree-2 restriction map is not surjective: rank " + std::to_string(rk) +
                " of " + std::to_string(r2.rows()) +
                "; side pieces of the adjacent weight gradings are nonzero accordingly";
        rep["degree2_restriction"] = std::move(sj);
    }

    {
        EulerCheck ec = euler_check(v);
        rep["euler_check"] = json{{"fiber_side", json_of_dim(ec.fiber_side)},
                                  {"e1_side", json_of_dim(ec.e1_side)},
                                  {"equal", ec.equal}};
    }

    if (opt.run_bundles && !m.bundles.empty()) {
        json bj;
        for (const auto& [name, classes] : m.bundles) {
            if (opt.only_bundle && *opt.only_bundle != name) continue;
            try {
                bj[name] = bundle_record(v, classes, opt.bundle_fiber);
            } catch (const std::exception& e) {
                bj[name] = json{{"error", e.what()}};
            }
        }
        rep["bundles"] = std::move(bj);
    }

    if (v.n == 3) {
        try {
            ConditionStarReport cs = condition_star(v, opt.star_mode);
            json cj;
            cj["mode"] = cs.exact_ran && cs.sufficient_ran
                             ? "exact+sufficient"
                             : (cs.exact_ran ? "exact" : "sufficient");
            if (cs.exact_ran) {
                auto pairing_json = [&](const PairingReport& pr) {
                    json pj;
                    pj["verdict"] = star_name(pr.verdict);
                    if (pr.explicit_sig)
                        pj["explicit_signature"] = json_of_signature(*pr.explicit_sig);
                    pj["basis_free_dim"] = json_of_dim(pr.free_dim);
                    pj["basis_free_definite"] = pr.free_definite;
                    if (!pr.note.empty()) pj["note"] = pr.note;
                    return pj;
                };
                cj["qw3_exact"] = pairing_json(cs.qw3_exact);
                cj["qw2_exact"] = pairing_json(cs.qw2_exact);
            }
            if (cs.sufficient_ran) {
                cj["qw3_sufficient"] = star_name(cs.qw3_sufficient);
                cj["qw2_sufficient"] = star_name(cs.qw2_sufficient);
                if (!cs.sufficient_note.empty()) cj["sufficient_note"] = cs.sufficient_note;
            }
            cj["overall"] = star_name(cs.overall);
            rep["condition_star"] = std::move(cj);
        } catch (const std::exception& e) {
            rep["condition_star"] = json{{"error", e.what()}};
        }
    }
    return rep;
}

std::string render_text(const json& rep) {
    std::ostringstream os;
    os << "snc-hodge " << rep["tool"]["version"].get<std::string>() << "  input "
       << rep["input_digest"].get<std::string>() << "\n";
    if (rep.contains("findings") && !rep["findings"].empty()) {
        os << "findings:\n";
        for (const auto& f : rep["findings"])
            os << "  [" << f["code"].get<std::string>() << "] "
               << f["detail"].get<std::string>() << "\n";
    }
    if (rep.value("blocking", false)) {
        os << "analysis blocked by validation findings\n";
        return os.str();
    }
    if (rep.contains("degrees"))
        for (const auto& d : rep["degrees"]) {
            os << "k=" << d["k"].get<int>();
            if (d.contains("error")) {
                os << "  error: " << d["error"].get<std::string>() << "\n";
                continue;
            }
            os << "  b=" << d["betti"].get<std::string>() << "  pieces("
               << d["pieces"]["low"]["dim"].get<std::string>() << ","
               << d["pieces"]["mid"]["dim"].get<std::string>() << ","
               << d["pieces"]["high"]["dim"].get<std::string>() << ")"
               << "  n1_iso=" << (d["n1"]["is_iso"].get<bool>() ? "yes" : "no")
               << "  pure=" << (d["pure_hodge_structure"]["established"].get<bool>() ? "yes" : "no")
               << "\n";
        }
    if (rep.contains("middle_degree") && !rep["middle_degree"].contains("error"))
        os << "cup nondegenerate on image of the middle restriction map: "
           << (rep["middle_degree"]["cup_nondegenerate_on_image_rho"].get<bool>() ? "yes" : "no")
           << " (matches the monodromy test: "
           << (rep["middle_degree"]["equivalence_holds"].get<bool>() ? "yes" : "no") << ")\n";
    if (rep.contains("euler_check"))
        os << "euler check: " << rep["euler_check"]["fiber_side"].get<std::string>() << " vs "
           << rep["euler_check"]["e1_side"].get<std::string>()
           << (rep["euler_check"]["equal"].get<bool>() ? " (equal)" : " (MISMATCH)") << "\n";
    if (rep.contains("bundles"))
        for (const auto& [name, b] : rep["bundles"].items()) {
            os << "bundle " << name << ": ";
            if (b.contains("error")) {
                os << "error: " << b["error"].get<std::string>() << "\n";
                continue;
            }
            if (!b["glued"].get<bool>()) {
                os << "gluing mismatch, residual " << b["residual"].dump() << "\n";
                continue;
            }
            os << "glued";
            if (b.contains("top_power") && b["top_power"].is_string())
                os << ", top power " << b["top_power"].get<std::string>();
            if (b.contains("h2_hodge_riemann"))
                os << ", HR(L)=" << b["h2_hodge_riemann"]["hodge_riemann"].get<std::string>()
                   << ", HR(1/L)="
                   << b["h2_hodge_riemann"]["hodge_riemann_inverse"].get<std::string>();
            os << ", hypothesis=" << b["monodromy_iso_hypothesis"].get<std::string>() << "\n";
        }
    if (rep.contains("condition_star") && !rep["condition_star"].contains("error"))
        os << "condition (*): " << rep["condition_star"]["overall"].get<std::string>() << "\n";
    if (rep.contains("notes"))
        for (const auto& n : rep["notes"]) os << "note: " << n.get<std::string>() << "\n";
    return os.str();
}

}  // namespace snchodge
