#include "snchodge/snc.hpp"

#include <algorithm>

namespace snchodge {

namespace {

int sum_dims(const std::vector<CohomologyPackage>& ps, int l) {
    int t = 0;
    for (const auto& p : ps) t += p.explicit_dim(l);
    return t;
}

Dim sum_totals(const std::vector<CohomologyPackage>& ps, int l) {
    Dim t;
    for (const auto& p : ps) t += p.dim(l);
    return t;
}

HodgeGrading sum_grading(const std::vector<CohomologyPackage>& ps, int l) {
    std::vector<const HodgeGrading*> parts;
    std::vector<HodgeGrading> storage;
    storage.reserve(ps.size());
    for (const auto& p : ps) storage.push_back(p.at(l).hodge);
    for (auto& g : storage) parts.push_back(&g);
    HodgeGrading out = direct_sum(parts);
    out.weight = l;
    return out;
}

Mat blockdiag_pairing(const std::vector<CohomologyPackage>& ps, int l) {
    int rows = 0, cols = 0;
    for (const auto& p : ps) {
        rows += p.explicit_dim(l);
        cols += p.explicit_dim(2 * p.n - l);
    }
    Mat g(rows, cols);
    int r = 0, c = 0;
    for (const auto& p : ps) {
        Mat b = p.pairing_at(l);
        g.put(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return g;
}

}  // namespace

int SncVariety::components_dim(int l) const { return sum_dims(components, l); }
int SncVariety::loci_dim(int l) const { return sum_dims(loci, l); }
Dim SncVariety::components_total(int l) const { return sum_totals(components, l); }
Dim SncVariety::loci_total(int l) const { return sum_totals(loci, l); }

int SncVariety::component_offset(int l, int i) const {
    int t = 0;
    for (int k = 0; k < i; ++k) t += components[std::size_t(k)].explicit_dim(l);
    return t;
}

int SncVariety::locus_offset(int l, int i) const {
    int t = 0;
    for (int k = 0; k < i; ++k) t += loci[std::size_t(k)].explicit_dim(l);
    return t;
}

HodgeGrading SncVariety::components_grading(int l) const { return sum_grading(components, l); }
HodgeGrading SncVariety::loci_grading(int l) const { return sum_grading(loci, l); }

Mat SncVariety::components_pairing(int l) const { return blockdiag_pairing(components, l); }
Mat SncVariety::loci_pairing(int l) const { return blockdiag_pairing(loci, l); }

Mat rho_full(const SncVariety& v, int l) {
    Mat m(v.loci_dim(l), v.components_dim(l));
    if (l < 0 || l > 2 * (v.n - 1)) return Mat(0, v.components_dim(l));
    for (std::size_t k = 0; k < v.incidences.size(); ++k) {
        const Incidence& inc = v.incidences[k];
        int row = v.locus_offset(l, inc.locus);
        int locus_d = v.loci[std::size_t(inc.locus)].explicit_dim(l);
        if (locus_d == 0) continue;
        if (const Mat* du = inc.delta(l, true))
            m.put(row, v.component_offset(l, inc.upper), *du);
        if (const Mat* dl = inc.delta(l, false))
            m.put(row, v.component_offset(l, inc.lower), -*dl);
    }
    return m;
}

Mat rho(const SncVariety& v, int l) {
    if (l < 0 || l > 2 * (v.n - 1))
        throw DegreeRange("restriction map degree out of range: " + std::to_string(l));
    return rho_full(v, l);
}

Mat gysin_full(const SncVariety& v, int l) {
    int src = (l - 2 >= 0) ? v.loci_dim(l - 2) : 0;
    int dst = v.components_dim(l);
    if (l < 2 || l > 2 * v.n || src == 0 || dst == 0) return Mat(dst, src);

    Mat r = rho_full(v, 2 * v.n - l);                 // components H^{2n-l} -> loci H^{2n-l}
    Mat p1 = v.components_pairing(l);                 // H^l x H^{2n-l}
    Mat p2 = v.loci_pairing(l - 2);                   // H^{l-2} x H^{2n-l} on loci
    // <a, rho(b)>_loci = <gysin(a), b>_components, i.e. P2 * rho = gysin^T * P1.
    auto g = solve(p1.transpose(), r.transpose() * p2.transpose());
    if (!g) throw DegeneratePairing("component pairing singular in degree " + std::to_string(l));
    return *g;
}

Mat gysin(const SncVariety& v, int l) {
    if (l < 2 || l > 2 * v.n)
        throw DegreeRange("gysin map degree out of range: " + std::to_string(l));
    Mat p1 = v.components_pairing(l);
    if (p1.rows() != p1.cols() || (p1.rows() > 0 && rank(p1) != p1.rows()))
        throw DegeneratePairing("component pairing singular in degree " + std::to_string(l));
    return gysin_full(v, l);
}

std::vector<Finding> validate(const SncVariety& v) {
    std::vector<Finding> out;
    auto add = [&](const std::string& code, const std::string& detail) {
        out.push_back(Finding{code, detail});
    };

    for (const auto& c : v.components) {
        if (c.n != v.n) add("dimension-mismatch", c.name + ": component dimension");
        auto f = c.validate();
        out.insert(out.end(), f.begin(), f.end());
    }
    for (const auto& d : v.loci) {
        if (d.n != v.n - 1) add("dimension-mismatch", d.name + ": locus dimension");
        auto f = d.validate();
        out.insert(out.end(), f.begin(), f.end());
    }

    std::vector<int> locus_seen(v.loci.size(), 0);
    for (const auto& inc : v.incidences) {
        if (inc.locus < 0 || inc.locus >= int(v.loci.size())) {
            add("incidence-range", "locus index out of range");
            continue;
        }
        ++locus_seen[std::size_t(inc.locus)];
        if (inc.lower >= inc.upper) add("incidence-order", "components must satisfy lower < upper");
        if (inc.lower < 0 || inc.upper >= int(v.components.size())) {
            add("incidence-range", "component index out of range");
            continue;
        }
        const auto& locus = v.loci[std::size_t(inc.locus)];
        for (int l = 0; l <= 2 * (v.n - 1); ++l) {
            int locus_d = locus.explicit_dim(l);
            for (bool upper_side : {false, true}) {
                const auto& comp =
                    v.components[std::size_t(upper_side ? inc.upper : inc.lower)];
                const Mat* d = inc.delta(l, upper_side);
                int comp_d = comp.explicit_dim(l);
                if (!d) {
                    if (locus_d > 0 && comp_d > 0)
                        add("missing-delta", locus.name + " degree " + std::to_string(l));
                    continue;
                }
                if (d->rows() != locus_d || d->cols() != comp_d) {
                    add("dimension-mismatch",
                        locus.name + " delta degree " + std::to_string(l));
                    continue;
                }
                // Hodge-block preservation of the pullback.
                try {
                    induced_hodge(*d, comp.at(l).hodge, locus.at(l).hodge, Part::kernel);
                } catch (const TypeViolation& e) {
                    add("hodge-violation",
                        locus.name + " degree " + std::to_string(l) + ": " + e.what());
                } catch (const MissingBasis&) {
                    // basis-free parts carry no checkable restriction data
                }
            }
        }
    }
    for (std::size_t i = 0; i < locus_seen.size(); ++i)
        if (locus_seen[i] != 1)
            add("incidence-coverage", v.loci[i].name + " must appear in exactly one incidence");

    // d1 differentials must compose to zero on geometric inputs.
    if (out.empty()) {
        for (int l = 2; l <= 2 * (v.n - 1); ++l) {
            Mat r = rho_full(v, l);
            Mat g = gysin_full(v, l);
            if (r.cols() != g.rows() || g.cols() == 0 || r.rows() == 0) continue;
            if (!(r * g).is_zero())
                add("gysin-restriction-composite",
                    "image of the gysin map is not contained in the restriction kernel in degree " +
                        std::to_string(l));
        }
    }
    return out;
}

std::vector<Scalar> concat_components_h2(
    const SncVariety& v, const std::vector<std::vector<Scalar>>& per_component) {
    if (per_component.size() != v.components.size())
        throw std::invalid_argument("one degree-2 class per component expected");
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < per_component.size(); ++i) {
        if (int(per_component[i].size()) != v.components[i].explicit_dim(2))
            throw std::invalid_argument("degree-2 class length mismatch");
        out.insert(out.end(), per_component[i].begin(), per_component[i].end());
    }
    return out;
}

std::vector<std::vector<Scalar>> split_components(const SncVariety& v, int l,
                                                  const std::vector<Scalar>& concat) {
    std::vector<std::vector<Scalar>> out;
    std::size_t pos = 0;
    for (const auto& c : v.components) {
        std::size_t d = std::size_t(c.explicit_dim(l));
        out.emplace_back(concat.begin() + pos, concat.begin() + pos + d);
        pos += d;
    }
    return out;
}

std::vector<std::vector<Scalar>> split_loci(const SncVariety& v, int l,
                                            const std::vector<Scalar>& concat) {
    std::vector<std::vector<Scalar>> out;
    std::size_t pos = 0;
    for (const auto& d : v.loci) {
        std::size_t k = std::size_t(d.explicit_dim(l));
        out.emplace_back(concat.begin() + pos, concat.begin() + pos + k);
        pos += k;
    }
    return out;
}

std::vector<Scalar> GluedLineBundle::concat() const {
    std::vector<Scalar> out;
    for (const auto& c : classes) out.insert(out.end(), c.begin(), c.end());
    return out;
}

GluedLineBundle glue_line_bundle(const SncVariety& v,
                                 const std::vector<std::vector<Scalar>>& classes) {
    std::vector<Scalar> vec = concat_components_h2(v, classes);
    std::vector<Scalar> residual = mat_vec(rho_full(v, 2), vec);
    for (const Scalar& s : residual)
        if (!s.is_zero())
            throw GluingMismatch("classes do not agree on the double loci", residual);

    GluedLineBundle out;
    out.classes = classes;
    out.locus_restriction.resize(v.loci.size());
    for (const auto& inc : v.incidences) {
        const Mat* dl = inc.delta(2, false);
        int locus_d = v.loci[std::size_t(inc.locus)].explicit_dim(2);
        if (dl)
            out.locus_restriction[std::size_t(inc.locus)] =
                mat_vec(*dl, classes[std::size_t(inc.lower)]);
        else
            out.locus_restriction[std::size_t(inc.locus)] =
                std::vector<Scalar>(std::size_t(locus_d));
    }
    return out;
}

}  // namespace snchodge
