#include "snchodge/geometries.hpp"

#include <algorithm>
#include <functional>

namespace snchodge {

namespace {

using DegreeData = CohomologyPackage::DegreeData;

HodgeGrading pure_block(int weight, int p, int q, int dim) {
    HodgeGrading g = HodgeGrading::empty(weight, dim);
    if (dim > 0)
        g.blocks.push_back(HodgeBlock{p, q, Subspace::full(dim), Dim(0), FreeSig::unknown});
    return g;
}

DegreeData degree(int weight, int p, int q, int dim) {
    return DegreeData{Dim(dim), dim, pure_block(weight, p, q, dim)};
}

DegreeData zero_degree(int weight) { return DegreeData{Dim(0), 0, HodgeGrading::empty(weight, 0)}; }

std::vector<Scalar> zero_vec(int n) { return std::vector<Scalar>(std::size_t(n)); }

}  // namespace

CohomologyPackage product_proj(const std::vector<int>& ns) {
    CohomologyPackage p;
    p.n = 0;
    for (int v : ns) p.n += v;
    p.name = "product_proj";
    for (std::size_t i = 0; i < ns.size(); ++i)
        p.name += (i ? "x" : "_") + std::to_string(ns[i]);

    const int r = int(ns.size());
    // monomial exponent tuples per half-degree, leading factors first
    std::vector<std::vector<std::vector<int>>> monos(std::size_t(p.n) + 1);
    for (int d = 0; d <= p.n; ++d) {
        std::function<void(int, int, std::vector<int>&)> gen = [&](int i, int left,
                                                                   std::vector<int>& cur) {
            if (i == r) {
                if (left == 0) monos[std::size_t(d)].push_back(cur);
                return;
            }
            for (int e = std::min(left, ns[std::size_t(i)]); e >= 0; --e) {
                cur.push_back(e);
                gen(i + 1, left - e, cur);
                cur.pop_back();
            }
        };
        std::vector<int> cur;
        gen(0, d, cur);
    }
    auto index_of = [&](int d, const std::vector<int>& m) -> int {
        const auto& list = monos[std::size_t(d)];
        for (std::size_t i = 0; i < list.size(); ++i)
            if (list[i] == m) return int(i);
        return -1;
    };

    p.degrees.resize(std::size_t(2 * p.n) + 1);
    for (int l = 0; l <= 2 * p.n; ++l) {
        if (l % 2 != 0) {
            p.degrees[std::size_t(l)] = zero_degree(l);
            continue;
        }
        int d = l / 2;
        p.degrees[std::size_t(l)] = degree(l, d, d, int(monos[std::size_t(d)].size()));
    }
    for (int l = 0; l <= 2 * p.n; l += 2) {
        int d = l / 2, dc = p.n - d;
        const auto& a = monos[std::size_t(d)];
        const auto& b = monos[std::size_t(dc)];
        Mat g(int(a.size()), int(b.size()));
        for (int i = 0; i < int(a.size()); ++i)
            for (int j = 0; j < int(b.size()); ++j) {
                bool top = true;
                for (int t = 0; t < r; ++t)
                    if (a[std::size_t(i)][std::size_t(t)] + b[std::size_t(j)][std::size_t(t)] !=
                        ns[std::size_t(t)])
                        top = false;
                if (top) g.at(i, j) = Scalar(1);
            }
        p.pairing[l] = g;
    }
    for (int l = 0; l + 2 <= 2 * p.n; l += 2) {
        int d = l / 2;
        std::vector<Mat> tables;
        for (int i = 0; i < r; ++i) {
            Mat m(int(monos[std::size_t(d) + 1].size()), int(monos[std::size_t(d)].size()));
            for (int j = 0; j < int(monos[std::size_t(d)].size()); ++j) {
                std::vector<int> e = monos[std::size_t(d)][std::size_t(j)];
                e[std::size_t(i)] += 1;
                if (e[std::size_t(i)] <= ns[std::size_t(i)]) {
                    int t = index_of(d + 1, e);
                    m.at(t, j) = Scalar(1);
                }
            }
            tables.push_back(std::move(m));
        }
        p.cup2[l] = std::move(tables);
    }
    p.ample_classes.push_back(std::vector<Scalar>(std::size_t(r), Scalar(1)));
    return p;
}

CohomologyPackage hirzebruch(int n) {
    CohomologyPackage p;
    p.name = "hirzebruch_" + std::to_string(n);
    p.n = 2;
    p.degrees = {degree(0, 0, 0, 1), zero_degree(1), degree(2, 1, 1, 2), zero_degree(3),
                 degree(4, 2, 2, 1)};
    p.pairing[0] = Mat::of(1, 1, {1});
    p.pairing[2] = Mat::of(2, 2, {-n, 1, 1, 0});
    p.cup2[0] = {Mat::of(2, 1, {1, 0}), Mat::of(2, 1, {0, 1})};
    p.cup2[2] = {Mat::of(1, 2, {-n, 1}), Mat::of(1, 2, {1, 0})};
    // h + (n+1) f is ample
    p.ample_classes.push_back({Scalar(1), Scalar(n + 1)});
    return p;
}

CohomologyPackage k3_anticanonical_p1cubed() {
    CohomologyPackage p;
    p.name = "k3_anticanonical";
    p.n = 2;
    p.degrees.resize(5);
    p.degrees[0] = degree(0, 0, 0, 1);
    p.degrees[1] = zero_degree(1);
    {
        DegreeData d2;
        d2.dim = Dim(22);
        d2.explicit_dim = 3;
        HodgeGrading g = HodgeGrading::empty(2, 3);
        g.blocks.push_back(
            HodgeBlock{1, 1, Subspace::full(3), Dim(17), FreeSig::h_neg_definite});
        g.blocks.push_back(
            HodgeBlock{2, 0, Subspace::zero(3), Dim(1), FreeSig::h_neg_definite});
        g.blocks.push_back(
            HodgeBlock{0, 2, Subspace::zero(3), Dim(1), FreeSig::h_neg_definite});
        d2.hodge = std::move(g);
        p.degrees[2] = std::move(d2);
    }
    p.degrees[3] = zero_degree(3);
    p.degrees[4] = degree(4, 2, 2, 1);

    Mat gram = Mat::of(3, 3, {0, 2, 2, 2, 0, 2, 2, 2, 0});
    p.pairing[0] = Mat::of(1, 1, {1});
    p.pairing[2] = gram;
    p.cup2[0] = {Mat::of(3, 1, {1, 0, 0}), Mat::of(3, 1, {0, 1, 0}), Mat::of(3, 1, {0, 0, 1})};
    std::vector<Mat> mult;
    for (int i = 0; i < 3; ++i) {
        Mat m(1, 3);
        for (int j = 0; j < 3; ++j) m.at(0, j) = gram.at(i, j);
        mult.push_back(std::move(m));
    }
    p.cup2[2] = std::move(mult);
    p.ample_classes.push_back({Scalar(1), Scalar(1), Scalar(1)});
    return p;
}

CohomologyPackage blowup3fold_along_curve(const CohomologyPackage& base,
                                          const std::vector<CurveData>& curves) {
    if (base.n != 3) throw std::invalid_argument("blow-up constructor needs a threefold");
    const int b2 = base.explicit_dim(2);
    const int b4 = base.explicit_dim(4);
    const int m = int(curves.size());

    CohomologyPackage p;
    p.name = base.name + "_blownup";
    p.n = 3;
    p.degrees.resize(7);
    p.degrees[0] = degree(0, 0, 0, 1);
    p.degrees[1] = zero_degree(1);
    p.degrees[2] = degree(2, 1, 1, b2 + m);
    {
        DegreeData d3;
        HodgeGrading g = HodgeGrading::empty(3, base.explicit_dim(3));
        Dim total = base.dim(3);
        for (const auto& bl : base.at(3).hodge.blocks) g.blocks.push_back(bl);
        Dim extra_fixed(0), extra_sym(0);
        for (const auto& c : curves) {
            if (c.genus)
                extra_fixed += Dim(*c.genus);
            else
                extra_sym += Dim(0, 1);
        }
        Dim per_side = extra_fixed + extra_sym;
        if (!per_side.is_zero()) {
            for (auto pq : {std::pair<int, int>{2, 1}, std::pair<int, int>{1, 2}}) {
                auto& block = g.find_or_add(pq.first, pq.second);
                block.free_sig = (block.free_dim.is_zero() ||
                                  block.free_sig == FreeSig::h_neg_definite)
                                     ? FreeSig::h_neg_definite
                                     : FreeSig::unknown;
                block.free_dim += per_side;
            }
        }
        total += per_side + per_side;
        d3.dim = total;
        d3.explicit_dim = base.explicit_dim(3);
        d3.hodge = std::move(g);
        p.degrees[3] = std::move(d3);
    }
    p.degrees[4] = degree(4, 2, 2, b4 + m);
    p.degrees[5] = zero_degree(5);
    p.degrees[6] = degree(6, 3, 3, 1);

    // curve classes in the base H^4, from the pairing
    std::vector<std::vector<Scalar>> curve_class;
    Mat p24 = base.pairing_at(2);
    for (const auto& c : curves) {
        auto sol = solve(p24, Mat::col_vector(c.h2_dot_curve));
        if (!sol) throw std::invalid_argument("inconsistent curve intersection data");
        curve_class.push_back(sol->col(0));
    }

    p.pairing[0] = Mat::of(1, 1, {1});
    {
        Mat g(b2 + m, b4 + m);
        g.put(0, 0, base.pairing_at(2));
        for (int i = 0; i < m; ++i) g.at(b2 + i, b4 + i) = Scalar(-1);
        p.pairing[2] = std::move(g);
    }
    if (base.pairing.count(3)) p.pairing[3] = base.pairing.at(3);

    {
        std::vector<Mat> t0;
        for (int i = 0; i < b2 + m; ++i) {
            Mat mt(b2 + m, 1);
            mt.at(i, 0) = Scalar(1);
            t0.push_back(std::move(mt));
        }
        p.cup2[0] = std::move(t0);
    }
    {
        std::vector<Mat> t2;
        const auto& base_t2 = base.cup2.at(2);
        for (int i = 0; i < b2; ++i) {
            Mat mt(b4 + m, b2 + m);
            mt.put(0, 0, base_t2[std::size_t(i)]);
            for (int j = 0; j < m; ++j)
                mt.at(b4 + j, b2 + j) = curves[std::size_t(j)].h2_dot_curve[std::size_t(i)];
            t2.push_back(std::move(mt));
        }
        for (int j = 0; j < m; ++j) {
            Mat mt(b4 + m, b2 + m);
            for (int i = 0; i < b2; ++i)
                mt.at(b4 + j, i) = curves[std::size_t(j)].h2_dot_curve[std::size_t(i)];
            // E_j squared: minus the curve class plus (normal degree) times the fiber
            for (int t = 0; t < b4; ++t) mt.at(t, b2 + j) = -curve_class[std::size_t(j)][std::size_t(t)];
            if (curves[std::size_t(j)].normal_degree)
                mt.at(b4 + j, b2 + j) = *curves[std::size_t(j)].normal_degree;
            else
                p.symbolic_products.insert({b2 + j, b2 + j});
            t2.push_back(std::move(mt));
        }
        p.cup2[2] = std::move(t2);
    }
    {
        std::vector<Mat> t4;
        const auto& base_t4 = base.cup2.at(4);
        for (int i = 0; i < b2; ++i) {
            Mat mt(1, b4 + m);
            mt.put(0, 0, base_t4[std::size_t(i)]);
            t4.push_back(std::move(mt));
        }
        for (int j = 0; j < m; ++j) {
            Mat mt(1, b4 + m);
            mt.at(0, b4 + j) = Scalar(-1);
            t4.push_back(std::move(mt));
        }
        p.cup2[4] = std::move(t4);
    }
    return p;
}

namespace {

CohomologyPackage two_disjoint_rational_curves() {
    CohomologyPackage p;
    p.name = "two_sections";
    p.n = 1;
    p.degrees = {degree(0, 0, 0, 2), zero_degree(1), degree(2, 1, 1, 2)};
    p.pairing[0] = Mat::identity(2);
    p.cup2[0] = {Mat::of(2, 2, {1, 0, 0, 0}), Mat::of(2, 2, {0, 0, 0, 1})};
    return p;
}

CohomologyPackage quadric_threefold() {
    CohomologyPackage p;
    p.name = "quadric_threefold";
    p.n = 3;
    p.degrees = {degree(0, 0, 0, 1), zero_degree(1), degree(2, 1, 1, 1), zero_degree(3),
                 degree(4, 2, 2, 1), zero_degree(5), degree(6, 3, 3, 1)};
    p.pairing[0] = Mat::of(1, 1, {1});
    p.pairing[2] = Mat::of(1, 1, {1});
    p.cup2[0] = {Mat::of(1, 1, {1})};
    p.cup2[2] = {Mat::of(1, 1, {2})};
    p.cup2[4] = {Mat::of(1, 1, {1})};
    p.ample_classes.push_back({Scalar(1)});
    return p;
}

CohomologyPackage quintic_threefold() {
    CohomologyPackage p;
    p.name = "quintic_threefold";
    p.n = 3;
    p.degrees.resize(7);
    p.degrees[0] = degree(0, 0, 0, 1);
    p.degrees[1] = zero_degree(1);
    p.degrees[2] = degree(2, 1, 1, 1);
    {
        DegreeData d3;
        d3.dim = Dim(204);
        d3.explicit_dim = 0;
        HodgeGrading g = HodgeGrading::empty(3, 0);
        g.blocks.push_back(HodgeBlock{3, 0, std::nullopt, Dim(1), FreeSig::h_neg_definite});
        g.blocks.push_back(HodgeBlock{2, 1, std::nullopt, Dim(101), FreeSig::h_neg_definite});
        g.blocks.push_back(HodgeBlock{1, 2, std::nullopt, Dim(101), FreeSig::h_neg_definite});
        g.blocks.push_back(HodgeBlock{0, 3, std::nullopt, Dim(1), FreeSig::h_neg_definite});
        d3.hodge = std::move(g);
        p.degrees[3] = std::move(d3);
    }
    p.degrees[4] = degree(4, 2, 2, 1);
    p.degrees[5] = zero_degree(5);
    p.degrees[6] = degree(6, 3, 3, 1);
    p.pairing[0] = Mat::of(1, 1, {1});
    p.pairing[2] = Mat::of(1, 1, {1});
    p.cup2[0] = {Mat::of(1, 1, {1})};
    p.cup2[2] = {Mat::of(1, 1, {5})};
    p.cup2[4] = {Mat::of(1, 1, {1})};
    p.ample_classes.push_back({Scalar(1)});
    return p;
}

CohomologyPackage quartic_threefold() {
    CohomologyPackage p;
    p.name = "quartic_threefold";
    p.n = 3;
    p.degrees.resize(7);
    p.degrees[0] = degree(0, 0, 0, 1);
    p.degrees[1] = zero_degree(1);
    p.degrees[2] = degree(2, 1, 1, 1);
    {
        DegreeData d3;
        d3.dim = Dim(60);
        d3.explicit_dim = 0;
        HodgeGrading g = HodgeGrading::empty(3, 0);
        g.blocks.push_back(HodgeBlock{2, 1, std::nullopt, Dim(30), FreeSig::h_neg_definite});
        g.blocks.push_back(HodgeBlock{1, 2, std::nullopt, Dim(30), FreeSig::h_neg_definite});
        d3.hodge = std::move(g);
        p.degrees[3] = std::move(d3);
    }
    p.degrees[4] = degree(4, 2, 2, 1);
    p.degrees[5] = zero_degree(5);
    p.degrees[6] = degree(6, 3, 3, 1);
    p.pairing[0] = Mat::of(1, 1, {1});
    p.pairing[2] = Mat::of(1, 1, {1});
    p.cup2[0] = {Mat::of(1, 1, {1})};
    p.cup2[2] = {Mat::of(1, 1, {4})};
    p.cup2[4] = {Mat::of(1, 1, {1})};
    p.ample_classes.push_back({Scalar(1)});
    return p;
}

CohomologyPackage projective3space() {
    CohomologyPackage p;
    p.name = "p3";
    p.n = 3;
    p.degrees = {degree(0, 0, 0, 1), zero_degree(1), degree(2, 1, 1, 1), zero_degree(3),
                 degree(4, 2, 2, 1), zero_degree(5), degree(6, 3, 3, 1)};
    p.pairing[0] = Mat::of(1, 1, {1});
    p.pairing[2] = Mat::of(1, 1, {1});
    p.cup2[0] = {Mat::of(1, 1, {1})};
    p.cup2[2] = {Mat::of(1, 1, {1})};
    p.cup2[4] = {Mat::of(1, 1, {1})};
    p.ample_classes.push_back({Scalar(1)});
    return p;
}

CohomologyPackage quartic_k3() {
    CohomologyPackage p;
    p.name = "quartic_k3";
    p.n = 2;
    p.degrees.resize(5);
    p.degrees[0] = degree(0, 0, 0, 1);
    p.degrees[1] = zero_degree(1);
    {
        DegreeData d2;
        d2.dim = Dim(22);
        d2.explicit_dim = 1;
        HodgeGrading g = HodgeGrading::empty(2, 1);
        g.blocks.push_back(
            HodgeBlock{1, 1, Subspace::full(1), Dim(19), FreeSig::h_neg_definite});
        g.blocks.push_back(
            HodgeBlock{2, 0, Subspace::zero(1), Dim(1), FreeSig::h_neg_definite});
        g.blocks.push_back(
            HodgeBlock{0, 2, Subspace::zero(1), Dim(1), FreeSig::h_neg_definite});
        d2.hodge = std::move(g);
        p.degrees[2] = std::move(d2);
    }
    p.degrees[3] = zero_degree(3);
    p.degrees[4] = degree(4, 2, 2, 1);
    p.pairing[0] = Mat::of(1, 1, {1});
    p.pairing[2] = Mat::of(1, 1, {4});
    p.cup2[0] = {Mat::of(1, 1, {1})};
    p.cup2[2] = {Mat::of(1, 1, {4})};
    p.ample_classes.push_back({Scalar(1)});
    return p;
}

}  // namespace

Scenario hopf_f1() {
    Scenario s;
    s.id = "hopf-f1";
    SncVariety v;
    v.n = 2;
    CohomologyPackage t = hirzebruch(1);
    t.name = "Ttilde";
    CohomologyPackage e = hirzebruch(1);
    e.name = "E";
    v.components = {t, e};
    v.loci = {two_disjoint_rational_curves()};

    Incidence inc;
    inc.locus = 0;
    inc.lower = 0;
    inc.upper = 1;
    inc.delta_lower[0] = Mat::of(2, 1, {1, 1});
    inc.delta_upper[0] = Mat::of(2, 1, {1, 1});
    // rows are the two sections; columns (h, f) of each surface
    inc.delta_lower[2] = Mat::of(2, 2, {-1, 1, 0, 1});
    inc.delta_upper[2] = Mat::of(2, 2, {0, 1, -1, 1});
    v.incidences = {inc};
    s.variety = std::move(v);

    // glueable pair with ample restriction: (h+2f, -h+f)
    s.bundles["L"] = {{Scalar(1), Scalar(2)}, {Scalar(-1), Scalar(1)}};
    return s;
}

Scenario hashimoto_sano(long a, std::optional<long> genus_last) {
    if (a < 1) throw std::invalid_argument("parameter must be a positive integer");
    Scenario s;
    s.id = "hashimoto-sano";
    SncVariety v;
    v.n = 3;

    CohomologyPackage base = product_proj({1, 1, 1});
    std::vector<CurveData> curves;
    for (long i = 0; i < a; ++i)
        curves.push_back(CurveData{{Scalar(0), Scalar(2), Scalar(2)}, 1, Scalar(8)});
    {
        CurveData last;
        last.h2_dot_curve = {Scalar(16), Scalar(32 * a * a + 14 * a + 16),
                             Scalar(32 * a * a - 18 * a + 16)};
        last.genus = genus_last;
        if (genus_last)
            last.normal_degree = Scalar(2 * *genus_last - 2 + 128 * a * a - 8 * a + 96);
        curves.push_back(std::move(last));
    }
    CohomologyPackage x1 = blowup3fold_along_curve(base, curves);
    x1.name = "X1_blowup";
    CohomologyPackage x2 = product_proj({1, 1, 1});
    x2.name = "X2_p1cubed";
    v.components = {x1, x2};
    v.loci = {k3_anticanonical_p1cubed()};

    Incidence inc;
    inc.locus = 0;
    inc.lower = 0;
    inc.upper = 1;
    inc.delta_lower[0] = Mat::of(1, 1, {1});
    inc.delta_upper[0] = Mat::of(1, 1, {1});

    // restriction from the blow-up side in the f-basis of the K3
    {
        Mat d(3, 3 + int(a) + 1);
        d.at(0, 0) = Scalar(1);
        d.at(1, 1) = Scalar(1);
        d.at(2, 2) = Scalar(1);
        for (long i = 0; i < a; ++i) d.at(0, 3 + int(i)) = Scalar(1);
        d.at(0, 3 + int(a)) = Scalar(16 * a * a - a + 4);
        d.at(1, 3 + int(a)) = Scalar(4 - 8 * a);
        d.at(2, 3 + int(a)) = Scalar(4 + 8 * a);
        inc.delta_lower[2] = std::move(d);
    }
    // restriction from the product side, composed with the twisted
    // identification of the K3
    {
        Mat d(3, 3);
        d.at(0, 0) = Scalar(1);
        d.at(0, 1) = Scalar(4 * a * a - 2 * a);
        d.at(1, 1) = Scalar(1 - 2 * a);
        d.at(2, 1) = Scalar(2 * a);
        d.at(0, 2) = Scalar(4 * a * a + 2 * a);
        d.at(1, 2) = Scalar(-2 * a);
        d.at(2, 2) = Scalar(1 + 2 * a);
        inc.delta_upper[2] = std::move(d);
    }
    {
        Mat d(1, 3 + int(a) + 1);
        for (int j = 0; j < 3; ++j) d.at(0, j) = Scalar(2);
        for (long i = 0; i <= a; ++i) d.at(0, 3 + int(i)) = Scalar(1);
        inc.delta_lower[4] = std::move(d);
    }
    inc.delta_upper[4] = Mat::of(1, 3, {2, 2, 2});
    v.incidences = {inc};
    s.variety = std::move(v);

    const int h2_1 = 3 + int(a) + 1;
    auto x1_vec = [&](std::initializer_list<std::pair<int, Scalar>> entries) {
        std::vector<Scalar> out = zero_vec(h2_1);
        for (const auto& [i, val] : entries) out[std::size_t(i)] = val;
        return out;
    };
    s.bundles["L"] = {x1_vec({{0, Scalar(1)}, {1, Scalar(1)}, {2, Scalar(1)}}),
                      {Scalar(8 * a * a + 1), Scalar(1 + 4 * a), Scalar(1 - 4 * a)}};
    s.named_classes["F1t"] = {x1_vec({{0, Scalar(1)}}), {Scalar(1), Scalar(0), Scalar(0)}};
    s.named_classes["F2t"] = {
        x1_vec({{0, Scalar(4 * a * a - 2 * a)}, {1, Scalar(1 - 2 * a)}, {2, Scalar(2 * a)}}),
        {Scalar(0), Scalar(1), Scalar(0)}};
    s.named_classes["F3t"] = {
        x1_vec({{0, Scalar(4 * a * a + 2 * a)}, {1, Scalar(-2 * a)}, {2, Scalar(1 + 2 * a)}}),
        {Scalar(0), Scalar(0), Scalar(1)}};
    for (long i = 0; i < a; ++i)
        s.named_classes["Et" + std::to_string(i + 1)] = {x1_vec({{3 + int(i), Scalar(1)}}),
                                                         {Scalar(1), Scalar(0), Scalar(0)}};
    s.named_classes["Delta21"] = {
        x1_vec({{0, Scalar(-1)}, {1, Scalar(1)}}),
        {Scalar(4 * a * a + 2 * a - 1), Scalar(1 + 2 * a), Scalar(-2 * a)}};
    if (!genus_last)
        s.notes.push_back(
            "odd-degree counts are parameterized: the genus of the last blown-up curve was "
            "left unresolved");
    return s;
}

Scenario clemens(long l, const std::vector<long>& degrees_in, long a) {
    if (l < 1) throw std::invalid_argument("at least one curve is needed");
    std::vector<long> ds = degrees_in;
    if (ds.empty()) ds.assign(std::size_t(l), 1);
    if (long(ds.size()) != l) throw std::invalid_argument("one degree per curve expected");

    Scenario s;
    s.id = "clemens";
    SncVariety v;
    v.n = 3;

    CohomologyPackage quintic = quintic_threefold();
    std::vector<CurveData> curves;
    for (long i = 0; i < l; ++i)
        curves.push_back(CurveData{{Scalar(ds[std::size_t(i)])}, 0, Scalar(-2)});
    CohomologyPackage xt = blowup3fold_along_curve(quintic, curves);
    xt.name = "X_tilde";
    v.components.push_back(xt);
    for (long i = 0; i < l; ++i) {
        CohomologyPackage q = quadric_threefold();
        q.name = "Q" + std::to_string(i + 1);
        v.components.push_back(q);
    }
    for (long i = 0; i < l; ++i) {
        CohomologyPackage sf = product_proj({1, 1});
        sf.name = "S" + std::to_string(i + 1);
        v.loci.push_back(sf);
    }
    for (long i = 0; i < l; ++i) {
        Incidence inc;
        inc.locus = int(i);
        inc.lower = 0;
        inc.upper = int(i) + 1;
        inc.delta_lower[0] = Mat::of(1, 1, {1});
        inc.delta_upper[0] = Mat::of(1, 1, {1});
        {
            // columns: pullback hyperplane, exceptional classes
            Mat d(2, 1 + int(l));
            d.at(0, 0) = Scalar(ds[std::size_t(i)]);
            d.at(0, 1 + int(i)) = Scalar(-1);
            d.at(1, 1 + int(i)) = Scalar(-1);
            inc.delta_lower[2] = std::move(d);
        }
        inc.delta_upper[2] = Mat::of(2, 1, {1, 1});
        {
            Mat d(1, 1 + int(l));
            d.at(0, 1 + int(i)) = Scalar(-1);
            inc.delta_lower[4] = std::move(d);
        }
        inc.delta_upper[4] = Mat::of(1, 1, {1});
        v.incidences.push_back(std::move(inc));
    }
    s.variety = std::move(v);

    std::vector<std::vector<Scalar>> bundle;
    {
        std::vector<Scalar> xcls = zero_vec(1 + int(l));
        for (long i = 0; i < l; ++i) xcls[std::size_t(1 + i)] = Scalar(-a * ds[std::size_t(i)]);
        bundle.push_back(std::move(xcls));
        for (long i = 0; i < l; ++i) bundle.push_back({Scalar(a * ds[std::size_t(i)])});
    }
    s.bundles["L"] = std::move(bundle);
    return s;
}

Scenario tyurin_quintic() {
    Scenario s;
    s.id = "tyurin-quintic";
    SncVariety v;
    v.n = 3;

    CohomologyPackage x1 = quartic_threefold();
    x1.name = "X1_quartic";
    CohomologyPackage x2 = blowup3fold_along_curve(
        projective3space(), {CurveData{{Scalar(20)}, 51, Scalar(180)}});
    x2.name = "X2_blownup_p3";
    v.components = {x1, x2};
    v.loci = {quartic_k3()};

    Incidence inc;
    inc.locus = 0;
    inc.lower = 0;
    inc.upper = 1;
    inc.delta_lower[0] = Mat::of(1, 1, {1});
    inc.delta_upper[0] = Mat::of(1, 1, {1});
    inc.delta_lower[2] = Mat::of(1, 1, {1});
    inc.delta_upper[2] = Mat::of(1, 2, {1, 5});
    inc.delta_lower[4] = Mat::of(1, 1, {1});
    inc.delta_upper[4] = Mat::of(1, 2, {4, 1});
    v.incidences = {inc};
    s.variety = std::move(v);

    s.bundles["L"] = {{Scalar(1)}, {Scalar(1), Scalar(0)}};
    return s;
}

Scenario build_scenario(const std::string& id, const std::map<std::string, long>& params) {
    auto get = [&](const std::string& key, long fallback) {
        auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    };
    if (id == "hopf-f1") return hopf_f1();
    if (id == "hashimoto-sano") {
        std::optional<long> genus;
        if (params.count("genus")) genus = params.at("genus");
        return hashimoto_sano(get("a", 1), genus);
    }
    if (id == "clemens") {
        long l = get("l", 1);
        std::vector<long> ds;
        for (long i = 1; i <= l; ++i) ds.push_back(get("d" + std::to_string(i), get("d", 1)));
        return clemens(l, ds, get("a", 1));
    }
    if (id == "tyurin-quintic") return tyurin_quintic();
    throw std::invalid_argument("unknown scenario: " + id);
}

}  // namespace snchodge
