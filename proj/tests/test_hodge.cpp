#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "snchodge/hodge.hpp"

using namespace snchodge;

namespace {

Subspace span1(int ambient, std::initializer_list<long> entries) {
    Mat m(ambient, 1);
    int i = 0;
    for (long v : entries) m.at(i++, 0) = Scalar(v);
    return Subspace(ambient, m);
}

Subspace span1c(int ambient, std::vector<Scalar> col) {
    return Subspace(ambient, Mat::from_cols(ambient, {col}));
}

}  // namespace

TEST_CASE("tate twist relabels and is additive") {
    HodgeGrading g = HodgeGrading::single(2, 1, 1, Subspace::full(2));
    HodgeGrading t0 = twist(g, 0);
    CHECK(t0.weight == 2);
    CHECK(t0.find(1, 1) != nullptr);

    HodgeGrading t1 = twist(g, 1);
    CHECK(t1.weight == 4);
    CHECK(t1.find(2, 2) != nullptr);
    CHECK(t1.find(2, 2)->space->dim() == 2);
    CHECK(t1.total_dim() == g.total_dim());

    HodgeGrading back = twist(twist(g, 1), -1);
    CHECK(back.weight == g.weight);
    CHECK(back.find(1, 1) != nullptr);
    HodgeGrading both = twist(twist(g, 2), 3);
    CHECK(both.weight == g.weight + 2 * 5);
}

TEST_CASE("induced gradings of zero and identity maps") {
    HodgeGrading g = HodgeGrading::single(2, 1, 1, Subspace::full(2));
    SUBCASE("zero map") {
        HodgeGrading ker = induced_hodge(Mat::zero(2, 2), g, g, Part::kernel);
        CHECK(ker.block_dim(1, 1) == Dim(2));
        HodgeGrading img = induced_hodge(Mat::zero(2, 2), g, g, Part::image);
        CHECK(img.total_dim() == Dim(0));
    }
    SUBCASE("identity map") {
        HodgeGrading ker = induced_hodge(Mat::identity(2), g, g, Part::kernel);
        CHECK(ker.total_dim() == Dim(0));
        HodgeGrading cok = induced_hodge(Mat::identity(2), g, g, Part::cokernel);
        CHECK(cok.total_dim() == Dim(0));
    }
    SUBCASE("kernel and image dims add up per block") {
        Mat m = Mat::of(2, 2, {1, 1, 1, 1});
        HodgeGrading ker = induced_hodge(m, g, g, Part::kernel);
        HodgeGrading img = induced_hodge(m, g, g, Part::image);
        CHECK(ker.block_dim(1, 1) + img.block_dim(1, 1) == g.block_dim(1, 1));
    }
}

TEST_CASE("type violations are detected") {
    // source is (1,0)+(0,1), target pure (1,0): the conjugate line has
    // nowhere type-compatible to go under the identity
    HodgeGrading src = HodgeGrading::empty(1, 2);
    src.blocks.push_back(HodgeBlock{1, 0, span1c(2, {Scalar(1), Scalar::unit_i()}), Dim(0),
                                    FreeSig::unknown});
    src.blocks.push_back(HodgeBlock{0, 1, span1c(2, {Scalar(1), -Scalar::unit_i()}), Dim(0),
                                    FreeSig::unknown});
    HodgeGrading dst =
        HodgeGrading::single(1, 1, 0, span1c(2, {Scalar(1), Scalar::unit_i()}));
    dst.blocks.push_back(HodgeBlock{0, 1, Subspace::zero(2), Dim(0), FreeSig::unknown});
    CHECK_THROWS_AS(induced_hodge(Mat::identity(2), src, dst, Part::kernel), TypeViolation);
}

TEST_CASE("basis-free parts flow through kernels") {
    HodgeGrading src = HodgeGrading::empty(2, 0);
    src.blocks.push_back(HodgeBlock{2, 0, std::nullopt, Dim(1), FreeSig::h_neg_definite});
    src.blocks.push_back(HodgeBlock{1, 1, std::nullopt, Dim(0, 2), FreeSig::h_neg_definite});
    HodgeGrading dst = HodgeGrading::empty(2, 0);
    HodgeGrading ker = induced_hodge(Mat(0, 0), src, dst, Part::kernel);
    CHECK(ker.block_dim(2, 0) == Dim(1));
    CHECK(ker.block_dim(1, 1) == Dim(0, 2));
    CHECK(ker.find(1, 1)->free_sig == FreeSig::h_neg_definite);
}

TEST_CASE("supplied blockwise matrices drive basis-free parts") {
    // both sides carry a two-dimensional basis-free (1,1) part; the
    // blockwise matrix has rank one
    HodgeGrading src = HodgeGrading::empty(2, 0);
    src.blocks.push_back(HodgeBlock{1, 1, std::nullopt, Dim(2), FreeSig::unknown});
    HodgeGrading dst = src;
    std::vector<BlockMap> maps{BlockMap{1, 1, Mat::of(2, 2, {1, 0, 0, 0})}};
    HodgeGrading ker = induced_hodge(Mat(0, 0), src, dst, Part::kernel, maps);
    CHECK(ker.block_dim(1, 1) == Dim(1));
    HodgeGrading img = induced_hodge(Mat(0, 0), src, dst, Part::image, maps);
    CHECK(img.block_dim(1, 1) == Dim(1));
    HodgeGrading cok = induced_hodge(Mat(0, 0), src, dst, Part::cokernel, maps);
    CHECK(cok.block_dim(1, 1) == Dim(1));
    // without a supplied matrix and with a nonzero matching target the
    // kernel keeps the whole part but images need the data
    HodgeGrading ker2 = induced_hodge(Mat(0, 0), src, dst, Part::kernel);
    CHECK(ker2.block_dim(1, 1) == Dim(2));
}

TEST_CASE("conjugation symmetry") {
    SUBCASE("rational middle block") {
        HodgeGrading g = HodgeGrading::single(2, 1, 1, Subspace::full(2));
        CHECK(check_conjugation_symmetry(g));
    }
    SUBCASE("conjugate pair of lines") {
        HodgeGrading g = HodgeGrading::empty(2, 2);
        g.blocks.push_back(HodgeBlock{2, 0, span1c(2, {Scalar(1), Scalar::unit_i()}), Dim(0),
                                      FreeSig::unknown});
        g.blocks.push_back(HodgeBlock{0, 2, span1c(2, {Scalar(1), -Scalar::unit_i()}), Dim(0),
                                      FreeSig::unknown});
        CHECK(check_conjugation_symmetry(g));
    }
    SUBCASE("mismatched conjugate") {
        HodgeGrading g = HodgeGrading::empty(2, 2);
        g.blocks.push_back(HodgeBlock{2, 0, span1c(2, {Scalar(1), Scalar::unit_i()}), Dim(0),
                                      FreeSig::unknown});
        g.blocks.push_back(HodgeBlock{0, 2, span1(2, {1, 0}), Dim(0), FreeSig::unknown});
        CHECK_FALSE(check_conjugation_symmetry(g));
    }
}

TEST_CASE("opposedness of the induced filtration") {
    SUBCASE("weight one conjugate pair is opposed") {
        HodgeGrading g = HodgeGrading::empty(1, 2);
        g.blocks.push_back(HodgeBlock{1, 0, span1c(2, {Scalar(1), Scalar::unit_i()}), Dim(0),
                                      FreeSig::unknown});
        g.blocks.push_back(HodgeBlock{0, 1, span1c(2, {Scalar(1), -Scalar::unit_i()}), Dim(0),
                                      FreeSig::unknown});
        CHECK(k_opposed(g));
    }
    SUBCASE("one-dimensional weight-one space cannot be opposed") {
        HodgeGrading g = HodgeGrading::single(1, 0, 1, Subspace::full(1));
        CHECK_FALSE(k_opposed(g));
    }
    SUBCASE("middle degree with conjugation-symmetric blocks is opposed") {
        HodgeGrading g = HodgeGrading::empty(2, 3);
        g.blocks.push_back(HodgeBlock{
            2, 0, span1c(3, {Scalar(1), Scalar::unit_i(), Scalar(0)}), Dim(0),
            FreeSig::unknown});
        g.blocks.push_back(HodgeBlock{
            0, 2, span1c(3, {Scalar(1), -Scalar::unit_i(), Scalar(0)}), Dim(0),
            FreeSig::unknown});
        g.blocks.push_back(HodgeBlock{1, 1, span1(3, {0, 0, 1}), Dim(0), FreeSig::unknown});
        CHECK(k_opposed(g));
    }
}

TEST_CASE("grading consistency findings") {
    HodgeGrading bad = HodgeGrading::single(2, 1, 0, Subspace::full(2));
    CHECK(!bad.consistency_findings().empty());  // p+q != weight

    HodgeGrading fine = HodgeGrading::single(2, 1, 1, Subspace::full(2));
    CHECK(fine.consistency_findings().empty());
}

TEST_CASE("dim bookkeeping with a symbolic part") {
    Dim d(3, 2);
    CHECK(d.str() == "3+2*g");
    CHECK((d + Dim(1)).fixed == 4);
    CHECK((d - Dim(0, 2)).is_concrete());
    CHECK(Dim(0, 1).str() == "g");
    CHECK(Dim(0, -1).str() == "-g");
    CHECK(Dim(5).str() == "5");
}
