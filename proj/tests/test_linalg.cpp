#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "snchodge/linalg.hpp"

#include "test_support.hpp"

#include <random>

using namespace snchodge;

namespace {

Mat random_symmetric(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> d(-4, 4);
    Mat g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            g.at(i, j) = Scalar(d(rng));
            g.at(j, i) = g.at(i, j);
        }
    return g;
}

Mat random_hermitian(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> d(-3, 3);
    Mat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = Scalar(Rational(d(rng)), Rational(d(rng)));
    return a + a.conj_transpose();
}

Mat random_invertible(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> d(-3, 3);
    while (true) {
        Mat p(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) p.at(i, j) = Scalar(d(rng));
        if (!det(p).is_zero()) return p;
    }
}

}  // namespace

TEST_CASE("rank, kernel and image") {
    SUBCASE("zero matrix") {
        auto r = rank_kernel_image(Mat::zero(2, 2));
        CHECK(r.rank == 0);
        CHECK(r.kernel.dim() == 2);
        CHECK(r.image.dim() == 0);
    }
    SUBCASE("identity") {
        auto r = rank_kernel_image(Mat::identity(3));
        CHECK(r.rank == 3);
        CHECK(r.kernel.dim() == 0);
    }
    SUBCASE("two-by-four restriction-style matrix") {
        Mat m = Mat::of(2, 4, {-1, 1, 0, -1, 0, 1, 1, -1});
        auto r = rank_kernel_image(m);
        CHECK(r.rank == 2);
        CHECK(r.kernel.dim() == 2);
        for (int j = 0; j < 2; ++j) {
            auto v = r.kernel.basis.col(j);
            for (const Scalar& s : mat_vec(m, v)) CHECK(s.is_zero());
        }
    }
    SUBCASE("rank equals the rank of the transpose") {
        std::mt19937 rng(20240811);
        std::uniform_int_distribution<int> d(-3, 3);
        for (int t = 0; t < 25; ++t) {
            Mat m(3, 5);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 5; ++j) m.at(i, j) = Scalar(d(rng));
            auto r = rank_kernel_image(m);
            CHECK(r.rank == rank(m.transpose()));
            CHECK(r.rank + r.kernel.dim() == m.cols());
        }
    }
}

TEST_CASE("quotient representatives") {
    SUBCASE("full by zero") {
        auto q = quotient_basis(Subspace::full(3), Subspace::zero(3));
        CHECK(q.dim() == 3);
    }
    SUBCASE("space by itself") {
        auto q = quotient_basis(Subspace::full(2), Subspace::full(2));
        CHECK(q.dim() == 0);
    }
    SUBCASE("plane modulo a diagonal line") {
        Subspace v = Subspace::full(2);
        Subspace u(2, Mat::of(2, 1, {1, 1}));
        auto q = quotient_basis(v, u);
        CHECK(q.dim() == 1);
        // the representative together with (1,1) spans the plane
        CHECK(rank(q.basis.hstack(u.basis)) == 2);
    }
    SUBCASE("containment is enforced") {
        Subspace v(3, Mat::of(3, 1, {1, 0, 0}));
        Subspace u(3, Mat::of(3, 1, {0, 1, 0}));
        CHECK_THROWS_AS(quotient_basis(v, u), ContainmentError);
    }
}

TEST_CASE("orthogonal complements") {
    SUBCASE("zero subspace") {
        Form f{Mat::identity(2), FormKind::symmetric_bilinear};
        CHECK(orth_complement(f, Subspace::zero(2)).dim() == 2);
    }
    SUBCASE("euclidean line") {
        Form f{Mat::identity(2), FormKind::symmetric_bilinear};
        Subspace e1(2, Mat::of(2, 1, {1, 0}));
        auto c = orth_complement(f, e1);
        CHECK(c.dim() == 1);
        CHECK(same_span(c, Subspace(2, Mat::of(2, 1, {0, 1}))));
    }
    SUBCASE("isotropic line of a hyperbolic plane") {
        Form f{Mat::of(2, 2, {0, 1, 1, 0}), FormKind::symmetric_bilinear};
        Subspace e1(2, Mat::of(2, 1, {1, 0}));
        auto c = orth_complement(f, e1);
        CHECK(same_span(c, e1));
    }
    SUBCASE("dimension identity and double complement") {
        std::mt19937 rng(7002);
        for (int t = 0; t < 20; ++t) {
            Mat g = random_symmetric(rng, 4);
            if (det(g).is_zero()) continue;
            Form f{g, FormKind::symmetric_bilinear};
            std::uniform_int_distribution<int> d(-2, 2);
            Mat cols(4, 2);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 2; ++j) cols.at(i, j) = Scalar(d(rng));
            Subspace w = rank_kernel_image(cols).image;
            Subspace c = orth_complement(f, w);
            CHECK(w.dim() + c.dim() == 4);
            CHECK(same_span(orth_complement(f, c), w));
        }
    }
}

TEST_CASE("signature by congruence diagonalization") {
    SUBCASE("identity") {
        Signature s = signature_of_gram(Mat::identity(3), false);
        CHECK(s == Signature{3, 0, 0});
    }
    SUBCASE("three-dimensional intersection gram") {
        Mat g = Mat::of(3, 3, {0, 2, 2, 2, 0, 2, 2, 2, 0});
        CHECK(signature_of_gram(g, false) == Signature{1, 2, 0});
    }
    SUBCASE("opposite squares") {
        Mat g = Mat::of(2, 2, {3, 0, 0, -3});
        CHECK(signature_of_gram(g, false) == Signature{1, 1, 0});
    }
    SUBCASE("antisymmetric forms are rejected") {
        Form f{Mat::of(2, 2, {0, 1, -1, 0}), FormKind::antisymmetric_bilinear};
        CHECK_THROWS_AS(signature(f, Subspace::full(2)), KindError);
    }
    SUBCASE("restriction to a subspace") {
        Form f{Mat::of(3, 3, {1, 0, 0, 0, -1, 0, 0, 0, -1}), FormKind::symmetric_bilinear};
        Subspace w(3, Mat::of(3, 2, {1, 0, 0, 1, 0, 0}));
        CHECK(signature(f, w) == Signature{1, 1, 0});
        // invariant under a change of basis of the subspace
        Subspace w2(3, Mat::of(3, 2, {1, 1, 1, -1, 0, 0}));
        CHECK(signature(f, w2) == Signature{1, 1, 0});
    }
    SUBCASE("hermitian restriction of a complex symmetric-looking gram") {
        Mat g(2, 2);
        g.at(0, 0) = Scalar(2);
        g.at(0, 1) = Scalar::unit_i();
        g.at(1, 0) = -Scalar::unit_i();
        g.at(1, 1) = Scalar(2);
        Form f{g, FormKind::hermitian_sesquilinear};
        CHECK(f.shape_consistent());
        CHECK(signature(f, Subspace::full(2)) == Signature{2, 0, 0});
    }
    SUBCASE("congruence invariance") {
        std::mt19937 rng(411);
        for (int t = 0; t < 12; ++t) {
            Mat g = random_symmetric(rng, 4);
            Mat p = random_invertible(rng, 4);
            CHECK(signature_of_gram(p.transpose() * g * p, false) ==
                  signature_of_gram(g, false));
            Mat h = random_hermitian(rng, 4);
            Mat q = random_invertible(rng, 4);
            CHECK(signature_of_gram(q.transpose() * h * q.conj(), true) ==
                  signature_of_gram(h, true));
        }
    }
    SUBCASE("agrees with the Sturm oracle") {
        std::mt19937 rng(90210);
        std::uniform_int_distribution<int> dims(1, 5);
        for (int t = 0; t < 60; ++t) {
            int n = dims(rng);
            Mat g = (t % 2 == 0) ? random_symmetric(rng, n) : random_hermitian(rng, n);
            Signature lhs = signature_of_gram(g, t % 2 != 0);
            Signature rhs = testsupport::sturm_signature(g);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("solve returns particular solutions") {
    Mat a = Mat::of(2, 3, {1, 2, 0, 0, 0, 1});
    Mat b = Mat::of(2, 1, {5, 7});
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK((a * *x) == b);
    Mat inconsistent_a = Mat::of(2, 1, {1, 1});
    Mat inconsistent_b = Mat::of(2, 1, {0, 1});
    CHECK_FALSE(solve(inconsistent_a, inconsistent_b).has_value());
}
