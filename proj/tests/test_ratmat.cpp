#include <catch_amalgamated.hpp>

#include <random>

#include "corpus.hpp"
#include "wreath/ratmat.hpp"

using namespace wreath;
using wreath::testing::mat;
using wreath::testing::q;

namespace {

Mat random_mat(std::mt19937& rng, int rows, int cols, int m = 1)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> keep(0, 2);
    Mat a(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
        {
            Scalar x = keep(rng) == 0 ? Scalar(0) : Scalar(coeff(rng));
            if (m > 1 && keep(rng) == 0)
                x += Scalar::zeta(m, coeff(rng)) * Scalar(coeff(rng));
            a(r, c) = x;
        }
    return a;
}

Scalar random_scalar(std::mt19937& rng, int m)
{
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> c;
    for (int k = 0; k < std::max(1, m); ++k)
        c.emplace_back(num(rng), den(rng));
    return Scalar::from_powers(m, c);
}

}   // namespace

TEST_CASE("scalar grammar round trips", "[scalar]")
{
    CHECK(parse_scalar("1/2 + 3*z^2", 5).str() == parse_scalar(parse_scalar("1/2 + 3*z^2", 5).str(), 5).str());
    CHECK(parse_scalar("-7/3", 1) == Scalar(Rational(-7, 3)));
    CHECK(parse_scalar("z", 4) * parse_scalar("z^3", 4) == Scalar(1));
    CHECK(parse_scalar("1 + z + z^2", 3).is_zero());
    CHECK(parse_scalar("z^2", 2) == Scalar(1));
    CHECK_THROWS_AS(parse_scalar("1/0", 1), ScalarParseError);
    CHECK_THROWS_AS(parse_scalar("2*", 1), ScalarParseError);
    CHECK_THROWS_AS(parse_scalar("", 1), ScalarParseError);
    CHECK_THROWS_AS(parse_scalar("x", 1), ScalarParseError);
}

TEST_CASE("mixing cyclotomic orders is an error", "[scalar]")
{
    const Scalar a = Scalar::zeta(3);
    const Scalar b = Scalar::zeta(4);
    CHECK_THROWS_AS(a + b, OrderMismatch);
    CHECK_NOTHROW(a + Scalar(1));
    CHECK((Scalar::zeta(4, 2) + Scalar(1)).is_zero());
}

TEST_CASE("equality ignores how a value was reached", "[scalar]")
{
    const Scalar z = Scalar::zeta(3, 1);
    Scalar a = q("5");
    a += z;
    Scalar b = z;
    b += q("5");
    CHECK(a == b);
    CHECK(a * Scalar(2) == Scalar(2) * b);
    CHECK((a - z) == q("5"));
    CHECK(a * Scalar(2) == parse_scalar("10 + 2*z", 3));
}

TEST_CASE("field axioms on random elements", "[scalar]")
{
    std::mt19937 rng(11);
    for (int m : {1, 2, 3, 4, 6})
        for (int trial = 0; trial < 25; ++trial)
        {
            const Scalar x = random_scalar(rng, m);
            const Scalar y = random_scalar(rng, m);
            const Scalar z = random_scalar(rng, m);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            if (!x.is_zero())
                CHECK(x * x.inverse() == Scalar(1));
        }
}

TEST_CASE("rref examples", "[ratmat]")
{
    auto r = rref<Scalar>(mat({{"1", "2"}, {"2", "4"}}));
    CHECK(r.reduced == mat({{"1", "2"}, {"0", "0"}}));
    CHECK(r.pivots == std::vector<Eigen::Index>{0});

    const Mat id = Mat::Identity(3, 3);
    auto s = rref<Scalar>(id);
    CHECK(s.reduced == id);
    CHECK(s.pivots == std::vector<Eigen::Index>{0, 1, 2});

    Mat z(2, 2);
    z << Scalar::zeta(4), Scalar(0), Scalar(0), Scalar(1);
    auto t = rref<Scalar>(z);
    CHECK(t.reduced == Mat::Identity(2, 2));
    CHECK(t.pivots == std::vector<Eigen::Index>{0, 1});
    CHECK(Scalar::zeta(4) * -Scalar::zeta(4) == Scalar(1));
}

TEST_CASE("kernel examples", "[ratmat]")
{
    const Mat k = kernel_basis<Scalar>(mat({{"1", "2"}, {"2", "4"}}));
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0) == Scalar(-2) * k(1, 0));

    CHECK(kernel_basis<Scalar>(Mat::Zero(0, 3)) == Mat::Identity(3, 3));

    const Mat k2 = kernel_basis<Scalar>(mat({{"1", "1", "0"}, {"0", "1", "1"}}));
    CHECK(k2 == mat({{"1"}, {"-1"}, {"1"}}));
}

TEST_CASE("solve_in_span examples", "[ratmat]")
{
    CHECK(solve_in_span<Scalar>(Mat::Identity(2, 2), mat({{"3"}, {"5"}})) == mat({{"3"}, {"5"}}));
    CHECK(solve_in_span<Scalar>(mat({{"2"}, {"4"}}), mat({{"1"}, {"2"}})) == mat({{"1/2"}}));
    CHECK_THROWS_AS(solve_in_span<Scalar>(mat({{"1"}, {"0"}}), mat({{"0"}, {"1"}})), NotInSpan);
}

TEST_CASE("intersect_kernels examples", "[ratmat]")
{
    CHECK(intersect_kernels<Scalar>({}, 2) == Mat::Identity(2, 2));
    const Mat none = intersect_kernels<Scalar>({mat({{"1", "0"}}), mat({{"0", "1"}})}, 2);
    CHECK(none.rows() == 2);
    CHECK(none.cols() == 0);
    CHECK(intersect_kernels<Scalar>({mat({{"1", "1", "0"}}), mat({{"0", "1", "1"}})}, 3) ==
          mat({{"1"}, {"-1"}, {"1"}}));
    CHECK_THROWS(intersect_kernels<Scalar>({mat({{"1", "1"}})}, 3));
}

TEST_CASE("kernel and rank properties on random matrices", "[ratmat]")
{
    std::mt19937 rng(7);
    for (int m : {1, 3, 4})
        for (int trial = 0; trial < 40; ++trial)
        {
            const int rows = 1 + trial % 4;
            const int cols = 1 + (trial / 4) % 5;
            const Mat a = random_mat(rng, rows, cols, m);
            const Mat k = kernel_basis<Scalar>(a);
            CHECK(is_zero<Scalar>(mul<Scalar>(a, k)));
            CHECK(rank<Scalar>(a) + k.cols() == cols);
            CHECK(rank<Scalar>(k) == k.cols());
            const auto once = rref<Scalar>(a);
            CHECK(rref<Scalar>(once.reduced).reduced == once.reduced);
        }
}

TEST_CASE("routines also run over plain rationals", "[ratmat]")
{
    DenseMatrix<Rational> a(2, 3);
    a << 1, 1, 0, 0, 1, 1;
    const DenseMatrix<Rational> k = kernel_basis<Rational>(a);
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0) == 1);
    CHECK(k(1, 0) == -1);
    CHECK(k(2, 0) == 1);
}

TEST_CASE("products and traces", "[ratmat]")
{
    const Mat a = mat({{"1", "2"}, {"3", "4"}});
    const Mat b = mat({{"0", "1"}, {"1", "0"}});
    CHECK(mul<Scalar>(a, b) == mat({{"2", "1"}, {"4", "3"}}));
    CHECK(trace<Scalar>(a) == Scalar(5));
    CHECK(kron<Scalar>(b, Mat::Identity(1, 1)) == b);
    CHECK(kron<Scalar>(Mat::Identity(2, 2), a).rows() == 4);
    CHECK_THROWS(mul<Scalar>(a, Mat::Zero(3, 1)));
    CHECK(mul<Scalar>(Mat::Zero(0, 2), a).rows() == 0);
}
