#include "mdc/linprog.hpp"
#include "mdc/rational.hpp"

#include <gtest/gtest.h>

using namespace mdc;

TEST(Rational, ParseCanonical) {
    EXPECT_EQ(parseRational("2/4"), rat(1, 2));
    EXPECT_EQ(parseRational("-3"), rat(-3));
    EXPECT_EQ(toString(parseRational("6/3")), "2");
    EXPECT_EQ(toString(rat(-1, 2)), "-1/2");
}

TEST(Rational, ParseRejects) {
    for (const char* s : {"", "1/", "/2", "1/0", "a", "1//2", "1.5", "--1"})
        EXPECT_THROW(parseRational(s), InputError) << s;
}

TEST(Rational, RoundTrip) {
    for (const char* s : {"0", "7", "-7/3", "22/7"}) EXPECT_EQ(toString(parseRational(s)), s);
}

TEST(LinearAlgebra, RankNullity) {
    RatMatrix m{ratVec({1, 2, 3}), ratVec({2, 4, 6}), ratVec({0, 1, 1})};
    auto ns = nullspace(m, 3);
    EXPECT_EQ(rank(m) + ns.size(), 3u);
    for (const auto& v : ns) EXPECT_TRUE(isZero(matVec(m, v)));
}

TEST(LinearAlgebra, InSpanAndSolve) {
    std::vector<RatVector> b{ratVec({1, 0, 1}), ratVec({0, 1, 1})};
    EXPECT_TRUE(inSpan(b, ratVec({2, 3, 5})));
    EXPECT_FALSE(inSpan(b, ratVec({0, 0, 1})));
    RatVector x;
    ASSERT_TRUE(solveLinear({ratVec({2, 1}), ratVec({1, 3})}, ratVec({3, 5}), x, 2));
    EXPECT_EQ(x, (RatVector{rat(4, 5), rat(7, 5)}));
}

TEST(LinearProgram, BealeTerminates) {
    LinearProgram lp(4);
    lp.nonneg.assign(4, true);
    lp.addLe({rat(1, 4), -60, rat(-1, 25), 9}, 0);
    lp.addLe({rat(1, 2), -90, rat(-1, 50), 3}, 0);
    lp.addLe({0, 0, 1, 0}, 1);
    lp.objective = {rat(-3, 4), 150, rat(-1, 50), 6};
    auto r = solve(lp);
    ASSERT_EQ(r.status, LpStatus::Optimal);
    EXPECT_EQ(r.value, rat(-1, 20));
    EXPECT_TRUE(satisfies(lp, r.point));
}

TEST(LinearProgram, InfeasibleAndUnbounded) {
    LinearProgram a(1);
    a.addLe({1}, -1);
    a.addGe({1}, 1);
    EXPECT_EQ(solve(a).status, LpStatus::Infeasible);
    LinearProgram b(2);
    b.nonneg.assign(2, true);
    b.objective = {1, 1};
    b.sense = Sense::Maximize;
    b.addLe({1, -1}, 1);
    EXPECT_EQ(solve(b).status, LpStatus::Unbounded);
}
