#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "flexsky/datagen.hpp"
#include "testutil.hpp"

using namespace flexsky;

namespace {

double pearson(const Dataset& ds, int i, int j) {
    const double n = (double)ds.size();
    double mi = 0, mj = 0;
    for (const auto& t : ds.tuples()) {
        mi += t.values[i];
        mj += t.values[j];
    }
    mi /= n;
    mj /= n;
    double cij = 0, cii = 0, cjj = 0;
    for (const auto& t : ds.tuples()) {
        const double a = t.values[i] - mi, b = t.values[j] - mj;
        cij += a * b;
        cii += a * a;
        cjj += b * b;
    }
    return cij / std::sqrt(cii * cjj);
}

}  // namespace

TEST_CASE("generation is deterministic per seed") {
    const GenSpec spec{DataKind::anticorrelated, 500, 3, 7, 0.05};
    const auto a = generate(spec);
    const auto b = generate(spec);
    REQUIRE(a.size() == 500);
    REQUIRE(a.dim() == 3);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == b[i].id);
        CHECK(a[i].values == b[i].values);
    }
    GenSpec other = spec;
    other.seed = 8;
    const auto c = generate(other);
    bool any_diff = false;
    for (std::size_t i = 0; i < a.size() && !any_diff; ++i)
        any_diff = a[i].values != c[i].values;
    CHECK(any_diff);
}

TEST_CASE("values stay in the unit cube with sequential ids") {
    for (const auto kind :
         {DataKind::anticorrelated, DataKind::correlated, DataKind::independent}) {
        const auto ds = generate({kind, 2000, 5, 11, 0.1});
        REQUIRE(ds.size() == 2000);
        for (std::size_t i = 0; i < ds.size(); ++i) {
            CHECK(ds[i].id == (TupleId)i);
            for (const double v : ds[i].values) CHECK((v >= 0.0 && v <= 1.0));
        }
    }
}

TEST_CASE("independent dimensions are uniform and uncorrelated") {
    const auto ds = generate({DataKind::independent, 20000, 3, 5, 0.05});
    for (int k = 0; k < 3; ++k) {
        double mean = 0;
        for (const auto& t : ds.tuples()) mean += t.values[k];
        mean /= (double)ds.size();
        CHECK(mean == doctest::Approx(0.5).epsilon(0.04));
    }
    CHECK(std::abs(pearson(ds, 0, 1)) < 0.05);
    CHECK(std::abs(pearson(ds, 1, 2)) < 0.05);
}

TEST_CASE("correlated dimensions move together") {
    const auto ds = generate({DataKind::correlated, 20000, 2, 17, 0.05});
    CHECK(pearson(ds, 0, 1) > 0.8);
    // Zero jitter collapses every tuple onto the diagonal.
    const auto flat = generate({DataKind::correlated, 100, 3, 17, 0.0});
    for (const auto& t : flat.tuples()) {
        CHECK(t.values[1] == t.values[0]);
        CHECK(t.values[2] == t.values[0]);
    }
}

TEST_CASE("anticorrelated dimensions trade off") {
    const auto ds = generate({DataKind::anticorrelated, 20000, 2, 23, 0.05});
    CHECK(pearson(ds, 0, 1) < -0.5);
    // Zero jitter keeps every 2d tuple on the anti-diagonal.
    const auto flat = generate({DataKind::anticorrelated, 200, 2, 23, 0.0});
    for (const auto& t : flat.tuples())
        CHECK(t.values[0] + t.values[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("anticorrelated data carries a much larger skyline") {
    const auto anti = generate({DataKind::anticorrelated, 2000, 2, 31, 0.05});
    const auto ind = generate({DataKind::independent, 2000, 2, 31, 0.05});
    const auto sa = skyline_bruteforce(anti).size();
    const auto si = skyline_bruteforce(ind).size();
    CHECK(sa > 2 * si);
}

TEST_CASE("kind names round-trip") {
    for (const auto k :
         {DataKind::anticorrelated, DataKind::correlated, DataKind::independent})
        CHECK(parse_data_kind(to_string(k)) == k);
    CHECK_THROWS_AS((void)parse_data_kind("clustered"), std::invalid_argument);
}

TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS((void)generate({DataKind::independent, 0, 2, 1, 0.05}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)generate({DataKind::independent, 10, 1, 1, 0.05}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)generate({DataKind::independent, 10, 17, 1, 0.05}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)generate({DataKind::independent, 10, 2, 1, -0.1}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)generate({DataKind::independent, 10, 2, 1,
                                    std::numeric_limits<double>::quiet_NaN()}),
                    std::invalid_argument);
}
