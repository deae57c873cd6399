#include <doctest.h>

#include <cmath>

#include "ardl/rng.hpp"
#include "ardl/series.hpp"

using namespace ardl;

TEST_CASE("timepoint ordering and arithmetic") {
    TimePoint a{2011, 12};
    CHECK(a.next() == TimePoint{2012, 1});
    CHECK(a < TimePoint{2012, 1});
    CHECK(a.plus_months(13) == TimePoint{2013, 1});
    CHECK(a.plus_months(-12) == TimePoint{2010, 12});
    CHECK(TimePoint{2013, 1}.months_since(a) == 13);
    CHECK(a.to_string() == "2011-12");
    CHECK(TimePoint::parse("2020-03") == TimePoint{2020, 3});
    CHECK_THROWS_AS(TimePoint::parse("2020-13"), ParseError);
}

TEST_CASE("log transform") {
    Series s{"cmd", {2011, 1}, {1.0, std::exp(1.0), std::exp(2.0)}};
    Series l = log_transform(s);
    CHECK(l.name == "Lcmd");
    CHECK(l.values[0] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(l.values[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(l.values[2] == doctest::Approx(2.0).epsilon(1e-14));

    // ln(1e6) against an independently evaluated constant
    Series m{"m", {2011, 1}, {1000000.0}};
    CHECK(log_transform(m).values[0] == doctest::Approx(13.815510557964274).epsilon(1e-13));

    Series bad{"bad", {2011, 1}, {0.0, 1.0}};
    CHECK_THROWS_AS(log_transform(bad), NonPositiveValue);
    try {
        log_transform(bad);
    } catch (const NonPositiveValue& e) {
        CHECK(e.index == 0);
    }
}

TEST_CASE("log/exp round trip") {
    Rng rng(7);
    Series s{"x", {2011, 1}, {}};
    for (int i = 0; i < 50; ++i) s.values.push_back(std::exp(rng.next_normal()));
    Series back = exp_transform(log_transform(s));
    for (std::size_t i = 0; i < s.length(); ++i)
        CHECK(back.values[i] == doctest::Approx(s.values[i]).epsilon(1e-12));
}

TEST_CASE("regime dummy") {
    Series d = make_dummy("dum_c19", {2019, 11}, 4, RegimeFrom{{2020, 1}});
    CHECK(d.values == std::vector<double>{0, 0, 1, 1});

    // threshold after the range end
    Series zero = make_dummy("z", {2019, 1}, 5, RegimeFrom{{2030, 1}});
    for (double v : zero.values) CHECK(v == 0.0);

    // non-decreasing over the index
    Series longer = make_dummy("d", {2018, 6}, 60, RegimeFrom{{2020, 1}});
    for (std::size_t i = 1; i < longer.length(); ++i)
        CHECK(longer.values[i] >= longer.values[i - 1]);
}

TEST_CASE("event dummy") {
    Series d = make_dummy("dum_eid", {2011, 7}, 3, EventMonths{{TimePoint{2011, 8}}});
    CHECK(d.values == std::vector<double>{0, 1, 0});
    CHECK_THROWS_AS(make_dummy("e", {2011, 1}, 0, EventMonths{{}}), EmptyRange);
}

TEST_CASE("ratio") {
    Series a{"coin", {2011, 1}, {1000, 1000}};
    Series b{"gold", {2011, 1}, {5000, 10000}};
    Series r = ratio("valco", a, b);
    CHECK(r.values[0] == doctest::Approx(0.2));
    CHECK(r.values[1] == doctest::Approx(0.1));

    Series self = ratio("one", a, a);
    for (double v : self.values) CHECK(v == 1.0);

    Series zero{"z", {2011, 1}, {1.0, 0.0}};
    CHECK_THROWS_AS(ratio("bad", a, zero), DivisionByZero);
    Series shifted{"s", {2011, 2}, {1.0, 2.0}};
    CHECK_THROWS_AS(ratio("bad", a, shifted), MisalignedSeries);
}

TEST_CASE("descriptive stats") {
    Series s{"x", {2011, 1}, {1, 2, 3}};
    StatsSummary st = descriptive_stats(s);
    CHECK(st.mean == doctest::Approx(2.0));
    CHECK(st.min == 1.0);
    CHECK(st.max == 3.0);
    CHECK(st.std_dev == doctest::Approx(1.0));

    Series constant{"c", {2011, 1}, {5, 5, 5}};
    CHECK(descriptive_stats(constant).std_dev == 0.0);

    Series one{"o", {2011, 1}, {1.0}};
    CHECK_THROWS_AS(descriptive_stats(one), TooShort);
}

TEST_CASE("stats invariants on random series") {
    Rng rng(42);
    for (int rep = 0; rep < 20; ++rep) {
        Series s{"x", {2011, 1}, {}};
        const int n = 2 + static_cast<int>(rng.next_u64() % 40);
        for (int i = 0; i < n; ++i) s.values.push_back(10.0 * rng.next_normal());
        StatsSummary st = descriptive_stats(s);
        CHECK(st.min <= st.mean + 1e-12);
        CHECK(st.mean <= st.max + 1e-12);
        // brute-force variance
        double mean = 0;
        for (double v : s.values) mean += v;
        mean /= n;
        double ss = 0;
        for (double v : s.values) ss += (v - mean) * (v - mean);
        CHECK(st.std_dev * st.std_dev == doctest::Approx(ss / (n - 1)).epsilon(1e-12));
    }
}

TEST_CASE("dataset alignment") {
    Dataset d;
    d.add(Series{"a", {2011, 1}, {1, 2, 3}});
    CHECK_THROWS_AS(d.add(Series{"b", {2011, 2}, {1, 2, 3}}), MisalignedSeries);
    CHECK_THROWS_AS(d.add(Series{"b", {2011, 1}, {1, 2}}), MisalignedSeries);
    CHECK_THROWS_AS(d.add(Series{"a", {2011, 1}, {4, 5, 6}}), MisalignedSeries);
    d.add(Series{"b", {2011, 1}, {4, 5, 6}});
    CHECK(d.at("b").values[2] == 6);
    CHECK_THROWS_AS(static_cast<void>(d.at("missing")), UnknownSeries);
}
