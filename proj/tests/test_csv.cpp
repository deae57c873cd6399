#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "ardl/csv.hpp"
#include "ardl/rng.hpp"

using namespace ardl;

namespace {

std::string temp_path(const std::string& name) {
    return std::string("/tmp/ardl_test_") + name;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

}  // namespace

TEST_CASE("load_csv basic") {
    const std::string path = temp_path("basic.csv");
    write_file(path, "date,cmd\n2011-01,1.5\n2011-02,2.5\n2011-03,3.5\n");
    Dataset d = load_csv(path);
    CHECK(d.all().size() == 1);
    CHECK(d.length() == 3);
    CHECK(d.start() == TimePoint{2011, 1});
    CHECK(d.at("cmd").values[2] == 3.5);
}

TEST_CASE("load_csv sorts rows") {
    const std::string path = temp_path("unsorted.csv");
    write_file(path, "date,x\n2011-03,3\n2011-01,1\n2011-02,2\n");
    Dataset d = load_csv(path);
    CHECK(d.at("x").values == std::vector<double>{1, 2, 3});
}

TEST_CASE("load_csv errors") {
    CHECK_THROWS_AS(load_csv("/nonexistent/file.csv"), MissingFile);

    const std::string gap = temp_path("gap.csv");
    write_file(gap, "date,x\n2011-01,1\n2011-03,3\n");
    try {
        load_csv(gap);
        FAIL("expected GapInIndex");
    } catch (const GapInIndex& e) {
        CHECK(e.missing_month == "2011-02");
    }

    const std::string badnum = temp_path("badnum.csv");
    write_file(badnum, "date,x\n2011-01,abc\n");
    CHECK_THROWS_AS(load_csv(badnum), ParseError);

    const std::string baddate = temp_path("baddate.csv");
    write_file(baddate, "date,x\n2011/01,1\n");
    CHECK_THROWS_AS(load_csv(baddate), ParseError);

    const std::string dup = temp_path("dup.csv");
    write_file(dup, "date,x\n2011-01,1\n2011-01,2\n");
    CHECK_THROWS_AS(load_csv(dup), ParseError);
}

TEST_CASE("csv round trip preserves values") {
    Rng rng(123);
    Dataset d;
    Series a{"a", {2015, 6}, {}}, b{"b", {2015, 6}, {}};
    for (int i = 0; i < 40; ++i) {
        a.values.push_back(rng.next_normal() * 1e6);
        b.values.push_back(rng.next_normal() * 1e-6);
    }
    d.add(a);
    d.add(b);
    const std::string path = temp_path("roundtrip.csv");
    write_csv(d, path);
    Dataset back = load_csv(path);
    REQUIRE(back.length() == d.length());
    CHECK(back.start() == d.start());
    for (const auto& s : d.all())
        for (std::size_t i = 0; i < s.length(); ++i)
            CHECK(back.at(s.name).values[i] == s.values[i]);  // exact round trip
    std::remove(path.c_str());
}
