#include "doctest.h"

#include "dycklab/verify.hpp"

using namespace dycklab;

TEST_CASE("default-budget roundtrip batteries all pass") {
    const CheckReport report = roundtrip_suites();
    if (!report.pass) MESSAGE(report.render());
    CHECK(report.pass);
    CHECK(report.get("rowsert pairs") > 0);
    CHECK(report.get("factorization forward roundtrips") > 0);
    CHECK(report.get("phi chain words") > 0);
    CHECK(report.get("east7 windows") > 0);
    CHECK(report.get("up calls") > 0);
    CHECK(report.get("strings") > 0);
    CHECK(report.get("schur cases") > 0);
}
