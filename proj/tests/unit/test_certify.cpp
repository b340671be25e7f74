#include "doctest.h"

#include "../frozen_tables.hpp"
#include "db_fixture.hpp"
#include "wcifano/certify.hpp"
#include "wcifano/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

using namespace wcifano;

TEST_CASE("check_exclL") {
    CHECK(check_exclL(6, 1, 2, rat(1, 18), 2));        // 2/3 <= 1, mult ok
    CHECK_FALSE(check_exclL(8, 1, 2, rat(1, 8), 2));   // product 2 > 1
    CHECK_FALSE(check_exclL(6, 1, 1, rat(1, 18), 2));  // mult 2 > c2 = 1
    CHECK(check_exclL(1, 1, 1, rat(1), 1));            // boundary: exactly 1
}

TEST_CASE("check_exclG") {
    CHECK(check_exclG(ExclGVariant::lc_divisor, 1, 0, 9, rat(4, 45)));
    CHECK(check_exclG(ExclGVariant::lc_divisor, 1, 0, 18, rat(1, 18)));  // == 1
    CHECK_FALSE(check_exclG(ExclGVariant::lc_divisor, 2, 0, 18, rat(1, 18)));
    CHECK_FALSE(check_exclG(ExclGVariant::two_divisors, 1, 1, 7, rat(1, 6)));
    CHECK(check_exclG(ExclGVariant::two_divisors, 1, 2, 5, rat(1, 18)));
}

TEST_CASE("check_criwisol") {
    CHECK(check_criwisol(1, 5, rat(5, 56), 1, rat(3, 56)) ==
          CriwisolOutcome::pass_a);
    CHECK(check_criwisol(2, 5, rat(15, 56), 1, rat(5, 56)) ==
          CriwisolOutcome::pass_b);
    CHECK(check_criwisol(1, 10, rat(1, 2), 1, rat(1, 5)) ==
          CriwisolOutcome::fail);
}

TEST_CASE("check_singptNE_numeric") {
    {
        auto r = check_singptNE_numeric(rat(1, 15), 2, 1, {1, 1, 6, 8, 9, 10});
        CHECK(r.pass);
        CHECK(r.kawamata == rat(-13, 30));
        CHECK(r.weight_found);
    }
    {
        auto r = check_singptNE_numeric(rat(2, 65), 5, 1, {1, 2, 5, 9, 11, 13});
        CHECK(r.pass);
        CHECK(r.kawamata == rat(-1, 52));
    }
    {
        // the one anomalous basket point: Kawamata degree stays positive
        auto r = check_singptNE_numeric(rat(4, 45), 5, 2, {1, 1, 5, 7, 8, 9});
        CHECK_FALSE(r.pass);
        CHECK(r.kawamata == rat(1, 18));
        CHECK(r.weight_found);
    }
}

TEST_CASE("check_somedistsingpt: triple where a_k * a_j2 * A^3 lands on 2") {
    for (int no : {79, 80, 83}) {
        const auto& f = testdb::fam(no);
        REQUIRE(f.distinguished.size() == 1);
        const auto& c = f.distinguished[0];
        CHECK(check_somedistsingpt(f.shape(), c));
        Rational product = rat(f.weights[static_cast<size_t>(c.k)]) *
                           rat(f.weights[static_cast<size_t>(c.j2)]) * f.A3;
        CHECK(product == rat(2));
    }
}

TEST_CASE("certify_family: all 29 families certify with the expected verdict") {
    int lct1 = 0, xcirc = 0;
    for (const auto& row : frozen::families()) {
        CAPTURE(row.no);
        auto res = certify_family(testdb::fam(row.no));
        CHECK(res.family_no == row.no);
        CHECK(res.computed_class == row.klass);
        CHECK(res.verdict == row.verdict);
        CHECK(res.ok);
        for (const auto& c : res.checks) {
            CAPTURE(c.kind);
            CAPTURE(c.subject);
            CHECK(c.status != "fail");
        }
        (res.verdict == "lct_equals_1" ? lct1 : xcirc) += 1;

        auto want_open = frozen::split_list(row.open, ';');
        CHECK(res.open_points == want_open);
    }
    CHECK(lct1 == 11);
    CHECK(xcirc == 18);
}

TEST_CASE("certify_family: family 69 carries exactly one non-blocking anomaly") {
    auto res = certify_family(testdb::fam(69));
    CHECK(res.ok);
    REQUIRE(res.anomalies.size() == 1);
    CHECK(res.anomalies[0].find("1/18") != std::string::npos);
    CHECK(res.anomalies[0].find("1/5(1,2,3)") != std::string::npos);
    bool has_anomalous = false;
    for (const auto& c : res.checks)
        if (c.kind == "singptNE" && c.status == "anomalous")
            has_anomalous = true;
    CHECK(has_anomalous);
    // no other family reports an anomaly
    for (const auto& row : frozen::families())
        if (row.no != 69)
            CHECK(certify_family(testdb::fam(row.no)).anomalies.empty());
}

TEST_CASE("certify_family: family 57 records the unavailable flopped model") {
    auto res = certify_family(testdb::fam(57));
    CHECK(res.ok);
    bool saw_na = false;
    for (const auto& c : res.checks) {
        if (c.kind == "flop" && c.status == "not_applicable") {
            saw_na = true;
            CHECK(c.detail.find("wp = 6 < d1 = 12") != std::string::npos);
        }
    }
    CHECK(saw_na);
    REQUIRE(res.open_points.size() == 2);
    CHECK(res.open_points[0] == "p_s (1/5(1,2,3))");
    CHECK(res.open_points[1] == "p_u (1/9(1,2,7))");
}

TEST_CASE("certify_family: assumptions ride along with the cone condition") {
    for (const auto& row : frozen::families()) {
        auto res = certify_family(testdb::fam(row.no));
        for (const auto& c : res.checks) {
            if (c.kind != "singptNE")
                continue;
            bool found = false;
            for (const auto& a : c.assumptions)
                if (a.find("NE of the Kawamata blowup") != std::string::npos)
                    found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("certify_family: missing records raise IncompleteData") {
    {
        Family f = testdb::fam(42);
        f.strata.clear();
        CHECK_THROWS_AS(certify_family(f), IncompleteData);
    }
    {
        Family f = testdb::fam(42);
        f.lxy.g1.clear();
        CHECK_THROWS_AS(certify_family(f), IncompleteData);
    }
    {
        Family f = testdb::fam(42);
        f.distinguished.clear();
        CHECK_THROWS_AS(certify_family(f), IncompleteData);
    }
}

TEST_CASE("certify_family: a broken inequality yields not_certified") {
    Family f = testdb::fam(42);
    // inflate the recorded isolating number: c*l*A3 = 60/6 > 1
    REQUIRE(f.strata[0].recipe.kind == "projection");
    f.strata[0].recipe.kind = "recorded";
    f.strata[0].l = 60;
    auto res = certify_family(f);
    CHECK_FALSE(res.ok);
    CHECK(res.verdict == "not_certified");
    bool failed = false;
    for (const auto& c : res.checks)
        if (c.status == "fail")
            failed = true;
    CHECK(failed);
}
