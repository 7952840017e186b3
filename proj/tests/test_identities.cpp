#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsw/error.hpp"
#include "qsw/identities.hpp"

#include <set>

using namespace qsw;

namespace {

const std::vector<std::string> kExpectedNames = {
    "jacobi_derivative",
    "fk_lemma_00",
    "fk_lemma_10",
    "deriv_1_half",
    "deriv_0_half",
    "deriv_1_third",
    "deriv_2_thirds",
    "deriv_1_quarter",
    "deriv_3_quarters",
    "deriv_0_quarter",
    "deriv_0_3quarters",
    "cusp_gamma4_1half",
    "four_squares",
    "cusp_gamma4_0half",
    "four_triangular",
    "prop_gamma6_exp_1_13",
    "prop_gamma6_exp_1_23",
    "prop_gamma6_exp_0_13",
    "prop_gamma6_exp_0_23",
    "prop_gamma6_halving",
    "cusp_gamma6_1third",
    "rel_1third_residue",
    "hex2",
    "rel_1133_residue",
    "rel_1133_heat",
    "s1133",
    "jet_two_theta_sum",
    "cusp_gamma6_2thirds",
    "s12_hex",
    "product_third_tau_2tau",
    "cusp_gamma6_0third",
    "cusp_gamma6_0_2thirds",
    "conv_delta_delta",
    "conv_eps_eps",
    "conv_delta_eps",
    "conv_weighted_delta_delta",
    "conv_weighted_delta_eps",
    "farkas_remark",
    "cusp_gamma8_1quarters",
    "cusp_gamma8_0quarters",
    "rel_second_deriv_1_14",
    "rel_second_deriv_1_34",
    "rel_second_deriv_0_14",
    "rel_second_deriv_0_34",
    "s1122",
    "rel_1122_dlog",
    "rel_1144_dlog",
    "m_1244",
    "m_1144",
    "m_1224",
    "s1112",
    "s1222",
    "m_1114",
    "m_1444",
    "jet_dlog_square",
};

} // namespace

TEST_CASE("registry lists every case once, in fixed order") {
    const auto& reg = registry();
    REQUIRE(reg.size() == kExpectedNames.size());
    for (std::size_t i = 0; i < reg.size(); ++i) CHECK(reg[i].name == kExpectedNames[i]);
    std::set<std::string> unique;
    for (const auto& c : reg) unique.insert(c.name);
    CHECK(unique.size() == reg.size());

    for (const auto& c : reg) {
        if (c.name == "four_squares") {
            CHECK(c.kind == IdentityKind::sequence);
            CHECK(c.default_order == rat(500));
        }
        if (c.name == "jacobi_derivative") {
            CHECK(c.kind == IdentityKind::series);
            CHECK(c.default_order == rat(30));
        }
        if (c.name == "jet_dlog_square") {
            CHECK(c.kind == IdentityKind::jet);
            CHECK(c.default_order == rat(20));
        }
        if (c.name == "farkas_remark") CHECK(c.default_order == rat(100));
    }
}

TEST_CASE("every registered identity verifies at its default order") {
    auto reports = verify_all(std::nullopt, 2);
    REQUIRE(reports.size() == kExpectedNames.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        INFO("case ", reports[i].name);
        CHECK(reports[i].name == kExpectedNames[i]);
        CHECK(reports[i].pass);
        CHECK(!reports[i].failure.has_value());
    }

    // verify() is deterministic and agrees with the verify_all slots.
    for (const char* name : {"jacobi_derivative", "four_squares", "jet_dlog_square"}) {
        VerifyReport solo = verify(name);
        VerifyReport again = verify(name);
        CHECK(solo == again);
        for (const auto& r : reports)
            if (r.name == name) CHECK(r == solo);
    }
}

TEST_CASE("order overrides raise but never lower the certified range") {
    VerifyReport low = verify("jacobi_derivative", rat(10));
    CHECK(low.order == rat(30));
    CHECK(low.pass);

    VerifyReport high = verify("farkas_remark", rat(120));
    CHECK(high.order == rat(120));
    CHECK(high.pass);
}

TEST_CASE("unknown names are rejected") {
    CHECK_THROWS_WITH_AS(verify("no_such_identity"), doctest::Contains("unknown identity"),
                         Error);
    try {
        verify("no_such_identity");
    } catch (const Error& e) {
        CHECK(e.code == Errc::unknown_identity);
    }
}

TEST_CASE("negative control fails at the exact perturbed exponent") {
    VerifyReport r = verify_negative_control();
    CHECK(r.name == "negative_control");
    CHECK(!r.pass);
    REQUIRE(r.failure.has_value());
    CHECK(r.failure->exponent == rat(3));
    CHECK(r.failure->lhs == "32");
    CHECK(r.failure->rhs == "33");
}

TEST_CASE("cusp-family series vanish exactly to q-order 20 for every supported k") {
    // The vanishing is a genuine cancellation: the eta-quotient log-derivative
    // constituent alone is nonzero, and each returned series carries full
    // validity, so an empty term map means every coefficient below 20 is
    // exactly zero in the cyclotomic ring.
    for (long k : {3L, 5L, 7L, 11L, 13L}) {
        AnalyticSeries f = fk_cusp_series(k, rat(20));
        CHECK(f.is_zero());
        CHECK(f.body.valid_to() >= rat(20));
    }

    for (long bad : {2L, 4L, 9L, 17L}) {
        try {
            fk_cusp_series(bad, rat(6));
            FAIL("expected UnsupportedK for k=", bad);
        } catch (const Error& e) {
            CHECK(e.code == Errc::unsupported_k);
        }
    }
}

TEST_CASE("form theorem table: thirteen forms with matching boundary values") {
    const auto& forms = form_theorems();
    REQUIRE(forms.size() == 13);

    auto find = [&forms](const std::string& name) -> const FormTheorem& {
        for (const auto& f : forms)
            if (f.name == name) return f;
        REQUIRE(false);
        return forms.front();
    };

    const FormTheorem& s4 = find("s4");
    CHECK(s4.n_start == 1);
    CHECK(s4.default_max == 500);
    CHECK(rep_count(s4.form, 1) == 8);
    CHECK(s4.formula(1) == 8);
    CHECK(s4.identity_name == "four_squares");

    CHECK(find("t4").n_start == 0);
    CHECK(rep_count(find("t4").form, 0) == 16);
    CHECK(find("t4").formula(0) == 16);
    CHECK(find("t4").formula(1) == 64);

    CHECK(rep_count(find("m1144").form, 0) == 4);
    CHECK(find("m1144").formula(0) == 4);
    CHECK(rep_count(find("m1224").form, 0) == 2);
    CHECK(find("m1224").formula(0) == 2);
    CHECK(rep_count(find("m1444").form, 0) == 8);
    CHECK(find("m1444").formula(0) == 8);
    CHECK(rep_count(find("m1114").form, 0) == 2);
    CHECK(find("m1114").formula(0) == 2);
    CHECK(rep_count(find("m1244").form, 0) == 4);
    CHECK(find("m1244").formula(0) == 4);

    for (const auto& f : forms) {
        INFO("form ", f.name);
        CHECK(f.default_max >= 300);
        bool registered = false;
        for (const auto& c : registry()) registered |= (c.name == f.identity_name);
        CHECK(registered);
    }
}

TEST_CASE("convolution theorem table spot values") {
    const auto& convs = conv_theorems();
    REQUIRE(convs.size() == 6);

    auto find = [&convs](const std::string& name) -> const ConvTheorem& {
        for (const auto& c : convs)
            if (c.name == name) return c;
        REQUIRE(false);
        return convs.front();
    };

    const ConvTheorem& dd = find("conv_delta_delta");
    CHECK(dd.n_start == 2);
    CHECK(dd.lhs(2) == 1);
    CHECK(dd.rhs(2) == 1);
    CHECK(dd.lhs(3) == -2);
    CHECK(dd.rhs(3) == -2);

    const ConvTheorem& de = find("conv_delta_eps");
    CHECK(de.lhs(2) == 1);
    CHECK(de.rhs(2) == 1);
    CHECK(de.lhs(5) == de.rhs(5));

    const ConvTheorem& wdd = find("conv_weighted_delta_delta");
    CHECK(wdd.n_start == 3);
    CHECK(wdd.lhs(3) == 1);
    CHECK(wdd.rhs(3) == 1);
    CHECK(wdd.lhs(4) == -1);
    CHECK(wdd.rhs(4) == -1);

    const ConvTheorem& fr = find("farkas_remark");
    CHECK(fr.n_start == 0);
    CHECK(fr.default_max == 100);
    CHECK(fr.lhs(0) == 3);
    CHECK(fr.rhs(0) == 3);
    CHECK(fr.lhs(1) == 6);
    CHECK(fr.rhs(1) == 6);
}

TEST_CASE("generator self-tests pass at modest order") {
    auto results = selftest(rat(8));
    CHECK(results.size() == 23);
    for (const auto& r : results) {
        INFO("selftest ", r.name);
        CHECK(r.pass);
    }
}
