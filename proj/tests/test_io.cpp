#include <doctest.h>

#include <algorithm>
#include <fstream>

#include "singlet/io.hpp"
#include "singlet/validate.hpp"

using namespace singlet;
using singlet::io::json;

TEST_CASE("label json round trips") {
    const Su3Label l{1, 0, 2, 0, 0, 1, -1};
    CHECK(io::su3_label_from_json(io::to_json(l)) == l);
    const Su2Label l2{2, 0, 1};
    CHECK(io::su2_label_from_json(io::to_json(l2)) == l2);
    CHECK_THROWS_AS(io::su3_label_from_json(json::parse("{\"l12\":1}")), std::invalid_argument);
    CHECK_THROWS_AS(io::su2_label_from_json(json::parse("{\"l12\":-1,\"l23\":0,\"l31\":0}")),
                    std::invalid_argument);
}

TEST_CASE("coefficient json") {
    const json j = io::to_json(SqrtRational(-1, make_rational(3, 4)));
    CHECK(j.at("sign") == -1);
    CHECK(j.at("radicand") == "3/4");
    const json jf = io::to_json(SqrtRational(1, make_rational(2)), true);
    CHECK(jf.contains("approx"));
}

TEST_CASE("basis listing shapes") {
    const json su3 = io::basis_listing_su3(2);
    CHECK(su3.at("group") == "su3");
    CHECK(su3.at("count") == 7);
    const auto& row = su3.at("states").at(1);
    CHECK(row.at("norm_sq") == "3/1");
    CHECK(row.at("legs").size() == 3);

    const json su2 = io::basis_listing_su2(2);
    CHECK(su2.at("count") == 4);
    CHECK(io::basis_csv_su2(2).starts_with("l12,l23,l31,"));
    // csv has header + 4 rows
    std::string csv = io::basis_csv_su2(2);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}

TEST_CASE("act result serialization") {
    const json r = io::act_result_su3("a+(1).b+(2)", Su3Label{}, false, false);
    CHECK(r.at("op") == "a+(1).b+(2)");
    REQUIRE(r.at("transitions").size() == 1);
    CHECK(r.at("transitions").at(0).at("coeff").at("radicand") == "3/1");

    // oracle route agrees with the closed form
    const json ro = io::act_result_su3("a+(1).b+(2)", Su3Label{}, true, false);
    CHECK(r.at("transitions") == ro.at("transitions"));

    const json r2 = io::act_result_su2("N(2)", Su2Label{1, 0, 0}, false, false);
    CHECK(r2.at("transitions").at(0).at("coeff").at("sign") == 1);
}

TEST_CASE("matrix export is deterministic and truncates targets") {
    const json m1 = io::matrix_export_su3("a+(1).b+(2)", 2, false, false);
    const json m2 = io::matrix_export_su3("a+(1).b+(2)", 2, false, false);
    CHECK(io::dump(m1) == io::dump(m2));
    CHECK(m1.at("basis_size") == 7);
    // only the vacuum's image stays below the cutoff
    REQUIRE(m1.at("entries").size() == 1);
    CHECK(m1.at("entries").at(0).at("col").at("l12") == 0);
    CHECK(m1.at("entries").at(0).at("row").at("l12") == 1);

    // a diagonal operator fills one entry per non-vacuum label
    const json n = io::matrix_export_su2("N(1)", 4, false, false);
    for (const auto& e : n.at("entries")) CHECK(e.at("row") == e.at("col"));
}

TEST_CASE("matrix transpose pairing at a safe cutoff") {
    const json up = io::matrix_export_su3("a+(1).b+(2)", 5, false, false);
    const json down = io::matrix_export_su3("a(1).b(2)", 5, false, false);
    REQUIRE(up.at("entries").size() == down.at("entries").size());
    for (const auto& e : up.at("entries")) {
        bool found = false;
        for (const auto& f : down.at("entries"))
            if (f.at("row") == e.at("col") && f.at("col") == e.at("row") &&
                f.at("coeff") == e.at("coeff"))
                found = true;
        CHECK(found);
    }
}

#ifdef SINGLET_SOURCE_DIR
namespace {

json load_schema(const std::string& name) {
    std::ifstream in(std::string(SINGLET_SOURCE_DIR) + "/schemas/" + name);
    REQUIRE(in.good());
    return json::parse(in);
}

void check_required(const json& schema, const json& doc) {
    for (const auto& key : schema.at("required")) CHECK(doc.contains(key.get<std::string>()));
}

}  // namespace

TEST_CASE("emitted documents satisfy the shipped schemas") {
    check_required(load_schema("su3_label.schema.json"), io::to_json(Su3Label{}));
    check_required(load_schema("su2_label.schema.json"), io::to_json(Su2Label{}));
    check_required(load_schema("coefficient.schema.json"),
                   io::to_json(SqrtRational(1, make_rational(2))));
    check_required(load_schema("basis_listing.schema.json"), io::basis_listing_su3(2));
    check_required(load_schema("act_result.schema.json"),
                   io::act_result_su3("a+(1).b+(2)", Su3Label{}, false, false));
    check_required(load_schema("matrix_export.schema.json"),
                   io::matrix_export_su2("N(1)", 2, false, false));
    validate::DiscrepancyRecord rec;
    rec.formula = "x";
    rec.label_su2 = Su2Label{};
    rec.paper_ref = "y";
    rec.note = "z";
    const json ledger = io::ledger_json({rec}, "su2");
    const json ledger_schema = load_schema("discrepancy_ledger.schema.json");
    check_required(ledger_schema, ledger);
    check_required(ledger_schema.at("properties").at("records").at("items"),
                   ledger.at("records").at(0));
}
#endif

TEST_CASE("ledger serialization carries the required fields") {
    validate::DiscrepancyRecord rec;
    rec.formula = "S0(|p|=1)";
    rec.group = "su3";
    rec.label_su3 = Su3Label{0, 0, 0, 0, 0, 0, 1};
    rec.paper = SqrtRational::from_rational(Rational(27));
    rec.oracle = SqrtRational::from_rational(Rational(6));
    rec.paper_ref = "published norm recursion, pure-baryon base case";
    rec.note = "test";
    const json j = io::ledger_json({rec}, "su3");
    CHECK(j.at("count") == 1);
    const auto& r = j.at("records").at(0);
    for (const char* key : {"formula", "label", "paper", "oracle", "paper_ref", "note"})
        CHECK(r.contains(key));
    CHECK(r.at("paper").at("radicand") == "729/1");
}
