#include <doctest.h>

#include "bernden/denom_sieve.hpp"
#include "bernden/tables.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace bernden;

namespace {

std::vector<std::string> run_lines(const TableRequest& req) {
    std::ostringstream out, err;
    run_table(req, out, err);
    std::vector<std::string> lines;
    std::istringstream in(out.str());
    for (std::string l; std::getline(in, l);) lines.push_back(l);
    return lines;
}

std::vector<std::string> witness_lines(WitnessKind kind, uint64_t limit,
                                       TableFormat format = TableFormat::Csv) {
    std::ostringstream out;
    run_witness(kind, limit, format, out);
    std::vector<std::string> lines;
    std::istringstream in(out.str());
    for (std::string l; std::getline(in, l);) lines.push_back(l);
    return lines;
}

}  // namespace

TEST_CASE("class count rows reproduce the published values") {
    TableRequest req;
    req.id = TableId::SCounts;
    req.limit = 100000;
    req.max_first = 10;
    auto lines = run_lines(req);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "first,second,count_100000");
    CHECK(lines[1] == "2,14,7992");
    CHECK(lines[2] == "4,8,3423");
    CHECK(lines[3] == "6,114,1371");
    CHECK(lines[4] == "10,50,1080");
}

TEST_CASE("denominator count row reproduces the published value") {
    TableRequest req;
    req.id = TableId::DCount;
    req.limit = 100000;
    auto lines = run_lines(req);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "count,ratio");
    CHECK(lines[1] == "513,.053");
}

TEST_CASE("bound column appears only with multiple checkpoints") {
    TableRequest req;
    req.id = TableId::DCount;
    req.limit = 10000;
    req.checkpoints = {1000, 10000};
    auto lines = run_lines(req);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "bound,count,ratio");
    CHECK(lines[1].rfind("1000,14,", 0) == 0);
    CHECK(lines[2].rfind("10000,84,", 0) == 0);
}

TEST_CASE("tsv and markdown layouts") {
    TableRequest req;
    req.id = TableId::DCount;
    req.limit = 10000;
    req.format = TableFormat::Tsv;
    auto lines = run_lines(req);
    CHECK(lines[0] == "count\tratio");
    CHECK(lines[1] == "84\t.068");

    req.id = TableId::DPlusOne;
    req.limit = 7;
    req.format = TableFormat::Markdown;
    lines = run_lines(req);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "| composite | prime | composite_fraction | prime_fraction |");
    CHECK(lines[1] == "|---|---|---|---|");
    CHECK(lines[2] == "| 0 | 1 | .000 | 1.000 |");
}

TEST_CASE("t-set column is opt-in") {
    TableRequest req;
    req.id = TableId::SCounts;
    req.limit = 2000;
    req.max_first = 4;
    req.show_tset = true;
    auto lines = run_lines(req);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "first,second,t_set,count_2000");
    CHECK(lines[1].rfind("2,14,{2,3},", 0) == 0);  // cells are never quoted
    CHECK(lines[2].rfind("4,8,{2,3,5},", 0) == 0);
}

TEST_CASE("least subscript count table") {
    TableRequest req;
    req.id = TableId::FCount;
    req.limit = 10000;
    req.precision = Precision::Full;
    auto lines = run_lines(req);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "count,ratio");
    CHECK(lines[1].rfind("2612,", 0) == 0);
    double ratio = std::stod(lines[1].substr(5));
    CHECK(ratio == doctest::Approx(0.471).epsilon(0.01));

    // bounds below 16 fall back to direct enumeration, no reference value
    req.limit = 20;
    req.checkpoints = {10, 20};
    req.precision = Precision::Paper;
    lines = run_lines(req);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "bound,count,ratio");
    CHECK(lines[1] == "10,4,-");
    CHECK(lines[2].rfind("20,8,", 0) == 0);  // 18 and 20 are both least subscripts
}

TEST_CASE("residue table shape") {
    TableRequest req;
    req.id = TableId::SResidues;
    req.limit = 10000;
    req.max_first = 2;
    req.moduli = {4};
    auto lines = run_lines(req);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "first,total,modulus,class,count");

    SieveConfig cfg;
    cfg.limit = 10000;
    auto rep = residue_statistics(cfg, 2, {4});
    std::string total = std::to_string(rep.total);
    CHECK(lines[1] == "2," + total + ",4,0,0");
    CHECK(lines[2] == "2," + total + ",4,1,0");
    CHECK(lines[3] == "2," + total + ",4,2," + total);
    CHECK(lines[4] == "2," + total + ",4,3,0");
}

TEST_CASE("partition and cofactor tables") {
    TableRequest req;
    req.id = TableId::PPartition;
    req.limit = 10000;
    auto lines = run_lines(req);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "d,count,fraction");
    CHECK(lines[1] == "6,161,.1310");
    CHECK(lines[2] == "30,88,.0716");
    CHECK(lines[3] == "42,75,.0610");
    CHECK(lines[4] == "66,42,.0342");

    req = TableRequest{};
    req.id = TableId::DpNotInD;
    req.limit = 10000;
    lines = run_lines(req);
    REQUIRE(lines.size() == 2);
    CHECK(lines[1] == "527,.429");

    req = TableRequest{};
    req.id = TableId::DPlusOne;
    req.limit = 1000;
    lines = run_lines(req);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "composite,prime,composite_fraction,prime_fraction");
    CHECK(lines[1] == "4,10,.286,.714");
}

TEST_CASE("request validation names the offending flag") {
    std::ostringstream out, err;
    TableRequest req;

    req.id = TableId::DCount;
    req.limit = 5;
    CHECK_THROWS_WITH_AS(run_table(req, out, err), doctest::Contains("--limit"),
                         std::invalid_argument);

    req.limit = 10000;
    req.checkpoint_file = "/tmp/x.ckpt";
    CHECK_THROWS_WITH_AS(run_table(req, out, err), doctest::Contains("--checkpoint-file"),
                         std::invalid_argument);

    req = TableRequest{};
    req.id = TableId::SCounts;
    req.limit = 1000;
    req.checkpoints = {200, 100};
    CHECK_THROWS_WITH_AS(run_table(req, out, err), doctest::Contains("--checkpoints"),
                         std::invalid_argument);
    req.checkpoints = {2000};
    CHECK_THROWS_WITH_AS(run_table(req, out, err), doctest::Contains("--checkpoints"),
                         std::invalid_argument);
    req.checkpoints.clear();
    req.workers = 0;
    CHECK_THROWS_WITH_AS(run_table(req, out, err), doctest::Contains("--workers"),
                         std::invalid_argument);
    req.workers = 1;
    req.segment_size = 7;
    CHECK_THROWS_WITH_AS(run_table(req, out, err), doctest::Contains("--segment-size"),
                         std::invalid_argument);

    req = TableRequest{};
    req.id = TableId::PPartition;
    req.limit = 1000;
    req.targets = {6, 5};
    CHECK_THROWS_WITH_AS(run_table(req, out, err), doctest::Contains("--targets"),
                         std::invalid_argument);
}

TEST_CASE("witness tables") {
    auto lines = witness_lines(WitnessKind::NotInD, 20);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "q,p,d_p,lambda_d_p,p_minus_1");
    CHECK(lines[1] == "7,13,210,12,12");

    lines = witness_lines(WitnessKind::InD, 100);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "r,q,p,lambda_p_minus_1,denominator_2r");
    CHECK(lines[1] == "2,5,31,4,30");
    CHECK(lines[2] == "3,7,43,6,42");
    CHECK(lines[3] == "5,11,67,10,66");

    lines = witness_lines(WitnessKind::Germain, 30);
    REQUIRE(lines.size() == 7);
    CHECK(lines[0] == "p,q,denominator_2p");
    CHECK(lines[1] == "2,5,30");
    CHECK(lines[2] == "3,7,42");
    CHECK(lines[3] == "5,11,66");
    CHECK(lines[4] == "11,23,138");
    CHECK(lines[5] == "23,47,282");
    CHECK(lines[6] == "29,59,354");

    std::ostringstream out;
    CHECK_THROWS_AS(run_witness(WitnessKind::InD, 42, TableFormat::Csv, out),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_witness(WitnessKind::NotInD, 2, TableFormat::Csv, out),
                    std::invalid_argument);
}

TEST_CASE("limit parsing") {
    CHECK(parse_limit("250") == 250);
    CHECK(parse_limit("1e7") == 10000000);
    CHECK(parse_limit("25e2") == 2500);
    CHECK(parse_limit("1E3") == 1000);
    CHECK(parse_limit("0") == 0);
    CHECK(parse_limit("18446744073709551615") == UINT64_MAX);
    CHECK_THROWS_AS(parse_limit(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_limit("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_limit("1e"), std::invalid_argument);
    CHECK_THROWS_AS(parse_limit("e7"), std::invalid_argument);
    CHECK_THROWS_AS(parse_limit("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_limit("-3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_limit("1e20"), std::invalid_argument);
    CHECK_THROWS_AS(parse_limit("18446744073709551616"), std::invalid_argument);
    CHECK_THROWS_AS(parse_limit("1e100"), std::invalid_argument);
}

TEST_CASE("name parsing") {
    CHECK(parse_table_id("s-counts") == TableId::SCounts);
    CHECK(parse_table_id("dp-not-in-d") == TableId::DpNotInD);
    CHECK_FALSE(parse_table_id("bogus").has_value());
    CHECK(parse_witness_kind("germain") == WitnessKind::Germain);
    CHECK_FALSE(parse_witness_kind("x").has_value());
    CHECK(parse_format("tsv") == TableFormat::Tsv);
    CHECK_FALSE(parse_format("xml").has_value());
    CHECK(parse_precision("paper") == Precision::Paper);
    CHECK(parse_precision("full") == Precision::Full);
    CHECK_FALSE(parse_precision("half").has_value());
    CHECK(table_id_names().find("p-partition") != std::string::npos);
    CHECK(witness_kind_names() == "not-in-d, in-d, germain");
}
