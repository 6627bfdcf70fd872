#include <sstream>

#include "doctest.h"
#include "rcft/catalog.hpp"
#include "rcft/cli.hpp"
#include "rcft/container.hpp"

using namespace rcft;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run_cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run(args, in, out, err);
    return {code, out.str(), err.str()};
}

bool ends_with(const std::string& s, const std::string& tail) {
    return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

}  // namespace

TEST_CASE("generators emit parseable documents") {
    const Run lat = run_cli({"gen", "lattice", "4"});
    REQUIRE(lat.code == exit_pass);
    const Document doc = parse_document(lat.out);
    CHECK(same_data(doc.md, lattice_data(4)));
    CHECK(doc.meta.central_charge == Rational(1));

    const Run aff = run_cli({"gen", "affine", "a2", "2"});
    REQUIRE(aff.code == exit_pass);
    CHECK(same_data(parse_document(aff.out).md, affine_data(Algebra::A2, 2)));

    const Run dbl = run_cli({"gen", "double", "s3"});
    REQUIRE(dbl.code == exit_pass);
    CHECK(parse_document(dbl.out).md.size() == 8);

    const Run grp = run_cli({"gen", "group", "q8"});
    REQUIRE(grp.code == exit_pass);
    CHECK(parse_group(grp.out).order() == 8);
    const Run from_file = run_cli({"gen", "double", "--group-file", "/nonexistent"});
    CHECK(from_file.code == exit_usage);
}

TEST_CASE("analysis commands on generated data") {
    const std::string lat2 = run_cli({"gen", "lattice", "2"}).out;
    const std::string a22 = run_cli({"gen", "affine", "a2", "2"}).out;
    const std::string s3 = run_cli({"gen", "double", "s3"}).out;
    for (const auto& [args, input] : std::vector<std::pair<std::vector<std::string>, std::string>>{
             {{"validate"}, lat2},
             {{"fusion"}, a22},
             {{"galois", "--ell", "5"}, lat2},
             {{"congruence"}, a22},
             {{"congruence"}, s3},
             {{"bantay"}, a22},
             {{"commutant", "--integral"}, lat2},
             {{"prop3"}, s3},
             {{"oddcrit"}, a22},
             {{"gamma-sample", "--trials", "10", "--seed", "3"}, lat2}}) {
        CAPTURE(args[0]);
        const Run r = run_cli(args, input);
        CHECK(r.code == exit_pass);
        CHECK(ends_with(r.out, "result: pass\n"));
    }
    const Run v = run_cli({"validate"}, lat2);
    CHECK(v.out.find("t-order 24") != std::string::npos);
    const Run c = run_cli({"congruence"}, a22);
    CHECK(c.out.find("coprime-p2") != std::string::npos);
}

TEST_CASE("property failures and usage errors") {
    // Lattice 8 has labels failing the coprimality half of the conductor check.
    CHECK(run_cli({"prop3"}, run_cli({"gen", "lattice", "8"}).out).code == exit_property_failure);
    CHECK(run_cli({"oddcrit", "--c", "1/2", "--h", "0"}).code == exit_property_failure);
    CHECK(run_cli({"oddcrit", "--c", "8", "--h", "0,1/3"}).code == exit_pass);
    CHECK(run_cli({"galois", "--ell", "2"}, run_cli({"gen", "lattice", "2"}).out).code == exit_usage);
    CHECK(run_cli({"validate"}, "rcft-moddata 1\norder 4\n").code == exit_usage);
    CHECK(run_cli({"nonsense"}).code == exit_usage);
    CHECK(run_cli({"gen", "lattice", "3"}).code == exit_usage);
    const Run bad = run_cli({"validate"}, "garbage");
    CHECK(bad.code == exit_usage);
    CHECK(bad.err.find("line 1") != std::string::npos);
}

TEST_CASE("SL2 commands") {
    const Run o = run_cli({"sl2", "order", "3"});
    CHECK(o.code == exit_pass);
    CHECK(o.out.find("24") != std::string::npos);
    CHECK(run_cli({"sl2", "relations", "--variant", "a-p2", "-n", "5"}).code == exit_pass);
    CHECK(run_cli({"sl2", "relations", "--variant", "c"}, run_cli({"gen", "lattice", "4"}).out).code == exit_pass);
}

TEST_CASE("reports are deterministic") {
    const std::string a22 = run_cli({"gen", "affine", "a2", "2"}).out;
    CHECK(run_cli({"gen", "affine", "a2", "2"}).out == a22);
    const auto first = run_cli({"gamma-sample", "--trials", "5", "--seed", "7"}, a22);
    const auto second = run_cli({"gamma-sample", "--trials", "5", "--seed", "7"}, a22);
    CHECK(first.out == second.out);
    CHECK(run_cli({"bantay"}, a22).out == run_cli({"bantay"}, a22).out);
}
