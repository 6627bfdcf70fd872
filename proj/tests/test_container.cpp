#include <sstream>

#include "doctest.h"
#include "rcft/container.hpp"
#include "rcft/error.hpp"

using namespace rcft;

namespace {

const char* kLattice2 = R"(rcft-moddata 1
# two primaries
order 8
size 2
label 0 "1"
label 1 "psi"

S 0 0 = [(1, 2, 1), (-1, 2, 3)]
S 0 1 = [(1, 2, 1), (-1, 2, 3)]
S 1 0 = [(1, 2, 1), (-1, 2, 3)]
S 1 1 = [(-1, 2, 1), (1, 2, 3)]
T 0 = 23/24
T 1 = 5/24
end
)";

std::pair<std::size_t, std::size_t> where(const std::string& text) {
    try {
        parse_document(text);
    } catch (const ParseError& e) {
        return {e.line(), e.column()};
    }
    return {0, 0};
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
    s.replace(s.find(from), from.size(), to);
    return s;
}

}  // namespace

TEST_CASE("round trip on the catalog") {
    for (const ModularData& md : {lattice_data(2), lattice_data(6), affine_data(Algebra::A1, 3), affine_data(Algebra::A2, 2),
                                  quantum_double_data(builtin_group("s3")), quantum_double_data(builtin_group("q8"))}) {
        Metadata meta;
        meta.central_charge = make_rational(3, 2);
        meta.weights.assign(md.size(), std::nullopt);
        meta.weights[0] = Rational(0);
        meta.note = "a \"quoted\" note";
        const std::string text = serialize(md, meta);
        const Document doc = parse_document(text);
        CHECK(same_data(doc.md, md));
        CHECK(doc.meta == meta);
        CHECK(serialize(doc.md, doc.meta) == text);
        std::istringstream in(text);
        CHECK(same_data(read_document(in).md, md));
    }
}

TEST_CASE("hand-written document") {
    const Document doc = parse_document(kLattice2);
    CHECK(doc.md.size() == 2);
    CHECK(doc.md.label(1) == "psi");
    CHECK(doc.meta.empty());
    CHECK(same_data(doc.md, lattice_data(2)) == false);  // labels differ
    CHECK(validate(doc.md).pass());
}

TEST_CASE("syntax errors carry a location") {
    CHECK(where(replace(kLattice2, "size 2", "size two")) == std::pair<std::size_t, std::size_t>{4, 6});
    CHECK(where(replace(kLattice2, "rcft-moddata 1", "rcft-moddata 2")).first == 1);
    CHECK(where(replace(kLattice2, "T 1 = 5/24", "T 1 = 5/0")).first == 13);
    CHECK(where(replace(kLattice2, "T 1 = 5/24", "T 1 = 5/24\nT 1 = 5/24")).first == 14);  // duplicate
    CHECK(where(replace(kLattice2, "S 1 1", "S 1 2")).first == 11);                        // out of range
    CHECK(where(replace(kLattice2, "(-1, 2, 1), (1, 2, 3)]", "(-1, 2, 1), (1, 2, 3)")).first == 11);
    CHECK(where(replace(kLattice2, "T 1 = 5/24\n", "")).first != 0);  // missing entry
}

TEST_CASE("truncated input") {
    const std::string text = kLattice2;
    for (std::size_t cut : {std::size_t(0), std::size_t(20), text.size() / 2, text.size() - 5}) {
        CAPTURE(cut);
        CHECK_THROWS_AS(parse_document(text.substr(0, cut)), ParseError);
    }
}

TEST_CASE("group documents") {
    for (const char* name : {"s3", "d4", "q8"}) {
        const GroupData g = builtin_group(name);
        const std::string text = serialize(g);
        const GroupData h = parse_group(text);
        CHECK(h.name == g.name);
        CHECK(h.table == g.table);
        CHECK(serialize(h) == text);
        CHECK(same_data(quantum_double_data(h), quantum_double_data(g)));
    }
    const std::string text = serialize(builtin_group("z", 3));
    CHECK_THROWS_AS(parse_group(replace(text, "row 1 = 1 2 0", "row 1 = 1 1 0")), Error);
}
