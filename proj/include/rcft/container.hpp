#pragma once

/**
 * @file container.hpp
 * @brief Text documents for modular data and finite groups.
 *
 * The grammar is in docs/format.md. Serialisation is canonical: every S
 * entry is written at the document order M with its terms in increasing
 * exponent, so parse(serialize(d)) == d and serialize(parse(text)) is stable.
 */

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rcft/catalog.hpp"

namespace rcft {

struct Metadata {
    std::optional<Rational> central_charge;
    std::vector<std::optional<Rational>> weights;  ///< true conformal weights h_a, not reduced mod 1
    std::string note;

    bool empty() const;
    friend bool operator==(const Metadata&, const Metadata&) = default;
};

struct Document {
    ModularData md;
    Metadata meta;
};

Document parse_document(const std::string& text);
Document read_document(std::istream& in);
std::string serialize(const ModularData& md, const Metadata& meta = {});

GroupData parse_group(const std::string& text);
std::string serialize(const GroupData& g);

/// Structural equality: same labels, same T exponents, equal S values.
bool same_data(const ModularData& a, const ModularData& b);

}  // namespace rcft
