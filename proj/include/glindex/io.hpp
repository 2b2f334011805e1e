#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "glindex/betti.hpp"
#include "glindex/clutter.hpp"
#include "glindex/linpres.hpp"
#include "glindex/monomial.hpp"

namespace glindex {

/// Malformed or ambiguous input document.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct IdealInput {
    MonomialIdeal ideal;
    /// False when the listed generators were not already a minimal set.
    bool was_minimal = true;
};

using ParsedInput = std::variant<IdealInput, Clutter>;

/// Parses {"vars", "generators"} as an ideal or {"n", "d", "circuits"} as a
/// clutter. Documents matching neither or both shapes are rejected.
ParsedInput parse_input(const std::string& text);

IdealInput parse_ideal(const std::string& text);
Clutter parse_clutter(const std::string& text);

/// Compact JSON encodings with sorted keys; lists are already in canonical order.
std::string clutter_to_json(const Clutter& c);
std::string ideal_to_json(const MonomialIdeal& ideal);
std::string betti_to_json(const BettiTable& table);
std::string presentation_to_json(const PresentationResult& result, const MonomialIdeal& ideal);

} // namespace glindex
