#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "opforge/term.hpp"

namespace opforge {

// A variety presentation: a signature plus homogeneous multilinear relation
// polynomials of degree 3 or 4.
struct Presentation {
    std::string name;
    Signature sig;
    std::vector<Polynomial> relations;

    bool quadratic() const;  // all relations of degree 3
};

// Throws std::invalid_argument naming the offending relation if any relation
// is inhomogeneous, not multilinear, or of degree outside {3, 4}.
void validate(const Presentation& p);

// Built-in presentations: novikov, bicommutative, dernov, dernov_dual,
// nov_s, bicom_s.
Presentation builtin_presentation(std::string_view name);
const std::vector<std::string>& builtin_names();

// Presentation file format: optional '#' comment lines, a header
// "ops: <glyph> [<glyph> ...]", then one relation per line in the term
// grammar with an optional "= 0" suffix.
Presentation parse_presentation_text(std::string_view text, std::string name);
Presentation load_presentation(const std::string& path);
std::string to_text(const Presentation& p);

}  // namespace opforge
