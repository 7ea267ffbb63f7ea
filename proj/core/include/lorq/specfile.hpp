#pragma once

#include <string>
#include <variant>
#include <vector>

#include "lorq/group.hpp"
#include "lorq/isometry.hpp"

namespace lorq {

// On-disk description of a space plus a group: UTF-8 JSON with every rational
// a string "p/q" (floats are rejected to protect exactness). Unknown fields
// are rejected at every level.
struct ExplicitGenerators {
    QuadraticSpace space;
    std::vector<AffineIsometry> generators;
};

struct SpecFile {
    std::string version;
    std::variant<TypeISpec, TypeIISpec, ExplicitGenerators> group;
    std::string digest;  // content digest of the source bytes, "fnv1a64:<hex>"

    const QuadraticSpace& space() const;
    bool is_type_i() const { return std::holds_alternative<TypeISpec>(group); }
    bool is_type_ii() const { return std::holds_alternative<TypeIISpec>(group); }

    // Violated invariants of the group data; empty means valid. Parsing only
    // enforces structure, so invalid-but-well-formed files load and report.
    std::vector<std::string> violations() const;

    // Generators for whichever group variant is present (TypeII specs are
    // validated and built; non-free TypeII input is rejected unless allowed).
    GroupGenerators build(bool allow_non_free = false) const;
};

SpecFile parse_spec_text(const std::string& text);
SpecFile load_spec_file(const std::string& path);

std::string spec_to_json(const SpecFile& spec);

std::string fnv1a64_digest(const std::string& bytes);

// Comma-separated rationals, e.g. "0,1/2,-3". Used by the CLI for points.
Vec parse_vector_arg(const std::string& text);

}  // namespace lorq
