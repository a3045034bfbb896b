#pragma once

// JSON readers and writers for every file format the CLI accepts. Integers
// are written as JSON numbers when they fit in 64 bits, else as decimal
// strings; readers accept both.

#include "qtoric/betti.hpp"
#include "qtoric/bundles.hpp"
#include "qtoric/charmap.hpp"
#include "qtoric/cohomring.hpp"
#include "qtoric/isomorph.hpp"
#include "qtoric/polytope.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace qtoric::io {

using Json = nlohmann::ordered_json;

/// Reads and parses a file; InvalidParameter on I/O or syntax errors.
Json load_json_file(const std::filesystem::path& path);

/// Inline JSON if the text starts with '[' or '{', else a file path.
Json load_json_arg(const std::string& text);

Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);

/// {"kind":"simplex","n":2} | {"kind":"polygon","edges":5} |
/// {"kind":"product","factors":[...]} | {"kind":"explicit",...}
SimplePolytope polytope_from_json(const Json& j);
/// Always the explicit form.
Json polytope_to_json(const SimplePolytope& p);

/// {"rows":r,"cols":c,"entries":[[...]]}; a bare array of rows is accepted.
IntMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const IntMatrix& m);

ProductSplit split_from_json(const Json& j);
Json split_to_json(const ProductSplit& s);

BettiTable betti_from_json(const Json& j);
Json betti_to_json(const BettiTable& t);

/// A polynomial as a list of {"exps":[...],"coeff":c} terms.
Polynomial polynomial_from_json(const Json& j, std::size_t nvars);
Json polynomial_to_json(const Polynomial& p);

/// {"generators":[...],"relations":[[terms],...],"fiber_index":k?}
GradedRing ring_from_json(const Json& j);
Json ring_to_json(const GradedRing& r);

/// {"base_ring": ring object or path, "twists": matrix}. Relative paths are
/// resolved against base_dir.
BundleSpec bundle_spec_from_json(const Json& j, const std::filesystem::path& base_dir = {});
Json bundle_spec_to_json(const BundleSpec& s);

/// {"matrix": [[...]]}
IntMatrix map_from_json(const Json& j);
Json map_to_json(const IntMatrix& m);

/// {"w":[poly,...],"p":[poly,...]} with either key optional.
ClassData class_data_from_json(const Json& j, std::size_t nvars);
Json class_data_to_json(const ClassData& c);

}  // namespace qtoric::io
