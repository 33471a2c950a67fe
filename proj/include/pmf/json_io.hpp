#pragma once

#include <string>

#include "json.hpp"
#include "pmf/cayley.hpp"
#include "pmf/patchwork.hpp"
#include "pmf/poset.hpp"
#include "pmf/sign.hpp"

namespace pmf {

using Json = nlohmann::json;

// Throws InputError with the parser's position on malformed files.
Json load_json_file(const std::string& path);

Rat rat_from_json(const Json& v);  // integer literal or "p/q" string
std::string rat_to_string(const Rat& r);

Sign sign_from_json(const Json& v);  // "+", "-", "0" (unicode minus accepted)

// {"d":..., "n":..., "trees":[[[i,j],...],...]} with 1-based indices.
Triangulation triangulation_from_json(const Json& j);
Json triangulation_to_json(const Triangulation& t);

// {"H":[[...]]} with integers or "p/q" strings.
HeightMatrix heights_from_json(const Json& j);

// {"A":[["+","-",...],...]}.
SignMatrix sign_matrix_from_json(const Json& j);
Json sign_matrix_to_json(const SignMatrix& a);

Json sign_vector_to_json(const SignVector& v);

Json covers_to_json(const Poset& p);

Json validation_report_to_json(const ValidationReport& r);
Json verify_report_to_json(const VerifyReport& r);

}  // namespace pmf
