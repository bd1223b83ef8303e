// Copyright 2026 The invenc developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <string>

#include <json.hpp>

#include "invenc/schur.hpp"
#include "invenc/tensor.hpp"

namespace invenc {

using Json = nlohmann::ordered_json;

std::string base64_encode(const unsigned char* data, std::size_t len);
std::vector<unsigned char> base64_decode(const std::string& text);

/// Matrices serialize as {"rows", "cols", "data_b64"} with the payload a
/// base64 of row-major little-endian doubles, re/im interleaved.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Complex matrix as nested [re, im] pairs (the config-file convention).
Json matrix_to_pairs(const Matrix& m);
Matrix matrix_from_pairs(const Json& j);

Json schur_basis_to_json(const SchurBasis& basis);
SchurBasis schur_basis_from_json(const Json& j);

}  // namespace invenc
