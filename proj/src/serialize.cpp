// Copyright 2026 The invenc developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "invenc/serialize.hpp"

#include <cstring>
#include <stdexcept>

namespace invenc {

namespace {
constexpr char kAlphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
}

std::string base64_encode(const unsigned char* data, std::size_t len) {
  std::string out;
  out.reserve((len + 2) / 3 * 4);
  for (std::size_t i = 0; i < len; i += 3) {
    unsigned int chunk = data[i] << 16;
    if (i + 1 < len) chunk |= data[i + 1] << 8;
    if (i + 2 < len) chunk |= data[i + 2];
    out.push_back(kAlphabet[(chunk >> 18) & 0x3f]);
    out.push_back(kAlphabet[(chunk >> 12) & 0x3f]);
    out.push_back(i + 1 < len ? kAlphabet[(chunk >> 6) & 0x3f] : '=');
    out.push_back(i + 2 < len ? kAlphabet[chunk & 0x3f] : '=');
  }
  return out;
}

std::vector<unsigned char> base64_decode(const std::string& text) {
  auto value = [](char c) -> int {
    if (c >= 'A' && c <= 'Z') return c - 'A';
    if (c >= 'a' && c <= 'z') return c - 'a' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '+') return 62;
    if (c == '/') return 63;
    if (c == '=') return -1;
    throw std::invalid_argument("base64_decode: invalid character");
  };
  if (text.size() % 4 != 0) {
    throw std::invalid_argument("base64_decode: length not a multiple of 4");
  }
  std::vector<unsigned char> out;
  out.reserve(text.size() / 4 * 3);
  for (std::size_t i = 0; i < text.size(); i += 4) {
    int v[4];
    for (int k = 0; k < 4; ++k) v[k] = value(text[i + k]);
    const unsigned int chunk = (v[0] << 18) | (v[1] << 12) |
                               ((v[2] < 0 ? 0 : v[2]) << 6) |
                               (v[3] < 0 ? 0 : v[3]);
    out.push_back((chunk >> 16) & 0xff);
    if (v[2] >= 0) out.push_back((chunk >> 8) & 0xff);
    if (v[3] >= 0) out.push_back(chunk & 0xff);
  }
  return out;
}

Json matrix_to_json(const Matrix& m) {
  std::vector<double> raw;
  raw.reserve(2 * m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      raw.push_back(m(i, j).real());
      raw.push_back(m(i, j).imag());
    }
  }
  return Json{
      {"rows", m.rows()},
      {"cols", m.cols()},
      {"data_b64",
       base64_encode(reinterpret_cast<const unsigned char*>(raw.data()),
                     raw.size() * sizeof(double))}};
}

Matrix matrix_from_json(const Json& j) {
  const Eigen::Index rows = j.at("rows").get<Eigen::Index>();
  const Eigen::Index cols = j.at("cols").get<Eigen::Index>();
  const auto bytes = base64_decode(j.at("data_b64").get<std::string>());
  if (bytes.size() !=
      static_cast<std::size_t>(rows * cols) * 2 * sizeof(double)) {
    throw std::invalid_argument("matrix_from_json: payload size mismatch");
  }
  std::vector<double> raw(2 * rows * cols);
  std::memcpy(raw.data(), bytes.data(), bytes.size());
  Matrix m(rows, cols);
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(i, c) = Complex(raw[k], raw[k + 1]);
      k += 2;
    }
  }
  return m;
}

Json matrix_to_pairs(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_pairs(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("matrix_from_pairs: expected a nested array");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j.at(0).size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j.at(i);
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw std::invalid_argument("matrix_from_pairs: ragged rows");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& cell = row.at(c);
      if (!cell.is_array() || cell.size() != 2) {
        throw std::invalid_argument(
            "matrix_from_pairs: complex entries must be [re, im] pairs");
      }
      m(i, c) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
    }
  }
  return m;
}

Json schur_basis_to_json(const SchurBasis& basis) {
  const char* group = basis.group == SchurBasis::Group::SU2  ? "su2"
                      : basis.group == SchurBasis::Group::U1 ? "u1"
                                                             : "abstract";
  return Json{{"schema", 1},
              {"group", group},
              {"n_sites", basis.n_sites},
              {"irrep_labels", basis.irrep_labels},
              {"dim_irrep", basis.dim_irrep},
              {"dim_mult", basis.dim_mult},
              {"basis_matrix", matrix_to_json(basis.basis_matrix)}};
}

SchurBasis schur_basis_from_json(const Json& j) {
  SchurBasis basis;
  const std::string group = j.at("group").get<std::string>();
  basis.group = group == "su2"  ? SchurBasis::Group::SU2
                : group == "u1" ? SchurBasis::Group::U1
                                : SchurBasis::Group::Abstract;
  basis.n_sites = j.at("n_sites").get<int>();
  basis.irrep_labels = j.at("irrep_labels").get<std::vector<double>>();
  basis.dim_irrep = j.at("dim_irrep").get<std::vector<int>>();
  basis.dim_mult = j.at("dim_mult").get<std::vector<int>>();
  basis.basis_matrix = matrix_from_json(j.at("basis_matrix"));
  return basis;
}

}  // namespace invenc
