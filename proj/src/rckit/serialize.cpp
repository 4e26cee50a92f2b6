// Copyright 2026 The rckit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rckit/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rckit {

namespace {

using nlohmann::json;

json matrix_part_to_json(const Matrix& mat, bool imag) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < mat.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < mat.cols(); ++j) {
      row.push_back(imag ? mat(i, j).imag() : mat(i, j).real());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_parts(const json& re, const json& im, int rows, int cols) {
  if (!re.is_array() || !im.is_array() ||
      static_cast<int>(re.size()) != rows ||
      static_cast<int>(im.size()) != rows) {
    throw Error(Errc::ParseError, "re/im must be arrays with one row per "
                                  "matrix row");
  }
  Matrix mat(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& rre = re.at(i);
    const json& rim = im.at(i);
    if (!rre.is_array() || !rim.is_array() ||
        static_cast<int>(rre.size()) != cols ||
        static_cast<int>(rim.size()) != cols) {
      throw Error(Errc::ParseError, "re/im rows must have one entry per "
                                    "matrix column");
    }
    for (int j = 0; j < cols; ++j) {
      const double a = rre.at(j).get<double>();
      const double b = rim.at(j).get<double>();
      if (!std::isfinite(a) || !std::isfinite(b)) {
        throw Error(Errc::ParseError, "matrix entries must be finite");
      }
      mat(i, j) = Complex(a, b);
    }
  }
  return mat;
}

json parse(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw Error(Errc::ParseError, "invalid JSON");
  }
  return doc;
}

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) {
    throw Error(Errc::ParseError, std::string("missing field: ") + name);
  }
  return *it;
}

int int_field(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_number_integer()) {
    throw Error(Errc::ParseError, std::string(name) + " must be an integer");
  }
  return v.get<int>();
}

}  // namespace

std::string state_to_json(const BipartiteState& state) {
  json doc;
  doc["dims"] = {state.dims.na, state.dims.nb};
  doc["re"] = matrix_part_to_json(state.mat, false);
  doc["im"] = matrix_part_to_json(state.mat, true);
  return doc.dump(2) + "\n";
}

BipartiteState state_from_json(const std::string& text) {
  try {
    const json doc = parse(text);
    const json& dims = field(doc, "dims");
    if (!dims.is_array() || dims.size() != 2 ||
        !dims.at(0).is_number_integer() || !dims.at(1).is_number_integer()) {
      throw Error(Errc::ParseError, "dims must be [nA, nB]");
    }
    const Dims d(dims.at(0).get<int>(), dims.at(1).get<int>());
    const int n = d.total();
    const Matrix mat = matrix_from_parts(field(doc, "re"), field(doc, "im"),
                                         n, n);
    return validate_density(mat, d);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("state file: ") + e.what());
  }
}

std::string channel_to_json(const ChannelMatrix& ch) {
  json doc;
  doc["nIn"] = ch.nIn;
  doc["nOut"] = ch.nOut;
  doc["re"] = matrix_part_to_json(ch.mat, false);
  doc["im"] = matrix_part_to_json(ch.mat, true);
  return doc.dump(2) + "\n";
}

ChannelMatrix channel_from_json(const std::string& text) {
  try {
    const json doc = parse(text);
    const int n_in = int_field(doc, "nIn");
    const int n_out = int_field(doc, "nOut");
    if (n_in < 2 || n_out < 2) {
      throw Error(Errc::ParseError, "nIn and nOut must be >= 2");
    }
    const Matrix mat = matrix_from_parts(field(doc, "re"), field(doc, "im"),
                                         n_out * n_out, n_in * n_in);
    return ChannelMatrix{n_in, n_out, mat};
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("channel file: ") + e.what());
  }
}

std::string bound_table_to_json(const BoundTable& table) {
  json doc;
  doc["dims"] = {table.dims.na, table.dims.nb};
  doc["kind"] = bound_kind_name(table.kind);
  doc["bounds"] = std::vector<double>(
      table.bounds.data(), table.bounds.data() + table.bounds.size());
  json prov;
  prov["origin"] = table.provenance.origin;
  if (!table.provenance.configHash.empty()) {
    prov["config_hash"] = table.provenance.configHash;
  }
  doc["provenance"] = std::move(prov);
  return doc.dump(2) + "\n";
}

BoundTable bound_table_from_json(const std::string& text) {
  try {
    const json doc = parse(text);
    const json& dims = field(doc, "dims");
    if (!dims.is_array() || dims.size() != 2) {
      throw Error(Errc::ParseError, "dims must be [nA, nB]");
    }
    BoundTable table;
    table.dims = Dims(dims.at(0).get<int>(), dims.at(1).get<int>());
    table.kind = bound_kind_from_name(field(doc, "kind").get<std::string>());
    const json& bounds = field(doc, "bounds");
    if (!bounds.is_array() || bounds.empty()) {
      throw Error(Errc::ParseError, "bounds must be a non-empty array");
    }
    table.bounds.resize(static_cast<Eigen::Index>(bounds.size()));
    for (size_t i = 0; i < bounds.size(); ++i) {
      const double v = bounds.at(i).get<double>();
      if (!std::isfinite(v)) {
        throw Error(Errc::ParseError, "bounds must be finite");
      }
      table.bounds[static_cast<Eigen::Index>(i)] = v;
    }
    const json& prov = field(doc, "provenance");
    table.provenance.origin = field(prov, "origin").get<std::string>();
    if (prov.contains("config_hash")) {
      table.provenance.configHash = prov["config_hash"].get<std::string>();
    }
    return table;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("bound table: ") + e.what());
  }
}

std::string curve_to_csv(const std::vector<CurvePoint>& curve) {
  std::string out = "m1,max_separable,max_all\n";
  char buf[96];
  for (const CurvePoint& p : curve) {
    if (p.hasSeparable) {
      std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g\n", p.m1,
                    p.maxSeparable, p.maxAll);
    } else {
      std::snprintf(buf, sizeof(buf), "%.12g,,%.12g\n", p.m1, p.maxAll);
    }
    out += buf;
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::ParseError, "cannot read file: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) {
    throw Error(Errc::ParseError, "read failed: " + path);
  }
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(Errc::ParseError, "cannot write file: " + path);
  }
  out << text;
  out.flush();
  if (!out) {
    throw Error(Errc::ParseError, "write failed: " + path);
  }
}

}  // namespace rckit
