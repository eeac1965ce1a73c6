#pragma once

// JSON wire formats.
//
//   matrix / vector: {"dim": n, "entries": [[re, im], ...]}  (row-major)
//   report:          {"s", "k", "tol", "checks": [{"name", "deviation",
//                     "threshold", "pass"[, "witness"]}], "overall_pass"}
//
// Doubles are written in shortest round-trip form, so parse(dump(M)) == M
// bit for bit.

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qpolar/cmatrix.hpp"
#include "qpolar/verifier.hpp"

namespace qpolar {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline nlohmann::json entries_to_json(std::span<const CScalar> entries) {
  auto arr = nlohmann::json::array();
  for (const auto& z : entries) arr.push_back({z.real(), z.imag()});
  return arr;
}

inline std::vector<CScalar> entries_from_json(const nlohmann::json& arr, std::size_t expected) {
  if (!arr.is_array() || arr.size() != expected) {
    throw FormatError("\"entries\" must be an array of " + std::to_string(expected) + " pairs");
  }
  std::vector<CScalar> out;
  out.reserve(expected);
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw FormatError("each entry must be a [re, im] pair of numbers");
    }
    const double re = pair[0].get<double>();
    const double im = pair[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) throw FormatError("non-finite entry");
    out.emplace_back(re, im);
  }
  return out;
}

inline std::size_t dim_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
    throw FormatError("expected an object with \"dim\" and \"entries\"");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1) {
    throw FormatError("\"dim\" must be a positive integer");
  }
  return j["dim"].get<std::size_t>();
}

}  // namespace detail

inline nlohmann::json to_json(const CMatrix& m) {
  return {{"dim", m.dim()}, {"entries", detail::entries_to_json(m.entries())}};
}

inline nlohmann::json to_json(const CVector& v) {
  return {{"dim", v.dim()}, {"entries", detail::entries_to_json(v.entries())}};
}

inline CMatrix matrix_from_json(const nlohmann::json& j) {
  const auto dim = detail::dim_from_json(j);
  return CMatrix(dim, detail::entries_from_json(j["entries"], dim * dim));
}

inline CVector vector_from_json(const nlohmann::json& j) {
  const auto dim = detail::dim_from_json(j);
  return CVector(detail::entries_from_json(j["entries"], dim));
}

inline nlohmann::json to_json(const CheckResult& c) {
  nlohmann::json j{{"name", c.name},
                   {"deviation", c.deviation},
                   {"threshold", c.threshold},
                   {"pass", c.pass}};
  if (c.witness) j["witness"] = *c.witness;
  return j;
}

inline nlohmann::json to_json(const VerificationReport& r) {
  auto checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"s", r.config.s},
          {"k", r.config.k},
          {"tol", r.config.tol},
          {"checks", std::move(checks)},
          {"overall_pass", r.overall_pass}};
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
  try {
    VerificationReport r;
    r.config = AlgebraConfig{j.at("s").get<int>(), j.at("k").get<int>(), j.at("tol").get<double>()};
    for (const auto& c : j.at("checks")) {
      CheckResult check{c.at("name").get<std::string>(), c.at("deviation").get<double>(),
                        c.at("threshold").get<double>(), c.at("pass").get<bool>(), std::nullopt};
      if (c.contains("witness")) check.witness = c["witness"].get<double>();
      r.checks.push_back(std::move(check));
    }
    r.overall_pass = j.at("overall_pass").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace qpolar
