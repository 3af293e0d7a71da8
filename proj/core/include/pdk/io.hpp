#pragma once

#include "pdk/wavefront.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace pdk::io {

/// Parse or validation failure, with a JSON-pointer-style path to the
/// offending element in what().
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Grid payload for wave-front sweeps: query parameters plus a list of
/// (x0, xi0) points.
struct GridSpec {
  std::vector<std::pair<PAdicPoint, PAdicPoint>> points;
  LambdaGroup lambda;
  std::int64_t nbhd_radius = 1;
  std::int64_t probe_depth = 2;
  std::int64_t ord_floor = -4;
};

using Payload = std::variant<SBFunction, Distribution, Kernel, MicrolocalQuery, GridSpec>;

struct ExprFile {
  std::int64_t format_version = 1;
  std::int64_t p = 2;
  Payload payload;
};

ExprFile parse_expr_file(const std::string& text);
ExprFile load_expr_file(const std::string& path);

std::string emit(const SBFunction& f);
std::string emit(const Distribution& u);
std::string emit(const Kernel& k);

/// Scalar rendering for reports: exact cyclotomic literal, optionally with
/// a float approximation appended.
std::string scalar_repr(const CycScalar& value, bool approx);

/// JSON fragments, used by both the emitters and the CLI reports.
std::string scalar_json(const CycScalar& value);
std::string point_json(const PAdicPoint& x);
std::string ball_json(const Polydisc& b);
std::string sb_json(const SBFunction& f);
std::string distribution_json(const Distribution& u);
std::string verdict_json(const SmoothnessVerdict& verdict, bool approx);

}  // namespace pdk::io
