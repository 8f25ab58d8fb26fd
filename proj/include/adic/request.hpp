#pragma once

// The JSON request/response protocol behind the command-line tool.
//
//   {"schema_version":1,"command":"eval","prime":3,"seed":7,"params":{...}}
//   {"ok":true,"result":...} | {"ok":false,"error":{"code":"...","message":"..."}}

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "adic/json_io.hpp"

namespace adic {

inline constexpr int kSchemaVersion = 1;

/// Fallbacks for fields a request leaves out.
struct RequestDefaults {
  std::optional<std::uint64_t> prime;
  std::uint64_t seed = 0;
};

using ParamValue = std::variant<TateSeries, PointDescriptor, RationalSubset, RingDescriptor,
                                ConvexSubgroup, long, std::vector<TateSeries>>;

struct Request {
  bool explicitSchemaVersion = false;
  std::string command;
  Prime prime{2};
  std::optional<std::uint64_t> seed;
  /// Decoded parameters in canonical order.
  std::vector<std::pair<std::string, ParamValue>> params;

  const ParamValue* find(const std::string& key) const;
};

/// Throws ParseError for malformed JSON and SchemaError for schema violations
/// (domain errors can surface while validating embedded ring descriptors).
Request parseRequest(std::string_view text, const RequestDefaults& defaults = {});
/// Canonical compact encoding; parseRequest followed by serializeRequest is
/// the identity on canonical input.
std::string serializeRequest(const Request& req);

struct Response {
  json::Json body;
  /// 0 ok, 1 domain error, 2 parse or schema error
  int exitStatus;
};

Response runCommand(const Request& req, const RequestDefaults& defaults = {});
/// Parse and run, turning every failure into an error response.
Response runRequest(std::string_view text, const RequestDefaults& defaults = {});

std::string renderResponse(const Response& r, bool pretty);

}  // namespace adic
