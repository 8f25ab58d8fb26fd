#include "adic/adic.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "adic/error.hpp"
#include "adic/request.hpp"

struct adic_ctx {
  adic::RequestDefaults defaults;
  std::string lastError;
};

struct adic_series {
  adic::TateSeries value;
};

struct adic_point {
  adic::PointDescriptor value;
};

namespace {

char* copyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs body, translating exceptions into a status and ctx->lastError.
template <typename F>
adic_status guarded(adic_ctx* ctx, F&& body) {
  if (!ctx) return ADIC_INVALID_ARGUMENT;
  ctx->lastError.clear();
  try {
    body();
    return ADIC_OK;
  } catch (const adic::Error& e) {
    ctx->lastError = e.what();
    return static_cast<adic_status>(e.code());
  } catch (const nlohmann::json::exception& e) {
    ctx->lastError = e.what();
    return ADIC_PARSE_ERROR;
  } catch (const std::exception& e) {
    ctx->lastError = e.what();
    return ADIC_INTERNAL_ERROR;
  }
}

adic_status nullArgument(adic_ctx* ctx) {
  if (ctx) ctx->lastError = "required pointer argument is null";
  return ADIC_INVALID_ARGUMENT;
}

adic::Prime checkedPrime(uint64_t p) {
  if (!adic::isPrime(p) || p >= (1ULL << 31)) {
    adic::fail(adic::ErrorCode::InvalidArgument, std::to_string(p) + " is not a prime below 2^31");
  }
  return adic::Prime(p);
}

}  // namespace

extern "C" {

adic_status adic_ctx_new(uint64_t default_prime, uint64_t default_seed, adic_ctx** out) {
  if (!out) return ADIC_INVALID_ARGUMENT;
  *out = nullptr;
  if (default_prime != 0 && (!adic::isPrime(default_prime) || default_prime >= (1ULL << 31))) {
    return ADIC_INVALID_ARGUMENT;
  }
  auto* ctx = new (std::nothrow) adic_ctx;
  if (!ctx) return ADIC_INTERNAL_ERROR;
  if (default_prime != 0) ctx->defaults.prime = default_prime;
  ctx->defaults.seed = default_seed;
  *out = ctx;
  return ADIC_OK;
}

void adic_ctx_free(adic_ctx* ctx) { delete ctx; }

const char* adic_last_error(const adic_ctx* ctx) { return ctx ? ctx->lastError.c_str() : ""; }

const char* adic_status_name(adic_status status) {
  switch (status) {
    case ADIC_OK: return "Ok";
    case ADIC_INTERNAL_ERROR: return "InternalError";
    default: break;
  }
  if (status < ADIC_INVALID_ARGUMENT || status > ADIC_SCHEMA_ERROR) return "Unknown";
  return adic::errorCodeName(static_cast<adic::ErrorCode>(status)).data();
}

adic_status adic_run_request(adic_ctx* ctx, const char* request, int pretty, char** response,
                             int* exit_status) {
  if (!request || !response || !exit_status) return nullArgument(ctx);
  return guarded(ctx, [&] {
    const adic::Response r = adic::runRequest(request, ctx->defaults);
    *response = copyString(adic::renderResponse(r, pretty != 0));
    if (!*response) throw std::bad_alloc();
    *exit_status = r.exitStatus;
  });
}

void adic_string_free(char* s) { std::free(s); }

adic_status adic_series_parse(adic_ctx* ctx, uint64_t prime, const char* json, adic_series** out) {
  if (!json || !out) return nullArgument(ctx);
  return guarded(ctx, [&] {
    const auto j = adic::json::Json::parse(json);
    *out = new adic_series{adic::json::parseSeries(j, checkedPrime(prime), "series")};
  });
}

void adic_series_free(adic_series* f) { delete f; }

adic_status adic_point_parse(adic_ctx* ctx, uint64_t prime, const char* json, adic_point** out) {
  if (!json || !out) return nullArgument(ctx);
  return guarded(ctx, [&] {
    const auto j = adic::json::Json::parse(json);
    *out = new adic_point{adic::json::parsePoint(j, checkedPrime(prime), "point")};
  });
}

void adic_point_free(adic_point* x) { delete x; }

adic_status adic_evaluate(adic_ctx* ctx, const adic_series* f, const adic_point* x, char** value) {
  if (!f || !x || !value) return nullArgument(ctx);
  return guarded(ctx, [&] {
    *value = copyString(adic::evaluate(f->value, x->value).toString());
    if (!*value) throw std::bad_alloc();
  });
}

adic_status adic_classify(adic_ctx* ctx, const adic_point* x, int* type_tag, int* in_d) {
  if (!x || !type_tag || !in_d) return nullArgument(ctx);
  return guarded(ctx, [&] {
    const adic::PointReport r = adic::classify(x->value);
    *type_tag = r.typeTag;
    *in_d = r.inD ? 1 : 0;
  });
}

}  // extern "C"
