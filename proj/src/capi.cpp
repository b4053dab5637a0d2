#include "triality/triality.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "triality/command.hpp"
#include "triality/error.hpp"
#include "triality/json_io.hpp"
#include "triality/scalar.hpp"

struct tri_context {
  double eps = 1e-9;
  std::string last_error;
};

namespace {

using triality::ErrorCode;
using triality::io::json;

tri_status status_of(ErrorCode code) { return static_cast<tri_status>(static_cast<int>(code) + 1); }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tri_status fail(tri_context* ctx, tri_status status, const std::string& message, const std::string* location) {
  json err{{"code", tri_status_name(status)}, {"message", message}};
  if (location) err["location"] = *location;
  ctx->last_error = json{{"schema", triality::io::kSchema}, {"error", err}}.dump();
  return status;
}

json parse_or_empty(const char* text) {
  if (!text || !*text) return json::object();
  return triality::io::parse_json_text(text);
}

}  // namespace

extern "C" {

const char* tri_version(void) { return "0.1.0"; }

tri_context* tri_context_new(void) { return new (std::nothrow) tri_context(); }

void tri_context_free(tri_context* ctx) { delete ctx; }

tri_status tri_context_set_tolerance(tri_context* ctx, double eps) {
  if (!ctx) return TRI_E_INVALID_ARGUMENT;
  if (!(eps > 0.0)) return fail(ctx, TRI_E_INVALID_ARGUMENT, "tolerance must be positive", nullptr);
  ctx->eps = eps;
  return TRI_OK;
}

tri_status tri_run(tri_context* ctx, const char* command, const char* subcommand, const char* input_json,
                   const char* options_json, char** out_json) {
  if (!ctx) return TRI_E_INVALID_ARGUMENT;
  ctx->last_error.clear();
  if (!out_json || !command) return fail(ctx, TRI_E_INVALID_ARGUMENT, "command and out_json are required", nullptr);
  *out_json = nullptr;
  try {
    const json input = parse_or_empty(input_json);
    const json options = parse_or_empty(options_json);
    double eps = ctx->eps;
    if (options.is_object() && options.contains("eps") && !options["eps"].is_null()) {
      if (!options["eps"].is_number() || !(options["eps"].get<double>() > 0.0)) {
        throw triality::ParseError("/eps", "eps must be a positive number");
      }
      eps = options["eps"].get<double>();
    }
    const double saved = triality::numeric_tolerance();
    triality::set_numeric_tolerance(eps);
    json out;
    try {
      out = triality::run_command(command, subcommand ? subcommand : "", input, options);
    } catch (...) {
      triality::set_numeric_tolerance(saved);
      throw;
    }
    triality::set_numeric_tolerance(saved);
    *out_json = dup_string(out.dump());
    if (!*out_json) return fail(ctx, TRI_E_INTERNAL, "out of memory", nullptr);
    return TRI_OK;
  } catch (const triality::ParseError& e) {
    return fail(ctx, TRI_E_PARSE, e.reason(), &e.location());
  } catch (const triality::Error& e) {
    return fail(ctx, status_of(e.code()), e.what(), nullptr);
  } catch (const std::exception& e) {
    return fail(ctx, TRI_E_INTERNAL, e.what(), nullptr);
  }
}

const char* tri_last_error(const tri_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

const char* tri_status_name(tri_status status) {
  switch (status) {
    case TRI_OK: return "OK";
    case TRI_E_INVALID_ARGUMENT: return "InvalidArgument";
    case TRI_E_INTERNAL: return "InternalError";
    default: break;
  }
  const int code = static_cast<int>(status) - 1;
  if (code >= 0 && code <= static_cast<int>(ErrorCode::Unsupported)) {
    return triality::error_code_name(static_cast<ErrorCode>(code)).data();
  }
  return "Unknown";
}

int tri_status_exit_code(tri_status status) {
  if (status == TRI_OK) return 0;
  if (status == TRI_E_PARSE || status == TRI_E_UNKNOWN_COMMAND || status == TRI_E_INVALID_ARGUMENT) return 2;
  return 1;
}

const char* tri_command_list(void) {
  static const std::string list = [] {
    std::string s;
    for (const auto& [cmd, sub] : triality::command_table()) s += sub.empty() ? cmd + "\n" : cmd + " " + sub + "\n";
    return s;
  }();
  return list.c_str();
}

void tri_string_free(char* s) { std::free(s); }

}  // extern "C"
