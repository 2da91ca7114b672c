#include "weylccr/weylccr.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <variant>

#include "weylccr/error.hpp"
#include "weylccr/expr.hpp"
#include "weylccr/json_io.hpp"
#include "weylccr/verify.hpp"

struct weylccr_frame {
  weylccr::FramePtr frame;
};

struct weylccr_element {
  weylccr::Element value;
};

struct weylccr_state {
  weylccr::StateModel value;
};

struct weylccr_report {
  std::variant<weylccr::SuiteReport, weylccr::PathDemoReport> value;
};

namespace {

thread_local std::string last_error;

int code_for(weylccr::ErrorKind kind) {
  using weylccr::ErrorKind;
  switch (kind) {
    case ErrorKind::InvalidArgument: return WEYLCCR_ERR_INVALID_ARGUMENT;
    case ErrorKind::DimensionMismatch: return WEYLCCR_ERR_DIMENSION_MISMATCH;
    case ErrorKind::FrameMismatch: return WEYLCCR_ERR_FRAME_MISMATCH;
    case ErrorKind::SingularFrame: return WEYLCCR_ERR_SINGULAR_FRAME;
    case ErrorKind::NotDecomposable: return WEYLCCR_ERR_NOT_DECOMPOSABLE;
    case ErrorKind::NotAState: return WEYLCCR_ERR_NOT_A_STATE;
    case ErrorKind::WindowTooSmall: return WEYLCCR_ERR_WINDOW_TOO_SMALL;
    case ErrorKind::OutOfSubalgebra: return WEYLCCR_ERR_OUT_OF_SUBALGEBRA;
    case ErrorKind::InvalidProbeSet: return WEYLCCR_ERR_INVALID_PROBE_SET;
    case ErrorKind::Unsupported: return WEYLCCR_ERR_UNSUPPORTED;
    case ErrorKind::Parse: return WEYLCCR_ERR_PARSE;
  }
  return WEYLCCR_ERR_INTERNAL;
}

int fail(int code, const std::string& what) {
  last_error = what;
  return code;
}

/// Runs fn, translating exceptions into status codes.
template <class Fn>
int guarded(Fn&& fn) noexcept {
  try {
    last_error.clear();
    return fn();
  } catch (const weylccr::Error& e) {
    return fail(code_for(e.kind()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(WEYLCCR_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(WEYLCCR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(WEYLCCR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(WEYLCCR_ERR_INTERNAL, "unknown error");
  }
}

int write_text(const std::string& text, char* buf, std::size_t* len) {
  if (!len) return fail(WEYLCCR_ERR_NULL_POINTER, "len is null");
  const std::size_t needed = text.size() + 1;
  const std::size_t capacity = *len;
  *len = needed;
  if (!buf || capacity < needed)
    return fail(WEYLCCR_ERR_BUFFER_TOO_SMALL, "buffer needs " + std::to_string(needed) + " bytes");
  std::memcpy(buf, text.c_str(), needed);
  return WEYLCCR_OK;
}

#define WEYLCCR_REQUIRE(ptr) \
  if (!(ptr)) return fail(WEYLCCR_ERR_NULL_POINTER, #ptr " is null")

}  // namespace

extern "C" {

const char* weylccr_version(void) { return "0.1.0"; }

const char* weylccr_status_name(int status) {
  switch (status) {
    case WEYLCCR_OK: return "ok";
    case WEYLCCR_ERR_INVALID_ARGUMENT: return "invalid argument";
    case WEYLCCR_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case WEYLCCR_ERR_FRAME_MISMATCH: return "frame mismatch";
    case WEYLCCR_ERR_SINGULAR_FRAME: return "singular frame";
    case WEYLCCR_ERR_NOT_DECOMPOSABLE: return "not decomposable";
    case WEYLCCR_ERR_NOT_A_STATE: return "not a state";
    case WEYLCCR_ERR_WINDOW_TOO_SMALL: return "window too small";
    case WEYLCCR_ERR_OUT_OF_SUBALGEBRA: return "out of subalgebra";
    case WEYLCCR_ERR_INVALID_PROBE_SET: return "invalid probe set";
    case WEYLCCR_ERR_UNSUPPORTED: return "unsupported";
    case WEYLCCR_ERR_PARSE: return "parse error";
    case WEYLCCR_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case WEYLCCR_ERR_NULL_POINTER: return "null pointer";
    case WEYLCCR_ERR_INTERNAL: return "internal error";
    default: return "unknown status";
  }
}

const char* weylccr_last_error(void) { return last_error.c_str(); }

int weylccr_frame_identity(size_t d, weylccr_frame** out) {
  WEYLCCR_REQUIRE(out);
  return guarded([&]() -> int {
    if (d == 0) return fail(WEYLCCR_ERR_INVALID_ARGUMENT, "dimension must be positive");
    *out = new weylccr_frame{weylccr::Frame::identity(d)};
    return WEYLCCR_OK;
  });
}

int weylccr_frame_from_json(const char* json, weylccr_frame** out) {
  WEYLCCR_REQUIRE(json);
  WEYLCCR_REQUIRE(out);
  return guarded([&]() -> int {
    *out = new weylccr_frame{weylccr::json_io::frame_from_json(nlohmann::json::parse(json))};
    return WEYLCCR_OK;
  });
}

int weylccr_frame_dimension(const weylccr_frame* frame, size_t* d) {
  WEYLCCR_REQUIRE(frame);
  WEYLCCR_REQUIRE(d);
  *d = frame->frame->dimension();
  return WEYLCCR_OK;
}

void weylccr_frame_destroy(weylccr_frame* frame) { delete frame; }

int weylccr_element_parse(const char* expr, const weylccr_frame* frame, weylccr_element** out) {
  WEYLCCR_REQUIRE(expr);
  WEYLCCR_REQUIRE(out);
  return guarded([&]() -> int {
    *out = new weylccr_element{weylccr::parse_element(expr, frame ? frame->frame : nullptr)};
    return WEYLCCR_OK;
  });
}

int weylccr_element_from_json(const char* json, weylccr_element** out) {
  WEYLCCR_REQUIRE(json);
  WEYLCCR_REQUIRE(out);
  return guarded([&]() -> int {
    *out = new weylccr_element{weylccr::json_io::element_from_json(nlohmann::json::parse(json))};
    return WEYLCCR_OK;
  });
}

int weylccr_element_term_count(const weylccr_element* x, size_t* count) {
  WEYLCCR_REQUIRE(x);
  WEYLCCR_REQUIRE(count);
  *count = x->value.size();
  return WEYLCCR_OK;
}

int weylccr_element_multiply(const weylccr_element* x, const weylccr_element* y, weylccr_element** out) {
  WEYLCCR_REQUIRE(x);
  WEYLCCR_REQUIRE(y);
  WEYLCCR_REQUIRE(out);
  return guarded([&]() -> int {
    *out = new weylccr_element{x->value * y->value};
    return WEYLCCR_OK;
  });
}

int weylccr_element_adjoint(const weylccr_element* x, weylccr_element** out) {
  WEYLCCR_REQUIRE(x);
  WEYLCCR_REQUIRE(out);
  return guarded([&]() -> int {
    *out = new weylccr_element{weylccr::adjoint(x->value)};
    return WEYLCCR_OK;
  });
}

int weylccr_element_to_string(const weylccr_element* x, char* buf, size_t* len) {
  WEYLCCR_REQUIRE(x);
  return guarded([&]() -> int { return write_text(x->value.to_string(), buf, len); });
}

int weylccr_element_to_json(const weylccr_element* x, char* buf, size_t* len) {
  WEYLCCR_REQUIRE(x);
  return guarded([&]() -> int { return write_text(weylccr::json_io::to_json(x->value).dump(), buf, len); });
}

void weylccr_element_destroy(weylccr_element* x) { delete x; }

int weylccr_state_from_json(const char* json, weylccr_state** out) {
  WEYLCCR_REQUIRE(json);
  WEYLCCR_REQUIRE(out);
  return guarded([&]() -> int {
    *out = new weylccr_state{weylccr::json_io::state_from_json(nlohmann::json::parse(json))};
    return WEYLCCR_OK;
  });
}

int weylccr_state_to_json(const weylccr_state* s, char* buf, size_t* len) {
  WEYLCCR_REQUIRE(s);
  return guarded([&]() -> int { return write_text(weylccr::json_io::to_json(s->value).dump(), buf, len); });
}

int weylccr_state_evaluate(const weylccr_state* s, const weylccr_element* x, double* re, double* im) {
  WEYLCCR_REQUIRE(s);
  WEYLCCR_REQUIRE(x);
  WEYLCCR_REQUIRE(re);
  WEYLCCR_REQUIRE(im);
  return guarded([&]() -> int {
    const weylccr::Complex value = weylccr::evaluate(s->value, x->value);
    *re = value.real();
    *im = value.imag();
    return WEYLCCR_OK;
  });
}

void weylccr_state_destroy(weylccr_state* s) { delete s; }

void weylccr_run_config_init(weylccr_run_config* config) {
  if (!config) return;
  const weylccr::RunConfig defaults;
  config->tolerance = defaults.tolerance;
  config->seed = defaults.seed;
  config->frame = nullptr;
}

const char* weylccr_suite_names(void) {
  static const std::string names = [] {
    std::string out;
    for (const auto& n : weylccr::suite_names()) out += (out.empty() ? "" : " ") + n;
    return out;
  }();
  return names.c_str();
}

int weylccr_verify(const char* suite, const weylccr_run_config* config, weylccr_report** out) {
  WEYLCCR_REQUIRE(suite);
  WEYLCCR_REQUIRE(out);
  return guarded([&]() -> int {
    weylccr::RunConfig cfg;
    if (config) {
      cfg.tolerance = config->tolerance;
      cfg.seed = config->seed;
      if (config->frame) cfg.frame = config->frame->frame;
    }
    *out = new weylccr_report{weylccr::run_suite(suite, cfg)};
    return WEYLCCR_OK;
  });
}

int weylccr_path_demo(const char* kind, const weylccr_state* from, const weylccr_state* to, size_t grid,
                      const weylccr_frame* frame, weylccr_report** out) {
  WEYLCCR_REQUIRE(kind);
  WEYLCCR_REQUIRE(from);
  WEYLCCR_REQUIRE(to);
  WEYLCCR_REQUIRE(out);
  return guarded([&]() -> int {
    *out = new weylccr_report{weylccr::path_demo(weylccr::parse_path_kind(kind), from->value, to->value, grid,
                                                 frame ? frame->frame : nullptr)};
    return WEYLCCR_OK;
  });
}

int weylccr_report_passed(const weylccr_report* report, int* passed) {
  WEYLCCR_REQUIRE(report);
  WEYLCCR_REQUIRE(passed);
  if (const auto* suite = std::get_if<weylccr::SuiteReport>(&report->value)) *passed = suite->pass() ? 1 : 0;
  else *passed = 1;
  return WEYLCCR_OK;
}

int weylccr_report_render(const weylccr_report* report, int as_json, char* buf, size_t* len) {
  WEYLCCR_REQUIRE(report);
  return guarded([&]() -> int {
    const std::string text = std::visit(
        [&](const auto& r) { return as_json ? r.to_json().dump(2) + "\n" : r.render_text(); }, report->value);
    return write_text(text, buf, len);
  });
}

void weylccr_report_destroy(weylccr_report* report) { delete report; }

}  // extern "C"
