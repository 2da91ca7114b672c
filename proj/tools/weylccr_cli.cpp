// weylccr command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "weylccr/weylccr.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Wraps a C API status: anything but OK becomes a UsageError with the library message.
void check(int status, const std::string& context) {
  if (status == WEYLCCR_OK) return;
  std::string msg = context + ": " + weylccr_status_name(status);
  const std::string detail = weylccr_last_error();
  if (!detail.empty()) msg += " (" + detail + ")";
  throw UsageError(msg);
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};

using FrameHandle = std::unique_ptr<weylccr_frame, Deleter<weylccr_frame, weylccr_frame_destroy>>;
using ElementHandle = std::unique_ptr<weylccr_element, Deleter<weylccr_element, weylccr_element_destroy>>;
using StateHandle = std::unique_ptr<weylccr_state, Deleter<weylccr_state, weylccr_state_destroy>>;
using ReportHandle = std::unique_ptr<weylccr_report, Deleter<weylccr_report, weylccr_report_destroy>>;

/// Fetches text from a size-query style API call.
template <class Fn>
std::string fetch_text(Fn&& fn, const std::string& context) {
  std::size_t len = 0;
  int status = fn(nullptr, &len);
  if (status != WEYLCCR_ERR_BUFFER_TOO_SMALL) check(status, context);
  std::string buf(len, '\0');
  check(fn(buf.data(), &len), context);
  buf.resize(len - 1);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FrameHandle load_frame(const std::string& path) {
  if (path.empty()) return nullptr;
  weylccr_frame* f = nullptr;
  check(weylccr_frame_from_json(read_file(path).c_str(), &f), "frame " + path);
  return FrameHandle(f);
}

StateHandle state_from_text(const std::string& text, const std::string& context) {
  weylccr_state* s = nullptr;
  check(weylccr_state_from_json(text.c_str(), &s), context);
  return StateHandle(s);
}

ElementHandle parse_element(const std::string& expr, const weylccr_frame* frame) {
  weylccr_element* x = nullptr;
  check(weylccr_element_parse(expr.c_str(), frame, &x), "element '" + expr + "'");
  return ElementHandle(x);
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string format_complex(double re, double im) {
  if (im == 0.0) return format_number(re);
  if (re == 0.0) return format_number(im) + "i";
  return format_number(re) + (im < 0 ? "-" : "+") + format_number(im < 0 ? -im : im) + "i";
}

struct Options {
  std::string frame;
  std::string state;
  std::string elem;
  std::string suite;
  std::string kind;
  std::string endpoints;
  double tol = 1e-10;
  std::uint64_t seed = 1;
  std::size_t grid = 100;
  std::string output = "text";
  bool json() const { return output == "json"; }
};

int cmd_simplify(const Options& o) {
  FrameHandle frame = load_frame(o.frame);
  ElementHandle x = parse_element(o.elem, frame.get());
  if (o.json()) {
    const std::string text =
        fetch_text([&](char* b, std::size_t* n) { return weylccr_element_to_json(x.get(), b, n); }, "render");
    std::cout << nlohmann::json::parse(text).dump(2) << "\n";
  } else {
    std::cout << fetch_text([&](char* b, std::size_t* n) { return weylccr_element_to_string(x.get(), b, n); }, "render")
              << "\n";
  }
  return kExitPass;
}

int cmd_eval(const Options& o) {
  FrameHandle frame = load_frame(o.frame);
  StateHandle s = state_from_text(read_file(o.state), "state " + o.state);
  ElementHandle x = parse_element(o.elem, frame.get());
  double re = 0.0, im = 0.0;
  check(weylccr_state_evaluate(s.get(), x.get(), &re, &im), "evaluate");
  if (o.json()) std::cout << nlohmann::json{{"re", re}, {"im", im}}.dump() << "\n";
  else std::cout << format_complex(re, im) << "\n";
  return kExitPass;
}

int emit_report(const ReportHandle& report, const Options& o) {
  std::cout << fetch_text(
      [&](char* b, std::size_t* n) { return weylccr_report_render(report.get(), o.json() ? 1 : 0, b, n); }, "render");
  int passed = 0;
  check(weylccr_report_passed(report.get(), &passed), "report");
  return passed ? kExitPass : kExitFailure;
}

int cmd_verify(const Options& o) {
  FrameHandle frame = load_frame(o.frame);
  weylccr_run_config cfg;
  weylccr_run_config_init(&cfg);
  cfg.tolerance = o.tol;
  cfg.seed = o.seed;
  cfg.frame = frame.get();
  weylccr_report* r = nullptr;
  check(weylccr_verify(o.suite.c_str(), &cfg, &r), "verify " + o.suite);
  return emit_report(ReportHandle(r), o);
}

std::string default_kind(const std::string& family) {
  if (family == "plane_wave" || family == "bloch" || family == "zak") return family;
  throw UsageError("no path through " + family + " states");
}

int cmd_path_demo(const Options& o) {
  const std::string path = o.endpoints.empty() ? o.state : o.endpoints;
  if (path.empty()) throw UsageError("path-demo needs --endpoints FILE");
  const nlohmann::json doc = nlohmann::json::parse(read_file(path), nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("from") || !doc.contains("to"))
    throw UsageError(path + ": expected an object with \"from\" and \"to\" states");
  StateHandle from = state_from_text(doc["from"].dump(), "from");
  StateHandle to = state_from_text(doc["to"].dump(), "to");
  std::string kind = o.kind;
  if (kind.empty() && doc.contains("kind")) kind = doc["kind"].get<std::string>();
  if (kind.empty()) kind = default_kind(doc["from"].value("family", std::string()));
  FrameHandle frame = load_frame(o.frame);
  if (!frame && doc.contains("frame")) {
    weylccr_frame* f = nullptr;
    check(weylccr_frame_from_json(doc["frame"].dump().c_str(), &f), "frame");
    frame.reset(f);
  }
  weylccr_report* r = nullptr;
  check(weylccr_path_demo(kind.c_str(), from.get(), to.get(), o.grid, frame.get(), &r), "path-demo");
  return emit_report(ReportHandle(r), o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the Weyl CCR algebra and its invariant states"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(weylccr_version()));
  Options o;

  auto add_frame = [&](CLI::App* cmd) { cmd->add_option("--frame", o.frame, "Frame JSON file (default: identity)"); };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", o.output, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* simplify = app.add_subcommand("simplify", "Normal-order and merge an element");
  simplify->add_option("expr,--elem", o.elem, "Element expression, e.g. \"u(1/2)*v(1/3) + 2i*v(1)\"")->required();
  add_frame(simplify);
  add_output(simplify);

  auto* eval = app.add_subcommand("eval", "Evaluate a state on an element");
  eval->add_option("--state", o.state, "State JSON file")->required();
  eval->add_option("expr,--elem", o.elem, "Element expression")->required();
  add_frame(eval);
  add_output(eval);

  auto* verify = app.add_subcommand("verify", "Run a verification battery");
  verify->add_option("suite,--suite", o.suite, weylccr_suite_names())->required();
  verify->add_option("--tol", o.tol, "Tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed, "Seed for the randomized checks");
  add_frame(verify);
  add_output(verify);

  auto* path = app.add_subcommand("path-demo", "Weak-* distances along a path of states");
  path->add_option("--endpoints", o.endpoints, "JSON file {\"from\": state, \"to\": state[, \"kind\", \"frame\"]}");
  path->add_option("--state", o.state, "Alias for --endpoints");
  path->add_option("--kind", o.kind, "plane_wave | bloch | zak (default: from the endpoint family)");
  path->add_option("--grid", o.grid, "Number of steps")->check(CLI::PositiveNumber);
  add_frame(path);
  add_output(path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*simplify) return cmd_simplify(o);
    if (*eval) return cmd_eval(o);
    if (*verify) return cmd_verify(o);
    if (*path) return cmd_path_demo(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
