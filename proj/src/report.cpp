#include "mbk/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace mbk::report {

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return std::size_t(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

void Report::append(const Report& other) {
  for (Check c : other.checks) {
    c.name = other.suite + "." + c.name;
    checks.push_back(std::move(c));
  }
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string kv(const std::string& key, const std::string& value) {
  const bool quote = value.empty() || value.find_first_of(" \t\"=") != std::string::npos;
  if (!quote) return key + "=" + value;
  std::string q = "\"";
  for (char ch : value) {
    if (ch == '"' || ch == '\\') q.push_back('\\');
    q.push_back(ch);
  }
  return key + "=" + q + "\"";
}

std::string Report::to_text() const {
  std::string out = kv("suite", suite) + "\n";
  for (const Check& c : checks) {
    out += kv("check", c.name) + " " + kv("status", c.passed ? "pass" : "fail") + " " +
           kv("max_residual", format_double(c.max_residual)) + " " +
           kv("samples", std::to_string(c.samples));
    if (!c.note.empty()) out += " " + kv("note", c.note);
    if (!c.witness.empty()) out += " " + kv("witness", c.witness);
    out += "\n";
  }
  out += kv("result", passed() ? "pass" : "fail") + " " + kv("checks", std::to_string(checks.size())) +
         " " + kv("failed", std::to_string(failures())) + "\n";
  return out;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["status"] = passed() ? "pass" : "fail";
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : checks) {
    nlohmann::ordered_json x;
    x["name"] = c.name;
    x["status"] = c.passed ? "pass" : "fail";
    x["max_residual"] = std::isfinite(c.max_residual) ? nlohmann::ordered_json(c.max_residual)
                                                       : nlohmann::ordered_json(format_double(c.max_residual));
    x["samples"] = c.samples;
    if (!c.note.empty()) x["note"] = c.note;
    if (!c.witness.empty()) x["witness"] = c.witness;
    j["checks"].push_back(std::move(x));
  }
  j["failed"] = failures();
  return j;
}

}  // namespace mbk::report
