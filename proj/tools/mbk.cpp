// mbk: escape-time renders, 3D slice export, verification suites and
// estimates for Multibrot sets over the complex, hyperbolic and tricomplex
// numbers.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mbk/commands.hpp"

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& text, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (seps.find(ch) != std::string::npos) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  for (const auto& f : split(text, ", ")) {
    std::size_t used = 0;
    out.push_back(std::stod(f, &used));
    if (used != f.size()) throw std::invalid_argument("not a number: " + f);
  }
  return out;
}

// "256" -> n copies of 256; "320x200" or "320,200" -> as given.
std::vector<int> parse_extent(const std::string& text, std::size_t n) {
  std::vector<int> out;
  for (const auto& f : split(text, "x,")) {
    std::size_t used = 0;
    out.push_back(std::stoi(f, &used));
    if (used != f.size()) throw std::invalid_argument("not an integer: " + f);
  }
  if (out.size() == 1) out.assign(n, out[0]);
  if (out.size() != n) throw std::invalid_argument("expected " + std::to_string(n) + " sizes in '" + text + "'");
  return out;
}

// 2D: "lo,hi" (square) or "x_lo,x_hi,y_lo,y_hi". 3D: "lo,hi" (cube) or six numbers.
json parse_window(const std::string& text, bool three_d) {
  const auto v = parse_numbers(text);
  if (v.size() == 2)
    return three_d ? json{v[0], v[0], v[0], v[1], v[1], v[1]} : json{v[0], v[1], v[0], v[1]};
  if (v.size() != (three_d ? 6u : 4u)) throw std::invalid_argument("bad --window '" + text + "'");
  return json(v);
}

void emit_manifest(const mbk::manifest::RunManifest& m, const std::string& out) {
  const std::string text = m.to_json().dump(2) + "\n";
  if (out.empty()) {
    std::cerr << text;
    return;
  }
  const std::string path = out + ".manifest.json";
  std::ofstream f(path, std::ios::trunc);
  if (!f || !(f << text)) throw std::runtime_error("cannot write " + path);
}

int run_and_record(const std::string& command, const json& params) {
  const auto rec = mbk::cli::run_recorded(command, params);
  std::cout << rec.outcome.text << std::flush;
  emit_manifest(rec.manifest, rec.manifest.parameters.value("out", std::string{}));
  return rec.outcome.exit_code;
}

int replay(const std::string& manifest_path) {
  std::ifstream in(manifest_path);
  if (!in) throw std::runtime_error("cannot read " + manifest_path);
  const auto m = mbk::manifest::RunManifest::from_json(json::parse(in));

  std::string tmpl = (std::filesystem::temp_directory_path() / "mbk-replay-XXXXXX").string();
  if (!mkdtemp(tmpl.data())) throw std::runtime_error("cannot create scratch directory");
  const std::filesystem::path scratch(tmpl);

  const auto t0 = std::chrono::steady_clock::now();
  mbk::cli::Outcome o;
  try {
    o = mbk::cli::replay(m, scratch);
  } catch (...) {
    std::filesystem::remove_all(scratch);
    throw;
  }
  std::filesystem::remove_all(scratch);
  std::cout << o.text << std::flush;

  mbk::manifest::RunManifest self;
  self.command = "replay";
  self.parameters = {{"manifest", manifest_path}};
  self.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  self.outputs.push_back({"stdout", "", mbk::manifest::sha256_hex(o.text)});
  emit_manifest(self, "");
  return o.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Escape-time dynamics of z^p + c over complex, hyperbolic and tricomplex numbers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mbk::manifest::kToolVersion));

  // Shared option storage; each subcommand registers the flags it accepts.
  std::string set = "multibrot", slice = "1,i1,i2", window, res = "1000", dims = "64", out, format = "text";
  std::string suite = "all", kind = "real-extent", manifest_path;
  int p = 3, max_iter = 1000;
  std::optional<double> escape_radius, precision;
  std::uint64_t seed = 1;
  bool no_prune = false;

  const auto common = [&](CLI::App* c) {
    c->add_option("--p", p, "Degree p >= 2")->capture_default_str();
    c->add_option("--max-iter", max_iter, "Iteration cap M")->capture_default_str();
    c->add_option("--escape-radius", escape_radius, "Escape radius (default 2^(1/(p-1)))");
    c->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  };

  auto* r2 = app.add_subcommand("render2d", "Render a Multibrot or Hyperbrot slice as a P5 image");
  r2->add_option("--set", set, "multibrot | hyperbrot")->check(CLI::IsMember({"multibrot", "hyperbrot"}))->capture_default_str();
  r2->add_option("--window", window, "x_lo,x_hi,y_lo,y_hi or lo,hi (default -1.5,1.5)");
  r2->add_option("--res", res, "Resolution N or WxH")->capture_default_str();
  r2->add_option("--out", out, "Output .pgm path")->required();
  common(r2);

  auto* r3 = app.add_subcommand("render3d", "Sample a principal 3D slice into an MBV1 grid and point cloud");
  r3->add_option("--slice", slice, "Three units, e.g. 1,j1,j2")->capture_default_str();
  r3->add_option("--window", window, "lo,hi or x_lo,y_lo,z_lo,x_hi,y_hi,z_hi (default -1.5,1.5)");
  r3->add_option("--dims", dims, "Cells per axis N or XxYxZ")->capture_default_str();
  r3->add_flag("--no-prune", no_prune, "Iterate cells outside the discus bound too");
  r3->add_option("--out", out, "Output .mbv1 path; the point cloud goes next to it as .xyz")->required();
  common(r3);

  auto* ve = app.add_subcommand("verify", "Run property suites; exit 0 iff all checks pass");
  ve->add_option("--suite", suite, "algebra | roots | dynamics | slices | all")
      ->check(CLI::IsMember({"algebra", "roots", "dynamics", "slices", "all"}))
      ->capture_default_str();
  ve->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  ve->add_option("--out", out, "Also write the report here");
  ve->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto* es = app.add_subcommand("estimate", "Estimate a closed-form quantity numerically");
  es->add_option("--kind", kind, "real-extent | hyperbric-area | perplexbric-volume")
      ->check(CLI::IsMember({"real-extent", "hyperbric-area", "perplexbric-volume"}))
      ->capture_default_str();
  es->add_option("--p", p, "Degree p >= 2")->capture_default_str();
  es->add_option("--precision", precision, "Bisection tolerance or cell edge");
  es->add_option("--out", out, "Also write the report here");
  es->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto* rp = app.add_subcommand("replay", "Rerun a manifest and compare output digests");
  rp->add_option("manifest", manifest_path, "Path to a .manifest.json")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    const json radius = escape_radius ? json(*escape_radius) : json(nullptr);
    if (*r2) {
      const auto wh = parse_extent(res, 2);
      return run_and_record("render2d", {{"set", set}, {"p", p},
                                         {"window", window.empty() ? json{-1.5, 1.5, -1.5, 1.5} : parse_window(window, false)},
                                         {"width", wh[0]}, {"height", wh[1]}, {"max_iter", max_iter},
                                         {"escape_radius", radius}, {"out", out}, {"format", format}});
    }
    if (*r3) {
      return run_and_record("render3d", {{"slice", slice}, {"p", p},
                                         {"window", window.empty() ? json{-1.5, -1.5, -1.5, 1.5, 1.5, 1.5} : parse_window(window, true)},
                                         {"dims", parse_extent(dims, 3)}, {"max_iter", max_iter},
                                         {"escape_radius", radius}, {"prune", !no_prune}, {"out", out},
                                         {"format", format}});
    }
    if (*ve) return run_and_record("verify", {{"suite", suite}, {"seed", seed}, {"format", format}, {"out", out}});
    if (*es)
      return run_and_record("estimate", {{"kind", kind}, {"p", p},
                                         {"precision", precision ? json(*precision) : json(nullptr)},
                                         {"format", format}, {"out", out}});
    if (*rp) return replay(manifest_path);
  } catch (const std::exception& e) {
    std::cerr << "mbk: error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
