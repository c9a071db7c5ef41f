#include "mbk/commands.hpp"

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mbk/dynamics.hpp"
#include "mbk/estimate.hpp"
#include "mbk/render.hpp"
#include "mbk/report.hpp"
#include "mbk/slices.hpp"
#include "mbk/verify.hpp"

namespace mbk::cli {

namespace {

using json = nlohmann::ordered_json;
namespace dyn = mbk::dynamics;

json defaults(const std::string& command) {
  if (command == "render2d")
    return {{"set", "multibrot"}, {"p", 3}, {"window", {-1.5, 1.5, -1.5, 1.5}}, {"width", 1000},
            {"height", 1000}, {"max_iter", dyn::kDefaultMaxIter}, {"escape_radius", nullptr},
            {"out", ""}, {"format", "text"}};
  if (command == "render3d")
    return {{"slice", "1,i1,i2"}, {"p", 3}, {"window", {-1.5, -1.5, -1.5, 1.5, 1.5, 1.5}},
            {"dims", {64, 64, 64}}, {"max_iter", dyn::kDefaultMaxIter}, {"escape_radius", nullptr},
            {"prune", true}, {"out", ""}, {"format", "text"}};
  if (command == "verify") return {{"suite", "all"}, {"seed", 1}, {"format", "text"}, {"out", ""}};
  if (command == "estimate")
    return {{"kind", "real-extent"}, {"p", 3}, {"precision", nullptr}, {"format", "text"}, {"out", ""}};
  throw std::invalid_argument("unknown command '" + command + "'");
}

dyn::IterationParams iteration_params(const json& j) {
  auto params = dyn::IterationParams::for_degree(j.at("p").get<int>(), j.at("max_iter").get<int>());
  if (!j.at("escape_radius").is_null()) params.escape_radius = j.at("escape_radius").get<double>();
  params.validate_for_membership();
  return params;
}

std::string require_out(const json& j) {
  const std::string out = j.at("out").get<std::string>();
  if (out.empty()) throw std::invalid_argument("--out is required");
  return out;
}

void write_file(const std::string& path, std::string_view bytes) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + path);
  f.write(bytes.data(), std::streamsize(bytes.size()));
  f.close();
  if (!f) throw std::runtime_error("cannot write " + path);
}

std::string value_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string summary_text(const json& j) {
  std::string out;
  for (const auto& [key, value] : j.items()) out += report::kv(key, value_text(value)) + "\n";
  return out;
}

std::string render_summary(const json& summary, const std::string& format) {
  if (format == "json") return summary.dump(2) + "\n";
  return summary_text(summary);
}

// Digest of what goes to stdout, then the text itself.
Outcome finish(Outcome o) {
  o.outputs.push_back({"stdout", "", manifest::sha256_hex(o.text)});
  return o;
}

}  // namespace

json normalize(const std::string& command, json params) {
  json out = defaults(command);
  if (params.is_null()) params = json::object();
  if (!params.is_object()) throw std::invalid_argument("parameters must be a JSON object");
  for (const auto& [key, value] : params.items()) {
    if (!out.contains(key)) throw std::invalid_argument("unknown parameter '" + key + "' for " + command);
    out[key] = value;
  }
  const std::string format = out.at("format").get<std::string>();
  if (format != "text" && format != "json") throw std::invalid_argument("--format must be text or json");
  return out;
}

Outcome render2d(const json& j) {
  const auto set = render::parse_plane_set(j.at("set").get<std::string>());
  const auto w = j.at("window").get<std::vector<double>>();
  if (w.size() != 4) throw std::invalid_argument("2D window needs 4 numbers: x_lo,x_hi,y_lo,y_hi");
  const render::Window2 window{w[0], w[1], w[2], w[3]};
  const auto params = iteration_params(j);
  const std::string out = require_out(j);

  const auto raster = render::render2d(set, window, j.at("width").get<int>(), j.at("height").get<int>(), params);
  const std::string pgm = render::encode_pgm(raster);
  write_file(out, pgm);

  std::size_t members = 0;
  for (std::uint32_t c : raster.counts) members += c == std::uint32_t(params.max_iter);
  json s;
  s["command"] = "render2d";
  s["set"] = render::to_string(set);
  s["p"] = params.p;
  s["width"] = raster.width;
  s["height"] = raster.height;
  s["max_iter"] = params.max_iter;
  s["escape_radius"] = params.escape_radius;
  s["member_pixels"] = members;
  s["image_sha256"] = manifest::sha256_hex(pgm);
  Outcome o{0, render_summary(s, j.at("format").get<std::string>()), {}};
  o.outputs.push_back({"image", out, manifest::sha256_hex(pgm)});
  return finish(std::move(o));
}

Outcome render3d(const json& j) {
  const SliceSpec spec = parse_slice(j.at("slice").get<std::string>());
  const auto w = j.at("window").get<std::vector<double>>();
  if (w.size() != 6) throw std::invalid_argument("3D window needs 6 numbers: lo x,y,z then hi x,y,z");
  const slices::Window3 window{{w[0], w[1], w[2]}, {w[3], w[4], w[5]}};
  const auto d = j.at("dims").get<std::vector<int>>();
  if (d.size() != 3) throw std::invalid_argument("dims needs 3 integers");
  const auto params = iteration_params(j);
  const std::string out = require_out(j);

  slices::SampleOptions opts;
  opts.prune_outside_discus = j.at("prune").get<bool>();
  const auto grid = slices::sample_slice(spec, window, {d[0], d[1], d[2]}, params, opts);

  std::ostringstream voxels, points;
  slices::write_mbv1(voxels, grid);
  slices::write_point_cloud(points, grid);
  std::filesystem::path cloud(out);
  cloud.replace_extension(".xyz");
  if (cloud == std::filesystem::path(out)) cloud += ".xyz";
  write_file(out, voxels.str());
  write_file(cloud.string(), points.str());

  json s;
  s["command"] = "render3d";
  s["slice"] = spec.to_string();
  s["p"] = params.p;
  s["dims"] = d;
  s["max_iter"] = params.max_iter;
  s["escape_radius"] = params.escape_radius;
  s["member_cells"] = grid.member_count();
  s["cell_volume"] = grid.cell_volume();
  s["volume"] = grid.member_volume();
  s["voxels_sha256"] = manifest::sha256_hex(voxels.str());
  s["points_sha256"] = manifest::sha256_hex(points.str());
  Outcome o{0, render_summary(s, j.at("format").get<std::string>()), {}};
  o.outputs.push_back({"voxels", out, manifest::sha256_hex(voxels.str())});
  o.outputs.push_back({"points", cloud.string(), manifest::sha256_hex(points.str())});
  return finish(std::move(o));
}

Outcome verify(const json& j, const UnitTable& table) {
  const auto r = verify::run_suite(j.at("suite").get<std::string>(), j.at("seed").get<std::uint64_t>(), table);
  const std::string text = j.at("format").get<std::string>() == "json" ? r.to_json().dump(2) + "\n" : r.to_text();
  Outcome o{r.passed() ? 0 : 1, text, {}};
  if (const std::string out = j.at("out").get<std::string>(); !out.empty()) {
    write_file(out, text);
    o.outputs.push_back({"report", out, manifest::sha256_hex(text)});
  }
  return finish(std::move(o));
}

Outcome estimate(const json& j) {
  const auto kind = estimate::parse_kind(j.at("kind").get<std::string>());
  std::optional<double> precision;
  if (!j.at("precision").is_null()) precision = j.at("precision").get<double>();
  const json s = estimate::run(kind, j.at("p").get<int>(), precision);
  const std::string text = render_summary(s, j.at("format").get<std::string>());
  Outcome o{0, text, {}};
  if (const std::string out = j.at("out").get<std::string>(); !out.empty()) {
    write_file(out, text);
    o.outputs.push_back({"report", out, manifest::sha256_hex(text)});
  }
  return finish(std::move(o));
}

Outcome run(const std::string& command, const json& params) {
  const json j = normalize(command, params);
  try {
    if (command == "render2d") return render2d(j);
    if (command == "render3d") return render3d(j);
    if (command == "verify") return verify(j);
    return estimate(j);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad parameter: ") + e.what());
  }
}

Recorded run_recorded(const std::string& command, const json& params) {
  const json j = normalize(command, params);
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o = run(command, j);
  Recorded r{std::move(o), {}};
  r.manifest.command = command;
  r.manifest.parameters = j;
  r.manifest.seed = j.contains("seed") ? j.at("seed").get<std::uint64_t>() : 0;
  r.manifest.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.manifest.outputs = r.outcome.outputs;
  return r;
}

Outcome replay(const manifest::RunManifest& m, const std::filesystem::path& scratch) {
  json params = m.parameters;
  if (params.contains("out") && params.at("out").is_string() && !params.at("out").get<std::string>().empty()) {
    const std::filesystem::path orig(params.at("out").get<std::string>());
    params["out"] = (scratch / orig.filename()).string();
  }
  const Outcome fresh = run(m.command, params);

  bool all = true;
  std::string text = report::kv("command", m.command) + "\n";
  std::set<std::string> seen;
  for (const auto& want : m.outputs) {
    seen.insert(want.role);
    std::string got;
    for (const auto& o : fresh.outputs)
      if (o.role == want.role) got = o.sha256;
    const bool match = !got.empty() && got == want.sha256;
    all = all && match;
    text += report::kv("role", want.role) + " " + report::kv("recorded", want.sha256) + " " +
            report::kv("replayed", got.empty() ? "missing" : got) + " " +
            report::kv("match", match ? "yes" : "no") + "\n";
  }
  for (const auto& o : fresh.outputs)
    if (!seen.count(o.role)) {
      all = false;
      text += report::kv("role", o.role) + " " + report::kv("recorded", "missing") + " " +
              report::kv("replayed", o.sha256) + " match=no\n";
    }
  text += report::kv("result", all ? "reproduced" : "mismatch") + "\n";
  return {all ? 0 : 1, text, {}};
}

}  // namespace mbk::cli
