// koebe: command-line front end for the covering/distortion toolkit.
//
//   koebe norm --input poly.json
//   koebe stability --input - < poly.json
//   koebe boundary --input poly.json --radius 2 --format csv --out curve.csv
//   koebe --jobs jobs.json --out reports.json

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "koebe/complex_text.hpp"
#include "koebe/error.hpp"
#include "koebe/job.hpp"

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw koebe::UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw koebe::UsageError(where + ": " + e.what());
  }
}

void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw koebe::UsageError("cannot write '" + path + "'");
  out << text;
}

std::string render(const koebe::JobOutcome& r) {
  if (r.report.value("command", "") == "boundary" &&
      r.report.at("job").value("format", "json") == "csv")
    return koebe::boundary_csv(r.report);
  return r.report.dump(2) + "\n";
}

int run_batch(const std::string& jobs_path, const std::string& out_path,
              std::size_t max_degree) {
  json jobs = parse_json(slurp(jobs_path), jobs_path);
  if (jobs.is_object()) jobs = json::array({jobs});
  if (!jobs.is_array()) throw koebe::UsageError("--jobs file must hold a job or a list of jobs");
  json reports = json::array();
  int status = 0;
  for (const auto& j : jobs) {
    // A report may be fed back in as a job: its "job" member is the job.
    const json& spec = j.contains("schema") && j.contains("job") ? j["job"] : j;
    auto r = koebe::run_job(spec, max_degree);
    if (r.exit_code != 0) {
      if (status == 0) status = r.exit_code;
      reports.push_back({{"schema", koebe::kReportSchema},
                         {"job", spec},
                         {"error", {{"exit_code", r.exit_code}, {"message", r.error}}}});
      std::cerr << "koebe: " << r.error << "\n";
    } else {
      reports.push_back(std::move(r.report));
    }
  }
  emit(out_path, reports.dump(2) + "\n");
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covering and distortion certificates for complex polynomials"};
  std::string command, input, w, z1, z2, kind, format = "json", out = "-", jobs;
  double radius = 1.0, margin = 1e-9;
  int grid = 0;
  std::size_t n = 0, max_degree = koebe::kDefaultMaxDegree;

  app.add_option("command", command,
                 "inverse|stability|norm|covering|inradius|membership|lemma3|"
                 "distortion|sharpness|boundary");
  auto* o_input = app.add_option("--input", input, "polynomial JSON file, or - for stdin");
  auto* o_radius = app.add_option("--radius", radius, "disk radius R");
  auto* o_w = app.add_option("--w", w, "complex value a+bi");
  auto* o_z1 = app.add_option("--z1", z1, "complex point a+bi");
  auto* o_z2 = app.add_option("--z2", z2, "complex point a+bi");
  auto* o_grid = app.add_option("--grid", grid, "sample count (>= 256)");
  auto* o_margin = app.add_option("--margin", margin, "classification band width (> 0)");
  auto* o_n = app.add_option("--n", n, "degree for sharpness");
  auto* o_kind = app.add_option("--kind", kind, "lemma3|corollary3 for sharpness");
  app.add_option("--out", out, "output file, or - for stdout");
  app.add_option("--format", format, "json|csv");
  auto* o_jobs = app.add_option("--jobs", jobs, "JSON file holding a list of jobs");
  app.add_option("--max-degree", max_degree, "reject polynomials above this nominal degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*o_jobs) return run_batch(jobs, out, max_degree);
    if (command.empty()) throw koebe::UsageError("missing command (or --jobs)");

    json job;
    job["command"] = command;
    if (*o_input) job["polynomial"] = parse_json(slurp(input), input);
    if (*o_radius) job["radius"] = radius;
    if (*o_w) job["w"] = w;
    if (*o_z1) job["z1"] = z1;
    if (*o_z2) job["z2"] = z2;
    if (*o_grid) job["grid"] = grid;
    if (*o_margin) job["margin"] = margin;
    if (*o_n) job["n"] = n;
    if (*o_kind) job["kind"] = kind;
    job["format"] = format;

    const auto r = koebe::run_job(job, max_degree);
    if (r.exit_code != 0) {
      std::cerr << "koebe: " << r.error << "\n";
      return r.exit_code;
    }
    emit(out, render(r));
    return 0;
  } catch (const koebe::UsageError& e) {
    std::cerr << "koebe: " << e.what() << "\n";
    return 1;
  }
}
