#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <json.hpp>

#include "koebe/poly.hpp"

namespace koebe {

inline constexpr const char* kReportSchema = "koebe-poly/1";
inline constexpr std::size_t kDefaultMaxDegree = 64;

enum class Command {
  inverse,
  stability,
  norm,
  covering,
  inradius,
  membership,
  lemma3,
  distortion,
  sharpness,
  boundary,
};

const char* to_string(Command c) noexcept;
Command parse_command(const std::string& name);

/// One unit of CLI work. Optional fields that a command needs but the
/// caller left out are filled with defaults by `normalize`.
struct JobSpec {
  Command command = Command::norm;
  std::optional<Polynomial> polynomial;
  std::optional<double> radius;
  std::optional<Complex> w, z1, z2;
  std::optional<std::size_t> n;
  std::optional<int> grid;
  std::optional<double> margin;
  std::optional<std::string> kind;  ///< "lemma3" | "corollary3" for sharpness
  std::string format = "json";      ///< "json" | "csv"
};

/// {"coeffs": [[re, im], ...], "nominal_degree": n}; entries may also be
/// plain numbers or "a+bi" strings, and nominal_degree defaults to
/// coeffs.size() - 1.
Polynomial polynomial_from_json(const nlohmann::json& j);
nlohmann::json polynomial_to_json(const Polynomial& p);

JobSpec job_from_json(const nlohmann::json& j);
nlohmann::json job_to_json(const JobSpec& job);

/// Fills command defaults and validates every field (finite numbers,
/// grid >= 256, margin > 0, degree cap). Throws UsageError.
JobSpec normalize(JobSpec job, std::size_t max_degree = kDefaultMaxDegree);

struct JobOutcome {
  int exit_code = 0;  ///< 0 ok, 1 usage, 2 numeric, 3 precondition
  nlohmann::json report;
  std::string error;
};

/// Runs a job and builds its report. Library exceptions become exit codes;
/// verdicts such as "unstable" or "REFUTED" are data and exit 0. The report
/// embeds the normalized job, so running report["job"] again reproduces it.
JobOutcome run_job(const JobSpec& job, std::size_t max_degree = kDefaultMaxDegree);

/// Same, starting from the JSON form of a job.
JobOutcome run_job(const nlohmann::json& job, std::size_t max_degree = kDefaultMaxDegree);

/// (theta, Re q(R e^{i theta}), Im q(R e^{i theta})) rows for `boundary`.
std::string boundary_csv(const nlohmann::json& report);

}  // namespace koebe
