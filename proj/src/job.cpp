#include "koebe/job.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>

#include "koebe/complex_text.hpp"
#include "koebe/covering.hpp"
#include "koebe/distortion.hpp"
#include "koebe/error.hpp"
#include "koebe/rootfind.hpp"
#include "koebe/stability.hpp"

namespace koebe {

using nlohmann::json;

namespace {

constexpr std::array kCommandNames = {"inverse",    "stability", "norm",       "covering",
                                      "inradius",   "membership", "lemma3",    "distortion",
                                      "sharpness",  "boundary"};

json cplx(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, const char* what) {
  if (j.is_string()) return parse_complex(j.get<std::string>());
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw UsageError(std::string(what) + ": expected [re, im], a number or an \"a+bi\" string");
}

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) throw UsageError(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw UsageError(std::string(what) + " must be finite");
  return v;
}

template <typename T>
T require(const std::optional<T>& v, const char* what, Command c) {
  if (!v) throw UsageError(std::string(to_string(c)) + " needs " + what);
  return *v;
}

json samples_json(const std::vector<BoundarySample>& s) {
  json out = json::array();
  for (const auto& b : s) out.push_back(json::array({b.theta, b.modulus}));
  return out;
}

json inradius_json(const InradiusEstimate& est) {
  json j;
  const bool none = std::isinf(est.inradius);
  j["inradius"] = none ? json(nullptr) : json(est.inradius);
  j["no_boundary_samples"] = none;
  j["theta"] = est.theta;
  j["point"] = cplx(est.point);
  j["refined"] = est.refined;
  j["grid"] = est.grid;
  j["boundary_samples"] = samples_json(est.boundary);
  return j;
}

json certificate_json(const CoveringCertificate& c) {
  json j;
  j["radius"] = c.radius;
  j["bound"] = c.bound;
  const bool none = std::isinf(c.oracle_inradius);
  j["oracle_inradius"] = none ? json(nullptr) : json(c.oracle_inradius);
  j["grid_size"] = c.grid_size;
  j["grid_tolerance"] = c.grid_tolerance;
  j["spot_checks"] = c.spot_checks;
  j["spot_checks_inside"] = c.spot_checks_inside;
  j["uncovered_boundary_samples"] = samples_json(c.uncovered_boundary_samples);
  j["status"] = to_string(c.status);
  return j;
}

json coefficient_bound_json(const CoefficientBoundReport& rep) {
  json terms = json::array();
  for (const auto& t : rep.terms)
    terms.push_back({{"k", t.k},
                     {"coefficient", t.coefficient},
                     {"bound", t.bound},
                     {"slack", t.slack},
                     {"pass", t.pass}});
  return {{"membership", to_string(rep.membership)}, {"terms", terms}, {"pass", rep.pass}};
}

json omission_json(const OmissionReport& r) {
  return {{"verdict", to_string(r.verdict)},
          {"root_side", to_string(r.root_side)},
          {"grid_side", to_string(r.grid_side)},
          {"winding", r.scan.winding},
          {"boundary_min_modulus", r.scan.min_modulus},
          {"floor", r.floor}};
}

json sides_json(const EquivalenceSides& s) {
  return {{"agreement", to_string(s.agreement)},
          {"lhs", to_string(s.lhs)},
          {"rhs", to_string(s.rhs)}};
}

json stability_result(const Polynomial& chi, double margin, int grid) {
  const auto v = is_schur_stable(chi, margin, grid);
  json j;
  j["verdict"] = to_string(v.verdict);
  j["root"] = v.root ? cplx(*v.root) : json(nullptr);
  j["boundary_min_modulus"] = v.boundary_min_modulus ? json(*v.boundary_min_modulus) : json(nullptr);
  j["omitted_zero_of_n_inverse"] = omission_json(zero_omitted_closed_disk(n_inverse(chi), margin, grid));
  const auto eq = lemma_equivalence_check(chi, margin, grid);
  j["equivalence"] = {{"stability", sides_json(eq.stability)},
                      {"omission", sides_json(eq.omission)}};
  return j;
}

json witness_json(const DistortionWitness& w) {
  return {{"z1", cplx(w.z1)},
          {"z2", cplx(w.z2)},
          {"zeta", cplx(w.zeta)},
          {"degree", w.degree},
          {"residual", w.residual},
          {"lhs", w.lhs},
          {"rhs", w.rhs},
          {"slack", w.slack},
          {"w", cplx(w.w)},
          {"R", w.radius},
          {"eta", cplx(w.eta)},
          {"branch", to_string(w.branch)},
          {"residual_ok", w.residual_ok},
          {"slack_ok", w.slack_ok},
          {"eta_ok", w.eta_ok},
          {"holds", w.holds()}};
}

json boundary_samples(const Polynomial& q, double radius, int grid) {
  json rows = json::array();
  for (int j = 0; j < grid; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / grid;
    const Complex v = q(std::polar(radius, theta));
    rows.push_back(json::array({theta, v.real(), v.imag()}));
  }
  return rows;
}

json execute(const JobSpec& job, json& tolerances) {
  const Command c = job.command;
  const double margin = job.margin.value_or(kDefaultMargin);
  json result;
  switch (c) {
    case Command::inverse: {
      result["polynomial"] = polynomial_to_json(n_inverse(*job.polynomial));
      break;
    }
    case Command::norm: {
      result["norm"] = norm_nq(*job.polynomial);
      result["nominal_degree"] = job.polynomial->nominal_degree();
      break;
    }
    case Command::stability: {
      tolerances["margin"] = margin;
      tolerances["boundary_grid"] = *job.grid;
      result = stability_result(*job.polynomial, margin, *job.grid);
      break;
    }
    case Command::membership: {
      tolerances["margin"] = margin;
      const auto m = membership(*job.polynomial, *job.w, Disk({}, *job.radius), margin);
      result["verdict"] = to_string(m.verdict);
      result["witness_preimage"] = m.witness_preimage ? cplx(*m.witness_preimage) : json(nullptr);
      result["residual"] = m.residual;
      break;
    }
    case Command::lemma3: {
      tolerances["margin"] = margin;
      tolerances["slack"] = "-1e-10 * C(n,k) |w|";
      result = coefficient_bound_json(lemma3_bound_check(*job.polynomial, *job.w, margin));
      break;
    }
    case Command::covering: {
      CoveringOptions opt;
      opt.grid = *job.grid;
      opt.margin = margin;
      tolerances["margin"] = margin;
      tolerances["grid"] = opt.grid;
      tolerances["spot_check_shrink"] = opt.shrink;
      tolerances["grid_tolerance_relative"] = opt.grid_tolerance;
      result = certificate_json(covering_lower_bound(*job.polynomial, *job.radius, opt));
      break;
    }
    case Command::inradius: {
      tolerances["margin"] = margin;
      tolerances["grid"] = *job.grid;
      result = inradius_json(inradius_oracle(*job.polynomial, *job.radius, *job.grid, margin));
      break;
    }
    case Command::distortion: {
      tolerances["residual"] = "1e-8 (1 + |p(z2)|)";
      tolerances["slack"] = "-1e-9 (1 + lhs)";
      tolerances["eta"] = "R (1 + 1e-9)";
      result = witness_json(distortion_witness(*job.polynomial, *job.z1, *job.z2));
      break;
    }
    case Command::sharpness: {
      tolerances["margin"] = margin;
      if (*job.kind == "lemma3") {
        const auto q = extremal_lemma3(*job.n, *job.w);
        const auto rep = lemma3_bound_check(q, *job.w, margin);
        double worst = 0.0;
        for (const auto& t : rep.terms) worst = std::max(worst, std::abs(t.slack) / t.bound);
        tolerances["equality_relative"] = 1e-9;
        result["polynomial"] = polynomial_to_json(q);
        result["lemma3"] = coefficient_bound_json(rep);
        result["max_relative_gap"] = worst;
        result["sharp"] = rep.pass && worst <= 1e-9;
      } else {
        const double r = *job.radius;
        const auto q = extremal_corollary3(*job.n, r);
        CoveringOptions opt;
        opt.grid = *job.grid;
        opt.margin = margin;
        const auto cert = covering_lower_bound(q, r, opt);
        const double target = r / static_cast<double>(*job.n);
        const double gap = std::abs(cert.oracle_inradius - target);
        tolerances["grid"] = opt.grid;
        tolerances["sharpness_relative"] = 1e-3;
        result["polynomial"] = polynomial_to_json(q);
        result["certificate"] = certificate_json(cert);
        result["target"] = target;
        result["oracle_gap"] = gap;
        result["sharp"] = cert.status == CertificateStatus::verified && gap <= 1e-3 * target;
      }
      break;
    }
    case Command::boundary: {
      tolerances["grid"] = *job.grid;
      result["samples"] = boundary_samples(*job.polynomial, *job.radius, *job.grid);
      break;
    }
  }
  return result;
}

}  // namespace

const char* to_string(Command c) noexcept { return kCommandNames[static_cast<std::size_t>(c)]; }

Command parse_command(const std::string& name) {
  for (std::size_t i = 0; i < kCommandNames.size(); ++i)
    if (name == kCommandNames[i]) return static_cast<Command>(i);
  throw UsageError("unknown command '" + name + "'");
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw UsageError("polynomial must be an object with a \"coeffs\" array");
  const auto& arr = j["coeffs"];
  if (arr.empty()) throw UsageError("polynomial needs at least one coefficient");
  std::vector<Complex> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& c : arr) coeffs.push_back(complex_from_json(c, "coefficient"));
  for (const auto& c : coeffs)
    if (!is_finite(c)) throw UsageError("coefficients must be finite");
  if (!j.contains("nominal_degree") || j["nominal_degree"].is_null())
    return Polynomial(std::move(coeffs));
  const auto& nd = j["nominal_degree"];
  if (!nd.is_number_unsigned() && !(nd.is_number_integer() && nd.get<long long>() >= 0))
    throw UsageError("nominal_degree must be a non-negative integer");
  const auto n = nd.get<std::size_t>();
  if (coeffs.size() > n + 1)
    throw UsageError("more coefficients than nominal_degree + 1");
  return Polynomial(std::move(coeffs), n);
}

json polynomial_to_json(const Polynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(cplx(c));
  return {{"coeffs", coeffs}, {"nominal_degree", p.nominal_degree()}};
}

JobSpec job_from_json(const json& j) {
  if (!j.is_object()) throw UsageError("job must be a JSON object");
  if (!j.contains("command") || !j["command"].is_string())
    throw UsageError("job needs a \"command\" string");
  JobSpec job;
  job.command = parse_command(j["command"].get<std::string>());
  if (j.contains("polynomial")) job.polynomial = polynomial_from_json(j["polynomial"]);
  if (j.contains("radius")) job.radius = finite_number(j["radius"], "radius");
  if (j.contains("w")) job.w = complex_from_json(j["w"], "w");
  if (j.contains("z1")) job.z1 = complex_from_json(j["z1"], "z1");
  if (j.contains("z2")) job.z2 = complex_from_json(j["z2"], "z2");
  if (j.contains("n")) {
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0)
      throw UsageError("n must be a non-negative integer");
    job.n = j["n"].get<std::size_t>();
  }
  if (j.contains("grid")) {
    if (!j["grid"].is_number_integer()) throw UsageError("grid must be an integer");
    job.grid = j["grid"].get<int>();
  }
  if (j.contains("margin")) job.margin = finite_number(j["margin"], "margin");
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) throw UsageError("kind must be a string");
    job.kind = j["kind"].get<std::string>();
  }
  if (j.contains("format")) {
    if (!j["format"].is_string()) throw UsageError("format must be a string");
    job.format = j["format"].get<std::string>();
  }
  return job;
}

json job_to_json(const JobSpec& job) {
  json j;
  j["command"] = to_string(job.command);
  if (job.polynomial) j["polynomial"] = polynomial_to_json(*job.polynomial);
  if (job.radius) j["radius"] = *job.radius;
  if (job.w) j["w"] = cplx(*job.w);
  if (job.z1) j["z1"] = cplx(*job.z1);
  if (job.z2) j["z2"] = cplx(*job.z2);
  if (job.n) j["n"] = *job.n;
  if (job.grid) j["grid"] = *job.grid;
  if (job.margin) j["margin"] = *job.margin;
  if (job.kind) j["kind"] = *job.kind;
  j["format"] = job.format;
  return j;
}

JobSpec normalize(JobSpec job, std::size_t max_degree) {
  const Command c = job.command;
  if (c != Command::sharpness) {
    require(job.polynomial, "a polynomial (--input)", c);
    if (job.polynomial->nominal_degree() > max_degree)
      throw UsageError("nominal degree " + std::to_string(job.polynomial->nominal_degree()) +
                       " exceeds the cap of " + std::to_string(max_degree));
  }

  const bool uses_radius = c == Command::covering || c == Command::inradius ||
                           c == Command::membership || c == Command::boundary ||
                           (c == Command::sharpness && job.kind == "corollary3");
  const bool uses_margin = c == Command::stability || c == Command::covering ||
                           c == Command::inradius || c == Command::membership ||
                           c == Command::lemma3 || c == Command::sharpness;
  if (uses_radius && !job.radius) job.radius = 1.0;
  if (uses_margin && !job.margin) job.margin = kDefaultMargin;
  if (!job.grid) {
    if (c == Command::stability || c == Command::boundary)
      job.grid = kDefaultBoundaryGrid;
    else if (c == Command::covering || c == Command::inradius ||
             (c == Command::sharpness && job.kind == "corollary3"))
      job.grid = kDefaultOracleGrid;
  }

  if (job.radius && !(*job.radius > 0.0)) throw UsageError("radius must be > 0");
  if (job.margin && !(*job.margin > 0.0)) throw UsageError("margin must be > 0");
  if (job.grid && *job.grid < 256) throw UsageError("grid must be >= 256");

  switch (c) {
    case Command::membership:
    case Command::lemma3:
      require(job.w, "--w", c);
      break;
    case Command::distortion:
      require(job.z1, "--z1", c);
      require(job.z2, "--z2", c);
      break;
    case Command::sharpness: {
      const auto kind = require(job.kind, "--kind", c);
      if (kind != "lemma3" && kind != "corollary3")
        throw UsageError("--kind must be lemma3 or corollary3");
      const auto n = require(job.n, "--n", c);
      if (n < 1 || n > max_degree) throw UsageError("--n must be in [1, degree cap]");
      if (kind == "lemma3") require(job.w, "--w", c);
      break;
    }
    default:
      break;
  }
  if (job.format != "json" && job.format != "csv")
    throw UsageError("--format must be json or csv");
  if (job.format == "csv" && c != Command::boundary)
    throw UsageError("csv output is only available for boundary");
  return job;
}

JobOutcome run_job(const JobSpec& raw, std::size_t max_degree) {
  JobOutcome out;
  try {
    const JobSpec job = normalize(raw, max_degree);
    json tolerances = json::object();
    json result = execute(job, tolerances);
    out.report = {{"schema", kReportSchema},
                  {"command", to_string(job.command)},
                  {"job", job_to_json(job)},
                  {"tolerances", tolerances},
                  {"result", result}};
  } catch (const UsageError& e) {
    out = {1, nullptr, e.what()};
  } catch (const NumericError& e) {
    out = {2, nullptr, e.what()};
  } catch (const PreconditionError& e) {
    out = {3, nullptr, e.what()};
  } catch (const std::exception& e) {
    out = {2, nullptr, e.what()};
  }
  return out;
}

JobOutcome run_job(const json& j, std::size_t max_degree) {
  JobSpec job;
  try {
    job = job_from_json(j);
  } catch (const Error& e) {
    return {1, nullptr, e.what()};
  } catch (const json::exception& e) {
    return {1, nullptr, e.what()};
  }
  return run_job(job, max_degree);
}

std::string boundary_csv(const json& report) {
  std::string out = "theta,re,im\n";
  char buf[64];
  for (const auto& row : report.at("result").at("samples")) {
    for (std::size_t i = 0; i < 3; ++i) {
      const auto r = std::to_chars(buf, buf + sizeof buf, row[i].get<double>());
      out.append(buf, r.ptr);
      out += i < 2 ? ',' : '\n';
    }
  }
  return out;
}

}  // namespace koebe
