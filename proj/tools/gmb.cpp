// Command line front end.  All computation goes through the C API; this
// translation unit only parses flags, assembles the run manifest, and
// renders JSON or CSV.
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "giambelli/capi.h"

using json = nlohmann::json;

namespace {

struct Common {
  std::string z, zp, xi;
  double precision = 0.0;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string format = "json";
  std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--z", c.z, "parameter z (rational, decimal, or complex)");
  cmd->add_option("--zp", c.zp, "parameter z'");
  cmd->add_option("--xi", c.xi, "mixing parameter xi in (0,1)");
  cmd->add_option("--precision", c.precision, "series/quadrature target");
  cmd->add_option("--seed", c.seed, "random seed");
  cmd->add_option("--threads", c.threads, "worker cap (results unchanged)");
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", c.out, "write output to this file");
}

std::string iso_now() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
  return buf;
}

json make_manifest(const std::string& command, const Common& c,
                   const json& extra_params) {
  json params;
  if (!c.z.empty()) params["z"] = c.z;
  if (!c.zp.empty()) params["zp"] = c.zp;
  if (!c.xi.empty()) params["xi"] = c.xi;
  for (auto& [k, v] : extra_params.items()) params[k] = v;
  json m{{"command", command},
         {"parameters", params},
         {"seed", c.seed},
         {"threads", c.threads},
         {"version", gmb_version()},
         {"timestamp", iso_now()}};
  if (c.precision > 0) m["precision_target"] = c.precision;
  return m;
}

void render_csv(const json& doc, std::ostream& os) {
  const json& manifest = doc.at("manifest");
  os << "# command: " << manifest.at("command").get<std::string>() << "\n";
  os << "# parameters: " << manifest.at("parameters").dump() << "\n";
  if (doc.contains("rows")) {
    os << "x,y,value\n";
    for (const auto& r : doc.at("rows"))
      os << r.at("x").get<std::string>() << ','
         << r.at("y").get<std::string>() << ',' << r.at("value").dump()
         << "\n";
    return;
  }
  os << "key,value\n";
  for (auto& [k, v] : doc.items()) {
    if (k == "manifest" || v.is_structured()) continue;
    os << k << ',' << (v.is_string() ? v.get<std::string>() : v.dump())
       << "\n";
  }
}

int deliver(const char* raw, const std::string& command, const Common& c,
            const json& extra_params, int status) {
  json doc = raw ? json::parse(raw) : json::object();
  doc["manifest"] = make_manifest(command, c, extra_params);
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!c.out.empty()) {
    file.open(c.out);
    if (!file) {
      std::cerr << "cannot open output file: " << c.out << "\n";
      return 2;
    }
    os = &file;
  }
  if (c.format == "csv")
    render_csv(doc, *os);
  else
    *os << doc.dump(2) << "\n";
  return status;
}

int fail(gmb_ctx* ctx, int code) {
  std::cerr << json{{"error", gmb_last_error(ctx)}, {"code", code}}.dump()
            << "\n";
  return code;
}

int configure(gmb_ctx* ctx, const Common& c, bool need_params = true) {
  if (need_params || !c.z.empty()) {
    int rc = gmb_set_params(ctx, c.z.c_str(), c.zp.c_str(),
                            c.xi.empty() ? nullptr : c.xi.c_str());
    if (rc != GMB_OK) return rc;
  }
  if (c.precision > 0) {
    int rc = gmb_set_precision(ctx, c.precision, 0);
    if (rc != GMB_OK) return rc;
  }
  return gmb_set_threads(ctx, c.threads);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"z-measure and determinantal kernel calculator"};
  app.require_subcommand(1);

  gmb_ctx* ctx = gmb_ctx_new();
  int status = 0;
  // each leaf stores a closure to run after parsing succeeds
  std::function<int()> run;

  // ---- zmeasure -----------------------------------------------------------
  auto* zm = app.add_subcommand("zmeasure", "mixed z-measure computations");
  zm->require_subcommand(1);
  {
    static Common c;
    static std::string lambda;
    auto* sc = zm->add_subcommand("weight", "measure weight of a partition");
    add_common(sc, c);
    sc->add_option("--lambda", lambda, "partition, e.g. [3,1]")->required();
    sc->callback([&]() {
      run = [&]() {
        int rc = configure(ctx, c);
        if (rc != GMB_OK) return fail(ctx, rc);
        char* out = nullptr;
        rc = gmb_zmeasure_weight(ctx, lambda.c_str(), &out);
        if (rc != GMB_OK) return fail(ctx, rc);
        rc = deliver(out, "zmeasure weight", c, {{"lambda", lambda}}, rc);
        gmb_string_free(out);
        return rc;
      };
    });
  }
  {
    static Common c;
    static std::string mu;
    auto* sc = zm->add_subcommand("expect-fs",
                                  "average of the Frobenius-Schur function");
    add_common(sc, c);
    sc->add_option("--mu", mu, "partition, e.g. [2,1]")->required();
    sc->callback([&]() {
      run = [&]() {
        int rc = configure(ctx, c);
        if (rc != GMB_OK) return fail(ctx, rc);
        char* out = nullptr;
        rc = gmb_expect_fs(ctx, mu.c_str(), &out);
        if (rc != GMB_OK) return fail(ctx, rc);
        rc = deliver(out, "zmeasure expect-fs", c, {{"mu", mu}}, rc);
        gmb_string_free(out);
        return rc;
      };
    });
  }
  {
    static Common c;
    static int max_size = 8;
    auto* sc = zm->add_subcommand("giambelli-check",
                                  "averaged Giambelli identity residuals");
    add_common(sc, c);
    sc->add_option("--max-size", max_size, "largest |lambda| to test");
    sc->callback([&]() {
      run = [&]() {
        int rc = configure(ctx, c);
        if (rc != GMB_OK) return fail(ctx, rc);
        char* out = nullptr;
        rc = gmb_giambelli_check(ctx, max_size, &out);
        if (rc != GMB_OK) return fail(ctx, rc);
        rc = deliver(out, "zmeasure giambelli-check", c,
                     {{"max_size", max_size}}, rc);
        gmb_string_free(out);
        return rc;
      };
    });
  }
  {
    static Common c;
    static int count = 1;
    auto* sc = zm->add_subcommand("sample",
                                  "draw partitions from the mixed measure");
    add_common(sc, c);
    sc->add_option("--count", count, "number of samples");
    sc->callback([&]() {
      run = [&]() {
        int rc = configure(ctx, c);
        if (rc != GMB_OK) return fail(ctx, rc);
        char* out = nullptr;
        rc = gmb_sample(ctx, count, c.seed, &out);
        if (rc != GMB_OK) return fail(ctx, rc);
        rc = deliver(out, "zmeasure sample", c, {{"count", count}}, rc);
        gmb_string_free(out);
        return rc;
      };
    });
  }

  // ---- kernel -------------------------------------------------------------
  auto* kn = app.add_subcommand("kernel", "correlation kernel evaluation");
  kn->require_subcommand(1);
  {
    static Common c;
    static std::string x, y;
    static bool residue = false;
    auto* sc = kn->add_subcommand("eval", "kernel value at one point pair");
    add_common(sc, c);
    sc->add_option("--x", x, "lattice point, e.g. 1/2")->required();
    sc->add_option("--y", y, "lattice point")->required();
    sc->add_flag("--residue-form", residue, "use the residue-form kernel");
    sc->callback([&]() {
      run = [&]() {
        int rc = configure(ctx, c);
        if (rc != GMB_OK) return fail(ctx, rc);
        char* out = nullptr;
        rc = gmb_kernel_eval(ctx, x.c_str(), y.c_str(), residue, &out);
        if (rc != GMB_OK) return fail(ctx, rc);
        rc = deliver(out, "kernel eval", c, {{"x", x}, {"y", y}}, rc);
        gmb_string_free(out);
        return rc;
      };
    });
  }
  {
    static Common c;
    static std::string range = "7/2";
    static bool residue = false;
    auto* sc = kn->add_subcommand("grid",
                                  "kernel on the window [-range, range]");
    add_common(sc, c);
    sc->add_option("--range", range, "window half-width, e.g. 7/2");
    sc->add_flag("--residue-form", residue, "use the residue-form kernel");
    sc->callback([&]() {
      run = [&]() {
        int rc = configure(ctx, c);
        if (rc != GMB_OK) return fail(ctx, rc);
        char* out = nullptr;
        rc = gmb_kernel_grid(ctx, range.c_str(), residue, &out);
        if (rc != GMB_OK) return fail(ctx, rc);
        rc = deliver(out, "kernel grid", c, {{"range", range}}, rc);
        gmb_string_free(out);
        return rc;
      };
    });
  }
  {
    static Common c;
    static std::string points;
    static bool residue = false;
    auto* sc = kn->add_subcommand("rho", "correlation function determinant");
    add_common(sc, c);
    sc->add_option("--points", points, "e.g. [-1/2,1/2]")->required();
    sc->add_flag("--residue-form", residue, "use the residue-form kernel");
    sc->callback([&]() {
      run = [&]() {
        int rc = configure(ctx, c);
        if (rc != GMB_OK) return fail(ctx, rc);
        char* out = nullptr;
        rc = gmb_kernel_rho(ctx, points.c_str(), residue, &out);
        if (rc != GMB_OK) return fail(ctx, rc);
        rc = deliver(out, "kernel rho", c, {{"points", points}}, rc);
        gmb_string_free(out);
        return rc;
      };
    });
  }
  {
    static Common c;
    static std::string x;
    auto* sc = kn->add_subcommand("jump-check",
                                  "residue/jump condition residual");
    add_common(sc, c);
    sc->add_option("--x", x, "lattice point")->required();
    sc->callback([&]() {
      run = [&]() {
        int rc = configure(ctx, c);
        if (rc != GMB_OK) return fail(ctx, rc);
        char* out = nullptr;
        rc = gmb_jump_check(ctx, x.c_str(), &out);
        if (rc != GMB_OK) return fail(ctx, rc);
        rc = deliver(out, "kernel jump-check", c, {{"x", x}}, rc);
        gmb_string_free(out);
        return rc;
      };
    });
  }
  {
    static Common c;
    static double x = 0, y = 0;
    auto* sc = kn->add_subcommand("whittaker-eval",
                                  "continuous kernel at real points");
    add_common(sc, c);
    sc->add_option("--x", x, "real nonzero point")->required();
    sc->add_option("--y", y, "real nonzero point")->required();
    sc->callback([&]() {
      run = [&]() {
        int rc = configure(ctx, c);
        if (rc != GMB_OK) return fail(ctx, rc);
        char* out = nullptr;
        rc = gmb_whittaker_eval(ctx, x, y, &out);
        if (rc != GMB_OK) return fail(ctx, rc);
        rc = deliver(out, "kernel whittaker-eval", c, {{"x", x}, {"y", y}},
                     rc);
        gmb_string_free(out);
        return rc;
      };
    });
  }

  // ---- verify -------------------------------------------------------------
  {
    static Common c;
    static std::string suite;
    static int samples = 0;
    static double tol = 0.0;
    auto* sc = app.add_subcommand("verify", "run a verification suite");
    add_common(sc, c);
    sc->add_option("suite", suite, "giambelli | kernel-vs-oracle | ope | "
                                   "whittaker | sampler | all")
        ->required();
    sc->add_option("--samples", samples, "sampler suite sample count");
    sc->add_option("--tol", tol,
                   "recorded in the manifest; suite tolerances are fixed");
    sc->callback([&]() {
      run = [&]() {
        int rc = configure(ctx, c, false);
        if (rc != GMB_OK) return fail(ctx, rc);
        char* out = nullptr;
        rc = gmb_verify(ctx, suite.c_str(), c.seed, samples, &out);
        if (rc == GMB_BAD_INPUT) return fail(ctx, rc);
        json extra{{"suite", suite}};
        if (samples > 0) extra["samples"] = samples;
        if (tol > 0) extra["tol"] = tol;
        int drc = deliver(out, "verify", c, extra, rc);
        gmb_string_free(out);
        return drc;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    gmb_ctx_free(ctx);
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    gmb_ctx_free(ctx);
    return 2;
  }

  if (run) status = run();
  gmb_ctx_free(ctx);
  return status;
}
