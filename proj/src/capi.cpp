#include "giambelli/capi.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include <json.hpp>

#include "giambelli/kernels.hpp"
#include "giambelli/verify.hpp"
#include "giambelli/zmeasure.hpp"

using json = nlohmann::json;
using namespace giambelli;

struct gmb_ctx {
  bool has_z = false;
  bool has_xi = false;
  ZParams zp;
  MixedZParams mp;  // valid when has_xi
  std::string z_str, zp_str, xi_str;
  PrecisionPolicy pp;
  int threads = 1;
  std::string err;
};

namespace {

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void emit(const json& j, char** out) {
  if (out) *out = dup_string(j.dump());
}

template <class F>
int wrap(gmb_ctx* ctx, F&& fn) {
  if (!ctx) return GMB_BAD_INPUT;
  ctx->err.clear();
  try {
    return fn();
  } catch (const std::exception& e) {
    ctx->err = e.what();
    return GMB_BAD_INPUT;
  } catch (...) {
    ctx->err = "unknown error";
    return GMB_BAD_INPUT;
  }
}

const ZParams& need_z(gmb_ctx* ctx) {
  if (!ctx->has_z) throw std::invalid_argument("parameters z, z' not set");
  return ctx->zp;
}

const MixedZParams& need_mixed(gmb_ctx* ctx) {
  need_z(ctx);
  if (!ctx->has_xi) throw std::invalid_argument("parameter xi not set");
  return ctx->mp;
}

Partition parse_partition(const char* s) {
  if (!s) throw std::invalid_argument("missing partition");
  std::string t(s);
  std::vector<int> parts;
  std::string cur;
  for (char c : t) {
    if (c == '[' || c == ']' || c == ' ') continue;
    if (c == ',') {
      if (!cur.empty()) parts.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(std::stoi(cur));
  return Partition::from_parts(parts);
}

json partition_json(const Partition& p) {
  json a = json::array();
  for (int i = 1; i <= p.length(); ++i) a.push_back(p.part(i));
  return a;
}

int lattice_point(const char* s) {
  if (!s) throw std::invalid_argument("missing lattice point");
  int x2 = parse_half(s);
  if (x2 % 2 == 0)
    throw std::invalid_argument("lattice points are half-integers k/2, k odd");
  return x2;
}

std::vector<int> parse_points(const char* s) {
  if (!s) throw std::invalid_argument("missing point list");
  std::string t(s);
  std::vector<int> pts;
  std::string cur;
  auto flush = [&]() {
    if (!cur.empty()) pts.push_back(lattice_point(cur.c_str()));
    cur.clear();
  };
  for (char c : t) {
    if (c == '[' || c == ']' || c == ' ') continue;
    if (c == ',')
      flush();
    else
      cur += c;
  }
  flush();
  if (pts.empty()) throw std::invalid_argument("empty point list");
  return pts;
}

json precision_json(const PrecisionPolicy& pp) {
  return json{{"target", pp.target}, {"max_terms", pp.max_terms}};
}

json suite_json(const SuiteReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"residual", c.residual},
                      {"detail", c.detail}});
  return json{{"suite", rep.suite}, {"pass", rep.pass()}, {"checks", checks}};
}

}  // namespace

extern "C" {

gmb_ctx* gmb_ctx_new(void) { return new gmb_ctx; }

void gmb_ctx_free(gmb_ctx* ctx) { delete ctx; }

const char* gmb_last_error(gmb_ctx* ctx) {
  return ctx ? ctx->err.c_str() : "null context";
}

void gmb_string_free(char* s) { std::free(s); }

const char* gmb_version(void) { return "0.1.0"; }

int gmb_set_params(gmb_ctx* ctx, const char* z, const char* zp,
                   const char* xi) {
  return wrap(ctx, [&]() {
    if (!z || !zp) throw std::invalid_argument("z and z' are required");
    ZParams base = ZParams::parse(z, zp);
    if (xi && *xi) {
      ctx->mp = MixedZParams::parse(z, zp, xi);
      ctx->has_xi = true;
      ctx->xi_str = xi;
    } else {
      ctx->has_xi = false;
      ctx->xi_str.clear();
    }
    ctx->zp = base;
    ctx->has_z = true;
    ctx->z_str = z;
    ctx->zp_str = zp;
    return GMB_OK;
  });
}

int gmb_set_precision(gmb_ctx* ctx, double target, int max_terms) {
  return wrap(ctx, [&]() {
    if (!(target > 0) || target > 1e-3)
      throw std::invalid_argument("precision target must lie in (0, 1e-3]");
    ctx->pp.target = target;
    ctx->pp.quad_tol = target;
    if (max_terms > 0) ctx->pp.max_terms = max_terms;
    return GMB_OK;
  });
}

int gmb_set_threads(gmb_ctx* ctx, int threads) {
  return wrap(ctx, [&]() {
    if (threads < 1) throw std::invalid_argument("threads must be >= 1");
    ctx->threads = threads;
    return GMB_OK;
  });
}

int gmb_zmeasure_weight(gmb_ctx* ctx, const char* lambda, char** out) {
  return wrap(ctx, [&]() {
    const ZParams& zp = need_z(ctx);
    Partition lam = parse_partition(lambda);
    json j{{"lambda", partition_json(lam)},
           {"n", lam.size()},
           {"precision", precision_json(ctx->pp)}};
    if (zp.exact)
      j["weight_n"] = to_string(weight_n_exact(lam, zp));
    j["weight_n_float"] = weight_n(lam, zp);
    if (ctx->has_xi) {
      j["weight_mixed"] = weight_mixed(lam, ctx->mp);
      if (ctx->mp.exact())
        j["weight_mixed_over_empty"] =
            to_string(weight_mixed_ratio_exact(lam, ctx->mp));
    }
    emit(j, out);
    return GMB_OK;
  });
}

int gmb_expect_fs(gmb_ctx* ctx, const char* mu, char** out) {
  return wrap(ctx, [&]() {
    const MixedZParams& mp = need_mixed(ctx);
    Partition m = parse_partition(mu);
    json j{{"mu", partition_json(m)},
           {"precision", precision_json(ctx->pp)}};
    Complex v = expect_fs(m, mp);
    if (mp.exact()) j["expectation"] = to_string(expect_fs_exact(m, mp));
    j["expectation_float"] = v.real();
    if (std::abs(v.imag()) > 1e-13) j["expectation_imag"] = v.imag();
    emit(j, out);
    return GMB_OK;
  });
}

int gmb_giambelli_check(gmb_ctx* ctx, int max_size, char** out) {
  return wrap(ctx, [&]() {
    const MixedZParams& mp = need_mixed(ctx);
    if (max_size < 1 || max_size > 12)
      throw std::invalid_argument("max_size must lie in [1, 12]");
    json j{{"max_size", max_size}, {"exact", mp.exact()}};
    if (mp.exact()) {
      Rational worst(0);
      for (int n = 1; n <= max_size; ++n)
        for (const Partition& lam : enumerate_partitions(n))
          worst = std::max(worst, giambelli_expectation_check_exact(lam, mp));
      j["max_residual"] = to_string(worst);
    } else {
      double worst = 0.0;
      for (int n = 1; n <= max_size; ++n)
        for (const Partition& lam : enumerate_partitions(n))
          worst = std::max(worst, giambelli_expectation_check(lam, mp));
      j["max_residual"] = worst;
    }
    emit(j, out);
    return GMB_OK;
  });
}

int gmb_sample(gmb_ctx* ctx, int count, uint64_t seed, char** out) {
  return wrap(ctx, [&]() {
    const MixedZParams& mp = need_mixed(ctx);
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    json samples = json::array();
    for (int i = 0; i < count; ++i) {
      std::mt19937_64 rng = substream(seed, static_cast<uint64_t>(i));
      Partition lam = sample_mixed(mp, rng);
      samples.push_back(
          {{"lambda", partition_json(lam)}, {"n", lam.size()}});
    }
    json j{{"count", count}, {"seed", seed}, {"samples", samples}};
    emit(j, out);
    return GMB_OK;
  });
}

int gmb_kernel_eval(gmb_ctx* ctx, const char* x, const char* y,
                    int residue_form, char** out) {
  return wrap(ctx, [&]() {
    const MixedZParams& mp = need_mixed(ctx);
    int x2 = lattice_point(x), y2 = lattice_point(y);
    double v = residue_form ? kernel_via_residues(x2, y2, mp, ctx->pp)
                            : kernel_discrete(x2, y2, mp, ctx->pp);
    json j{{"x", half_to_string(x2)},
           {"y", half_to_string(y2)},
           {"value", v},
           {"form", residue_form ? "residue" : "block"},
           {"precision", precision_json(ctx->pp)}};
    emit(j, out);
    return GMB_OK;
  });
}

int gmb_kernel_grid(gmb_ctx* ctx, const char* range, int residue_form,
                    char** out) {
  return wrap(ctx, [&]() {
    const MixedZParams& mp = need_mixed(ctx);
    int r2 = lattice_point(range);
    if (r2 < 0) r2 = -r2;
    json rows = json::array();
    for (int x2 = -r2; x2 <= r2; x2 += 2)
      for (int y2 = -r2; y2 <= r2; y2 += 2) {
        double v = residue_form ? kernel_via_residues(x2, y2, mp, ctx->pp)
                                : kernel_discrete(x2, y2, mp, ctx->pp);
        rows.push_back({{"x", half_to_string(x2)},
                        {"y", half_to_string(y2)},
                        {"value", v}});
      }
    json j{{"range", half_to_string(r2)},
           {"form", residue_form ? "residue" : "block"},
           {"rows", rows},
           {"precision", precision_json(ctx->pp)}};
    emit(j, out);
    return GMB_OK;
  });
}

int gmb_kernel_rho(gmb_ctx* ctx, const char* points, int residue_form,
                   char** out) {
  return wrap(ctx, [&]() {
    const MixedZParams& mp = need_mixed(ctx);
    std::vector<int> pts = parse_points(points);
    double v = rho_m_det(pts, mp, residue_form != 0, ctx->pp);
    json pj = json::array();
    for (int p : pts) pj.push_back(half_to_string(p));
    json j{{"points", pj},
           {"rho", v},
           {"form", residue_form ? "residue" : "block"},
           {"precision", precision_json(ctx->pp)}};
    emit(j, out);
    return GMB_OK;
  });
}

int gmb_jump_check(gmb_ctx* ctx, const char* x, char** out) {
  return wrap(ctx, [&]() {
    const MixedZParams& mp = need_mixed(ctx);
    int x2 = lattice_point(x);
    json j{{"x", half_to_string(x2)},
           {"residual", jump_check(x2, mp, ctx->pp)},
           {"precision", precision_json(ctx->pp)}};
    emit(j, out);
    return GMB_OK;
  });
}

int gmb_whittaker_eval(gmb_ctx* ctx, double x, double y, char** out) {
  return wrap(ctx, [&]() {
    const ZParams& zp = need_z(ctx);
    json j{{"x", x},
           {"y", y},
           {"value", kernel_whittaker(x, y, zp, ctx->pp)},
           {"precision", precision_json(ctx->pp)}};
    emit(j, out);
    return GMB_OK;
  });
}

int gmb_verify(gmb_ctx* ctx, const char* suite, uint64_t seed, int samples,
               char** out) {
  return wrap(ctx, [&]() {
    if (!suite) throw std::invalid_argument("missing suite name");
    std::string name(suite);
    std::vector<SuiteReport> reports;
    bool known = false;
    auto want = [&](const char* s) {
      bool w = name == s || name == "all";
      known = known || name == s;
      return w;
    };
    if (want("giambelli")) {
      reports.push_back(verify_giambelli());
      reports.push_back(verify_expect_fs());
    }
    if (want("kernel-vs-oracle")) {
      reports.push_back(verify_two_point());
      reports.push_back(verify_det_identity());
      reports.push_back(verify_kernel_vs_oracle());
      reports.push_back(verify_jump());
    }
    if (want("ope")) reports.push_back(verify_ope());
    if (want("whittaker")) {
      reports.push_back(verify_whittaker(seed ? seed : 11));
      reports.push_back(verify_scaling());
    }
    if (want("sampler"))
      reports.push_back(
          verify_sampler(samples > 0 ? samples : 100000, seed ? seed : 7));
    if (!known && name != "all")
      throw std::invalid_argument("unknown suite: " + name);

    bool pass = true;
    json suites = json::array();
    for (const auto& rep : reports) {
      pass = pass && rep.pass();
      suites.push_back(suite_json(rep));
    }
    json j{{"suite", name}, {"pass", pass}, {"suites", suites}};
    emit(j, out);
    if (!pass) {
      ctx->err = "verification suite '" + name + "' failed";
      return GMB_VERIFY_FAIL;
    }
    return GMB_OK;
  });
}

}  // extern "C"
