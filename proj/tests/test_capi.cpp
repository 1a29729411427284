#include <doctest.h>

#include <string>

#include <json.hpp>

#include "giambelli/capi.h"

using json = nlohmann::json;

namespace {

struct Ctx {
  gmb_ctx* p;
  Ctx() : p(gmb_ctx_new()) {}
  ~Ctx() { gmb_ctx_free(p); }
};

json take(char*& out, int rc) {
  REQUIRE(rc == GMB_OK);
  REQUIRE(out != nullptr);
  json j = json::parse(out);
  gmb_string_free(out);
  out = nullptr;
  return j;
}

}  // namespace

TEST_CASE("parameter validation through the c api") {
  Ctx c;
  CHECK(gmb_set_params(c.p, "1", "1", "1/4") == GMB_BAD_INPUT);
  CHECK(std::string(gmb_last_error(c.p)).size() > 0);
  CHECK(gmb_set_params(c.p, "1/2", "1/2", "1/4") == GMB_OK);
  CHECK(gmb_set_params(c.p, "1/2", "1/2", "2") == GMB_BAD_INPUT);
  CHECK(gmb_set_precision(c.p, -1.0, 0) == GMB_BAD_INPUT);
  CHECK(gmb_set_threads(c.p, 0) == GMB_BAD_INPUT);
  CHECK(gmb_set_threads(c.p, 4) == GMB_OK);
}

TEST_CASE("weights and expectations as json") {
  Ctx c;
  REQUIRE(gmb_set_params(c.p, "1/2", "1/2", "1/4") == GMB_OK);
  char* out = nullptr;
  json j = take(out, gmb_zmeasure_weight(c.p, "[2]", &out));
  CHECK(j["weight_n"] == "9/10");
  CHECK(j["n"] == 2);

  out = nullptr;
  j = take(out, gmb_expect_fs(c.p, "[1]", &out));
  CHECK(j["expectation"] == "1/12");

  out = nullptr;
  j = take(out, gmb_giambelli_check(c.p, 5, &out));
  CHECK(j["max_residual"] == "0");

  out = nullptr;
  CHECK(gmb_zmeasure_weight(c.p, "[1,2]", &out) == GMB_BAD_INPUT);
}

TEST_CASE("kernel surface") {
  Ctx c;
  REQUIRE(gmb_set_params(c.p, "1/2", "1/2", "1/4") == GMB_OK);
  char* out = nullptr;
  json j = take(out, gmb_kernel_eval(c.p, "1/2", "1/2", 0, &out));
  double rho1 = j["value"].get<double>();
  CHECK(rho1 > 0.0);
  CHECK(rho1 < 1.0);

  out = nullptr;
  j = take(out, gmb_kernel_rho(c.p, "[1/2]", 0, &out));
  CHECK(j["rho"].get<double>() == doctest::Approx(rho1));

  out = nullptr;
  j = take(out, gmb_kernel_grid(c.p, "3/2", 0, &out));
  CHECK(j["rows"].size() == 16);  // 4 lattice points in [-3/2, 3/2]

  out = nullptr;
  j = take(out, gmb_jump_check(c.p, "1/2", &out));
  CHECK(j["residual"].get<double>() < 1e-9);

  out = nullptr;
  CHECK(gmb_kernel_eval(c.p, "1", "1/2", 0, &out) == GMB_BAD_INPUT);
}

TEST_CASE("sampling and errors") {
  Ctx c;
  REQUIRE(gmb_set_params(c.p, "1/2", "1/2", "1/2") == GMB_OK);
  char* out = nullptr;
  json j = take(out, gmb_sample(c.p, 3, 11, &out));
  CHECK(j["samples"].size() == 3);

  out = nullptr;
  CHECK(gmb_verify(c.p, "no-such-suite", 0, 0, &out) == GMB_BAD_INPUT);

  Ctx fresh;
  out = nullptr;
  CHECK(gmb_sample(fresh.p, 1, 0, &out) == GMB_BAD_INPUT);  // params unset
}
