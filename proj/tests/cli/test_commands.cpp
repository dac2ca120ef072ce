#include <doctest.h>

#include "commands.hpp"
#include "trunclab/io/instance.hpp"

using namespace trunclab;

namespace {

io::Instance sample() {
  auto r = io::parse_instance(TRUNCLAB_TEST_DATA "/sample.tl");
  REQUIRE(r.ok());
  return *r.instance;
}

std::string value(const io::Report& r, const std::string& key) {
  for (const auto& [k, v] : r.values()) {
    if (k == key) return std::get<std::string>(v);
  }
  return {};
}

}  // namespace

TEST_CASE("normal-form lists merged levels") {
  const auto inst = sample();
  auto r = cli::run_command("normal-form", &inst, {"h"}, {});
  CHECK(r.exit_code() == 0);
  CHECK(value(r, "normal_form") == "[(3,{1,2}),(1/2,{3})]");
}

TEST_CASE("json section is deterministic for a fixed seed") {
  const auto inst = sample();
  cli::Flags f;
  f.seed = 11;
  f.cases = 40;
  for (const char* cmd : {"kernel-check", "pointwise", "kernel-close"}) {
    CHECK(cli::run_command(cmd, &inst, {"T0"}, f).json() == cli::run_command(cmd, &inst, {"T0"}, f).json());
  }
}

TEST_CASE("kernel-check refutes condition (3) for tail 0 with witness g0") {
  const auto inst = sample();
  auto r = cli::run_command("kernel-check", &inst, {"T0"}, {});
  CHECK(r.exit_code() == 1);
  REQUIRE(r.checks().size() == 3);
  CHECK(r.checks()[0].pass);
  CHECK(r.checks()[1].pass);
  CHECK_FALSE(r.checks()[2].pass);
  CHECK(r.checks()[2].witness == "{correction: [], tail: [1]}");
}

TEST_CASE("membership reports the offending level set") {
  const auto inst = sample();
  auto r = cli::run_command("check", &inst, {"G", "g"}, {});
  CHECK(r.exit_code() == 1);
  CHECK(r.checks().back().witness == "level set {2} is not a component");
}

TEST_CASE("input errors") {
  const auto inst = sample();
  CHECK_THROWS_AS(cli::run_command("bogus", &inst, {}, {}), cli::InputError);
  CHECK_THROWS_AS(cli::run_command("normal-form", &inst, {"nope"}, {}), cli::InputError);
  CHECK_THROWS_AS(cli::run_command("normal-form", &inst, {"G"}, {}), cli::InputError);
  CHECK_THROWS_AS(cli::run_command("trunc-seq", &inst, {"gs"}, {}), cli::InputError);
  CHECK_THROWS_AS(cli::run_command("induced-op", &inst, {"add", "r"}, {}), cli::InputError);
  CHECK_THROWS_AS(cli::run_command("check", nullptr, {}, {}), cli::InputError);
}

TEST_CASE("frame-eval on a given interval") {
  const auto inst = sample();
  auto r = cli::run_command("frame-eval", &inst, {"r", "(1,inf)"}, {});
  CHECK(value(r, "r(1, inf)") == "b");
}

TEST_CASE("e0q lifts along the Booleanization of the chain") {
  const auto inst = sample();
  auto r = cli::run_command("e0q", &inst, {"q", "chi_top"}, {});
  CHECK(r.exit_code() == 0);
}
