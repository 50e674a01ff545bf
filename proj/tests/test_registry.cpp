#include "doctest.h"
#include "json.hpp"

#include <fstream>
#include <set>

#include "latcon/registry.hpp"

using namespace latcon;

TEST_CASE("registry comparisons") {
  auto k = registry_compare("kappa", 1.9402);
  REQUIRE(k.relative_error);
  CHECK(*k.relative_error == doctest::Approx(7.9e-6).epsilon(0.02));
  CHECK_FALSE(k.inside);

  auto mu = registry_compare("mu_d2", 2.64);
  REQUIRE(mu.inside);
  CHECK(*mu.inside);
  CHECK(mu.text.find("INSIDE") != std::string::npos);

  auto pc = registry_compare("pc_site_square", 0.70);
  REQUIRE(pc.inside);
  CHECK_FALSE(*pc.inside);
  CHECK(pc.text.find("OUTSIDE") != std::string::npos);

  CHECK_THROWS_AS(registry_compare("no_such_constant", 1.0), DomainError);
  CHECK_THROWS_AS(registry_entry("no_such_constant"), DomainError);
}

TEST_CASE("registry texts keep their printed precision") {
  CHECK(registry_entry("mu_d2_estimate").value_text == "2.6381585");
  CHECK(registry_entry("kappa").value_text == "1.940215351");
  CHECK(registry_entry("hard_square").value_text == "1.50304808247533226");
  CHECK(registry_entry("kb_triangular").value_text == "0.1118442752845497");
  CHECK(registry_entry("ks_half").value_text == "0.065770");
}

TEST_CASE("bound pairs are ordered") {
  for (const auto& e : registry()) {
    if (e.kind != EntryKind::BoundPair) {
      CHECK_FALSE(e.value_text.empty());
      continue;
    }
    CHECK(e.lower() < e.upper());
  }
}

TEST_CASE("registry matches the checked-in manifest") {
  std::ifstream f(LATCON_TEST_DATA "/registry_manifest.json");
  REQUIRE(f);
  auto j = nlohmann::json::parse(f);
  std::set<std::string> expected;
  for (const auto& k : j.at("keys")) expected.insert(k.get<std::string>());
  CHECK(expected.size() >= 30);
  std::set<std::string> actual;
  for (const auto& e : registry()) CHECK(actual.insert(e.key).second);
  CHECK(actual == expected);
}
