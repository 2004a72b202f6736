#include "doctest.h"

#include "pinext/checks.hpp"

#include <set>

using namespace pinext::checks;

TEST_CASE("check list") {
  const auto& list = check_list();
  REQUIRE(list.size() == 8);
  std::set<std::string> names;
  for (std::size_t k = 0; k < list.size(); ++k) {
    CHECK(list[k].id == static_cast<int>(k) + 1);
    CHECK(list[k].budget_seconds > 0);
    names.insert(list[k].name);
  }
  CHECK(names.size() == 8);
  CHECK_THROWS(run_check(0, {}));
  CHECK_THROWS(run_check(9, {}));
}

TEST_CASE("fault injection breaks only the Q8 check") {
  CheckOptions options;
  options.inject_fault = true;
  auto r = run_check(1, options);
  CHECK_FALSE(r.passed);
  CHECK(r.detail.find("centre") != std::string::npos);
  CHECK(run_check(2, options).passed);
  CHECK(run_check(5, options).passed);
}

TEST_CASE("checks pass under other seeds") {
  for (std::uint64_t seed : {2, 17}) {
    CheckOptions options;
    options.seed = seed;
    for (const auto& r : run_all(options)) {
      CAPTURE(r.info.name);
      CAPTURE(r.detail);
      CHECK(r.passed);
    }
  }
}
