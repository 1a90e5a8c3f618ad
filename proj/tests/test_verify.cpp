#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msf/error.hpp"
#include "msf/verify.hpp"

using namespace msf;

namespace {

std::string fact(const VerificationOutcome& o, const std::string& name) {
  for (const auto& [k, v] : o.facts) {
    if (k == name) return v;
  }
  return "";
}

}  // namespace

TEST_CASE("structure of large sum-free sets in Z2^k") {
  const auto k4 = verify_structure_z2(4, {.record_witnesses = true});
  CHECK(k4.pass());
  CHECK(fact(k4, "threshold") == "5");
  CHECK(k4.witnesses.size() == std::stoul(fact(k4, "above_threshold")));
  CHECK(!k4.witnesses.empty());
  const auto k5 = verify_structure_z2(5);
  CHECK(k5.pass());
  CHECK(fact(k5, "threshold") == "10");
  CHECK_THROWS_AS(verify_structure_z2(3), InvalidArgument);
}

TEST_CASE("structure of large sum-free sets in Z3^3") {
  const auto r = verify_structure_z3(3, {.record_witnesses = true});
  CHECK(r.pass());
  CHECK(fact(r, "hyperplane_cosets") == "26");
  CHECK(std::stoul(fact(r, "above_threshold")) > 0);
}

TEST_CASE("extension lemma") {
  for (const char* g : {"Z7", "Z2^3", "Z9", "Z2^4", "Z3^2", "Z10"}) {
    const auto r = verify_extension_lemma(parse_group(g));
    CHECK_MESSAGE(r.pass(), g);
    CHECK(fact(r, "mode") == "exhaustive");
  }
  const auto random = verify_extension_lemma(parse_group("Z3^3"), 300, 7);
  CHECK(random.pass());
  CHECK(random.universe == 300);
  CHECK(fact(random, "seed") == "7");
}

TEST_CASE("type-3 accounting") {
  const auto z23 = verify_fmax_decomposition(parse_group("Z2^3"));
  CHECK(z23.pass());
  CHECK(fact(z23, "accounting_bound") == "84");
  CHECK(fact(z23, "pairs") == "21");
  const auto z24 = verify_fmax_decomposition(parse_group("Z2^4"));
  CHECK(z24.pass());
  CHECK(fact(z24, "fmax") == "183");
  const auto z32 = verify_fmax_decomposition(parse_group("Z3^2"));
  CHECK(z32.pass());
  CHECK(fact(z32, "accounting_bound") == "72");
  CHECK(verify_fmax_decomposition(parse_group("Z2^2")).pass());
  CHECK_THROWS_AS(verify_fmax_decomposition(parse_group("Z5")), InvalidArgument);
}
