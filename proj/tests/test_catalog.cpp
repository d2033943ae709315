#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "mbkit/catalog.hpp"
#include "mbkit/json_io.hpp"

using mbkit::CatalogEntry;
using mbkit::IntPolynomial;

TEST_CASE("the catalog lists its entries in a fixed order") {
  std::vector<std::string> expected{
      "disk_max",       "disk_min",   "cylinder_height",
      "mobius_core",    "solid_torus_core_max",
      "flat_torus",     "klein_flat", "sphere_height"};
  CHECK(mbkit::list_entries() == expected);
}

TEST_CASE("lookup by name") {
  REQUIRE(mbkit::find_entry("disk_max") != nullptr);
  CHECK(mbkit::find_entry("disk_max")->descriptor.name == "disk_max");
  CHECK(mbkit::find_entry("nosuch") == nullptr);
}

TEST_CASE("every entry records where its expected values came from") {
  for (const auto& name : mbkit::list_entries()) {
    const CatalogEntry* e = mbkit::find_entry(name);
    INFO(name);
    CHECK_FALSE(e->provenance_R_main.empty());
    if (e->expected_R_corollary)
      CHECK_FALSE(e->provenance_R_corollary.empty());
  }
}

TEST_CASE("recorded quotients are nonnegative as the theorems demand") {
  for (const auto& name : mbkit::list_entries()) {
    const CatalogEntry* e = mbkit::find_entry(name);
    CHECK(e->expected_R_main.is_nonnegative());
    if (e->expected_R_corollary)
      CHECK(e->expected_R_corollary->is_nonnegative());
  }
}

TEST_CASE("running the catalog checks every recorded value") {
  mbkit::CatalogRunResult r = mbkit::run_all();
  CHECK(r.ok);
  CHECK(r.mismatches.empty());
  // one report per theorem per entry: eight mains, six corollaries
  CHECK(r.reports.size() == 14);
  for (const auto& report : r.reports) {
    INFO(report.descriptor_name + " / " + report.theorem);
    CHECK(report.pass());
  }
}

TEST_CASE("a perturbed catalog entry is reported as a mismatch") {
  // simulate a stale recorded value by checking a wrong expectation
  const CatalogEntry* e = mbkit::find_entry("disk_max");
  auto report = mbkit::verify_main(e->descriptor);
  CHECK(report.quotient != e->expected_R_main + IntPolynomial({1}));
}

TEST_CASE("unoriented entries carry no relative expectation") {
  CHECK_FALSE(mbkit::find_entry("mobius_core")->expected_R_corollary);
  CHECK_FALSE(mbkit::find_entry("klein_flat")->expected_R_corollary);
  CHECK(mbkit::find_entry("disk_min")->expected_R_corollary.has_value());
}

TEST_CASE("fixture names are unique across the catalog") {
  std::set<std::string> seen;
  for (const auto& name : mbkit::list_entries())
    for (const auto& fx : mbkit::find_entry(name)->flow_datasets) {
      INFO(fx.name);
      CHECK(seen.insert(fx.name).second);
    }
  CHECK(seen.size() == 6);
}

TEST_CASE("descriptors round-trip through their serialized form") {
  for (const auto& name : mbkit::list_entries()) {
    const CatalogEntry* e = mbkit::find_entry(name);
    mbkit::json j = mbkit::descriptor_to_json(e->descriptor);
    mbkit::MorseBottDescriptor back = mbkit::descriptor_from_json(j);
    INFO(name);
    CHECK(back == e->descriptor);
    // canonical serialization is byte-stable under a round trip
    CHECK(mbkit::descriptor_to_json(back).dump(2) == j.dump(2));
  }
}
