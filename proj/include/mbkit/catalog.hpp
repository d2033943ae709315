#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mbkit/cell_model.hpp"
#include "mbkit/counting.hpp"
#include "mbkit/descriptor.hpp"
#include "mbkit/flow.hpp"
#include "mbkit/intpoly.hpp"

namespace mbkit {
namespace models {

// Reference triangulations. These are the smallest standard models; the
// homology of each is pinned by the test suite against values computed with
// an independent minors-based rank oracle before the main path existed.

inline CellModel point() {
  CellModel m;
  m.add_vertex(0);
  return m;
}

inline CellModel circle() {
  CellModel m;
  m.add_simplex({0, 1});
  m.add_simplex({1, 2});
  m.add_simplex({0, 2});
  return m;
}

// Cone over the triangle circle: a disk.
inline CellModel disk() {
  CellModel m;
  m.add_simplex({0, 1, 3});
  m.add_simplex({1, 2, 3});
  m.add_simplex({0, 2, 3});
  return m;
}

// Boundary of the tetrahedron: a sphere.
inline CellModel sphere() {
  CellModel m;
  m.add_simplex({0, 1, 2});
  m.add_simplex({0, 1, 3});
  m.add_simplex({0, 2, 3});
  m.add_simplex({1, 2, 3});
  return m;
}

// Seven-vertex torus: vertices are residues mod 7, faces the orbits of
// {0,1,3} and {0,2,3} under the cyclic shift.
inline CellModel torus() {
  CellModel m;
  for (int i = 0; i < 7; ++i) {
    m.add_simplex({i, (i + 1) % 7, (i + 3) % 7});
    m.add_simplex({i, (i + 2) % 7, (i + 3) % 7});
  }
  return m;
}

// Five-vertex Moebius band: the cyclic strip {i, i+1, i+2} mod 5.
inline CellModel mobius_band() {
  CellModel m;
  for (int i = 0; i < 5; ++i)
    m.add_simplex({i, (i + 1) % 5, (i + 2) % 5});
  return m;
}

// Six-vertex annulus: outer triangle 0,1,2 and inner triangle 3,4,5.
inline CellModel annulus() {
  CellModel m;
  m.add_simplex({0, 1, 3});
  m.add_simplex({1, 4, 3});
  m.add_simplex({1, 2, 4});
  m.add_simplex({2, 5, 4});
  m.add_simplex({0, 2, 5});
  m.add_simplex({0, 3, 5});
  return m;
}

// Nine-vertex Klein bottle: a 3x3 grid with the rows glued cyclically and
// the third row glued back to the first through the column reflection
// j -> -j mod 3. Vertex (i, j) is labeled 3i + j.
inline CellModel klein_bottle() {
  CellModel m;
  auto v = [](int i, int j) { return 3 * ((i % 3 + 3) % 3) + ((j % 3 + 3) % 3); };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) {
      m.add_simplex({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      m.add_simplex({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
    }
  for (int j = 0; j < 3; ++j) {
    m.add_simplex({v(2, j), v(0, -j), v(0, -(j + 1))});
    m.add_simplex({v(2, j), v(2, j + 1), v(0, -(j + 1))});
  }
  return m;
}

// Monodromy -1 local system on the triangle circle.
inline SignCocycle circle_twist() {
  SignCocycle c;
  c.set(0, 1, -1);
  return c;
}

}  // namespace models

// A flow dataset bundled with the data its audits need: the companion
// restricted dataset holding the per-block lines with their own signs and
// transports, and the free-rank polynomial the complex must reproduce.
struct FlowFixture {
  std::string name;
  FlowDataset dataset;
  std::optional<FlowDataset> restricted;
  std::optional<IntPolynomial> expected_homology;
};

// One ground-truth example: a descriptor, the surplus polynomials its
// verifications must produce, and optional flow datasets. The expected
// values were produced by independent oracles (minors-based Smith normal
// form on the stated models, hand synthetic division) before the main code
// path existed; the notes record which.
struct CatalogEntry {
  MorseBottDescriptor descriptor;
  std::vector<FlowFixture> flow_datasets;
  IntPolynomial expected_R_main;
  std::string provenance_R_main;
  std::optional<IntPolynomial> expected_R_corollary;
  std::string provenance_R_corollary;
};

namespace detail {

inline CriticalSubmanifold make_sub(std::string name, std::size_t dim,
                                    std::size_t index, CellModel model) {
  CriticalSubmanifold c;
  c.name = std::move(name);
  c.dim = dim;
  c.index = index;
  c.topology.cell_model = std::move(model);
  return c;
}

inline FlowCriticalPoint make_point(std::string name, std::size_t index,
                                    PointKind kind, std::string block) {
  return FlowCriticalPoint{std::move(name), index, kind, std::move(block)};
}

inline FlowFixture sphere_poles_fixture() {
  FlowFixture f;
  f.name = "sphere_poles";
  f.dataset.critical_points = {
      make_point("p", 0, PointKind::interior, "bottom"),
      make_point("q", 2, PointKind::interior, "top")};
  f.dataset.height_order = {"bottom", "top"};
  f.restricted = f.dataset;
  f.expected_homology = IntPolynomial({1, 0, 1});
  return f;
}

// Sphere with two minima, two saddles, two maxima, split into an artificial
// low block (minima and saddles) and high block (maxima). The only fixture
// whose boundary-squared audit has something to cancel, so its corrupted
// variant is the negative control for that audit.
inline FlowFixture sphere_double_fixture() {
  FlowFixture f;
  f.name = "sphere_double";
  f.dataset.critical_points = {
      make_point("p1", 0, PointKind::interior, "low"),
      make_point("p2", 0, PointKind::interior, "low"),
      make_point("s1", 1, PointKind::interior, "low"),
      make_point("s2", 1, PointKind::interior, "low"),
      make_point("q1", 2, PointKind::interior, "high"),
      make_point("q2", 2, PointKind::interior, "high")};
  f.dataset.flow_lines = {{"s1", "p1", 1, 1}, {"s1", "p2", -1, 1},
                          {"s2", "p1", 1, 1}, {"s2", "p2", -1, 1},
                          {"q1", "s1", 1, 1}, {"q1", "s2", -1, 1},
                          {"q2", "s1", 1, 1}, {"q2", "s2", -1, 1}};
  f.dataset.height_order = {"low", "high"};
  FlowDataset r = f.dataset;
  r.flow_lines = {{"s1", "p1", 1, 1},
                  {"s1", "p2", -1, 1},
                  {"s2", "p1", 1, 1},
                  {"s2", "p2", -1, 1}};
  f.restricted = std::move(r);
  f.expected_homology = IntPolynomial({1, 0, 1});
  return f;
}

// The restricted view carries the monodromy -1 circle: two lines whose
// transports differ, composing to the same entry 2 the full view shows.
inline FlowFixture twisted_circle_fixture() {
  FlowFixture f;
  f.name = "twisted_circle";
  f.dataset.critical_points = {
      make_point("P", 0, PointKind::interior, "loop"),
      make_point("Q", 1, PointKind::interior, "loop")};
  f.dataset.flow_lines = {{"Q", "P", 1, 1}, {"Q", "P", 1, 1}};
  f.dataset.height_order = {"loop"};
  FlowDataset r = f.dataset;
  r.flow_lines = {{"Q", "P", 1, 1}, {"Q", "P", -1, -1}};
  f.restricted = std::move(r);
  f.expected_homology = IntPolynomial();
  return f;
}

inline FlowFixture mobius_flow_fixture() {
  FlowFixture f;
  f.name = "mobius_flow";
  f.dataset.critical_points = {
      make_point("b1", 0, PointKind::boundary_N, "rim"),
      make_point("b2", 1, PointKind::boundary_N, "rim"),
      make_point("a1", 1, PointKind::interior, "core"),
      make_point("a2", 2, PointKind::interior, "core")};
  f.dataset.flow_lines = {{"a2", "a1", 1, 1}, {"a2", "a1", 1, 1},
                          {"a2", "b2", 1, 1}, {"a1", "b1", 1, 1},
                          {"a1", "b1", -1, 1}, {"b2", "b1", 1, 1},
                          {"b2", "b1", -1, 1}};
  f.dataset.height_order = {"rim", "core"};
  FlowDataset r = f.dataset;
  r.flow_lines = {{"a2", "a1", 1, 1},
                  {"a2", "a1", -1, -1},
                  {"b2", "b1", 1, 1},
                  {"b2", "b1", -1, 1}};
  f.restricted = std::move(r);
  f.expected_homology = IntPolynomial({1, 1});
  return f;
}

inline FlowFixture flat_torus_fixture() {
  FlowFixture f;
  f.name = "flat_torus_flow";
  f.dataset.critical_points = {
      make_point("m0", 0, PointKind::interior, "low"),
      make_point("m1", 1, PointKind::interior, "low"),
      make_point("M0", 1, PointKind::interior, "high"),
      make_point("M1", 2, PointKind::interior, "high")};
  f.dataset.flow_lines = {{"m1", "m0", 1, 1}, {"m1", "m0", -1, 1},
                          {"M1", "M0", 1, 1}, {"M1", "M0", -1, 1},
                          {"M0", "m0", 1, 1}, {"M0", "m0", -1, 1},
                          {"M1", "m1", 1, 1}, {"M1", "m1", -1, 1}};
  f.dataset.height_order = {"low", "high"};
  FlowDataset r = f.dataset;
  r.flow_lines = {{"m1", "m0", 1, 1},
                  {"m1", "m0", -1, 1},
                  {"M1", "M0", 1, 1},
                  {"M1", "M0", -1, 1}};
  f.restricted = std::move(r);
  f.expected_homology = IntPolynomial({1, 2, 1});
  return f;
}

inline FlowFixture klein_flow_fixture() {
  FlowFixture f;
  f.name = "klein_flow";
  f.dataset.critical_points = {
      make_point("p", 0, PointKind::interior, "low"),
      make_point("q", 1, PointKind::interior, "low"),
      make_point("r", 1, PointKind::interior, "high"),
      make_point("s", 2, PointKind::interior, "high")};
  f.dataset.flow_lines = {{"q", "p", 1, 1}, {"q", "p", -1, 1},
                          {"s", "r", 1, 1}, {"s", "r", 1, 1},
                          {"r", "p", 1, 1}, {"r", "p", -1, 1}};
  f.dataset.height_order = {"low", "high"};
  FlowDataset r = f.dataset;
  r.flow_lines = {{"q", "p", 1, 1},
                  {"q", "p", -1, 1},
                  {"s", "r", 1, 1},
                  {"s", "r", -1, -1}};
  f.restricted = std::move(r);
  f.expected_homology = IntPolynomial({1, 1});
  return f;
}

inline std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;

  {
    CatalogEntry e;
    MorseBottDescriptor& d = e.descriptor;
    d.name = "disk_max";
    d.ambient_dim = 2;
    d.manifold_oriented = true;
    d.manifold_homology.cell_model = models::disk();
    d.interior.push_back(make_sub("max", 0, 2, models::point()));
    d.boundary_N.push_back(make_sub("rim", 1, 0, models::circle()));
    e.expected_R_main = IntPolynomial({0, 1});
    e.provenance_R_main =
        "minors-oracle ranks give counting polynomial t^2+t+1 and disk "
        "polynomial 1; hand synthetic division of t^2+t by 1+t gives t";
    e.expected_R_corollary = IntPolynomial();
    e.provenance_R_corollary =
        "type-D polynomial t^2 equals the reversal of 1 at cap 2; hand "
        "division of 0 gives 0";
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    MorseBottDescriptor& d = e.descriptor;
    d.name = "disk_min";
    d.ambient_dim = 2;
    d.manifold_oriented = true;
    d.manifold_homology.cell_model = models::disk();
    d.relative_homology.polynomial = IntPolynomial({0, 0, 1});
    d.interior.push_back(make_sub("min", 0, 0, models::point()));
    d.boundary_D.push_back(make_sub("rim", 1, 0, models::circle()));
    e.expected_R_main = IntPolynomial();
    e.provenance_R_main =
        "counting polynomial 1 minus disk polynomial 1 is 0; hand division "
        "gives 0";
    e.expected_R_corollary = IntPolynomial({1});
    e.provenance_R_corollary =
        "type-D polynomial 1+t+t^2 minus relative polynomial t^2 is 1+t; "
        "hand division by 1+t gives 1";
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    MorseBottDescriptor& d = e.descriptor;
    d.name = "cylinder_height";
    d.ambient_dim = 2;
    d.manifold_oriented = true;
    d.manifold_homology.cell_model = models::annulus();
    d.boundary_N.push_back(make_sub("bottom", 1, 0, models::circle()));
    d.boundary_D.push_back(make_sub("top", 1, 0, models::circle()));
    e.expected_R_main = IntPolynomial();
    e.provenance_R_main =
        "minors-oracle rank of the six-vertex annulus gives 1+t; counting "
        "polynomial 1+t; hand division of 0 gives 0";
    e.expected_R_corollary = IntPolynomial();
    e.provenance_R_corollary =
        "type-D polynomial (1+t)t equals the reversal of 1+t at cap 2; hand "
        "division of 0 gives 0";
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    MorseBottDescriptor& d = e.descriptor;
    d.name = "mobius_core";
    d.ambient_dim = 2;
    d.manifold_oriented = false;
    d.manifold_homology.cell_model = models::mobius_band();
    CriticalSubmanifold core = make_sub("core", 1, 1, models::circle());
    core.orientation_system = models::circle_twist();
    core.oriented_bundle = false;
    d.interior.push_back(std::move(core));
    d.boundary_N.push_back(make_sub("rim", 1, 0, models::circle()));
    e.expected_R_main = IntPolynomial();
    e.provenance_R_main =
        "minors-oracle rank of the monodromy -1 circle is 0 in every "
        "degree, so the counting polynomial is 1+t against band polynomial "
        "1+t; hand division of 0 gives 0";
    e.flow_datasets = {mobius_flow_fixture(), twisted_circle_fixture()};
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    MorseBottDescriptor& d = e.descriptor;
    d.name = "solid_torus_core_max";
    d.ambient_dim = 3;
    d.manifold_oriented = true;
    d.manifold_homology.polynomial = IntPolynomial({1, 1});
    d.relative_homology.polynomial = IntPolynomial({0, 0, 1, 1});
    d.interior.push_back(make_sub("core", 1, 2, models::circle()));
    d.boundary_N.push_back(make_sub("shell", 2, 0, models::torus()));
    e.expected_R_main = IntPolynomial({0, 1, 1});
    e.provenance_R_main =
        "counting polynomial (1+t)t^2 + (1+2t+t^2) minus 1+t leaves "
        "t^3+2t^2+t; hand synthetic division by 1+t gives t+t^2";
    e.expected_R_corollary = IntPolynomial();
    e.provenance_R_corollary =
        "type-D polynomial t^2+t^3 equals both the supplied relative "
        "polynomial and the reversal of 1+t at cap 3; hand division of 0 "
        "gives 0";
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    MorseBottDescriptor& d = e.descriptor;
    d.name = "flat_torus";
    d.ambient_dim = 2;
    d.manifold_oriented = true;
    d.manifold_homology.cell_model = models::torus();
    d.interior.push_back(make_sub("min_circle", 1, 0, models::circle()));
    d.interior.push_back(make_sub("max_circle", 1, 1, models::circle()));
    e.expected_R_main = IntPolynomial();
    e.provenance_R_main =
        "counting polynomial (1+t) + (1+t)t matches the seven-vertex torus "
        "polynomial 1+2t+t^2 from the minors oracle; hand division of 0 "
        "gives 0";
    e.expected_R_corollary = IntPolynomial();
    e.provenance_R_corollary =
        "empty boundary makes the type-D polynomial equal the type-N one, "
        "and 1+2t+t^2 is its own reversal at cap 2; hand division of 0 "
        "gives 0";
    e.flow_datasets = {flat_torus_fixture()};
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    MorseBottDescriptor& d = e.descriptor;
    d.name = "klein_flat";
    d.ambient_dim = 2;
    d.manifold_oriented = false;
    d.manifold_homology.cell_model = models::klein_bottle();
    d.interior.push_back(make_sub("base_circle", 1, 0, models::circle()));
    CriticalSubmanifold twisted = make_sub("twisted_circle", 1, 1,
                                           models::circle());
    twisted.orientation_system = models::circle_twist();
    twisted.oriented_bundle = false;
    d.interior.push_back(std::move(twisted));
    e.expected_R_main = IntPolynomial();
    e.provenance_R_main =
        "minors oracle on the nine-vertex model gives free ranks 1, 1, 0 "
        "(torsion 2 in degree one); counting polynomial (1+t) + 0 matches; "
        "hand division of 0 gives 0";
    e.flow_datasets = {klein_flow_fixture()};
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    MorseBottDescriptor& d = e.descriptor;
    d.name = "sphere_height";
    d.ambient_dim = 2;
    d.manifold_oriented = true;
    d.manifold_homology.cell_model = models::sphere();
    d.interior.push_back(make_sub("south", 0, 0, models::point()));
    d.interior.push_back(make_sub("north", 0, 2, models::point()));
    e.expected_R_main = IntPolynomial();
    e.provenance_R_main =
        "minors oracle on the tetrahedron boundary gives 1+t^2; counting "
        "polynomial 1+t^2 matches; hand division of 0 gives 0";
    e.expected_R_corollary = IntPolynomial();
    e.provenance_R_corollary =
        "1+t^2 is its own reversal at cap 2 and the boundary is empty; hand "
        "division of 0 gives 0";
    e.flow_datasets = {sphere_poles_fixture(), sphere_double_fixture()};
    entries.push_back(std::move(e));
  }

  return entries;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = detail::build_catalog();
  return entries;
}

inline std::vector<std::string> list_entries() {
  std::vector<std::string> names;
  for (const auto& e : catalog_entries()) names.push_back(e.descriptor.name);
  return names;
}

inline const CatalogEntry* find_entry(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.descriptor.name == name) return &e;
  return nullptr;
}

struct CatalogRunResult {
  std::vector<VerificationReport> reports;
  std::vector<std::string> mismatches;
  bool ok = true;
};

// Verify every entry against its recorded surplus polynomials. Any verdict
// failure or polynomial mismatch is reported with the entry name and the
// differing values.
inline CatalogRunResult run_all() {
  CatalogRunResult result;
  for (const auto& e : catalog_entries()) {
    VerificationReport main = verify_main(e.descriptor);
    if (!main.pass())
      result.mismatches.push_back("entry '" + e.descriptor.name +
                                  "': main verification failed (" +
                                  main.failure_detail + ")");
    else if (main.quotient != e.expected_R_main)
      result.mismatches.push_back(
          "entry '" + e.descriptor.name + "': main quotient " +
          main.quotient.str() + " differs from the recorded " +
          e.expected_R_main.str());
    result.reports.push_back(std::move(main));

    if (e.expected_R_corollary) {
      VerificationReport cor = verify_corollary(e.descriptor);
      if (!cor.pass())
        result.mismatches.push_back("entry '" + e.descriptor.name +
                                    "': corollary verification failed (" +
                                    cor.failure_detail + ")");
      else if (cor.quotient != *e.expected_R_corollary)
        result.mismatches.push_back(
            "entry '" + e.descriptor.name + "': corollary quotient " +
            cor.quotient.str() + " differs from the recorded " +
            e.expected_R_corollary->str());
      result.reports.push_back(std::move(cor));
    }
  }
  result.ok = result.mismatches.empty();
  return result;
}

}  // namespace mbkit
