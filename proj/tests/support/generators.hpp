#pragma once

// Seeded random generators for property tests. Everything takes the engine
// by reference so a test controls its own seed and stays reproducible.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mbkit/catalog.hpp"
#include "mbkit/cell_model.hpp"
#include "mbkit/counting.hpp"
#include "mbkit/descriptor.hpp"
#include "mbkit/intpoly.hpp"
#include "mbkit/matrix.hpp"
#include "mbkit/morsify.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline long rand_long(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline mbkit::IntegerMatrix random_matrix(Rng& rng, std::size_t max_dim = 5,
                                          long lo = -4, long hi = 4) {
  const std::size_t rows = static_cast<std::size_t>(rand_long(rng, 1, max_dim));
  const std::size_t cols = static_cast<std::size_t>(rand_long(rng, 1, max_dim));
  mbkit::IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rand_long(rng, lo, hi);
  return m;
}

inline mbkit::IntPolynomial random_polynomial(Rng& rng, long max_deg = 6,
                                              long lo = -5, long hi = 5) {
  std::vector<mbkit::Int> coeffs(
      static_cast<std::size_t>(rand_long(rng, 0, max_deg + 1)));
  for (auto& c : coeffs) c = rand_long(rng, lo, hi);
  return mbkit::IntPolynomial(coeffs);
}

inline mbkit::IntPolynomial random_nonneg_polynomial(Rng& rng,
                                                     long max_deg = 4,
                                                     long hi = 3) {
  return random_polynomial(rng, max_deg, 0, hi);
}

// A random simplicial complex on up to 7 vertices. Faces of everything
// added are filled in automatically, so the result is always closed under
// taking faces and its boundary operators compose to zero by construction.
inline mbkit::CellModel random_cell_model(Rng& rng) {
  mbkit::CellModel m;
  const long n = rand_long(rng, 3, 7);
  for (long v = 0; v < n; ++v) m.add_vertex(static_cast<int>(v));
  const long triangles = rand_long(rng, 0, 4);
  for (long i = 0; i < triangles; ++i) {
    int a = static_cast<int>(rand_long(rng, 0, n - 1));
    int b = static_cast<int>(rand_long(rng, 0, n - 1));
    int c = static_cast<int>(rand_long(rng, 0, n - 1));
    if (a == b || b == c || a == c) continue;
    m.add_simplex({a, b, c});
  }
  const long edges = rand_long(rng, 0, 6);
  for (long i = 0; i < edges; ++i) {
    int a = static_cast<int>(rand_long(rng, 0, n - 1));
    int b = static_cast<int>(rand_long(rng, 0, n - 1));
    if (a == b) continue;
    m.add_simplex({a, b});
  }
  return m;
}

// Sample a uniformly random valid sign assignment: solve the mod-2 linear
// system "each triangle's three edge bits sum to zero" by elimination,
// assign free variables random bits, and back-substitute the pivots.
inline mbkit::SignCocycle random_cocycle(Rng& rng,
                                         const mbkit::CellModel& model) {
  const auto edge_list = model.dimension() >= 1
                             ? model.simplices(1)
                             : std::vector<std::vector<int>>{};
  const std::size_t ne = edge_list.size();
  std::map<std::pair<int, int>, std::size_t> edge_index;
  for (std::size_t i = 0; i < ne; ++i)
    edge_index[{edge_list[i][0], edge_list[i][1]}] = i;

  std::vector<std::vector<std::uint8_t>> rows;
  if (model.dimension() >= 2)
    for (const auto& tri : model.simplices(2)) {
      std::vector<std::uint8_t> row(ne, 0);
      row[edge_index.at({tri[0], tri[1]})] ^= 1;
      row[edge_index.at({tri[1], tri[2]})] ^= 1;
      row[edge_index.at({tri[0], tri[2]})] ^= 1;
      rows.push_back(std::move(row));
    }

  std::vector<std::size_t> pivot_col;
  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows.size() && lead < ne; ++r) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][lead] == 0) ++sel;
    if (sel == rows.size()) {
      ++lead;
      --r;
      continue;
    }
    std::swap(rows[r], rows[sel]);
    for (std::size_t rr = 0; rr < rows.size(); ++rr)
      if (rr != r && rows[rr][lead])
        for (std::size_t c = 0; c < ne; ++c) rows[rr][c] ^= rows[r][c];
    pivot_col.push_back(lead);
    ++lead;
  }

  std::vector<std::uint8_t> x(ne, 0);
  std::vector<bool> is_pivot(ne, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  for (std::size_t c = 0; c < ne; ++c)
    if (!is_pivot[c]) x[c] = static_cast<std::uint8_t>(rand_long(rng, 0, 1));
  for (std::size_t r = pivot_col.size(); r-- > 0;) {
    std::uint8_t v = 0;
    for (std::size_t c = pivot_col[r] + 1; c < ne; ++c)
      if (rows[r][c]) v ^= x[c];
    x[pivot_col[r]] = v;
  }

  mbkit::SignCocycle tw;
  for (std::size_t i = 0; i < ne; ++i)
    if (x[i]) tw.set(edge_list[i][0], edge_list[i][1], -1);
  return tw;
}

// An admissible count vector for one critical piece: its counting
// polynomial must exceed the piece's twisted polynomial by a multiple of
// 1 + t with nonnegative quotient, so build it as exactly that.
inline mbkit::MorseVector random_admissible_counts(
    Rng& rng, const mbkit::CriticalSubmanifold& piece) {
  mbkit::IntPolynomial p = mbkit::submanifold_poincare(piece);
  long surplus_deg = static_cast<long>(piece.dim) - 1;
  mbkit::IntPolynomial r;
  if (surplus_deg >= 0) r = random_nonneg_polynomial(rng, surplus_deg, 2);
  if (p.evaluate(1) == 0 && r.evaluate(1) == 0)
    r += mbkit::IntPolynomial::one();
  mbkit::IntPolynomial counts =
      p + mbkit::IntPolynomial({1, 1}) * r;
  mbkit::MorseVector out(piece.dim + 1, 0);
  for (std::size_t k = 0; k <= piece.dim; ++k)
    out[k] = static_cast<long long>(counts.coefficient(k));
  return out;
}

// A structurally valid descriptor whose pieces draw from the reference
// models. No manifold homology is attached; these exist to exercise the
// counting identity, not the factorization theorems.
inline mbkit::MorseBottDescriptor random_descriptor(Rng& rng) {
  using mbkit::CriticalSubmanifold;
  using mbkit::TopologyData;
  mbkit::MorseBottDescriptor d;
  d.name = "random";
  d.ambient_dim = 3;
  int counter = 0;
  auto make_piece = [&](std::size_t index_bound) {
    CriticalSubmanifold c;
    switch (rand_long(rng, 0, 2)) {
      case 0:
        c.dim = 0;
        c.topology.cell_model = mbkit::models::point();
        break;
      case 1:
        c.dim = 1;
        c.topology.cell_model = mbkit::models::circle();
        break;
      default:
        c.dim = 2;
        c.topology.cell_model = mbkit::models::sphere();
        break;
    }
    c.name = "piece" + std::to_string(counter++);
    const long bound = static_cast<long>(index_bound) - static_cast<long>(c.dim);
    c.index = static_cast<std::size_t>(rand_long(rng, 0, bound));
    return c;
  };
  const long ni = rand_long(rng, 1, 3);
  for (long i = 0; i < ni; ++i)
    d.interior.push_back(make_piece(d.ambient_dim));
  const long nn = rand_long(rng, 0, 2);
  for (long i = 0; i < nn; ++i)
    d.boundary_N.push_back(make_piece(d.ambient_dim - 1));
  const long nd = rand_long(rng, 0, 2);
  for (long i = 0; i < nd; ++i)
    d.boundary_D.push_back(make_piece(d.ambient_dim - 1));
  return d;
}

// Choices for every piece of d, each admissible by construction.
inline mbkit::ChoiceMap random_admissible_choices(
    Rng& rng, const mbkit::MorseBottDescriptor& d) {
  mbkit::ChoiceMap choices;
  for (const auto* group : {&d.interior, &d.boundary_N, &d.boundary_D})
    for (const auto& piece : *group)
      choices[piece.name] = random_admissible_counts(rng, piece);
  return choices;
}

}  // namespace gen
