#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mbkit/errors.hpp"
#include "mbkit/homology.hpp"
#include "mbkit/intpoly.hpp"
#include "mbkit/matrix.hpp"

namespace mbkit {

enum class PointKind { interior, boundary_N, boundary_D };

inline std::string to_string(PointKind k) {
  switch (k) {
    case PointKind::interior: return "interior";
    case PointKind::boundary_N: return "boundary_N";
    case PointKind::boundary_D: return "boundary_D";
  }
  return "interior";
}

struct FlowCriticalPoint {
  std::string name;
  std::size_t index = 0;
  PointKind kind = PointKind::interior;
  std::string block;  // the critical submanifold this point came from

  friend bool operator==(const FlowCriticalPoint&,
                         const FlowCriticalPoint&) = default;
};

// One gradient trajectory between critical points of consecutive index.
// sign is the count contribution of the trajectory; transport is the scalar
// of the coefficient-system isomorphism along its lift, on the bases fixed
// once at authoring time (always +1 when the coefficients are untwisted).
struct FlowLine {
  std::string from;
  std::string to;
  int sign = 1;
  int transport = 1;

  friend bool operator==(const FlowLine&, const FlowLine&) = default;
};

// Supplied description of a gradient flow at desk scale: the critical points
// with their ambient indices and originating blocks, the connecting
// trajectories, and the blocks in ascending order of their critical values.
// The library audits consistency of this data; it never computes flows.
struct FlowDataset {
  std::vector<FlowCriticalPoint> critical_points;
  std::vector<FlowLine> flow_lines;
  std::vector<std::string> height_order;

  friend bool operator==(const FlowDataset&, const FlowDataset&) = default;
};

namespace detail {

inline const FlowCriticalPoint& point_by_name(const FlowDataset& fd,
                                              const std::string& name,
                                              const char* role) {
  for (const auto& p : fd.critical_points)
    if (p.name == name) return p;
  throw input_error(std::string("flow line ") + role +
                    " references undeclared point '" + name + "'");
}

}  // namespace detail

// Structural invariants of a dataset. Throws on the first violation.
inline void validate_dataset(const FlowDataset& fd) {
  std::set<std::string> names;
  std::map<std::string, PointKind> block_kind;
  for (const auto& p : fd.critical_points) {
    if (p.name.empty()) throw input_error("critical point with empty name");
    if (!names.insert(p.name).second)
      throw input_error("duplicate critical point name '" + p.name + "'");
    auto [it, fresh] = block_kind.emplace(p.block, p.kind);
    if (!fresh && it->second != p.kind)
      throw input_error("block '" + p.block +
                        "' mixes critical point kinds");
  }

  std::set<std::string> order;
  for (const auto& b : fd.height_order)
    if (!order.insert(b).second)
      throw input_error("height_order lists block '" + b + "' twice");
  for (const auto& [block, kind] : block_kind)
    if (!order.count(block))
      throw input_error("block '" + block + "' is missing from height_order");

  for (const auto& l : fd.flow_lines) {
    const auto& from = detail::point_by_name(fd, l.from, "source");
    const auto& to = detail::point_by_name(fd, l.to, "target");
    if (from.index != to.index + 1)
      throw input_error("flow line '" + l.from + "' -> '" + l.to +
                        "' violates the relative-index-one rule (indices " +
                        std::to_string(from.index) + " and " +
                        std::to_string(to.index) + ")");
    if (from.kind == PointKind::boundary_D || to.kind == PointKind::boundary_D)
      throw input_error("flow line '" + l.from + "' -> '" + l.to +
                        "' touches a type-D point, which carries no flow "
                        "lines in the type-N complex");
    if (l.sign != 1 && l.sign != -1)
      throw input_error("flow line '" + l.from + "' -> '" + l.to +
                        "' has sign outside {+1,-1}");
    if (l.transport != 1 && l.transport != -1)
      throw input_error("flow line '" + l.from + "' -> '" + l.to +
                        "' has transport outside {+1,-1}");
  }
}

// Chain data built from a dataset: per degree, the generator names (in
// dataset order) and the boundary matrix into the next degree down, with
// entry (q, p) the sum of sign * transport over the lines p -> q.
struct ChainComplexBundle {
  std::vector<std::vector<std::string>> generators;  // index = degree
  std::vector<IntegerMatrix> boundaries;  // boundaries[n]: degree n -> n-1

  std::vector<std::size_t> ranks() const {
    std::vector<std::size_t> r(generators.size());
    for (std::size_t n = 0; n < generators.size(); ++n)
      r[n] = generators[n].size();
    return r;
  }
};

// Assemble the complex. Type-D points are excluded from every chain group;
// lines touching them were already rejected by validation.
inline ChainComplexBundle build_complex(const FlowDataset& fd) {
  validate_dataset(fd);
  ChainComplexBundle cc;
  std::size_t top = 0;
  bool any = false;
  for (const auto& p : fd.critical_points)
    if (p.kind != PointKind::boundary_D) {
      top = std::max(top, p.index);
      any = true;
    }
  cc.generators.resize(any ? top + 1 : 0);
  std::map<std::string, std::pair<std::size_t, std::size_t>> position;
  for (const auto& p : fd.critical_points) {
    if (p.kind == PointKind::boundary_D) continue;
    position[p.name] = {p.index, cc.generators[p.index].size()};
    cc.generators[p.index].push_back(p.name);
  }

  for (std::size_t n = 0; n < cc.generators.size(); ++n)
    cc.boundaries.emplace_back(n == 0 ? 0 : cc.generators[n - 1].size(),
                               cc.generators[n].size());
  for (const auto& l : fd.flow_lines) {
    auto [n, col] = position.at(l.from);
    auto row = position.at(l.to).second;
    cc.boundaries[n](row, col) += Int(l.sign) * Int(l.transport);
  }
  return cc;
}

// Result of checking that consecutive boundaries compose to zero. When they
// do not, the offending matrix entry is identified by its generator pair:
// row_generator in degree `degree` - 2, column_generator in degree `degree`.
struct DSquaredAudit {
  bool ok = true;
  std::size_t degree = 0;
  std::string row_generator;
  std::string column_generator;
};

inline DSquaredAudit audit_d_squared(const ChainComplexBundle& cc) {
  DSquaredAudit audit;
  for (std::size_t n = 2; n < cc.boundaries.size(); ++n) {
    IntegerMatrix prod = cc.boundaries[n - 1] * cc.boundaries[n];
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j)
        if (prod(i, j) != 0) {
          audit.ok = false;
          audit.degree = n;
          audit.row_generator = cc.generators[n - 2][i];
          audit.column_generator = cc.generators[n][j];
          return audit;
        }
  }
  return audit;
}

inline HomologyProfile flow_homology(const ChainComplexBundle& cc) {
  return homology_of_complex(cc.ranks(), cc.boundaries);
}

// Free ranks of the complex against an expected polynomial. Only meaningful
// after audit_d_squared succeeds.
inline bool homology_vs_reference(const ChainComplexBundle& cc,
                                  const IntPolynomial& expected) {
  return flow_homology(cc).poincare() == expected;
}

struct SignTransportAudit {
  bool ok = true;
  std::string detail;
};

// Compatibility of the full dataset with its per-block restrictions: for
// every within-block flow line, the full dataset's sign must equal the
// restricted dataset's sign times its transport, line for line. The two
// datasets must cover exactly the same within-block lines; lines between the
// same pair of points are compared as multisets.
inline SignTransportAudit audit_sign_transport(const FlowDataset& fd,
                                               const FlowDataset& restricted) {
  validate_dataset(fd);
  validate_dataset(restricted);

  std::map<std::string, std::string> block_of;
  for (const auto& p : fd.critical_points) block_of[p.name] = p.block;

  using PairKey = std::pair<std::string, std::string>;
  std::map<PairKey, std::vector<int>> full, reduced;
  for (const auto& l : fd.flow_lines)
    if (block_of.at(l.from) == block_of.at(l.to))
      full[{l.from, l.to}].push_back(l.sign);
  for (const auto& l : restricted.flow_lines)
    reduced[{l.from, l.to}].push_back(l.sign * l.transport);

  for (const auto& [key, ignored] : full)
    if (!reduced.count(key))
      throw input_error("restricted dataset misses within-block lines '" +
                        key.first + "' -> '" + key.second + "'");
  for (const auto& [key, ignored] : reduced)
    if (!full.count(key))
      throw input_error("restricted dataset adds lines '" + key.first +
                        "' -> '" + key.second +
                        "' that are not within-block lines of the full "
                        "dataset");

  SignTransportAudit audit;
  for (auto& [key, signs] : full) {
    std::vector<int>& expect = reduced.at(key);
    if (signs.size() != expect.size()) {
      audit.ok = false;
      audit.detail = "line multiplicity differs on '" + key.first +
                     "' -> '" + key.second + "'";
      return audit;
    }
    std::sort(signs.begin(), signs.end());
    std::sort(expect.begin(), expect.end());
    if (signs != expect) {
      audit.ok = false;
      audit.detail = "sign/transport mismatch on '" + key.first + "' -> '" +
                     key.second + "'";
      return audit;
    }
  }
  return audit;
}

// The height-maximal block carrying a nonzero coefficient of a degree-n
// chain. coeffs indexes the degree-n generators in dataset order.
inline std::string top_chain(const FlowDataset& fd, std::size_t degree,
                             const std::vector<Int>& coeffs) {
  ChainComplexBundle cc = build_complex(fd);
  if (degree >= cc.generators.size())
    throw input_error("top_chain: no generators in degree " +
                      std::to_string(degree));
  const auto& gens = cc.generators[degree];
  if (coeffs.size() != gens.size())
    throw input_error("top_chain: coefficient vector length " +
                      std::to_string(coeffs.size()) + " does not match " +
                      std::to_string(gens.size()) + " generators");

  std::map<std::string, std::size_t> height;
  for (std::size_t i = 0; i < fd.height_order.size(); ++i)
    height[fd.height_order[i]] = i;
  std::map<std::string, std::string> block_of;
  for (const auto& p : fd.critical_points) block_of[p.name] = p.block;

  bool found = false;
  std::size_t best = 0;
  std::string best_block;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const std::string& b = block_of.at(gens[i]);
    std::size_t h = height.at(b);
    if (!found || h > best) {
      found = true;
      best = h;
      best_block = b;
    }
  }
  if (!found) throw input_error("top_chain: zero chain has no top block");
  return best_block;
}

// Per-block complexes cut out of the full dataset: only the block's points
// and the lines between them, re-graded so the block's lowest ambient index
// sits in degree zero.
struct BlockComplex {
  std::string block;
  std::size_t shift = 0;  // lowest ambient index in the block
  ChainComplexBundle complex;
};

inline std::vector<BlockComplex> split_blocks(const FlowDataset& fd) {
  validate_dataset(fd);
  std::vector<BlockComplex> out;
  for (const auto& block : fd.height_order) {
    FlowDataset sub;
    sub.height_order.push_back(block);
    std::size_t shift = 0;
    bool any = false;
    std::set<std::string> members;
    for (const auto& p : fd.critical_points) {
      if (p.block != block || p.kind == PointKind::boundary_D) continue;
      members.insert(p.name);
      shift = any ? std::min(shift, p.index) : p.index;
      any = true;
    }
    if (!any) continue;
    for (const auto& p : fd.critical_points)
      if (members.count(p.name)) {
        FlowCriticalPoint q = p;
        q.index -= shift;
        sub.critical_points.push_back(q);
      }
    for (const auto& l : fd.flow_lines)
      if (members.count(l.from) && members.count(l.to))
        sub.flow_lines.push_back(l);
    out.push_back({block, shift, build_complex(sub)});
  }
  return out;
}

// Comparison of kernel ranks: in each ambient degree n, the sum over blocks
// of the kernel rank of the block boundary (in the block's own grading,
// shifted by its lowest index) against the kernel rank of the full boundary.
// The inequality lhs >= rhs per degree is the combinatorial heart of the
// factorization theorem; on consistent data it always holds.
struct KernelRankComparison {
  std::vector<std::size_t> lhs;  // per ambient degree, summed over blocks
  std::vector<std::size_t> rhs;  // full complex
  bool holds = true;
};

inline KernelRankComparison kernel_rank_inequality(const FlowDataset& fd) {
  ChainComplexBundle full = build_complex(fd);
  DSquaredAudit full_audit = audit_d_squared(full);
  if (!full_audit.ok)
    throw input_error(
        "kernel_rank_inequality: full complex fails the boundary-squared "
        "audit at generators ('" + full_audit.row_generator + "', '" +
        full_audit.column_generator + "')");

  KernelRankComparison cmp;
  cmp.rhs.resize(full.generators.size());
  cmp.lhs.resize(full.generators.size());
  for (std::size_t n = 0; n < full.generators.size(); ++n)
    cmp.rhs[n] = kernel_rank(full.boundaries[n]);

  for (const auto& bc : split_blocks(fd)) {
    DSquaredAudit audit = audit_d_squared(bc.complex);
    if (!audit.ok)
      throw input_error("kernel_rank_inequality: block '" + bc.block +
                        "' fails the boundary-squared audit");
    for (std::size_t k = 0; k < bc.complex.boundaries.size(); ++k)
      cmp.lhs.at(bc.shift + k) += kernel_rank(bc.complex.boundaries[k]);
  }

  for (std::size_t n = 0; n < cmp.lhs.size(); ++n)
    if (cmp.lhs[n] < cmp.rhs[n]) cmp.holds = false;
  return cmp;
}

// Surplus of the complex over its own homology, as a polynomial: coefficient
// of t^(n-1) is (rank of the degree-n chain group) - (kernel rank of the
// degree-n boundary), i.e. the rank of that boundary. Multiplying by (1+t)
// and adding the free-rank polynomial of the homology reconstructs the
// generator-count polynomial degree by degree.
inline IntPolynomial surplus_polynomial(const ChainComplexBundle& cc) {
  IntPolynomial out;
  for (std::size_t n = 1; n < cc.boundaries.size(); ++n) {
    std::size_t drop =
        cc.generators[n].size() - kernel_rank(cc.boundaries[n]);
    out += IntPolynomial::monomial(Int(drop), n - 1);
  }
  return out;
}

}  // namespace mbkit
