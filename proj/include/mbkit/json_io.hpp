#pragma once

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mbkit/cell_model.hpp"
#include "mbkit/counting.hpp"
#include "mbkit/descriptor.hpp"
#include "mbkit/errors.hpp"
#include "mbkit/flow.hpp"
#include "mbkit/homology.hpp"
#include "mbkit/intpoly.hpp"
#include "mbkit/morsify.hpp"

namespace mbkit {

using nlohmann::json;

namespace detail {

inline const json& require_field(const json& j, const char* key,
                                 const std::string& ctx) {
  if (!j.is_object()) throw input_error(ctx + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end())
    throw input_error(ctx + ": missing field '" + key + "'");
  return *it;
}

inline std::int64_t narrow(const Int& x, const std::string& ctx) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (x < lo || x > hi)
    throw input_error(ctx + ": integer " + x.str() +
                      " exceeds the serializable range");
  return x.convert_to<std::int64_t>();
}

inline std::int64_t expect_int(const json& j, const std::string& ctx) {
  if (!j.is_number_integer())
    throw input_error(ctx + ": expected an integer");
  return j.get<std::int64_t>();
}

inline std::string expect_string(const json& j, const std::string& ctx) {
  if (!j.is_string()) throw input_error(ctx + ": expected a string");
  return j.get<std::string>();
}

inline bool expect_bool(const json& j, const std::string& ctx) {
  if (!j.is_boolean()) throw input_error(ctx + ": expected a boolean");
  return j.get<bool>();
}

inline std::size_t expect_size(const json& j, const std::string& ctx) {
  std::int64_t v = expect_int(j, ctx);
  if (v < 0) throw input_error(ctx + ": expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

}  // namespace detail

inline json polynomial_to_json(const IntPolynomial& p) {
  json arr = json::array();
  for (const Int& c : p.coefficients())
    arr.push_back(detail::narrow(c, "polynomial coefficient"));
  return arr;
}

inline IntPolynomial polynomial_from_json(const json& j,
                                          const std::string& ctx) {
  if (!j.is_array()) throw input_error(ctx + ": expected an integer array");
  std::vector<Int> c;
  c.reserve(j.size());
  for (const auto& e : j) c.emplace_back(detail::expect_int(e, ctx));
  return IntPolynomial(std::move(c));
}

inline json cell_model_to_json(const CellModel& m) {
  json vertices = json::array();
  for (int v : m.vertices()) vertices.push_back(v);
  json simplices = json::array();
  if (!m.empty())
    for (std::size_t dim = 1; dim <= m.dimension(); ++dim)
      for (const auto& s : m.simplices(dim)) simplices.push_back(s);
  return json{{"vertices", std::move(vertices)},
              {"simplices", std::move(simplices)}};
}

inline CellModel cell_model_from_json(const json& j, const std::string& ctx) {
  CellModel m;
  const json& vertices = detail::require_field(j, "vertices", ctx);
  if (!vertices.is_array())
    throw input_error(ctx + ".vertices: expected an array");
  for (const auto& v : vertices)
    m.add_vertex(static_cast<int>(detail::expect_int(v, ctx + ".vertices")));
  const json& simplices = detail::require_field(j, "simplices", ctx);
  if (!simplices.is_array())
    throw input_error(ctx + ".simplices: expected an array");
  for (const auto& s : simplices) {
    if (!s.is_array())
      throw input_error(ctx + ".simplices: expected arrays of vertex ids");
    std::vector<int> verts;
    for (const auto& v : s)
      verts.push_back(
          static_cast<int>(detail::expect_int(v, ctx + ".simplices")));
    m.add_simplex(std::move(verts));
  }
  return m;
}

inline json cocycle_to_json(const SignCocycle& c) {
  json signs = json::array();
  for (const auto& [a, b] : c.negative_pairs())
    signs.push_back(json::array({a, b, -1}));
  return json{{"edge_signs", std::move(signs)}};
}

inline SignCocycle cocycle_from_json(const json& j, const std::string& ctx) {
  SignCocycle c;
  const json& signs = detail::require_field(j, "edge_signs", ctx);
  if (!signs.is_array())
    throw input_error(ctx + ".edge_signs: expected an array");
  for (const auto& e : signs) {
    if (!e.is_array() || e.size() != 3)
      throw input_error(ctx + ".edge_signs: expected [u, v, sign] triples");
    int u = static_cast<int>(detail::expect_int(e[0], ctx + ".edge_signs"));
    int v = static_cast<int>(detail::expect_int(e[1], ctx + ".edge_signs"));
    int s = static_cast<int>(detail::expect_int(e[2], ctx + ".edge_signs"));
    c.set(u, v, s);
  }
  return c;
}

inline json topology_to_json(const TopologyData& t) {
  if (t.polynomial) return json{{"polynomial", polynomial_to_json(*t.polynomial)}};
  if (t.cell_model) return json{{"cell_model", cell_model_to_json(*t.cell_model)}};
  return json(nullptr);
}

inline TopologyData topology_from_json(const json& j,
                                       const std::string& ctx) {
  TopologyData t;
  if (!j.is_object())
    throw input_error(ctx + ": expected {\"polynomial\": ...} or "
                            "{\"cell_model\": ...}");
  bool has_poly = j.contains("polynomial");
  bool has_model = j.contains("cell_model");
  if (has_poly == has_model)
    throw input_error(ctx + ": exactly one of 'polynomial' and 'cell_model' "
                            "must be present");
  if (has_poly)
    t.polynomial = polynomial_from_json(j["polynomial"], ctx + ".polynomial");
  else
    t.cell_model = cell_model_from_json(j["cell_model"], ctx + ".cell_model");
  return t;
}

inline json submanifold_to_json(const CriticalSubmanifold& c) {
  json j{{"name", c.name},
         {"dim", c.dim},
         {"index", c.index},
         {"topology", topology_to_json(c.topology)},
         {"oriented_bundle", c.oriented_bundle}};
  if (c.orientation_system.is_trivial())
    j["orientation_system"] = "oriented";
  else
    j["orientation_system"] = cocycle_to_json(c.orientation_system);
  return j;
}

inline CriticalSubmanifold submanifold_from_json(const json& j,
                                                 const std::string& ctx) {
  CriticalSubmanifold c;
  c.name = detail::expect_string(detail::require_field(j, "name", ctx),
                                 ctx + ".name");
  const std::string where = ctx + " '" + c.name + "'";
  c.dim = detail::expect_size(detail::require_field(j, "dim", where),
                              where + ".dim");
  c.index = detail::expect_size(detail::require_field(j, "index", where),
                                where + ".index");
  const json& topology = detail::require_field(j, "topology", where);
  if (!topology.is_null())
    c.topology = topology_from_json(topology, where + ".topology");
  const json& system = detail::require_field(j, "orientation_system", where);
  if (system.is_string()) {
    if (system.get<std::string>() != "oriented")
      throw input_error(where + ".orientation_system: the only string form "
                                "is \"oriented\"");
  } else {
    c.orientation_system =
        cocycle_from_json(system, where + ".orientation_system");
  }
  c.oriented_bundle = detail::expect_bool(
      detail::require_field(j, "oriented_bundle", where),
      where + ".oriented_bundle");
  return c;
}

inline json descriptor_to_json(const MorseBottDescriptor& d) {
  json j{{"name", d.name},
         {"ambient_dim", d.ambient_dim},
         {"manifold_oriented", d.manifold_oriented}};
  if (d.manifold_homology.present())
    j["manifold_homology"] = topology_to_json(d.manifold_homology);
  if (d.relative_homology.present())
    j["relative_homology"] = topology_to_json(d.relative_homology);
  auto dump_list = [](const std::vector<CriticalSubmanifold>& list) {
    json arr = json::array();
    for (const auto& c : list) arr.push_back(submanifold_to_json(c));
    return arr;
  };
  j["interior"] = dump_list(d.interior);
  j["boundary_N"] = dump_list(d.boundary_N);
  j["boundary_D"] = dump_list(d.boundary_D);
  return j;
}

inline MorseBottDescriptor descriptor_from_json(const json& j) {
  MorseBottDescriptor d;
  d.name = detail::expect_string(
      detail::require_field(j, "name", "descriptor"), "descriptor.name");
  const std::string ctx = "descriptor '" + d.name + "'";
  d.ambient_dim = detail::expect_size(
      detail::require_field(j, "ambient_dim", ctx), ctx + ".ambient_dim");
  d.manifold_oriented = detail::expect_bool(
      detail::require_field(j, "manifold_oriented", ctx),
      ctx + ".manifold_oriented");
  if (j.contains("manifold_homology") && !j["manifold_homology"].is_null())
    d.manifold_homology =
        topology_from_json(j["manifold_homology"], ctx + ".manifold_homology");
  if (j.contains("relative_homology") && !j["relative_homology"].is_null())
    d.relative_homology =
        topology_from_json(j["relative_homology"], ctx + ".relative_homology");
  auto load_list = [&](const char* key,
                       std::vector<CriticalSubmanifold>& into) {
    const json& arr = detail::require_field(j, key, ctx);
    if (!arr.is_array())
      throw input_error(ctx + "." + key + ": expected an array");
    for (const auto& e : arr)
      into.push_back(submanifold_from_json(e, ctx + "." + key));
  };
  load_list("interior", d.interior);
  load_list("boundary_N", d.boundary_N);
  load_list("boundary_D", d.boundary_D);
  return d;
}

inline json flow_dataset_to_json(const FlowDataset& fd) {
  json points = json::array();
  for (const auto& p : fd.critical_points)
    points.push_back(json{{"name", p.name},
                          {"index", p.index},
                          {"kind", to_string(p.kind)},
                          {"block", p.block}});
  json lines = json::array();
  for (const auto& l : fd.flow_lines)
    lines.push_back(json{{"from", l.from},
                         {"to", l.to},
                         {"sign", l.sign},
                         {"transport", l.transport}});
  return json{{"critical_points", std::move(points)},
              {"flow_lines", std::move(lines)},
              {"height_order", fd.height_order}};
}

inline FlowDataset flow_dataset_from_json(const json& j) {
  FlowDataset fd;
  const std::string ctx = "flow dataset";
  const json& points = detail::require_field(j, "critical_points", ctx);
  if (!points.is_array())
    throw input_error(ctx + ".critical_points: expected an array");
  for (const auto& e : points) {
    FlowCriticalPoint p;
    p.name = detail::expect_string(
        detail::require_field(e, "name", ctx + ".critical_points"),
        ctx + ".critical_points.name");
    p.index = detail::expect_size(
        detail::require_field(e, "index", ctx), "point '" + p.name + "'.index");
    std::string kind = detail::expect_string(
        detail::require_field(e, "kind", ctx), "point '" + p.name + "'.kind");
    if (kind == "interior")
      p.kind = PointKind::interior;
    else if (kind == "boundary_N")
      p.kind = PointKind::boundary_N;
    else if (kind == "boundary_D")
      p.kind = PointKind::boundary_D;
    else
      throw input_error("point '" + p.name + "'.kind: unknown kind '" + kind +
                        "'");
    p.block = detail::expect_string(
        detail::require_field(e, "block", ctx), "point '" + p.name +
        "'.block");
    fd.critical_points.push_back(std::move(p));
  }
  const json& lines = detail::require_field(j, "flow_lines", ctx);
  if (!lines.is_array())
    throw input_error(ctx + ".flow_lines: expected an array");
  for (const auto& e : lines) {
    FlowLine l;
    l.from = detail::expect_string(detail::require_field(e, "from", ctx),
                                   ctx + ".flow_lines.from");
    l.to = detail::expect_string(detail::require_field(e, "to", ctx),
                                 ctx + ".flow_lines.to");
    l.sign = static_cast<int>(detail::expect_int(
        detail::require_field(e, "sign", ctx), ctx + ".flow_lines.sign"));
    l.transport = static_cast<int>(
        detail::expect_int(detail::require_field(e, "transport", ctx),
                           ctx + ".flow_lines.transport"));
    fd.flow_lines.push_back(std::move(l));
  }
  const json& order = detail::require_field(j, "height_order", ctx);
  if (!order.is_array())
    throw input_error(ctx + ".height_order: expected an array");
  for (const auto& e : order)
    fd.height_order.push_back(
        detail::expect_string(e, ctx + ".height_order"));
  return fd;
}

inline ChoiceMap choices_from_json(const json& j) {
  if (!j.is_object())
    throw input_error("choices: expected an object mapping submanifold "
                      "names to count arrays");
  ChoiceMap out;
  for (const auto& [name, arr] : j.items()) {
    if (!arr.is_array())
      throw input_error("choices '" + name + "': expected an integer array");
    MorseVector v;
    for (const auto& e : arr)
      v.push_back(detail::expect_int(e, "choices '" + name + "'"));
    out[name] = std::move(v);
  }
  return out;
}

inline json report_to_json(const VerificationReport& r) {
  json j{{"descriptor", r.descriptor_name},
         {"theorem", r.theorem},
         {"lhs", polynomial_to_json(r.lhs)},
         {"quotient", polynomial_to_json(r.quotient)},
         {"exact_division", r.exact_division},
         {"nonnegative", r.nonnegative},
         {"verdict", r.verdict()}};
  if (!r.failure_detail.empty()) j["failure_detail"] = r.failure_detail;
  return j;
}

inline json morsification_report_to_json(const MorsificationReport& r) {
  json j = report_to_json(r.base);
  j["r_h"] = polynomial_to_json(r.r_h);
  j["corrections"] = polynomial_to_json(r.corrections);
  return j;
}

inline json homology_to_json(const HomologyProfile& h) {
  json degrees = json::array();
  for (const auto& d : h.degrees) {
    json torsion = json::array();
    for (const Int& t : d.torsion)
      torsion.push_back(detail::narrow(t, "torsion divisor"));
    degrees.push_back(
        json{{"free_rank", d.free_rank}, {"torsion", std::move(torsion)}});
  }
  return json{{"degrees", std::move(degrees)},
              {"poincare", polynomial_to_json(h.poincare())}};
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw input_error("malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace mbkit
