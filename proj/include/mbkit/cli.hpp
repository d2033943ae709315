#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mbkit/catalog.hpp"
#include "mbkit/counting.hpp"
#include "mbkit/errors.hpp"
#include "mbkit/flow.hpp"
#include "mbkit/json_io.hpp"
#include "mbkit/morsify.hpp"

namespace mbkit {

// 0: all checks passed. 1: a verification ran to completion and failed.
// 2: the input could not be processed. A batch reports its worst code.
struct CommandResult {
  int exit_code = 0;
  std::string output;
};

namespace detail {

// Run fn(0..n-1) on up to MBKIT_MAX_PARALLEL threads (default: one per
// input). fn must not throw; callers store per-index results so output
// order stays the input order no matter the completion order.
template <typename Fn>
void parallel_for_ordered(std::size_t n, Fn&& fn) {
  std::size_t cap = n;
  if (const char* env = std::getenv("MBKIT_MAX_PARALLEL")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0)
      cap = std::min(static_cast<std::size_t>(v), n);
  }
  if (n <= 1 || cap <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(cap);
  for (std::size_t t = 0; t < cap; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
        fn(i);
    });
  for (auto& t : pool) t.join();
}

inline const char* yesno(bool b) { return b ? "yes" : "no"; }

inline std::string report_table_header() {
  return "| descriptor | theorem | lhs | R(t) | exact | nonnegative | "
         "verdict |\n|---|---|---|---|---|---|---|\n";
}

inline std::string report_table_row(const VerificationReport& r) {
  std::ostringstream row;
  row << "| " << r.descriptor_name << " | " << r.theorem << " | "
      << r.lhs.str() << " | " << r.quotient.str() << " | "
      << yesno(r.exact_division) << " | " << yesno(r.nonnegative) << " | "
      << r.verdict();
  if (!r.failure_detail.empty()) row << " (" << r.failure_detail << ")";
  row << " |\n";
  return row.str();
}

inline std::string torsion_summary(const HomologyProfile& h) {
  std::ostringstream out;
  bool any = false;
  for (std::size_t k = 0; k < h.degrees.size(); ++k) {
    if (h.degrees[k].torsion.empty()) continue;
    if (any) out << "; ";
    out << "[";
    for (std::size_t i = 0; i < h.degrees[k].torsion.size(); ++i) {
      if (i) out << ", ";
      out << h.degrees[k].torsion[i].str();
    }
    out << "] in degree " << k;
    any = true;
  }
  return any ? out.str() : std::string("none");
}

}  // namespace detail

struct VerifyOptions {
  bool corollary = false;
  bool via_morsification = false;
  std::string choices_path;
  std::string format = "md";  // "md" or "json"
};

inline CommandResult cmd_verify(const std::vector<std::string>& paths,
                                const VerifyOptions& opts = {}) {
  if (opts.format != "md" && opts.format != "json")
    return {2, "error: unknown format '" + opts.format + "'\n"};

  struct Item {
    int code = 0;
    json payload;        // json mode
    std::string row;     // md mode
    std::string error;
  };
  std::vector<Item> items(paths.size());

  ChoiceMap choices;
  if (!opts.choices_path.empty()) {
    try {
      choices = choices_from_json(load_json_file(opts.choices_path));
    } catch (const input_error& e) {
      return {2, std::string("error: ") + e.what() + "\n"};
    }
  }

  detail::parallel_for_ordered(paths.size(), [&](std::size_t i) {
    Item& item = items[i];
    try {
      MorseBottDescriptor d = descriptor_from_json(load_json_file(paths[i]));
      VerificationReport report;
      json payload;
      if (opts.via_morsification) {
        MorsificationReport mr = verify_main_via_morsification(d, choices);
        report = mr.base;
        payload = morsification_report_to_json(mr);
      } else if (opts.corollary) {
        report = verify_corollary(d);
        payload = report_to_json(report);
      } else {
        report = verify_main(d);
        payload = report_to_json(report);
      }
      item.code = report.pass() ? 0 : 1;
      item.payload = std::move(payload);
      item.row = detail::report_table_row(report);
    } catch (const input_error& e) {
      item.code = 2;
      item.error = e.what();
    }
  });

  CommandResult result;
  std::ostringstream out;
  if (opts.format == "json") {
    json arr = json::array();
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (items[i].code == 2)
        arr.push_back(json{{"input", paths[i]}, {"error", items[i].error}});
      else
        arr.push_back(items[i].payload);
    }
    out << arr.dump(2) << "\n";
  } else {
    bool header = false;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (items[i].code == 2) {
        out << "error (" << paths[i] << "): " << items[i].error << "\n";
        continue;
      }
      if (!header) {
        out << detail::report_table_header();
        header = true;
      }
      out << items[i].row;
    }
  }
  for (const Item& item : items)
    result.exit_code = std::max(result.exit_code, item.code);
  result.output = out.str();
  return result;
}

inline CommandResult cmd_homology(const std::string& path,
                                  const std::string& twist_path = "") {
  try {
    CellModel model =
        cell_model_from_json(load_json_file(path), "cell model");
    SignCocycle twist;
    if (!twist_path.empty())
      twist = cocycle_from_json(load_json_file(twist_path), "twist");
    HomologyProfile h = homology_profile(model, twist);
    std::ostringstream out;
    out << "P_t = " << h.poincare().str() << "\n";
    out << "torsion: " << detail::torsion_summary(h) << "\n";
    return {0, out.str()};
  } catch (const input_error& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }
}

inline CommandResult cmd_morsify(const std::string& path,
                                 const std::string& choices_path = "") {
  try {
    MorseBottDescriptor d = descriptor_from_json(load_json_file(path));
    ChoiceMap choices;
    if (!choices_path.empty())
      choices = choices_from_json(load_json_file(choices_path));

    ResolvedChoices rc = resolve_choices(d, choices);
    MorseDescriptor md = morsify(d, choices);
    IntPolynomial morsified = morse_counting_N(md);
    IntPolynomial assembled;
    for (const auto& r : rc.interior)
      assembled += r.counting.shifted(r.sub->index);
    for (const auto& r : rc.boundary_N)
      assembled += r.counting.shifted(r.sub->index);

    std::ostringstream out;
    out << "| degree | interior | type_N | type_D |\n";
    out << "|---|---|---|---|\n";
    for (std::size_t n = 0; n < md.interior.size(); ++n)
      out << "| " << n << " | " << md.interior[n] << " | " << md.type_N[n]
          << " | " << md.type_D[n] << " |\n";
    out << "counting (morsified): " << morsified.str() << "\n";
    out << "counting (assembled): " << assembled.str() << "\n";
    out << "counting identity: " << (morsified == assembled ? "pass" : "fail")
        << "\n";
    return {morsified == assembled ? 0 : 1, out.str()};
  } catch (const input_error& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }
}

inline CommandResult cmd_catalog(const std::string& action,
                                 const std::string& name = "") {
  try {
    std::ostringstream out;
    if (action == "list") {
      for (const auto& n : list_entries()) out << n << "\n";
      return {0, out.str()};
    }
    if (action == "show") {
      const CatalogEntry* e = find_entry(name);
      if (!e) throw input_error("no catalog entry named '" + name + "'");
      out << descriptor_to_json(e->descriptor).dump(2) << "\n";
      return {0, out.str()};
    }
    if (action == "run") {
      CatalogRunResult r = run_all();
      out << detail::report_table_header();
      for (const auto& report : r.reports)
        out << detail::report_table_row(report);
      for (const auto& m : r.mismatches) out << "mismatch: " << m << "\n";
      out << (r.ok ? "catalog: all entries match their recorded values\n"
                   : "catalog: mismatches found\n");
      return {r.ok ? 0 : 1, out.str()};
    }
    throw input_error("unknown catalog action '" + action +
                      "' (expected list, show, or run)");
  } catch (const input_error& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }
}

inline CommandResult cmd_flow(const std::string& path,
                              const std::string& expect_poly = "",
                              const std::string& restricted_path = "") {
  try {
    FlowDataset fd = flow_dataset_from_json(load_json_file(path));
    ChainComplexBundle cc = build_complex(fd);
    std::ostringstream out;
    bool failed = false;

    DSquaredAudit d2 = audit_d_squared(cc);
    if (d2.ok) {
      out << "boundary squared: pass\n";
    } else {
      out << "boundary squared: fail, d^2 != 0 at (" << d2.row_generator
          << ", " << d2.column_generator << ")\n";
      failed = true;
    }

    if (!failed) {
      HomologyProfile h = flow_homology(cc);
      out << "homology: " << h.poincare().str() << " (torsion: "
          << detail::torsion_summary(h) << ")\n";
      if (!expect_poly.empty()) {
        IntPolynomial expected;
        try {
          expected = polynomial_from_json(json::parse(expect_poly),
                                          "expected polynomial");
        } catch (const json::parse_error& e) {
          throw input_error(std::string("cannot parse --expect: ") +
                            e.what());
        }
        if (homology_vs_reference(cc, expected)) {
          out << "homology reference: pass\n";
        } else {
          out << "homology reference: fail, expected " << expected.str()
              << "\n";
          failed = true;
        }
      }

      if (!restricted_path.empty()) {
        FlowDataset restricted =
            flow_dataset_from_json(load_json_file(restricted_path));
        SignTransportAudit st = audit_sign_transport(fd, restricted);
        if (st.ok) {
          out << "sign transport: pass\n";
        } else {
          out << "sign transport: fail, " << st.detail << "\n";
          failed = true;
        }
      }

      KernelRankComparison kr = kernel_rank_inequality(fd);
      out << "kernel ranks per degree: block sum";
      for (std::size_t n = 0; n < kr.lhs.size(); ++n)
        out << (n ? "," : " ") << kr.lhs[n];
      out << " vs full";
      for (std::size_t n = 0; n < kr.rhs.size(); ++n)
        out << (n ? "," : " ") << kr.rhs[n];
      out << ": " << (kr.holds ? "pass" : "fail") << "\n";
      if (!kr.holds) failed = true;
    } else {
      out << "homology, sign transport, kernel ranks: skipped (boundary "
             "audit failed)\n";
    }

    return {failed ? 1 : 0, out.str()};
  } catch (const input_error& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace mbkit
