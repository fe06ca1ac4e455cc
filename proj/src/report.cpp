#include "lieval/report.hpp"

#include <json.hpp>
#include <ostream>
#include <sstream>

namespace lieval::report {

namespace {

using nlohmann::json;

json config_to_json(const bounds::SweepConfig& cfg) {
  return json{
      {"classical_r", cfg.classical_r},
      {"exceptional_r", cfg.exceptional_r},
      {"suzuki_extra", cfg.suzuki_extra},
      {"ree_extra", cfg.ree_extra},
      {"m_max", cfg.m_max},
      {"p_max", cfg.p_max},
      {"alt_m_max", cfg.alt_m_max},
      {"artin_r_max", cfg.artin_r_max},
      {"artin_m_max", cfg.artin_m_max},
      {"inline_r_max", cfg.inline_r_max},
      {"inline_m_max", cfg.inline_m_max},
      {"fact_r_max", cfg.fact_r_max},
      {"suzuki_e_max", cfg.suzuki_e_max},
      {"element_cap", cfg.element_cap},
      {"vertex_cap", cfg.vertex_cap},
  };
}

json record_to_json(const bounds::BoundReport& rep) {
  json j{
      {"kind", bounds::check_kind_label(rep.kind)},
      {"holds", rep.holds},
  };
  if (rep.group) {
    j["group"] = catalog::to_string(*rep.group);
    j["family"] = catalog::family_name(rep.group->family);
  }
  if (rep.a_kind) j["a"] = bounds::artin_kind_label(*rep.a_kind);
  if (rep.r) j["r"] = rep.r;
  if (rep.m) j["m"] = rep.m;
  if (rep.p) j["p"] = rep.p;
  if (!rep.bound.empty()) j["bound"] = rep.bound;
  if (!rep.applicable) {
    j["applicable"] = false;
  } else if (rep.grid_checked) {
    j["grid_checked"] = rep.grid_checked;
    j["grid_violations"] = rep.grid_violations;
  } else {
    j["valuation"] = rep.valuation;
    j["slack"] = rep.slack;
  }
  return j;
}

std::string csv_escape(std::string s) {
  for (auto& c : s)
    if (c == ',') c = ';';
  return s;
}

void write_record_csv(std::ostream& os, const bounds::BoundReport& rep) {
  os << bounds::check_kind_label(rep.kind) << ','
     << (rep.group ? catalog::to_string(*rep.group) : "") << ','
     << (rep.a_kind ? bounds::artin_kind_label(*rep.a_kind) : "") << ',' << rep.r << ',' << rep.m
     << ',' << rep.p << ',' << rep.valuation << ',' << (rep.applicable ? "" : "n/a") << ','
     << (rep.holds ? "1" : "0") << ',' << csv_escape(rep.bound) << '\n';
}

}  // namespace

std::string config_json(const bounds::SweepConfig& cfg) { return config_to_json(cfg).dump(); }

void write_verify(std::ostream& os, std::string_view selector, const bounds::SweepConfig& cfg,
                  const bounds::VerifyResult& res, Format format) {
  const auto& sum = res.summary;
  if (format == Format::Json) {
    json meta{{"meta",
               {{"tool", kToolName},
                {"version", kToolVersion},
                {"command", "verify"},
                {"selector", std::string(selector)},
                {"config", config_to_json(cfg)}}}};
    os << meta.dump() << '\n';
    for (const auto& rep : res.records) os << record_to_json(rep).dump() << '\n';
    json summary{{"summary",
                  {{"checked", sum.checked},
                   {"held", sum.held},
                   {"violated", sum.violated},
                   {"skipped", sum.skipped}}}};
    os << summary.dump() << '\n';
    return;
  }
  if (format == Format::Csv) {
    os << "kind,group,a,r,m,p,valuation,applicable,holds,bound\n";
    for (const auto& rep : res.records) write_record_csv(os, rep);
    os << "summary,,,,,," << sum.checked << ",held=" << sum.held
       << ",violated=" << sum.violated << ",skipped=" << sum.skipped << '\n';
    return;
  }
  // Human table: per-kind tallies plus full detail for violations only.
  os << kToolName << ' ' << kToolVersion << " verify " << selector << '\n';
  struct Tally {
    std::uint64_t records = 0, violations = 0;
  };
  std::vector<std::pair<bounds::CheckKind, Tally>> tallies;
  auto tally_for = [&](bounds::CheckKind k) -> Tally& {
    for (auto& [kind, t] : tallies)
      if (kind == k) return t;
    tallies.emplace_back(k, Tally{});
    return tallies.back().second;
  };
  for (const auto& rep : res.records) {
    auto& t = tally_for(rep.kind);
    t.records += rep.grid_checked ? rep.grid_checked : 1;
    if (!rep.holds) ++t.violations;
  }
  for (const auto& [kind, t] : tallies) {
    os << "  " << bounds::check_kind_label(kind) << ": " << t.records << " checks, "
       << t.violations << " violations\n";
  }
  for (const auto& rep : res.records) {
    if (rep.holds) continue;
    os << "  VIOLATION " << record_to_json(rep).dump() << '\n';
  }
  os << "checked " << sum.checked << ", held " << sum.held << ", violated " << sum.violated
     << ", skipped " << sum.skipped << '\n';
}

void write_estimates(std::ostream& os, const bounds::SweepConfig& cfg,
                     const std::vector<bounds::ConstantEstimate>& estimates) {
  json meta{{"meta",
             {{"tool", kToolName},
              {"version", kToolVersion},
              {"command", "estimate"},
              {"config", config_to_json(cfg)}}}};
  os << meta.dump() << '\n';
  for (const auto& est : estimates) {
    json j{{"quantity", est.quantity},
           {"supremum", rational_str(est.supremum)},
           {"supremum_approx", rational_double(est.supremum)},
           {"witness", est.witness}};
    os << j.dump() << '\n';
  }
  json summary{{"summary", {{"quantities", estimates.size()}}}};
  os << summary.dump() << '\n';
}

void write_orbitals(std::ostream& os, const affine::MatrixGroupSpec& spec, bool irreducible,
                    const std::vector<OrbitalReportRow>& rows, Format format) {
  const std::uint64_t bound = (spec.p - 1) * spec.n;
  auto rep_vec = [&](affine::Code c) {
    auto v = affine::decode_vec(c, spec.p, spec.n);
    std::string s = "(";
    for (unsigned i = 0; i < spec.n; ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + ")";
  };
  if (format == Format::Json) {
    json meta{{"meta",
               {{"tool", kToolName},
                {"version", kToolVersion},
                {"command", "orbital"},
                {"p", spec.p},
                {"n", spec.n},
                {"generators", spec.generators.size()},
                {"irreducible", irreducible},
                {"diameter_bound", bound}}}};
    os << meta.dump() << '\n';
    for (const auto& row : rows) {
      json j{{"representative", rep_vec(row.result.representative)},
             {"orbit_size", row.result.orbit_size},
             {"diameter_bound_holds", row.result.diameter_bound_holds}};
      if (row.result.diameter)
        j["diameter"] = *row.result.diameter;
      else
        j["diameter"] = nullptr;
      if (row.result.undirected_diameter) j["undirected_diameter"] = *row.result.undirected_diameter;
      if (row.result.cp_diameter_ratio) {
        j["cp_diameter_ratio"] = rational_str(*row.result.cp_diameter_ratio);
        j["cp_diameter_ratio_approx"] = rational_double(*row.result.cp_diameter_ratio);
      }
      if (row.group_order_known) j["group_order"] = row.group_order;
      os << j.dump() << '\n';
    }
    std::uint64_t violations = 0;
    for (const auto& row : rows)
      if (!row.result.diameter_bound_holds) ++violations;
    json summary{{"summary", {{"orbitals", rows.size()}, {"bound_violations", violations}}}};
    os << summary.dump() << '\n';
    return;
  }
  os << kToolName << ' ' << kToolVersion << " orbital: p=" << spec.p << " n=" << spec.n
     << " generators=" << spec.generators.size() << " irreducible=" << (irreducible ? "yes" : "no")
     << " bound=(p-1)n=" << bound << '\n';
  for (const auto& row : rows) {
    os << "  orbit " << rep_vec(row.result.representative) << " size " << row.result.orbit_size
       << ": diameter ";
    if (row.result.diameter)
      os << *row.result.diameter;
    else
      os << "infinite";
    if (row.result.undirected_diameter) os << " (undirected " << *row.result.undirected_diameter << ")";
    os << (row.result.diameter_bound_holds ? " <= " : " EXCEEDS ") << bound;
    if (row.result.cp_diameter_ratio)
      os << ", diameter*cp/n^2 = " << rational_str(*row.result.cp_diameter_ratio);
    os << '\n';
  }
}

}  // namespace lieval::report
