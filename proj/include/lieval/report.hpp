#pragma once

#include <iosfwd>
#include <string>

#include "lieval/affine.hpp"
#include "lieval/bounds.hpp"

namespace lieval::report {

inline constexpr const char* kToolName = "lieval";
inline constexpr const char* kToolVersion = "0.1.0";

enum class Format { Table, Json, Csv };

// Stable textual echo of the configuration (sorted keys, no environment or
// time dependence) so identical runs emit byte-identical reports.
std::string config_json(const bounds::SweepConfig& cfg);

// meta line, then records in canonical order, then one summary line.
void write_verify(std::ostream& os, std::string_view selector,
                  const bounds::SweepConfig& cfg, const bounds::VerifyResult& res,
                  Format format);

void write_estimates(std::ostream& os, const bounds::SweepConfig& cfg,
                     const std::vector<bounds::ConstantEstimate>& estimates);

struct OrbitalReportRow {
  affine::OrbitalResult result;
  std::uint64_t group_order = 0;  // 0 = closure cap exceeded
  bool group_order_known = false;
};

void write_orbitals(std::ostream& os, const affine::MatrixGroupSpec& spec,
                    bool irreducible, const std::vector<OrbitalReportRow>& rows,
                    Format format);

}  // namespace lieval::report
