#pragma once

#include <string>

#include "tdks/experiments.hpp"
#include "tdks/propagator.hpp"

namespace tdks {

// Ledger CSV with the fixed header
//   t,charge,kinetic,hartree,external,correction,E_total,identity_rhs,identity_residual,h1_norm
// and 17-significant-digit decimal floats (lossless double round-trip).
void write_ledger(const EnergyLedger& ledger, const std::string& path);
EnergyLedger read_ledger(const std::string& path);

// Study report as JSON with stable key order, plus the table as CSV.
void write_report(const StudyReport& report, const std::string& json_path);
void write_report_table(const StudyReport& report, const std::string& csv_path);
std::string report_to_json(const StudyReport& report);

// Binary trajectory checkpoint:
//   magic "TDKS" | version u32 | grid points 3x u32 | N u32 | snapshot count
//   u32 | extents 3x f64 | per snapshot: t f64 then N * total complex values
//   as little-endian f64 pairs (snapshot-major).
// restore() returns the stored trajectory prefix (ledger left empty; it is
// recomputed after the run continues). Throws FormatError on a bad magic or
// version (naming both versions) and TruncationError on a short file.
inline constexpr std::uint32_t kCheckpointVersion = 1;
void checkpoint(const Trajectory& traj, const std::string& path);
Trajectory restore(const std::string& path);

}  // namespace tdks
