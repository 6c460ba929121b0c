#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "fock.hpp"
#include "marcus.hpp"
#include "rate.hpp"
#include "sweep.hpp"

namespace pmet {

// CSV conventions: comma separated, '\n' line ends, '.' decimal point, floats
// in %.16e (17 significant digits), NaN written as "nan", booleans as 0/1.

/// %.16e, or "nan" / "inf" / "-inf".
std::string format_double(double v);

/// Header: v_eff,delta_g,activation,rate
void write_marcus_csv(std::ostream& os, const MarcusResult& r);

/// Header: n,m,p_n,f_direct,f_bridge,f_total,delta_g,partial_rate,pole_skipped.
/// An empty table yields the header alone.
void write_channel_csv(std::ostream& os, const ChannelTable& table);

/// One "summary" record followed by one "channel" record per row, sharing the header
///   record,total_rate,pathway,n_max,l_max,m_max,converged,relative_change,poles_skipped,
///   n,m,p_n,f_direct,f_bridge,f_total,delta_g,partial_rate,pole_skipped
/// Fields that do not apply to a record are empty.
void write_rate_csv(std::ostream& os, const RateResult& r);

/// Header row "n\m,0,1,...", then one row per n with its index first.
void write_overlap_csv(std::ostream& os, const OverlapMatrix& s);

/// Header: axis_value,rate,total_rate,direct_rate,bridge_rate,n_max,l_max,m_max,converged,poles_skipped
void write_sweep_csv(std::ostream& os, const SweepResult& r);

/// Sidecar document: config hash, axis, mode, pathway, constants, per-point
/// truncation history and a UTC timestamp.
nlohmann::json sweep_metadata(const SweepResult& r);

/// Writes `text` to `path`, or to stdout when path is empty or "-".
/// Throws IoError carrying the system error text.
void emit_text(const std::string& text, const std::filesystem::path& path);

}  // namespace pmet
