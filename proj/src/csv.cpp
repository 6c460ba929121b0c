#include "csv.hpp"

#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <ctime>
#include <fstream>
#include <iostream>

#include "constants.hpp"
#include "error.hpp"

namespace pmet {

std::string format_double(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

namespace {

const char* flag(bool b) { return b ? "1" : "0"; }

void channel_fields(std::ostream& os, const ChannelRow& row)
{
    os << row.n << ',' << row.m << ',' << format_double(row.p_n) << ',' << format_double(row.f_direct) << ','
       << format_double(row.f_bridge) << ',' << format_double(row.f_total) << ',' << format_double(row.delta_g) << ','
       << format_double(row.partial_rate) << ',' << flag(row.pole_skipped);
}

}  // namespace

void write_marcus_csv(std::ostream& os, const MarcusResult& r)
{
    os << "v_eff,delta_g,activation,rate\n";
    os << format_double(r.v_eff) << ',' << format_double(r.delta_g) << ',' << format_double(r.activation) << ','
       << format_double(r.rate) << '\n';
}

void write_channel_csv(std::ostream& os, const ChannelTable& table)
{
    os << "n,m,p_n,f_direct,f_bridge,f_total,delta_g,partial_rate,pole_skipped\n";
    for (const ChannelRow& row : table.rows) {
        channel_fields(os, row);
        os << '\n';
    }
}

void write_rate_csv(std::ostream& os, const RateResult& r)
{
    os << "record,total_rate,pathway,n_max,l_max,m_max,converged,relative_change,poles_skipped,"
          "n,m,p_n,f_direct,f_bridge,f_total,delta_g,partial_rate,pole_skipped\n";
    os << "summary," << format_double(r.total_rate) << ',' << to_string(r.pathway) << ',' << r.truncation_used.n_max
       << ',' << r.truncation_used.l_max << ',' << r.truncation_used.m_max << ',' << flag(r.converged) << ','
       << format_double(r.relative_change) << ',' << r.poles_skipped << ",,,,,,,,,\n";
    for (const ChannelRow& row : r.table.rows) {
        os << "channel,,,,,,,,,";
        channel_fields(os, row);
        os << '\n';
    }
}

void write_overlap_csv(std::ostream& os, const OverlapMatrix& s)
{
    os << "n\\m";
    for (std::size_t m = 0; m < s.size(); ++m)
        os << ',' << m;
    os << '\n';
    for (std::size_t n = 0; n < s.size(); ++n) {
        os << n;
        for (std::size_t m = 0; m < s.size(); ++m)
            os << ',' << format_double(s(n, m));
        os << '\n';
    }
}

void write_sweep_csv(std::ostream& os, const SweepResult& r)
{
    os << "axis_value,rate,total_rate,direct_rate,bridge_rate,n_max,l_max,m_max,converged,poles_skipped\n";
    for (const SweepRow& row : r.rows) {
        os << format_double(row.value) << ',' << format_double(row.rate) << ',' << format_double(row.total) << ','
           << format_double(row.direct) << ',' << format_double(row.bridge) << ',' << row.cutoffs.n_max << ','
           << row.cutoffs.l_max << ',' << row.cutoffs.m_max << ',' << flag(row.converged) << ',' << row.poles_skipped
           << '\n';
    }
}

nlohmann::json sweep_metadata(const SweepResult& r)
{
    nlohmann::json j;
    j["config_hash"] = r.config_hash;
    j["axis"] = std::string(to_string(r.axis));
    j["mode"] = std::string(to_string(r.mode));
    j["pathway"] = std::string(to_string(r.pathway));
    j["constants"] = {{"hbar_ev_s", kHbarEvS},
                      {"k_b_ev_per_k", kBoltzmannEvPerK},
                      {"pole_guard_ev", kPoleGuardEv},
                      {"negligible_coupling_ev", kNegligibleCouplingEv}};
    nlohmann::json points = nlohmann::json::array();
    for (const SweepRow& row : r.rows) {
        nlohmann::json steps = nlohmann::json::array();
        for (const TruncationStep& s : row.history)
            steps.push_back({{"n_max", s.cutoffs.n_max}, {"l_max", s.cutoffs.l_max}, {"m_max", s.cutoffs.m_max},
                             {"rate", s.rate}});
        points.push_back({{"axis_value", row.value}, {"truncation_history", steps}});
    }
    j["points"] = points;

    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);
    j["timestamp"] = stamp;
    return j;
}

void emit_text(const std::string& text, const std::filesystem::path& path)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        if (!std::cout)
            throw IoError("failed writing to standard output");
        return;
    }
    errno = 0;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + path.string() + " for writing: " + std::strerror(errno));
    out << text;
    out.close();
    if (!out)
        throw IoError("failed writing " + path.string() + ": " + std::strerror(errno));
}

}  // namespace pmet
