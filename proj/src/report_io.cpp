#include "fdnet/report_io.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>

#include "fdnet/config.hpp"

namespace fdnet {

using nlohmann::json;

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    return out;
}

double dbm_or_neg_inf(double watt) {
    return watt > 0.0 ? watt_to_dbm(watt) : -std::numeric_limits<double>::infinity();
}

json mean_se_json(const MeanStdErr& ms) {
    return json{{"mean_bps", ms.mean}, {"se_bps", ms.se}};
}

}  // namespace

std::string summary_json(const Report& rep) {
    json decomposition;
    auto add = [&](const char* direction, const char* term, double watt) {
        decomposition.push_back(json{{"direction", direction},
                                     {"term", term},
                                     {"mean_w", watt},
                                     {"mean_dbm", dbm_or_neg_inf(watt)}});
    };
    add("ul", "S", rep.mean_ul_power.S);
    add("ul", "I_si", rep.mean_ul_power.I_si);
    add("ul", "I_bs", rep.mean_ul_power.I_bs);
    add("ul", "I_ulmt", rep.mean_ul_power.I_ulmt);
    add("ul", "noise", rep.mean_ul_power.noise);
    add("dl", "S", rep.mean_dl_power.S);
    add("dl", "I_intra_mt", rep.mean_dl_power.I_intra_mt);
    add("dl", "I_bs", rep.mean_dl_power.I_bs);
    add("dl", "I_ulmt", rep.mean_dl_power.I_ulmt);
    add("dl", "noise", rep.mean_dl_power.noise);

    json doc{
        {"config", json::parse(serialize(rep.config))},
        {"realizations", rep.realizations},
        {"rate_ul", mean_se_json(rep.rate_ul)},
        {"rate_dl", mean_se_json(rep.rate_dl)},
        {"rate_sum", mean_se_json(rep.rate_sum)},
        {"mode_fractions",
         json{{"fd", rep.mode_frac_fd}, {"hd_ul", rep.mode_frac_hd_ul},
              {"hd_dl", rep.mode_frac_hd_dl}}},
        {"saturated_fraction", rep.saturated_fraction},
        {"mean_interferers", rep.mean_interferers},
        {"decomposition", decomposition},
    };
    return doc.dump(2) + "\n";
}

void write_cdf_csv(const std::vector<double>& sorted_samples, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "rate_bps,cdf\n";
    const double n = static_cast<double>(sorted_samples.size());
    for (std::size_t i = 0; i < sorted_samples.size(); ++i)
        out << format_double(sorted_samples[i]) << ","
            << format_double(static_cast<double>(i + 1) / n) << "\n";
}

void write_decomposition_csv(const Report& rep, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "term,direction,mean_dbm\n";
    auto row = [&](const char* term, const char* direction, double watt) {
        out << term << "," << direction << "," << format_double(dbm_or_neg_inf(watt)) << "\n";
    };
    row("S", "ul", rep.mean_ul_power.S);
    row("I_si", "ul", rep.mean_ul_power.I_si);
    row("I_bs", "ul", rep.mean_ul_power.I_bs);
    row("I_ulmt", "ul", rep.mean_ul_power.I_ulmt);
    row("noise", "ul", rep.mean_ul_power.noise);
    row("S", "dl", rep.mean_dl_power.S);
    row("I_intra_mt", "dl", rep.mean_dl_power.I_intra_mt);
    row("I_bs", "dl", rep.mean_dl_power.I_bs);
    row("I_ulmt", "dl", rep.mean_dl_power.I_ulmt);
    row("noise", "dl", rep.mean_dl_power.noise);
}

SweepRow make_sweep_row(double axis_value, const Report& rep) {
    SweepRow row;
    row.axis_value = axis_value;
    row.algorithm = to_string(rep.config.algorithm);
    row.opa = rep.config.opa_enabled
                  ? (rep.config.opa_knowledge == OpaKnowledge::Local ? "local" : "genie")
                  : "off";
    row.mean_ul_bps = rep.rate_ul.mean;
    row.mean_dl_bps = rep.rate_dl.mean;
    row.mean_sum_bps = rep.rate_sum.mean;
    row.se_sum_bps = rep.rate_sum.se;
    row.fd_fraction = rep.mode_frac_fd;
    row.saturated_fraction = rep.saturated_fraction;
    return row;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "axis_value,algorithm,opa,mean_ul_bps,mean_dl_bps,mean_sum_bps,se_sum_bps,"
           "fd_fraction,saturated_fraction\n";
    for (const auto& r : rows) {
        out << format_double(r.axis_value) << "," << r.algorithm << "," << r.opa << ","
            << format_double(r.mean_ul_bps) << "," << format_double(r.mean_dl_bps) << ","
            << format_double(r.mean_sum_bps) << "," << format_double(r.se_sum_bps) << ","
            << format_double(r.fd_fraction) << "," << format_double(r.saturated_fraction) << "\n";
    }
}

void write_topology_csv(const Topology& topo, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "kind,x_m,y_m\n";
    auto rows = [&](const char* kind, const std::vector<Vec2>& pts) {
        for (const Vec2& p : pts)
            out << kind << "," << format_double(p.x) << "," << format_double(p.y) << "\n";
    };
    rows("bs", topo.interferer_bs);
    rows("ul_mark", topo.interferer_ul_mt);
    rows("ul_cand", topo.ul_candidates);
    rows("dl_cand", topo.dl_candidates);
}

void write_output_bundle(const Report& rep, const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory: " + out_dir.string());
    {
        auto out = open_out(out_dir / "summary.json");
        out << summary_json(rep);
    }
    write_cdf_csv(rep.samples_ul, out_dir / "cdf_ul.csv");
    write_cdf_csv(rep.samples_dl, out_dir / "cdf_dl.csv");
    write_cdf_csv(rep.samples_sum, out_dir / "cdf_sum.csv");
    write_decomposition_csv(rep, out_dir / "decomposition.csv");
}

}  // namespace fdnet
