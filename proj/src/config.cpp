#include "fdnet/config.hpp"

#include <json.hpp>

#include <set>
#include <vector>

namespace fdnet {

using nlohmann::json;

double noise_power(double bandwidth_hz, double noise_figure_db) {
    if (bandwidth_hz <= 0.0) throw std::invalid_argument("noise_power: bandwidth must be > 0");
    return dbm_to_watt(-174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db);
}

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::Alg1: return "ALG1";
        case Algorithm::Alg2: return "ALG2";
        case Algorithm::Alg3: return "ALG3";
    }
    return "ALG1";
}

std::string to_string(OpaKnowledge k) {
    return k == OpaKnowledge::Local ? "LOCAL" : "GENIE";
}

PathlossProfile default_pathloss_profile() {
    // Indoor-hotspot-flavored single-slope NLOS laws per link class.
    PathlossProfile p;
    p.bs_mt = {167.4, 43.3, 4.0, 3.0};
    p.mt_bs = {167.4, 43.3, 4.0, 3.0};
    p.bs_bs = {169.36, 40.0, 6.0, 10.0};
    p.mt_mt = {160.0, 43.3, 4.0, 3.0};
    return p;
}

namespace {

Algorithm parse_algorithm(const std::string& s) {
    if (s == "ALG1") return Algorithm::Alg1;
    if (s == "ALG2") return Algorithm::Alg2;
    if (s == "ALG3") return Algorithm::Alg3;
    throw ParseError("algorithm must be one of ALG1, ALG2, ALG3; got \"" + s + "\"");
}

OpaKnowledge parse_knowledge(const std::string& s) {
    if (s == "LOCAL") return OpaKnowledge::Local;
    if (s == "GENIE") return OpaKnowledge::Genie;
    throw ParseError("opa_knowledge must be LOCAL or GENIE; got \"" + s + "\"");
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!known.count(it.key()))
            throw ParseError("unknown key \"" + it.key() + "\" in " + where);
    }
}

PathlossLaw parse_law(const json& obj, const std::string& where) {
    static const std::set<std::string> known = {
        "intercept_db", "slope_db_per_decade", "shadowing_sigma_db", "min_distance_m"};
    reject_unknown_keys(obj, known, where);
    PathlossLaw law;
    if (obj.contains("intercept_db")) law.intercept_db = obj["intercept_db"].get<double>();
    if (obj.contains("slope_db_per_decade"))
        law.slope_db_per_decade = obj["slope_db_per_decade"].get<double>();
    if (obj.contains("shadowing_sigma_db"))
        law.shadowing_sigma_db = obj["shadowing_sigma_db"].get<double>();
    if (obj.contains("min_distance_m")) law.min_distance_m = obj["min_distance_m"].get<double>();
    return law;
}

json law_to_json(const PathlossLaw& law) {
    return json{{"intercept_db", law.intercept_db},
                {"slope_db_per_decade", law.slope_db_per_decade},
                {"shadowing_sigma_db", law.shadowing_sigma_db},
                {"min_distance_m", law.min_distance_m}};
}

}  // namespace

void validate(const SimConfig& cfg) {
    std::vector<std::string> bad;
    auto require = [&](bool ok, const std::string& name) {
        if (!ok) bad.push_back(name);
    };
    require(cfg.lambda_bs >= 0.0, "lambda_bs");
    require(cfg.window_radius > 0.0, "window_radius");
    require(cfg.r0 > 0.0, "r0");
    require(cfg.window_radius >= 4.0 * cfg.r0, "window_radius (must be >= 4*r0)");
    require(cfg.num_ul_candidates >= 1, "num_ul_candidates");
    require(cfg.num_dl_candidates >= 1, "num_dl_candidates");
    require(cfg.n_tx >= 1, "n_tx");
    require(cfg.n_rx >= 1, "n_rx");
    require(std::isfinite(cfg.p_ul_max), "p_ul_max");
    require(std::isfinite(cfg.p_dl_max), "p_dl_max");
    require(cfg.sic_capability >= 0.0, "sic_capability");
    require(cfg.bandwidth > 0.0, "bandwidth");
    require(std::isfinite(cfg.noise_figure_bs), "noise_figure_bs");
    require(std::isfinite(cfg.noise_figure_mt), "noise_figure_mt");
    require(cfg.realizations >= 1, "realizations");
    require(cfg.mark_radius_sq > 0.0, "mark_radius_sq");
    require(cfg.hardcore_attempt_budget >= 1, "hardcore_attempt_budget");

    auto check_law = [&](const PathlossLaw& law, const std::string& name) {
        require(law.slope_db_per_decade > 0.0, "pathloss_profile." + name + ".slope_db_per_decade");
        require(law.shadowing_sigma_db >= 0.0, "pathloss_profile." + name + ".shadowing_sigma_db");
        require(law.min_distance_m > 0.0, "pathloss_profile." + name + ".min_distance_m");
    };
    check_law(cfg.pathloss_profile.bs_mt, "bs_mt");
    check_law(cfg.pathloss_profile.mt_bs, "mt_bs");
    check_law(cfg.pathloss_profile.bs_bs, "bs_bs");
    check_law(cfg.pathloss_profile.mt_mt, "mt_mt");

    if (!bad.empty()) {
        std::string msg = "invalid config:";
        for (const auto& name : bad) msg += " " + name + ";";
        throw ValidationError(msg);
    }
}

SimConfig load_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("config parse error: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("config document must be a JSON object");

    static const std::set<std::string> known = {
        "lambda_bs", "window_radius", "r0", "num_ul_candidates", "num_dl_candidates",
        "n_tx", "n_rx", "p_ul_max", "p_dl_max", "sic_capability", "bandwidth",
        "noise_figure_bs", "noise_figure_mt", "algorithm", "opa_enabled", "opa_knowledge",
        "realizations", "seed", "mark_radius_sq", "hardcore_attempt_budget",
        "pathloss_profile"};
    reject_unknown_keys(doc, known, "config");

    SimConfig cfg;
    try {
        if (doc.contains("lambda_bs")) cfg.lambda_bs = doc["lambda_bs"].get<double>();
        if (doc.contains("window_radius")) cfg.window_radius = doc["window_radius"].get<double>();
        if (doc.contains("r0")) cfg.r0 = doc["r0"].get<double>();
        if (doc.contains("num_ul_candidates"))
            cfg.num_ul_candidates = doc["num_ul_candidates"].get<int>();
        if (doc.contains("num_dl_candidates"))
            cfg.num_dl_candidates = doc["num_dl_candidates"].get<int>();
        if (doc.contains("n_tx")) cfg.n_tx = doc["n_tx"].get<int>();
        if (doc.contains("n_rx")) cfg.n_rx = doc["n_rx"].get<int>();
        if (doc.contains("p_ul_max")) cfg.p_ul_max = doc["p_ul_max"].get<double>();
        if (doc.contains("p_dl_max")) cfg.p_dl_max = doc["p_dl_max"].get<double>();
        if (doc.contains("sic_capability")) cfg.sic_capability = doc["sic_capability"].get<double>();
        if (doc.contains("bandwidth")) cfg.bandwidth = doc["bandwidth"].get<double>();
        if (doc.contains("noise_figure_bs"))
            cfg.noise_figure_bs = doc["noise_figure_bs"].get<double>();
        if (doc.contains("noise_figure_mt"))
            cfg.noise_figure_mt = doc["noise_figure_mt"].get<double>();
        if (doc.contains("algorithm")) cfg.algorithm = parse_algorithm(doc["algorithm"].get<std::string>());
        if (doc.contains("opa_enabled")) cfg.opa_enabled = doc["opa_enabled"].get<bool>();
        if (doc.contains("opa_knowledge"))
            cfg.opa_knowledge = parse_knowledge(doc["opa_knowledge"].get<std::string>());
        if (doc.contains("realizations")) cfg.realizations = doc["realizations"].get<std::int64_t>();
        if (doc.contains("seed")) cfg.seed = doc["seed"].get<std::uint64_t>();
        if (doc.contains("hardcore_attempt_budget"))
            cfg.hardcore_attempt_budget = doc["hardcore_attempt_budget"].get<int>();

        if (doc.contains("pathloss_profile")) {
            const json& prof = doc["pathloss_profile"];
            static const std::set<std::string> classes = {"bs_mt", "mt_bs", "bs_bs", "mt_mt"};
            reject_unknown_keys(prof, classes, "pathloss_profile");
            if (prof.contains("bs_mt"))
                cfg.pathloss_profile.bs_mt = parse_law(prof["bs_mt"], "pathloss_profile.bs_mt");
            if (prof.contains("mt_bs"))
                cfg.pathloss_profile.mt_bs = parse_law(prof["mt_bs"], "pathloss_profile.mt_bs");
            if (prof.contains("bs_bs"))
                cfg.pathloss_profile.bs_bs = parse_law(prof["bs_bs"], "pathloss_profile.bs_bs");
            if (prof.contains("mt_mt"))
                cfg.pathloss_profile.mt_mt = parse_law(prof["mt_mt"], "pathloss_profile.mt_mt");
        }

        // The mark radius defaults to r0^2, which may differ from the
        // compiled-in baseline when r0 is overridden.
        if (doc.contains("mark_radius_sq"))
            cfg.mark_radius_sq = doc["mark_radius_sq"].get<double>();
        else
            cfg.mark_radius_sq = cfg.r0 * cfg.r0;
    } catch (const json::exception& e) {
        throw ParseError(std::string("config type error: ") + e.what());
    }

    validate(cfg);
    return cfg;
}

std::string serialize(const SimConfig& cfg) {
    json doc{
        {"lambda_bs", cfg.lambda_bs},
        {"window_radius", cfg.window_radius},
        {"r0", cfg.r0},
        {"num_ul_candidates", cfg.num_ul_candidates},
        {"num_dl_candidates", cfg.num_dl_candidates},
        {"n_tx", cfg.n_tx},
        {"n_rx", cfg.n_rx},
        {"p_ul_max", cfg.p_ul_max},
        {"p_dl_max", cfg.p_dl_max},
        {"sic_capability", cfg.sic_capability},
        {"bandwidth", cfg.bandwidth},
        {"noise_figure_bs", cfg.noise_figure_bs},
        {"noise_figure_mt", cfg.noise_figure_mt},
        {"algorithm", to_string(cfg.algorithm)},
        {"opa_enabled", cfg.opa_enabled},
        {"opa_knowledge", to_string(cfg.opa_knowledge)},
        {"realizations", cfg.realizations},
        {"seed", cfg.seed},
        {"mark_radius_sq", cfg.mark_radius_sq},
        {"hardcore_attempt_budget", cfg.hardcore_attempt_budget},
        {"pathloss_profile",
         json{{"bs_mt", law_to_json(cfg.pathloss_profile.bs_mt)},
              {"mt_bs", law_to_json(cfg.pathloss_profile.mt_bs)},
              {"bs_bs", law_to_json(cfg.pathloss_profile.bs_bs)},
              {"mt_mt", law_to_json(cfg.pathloss_profile.mt_mt)}}},
    };
    return doc.dump(2) + "\n";
}

}  // namespace fdnet
