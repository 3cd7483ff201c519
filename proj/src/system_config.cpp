// SPDX-License-Identifier: Apache-2.0
//
// irsim: link-level simulator and learning toolkit for IRS-assisted MIMO downlinks

#include "irsim/system_config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace irsim {

void SystemConfig::validate() const
{
    if (M < 1)
        throw ConfigError("M must be >= 1");
    if (N_H < 1 || N_V < 1)
        throw ConfigError("N_H and N_V must be >= 1");
    if (T < 1)
        throw ConfigError("T must be >= 1");
    if (L_d < 1 || L_ru < 1)
        throw ConfigError("L_d and L_ru must be >= 1");
    if (d_ru_min <= 0.0)
        throw ConfigError("d_ru_min must be > 0");
    if (lambda_c <= 0.0)
        throw ConfigError("lambda_c must be > 0");
    if (d_H <= 0.0 || d_r <= 0.0)
        throw ConfigError("antenna spacings must be > 0");
    if (d_br <= 0.0)
        throw ConfigError("d_br must be > 0");
    if (d_0 <= 0.0)
        throw ConfigError("d_0 must be > 0");
    if (room_size <= 0.0)
        throw ConfigError("room_size must be > 0");
}

void TrainConfig::validate() const
{
    if (lr0 <= 0.0)
        throw ConfigError("lr0 must be > 0");
    if (train_fraction <= 0.0 || train_fraction >= 1.0)
        throw ConfigError("train_fraction must be in (0, 1)");
    if (batch < 1)
        throw ConfigError("batch must be >= 1");
    if (max_epochs < 1)
        throw ConfigError("max_epochs must be >= 1");
    for (int h : hidden_method1)
        if (h < 1)
            throw ConfigError("hidden_method1 widths must be >= 1");
    for (int h : hidden_method2)
        if (h < 1)
            throw ConfigError("hidden_method2 widths must be >= 1");
}

RunConfig desk_profile()
{
    return RunConfig{}; // struct defaults are the desk profile
}

RunConfig paper_profile()
{
    RunConfig cfg;
    cfg.sys.M = 10;
    cfg.sys.N_H = 10;
    cfg.sys.N_V = 10;
    cfg.sys.T = 101;
    cfg.sys.pilot_dBm = 25.0;
    cfg.train.hidden_method1 = {512, 512, 256};
    cfg.train.hidden_method2 = {500, 400, 400, 300};
    return cfg;
}

RunConfig profile_by_name(const std::string& name)
{
    if (name == "desk")
        return desk_profile();
    if (name == "paper")
        return paper_profile();
    throw ConfigError("unknown profile '" + name + "' (expected 'desk' or 'paper')");
}

namespace {

std::string fmt_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_int_list(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

double parse_double(const std::string& key, const std::string& value)
{
    try {
        std::size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size())
            throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid numeric value '" + value + "' for key '" + key + "'");
    }
}

long long parse_int(const std::string& key, const std::string& value)
{
    try {
        std::size_t pos = 0;
        long long v = std::stoll(value, &pos);
        if (pos != value.size())
            throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid integer value '" + value + "' for key '" + key + "'");
    }
}

std::vector<int> parse_int_list(const std::string& key, const std::string& value)
{
    std::vector<int> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(static_cast<int>(parse_int(key, item)));
    if (out.empty())
        throw ConfigError("empty list for key '" + key + "'");
    return out;
}

std::string trim(const std::string& s)
{
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value)
{
    SystemConfig& s = cfg.sys;
    TrainConfig& t = cfg.train;

    if (key == "M") s.M = static_cast<int>(parse_int(key, value));
    else if (key == "N_H") s.N_H = static_cast<int>(parse_int(key, value));
    else if (key == "N_V") s.N_V = static_cast<int>(parse_int(key, value));
    else if (key == "d_H") s.d_H = parse_double(key, value);
    else if (key == "d_r") s.d_r = parse_double(key, value);
    else if (key == "lambda_c") s.lambda_c = parse_double(key, value);
    else if (key == "d_br") s.d_br = parse_double(key, value);
    else if (key == "L_d") s.L_d = static_cast<int>(parse_int(key, value));
    else if (key == "L_ru") s.L_ru = static_cast<int>(parse_int(key, value));
    else if (key == "pathloss_exponent") s.pathloss_exponent = parse_double(key, value);
    else if (key == "beta_0_dB") s.beta_0_dB = parse_double(key, value);
    else if (key == "d_0") s.d_0 = parse_double(key, value);
    else if (key == "noise_dBm") s.noise_dBm = parse_double(key, value);
    else if (key == "pilot_dBm") s.pilot_dBm = parse_double(key, value);
    else if (key == "downlink_dBm") s.downlink_dBm = parse_double(key, value);
    else if (key == "T") s.T = static_cast<int>(parse_int(key, value));
    else if (key == "room_offset") s.room_offset = parse_double(key, value);
    else if (key == "room_size") s.room_size = parse_double(key, value);
    else if (key == "ue_height") s.ue_height = parse_double(key, value);
    else if (key == "d_ru_min") s.d_ru_min = parse_double(key, value);
    else if (key == "seed") s.seed = static_cast<std::uint64_t>(parse_int(key, value));
    else if (key == "lr0") t.lr0 = parse_double(key, value);
    else if (key == "batch") t.batch = static_cast<int>(parse_int(key, value));
    else if (key == "max_epochs") t.max_epochs = static_cast<int>(parse_int(key, value));
    else if (key == "plateau_patience") t.plateau_patience = static_cast<int>(parse_int(key, value));
    else if (key == "plateau_factor") t.plateau_factor = parse_double(key, value);
    else if (key == "early_stop_patience") t.early_stop_patience = static_cast<int>(parse_int(key, value));
    else if (key == "train_fraction") t.train_fraction = parse_double(key, value);
    else if (key == "adam_beta1") t.adam_beta1 = parse_double(key, value);
    else if (key == "adam_beta2") t.adam_beta2 = parse_double(key, value);
    else if (key == "adam_eps") t.adam_eps = parse_double(key, value);
    else if (key == "min_lr") t.min_lr = parse_double(key, value);
    else if (key == "min_improve") t.min_improve = parse_double(key, value);
    else if (key == "hidden_method1") t.hidden_method1 = parse_int_list(key, value);
    else if (key == "hidden_method2") t.hidden_method2 = parse_int_list(key, value);
    else
        throw ConfigError("unknown config key '" + key + "'");
}

std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& cfg)
{
    const SystemConfig& s = cfg.sys;
    const TrainConfig& t = cfg.train;
    return {
        {"M", std::to_string(s.M)},
        {"N_H", std::to_string(s.N_H)},
        {"N_V", std::to_string(s.N_V)},
        {"d_H", fmt_double(s.d_H)},
        {"d_r", fmt_double(s.d_r)},
        {"lambda_c", fmt_double(s.lambda_c)},
        {"d_br", fmt_double(s.d_br)},
        {"L_d", std::to_string(s.L_d)},
        {"L_ru", std::to_string(s.L_ru)},
        {"pathloss_exponent", fmt_double(s.pathloss_exponent)},
        {"beta_0_dB", fmt_double(s.beta_0_dB)},
        {"d_0", fmt_double(s.d_0)},
        {"noise_dBm", fmt_double(s.noise_dBm)},
        {"pilot_dBm", fmt_double(s.pilot_dBm)},
        {"downlink_dBm", fmt_double(s.downlink_dBm)},
        {"T", std::to_string(s.T)},
        {"room_offset", fmt_double(s.room_offset)},
        {"room_size", fmt_double(s.room_size)},
        {"ue_height", fmt_double(s.ue_height)},
        {"d_ru_min", fmt_double(s.d_ru_min)},
        {"seed", std::to_string(s.seed)},
        {"lr0", fmt_double(t.lr0)},
        {"batch", std::to_string(t.batch)},
        {"max_epochs", std::to_string(t.max_epochs)},
        {"plateau_patience", std::to_string(t.plateau_patience)},
        {"plateau_factor", fmt_double(t.plateau_factor)},
        {"early_stop_patience", std::to_string(t.early_stop_patience)},
        {"train_fraction", fmt_double(t.train_fraction)},
        {"adam_beta1", fmt_double(t.adam_beta1)},
        {"adam_beta2", fmt_double(t.adam_beta2)},
        {"adam_eps", fmt_double(t.adam_eps)},
        {"min_lr", fmt_double(t.min_lr)},
        {"min_improve", fmt_double(t.min_improve)},
        {"hidden_method1", fmt_int_list(t.hidden_method1)},
        {"hidden_method2", fmt_int_list(t.hidden_method2)},
    };
}

std::string config_text(const RunConfig& cfg)
{
    std::string out;
    for (const auto& [k, v] : config_entries(cfg)) {
        out += k;
        out += " = ";
        out += v;
        out += '\n';
    }
    return out;
}

namespace {

void apply_config_stream(RunConfig& cfg, std::istream& in, const std::string& origin)
{
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
        apply_config_entry(cfg, key, value);
    }
}

} // namespace

void load_config_file(RunConfig& cfg, const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    apply_config_stream(cfg, in, path);
}

RunConfig parse_config_text(const std::string& text, RunConfig base)
{
    std::istringstream in(text);
    apply_config_stream(base, in, "<inline>");
    return base;
}

} // namespace irsim
