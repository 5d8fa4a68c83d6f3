#include "hrte/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "hrte/errors.hpp"

namespace hrte {
namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

double parse_number(const std::string& key, const std::string& v) {
    if (v == "inf") return std::numeric_limits<double>::infinity();
    const auto slash = v.find('/');
    try {
        if (slash != std::string::npos) {
            const double num = std::stod(v.substr(0, slash));
            const double den = std::stod(v.substr(slash + 1));
            return num / den;
        }
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' has non-numeric value '" +
                          v + "'");
    }
}

long parse_integer(const std::string& key, const std::string& v) {
    const double x = parse_number(key, v);
    const long i = std::lround(x);
    if (x != static_cast<double>(i))
        throw ConfigError("config: key '" + key + "' must be an integer, got '" +
                          v + "'");
    return i;
}

const std::set<std::string> kKnownKeys = {
    "mode", "n", "M", "L", "dt", "T", "s", "N", "mu", "seed", "sample_every",
    "data.kind", "data.amplitude", "data.sigma", "data.center", "data.k",
    "data.target_norm", "data.band_limit",
    "output_dir", "checkpoint_every", "st_pairs",
    "morawetz_budget", "morawetz_seed",
    "N_list", "dt_list", "batch_runs", "bound", "amplitude_scale_list",
    "lambda",
};

struct KeyReader {
    const std::map<std::string, std::string>& kv;
    std::set<std::string> consumed;

    bool has(const std::string& key) const { return kv.count(key) > 0; }

    std::string require(const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end())
            throw ConfigError("config: missing required key '" + key + "'");
        consumed.insert(key);
        return it->second;
    }

    std::optional<std::string> optional(const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        consumed.insert(key);
        return it->second;
    }
};

} // namespace

std::vector<StPair> parse_st_pairs(const std::string& text) {
    std::vector<StPair> pairs;
    if (trim(text).empty()) return pairs;
    for (const auto& entry : split(text, ',')) {
        const auto parts = split(entry, ':');
        if (parts.size() != 3)
            throw ConfigError(
                "config: st_pairs entries must be 'target:q:r', got '" + entry +
                "'");
        StPair p;
        if (parts[0] == "phi") p.target = StTarget::phi;
        else if (parts[0] == "iphi") p.target = StTarget::iphi;
        else if (parts[0] == "bessel_iphi") p.target = StTarget::bessel_iphi;
        else
            throw ConfigError("config: unknown st_pairs target '" + parts[0] +
                              "'");
        p.q = parse_number("st_pairs", parts[1]);
        p.r = parse_number("st_pairs", parts[2]);
        if (!(p.q >= 1) || !(p.r >= 1))
            throw ConfigError("config: st_pairs exponents must be >= 1");
        pairs.push_back(p);
    }
    return pairs;
}

RunConfig parse_run_config_text(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream is(text);
    std::string line;
    long lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (kKnownKeys.count(key) == 0)
            throw ConfigError("config: unknown key '" + key + "'");
        if (kv.count(key))
            throw ConfigError("config: duplicate key '" + key + "'");
        kv[key] = value;
    }

    RunConfig rc;
    rc.raw = kv;
    KeyReader reader{kv, {}};

    const std::string mode = reader.require("mode");
    if (mode == "run") rc.mode = RunMode::run;
    else if (mode == "sweep_N") rc.mode = RunMode::sweep_N;
    else if (mode == "convergence") rc.mode = RunMode::convergence;
    else if (mode == "inequality_batch") rc.mode = RunMode::inequality_batch;
    else if (mode == "scaling_check") rc.mode = RunMode::scaling_check;
    else throw ConfigError("config: unknown mode '" + mode + "'");

    const int n = static_cast<int>(parse_integer("n", reader.require("n")));
    const int M = static_cast<int>(parse_integer("M", reader.require("M")));
    const double L = parse_number("L", reader.require("L"));
    try {
        rc.sim.grid = GridSpec(n, M, L);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    rc.sim.dt = parse_number("dt", reader.require("dt"));
    rc.sim.T = parse_number("T", reader.require("T"));
    rc.sim.s = parse_number("s", reader.require("s"));
    rc.sim.N = parse_number("N", reader.require("N"));
    rc.sim.mu = parse_number("mu", reader.require("mu"));
    rc.sim.seed = static_cast<std::uint64_t>(
        parse_integer("seed", reader.require("seed")));
    rc.sim.sample_every =
        parse_integer("sample_every", reader.require("sample_every"));

    rc.data.kind = data_kind_from_string(reader.require("data.kind"));
    if (auto v = reader.optional("data.amplitude"))
        rc.data.amplitude = parse_number("data.amplitude", *v);
    if (auto v = reader.optional("data.sigma"))
        rc.data.sigma = parse_number("data.sigma", *v);
    if (auto v = reader.optional("data.center")) {
        for (const auto& item : split(*v, ','))
            rc.data.center.push_back(parse_number("data.center", item));
    }
    if (auto v = reader.optional("data.k")) {
        for (const auto& item : split(*v, ','))
            rc.data.k.push_back(
                static_cast<int>(parse_integer("data.k", item)));
    }
    if (auto v = reader.optional("data.target_norm"))
        rc.data.target_norm = parse_number("data.target_norm", *v);
    if (auto v = reader.optional("data.band_limit"))
        rc.data.band_limit = parse_number("data.band_limit", *v);
    rc.data.s = rc.sim.s;

    if (auto v = reader.optional("output_dir")) rc.output_dir = *v;
    if (auto v = reader.optional("checkpoint_every"))
        rc.checkpoint_every = parse_integer("checkpoint_every", *v);
    if (auto v = reader.optional("st_pairs")) rc.pairs = parse_st_pairs(*v);
    if (auto v = reader.optional("morawetz_budget"))
        rc.morawetz_budget = static_cast<std::size_t>(
            parse_integer("morawetz_budget", *v));
    rc.morawetz_seed = rc.sim.seed + 1000003;
    if (auto v = reader.optional("morawetz_seed"))
        rc.morawetz_seed = static_cast<std::uint64_t>(
            parse_integer("morawetz_seed", *v));

    switch (rc.mode) {
        case RunMode::run: break;
        case RunMode::sweep_N: {
            for (const auto& item : split(reader.require("N_list"), ','))
                rc.N_list.push_back(parse_number("N_list", item));
            if (rc.N_list.size() < 2)
                throw ConfigError("config: N_list needs >= 2 entries");
            break;
        }
        case RunMode::convergence: {
            for (const auto& item : split(reader.require("dt_list"), ','))
                rc.dt_list.push_back(parse_number("dt_list", item));
            if (rc.dt_list.size() < 2)
                throw ConfigError("config: dt_list needs >= 2 entries");
            break;
        }
        case RunMode::inequality_batch: {
            rc.batch_runs = parse_integer("batch_runs", reader.require("batch_runs"));
            if (rc.batch_runs < 1)
                throw ConfigError("config: batch_runs must be >= 1");
            const std::string b = reader.require("bound");
            if (b == "l4_3d") rc.bound = BoundKind::l4_3d;
            else if (b == "admissible_pair") rc.bound = BoundKind::admissible_pair;
            else if (b == "I_version") rc.bound = BoundKind::I_version;
            else throw ConfigError("config: unknown bound '" + b + "'");
            if (auto v = reader.optional("amplitude_scale_list")) {
                for (const auto& item : split(*v, ','))
                    rc.amplitude_scale_list.push_back(
                        parse_number("amplitude_scale_list", item));
            }
            break;
        }
        case RunMode::scaling_check: {
            rc.lambda = parse_number("lambda", reader.require("lambda"));
            const double j = std::log2(rc.lambda);
            if (std::abs(j - std::round(j)) > 1e-12)
                throw ConfigError("config: lambda must be dyadic (2^j)");
            break;
        }
    }

    // keys valid for other modes are rejected here: unknown-to-this-mode
    for (const auto& [key, value] : kv) {
        (void)value;
        if (reader.consumed.count(key) == 0)
            throw ConfigError("config: key '" + key +
                              "' is not accepted by mode '" + mode + "'");
    }

    try {
        rc.sim.validate();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (rc.sim.total_steps() % rc.sim.sample_every != 0)
        throw ConfigError(
            "config: sample_every must divide the total step count " +
            std::to_string(rc.sim.total_steps()));
    return rc;
}

RunConfig parse_run_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("config: cannot open " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return parse_run_config_text(ss.str());
}

std::string RunConfig::canonical_text() const {
    std::ostringstream os;
    for (const auto& [k, v] : raw) os << k << "=" << v << "\n";
    return os.str();
}

std::string RunConfig::config_hash() const {
    // FNV-1a, 64-bit
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical_text()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

} // namespace hrte
