#include "eurdyn/runconfig.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string_view>
#include <vector>

#include "eurdyn/report.hpp"

namespace eurdyn {

namespace {

struct RawEntry {
    std::string value;
    int line = 0;
};

using KeyMap = std::map<std::string, RawEntry, std::less<>>;

const std::set<std::string, std::less<>>& known_keys() {
    static const std::set<std::string, std::less<>> keys = {
        "model",          "r",
        "s",              "sigma",
        "phi",            "lambda",
        "initial",        "obs_r",
        "obs_q",          "t_max",
        "n_steps",        "scan_param",
        "scan_start",     "scan_stop",
        "scan_step",      "scan_metric",
        "output_dir",     "output_formats",
        "witness_horizon", "witness_points",
        "beta_window_start", "beta_window_end",
        "beta_points",    "beta_estimator"};
    return keys;
}

std::string trim(std::string_view sv) {
    const auto* ws = " \t\r\n";
    const auto b = sv.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = sv.find_last_not_of(ws);
    return std::string(sv.substr(b, e - b + 1));
}

double parse_double(const std::string& key, const RawEntry& entry) {
    const char* first = entry.value.data();
    const char* last = first + entry.value.size();
    double out = 0.0;
    const auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc{} || res.ptr != last || !std::isfinite(out))
        throw ConfigError("value of '" + key + "' is not a finite number: '" + entry.value + "'",
                          entry.line);
    return out;
}

int parse_int(const std::string& key, const RawEntry& entry) {
    const char* first = entry.value.data();
    const char* last = first + entry.value.size();
    int out = 0;
    const auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc{} || res.ptr != last)
        throw ConfigError("value of '" + key + "' is not an integer: '" + entry.value + "'",
                          entry.line);
    return out;
}

InitialStateSpec parse_initial(const RawEntry& entry) {
    const std::string& v = entry.value;
    if (v == "zero") return InitialStateSpec::zero();
    if (v == "one") return InitialStateSpec::one();
    if (v == "plus") return InitialStateSpec::plus();
    if (v.rfind("angle:", 0) == 0) {
        const RawEntry sub{v.substr(6), entry.line};
        return InitialStateSpec::angle(parse_double("initial", sub));
    }
    throw ConfigError("value of 'initial' must be zero, one, plus, or angle:<number>; got '" + v +
                          "'",
                      entry.line);
}

ProjectiveObservable parse_observable(const std::string& key, const RawEntry& entry) {
    const std::string& v = entry.value;
    if (v == "x") return ProjectiveObservable::x();
    if (v == "y") return ProjectiveObservable::y();
    if (v == "z") return ProjectiveObservable::z();
    std::vector<double> comps;
    std::string::size_type pos = 0;
    while (true) {
        const auto comma = v.find(',', pos);
        const RawEntry sub{trim(std::string_view(v).substr(pos, comma - pos)), entry.line};
        comps.push_back(parse_double(key, sub));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (comps.size() != 3)
        throw ConfigError("value of '" + key + "' must be x, y, z, or three comma-separated "
                          "components",
                          entry.line);
    try {
        return ProjectiveObservable(comps[0], comps[1], comps[2]);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("value of '" + key + "': " + e.what(), entry.line);
    }
}

std::string describe_observable(const ProjectiveObservable& o) {
    if (o.n1 == 1.0 && o.n2 == 0.0 && o.n3 == 0.0) return "x";
    if (o.n1 == 0.0 && o.n2 == 1.0 && o.n3 == 0.0) return "y";
    if (o.n1 == 0.0 && o.n2 == 0.0 && o.n3 == 1.0) return "z";
    return report::format_double(o.n1) + "," + report::format_double(o.n2) + "," +
           report::format_double(o.n3);
}

std::string describe_initial(const InitialStateSpec& s) {
    switch (s.kind) {
    case InitialStateSpec::Kind::Zero: return "zero";
    case InitialStateSpec::Kind::One: return "one";
    case InitialStateSpec::Kind::Plus: return "plus";
    case InitialStateSpec::Kind::Angle: return "angle:" + report::format_double(s.theta);
    }
    return "?";
}

KeyMap tokenize(const std::string& text) {
    KeyMap kv;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected key=value, got '" + line + "'", lineno);
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (key.empty()) throw ConfigError("missing key before '='", lineno);
        if (!known_keys().count(key)) throw ConfigError("unknown key '" + key + "'", lineno);
        if (value.empty()) throw ConfigError("empty value for key '" + key + "'", lineno);
        const auto [it, inserted] = kv.emplace(key, RawEntry{value, lineno});
        if (!inserted)
            throw ConfigError("duplicate key '" + key + "' (first set on line " +
                                  std::to_string(it->second.line) + ")",
                              lineno);
    }
    return kv;
}

// Rejects a key that is present but meaningless for the chosen model/mode.
void reject(const KeyMap& kv, const std::string& key, const std::string& why) {
    const auto it = kv.find(key);
    if (it != kv.end()) throw ConfigError("key '" + key + "' " + why, it->second.line);
}

} // namespace

const char* model_name(ModelKind m) {
    switch (m) {
    case ModelKind::General: return "general";
    case ModelKind::PT: return "pt";
    case ModelKind::AntiPT: return "antipt";
    }
    return "?";
}

SystemParams RunConfig::system() const {
    switch (model) {
    case ModelKind::General: return GeneralNHParams{r, s, sigma, phi};
    case ModelKind::PT: return GeneralNHParams{r, s, s, phi};
    case ModelKind::AntiPT: return AntiPTParams{lambda, s, phi};
    }
    return GeneralNHParams{};
}

std::string RunConfig::describe() const {
    std::string out = "model=";
    out += model_name(model);
    if (model == ModelKind::AntiPT) {
        out += " lambda=" + report::format_double(lambda);
        out += " s=" + report::format_double(s);
    } else {
        out += " r=" + report::format_double(r);
        out += " s=" + report::format_double(s);
        out += " sigma=" + report::format_double(model == ModelKind::PT ? s : sigma);
    }
    out += " phi=" + report::format_double(phi);
    out += " initial=" + describe_initial(initial);
    out += " obs_r=" + describe_observable(obs_r);
    out += " obs_q=" + describe_observable(obs_q);
    if (scan) {
        out += " scan_param=" + scan->param;
        out += " scan_start=" + report::format_double(scan->start);
        out += " scan_stop=" + report::format_double(scan->stop);
        out += " scan_step=" + report::format_double(scan->step);
        out += " scan_metric=";
        out += metric_name(scan->metric);
        if (scan->metric == MetricKind::Witness) {
            out += " witness_horizon=" + report::format_double(metrics.witness_horizon);
            out += " witness_points=" + std::to_string(metrics.witness_samples);
        } else {
            out += " beta_window_start=" + report::format_double(metrics.beta_start);
            out += " beta_window_end=" + report::format_double(metrics.beta_end);
            out += " beta_points=" + std::to_string(metrics.beta_samples);
            out += std::string(" beta_estimator=") +
                   (metrics.estimator == BetaEstimator::RMS ? "rms" : "max");
        }
    } else {
        out += " t_max=" + report::format_double(t_max);
        out += " n_steps=" + std::to_string(n_steps);
    }
    return out;
}

RunConfig parse_config_text(const std::string& text) {
    const KeyMap kv = tokenize(text);
    RunConfig cfg;

    // Model first: it decides which parameter keys apply and the defaults.
    if (const auto it = kv.find("model"); it != kv.end()) {
        const std::string& v = it->second.value;
        if (v == "general") cfg.model = ModelKind::General;
        else if (v == "pt") cfg.model = ModelKind::PT;
        else if (v == "antipt") cfg.model = ModelKind::AntiPT;
        else
            throw ConfigError("value of 'model' must be general, pt, or antipt; got '" + v + "'",
                              it->second.line);
    }

    if (cfg.model == ModelKind::AntiPT) {
        reject(kv, "r", "does not apply to model antipt (use lambda and s)");
        reject(kv, "sigma", "does not apply to model antipt (use lambda and s)");
        cfg.initial = InitialStateSpec::zero();
    } else {
        reject(kv, "lambda", "only applies to model antipt");
    }

    for (const auto& [key, entry] : kv) {
        if (key == "r") cfg.r = parse_double(key, entry);
        else if (key == "s") cfg.s = parse_double(key, entry);
        else if (key == "sigma") cfg.sigma = parse_double(key, entry);
        else if (key == "phi") cfg.phi = parse_double(key, entry);
        else if (key == "lambda") cfg.lambda = parse_double(key, entry);
        else if (key == "initial") cfg.initial = parse_initial(entry);
        else if (key == "obs_r") cfg.obs_r = parse_observable(key, entry);
        else if (key == "obs_q") cfg.obs_q = parse_observable(key, entry);
        else if (key == "output_dir") cfg.output_dir = std::filesystem::path(entry.value);
    }

    if (cfg.model == ModelKind::PT) {
        if (const auto it = kv.find("sigma"); it != kv.end() && cfg.sigma != cfg.s)
            throw ConfigError("model pt requires sigma == s (got sigma=" + it->second.value + ")",
                              it->second.line);
        cfg.sigma = cfg.s;
    }

    if (const auto it = kv.find("output_formats"); it != kv.end()) {
        cfg.csv_output = cfg.svg_output = false;
        const std::string& v = it->second.value;
        std::string::size_type pos = 0;
        while (true) {
            const auto comma = v.find(',', pos);
            const std::string item = trim(std::string_view(v).substr(pos, comma - pos));
            if (item == "csv") cfg.csv_output = true;
            else if (item == "svg") cfg.svg_output = true;
            else
                throw ConfigError("value of 'output_formats' must list csv and/or svg; got '" +
                                      item + "'",
                                  it->second.line);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }

    // Mode selection: any scan_* key engages scan mode and then requires the rest.
    static const char* kScanKeys[] = {"scan_param", "scan_start", "scan_stop", "scan_step",
                                      "scan_metric"};
    bool any_scan = false;
    for (const char* k : kScanKeys) any_scan = any_scan || kv.count(k);

    if (any_scan) {
        for (const char* k : kScanKeys)
            if (!kv.count(k))
                throw ConfigError(std::string("scan mode requires '") + k +
                                  "' (scan_param, scan_start, scan_stop, scan_step, and "
                                  "scan_metric must all be set)");
        reject(kv, "t_max", "only applies in trace mode (remove it or the scan_* keys)");
        reject(kv, "n_steps", "only applies in trace mode (remove it or the scan_* keys)");

        ScanSpec spec;
        const auto& pent = kv.at("scan_param");
        spec.param = pent.value;
        const char* expected = cfg.model == ModelKind::AntiPT ? "s" : "r";
        if (spec.param != expected)
            throw ConfigError("model " + std::string(model_name(cfg.model)) + " scans vary '" +
                                  expected + "', not '" + spec.param + "'",
                              pent.line);
        spec.start = parse_double("scan_start", kv.at("scan_start"));
        spec.stop = parse_double("scan_stop", kv.at("scan_stop"));
        spec.step = parse_double("scan_step", kv.at("scan_step"));
        if (!(spec.step > 0.0))
            throw ConfigError("scan_step must be > 0", kv.at("scan_step").line);
        if (!(spec.start < spec.stop))
            throw ConfigError("scan_start must be < scan_stop", kv.at("scan_start").line);
        const auto& ment = kv.at("scan_metric");
        if (ment.value == "witness") spec.metric = MetricKind::Witness;
        else if (ment.value == "beta") spec.metric = MetricKind::Beta;
        else
            throw ConfigError("value of 'scan_metric' must be witness or beta; got '" +
                                  ment.value + "'",
                              ment.line);
        cfg.scan = spec;

        if (const auto it = kv.find("witness_horizon"); it != kv.end()) {
            cfg.metrics.witness_horizon = parse_double("witness_horizon", it->second);
            if (!(cfg.metrics.witness_horizon > 0.0))
                throw ConfigError("witness_horizon must be > 0", it->second.line);
        }
        if (const auto it = kv.find("witness_points"); it != kv.end()) {
            cfg.metrics.witness_samples = parse_int("witness_points", it->second);
            if (cfg.metrics.witness_samples < 100)
                throw ConfigError("witness_points must be >= 100", it->second.line);
        }
        if (const auto it = kv.find("beta_window_start"); it != kv.end())
            cfg.metrics.beta_start = parse_double("beta_window_start", it->second);
        if (const auto it = kv.find("beta_window_end"); it != kv.end())
            cfg.metrics.beta_end = parse_double("beta_window_end", it->second);
        if (!(0.0 < cfg.metrics.beta_start && cfg.metrics.beta_start < cfg.metrics.beta_end))
            throw ConfigError("beta window must satisfy 0 < beta_window_start < beta_window_end");
        if (const auto it = kv.find("beta_points"); it != kv.end()) {
            cfg.metrics.beta_samples = parse_int("beta_points", it->second);
            if (cfg.metrics.beta_samples < 100)
                throw ConfigError("beta_points must be >= 100", it->second.line);
        }
        if (const auto it = kv.find("beta_estimator"); it != kv.end()) {
            if (it->second.value == "rms") cfg.metrics.estimator = BetaEstimator::RMS;
            else if (it->second.value == "max") cfg.metrics.estimator = BetaEstimator::MaxAbs;
            else
                throw ConfigError("value of 'beta_estimator' must be rms or max; got '" +
                                      it->second.value + "'",
                                  it->second.line);
        }
    } else {
        static const char* kScanOnly[] = {"witness_horizon", "witness_points",
                                          "beta_window_start", "beta_window_end", "beta_points",
                                          "beta_estimator"};
        for (const char* k : kScanOnly) reject(kv, k, "only applies in scan mode");
        if (const auto it = kv.find("t_max"); it != kv.end()) {
            cfg.t_max = parse_double("t_max", it->second);
            if (!(cfg.t_max > 0.0)) throw ConfigError("t_max must be > 0", it->second.line);
        }
        if (const auto it = kv.find("n_steps"); it != kv.end()) {
            cfg.n_steps = parse_int("n_steps", it->second);
            if (cfg.n_steps < 2) throw ConfigError("n_steps must be >= 2", it->second.line);
        }
    }

    // Surface invalid physical parameters now, pointing at the config, not at a
    // later internal call site.
    try {
        std::visit([](const auto& p) { p.validate(); }, cfg.system());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

RunConfig parse_config_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open config file: " + path.string());
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config_text(ss.str());
}

} // namespace eurdyn
