#include "socsim/runner/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "socsim/engine/format.hpp"

namespace socsim::runner {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(const std::string& key, const std::string& what) {
    throw ConfigError("config key \"" + key + "\": " + what);
}

// Raw key/value lines plus file order for stable error reporting.
class KeyReader {
public:
    explicit KeyReader(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const std::string stripped = trim(line);
            if (stripped.empty() || stripped.front() == '#') continue;
            const auto eq = stripped.find('=');
            if (eq == std::string::npos) {
                throw ConfigError("line " + format_int(lineno) + ": expected `key = value`");
            }
            const std::string key = trim(stripped.substr(0, eq));
            const std::string value = trim(stripped.substr(eq + 1));
            if (key.empty()) {
                throw ConfigError("line " + format_int(lineno) + ": empty key");
            }
            if (values_.count(key)) {
                throw ConfigError("duplicate key \"" + key + "\"");
            }
            values_[key] = value;
            order_.push_back(key);
        }
    }

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    std::string take_required(const std::string& key) {
        const auto it = values_.find(key);
        if (it == values_.end()) throw ConfigError("missing required key \"" + key + "\"");
        consumed_.push_back(key);
        const std::string v = it->second;
        values_.erase(it);
        return v;
    }

    std::string take_string(const std::string& key, const std::string& fallback) {
        const auto it = values_.find(key);
        if (it == values_.end()) return fallback;
        consumed_.push_back(key);
        const std::string v = it->second;
        values_.erase(it);
        return v;
    }

    std::uint64_t take_u64(const std::string& key, std::uint64_t fallback) {
        const auto it = values_.find(key);
        if (it == values_.end()) return fallback;
        const std::string v = it->second;
        values_.erase(it);
        std::uint64_t out = 0;
        const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
        if (res.ec != std::errc{} || res.ptr != v.data() + v.size()) {
            fail(key, "expected an unsigned integer, got \"" + v + "\"");
        }
        return out;
    }

    std::int64_t take_i64(const std::string& key, std::int64_t fallback, std::int64_t min,
                          const char* range_text) {
        const auto it = values_.find(key);
        std::int64_t out = fallback;
        if (it != values_.end()) {
            const std::string v = it->second;
            values_.erase(it);
            const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
            if (res.ec != std::errc{} || res.ptr != v.data() + v.size()) {
                fail(key, "expected an integer, got \"" + v + "\"");
            }
        }
        if (out < min) fail(key, range_text);
        return out;
    }

    double take_double(const std::string& key, double fallback) {
        const auto it = values_.find(key);
        if (it == values_.end()) return fallback;
        const std::string v = it->second;
        values_.erase(it);
        double out = 0.0;
        const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
        if (res.ec != std::errc{} || res.ptr != v.data() + v.size()) {
            fail(key, "expected a number, got \"" + v + "\"");
        }
        return out;
    }

    // Any key left unconsumed is unknown; report the first in file order.
    void finish(ModelKind model) const {
        for (const std::string& key : order_) {
            if (!values_.count(key)) continue;
            for (const char* section : {"ant.", "schelling.", "impact."}) {
                if (key.rfind(section, 0) == 0 &&
                    section != std::string(model_name(model)) + ".") {
                    throw ConfigError("key \"" + key + "\" is not valid when model = " +
                                      model_name(model));
                }
            }
            throw ConfigError("unknown key \"" + key + "\"");
        }
    }

private:
    std::map<std::string, std::string> values_;
    std::vector<std::string> order_;
    std::vector<std::string> consumed_;
};

Boundary take_boundary(KeyReader& r, const std::string& key) {
    const std::string v = r.take_string(key, "toroidal");
    if (v == "toroidal") return Boundary::toroidal;
    if (v == "bounded") return Boundary::bounded;
    fail(key, "expected \"toroidal\" or \"bounded\", got \"" + v + "\"");
}

int take_dim(KeyReader& r, const std::string& key, int fallback) {
    const std::int64_t v = r.take_i64(key, fallback, 1, "must be at least 1");
    if (v > 4096) fail(key, "must be at most 4096");
    return static_cast<int>(v);
}

void read_ant(KeyReader& r, ant::AntParams& p) {
    p.width = take_dim(r, "ant.width", p.width);
    p.height = take_dim(r, "ant.height", p.height);
    p.boundary = take_boundary(r, "ant.boundary");
    p.k1 = r.take_double("ant.k1", p.k1);
    if (p.k1 <= 0.0) fail("ant.k1", "must be positive");
    p.k2 = r.take_double("ant.k2", p.k2);
    if (p.k2 <= 0.0) fail("ant.k2", "must be positive");
    p.memory_length =
        static_cast<int>(r.take_i64("ant.memory", p.memory_length, 1, "must be at least 1"));
    p.n_ants = static_cast<int>(r.take_i64("ant.ants", p.n_ants, 1, "must be at least 1"));
    p.item_types =
        static_cast<int>(r.take_i64("ant.item_types", p.item_types, 1, "must be at least 1"));
    if (p.item_types > 26) fail("ant.item_types", "must be at most 26 (snapshot codes A..Z)");
    p.items_per_type = static_cast<int>(
        r.take_i64("ant.items_per_type", p.items_per_type, 1, "must be at least 1"));
    p.entropy_block = static_cast<int>(
        r.take_i64("ant.entropy_block", p.entropy_block, 1, "must be at least 1"));

    const std::int64_t cells = static_cast<std::int64_t>(p.width) * p.height;
    if (static_cast<std::int64_t>(p.item_types) * p.items_per_type > cells) {
        fail("ant.items_per_type", "item_types * items_per_type exceeds the cell count");
    }
    if (p.width % p.entropy_block != 0 || p.height % p.entropy_block != 0) {
        fail("ant.entropy_block", "must divide both grid dimensions");
    }
}

void read_schelling(KeyReader& r, schelling::SchellingParams& p) {
    p.width = take_dim(r, "schelling.width", p.width);
    p.height = take_dim(r, "schelling.height", p.height);
    if (p.width % 2 != 0) fail("schelling.width", "must be even (checkerboard start)");
    if (p.height % 2 != 0) fail("schelling.height", "must be even (checkerboard start)");
    p.boundary = take_boundary(r, "schelling.boundary");
    p.vacancy_fraction = r.take_double("schelling.vacancy_fraction", p.vacancy_fraction);
    if (p.vacancy_fraction < 0.0 || p.vacancy_fraction >= 1.0) {
        fail("schelling.vacancy_fraction", "must lie in [0, 1)");
    }
    const std::string rule = r.take_string("schelling.rule", "threshold");
    if (rule == "threshold") {
        p.rule.kind = schelling::RuleVariant::Kind::threshold_table;
        if (r.has("schelling.preference")) {
            fail("schelling.preference", "only valid when schelling.rule = fraction");
        }
    } else if (rule == "fraction") {
        p.rule.kind = schelling::RuleVariant::Kind::fraction;
        p.rule.preference = r.take_double("schelling.preference", 0.5);
        if (p.rule.preference < 0.0 || p.rule.preference > 1.0) {
            fail("schelling.preference", "must lie in [0, 1]");
        }
    } else {
        fail("schelling.rule", "expected \"threshold\" or \"fraction\", got \"" + rule + "\"");
    }
    const std::string relocation = r.take_string("schelling.relocation", "nearest");
    if (relocation == "nearest") {
        p.relocation = schelling::RelocationPolicy::nearest;
    } else if (relocation == "random") {
        p.relocation = schelling::RelocationPolicy::random;
    } else {
        fail("schelling.relocation",
             "expected \"nearest\" or \"random\", got \"" + relocation + "\"");
    }
    p.perturb_fraction = r.take_double("schelling.perturb_fraction", p.perturb_fraction);
    if (p.perturb_fraction < 0.0 || p.perturb_fraction > 1.0) {
        fail("schelling.perturb_fraction", "must lie in [0, 1]");
    }
}

void read_impact(KeyReader& r, impact::ImpactParams& p) {
    p.width = take_dim(r, "impact.width", p.width);
    p.height = take_dim(r, "impact.height", p.height);
    p.distance_exponent = r.take_double("impact.exponent", p.distance_exponent);
    if (p.distance_exponent < 0.0) fail("impact.exponent", "must be non-negative");
    p.p_max = r.take_double("impact.p_max", p.p_max);
    if (p.p_max <= 0.0) fail("impact.p_max", "must be positive");
    p.s_max = r.take_double("impact.s_max", p.s_max);
    if (p.s_max <= 0.0) fail("impact.s_max", "must be positive");
    p.initial_minority = r.take_double("impact.initial_minority", p.initial_minority);
    if (p.initial_minority < 0.0 || p.initial_minority > 0.5) {
        fail("impact.initial_minority", "must lie in [0, 0.5]");
    }
}

}  // namespace

const char* model_name(ModelKind model) {
    switch (model) {
        case ModelKind::ant: return "ant";
        case ModelKind::schelling: return "schelling";
        case ModelKind::impact: return "impact";
    }
    throw std::logic_error("unreachable model kind");
}

std::vector<std::string> metric_names(ModelKind model) {
    switch (model) {
        case ModelKind::ant:
            return {"cluster_count", "largest_cluster_fraction", "spatial_entropy"};
        case ModelKind::schelling:
            return {"cluster_count", "largest_cluster_fraction", "mean_like_fraction", "moves"};
        case ModelKind::impact:
            return {"flips", "mean_like_fraction", "minority_fraction"};
    }
    throw std::logic_error("unreachable model kind");
}

RunConfig parse_config(const std::string& text) {
    KeyReader reader(text);
    RunConfig cfg;

    const std::string model = reader.take_required("model");
    if (model == "ant") {
        cfg.model = ModelKind::ant;
    } else if (model == "schelling") {
        cfg.model = ModelKind::schelling;
    } else if (model == "impact") {
        cfg.model = ModelKind::impact;
    } else {
        fail("model", "expected \"ant\", \"schelling\" or \"impact\", got \"" + model + "\"");
    }

    {
        const std::string seed_text = reader.take_required("seed");
        std::uint64_t seed = 0;
        const auto res =
            std::from_chars(seed_text.data(), seed_text.data() + seed_text.size(), seed);
        if (res.ec != std::errc{} || res.ptr != seed_text.data() + seed_text.size()) {
            fail("seed", "expected an unsigned integer, got \"" + seed_text + "\"");
        }
        cfg.seed = seed;
    }

    if (cfg.model == ModelKind::ant) {
        if (reader.has("sweeps")) fail("sweeps", "model = ant runs in ticks; use \"ticks\"");
        cfg.steps = reader.take_i64("ticks", 200000, 0, "must be non-negative");
    } else {
        if (reader.has("ticks")) {
            fail("ticks", std::string("model = ") + model_name(cfg.model) +
                              " runs in sweeps; use \"sweeps\"");
        }
        cfg.steps = reader.take_i64("sweeps", 500, 0, "must be non-negative");
    }
    cfg.snapshot_every = reader.take_i64("snapshot_every", std::max<std::int64_t>(cfg.steps, 1),
                                         1, "must be at least 1");
    cfg.output_dir = reader.take_string("output_dir", "out");
    if (cfg.output_dir.empty()) fail("output_dir", "must not be empty");

    switch (cfg.model) {
        case ModelKind::ant: read_ant(reader, cfg.ant); break;
        case ModelKind::schelling: read_schelling(reader, cfg.schelling); break;
        case ModelKind::impact: read_impact(reader, cfg.impact); break;
    }
    reader.finish(cfg.model);
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string RunConfig::serialize() const {
    std::string out;
    const auto line = [&out](const std::string& key, const std::string& value) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    };
    line("model", model_name(model));
    line("seed", format_uint(seed));
    line(model == ModelKind::ant ? "ticks" : "sweeps", format_int(steps));
    line("snapshot_every", format_int(snapshot_every));
    line("output_dir", output_dir);
    switch (model) {
        case ModelKind::ant:
            line("ant.ants", format_int(ant.n_ants));
            line("ant.boundary", ant.boundary == Boundary::toroidal ? "toroidal" : "bounded");
            line("ant.entropy_block", format_int(ant.entropy_block));
            line("ant.height", format_int(ant.height));
            line("ant.item_types", format_int(ant.item_types));
            line("ant.items_per_type", format_int(ant.items_per_type));
            line("ant.k1", format_double(ant.k1));
            line("ant.k2", format_double(ant.k2));
            line("ant.memory", format_int(ant.memory_length));
            line("ant.width", format_int(ant.width));
            break;
        case ModelKind::schelling:
            line("schelling.boundary",
                 schelling.boundary == Boundary::toroidal ? "toroidal" : "bounded");
            line("schelling.height", format_int(schelling.height));
            line("schelling.perturb_fraction", format_double(schelling.perturb_fraction));
            if (schelling.rule.kind == schelling::RuleVariant::Kind::fraction) {
                line("schelling.preference", format_double(schelling.rule.preference));
            }
            line("schelling.relocation",
                 schelling.relocation == schelling::RelocationPolicy::nearest ? "nearest"
                                                                              : "random");
            line("schelling.rule",
                 schelling.rule.kind == schelling::RuleVariant::Kind::threshold_table
                     ? "threshold"
                     : "fraction");
            line("schelling.vacancy_fraction", format_double(schelling.vacancy_fraction));
            line("schelling.width", format_int(schelling.width));
            break;
        case ModelKind::impact:
            line("impact.exponent", format_double(impact.distance_exponent));
            line("impact.height", format_int(impact.height));
            line("impact.initial_minority", format_double(impact.initial_minority));
            line("impact.p_max", format_double(impact.p_max));
            line("impact.s_max", format_double(impact.s_max));
            line("impact.width", format_int(impact.width));
            break;
    }
    return out;
}

}  // namespace socsim::runner
