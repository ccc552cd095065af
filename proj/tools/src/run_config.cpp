#include "memesim/app/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>

#include "memesim/error.hpp"

namespace memesim::app {

namespace {

using nlohmann::json;

struct NumericField {
    std::string name;
    bool integral;
    std::function<void(SimConfig&, double)> set;
    std::function<double(const SimConfig&)> get;
};

template <typename T>
NumericField field(std::string name, T SimConfig::*member) {
    return {std::move(name), std::is_integral_v<T>,
            [member](SimConfig& c, double v) { c.*member = static_cast<T>(v); },
            [member](const SimConfig& c) { return static_cast<double>(c.*member); }};
}

NumericField model_field(std::string name, double SharingModel::*member) {
    return {"sharing_model." + name, false,
            [member](SimConfig& c, double v) { c.sharing_model.*member = v; },
            [member](const SimConfig& c) { return c.sharing_model.*member; }};
}

const std::vector<NumericField>& numeric_fields() {
    static const std::vector<NumericField> fields = [] {
        std::vector<NumericField> f{
            field("population", &SimConfig::population),
            field("recruits", &SimConfig::recruits),
            field("memes_per_recruit", &SimConfig::memes_per_recruit),
            field("recruit_batch_size", &SimConfig::recruit_batch_size),
            field("recruit_interval_ticks", &SimConfig::recruit_interval_ticks),
            field("horizon_ticks", &SimConfig::horizon_ticks),
            field("step_size", &SimConfig::step_size),
            field("neighbor_radius", &SimConfig::neighbor_radius),
            field("infection_duration_ticks", &SimConfig::infection_duration_ticks),
            field("perception_noise_sd", &SimConfig::perception_noise_sd),
            field("meme_dimension", &SimConfig::meme_dimension),
            model_field("intercept", &SharingModel::intercept),
            model_field("w_humor", &SharingModel::w_humor),
            model_field("w_relevance", &SharingModel::w_relevance),
            model_field("w_selfref", &SharingModel::w_selfref),
        };
        f.push_back({"world_width", false, [](SimConfig& c, double v) { c.world.width = v; },
                     [](const SimConfig& c) { return c.world.width; }});
        f.push_back({"world_height", false, [](SimConfig& c, double v) { c.world.height = v; },
                     [](const SimConfig& c) { return c.world.height; }});
        return f;
    }();
    return fields;
}

const NumericField* find_field(const std::string& name) {
    const auto& fields = numeric_fields();
    const auto it = std::find_if(fields.begin(), fields.end(),
                                 [&](const NumericField& f) { return f.name == name; });
    return it == fields.end() ? nullptr : &*it;
}

bool valid_u32(double v) {
    return std::isfinite(v) && v >= 0.0 && v <= std::numeric_limits<std::uint32_t>::max() &&
           std::floor(v) == v;
}

// Reads a JSON number into a numeric field; records the field name on a type error.
void read_numeric(const NumericField& f, const json& value, SimConfig& sim,
                  std::vector<std::string>& bad) {
    if (!value.is_number()) {
        bad.push_back(f.name);
        return;
    }
    if (f.integral && !value.is_number_integer()) {
        bad.push_back(f.name);
        return;
    }
    const double v = value.get<double>();
    if (f.integral && !valid_u32(v)) {
        bad.push_back(f.name);
        return;
    }
    f.set(sim, v);
}

void read_bool(const std::string& name, const json& value, bool& target,
               std::vector<std::string>& bad) {
    if (!value.is_boolean()) {
        bad.push_back(name);
        return;
    }
    target = value.get<bool>();
}

}  // namespace

const std::vector<std::string>& sweepable_parameters() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& f : numeric_fields()) n.push_back(f.name);
        std::sort(n.begin(), n.end());
        return n;
    }();
    return names;
}

void apply_parameter(SimConfig& config, const std::string& name, double value) {
    const NumericField* f = find_field(name);
    if (f == nullptr || (f->integral && !valid_u32(value))) {
        throw ConfigError({name});
    }
    f->set(config, value);
}

RunConfig parse_run_config(const json& doc) {
    if (!doc.is_object()) {
        throw ConfigError({"<root>"}, "configuration must be a JSON object");
    }
    RunConfig rc;
    std::vector<std::string> bad;

    for (const auto& [key, value] : doc.items()) {
        if (key == "sharing_model") {
            if (!value.is_object()) {
                bad.push_back(key);
                continue;
            }
            for (const auto& [mkey, mvalue] : value.items()) {
                const NumericField* f = find_field("sharing_model." + mkey);
                if (f == nullptr) {
                    bad.push_back("sharing_model." + mkey);
                } else {
                    read_numeric(*f, mvalue, rc.sim, bad);
                }
            }
        } else if (key == "total_memes") {
            if (value.is_null()) {
                rc.sim.total_memes.reset();
            } else if (value.is_number_integer() && valid_u32(value.get<double>())) {
                rc.sim.total_memes = value.get<std::uint32_t>();
            } else {
                bad.push_back(key);
            }
        } else if (key == "seed") {
            if (value.is_number_unsigned()) {
                rc.sim.seed = value.get<std::uint64_t>();
            } else {
                bad.push_back(key);
            }
        } else if (key == "require_full_recruitment") {
            read_bool(key, value, rc.sim.require_full_recruitment, bad);
        } else if (key == "reset_timer_on_reexposure") {
            read_bool(key, value, rc.sim.reset_timer_on_reexposure, bad);
        } else if (key == "output_dir") {
            if (value.is_string()) {
                rc.output_dir = value.get<std::string>();
            } else {
                bad.push_back(key);
            }
        } else if (key == "sweep") {
            if (!value.is_object()) {
                bad.push_back(key);
                continue;
            }
            for (const auto& [skey, svalue] : value.items()) {
                if (skey == "replicates") {
                    if (svalue.is_number_integer() && valid_u32(svalue.get<double>()) &&
                        svalue.get<std::uint32_t>() >= 1) {
                        rc.replicates = svalue.get<std::uint32_t>();
                    } else {
                        bad.emplace_back("sweep.replicates");
                    }
                } else if (skey == "axes") {
                    if (!svalue.is_object()) {
                        bad.emplace_back("sweep.axes");
                        continue;
                    }
                    for (const auto& [name, values] : svalue.items()) {
                        const NumericField* f = find_field(name);
                        bool ok = f != nullptr && values.is_array() && !values.empty();
                        SweepAxis axis{name, {}};
                        if (ok) {
                            for (const auto& v : values) {
                                if (!v.is_number() || (f->integral && !valid_u32(v.get<double>()))) {
                                    ok = false;
                                    break;
                                }
                                axis.values.push_back(v.get<double>());
                            }
                        }
                        if (ok) {
                            rc.axes.push_back(std::move(axis));
                        } else {
                            bad.push_back("sweep.axes." + name);
                        }
                    }
                } else {
                    bad.push_back("sweep." + skey);
                }
            }
        } else if (const NumericField* f = find_field(key)) {
            read_numeric(*f, value, rc.sim, bad);
        } else {
            bad.push_back(key);
        }
    }

    try {
        validate(rc.sim);
    } catch (const ConfigError& e) {
        for (const auto& f : e.fields()) {
            if (std::find(bad.begin(), bad.end(), f) == bad.end()) {
                bad.push_back(f);
            }
        }
    }
    if (!bad.empty()) {
        throw ConfigError(std::move(bad));
    }
    std::sort(rc.axes.begin(), rc.axes.end(),
              [](const SweepAxis& a, const SweepAxis& b) { return a.name < b.name; });
    return rc;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::ios_base::failure("cannot open config " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError({"<root>"}, std::string("malformed JSON: ") + e.what());
    }
    return parse_run_config(doc);
}

json to_json(const SimConfig& config) {
    json doc = json::object();
    json model = json::object();
    for (const auto& f : numeric_fields()) {
        const double v = f.get(config);
        json value = f.integral ? json(static_cast<std::uint32_t>(v)) : json(v);
        if (f.name.starts_with("sharing_model.")) {
            model[f.name.substr(std::string("sharing_model.").size())] = value;
        } else {
            doc[f.name] = value;
        }
    }
    doc["sharing_model"] = model;
    doc["total_memes"] = config.total_memes ? json(*config.total_memes) : json(nullptr);
    doc["seed"] = config.seed;
    doc["require_full_recruitment"] = config.require_full_recruitment;
    doc["reset_timer_on_reexposure"] = config.reset_timer_on_reexposure;
    return doc;
}

}  // namespace memesim::app
