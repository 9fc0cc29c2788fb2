#include "rss/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace rss {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const char* what) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; }))
            throw InputError(std::string("unknown key \"") + it.key() + "\" in " + what);
    }
}

const json& require(const json& obj, const char* key, const char* what) {
    auto it = obj.find(key);
    if (it == obj.end()) throw InputError(std::string("missing key \"") + key + "\" in " + what);
    return *it;
}

double number(const json& obj, const char* key, const char* what) {
    const json& v = require(obj, key, what);
    if (!v.is_number()) throw InputError(std::string("\"") + key + "\" must be a number in " + what);
    return v.get<double>();
}

int integer(const json& obj, const char* key, const char* what) {
    const json& v = require(obj, key, what);
    if (!v.is_number_integer()) throw InputError(std::string("\"") + key + "\" must be an integer in " + what);
    return v.get<int>();
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

json parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

}  // namespace

Instance instance_from_json(const json& doc) {
    constexpr const char* what = "instance";
    if (!doc.is_object()) throw InputError("instance document must be a JSON object");
    reject_unknown(doc, {"T", "K", "W", "h", "b", "I0", "beta", "demand", "label"}, what);

    Instance inst;
    inst.T = integer(doc, "T", what);
    inst.params.K = number(doc, "K", what);
    inst.params.W = number(doc, "W", what);
    inst.params.h = number(doc, "h", what);
    inst.params.b = number(doc, "b", what);
    inst.I0 = integer(doc, "I0", what);
    if (doc.contains("beta")) inst.beta = number(doc, "beta", what);
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) throw InputError("\"label\" must be a string");
        inst.label = doc["label"].get<std::string>();
    }
    const json& demand = require(doc, "demand", what);
    if (!demand.is_array()) throw InputError("\"demand\" must be an array");
    for (const json& d : demand) {
        constexpr const char* dwhat = "demand entry";
        if (!d.is_object()) throw InputError("demand entries must be objects");
        reject_unknown(d, {"kind", "mean", "cv"}, dwhat);
        const json& kind = require(d, "kind", dwhat);
        if (!kind.is_string()) throw InputError("demand \"kind\" must be a string");
        DemandSpec spec;
        const std::string k = lower(kind.get<std::string>());
        if (k == "poisson") spec.kind = DemandKind::Poisson;
        else if (k == "normal") spec.kind = DemandKind::Normal;
        else throw InputError("unknown demand kind \"" + kind.get<std::string>() + "\"");
        spec.mean = number(d, "mean", dwhat);
        if (d.contains("cv")) spec.cv = number(d, "cv", dwhat);
        inst.demand.push_back(spec);
    }
    try {
        validate(inst);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return inst;
}

nlohmann::ordered_json to_json(const Instance& inst) {
    nlohmann::ordered_json demand = nlohmann::ordered_json::array();
    for (const auto& d : inst.demand) {
        if (d.kind == DemandKind::Poisson)
            demand.push_back({{"kind", "poisson"}, {"mean", d.mean}});
        else
            demand.push_back({{"kind", "normal"}, {"mean", d.mean}, {"cv", d.cv}});
    }
    nlohmann::ordered_json doc = {{"T", inst.T},         {"K", inst.params.K}, {"W", inst.params.W}, {"h", inst.params.h},
                {"b", inst.params.b},  {"I0", inst.I0},      {"beta", inst.beta},  {"demand", demand}};
    if (!inst.label.empty()) doc["label"] = inst.label;
    return doc;
}

Instance read_instance(const std::filesystem::path& path) {
    try {
        return instance_from_json(parse_file(path));
    } catch (const json::exception& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

void write_instance(const std::filesystem::path& path, const Instance& instance) {
    std::ofstream out(path);
    out << to_json(instance).dump(2) << '\n';
    if (!out) throw OutputError("cannot write " + path.string());
}

PolicyDocument policy_from_json(const json& doc) {
    constexpr const char* what = "policy";
    if (!doc.is_object()) throw InputError("policy document must be a JSON object");
    reject_unknown(doc, {"reviews", "expected_cost"}, what);
    PolicyDocument out;
    const json& reviews = require(doc, "reviews", what);
    if (!reviews.is_array()) throw InputError("\"reviews\" must be an array");
    for (const json& r : reviews) {
        constexpr const char* rwhat = "review";
        if (!r.is_object()) throw InputError("reviews must be objects");
        reject_unknown(r, {"t", "R", "s", "S"}, rwhat);
        out.policy.reviews.push_back({integer(r, "t", rwhat), integer(r, "R", rwhat), integer(r, "s", rwhat),
                                      integer(r, "S", rwhat)});
    }
    if (doc.contains("expected_cost")) out.expected_cost = number(doc, "expected_cost", what);
    return out;
}

nlohmann::ordered_json to_json(const Policy& policy, double expected_cost) {
    nlohmann::ordered_json reviews = nlohmann::ordered_json::array();
    for (const auto& r : policy.reviews) reviews.push_back({{"t", r.t}, {"R", r.R}, {"s", r.s}, {"S", r.S}});
    return {{"reviews", reviews}, {"expected_cost", expected_cost}};
}

PolicyDocument read_policy(const std::filesystem::path& path) {
    try {
        return policy_from_json(parse_file(path));
    } catch (const json::exception& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

}  // namespace rss
