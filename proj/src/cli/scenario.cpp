#include "collabgain/cli/scenario.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include <json.hpp>

namespace collabgain::cli {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ValidationError("scenario: " + where + ": " + what);
}

void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) fail(where, "expected an object");
    for (const auto& [key, _] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) fail(where, "unknown field \"" + key + "\"");
    }
}

double number(const json& obj, const std::string& where, const char* key) {
    if (!obj.contains(key)) fail(where, std::string("missing field \"") + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_number()) fail(where + "." + key, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(where + "." + key, "must be finite");
    return x;
}

double positive(const json& obj, const std::string& where, const char* key) {
    const double x = number(obj, where, key);
    if (!(x > 0.0)) fail(where + "." + key, "must be > 0");
    return x;
}

std::string text(const json& obj, const std::string& where, const char* key) {
    if (!obj.contains(key) || !obj.at(key).is_string()) {
        fail(where, std::string("field \"") + key + "\" must be a string");
    }
    return obj.at(key).get<std::string>();
}

Point2 point(const json& obj, const std::string& where, const char* key) {
    if (!obj.contains(key)) fail(where, std::string("missing field \"") + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        fail(where + "." + key, "expected [x, y]");
    }
    return Point2{v[0].get<double>(), v[1].get<double>()};
}

std::vector<RelayCandidate> candidates(const json& arr, const std::string& where) {
    if (!arr.is_array()) fail(where, "expected an array");
    std::vector<RelayCandidate> out;
    for (size_t i = 0; i < arr.size(); ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        only_keys(arr[i], at, {"id", "h_sr", "h_rd"});
        const double h_sr = number(arr[i], at, "h_sr");
        const double h_rd = number(arr[i], at, "h_rd");
        if (h_sr < 0.0 || h_rd < 0.0) fail(at, "gains must be >= 0");
        out.push_back({text(arr[i], at, "id"), h_sr, h_rd});
    }
    return out;
}

Flow flow(const json& obj, const std::string& at) {
    only_keys(obj, at, {"source", "destination", "h_sd", "k", "epsilon", "rate", "candidates"});
    Flow f{text(obj, at, "source"),
           text(obj, at, "destination"),
           positive(obj, at, "h_sd"),
           positive(obj, at, "k"),
           positive(obj, at, "epsilon"),
           std::nullopt,
           {}};
    if (obj.contains("rate")) f.rate = positive(obj, at, "rate");
    if (obj.contains("candidates")) f.candidates = candidates(obj.at("candidates"), at + ".candidates");
    return f;
}

}  // namespace

LinkGains Scenario::link_gains() const {
    if (gains) return *gains;
    if (placement) return gains_from_placement(*placement);
    throw ValidationError("scenario: needs \"gains\" or \"placement\"");
}

OperatingPoint Scenario::operating() const {
    if (!epsilon || !k) throw ValidationError("scenario: needs \"operating\" with epsilon and k");
    return OperatingPoint(*epsilon, *k);
}

double Scenario::rate_ratio() const {
    if (!k) throw ValidationError("scenario: needs \"operating.k\"");
    return *k;
}

double Scenario::required_rate() const {
    if (!rate) throw ValidationError("scenario: needs \"rate\"");
    return *rate;
}

Scenario parse_scenario(std::string_view input) {
    json doc;
    try {
        doc = json::parse(input);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("scenario: malformed JSON: ") + e.what());
    }
    only_keys(doc, "scenario", {"gains", "placement", "operating", "rate", "candidates", "flows", "mode"});
    if (doc.contains("gains") && doc.contains("placement")) {
        fail("scenario", "\"gains\" and \"placement\" are mutually exclusive");
    }

    Scenario s;
    if (doc.contains("gains")) {
        const json& g = doc.at("gains");
        only_keys(g, "gains", {"h12", "h13", "h23"});
        s.gains = LinkGains(number(g, "gains", "h12"), number(g, "gains", "h13"), number(g, "gains", "h23"));
    }
    if (doc.contains("placement")) {
        const json& p = doc.at("placement");
        only_keys(p, "placement", {"source", "destination", "relay", "eta"});
        s.placement = Placement{point(p, "placement", "source"), point(p, "placement", "destination"),
                                point(p, "placement", "relay"), positive(p, "placement", "eta")};
    }
    if (doc.contains("operating")) {
        const json& o = doc.at("operating");
        only_keys(o, "operating", {"epsilon", "k"});
        if (o.contains("epsilon")) s.epsilon = positive(o, "operating", "epsilon");
        s.k = positive(o, "operating", "k");
    }
    if (doc.contains("rate")) s.rate = positive(doc, "scenario", "rate");
    if (doc.contains("candidates")) s.candidates = candidates(doc.at("candidates"), "candidates");
    if (doc.contains("flows")) {
        const json& arr = doc.at("flows");
        if (!arr.is_array() || arr.empty()) fail("flows", "expected a non-empty array");
        std::vector<Flow> flows;
        for (size_t i = 0; i < arr.size(); ++i) flows.push_back(flow(arr[i], "flows[" + std::to_string(i) + "]"));
        s.flows = std::move(flows);
    }
    if (doc.contains("mode")) {
        const std::string m = text(doc, "scenario", "mode");
        if (m == "rate") {
            s.mode = SelectionMode::Rate;
        } else if (m == "resource") {
            s.mode = SelectionMode::Resource;
        } else {
            fail("mode", "expected \"rate\" or \"resource\"");
        }
    }
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read scenario " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

}  // namespace collabgain::cli
