#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>

#include "surfdyn/spec_model.hpp"

namespace surfdyn {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

int line_of_offset(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + byte, '\n'));
}

// Best-effort line lookup for semantic errors: the nth occurrence of the
// quoted token in the source text.
int line_of_token(std::string_view text, const std::string& token, int occurrence = 1) {
    const std::string needle = "\"" + token + "\"";
    std::size_t pos = 0;
    for (int i = 0; i < occurrence; ++i) {
        pos = text.find(needle, pos == 0 && i == 0 ? 0 : pos + 1);
        if (pos == std::string_view::npos) return 0;
    }
    return line_of_offset(text, pos);
}

[[noreturn]] void parse_fail(std::string_view text, const std::string& msg,
                             const std::string& token, int occurrence = 1) {
    const int line = line_of_token(text, token, occurrence);
    std::string full = msg;
    if (line > 0) full += " (line " + std::to_string(line) + ")";
    throw ParseError(full, line);
}

void reject_unknown_keys(std::string_view text, const json& obj,
                         std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&](const char* k) { return key == k; }) == allowed.end())
            parse_fail(text, "unknown field \"" + key + "\" in " + where, key);
    }
}

const json& require_key(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError("missing field \"" + std::string(key) + "\" in " + where, 0);
    return *it;
}

std::string require_string(std::string_view text, const json& value, const char* key,
                           const std::string& where) {
    if (!value.is_string())
        parse_fail(text, "field \"" + std::string(key) + "\" in " + where +
                             " must be a string",
                   key);
    return value.get<std::string>();
}

long long require_integer(std::string_view text, const json& value, const char* key,
                          const std::string& where) {
    if (!value.is_number_integer())
        parse_fail(text, "field \"" + std::string(key) + "\" in " + where +
                             " must be an integer",
                   key);
    if (value.is_number_unsigned() && value.get<std::uint64_t>() > INT64_MAX)
        parse_fail(text, "field \"" + std::string(key) + "\" in " + where +
                             " is out of range",
                   key);
    return value.get<long long>();
}

void check_duplicate(std::string_view text, std::set<std::string>& seen,
                     const std::string& id, const char* what) {
    if (!seen.insert(id).second)
        parse_fail(text, std::string("duplicate ") + what + " id \"" + id + "\"", id, 2);
}

} // namespace

DiffeoSpec parse_spec(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        const int line = line_of_offset(text, e.byte);
        throw ParseError("JSON syntax error at line " + std::to_string(line) + ": " +
                             e.what(),
                         line);
    }
    if (!root.is_object()) throw ParseError("top level must be a JSON object", 1);
    reject_unknown_keys(text, root, {"basic_sets", "complement_components"}, "spec");

    DiffeoSpec spec;
    std::set<std::string> set_ids, bunch_ids, comp_ids;

    const json& sets = require_key(root, "basic_sets", "spec");
    if (!sets.is_array() || sets.empty())
        parse_fail(text, "\"basic_sets\" must be a non-empty array", "basic_sets");
    for (const auto& jset : sets) {
        if (!jset.is_object())
            parse_fail(text, "entries of \"basic_sets\" must be objects", "basic_sets");
        reject_unknown_keys(text, jset, {"id", "kind", "bunches"}, "basic set");
        BasicSet bs;
        bs.id = require_string(text, require_key(jset, "id", "basic set"), "id",
                               "basic set");
        check_duplicate(text, set_ids, bs.id, "basic set");
        const std::string kind = require_string(
            text, require_key(jset, "kind", "basic set"), "kind", "basic set");
        if (kind == "attractor")
            bs.kind = BasicSetKind::Attractor;
        else if (kind == "repeller")
            bs.kind = BasicSetKind::Repeller;
        else
            parse_fail(text, "kind must be \"attractor\" or \"repeller\", got \"" + kind +
                                 "\"",
                       kind);
        const json& bunches = require_key(jset, "bunches", "basic set");
        if (!bunches.is_array() || bunches.empty())
            parse_fail(text, "basic set \"" + bs.id + "\" must have a non-empty bunches array",
                       bs.id);
        for (const auto& jbunch : bunches) {
            if (!jbunch.is_object())
                parse_fail(text, "entries of \"bunches\" must be objects", "bunches");
            reject_unknown_keys(text, jbunch, {"id", "degree"}, "bunch");
            Bunch bunch;
            bunch.id =
                require_string(text, require_key(jbunch, "id", "bunch"), "id", "bunch");
            check_duplicate(text, bunch_ids, bunch.id, "bunch");
            bunch.degree = require_integer(
                text, require_key(jbunch, "degree", "bunch"), "degree", "bunch");
            bs.bunches.push_back(std::move(bunch));
        }
        spec.basic_sets.push_back(std::move(bs));
    }

    const json& comps = require_key(root, "complement_components", "spec");
    if (!comps.is_array() || comps.empty())
        parse_fail(text, "\"complement_components\" must be a non-empty array",
                   "complement_components");
    for (const auto& jcomp : comps) {
        if (!jcomp.is_object())
            parse_fail(text, "entries of \"complement_components\" must be objects",
                       "complement_components");
        reject_unknown_keys(text, jcomp, {"id", "attractor_bunch", "repeller_bunch"},
                            "component");
        ComplementComponent c;
        c.id = require_string(text, require_key(jcomp, "id", "component"), "id",
                              "component");
        check_duplicate(text, comp_ids, c.id, "component");
        c.attractor_bunch = require_string(
            text, require_key(jcomp, "attractor_bunch", "component"),
            "attractor_bunch", "component");
        c.repeller_bunch = require_string(
            text, require_key(jcomp, "repeller_bunch", "component"),
            "repeller_bunch", "component");
        spec.complement_components.push_back(std::move(c));
    }

    return spec;
}

std::string serialize_spec(const DiffeoSpec& spec) {
    const DiffeoSpec canon = canonicalized(spec);
    ordered_json root;
    root["basic_sets"] = ordered_json::array();
    for (const auto& bs : canon.basic_sets) {
        ordered_json jset;
        jset["id"] = bs.id;
        jset["kind"] = to_string(bs.kind);
        jset["bunches"] = ordered_json::array();
        for (const auto& b : bs.bunches) {
            ordered_json jbunch;
            jbunch["id"] = b.id;
            jbunch["degree"] = b.degree;
            jset["bunches"].push_back(std::move(jbunch));
        }
        root["basic_sets"].push_back(std::move(jset));
    }
    root["complement_components"] = ordered_json::array();
    for (const auto& c : canon.complement_components) {
        ordered_json jcomp;
        jcomp["id"] = c.id;
        jcomp["attractor_bunch"] = c.attractor_bunch;
        jcomp["repeller_bunch"] = c.repeller_bunch;
        root["complement_components"].push_back(std::move(jcomp));
    }
    return root.dump(2) + "\n";
}

std::string ValidationReport::to_json() const {
    ordered_json root;
    root["valid"] = valid;
    root["violations"] = ordered_json::array();
    for (const auto& violation : violations) {
        ordered_json jv;
        jv["rule_code"] = violation.rule_code;
        jv["message"] = violation.message;
        jv["ids"] = violation.ids;
        root["violations"].push_back(std::move(jv));
    }
    return root.dump(2) + "\n";
}

} // namespace surfdyn
