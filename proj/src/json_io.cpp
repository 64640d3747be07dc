#include "catcol/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "catcol/errors.hpp"

namespace catcol {

using json = nlohmann::ordered_json;

namespace {

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("JSON parse error: ") + e.what());
    }
}

std::string expect_string(const json& j, const std::string& path) {
    if (!j.is_string()) throw InputError(path + ": expected string");
    return j.get<std::string>();
}

const json& expect_object(const json& j, const std::string& path) {
    if (!j.is_object()) throw InputError(path + ": expected object");
    return j;
}

const json& expect_array(const json& j, const std::string& path) {
    if (!j.is_array()) throw InputError(path + ": expected array");
    return j;
}

std::vector<std::string> string_array(const json& j, const std::string& path) {
    expect_array(j, path);
    std::vector<std::string> out;
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(expect_string(j[i], path + "/" + std::to_string(i)));
    return out;
}

void reject_unknown_fields(const json& obj, const std::vector<std::string>& allowed,
                           const std::string& path) {
    for (const auto& [key, val] : obj.items()) {
        (void)val;
        bool ok = false;
        for (const auto& a : allowed)
            if (key == a) ok = true;
        if (!ok) throw InputError(path + ": unknown field \"" + key + "\"");
    }
}

Caterpillar caterpillar_from_json(const json& j, const std::string& path) {
    expect_object(j, path);
    reject_unknown_fields(j, {"backbone", "leaves"}, path);
    if (!j.contains("backbone")) throw InputError(path + ": missing field \"backbone\"");
    Caterpillar t;
    t.backbone = string_array(j["backbone"], path + "/backbone");
    t.leaves.assign(t.backbone.size(), {});
    if (j.contains("leaves")) {
        const auto& lv = expect_object(j["leaves"], path + "/leaves");
        for (const auto& [anchor, arr] : lv.items()) {
            auto it = std::find(t.backbone.begin(), t.backbone.end(), anchor);
            if (it == t.backbone.end())
                throw InputError(path + "/leaves: anchor \"" + anchor +
                                 "\" is not a backbone vertex");
            size_t pos = static_cast<size_t>(it - t.backbone.begin());
            auto ids = string_array(arr, path + "/leaves/" + anchor);
            for (auto& id : ids) t.leaves[pos].push_back(std::move(id));
        }
    }
    return t;
}

ColorSet colorset_from_json(const json& j, const std::string& path) {
    expect_array(j, path);
    ColorSet s;
    for (size_t i = 0; i < j.size(); ++i) {
        const auto& e = j[i];
        if (!e.is_number_integer())
            throw InputError(path + "/" + std::to_string(i) + ": expected integer color");
        long long c = e.get<long long>();
        if (c < 1 || c > 3)
            throw InputError(path + "/" + std::to_string(i) + ": color out of range 1..3");
        if (s.contains(static_cast<int>(c)))
            throw InputError(path + ": duplicate color " + std::to_string(c));
        s.add(static_cast<int>(c));
    }
    return s;
}

json caterpillar_to_json(const Caterpillar& t) {
    json j;
    j["backbone"] = t.backbone;
    json leaves = json::object();
    for (size_t p = 0; p < t.backbone.size(); ++p)
        if (!t.leaves[p].empty()) leaves[t.backbone[p]] = t.leaves[p];
    j["leaves"] = std::move(leaves);
    return j;
}

std::string dump(const json& j) { return j.dump(2); }

}  // namespace

Instance parse_instance(const std::string& text) {
    json j = parse_text(text);
    expect_object(j, "/");
    reject_unknown_fields(j, {"x", "y", "edges", "lists", "caterpillar", "meta"}, "/");
    for (const char* req : {"x", "y", "edges"})
        if (!j.contains(req))
            throw InputError(std::string("/: missing field \"") + req + "\"");

    auto xs = string_array(j["x"], "/x");
    auto ys = string_array(j["y"], "/y");

    std::vector<std::pair<std::string, std::string>> edges;
    const auto& je = expect_array(j["edges"], "/edges");
    for (size_t i = 0; i < je.size(); ++i) {
        std::string path = "/edges/" + std::to_string(i);
        const auto& e = expect_array(je[i], path);
        if (e.size() != 2) throw InputError(path + ": expected a pair of vertex ids");
        edges.emplace_back(expect_string(e[0], path + "/0"), expect_string(e[1], path + "/1"));
    }

    Instance inst;
    inst.graph = BipartiteGraph(std::move(xs), std::move(ys), edges);

    if (j.contains("lists")) {
        const auto& jl = expect_object(j["lists"], "/lists");
        ListAssignment l;
        for (const auto& [id, arr] : jl.items())
            l.lists[id] = colorset_from_json(arr, "/lists/" + id);
        validate_lists_cover(inst.graph, l);
        inst.lists = std::move(l);
    }

    if (j.contains("caterpillar")) {
        Caterpillar t = caterpillar_from_json(j["caterpillar"], "/caterpillar");
        [[maybe_unused]] CaterpillarIndex check(inst.graph, t);  // throws unless it covers X exactly
        inst.caterpillar = std::move(t);
    }
    return inst;
}

std::string read_file_or_stdin(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Instance load_instance(const std::string& path) {
    return parse_instance(read_file_or_stdin(path));
}

std::string serialize_instance(const Instance& inst) {
    const auto& g = inst.graph;
    json j;
    j["x"] = g.x_ids();
    j["y"] = g.y_ids();
    json edges = json::array();
    for (const auto& [xi, yi] : g.edges())
        edges.push_back(json::array({g.x_id(xi), g.y_id(yi)}));
    j["edges"] = std::move(edges);
    if (inst.lists) {
        json lists = json::object();
        for (const auto& id : g.x_ids()) lists[id] = inst.lists->at(id).colors();
        for (const auto& id : g.y_ids()) lists[id] = inst.lists->at(id).colors();
        j["lists"] = std::move(lists);
    }
    if (inst.caterpillar) j["caterpillar"] = caterpillar_to_json(*inst.caterpillar);
    return dump(j);
}

Caterpillar parse_caterpillar_document(const std::string& text) {
    json j = parse_text(text);
    expect_object(j, "/");
    if (j.contains("backbone")) return caterpillar_from_json(j, "/");
    reject_unknown_fields(j, {"status", "caterpillar", "meta"}, "/");
    if (!j.contains("caterpillar"))
        throw InputError("/: expected a caterpillar document (no \"backbone\" or \"caterpillar\" field)");
    return caterpillar_from_json(j["caterpillar"], "/caterpillar");
}

Coloring parse_coloring_document(const std::string& text) {
    json j = parse_text(text);
    expect_object(j, "/");
    reject_unknown_fields(j, {"status", "colors", "meta"}, "/");
    if (!j.contains("colors"))
        throw InputError("/: expected a coloring document (no \"colors\" field)");
    const auto& jc = expect_object(j["colors"], "/colors");
    Coloring c;
    for (const auto& [id, val] : jc.items()) {
        if (!val.is_number_integer())
            throw InputError("/colors/" + id + ": expected integer color");
        long long col = val.get<long long>();
        if (col < 1 || col > 3)
            throw InputError("/colors/" + id + ": color out of range 1..3");
        c.colors[id] = static_cast<int>(col);
    }
    return c;
}

std::string coloring_document(const BipartiteGraph& g, const Coloring& c) {
    json j;
    j["status"] = "colored";
    json colors = json::object();
    for (const auto& id : g.x_ids()) colors[id] = c.colors.at(id);
    for (const auto& id : g.y_ids()) colors[id] = c.colors.at(id);
    j["colors"] = std::move(colors);
    return dump(j);
}

std::string infeasible_document() {
    json j;
    j["status"] = "infeasible";
    return dump(j);
}

std::string caterpillar_document(const Caterpillar& t) {
    json j;
    j["status"] = "caterpillar-convex";
    j["caterpillar"] = caterpillar_to_json(t);
    return dump(j);
}

std::string not_convex_document(const std::string& reason) {
    json j;
    j["status"] = "not-caterpillar-convex";
    if (!reason.empty()) j["reason"] = reason;
    return dump(j);
}

std::string verify_accept_document() {
    json j;
    j["status"] = "accepted";
    return dump(j);
}

std::string verify_reject_document_y(const std::string& witness_y) {
    json j;
    j["status"] = "rejected";
    j["witness"] = {{"y", witness_y}};
    return dump(j);
}

std::string verify_reject_document_vertex(const std::string& vertex) {
    json j;
    j["status"] = "rejected";
    j["witness"] = {{"vertex", vertex}};
    return dump(j);
}

std::string verify_reject_document_edge(const std::string& x, const std::string& y) {
    json j;
    j["status"] = "rejected";
    j["witness"] = {{"edge", json::array({x, y})}};
    return dump(j);
}

}  // namespace catcol
