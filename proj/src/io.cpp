#include "alglab/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace alglab {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_doc(const std::string& text, const std::string& what) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(what + ": " + e.what());
    }
}

const ordered_json& need(const ordered_json& j, const char* key, const std::string& what) {
    auto it = j.find(key);
    if (it == j.end()) throw ValidationError(what + ": missing key '" + key + "'");
    return *it;
}

std::string need_string(const ordered_json& j, const char* key, const std::string& what) {
    const ordered_json& v = need(j, key, what);
    if (!v.is_string()) throw ValidationError(what + ": key '" + key + "' is not a string");
    return v.get<std::string>();
}

int need_int(const ordered_json& j, const char* key, const std::string& what) {
    const ordered_json& v = need(j, key, what);
    if (!v.is_number_integer()) throw ValidationError(what + ": key '" + key + "' is not an integer");
    return v.get<int>();
}

// Depth-first walk of an arity-deep nested table; leaves are element names.
void walk_table(const ordered_json& node, int depth_left, size_t n, std::vector<std::string>& out,
                const std::string& what) {
    if (depth_left == 0) {
        if (!node.is_string()) throw ValidationError(what + ": table entry is not an element name");
        out.push_back(node.get<std::string>());
        return;
    }
    if (!node.is_array() || node.size() != n)
        throw ValidationError(what + ": table row has " +
                              std::to_string(node.is_array() ? node.size() : 0) + " entries, expected " +
                              std::to_string(n));
    for (const auto& child : node) walk_table(child, depth_left - 1, n, out, what);
}

ordered_json build_table(const FiniteAlgebra& a, const std::vector<int>& flat, int arity, size_t& cursor) {
    if (arity == 0) return a.element_name(flat[cursor++]);
    ordered_json row = ordered_json::array();
    for (int i = 0; i < a.size(); ++i) row.push_back(build_table(a, flat, arity - 1, cursor));
    return row;
}

AlgebraPtr algebra_from_doc(const ordered_json& doc, const std::string& what) {
    if (!doc.is_object()) throw ValidationError(what + ": document is not an object");
    std::string name = need_string(doc, "name", what);
    int n = need_int(doc, "size", what);
    if (n < 1) throw ValidationError(what + ": size must be positive");

    const ordered_json& elems = need(doc, "elements", what);
    if (!elems.is_array() || static_cast<int>(elems.size()) != n)
        throw ValidationError(what + ": 'elements' must list exactly " + std::to_string(n) + " names");
    std::vector<std::string> names;
    std::map<std::string, int> index;
    for (const auto& e : elems) {
        if (!e.is_string()) throw ValidationError(what + ": element name is not a string");
        std::string s = e.get<std::string>();
        if (!index.emplace(s, static_cast<int>(names.size())).second)
            throw ValidationError(what + ": duplicate element name '" + s + "'");
        names.push_back(std::move(s));
    }

    std::string unit_name = need_string(doc, "unit", what);
    auto uit = index.find(unit_name);
    if (uit == index.end()) throw ValidationError(what + ": unit '" + unit_name + "' is not an element");
    int unit = uit->second;

    const ordered_json& ops = need(doc, "operations", what);
    if (!ops.is_object()) throw ValidationError(what + ": 'operations' is not an object");
    std::vector<OpDecl> decls;
    std::vector<std::vector<int>> tables;
    bool has_constant = false;
    for (auto it = ops.begin(); it != ops.end(); ++it) {
        const std::string& sym = it.key();
        const ordered_json& spec = it.value();
        std::string ctx = what + ": operation '" + sym + "'";
        if (!spec.is_object()) throw ValidationError(ctx + " is not an object");
        int arity = need_int(spec, "arity", ctx);
        if (arity < 0) throw ValidationError(ctx + ": negative arity");
        if (arity == 0) has_constant = true;
        std::vector<std::string> entries;
        walk_table(need(spec, "table", ctx), arity, static_cast<size_t>(n), entries, ctx);
        std::vector<int> flat;
        flat.reserve(entries.size());
        for (const std::string& s : entries) {
            auto eit = index.find(s);
            if (eit == index.end()) throw ValidationError(ctx + ": unknown element '" + s + "'");
            flat.push_back(eit->second);
        }
        decls.push_back({sym, arity});
        tables.push_back(std::move(flat));
    }
    if (!has_constant) {
        // Supply the implicit unit constant.
        decls.push_back({"1", 0});
        tables.push_back({unit});
    }
    std::string unit_symbol;
    for (const OpDecl& d : decls)
        if (d.arity == 0) unit_symbol = d.symbol;
    Signature sig(std::move(decls), unit_symbol);
    if (sig.unit_symbol() != unit_symbol) throw ValidationError(what + ": inconsistent unit constant");
    AlgebraPtr a = make_algebra(std::move(name), std::move(sig), std::move(names), unit,
                                std::move(tables));
    return a;
}

Term parse_named(const std::string& src, const std::string& what) {
    try {
        return parse_term(src);
    } catch (const ValidationError& e) {
        throw ValidationError(what + ": in term '" + src + "': " + e.what());
    }
}

VarietySpec variety_from_doc(const ordered_json& doc, const std::string& what) {
    if (!doc.is_object()) throw ValidationError(what + ": document is not an object");
    VarietySpec b;
    b.name = need_string(doc, "name", what);
    const ordered_json& ids = need(doc, "identities", what);
    if (!ids.is_array()) throw ValidationError(what + ": 'identities' is not an array");
    for (const auto& id : ids) {
        if (!id.is_object()) throw ValidationError(what + ": identity is not an object");
        Identity i{parse_named(need_string(id, "lhs", what), what),
                   parse_named(need_string(id, "rhs", what), what)};
        b.identities.push_back(std::move(i));
    }
    if (auto wit = doc.find("words"); wit != doc.end()) {
        if (!wit->is_array()) throw ValidationError(what + ": 'words' is not an array");
        for (const auto& w : *wit) {
            if (!w.is_string()) throw ValidationError(what + ": scheme word is not a string");
            b.word_scheme.push_back(parse_named(w.get<std::string>(), what));
        }
    }
    return b;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write '" + path + "'");
    out << text;
    if (!out) throw ValidationError("write to '" + path + "' failed");
}

}  // namespace

AlgebraPtr load_algebra(const std::string& path) {
    return algebra_from_doc(parse_doc(slurp(path), path), path);
}

VarietySpec load_variety(const std::string& path) {
    return variety_from_doc(parse_doc(slurp(path), path), path);
}

void save_algebra(const FiniteAlgebra& a, const std::string& path) { spill(path, algebra_to_json(a)); }

void save_variety(const VarietySpec& b, const std::string& path) { spill(path, variety_to_json(b)); }

AlgebraPtr algebra_from_json(const std::string& text) {
    return algebra_from_doc(parse_doc(text, "algebra document"), "algebra document");
}

std::string algebra_to_json(const FiniteAlgebra& a) {
    ordered_json doc;
    doc["name"] = a.name();
    doc["size"] = a.size();
    doc["elements"] = a.element_names();
    doc["unit"] = a.element_name(a.unit());
    ordered_json ops = ordered_json::object();
    const Signature& sig = a.signature();
    for (int op = 0; op < sig.op_count(); ++op) {
        ordered_json spec;
        spec["arity"] = sig.op(op).arity;
        size_t cursor = 0;
        spec["table"] = build_table(a, a.table(op), sig.op(op).arity, cursor);
        ops[sig.op(op).symbol] = std::move(spec);
    }
    doc["operations"] = std::move(ops);
    return doc.dump(2) + "\n";
}

VarietySpec variety_from_json(const std::string& text) {
    return variety_from_doc(parse_doc(text, "variety document"), "variety document");
}

std::string variety_to_json(const VarietySpec& b) {
    ordered_json doc;
    doc["name"] = b.name;
    ordered_json ids = ordered_json::array();
    for (const Identity& i : b.identities)
        ids.push_back(ordered_json{{"lhs", print_term(i.lhs)}, {"rhs", print_term(i.rhs)}});
    doc["identities"] = std::move(ids);
    if (!b.word_scheme.empty()) {
        ordered_json words = ordered_json::array();
        for (const Term& w : b.word_scheme) words.push_back(print_term(w));
        doc["words"] = std::move(words);
    }
    return doc.dump(2) + "\n";
}

}  // namespace alglab
