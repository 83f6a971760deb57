#include "alglab/report.hpp"

#include <cstdint>
#include <vector>

namespace alglab {

std::string inputs_digest(std::span<const std::string> parts) {
    uint64_t h = 14695981039346656037ull;
    auto eat = [&h](unsigned char c) {
        h ^= c;
        h *= 1099511628211ull;
    };
    for (const std::string& p : parts) {
        for (char c : p) eat(static_cast<unsigned char>(c));
        eat(0x1f);  // part separator, so ("ab","c") != ("a","bc")
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

report_json members_json(const NormalSubobject& s) {
    report_json arr = report_json::array();
    for (const std::string& n : s.member_names()) arr.push_back(n);
    return arr;
}

report_json partition_json(const FiniteAlgebra& a, const Congruence& c) {
    report_json arr = report_json::array();
    for (const auto& blk : c.blocks()) {
        report_json names = report_json::array();
        for (int e : blk) names.push_back(a.element_name(e));
        arr.push_back(std::move(names));
    }
    return arr;
}

namespace {

bool scalar_array(const report_json& j) {
    for (const auto& e : j)
        if (e.is_object() || e.is_array()) return false;
    return true;
}

std::string scalar_text(const report_json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void render(const report_json& j, int indent, std::ostream& out) {
    const std::string pad(static_cast<size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const report_json& v = it.value();
            if (v.is_object() || (v.is_array() && !scalar_array(v))) {
                out << pad << it.key() << ":\n";
                render(v, indent + 1, out);
            } else if (v.is_array()) {
                out << pad << it.key() << ":";
                for (const auto& e : v) out << " " << scalar_text(e);
                out << "\n";
            } else {
                out << pad << it.key() << ": " << scalar_text(v) << "\n";
            }
        }
        return;
    }
    if (j.is_array()) {
        for (const auto& e : j) {
            if (e.is_object() || e.is_array()) {
                out << pad << "-\n";
                render(e, indent + 1, out);
            } else {
                out << pad << "- " << scalar_text(e) << "\n";
            }
        }
        return;
    }
    out << pad << scalar_text(j) << "\n";
}

}  // namespace

void emit_report(const report_json& doc, bool text, std::ostream& out) {
    if (text)
        render(doc, 0, out);
    else
        out << doc.dump(2) << "\n";
}

}  // namespace alglab
