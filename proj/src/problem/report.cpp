#include "icis/problem.hpp"

#include <sstream>

namespace icis {

namespace {

using Json = nlohmann::ordered_json;

std::string scalar(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_array()) {
        std::string out;
        for (const auto& e : v) out += (out.empty() ? "" : ", ") + scalar(e);
        return "[" + out + "]";
    }
    return v.dump();
}

bool is_flat(const Json& v) {
    if (v.is_object()) return false;
    if (v.is_array()) {
        for (const auto& e : v) {
            if (e.is_object() || (e.is_array() && !is_flat(e))) return false;
        }
    }
    return true;
}

void block(std::ostringstream& out, const Json& v, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        for (const auto& [key, value] : v.items()) {
            if (is_flat(value)) {
                out << pad << key << ": " << scalar(value) << "\n";
            } else {
                out << pad << key << ":\n";
                block(out, value, indent + 2);
            }
        }
    } else if (v.is_array()) {
        for (const auto& e : v) {
            if (is_flat(e)) {
                out << pad << "- " << scalar(e) << "\n";
            } else {
                out << pad << "-\n";
                block(out, e, indent + 2);
            }
        }
    } else {
        out << pad << scalar(v) << "\n";
    }
}

}  // namespace

std::string render_text(const Report& report) {
    const Json& d = report.data;
    std::ostringstream out;
    if (d.contains("kind")) out << "kind: " << scalar(d["kind"]) << "\n";
    if (d.contains("inputs")) {
        out << "inputs:\n";
        block(out, d["inputs"], 2);
    }
    if (d.contains("results") && !d["results"].empty()) {
        out << "results:\n";
        for (const auto& r : d["results"]) {
            out << "  " << scalar(r["name"]) << " = ";
            if (is_flat(r["value"])) {
                out << scalar(r["value"]) << "\n";
            } else {
                out << "\n";
                block(out, r["value"], 6);
            }
            const Json& p = r["provenance"];
            out << "      from: " << scalar(p["ideal"]);
            if (p["order"] != "none") out << " | order " << scalar(p["order"]);
            if (p.contains("sample")) out << " | t = " << scalar(p["sample"]);
            out << "\n";
        }
    }
    if (d.contains("verdicts") && !d["verdicts"].empty()) {
        out << "verdicts:\n";
        for (const auto& v : d["verdicts"]) {
            out << "  " << scalar(v["check"]) << ": " << scalar(v["verdict"]) << "\n";
            if (!v["reason"].get<std::string>().empty()) out << "      reason: " << scalar(v["reason"]) << "\n";
            if (v.contains("detail")) block(out, v["detail"], 6);
        }
    }
    if (d.contains("error")) {
        out << "error:\n";
        block(out, d["error"], 2);
    }
    if (d.contains("budget")) {
        out << "budget:\n";
        block(out, d["budget"], 2);
    }
    out << "status: " << scalar(d["status"]) << " (exit " << scalar(d["exit_code"]) << ")\n";
    return out.str();
}

std::string render_json(const Report& report) { return report.data.dump(2) + "\n"; }

}  // namespace icis
