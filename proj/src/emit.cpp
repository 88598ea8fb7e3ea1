#include "dkp/emit.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace dkp {

namespace {

std::string format(double v, const char* fmt) {
    char buf[40];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

void escape_json(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

}  // namespace

std::string format_full(double v) { return format(v, "%.17g"); }
std::string format_display(double v) { return format(v, "%.6g"); }

Json Json::object() {
    Json j;
    j.kind_ = Kind::Object;
    return j;
}
Json Json::array() {
    Json j;
    j.kind_ = Kind::Array;
    return j;
}
Json Json::number(double v) {
    Json j;
    j.kind_ = Kind::Number;
    j.num_ = v;
    return j;
}
Json Json::integer(long long v) {
    Json j;
    j.kind_ = Kind::Integer;
    j.int_ = v;
    return j;
}
Json Json::boolean(bool v) {
    Json j;
    j.kind_ = Kind::Bool;
    j.bool_ = v;
    return j;
}
Json Json::string(std::string v) {
    Json j;
    j.kind_ = Kind::String;
    j.str_ = std::move(v);
    return j;
}
Json Json::null() { return Json{}; }

Json& Json::add(std::string key, Json v) {
    members_.emplace_back(std::move(key), std::move(v));
    return *this;
}

Json& Json::push(Json v) {
    items_.push_back(std::move(v));
    return *this;
}

void Json::write(std::string& out, int indent, int depth) const {
    const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
    switch (kind_) {
        case Kind::Null: out += "null"; break;
        case Kind::Bool: out += bool_ ? "true" : "false"; break;
        case Kind::Integer: out += std::to_string(int_); break;
        case Kind::Number:
            if (std::isfinite(num_))
                out += format_full(num_);
            else
                out += "null";  // JSON has no inf/nan
            break;
        case Kind::String: escape_json(out, str_); break;
        case Kind::Array:
            if (items_.empty()) {
                out += "[]";
                break;
            }
            out += "[\n";
            for (std::size_t i = 0; i < items_.size(); ++i) {
                out += pad;
                items_[i].write(out, indent, depth + 1);
                if (i + 1 < items_.size()) out += ',';
                out += '\n';
            }
            out += close_pad + "]";
            break;
        case Kind::Object:
            if (members_.empty()) {
                out += "{}";
                break;
            }
            out += "{\n";
            for (std::size_t i = 0; i < members_.size(); ++i) {
                out += pad;
                escape_json(out, members_[i].first);
                out += ": ";
                members_[i].second.write(out, indent, depth + 1);
                if (i + 1 < members_.size()) out += ',';
                out += '\n';
            }
            out += close_pad + "}";
            break;
    }
}

std::string Json::dump(int indent) const {
    std::string out;
    write(out, indent, 0);
    out += '\n';
    return out;
}

void CsvTable::add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }

std::string CsvTable::to_string() const {
    auto field = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        q += '"';
        return q;
    };
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out += ',';
        out += field(header[i]);
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += field(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string svg_polyline(const std::vector<double>& x, const std::vector<double>& y,
                         int width, int height) {
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (!x.empty()) {
        xmin = xmax = x[0];
        ymin = ymax = y[0];
        for (std::size_t i = 0; i < x.size(); ++i) {
            xmin = std::min(xmin, x[i]);
            xmax = std::max(xmax, x[i]);
            ymin = std::min(ymin, y[i]);
            ymax = std::max(ymax, y[i]);
        }
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    const double mx = 40, my = 20;  // margins
    const double sw = width - 2 * mx, sh = height - 2 * my;

    std::string out;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
                  "viewBox=\"0 0 %d %d\">\n",
                  width, height, width, height);
    out += buf;
    std::snprintf(buf, sizeof buf,
                  "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" fill=\"none\" "
                  "stroke=\"black\"/>\n",
                  mx, my, sw, sh);
    out += buf;
    out += "<polyline fill=\"none\" stroke=\"blue\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double px = mx + sw * (x[i] - xmin) / (xmax - xmin);
        const double py = my + sh * (1.0 - (y[i] - ymin) / (ymax - ymin));
        std::snprintf(buf, sizeof buf, "%s%.2f,%.2f", i ? " " : "", px, py);
        out += buf;
    }
    out += "\"/>\n</svg>\n";
    return out;
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) return false;
    f << content;
    return static_cast<bool>(f);
}

}  // namespace dkp
