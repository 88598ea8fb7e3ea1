#ifndef DKP_EMIT_HPP
#define DKP_EMIT_HPP

#include <string>
#include <utility>
#include <vector>

namespace dkp {

/// C-locale float formatting: 17 significant digits round-trips a double,
/// 6 is the human-readable display precision.
std::string format_full(double v);
std::string format_display(double v);

/// Order-preserving JSON document builder. Hand-rolled so the byte output is
/// fully under our control (field order, float formatting, LF only).
class Json {
public:
    static Json object();
    static Json array();
    static Json number(double v);
    static Json integer(long long v);
    static Json boolean(bool v);
    static Json string(std::string v);
    static Json null();

    Json& add(std::string key, Json v);  // object members, insertion order
    Json& push(Json v);                  // array elements

    std::string dump(int indent = 2) const;

private:
    enum class Kind { Null, Bool, Number, Integer, String, Array, Object };
    Kind kind_ = Kind::Null;
    bool bool_ = false;
    double num_ = 0.0;
    long long int_ = 0;
    std::string str_;
    std::vector<Json> items_;
    std::vector<std::pair<std::string, Json>> members_;

    void write(std::string& out, int indent, int depth) const;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
    std::string to_string() const;  // header + rows, LF endings
};

/// Self-contained polyline plot of y(x); axes box only, no external assets.
std::string svg_polyline(const std::vector<double>& x, const std::vector<double>& y,
                         int width = 640, int height = 400);

bool write_file(const std::string& path, const std::string& content);

}  // namespace dkp

#endif
