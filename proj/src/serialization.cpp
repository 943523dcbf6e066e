#include "holomat/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace holomat {

void JsonWriter::prepare_value() {
    if (!comma_pending_.empty()) {
        if (comma_pending_.back()) out_ += ',';
        comma_pending_.back() = true;
    }
}

void JsonWriter::begin_object() {
    prepare_value();
    out_ += '{';
    comma_pending_.push_back(false);
}

void JsonWriter::end_object() {
    out_ += '}';
    comma_pending_.pop_back();
}

void JsonWriter::begin_array() {
    prepare_value();
    out_ += '[';
    comma_pending_.push_back(false);
}

void JsonWriter::end_array() {
    out_ += ']';
    comma_pending_.pop_back();
}

void JsonWriter::key(const std::string& name) {
    if (comma_pending_.back()) out_ += ',';
    comma_pending_.back() = false;
    out_ += '"';
    out_ += json_escape(name);
    out_ += "\":";
}

void JsonWriter::value(const std::string& v) {
    prepare_value();
    out_ += '"';
    out_ += json_escape(v);
    out_ += '"';
}

void JsonWriter::value(const char* v) { value(std::string(v)); }

void JsonWriter::value(double v) {
    prepare_value();
    out_ += format_double(v);
}

void JsonWriter::value(bool v) {
    prepare_value();
    out_ += v ? "true" : "false";
}

void JsonWriter::value(int v) {
    prepare_value();
    out_ += std::to_string(v);
}

void JsonWriter::value(std::int64_t v) {
    prepare_value();
    out_ += std::to_string(v);
}

void JsonWriter::value(std::uint64_t v) {
    prepare_value();
    out_ += std::to_string(v);
}

void JsonWriter::value(Complex z) {
    begin_array();
    value(z.real());
    value(z.imag());
    end_array();
}

void JsonWriter::null() {
    prepare_value();
    out_ += "null";
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    for (const char c : raw) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

namespace {

using nlohmann::json;

std::size_t locate_field(const std::string& text, const std::string& field) {
    const std::size_t pos = text.find('"' + field + '"');
    return pos == std::string::npos ? 0 : pos;
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("(syntax)", e.byte, e.what());
    }
}

const json& require_field(const json& doc, const std::string& text, const std::string& field) {
    const auto it = doc.find(field);
    if (it == doc.end())
        throw ParseError(field, locate_field(text, field), "missing field: " + field);
    return *it;
}

std::size_t require_size(const json& doc, const std::string& text, const std::string& field) {
    const json& v = require_field(doc, text, field);
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
        throw ParseError(field, locate_field(text, field),
                         "field " + field + " must be a positive integer");
    return v.get<std::size_t>();
}

std::vector<double> require_number_array(const json& doc, const std::string& text,
                                         const std::string& field, std::size_t expected) {
    const json& v = require_field(doc, text, field);
    if (!v.is_array())
        throw ParseError(field, locate_field(text, field), "field " + field + " must be an array");
    if (v.size() != expected)
        throw ParseError(field, locate_field(text, field),
                         "field " + field + " must hold " + std::to_string(expected) +
                             " numbers, found " + std::to_string(v.size()));
    std::vector<double> out;
    out.reserve(expected);
    for (const auto& entry : v) {
        if (!entry.is_number())
            throw ParseError(field, locate_field(text, field),
                             "field " + field + " must contain only numbers");
        out.push_back(entry.get<double>());
    }
    return out;
}

ComplexMatrix matrix_from_value(const json& doc, const std::string& text) {
    const std::size_t rows = require_size(doc, text, "rows");
    const std::size_t cols = require_size(doc, text, "cols");
    const std::vector<double> re = require_number_array(doc, text, "re", rows * cols);
    const std::vector<double> im = require_number_array(doc, text, "im", rows * cols);
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows * cols; ++i) m.data()[i] = Complex(re[i], im[i]);
    return m;
}

}  // namespace

void write_matrix_fields(JsonWriter& w, const ComplexMatrix& m) {
    w.begin_object();
    w.key("rows");
    w.value(static_cast<std::uint64_t>(m.rows()));
    w.key("cols");
    w.value(static_cast<std::uint64_t>(m.cols()));
    w.key("re");
    w.begin_array();
    for (const auto& z : m.data()) w.value(z.real());
    w.end_array();
    w.key("im");
    w.begin_array();
    for (const auto& z : m.data()) w.value(z.imag());
    w.end_array();
    w.end_object();
}

std::string matrix_to_json(const ComplexMatrix& m) {
    JsonWriter w;
    write_matrix_fields(w, m);
    return w.str() + "\n";
}

ComplexMatrix matrix_from_json(const std::string& text) {
    const json doc = parse_document(text);
    if (!doc.is_object()) throw ParseError("(root)", 0, "matrix document must be an object");
    return matrix_from_value(doc, text);
}

std::string standard_form_to_json(const StandardFormSpec& spec) {
    JsonWriter w;
    w.begin_object();
    w.key("lambdas");
    w.begin_array();
    for (const Complex& lambda : spec.lambdas) w.value(lambda);
    w.end_array();
    w.key("S");
    write_matrix_fields(w, spec.S);
    w.key("transpose");
    w.value(spec.transpose);
    w.key("radius");
    w.value(spec.radius);
    w.end_object();
    return w.str() + "\n";
}

StandardFormSpec standard_form_from_json(const std::string& text) {
    const json doc = parse_document(text);
    if (!doc.is_object()) throw ParseError("(root)", 0, "function document must be an object");

    StandardFormSpec spec;
    const json& lambdas = require_field(doc, text, "lambdas");
    if (!lambdas.is_array())
        throw ParseError("lambdas", locate_field(text, "lambdas"),
                         "field lambdas must be an array of [re, im] pairs");
    for (const auto& entry : lambdas) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number())
            throw ParseError("lambdas", locate_field(text, "lambdas"),
                             "each coefficient must be a [re, im] pair");
        spec.lambdas.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }

    const json& s_value = require_field(doc, text, "S");
    if (!s_value.is_object())
        throw ParseError("S", locate_field(text, "S"), "field S must be a matrix object");
    spec.S = matrix_from_value(s_value, text);
    if (!spec.S.is_square() || spec.S.rows() == 0)
        throw ParseError("S", locate_field(text, "S"), "field S must be a nonempty square matrix");

    const json& transpose = require_field(doc, text, "transpose");
    if (!transpose.is_boolean())
        throw ParseError("transpose", locate_field(text, "transpose"),
                         "field transpose must be a boolean");
    spec.transpose = transpose.get<bool>();

    const json& radius = require_field(doc, text, "radius");
    if (!radius.is_number() || radius.get<double>() <= 0.0)
        throw ParseError("radius", locate_field(text, "radius"),
                         "field radius must be a positive number");
    spec.radius = radius.get<double>();
    return spec;
}

ComplexMatrix load_matrix(const std::string& path) {
    return matrix_from_json(read_text_file(path));
}

void save_matrix(const std::string& path, const ComplexMatrix& m) {
    write_text_file(path, matrix_to_json(m));
}

StandardFormSpec load_standard_form(const std::string& path) {
    return standard_form_from_json(read_text_file(path));
}

void save_standard_form(const std::string& path, const StandardFormSpec& spec) {
    write_text_file(path, standard_form_to_json(spec));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file for reading: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw Error("failed while reading file: " + path);
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open file for writing: " + path);
    out << content;
    out.flush();
    if (!out) throw Error("failed while writing file: " + path);
}

}  // namespace holomat
