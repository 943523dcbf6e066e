#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "holomat/complex_matrix.hpp"
#include "holomat/holo_function.hpp"

namespace holomat {

// JSON emitter with deterministic bytes: call sites fix the key order and
// every double is rendered with 17 significant digits, enough to round-trip.
class JsonWriter {
public:
    void begin_object();
    void end_object();
    void begin_array();
    void end_array();
    void key(const std::string& name);
    void value(const std::string& v);
    void value(const char* v);
    void value(double v);
    void value(bool v);
    void value(int v);
    void value(std::int64_t v);
    void value(std::uint64_t v);
    // Complex scalar as a two-element [re, im] array.
    void value(Complex z);
    void null();

    const std::string& str() const { return out_; }

private:
    void prepare_value();
    std::string out_;
    std::vector<bool> comma_pending_;
};

std::string format_double(double v);
std::string json_escape(const std::string& raw);

// Matrix document: {"rows": r, "cols": c, "re": [..], "im": [..]} with the
// entry arrays flat in row-major order.
std::string matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const std::string& text);
void write_matrix_fields(JsonWriter& w, const ComplexMatrix& m);

// Function document: {"lambdas": [[re, im], ..], "S": <matrix>,
// "transpose": bool, "radius": r}; lambdas start at degree 1.
std::string standard_form_to_json(const StandardFormSpec& spec);
StandardFormSpec standard_form_from_json(const std::string& text);

ComplexMatrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const ComplexMatrix& m);
StandardFormSpec load_standard_form(const std::string& path);
void save_standard_form(const std::string& path, const StandardFormSpec& spec);

// Throws Error with the path in the message on I/O failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace holomat
