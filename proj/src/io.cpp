#include "bvs/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace bvs {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    fields.push_back(field);
    return fields;
}

double parse_number(const std::string& field, const std::string& path, std::size_t line,
                    std::size_t column) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw input_error(path + ":" + std::to_string(line) + ":" + std::to_string(column) +
                          ": cannot parse '" + field + "' as a number");
    }
    return value;
}

}  // namespace

Dataset read_csv_dataset(const std::string& path, const std::string& response_column) {
    std::ifstream in(path);
    if (!in) throw input_error(path + ": cannot open file");

    std::string line;
    if (!std::getline(in, line)) throw input_error(path + ": empty file");
    if (line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF) line.erase(0, 3);  // BOM
    if (!line.empty() && line.back() == '\r') line.pop_back();

    const std::vector<std::string> header = split_line(line);
    std::size_t response_idx = header.size();
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (header[j].empty()) {
            throw input_error(path + ":1:" + std::to_string(j + 1) + ": empty column name");
        }
        if (header[j].find('"') != std::string::npos) {
            throw input_error(path + ":1: quoted fields are not supported");
        }
        if (header[j] == response_column) response_idx = j;
    }
    if (response_idx == header.size()) {
        throw input_error(path + ": response column '" + response_column + "' not found");
    }
    if (header.size() < 2) throw input_error(path + ": need at least one covariate column");

    std::vector<std::vector<double>> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && in.peek() == EOF) break;  // trailing newline
        const std::vector<std::string> fields = split_line(line);
        if (fields.size() != header.size()) {
            throw input_error(path + ":" + std::to_string(line_no) + ": expected " +
                              std::to_string(header.size()) + " fields, found " +
                              std::to_string(fields.size()));
        }
        std::vector<double> row(fields.size());
        for (std::size_t j = 0; j < fields.size(); ++j) {
            if (fields[j].empty()) {
                throw input_error(path + ":" + std::to_string(line_no) + ":" + std::to_string(j + 1) +
                                  ": missing value");
            }
            row[j] = parse_number(fields[j], path, line_no, j + 1);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw input_error(path + ": no data rows");

    const std::size_t n = rows.size();
    const std::size_t p = header.size() - 1;
    Eigen::MatrixXd x(n, p);
    Eigen::VectorXd y(n);
    std::vector<std::string> labels;
    labels.reserve(p);
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (j != response_idx) labels.push_back(header[j]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t k = 0;
        for (std::size_t j = 0; j < header.size(); ++j) {
            if (j == response_idx) {
                y[static_cast<Eigen::Index>(i)] = rows[i][j];
            } else {
                x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k++)) = rows[i][j];
            }
        }
    }
    return Dataset(std::move(x), std::move(y), std::move(labels));
}

std::string format_double(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("reports only carry finite numbers");
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

void JsonWriter::separate() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!needs_comma_.empty()) {
        if (needs_comma_.back()) out_ << ',';
        needs_comma_.back() = true;
    }
}

void JsonWriter::begin_object() {
    separate();
    out_ << '{';
    needs_comma_.push_back(false);
}

void JsonWriter::end_object() {
    out_ << '}';
    needs_comma_.pop_back();
}

void JsonWriter::begin_array() {
    separate();
    out_ << '[';
    needs_comma_.push_back(false);
}

void JsonWriter::end_array() {
    out_ << ']';
    needs_comma_.pop_back();
}

void JsonWriter::emit_string(const std::string& v) {
    out_ << '"';
    for (char c : v) {
        switch (c) {
            case '"': out_ << "\\\""; break;
            case '\\': out_ << "\\\\"; break;
            case '\n': out_ << "\\n"; break;
            case '\r': out_ << "\\r"; break;
            case '\t': out_ << "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out_ << buf;
                } else {
                    out_ << c;
                }
        }
    }
    out_ << '"';
}

JsonWriter& JsonWriter::key(const std::string& name) {
    separate();
    emit_string(name);
    out_ << ':';
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    separate();
    out_ << format_double(v);
    return *this;
}

JsonWriter& JsonWriter::value(std::int64_t v) {
    separate();
    out_ << v;
    return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v) {
    separate();
    out_ << v;
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    separate();
    out_ << (v ? "true" : "false");
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
    separate();
    emit_string(v);
    return *this;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error(path + ": cannot open for writing");
    out << content;
    if (!out) throw input_error(path + ": write failed");
}

}  // namespace bvs
