#ifndef BVS_IO_HPP
#define BVS_IO_HPP

#include <sstream>
#include <vector>

#include "bvs/data.hpp"

namespace bvs {

// Raised for malformed input files; messages carry file:line[:column] context.
class input_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Strict numeric CSV: header row required, comma separated, '.' decimal,
// no quoting, no missing values. Returns the dataset with the named response
// column removed from the covariates.
Dataset read_csv_dataset(const std::string& path, const std::string& response_column);

// Writes numbers with 17 significant digits so reports are byte-checkable.
// Keys are emitted in call order; output carries no timestamps.
class JsonWriter {
  public:
    void begin_object();
    void end_object();
    void begin_array();
    void end_array();
    JsonWriter& key(const std::string& name);
    JsonWriter& value(double v);
    JsonWriter& value(std::int64_t v);
    JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
    JsonWriter& value(std::uint64_t v);
    JsonWriter& value(bool v);
    JsonWriter& value(const std::string& v);
    JsonWriter& value(const char* v) { return value(std::string(v)); }

    template <typename T>
    JsonWriter& field(const std::string& name, const T& v) {
        key(name);
        return value(v);
    }

    std::string str() const { return out_.str(); }

  private:
    void separate();
    void emit_string(const std::string& v);
    std::ostringstream out_;
    std::vector<bool> needs_comma_;
    bool pending_key_ = false;
};

std::string format_double(double v);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace bvs

#endif
