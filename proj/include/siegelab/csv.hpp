#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace siegelab::csv {

/// Shortest decimal representation that parses back to the same double.
/// Used for every floating-point field so that re-running a seeded
/// experiment reproduces byte-identical artifacts.
std::string format_double(double v);

class Writer;

/// One CSV row; fields are appended left to right.
class Row {
public:
    Row& field(const std::string& s);
    Row& field(const char* s) { return field(std::string(s)); }
    Row& field(double v);
    Row& field(std::size_t v);
    Row& field(long v);
    Row& field(int v) { return field(static_cast<long>(v)); }
    ~Row();
    Row(Row&&) = delete;

private:
    friend class Writer;
    explicit Row(Writer& w) : writer_(w) {}
    Writer& writer_;
    std::vector<std::string> fields_;
};

/// Header-row CSV writer with '.' decimals and no quoting (fields produced
/// by this library never contain separators).
class Writer {
public:
    Writer(std::ostream& os, const std::vector<std::string>& header);
    Row row() { return Row(*this); }

private:
    friend class Row;
    void emit(const std::vector<std::string>& fields);
    std::ostream& os_;
};

} // namespace siegelab::csv
