#include "siegelab/csv.hpp"

#include <charconv>
#include <system_error>

namespace siegelab::csv {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

Row& Row::field(const std::string& s) {
    fields_.push_back(s);
    return *this;
}

Row& Row::field(double v) {
    fields_.push_back(format_double(v));
    return *this;
}

Row& Row::field(std::size_t v) {
    fields_.push_back(std::to_string(v));
    return *this;
}

Row& Row::field(long v) {
    fields_.push_back(std::to_string(v));
    return *this;
}

Row::~Row() { writer_.emit(fields_); }

Writer::Writer(std::ostream& os, const std::vector<std::string>& header) : os_(os) {
    emit(header);
}

void Writer::emit(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) os_ << ',';
        os_ << fields[i];
    }
    os_ << '\n';
}

} // namespace siegelab::csv
