#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ovpcheck {

/// Left-aligned text columns separated by two spaces.
class Table {
public:
    explicit Table(std::vector<std::string> header);
    void add(std::vector<std::string> row);
    void print(std::ostream& os) const;

private:
    std::vector<std::vector<std::string>> rows_;
};

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);
void csv_row(std::ostream& os, const std::vector<std::string>& fields);

}  // namespace ovpcheck
