#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>
#include "bellwords/ints.hpp"

// OEIS-style b-file: '#' comments, blank lines ignored, data lines
// "<signed-int> <signed-int>" with a single separating space and a
// strictly increasing first column.

namespace bellwords {

struct bfile_entry {
    long long index = 0;
    bigint value;
};

class bfile_error : public std::runtime_error {
public:
    bfile_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

std::vector<bfile_entry> parse_bfile(std::istream& in);

}  // namespace bellwords
