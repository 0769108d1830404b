#include "bellwords/bfile.hpp"

#include <string>

namespace bellwords {

namespace {

bool is_signed_int(const std::string& s) {
    size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

std::vector<bfile_entry> parse_bfile(std::istream& in) {
    std::vector<bfile_entry> entries;
    std::string line;
    int line_no = 0;
    bool have_prev = false;
    long long prev_index = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') continue;
        size_t sp = line.find(' ');
        if (sp == std::string::npos || sp == 0 || sp + 1 >= line.size())
            throw bfile_error(line_no, "expected '<index> <value>'");
        std::string idx = line.substr(0, sp);
        std::string val = line.substr(sp + 1);
        if (!is_signed_int(idx) || !is_signed_int(val))
            throw bfile_error(line_no, "malformed integer in '" + line + "'");
        bfile_entry e;
        try {
            e.index = std::stoll(idx);
        } catch (const std::exception&) {
            throw bfile_error(line_no, "index out of range");
        }
        e.value = bigint(val);
        if (have_prev && e.index <= prev_index)
            throw bfile_error(line_no, "indices not strictly increasing");
        prev_index = e.index;
        have_prev = true;
        entries.push_back(std::move(e));
    }
    return entries;
}

}  // namespace bellwords
