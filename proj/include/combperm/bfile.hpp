#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "combperm/bigint.hpp"

namespace combperm {

// OEIS b-file: one "index value" pair per line, '#' comments and blank lines
// ignored, indices strictly increasing.
struct BFile {
    std::vector<std::pair<long, BigInt>> entries;
};

BFile parse_bfile(std::istream& in);
BFile load_bfile(const std::string& path);

}  // namespace combperm
