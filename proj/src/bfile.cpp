#include "combperm/bfile.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace combperm {

BFile parse_bfile(std::istream& in) {
    BFile f;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream ls(line);
        long index;
        std::string value;
        if (!(ls >> index >> value))
            throw std::invalid_argument("malformed b-file line " + std::to_string(lineno));
        std::string rest;
        if (ls >> rest) throw std::invalid_argument("trailing tokens on b-file line " + std::to_string(lineno));
        BigInt v;
        try {
            v = BigInt(value);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer on b-file line " + std::to_string(lineno));
        }
        if (!f.entries.empty() && index <= f.entries.back().first)
            throw std::invalid_argument("b-file indices must be strictly increasing (line " +
                                        std::to_string(lineno) + ")");
        f.entries.emplace_back(index, std::move(v));
    }
    return f;
}

BFile load_bfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open b-file: " + path);
    return parse_bfile(in);
}

}  // namespace combperm
