#include "epcd/labels.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "epcd/error.hpp"

namespace epcd {

void validate_labels(std::span<const int> labels, std::size_t expected_size) {
    if (expected_size != 0 && labels.size() != expected_size) {
        throw Error("label vector has length " + std::to_string(labels.size()) + ", expected " +
                    std::to_string(expected_size));
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] != 1 && labels[i] != -1) {
            throw Error("label " + std::to_string(labels[i]) + " at node " + std::to_string(i) +
                        " is not +1 or -1");
        }
    }
}

Labels load_labels(std::istream& in) {
    Labels out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string token, extra;
        if (!(fields >> token)) continue;
        if (fields >> extra) throw ParseError("expected one label per line", lineno);
        if (token == "1" || token == "+1") {
            out.push_back(1);
        } else if (token == "2" || token == "-1") {
            out.push_back(-1);
        } else {
            throw ParseError("invalid label '" + token + "'", lineno);
        }
    }
    if (out.empty()) throw ParseError("empty labels file", 0);
    return out;
}

Labels load_labels_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return load_labels(in);
}

void write_labels(std::ostream& out, std::span<const int> labels) {
    for (int c : labels) out << (c > 0 ? "+1" : "-1") << '\n';
}

Labels negated(std::span<const int> labels) {
    Labels out(labels.begin(), labels.end());
    for (int& c : out) c = -c;
    return out;
}

}  // namespace epcd
