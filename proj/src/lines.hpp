#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "isobar/errors.hpp"

namespace isobar::detail {

// Tokenized view of a line-oriented document: blank lines and '#' comment
// lines are dropped, every other line becomes a token vector.
struct LineReader {
    std::vector<std::vector<std::string>> lines;
    std::size_t next = 0;

    explicit LineReader(const std::string& text) {
        std::istringstream stream(text);
        std::string line;
        while (std::getline(stream, line)) {
            std::istringstream ls(line);
            std::vector<std::string> tokens;
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
            if (tokens.empty() || tokens[0][0] == '#') continue;
            lines.push_back(std::move(tokens));
        }
    }

    bool done() const { return next >= lines.size(); }

    const std::vector<std::string>& take(const std::string& what) {
        if (done()) throw ParseError("unexpected end of input, expected " + what);
        return lines[next++];
    }
};

inline int parse_int(const std::string& token, const std::string& what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(token, &used);
    } catch (const std::exception&) {
        throw ParseError("expected " + what + ", got '" + token + "'");
    }
    if (used != token.size())
        throw ParseError("expected " + what + ", got '" + token + "'");
    return value;
}

} // namespace isobar::detail
