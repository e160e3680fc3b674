#ifndef CUTCONES_INSTANCE_IO_HPP
#define CUTCONES_INSTANCE_IO_HPP

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutcones/core.hpp"

namespace cutcones {

/// Instance text error, pointing at the offending line. Line 0 means the
/// failure was not tied to any line (an unreadable file, say).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(line == 0 ? what : what + ", line " + std::to_string(line)),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Reads the instance text format:
///
///     n 4
///     0 1 1/2
///     2 3 4
///
/// One `i j w` line per edge with 0 <= i < j < n and w a non-negative
/// integer or fraction p/q; unlisted edges weigh 0. Blank lines and lines
/// starting with '#' are skipped. Duplicate edges, negative weights and
/// malformed rationals are rejected with the line number.
inline Instance parse_instance(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    int n = -1;
    std::vector<Rational> weights;
    std::vector<bool> seen;

    auto next_tokens = [&](std::vector<std::string>& tokens) {
        while (std::getline(in, line)) {
            ++lineno;
            std::istringstream ls(line);
            tokens.clear();
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
            if (tokens.empty() || tokens[0][0] == '#') continue;
            return true;
        }
        return false;
    };

    std::vector<std::string> tokens;
    if (!next_tokens(tokens)) throw ParseError("empty instance", lineno ? lineno : 1);
    if (tokens.size() != 2 || tokens[0] != "n") throw ParseError("expected header 'n <int>'", lineno);
    try {
        std::size_t used = 0;
        n = std::stoi(tokens[1], &used);
        if (used != tokens[1].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError("bad vertex count '" + tokens[1] + "'", lineno);
    }
    if (n < 2 || n > kMaxVertices) throw ParseError("vertex count out of range", lineno);

    weights.assign(edge_count(n), Rational(0));
    seen.assign(edge_count(n), false);

    while (next_tokens(tokens)) {
        if (tokens.size() != 3) throw ParseError("expected 'i j w'", lineno);
        int i, j;
        try {
            i = std::stoi(tokens[0]);
            j = std::stoi(tokens[1]);
        } catch (const std::exception&) {
            throw ParseError("bad vertex index", lineno);
        }
        if (i < 0 || j >= n || i >= j) throw ParseError("need 0 <= i < j < n", lineno);
        Rational w;
        try {
            w = parse_rational(tokens[2]);
        } catch (const std::exception&) {
            throw ParseError("malformed weight '" + tokens[2] + "'", lineno);
        }
        if (w < 0) throw ParseError("negative weight", lineno);
        int e = edge_index(i, j, n);
        if (seen[e]) throw ParseError("duplicate edge " + std::to_string(i) + " " + std::to_string(j), lineno);
        seen[e] = true;
        weights[e] = w;
    }
    return Instance(n, std::move(weights));
}

inline Instance parse_instance_text(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

inline Instance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file '" + path + "'", 0);
    return parse_instance(in);
}

/// Writes the text format back; zero-weight edges are omitted.
inline std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    out << "n " << inst.n() << "\n";
    for (int i = 0; i < inst.n(); ++i)
        for (int j = i + 1; j < inst.n(); ++j)
            if (inst.weight(i, j) != 0)
                out << i << " " << j << " " << format_rational(inst.weight(i, j)) << "\n";
    return out.str();
}

} // namespace cutcones

#endif // CUTCONES_INSTANCE_IO_HPP
