#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "meshmat/cw_complex.hpp"
#include "meshmat/errors.hpp"
#include "meshmat/multigraph.hpp"

namespace meshmat {

namespace detail {

inline bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace detail

// Graph text format: a line "v <n>", then one line "e <tail> <head>" per
// edge; ids are assigned 0,1,2,... in file order.  '#' starts a comment.
inline Multigraph parse_graph(std::istream& in) {
    std::string line;
    int vertex_count = -1;
    std::vector<std::pair<int, int>> pairs;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::is_blank_or_comment(line)) continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag == "v") {
            if (vertex_count >= 0) throw ParseError("line " + std::to_string(line_no) +
                                                    ": duplicate vertex count");
            if (!(fields >> vertex_count) || vertex_count < 0)
                throw ParseError("line " + std::to_string(line_no) + ": bad vertex count");
        } else if (tag == "e") {
            int tail, head;
            if (vertex_count < 0)
                throw ParseError("line " + std::to_string(line_no) + ": edge before vertex count");
            if (!(fields >> tail >> head))
                throw ParseError("line " + std::to_string(line_no) + ": bad edge line");
            if (tail < 0 || tail >= vertex_count || head < 0 || head >= vertex_count)
                throw ParseError("line " + std::to_string(line_no) + ": endpoint out of range");
            pairs.emplace_back(tail, head);
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown directive '" + tag +
                             "'");
        }
    }
    if (vertex_count < 0) throw ParseError("missing vertex count line");
    return Multigraph::from_pairs(vertex_count, pairs);
}

// Complex text format: "dim <d>", then for each k = 1..d a block
// "boundary <k> <rows> <cols>" followed by <rows> lines of <cols> integers.
inline CWComplex parse_complex(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        if (detail::is_blank_or_comment(line)) continue;
        std::istringstream fields(line);
        std::string tok;
        while (fields >> tok) tokens.push_back(tok);
    }
    std::size_t pos = 0;
    auto next = [&](const char* what) -> std::string {
        if (pos >= tokens.size()) throw ParseError(std::string("unexpected end of file, wanted ") + what);
        return tokens[pos++];
    };
    auto next_int = [&](const char* what) -> long long {
        const std::string tok = next(what);
        try {
            std::size_t used = 0;
            const long long value = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return value;
        } catch (const std::exception&) {
            throw ParseError("expected " + std::string(what) + ", got '" + tok + "'");
        }
    };

    if (next("'dim'") != "dim") throw ParseError("complex file must start with 'dim <d>'");
    const long long d = next_int("dimension");
    if (d < 1) throw ParseError("dimension must be at least 1");

    std::vector<IntMatrix> boundaries;
    for (long long k = 1; k <= d; ++k) {
        if (next("'boundary'") != "boundary")
            throw ParseError("expected 'boundary <k> <rows> <cols>' block");
        const long long kk = next_int("boundary dimension");
        if (kk != k) throw ParseError("boundary blocks must appear in order 1..d");
        const long long rows = next_int("row count");
        const long long cols = next_int("column count");
        if (rows < 0 || cols < 0) throw ParseError("negative matrix shape");
        IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
        for (long long i = 0; i < rows; ++i)
            for (long long j = 0; j < cols; ++j) m(i, j) = Int(next_int("matrix entry"));
        boundaries.push_back(std::move(m));
    }
    if (pos != tokens.size()) throw ParseError("trailing content after boundary blocks");
    try {
        return CWComplex(static_cast<int>(d), std::move(boundaries));
    } catch (const InvalidComplex& e) {
        throw ParseError(e.what());
    }
}

inline Multigraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file " + path);
    return parse_graph(in);
}

inline CWComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open complex file " + path);
    return parse_complex(in);
}

}  // namespace meshmat
