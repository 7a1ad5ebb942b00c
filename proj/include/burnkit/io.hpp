#pragma once

// Text formats shared by the library and the command line tool:
//
//   edge list   one edge per line, two whitespace-separated labels; '#' starts
//               a comment line. A line with a single label declares an
//               isolated vertex (only emitted for degree-0 vertices).
//   sequence    one vertex label per line, in placement order; '#' comments.
//   landmarks   name<TAB>label[,label...] per line.
//   report      key<TAB>value per line.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "burnkit/error.hpp"
#include "burnkit/graph.hpp"

namespace burnkit {

using BurningSequence = std::vector<std::string>;

/// Named distinguished vertices of a constructed graph. Single vertices are
/// one-element lists.
using Landmarks = std::map<std::string, std::vector<std::string>>;

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline bool is_comment_or_blank(const std::vector<std::string>& tokens) {
    return tokens.empty() || tokens.front().front() == '#';
}

}  // namespace detail

inline Graph read_graph(std::string_view text) {
    GraphBuilder b;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tok = detail::split_ws(line);
        if (detail::is_comment_or_blank(tok)) continue;
        if (tok.size() == 1) {
            b.add_vertex(tok[0]);
        } else if (tok.size() == 2) {
            try {
                b.add_edge(tok[0], tok[1]);
            } catch (const Error& e) {
                throw Error(e.kind(), "line " + std::to_string(lineno) + ": " + e.what());
            }
        } else {
            throw Error("MalformedLine", "line " + std::to_string(lineno) + ": expected two labels");
        }
    }
    return b.build();
}

inline std::string write_graph(const Graph& g) {
    std::string out;
    for (VertexId v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) out += g.label(v) + "\n";
    for (auto [u, v] : g.edges()) out += g.label(u) + " " + g.label(v) + "\n";
    return out;
}

inline BurningSequence read_sequence(std::string_view text) {
    BurningSequence seq;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tok = detail::split_ws(line);
        if (detail::is_comment_or_blank(tok)) continue;
        if (tok.size() != 1)
            throw Error("MalformedLine", "line " + std::to_string(lineno) + ": expected one label");
        seq.push_back(tok[0]);
    }
    return seq;
}

inline std::string write_sequence(const BurningSequence& seq) {
    std::string out;
    for (const auto& s : seq) out += s + "\n";
    return out;
}

inline std::string write_landmarks(const Landmarks& lm) {
    std::string out;
    for (const auto& [name, labels] : lm) {
        out += name;
        out += '\t';
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (i) out += ',';
            out += labels[i];
        }
        out += '\n';
    }
    return out;
}

inline Landmarks read_landmarks(std::string_view text) {
    Landmarks lm;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw Error("MalformedLine", "landmark line without tab");
        auto& labels = lm[line.substr(0, tab)];
        std::string rest = line.substr(tab + 1);
        std::size_t start = 0;
        while (start <= rest.size()) {
            auto comma = rest.find(',', start);
            if (comma == std::string::npos) comma = rest.size();
            if (comma > start) labels.push_back(rest.substr(start, comma - start));
            start = comma + 1;
        }
    }
    return lm;
}

/// Ordered key/value report. Keys may repeat; insertion order is kept.
class Report {
public:
    Report& add(std::string key, std::string value) {
        rows_.emplace_back(std::move(key), std::move(value));
        return *this;
    }
    Report& add(std::string key, long long value) { return add(std::move(key), std::to_string(value)); }
    Report& add(std::string key, int value) { return add(std::move(key), static_cast<long long>(value)); }
    Report& add(std::string key, std::size_t value) {
        return add(std::move(key), static_cast<long long>(value));
    }
    Report& add(std::string key, bool value) {
        return add(std::move(key), std::string(value ? "true" : "false"));
    }
    Report& add(std::string key, const char* value) { return add(std::move(key), std::string(value)); }

    const std::vector<std::pair<std::string, std::string>>& rows() const noexcept { return rows_; }

    /// First value stored under `key`, or empty.
    std::string get(std::string_view key) const {
        for (const auto& [k, v] : rows_)
            if (k == key) return v;
        return {};
    }

    std::string str() const {
        std::string out;
        for (const auto& [k, v] : rows_) out += k + "\t" + v + "\n";
        return out;
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

inline Report read_report(std::string_view text) {
    Report r;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw Error("MalformedLine", "report line without tab");
        r.add(line.substr(0, tab), line.substr(tab + 1));
    }
    return r;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("IoError", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("IoError", "cannot write '" + path + "'");
    out << content;
}

/// Graphviz DOT text. Landmark vertices are filled; tips are drawn red.
inline std::string export_dot(const Graph& g, const Landmarks* landmarks = nullptr) {
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') q += '\\';
            q += c;
        }
        return q + "\"";
    };
    std::map<std::string, std::string> style;
    if (landmarks) {
        for (const auto& [name, labels] : *landmarks) {
            bool tip = name.find("tip") != std::string::npos;
            for (const auto& l : labels) {
                auto& s = style[l];
                if (tip)
                    s = "style=filled, fillcolor=red";
                else if (s.empty())
                    s = "style=filled, fillcolor=lightblue, xlabel=" + quote(name);
            }
        }
    }
    std::string out = "graph G {\n";
    for (VertexId v = 0; v < g.order(); ++v) {
        out += "  " + quote(g.label(v));
        if (auto it = style.find(g.label(v)); it != style.end()) out += " [" + it->second + "]";
        out += ";\n";
    }
    for (auto [u, v] : g.edges()) out += "  " + quote(g.label(u)) + " -- " + quote(g.label(v)) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace burnkit
