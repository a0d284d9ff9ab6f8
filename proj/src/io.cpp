#include "inca/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <sstream>

#include "inca/canonical.hpp"
#include "inca/errors.hpp"

namespace inca {
namespace {

struct Token {
    std::string text;
    int line;
    int column;
};

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Whitespace-separated tokens with positions; '#' comments run to end of line.
std::vector<std::vector<Token>> tokenize(const std::string& text) {
    std::vector<std::vector<Token>> lines(1);
    int line = 1, col = 1;
    std::string cur;
    int tok_col = 0;
    bool in_comment = false;
    auto flush = [&]() {
        if (!cur.empty()) {
            lines.back().push_back(Token{cur, line, tok_col});
            cur.clear();
        }
    };
    for (char c : text) {
        if (c == '\n') {
            flush();
            lines.emplace_back();
            ++line;
            col = 1;
            in_comment = false;
            continue;
        }
        if (!in_comment) {
            if (c == '#') {
                flush();
                in_comment = true;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                flush();
            } else {
                if (cur.empty()) tok_col = col;
                cur.push_back(c);
            }
        }
        ++col;
    }
    flush();
    return lines;
}

int parse_int(const Token& t, long long lo, long long hi) {
    if (t.text.empty()) throw parse_error(t.line, t.column, "expected a number");
    long long value = 0;
    for (char c : t.text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw parse_error(t.line, t.column, "expected a number, got '" + t.text + "'");
        value = value * 10 + (c - '0');
        if (value > hi) throw parse_error(t.line, t.column, "number out of range: " + t.text);
    }
    if (value < lo) throw parse_error(t.line, t.column, "number out of range: " + t.text);
    return static_cast<int>(value);
}

void check_name(const Token& t) {
    if (t.text.empty() || !is_name_start(t.text[0]) ||
        !std::all_of(t.text.begin(), t.text.end(), is_name_char))
        throw parse_error(t.line, t.column, "invalid name '" + t.text + "'");
}

// <comp>.<j>
std::pair<std::string, int> split_vertex(const Token& t) {
    auto dot = t.text.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 >= t.text.size())
        throw parse_error(t.line, t.column, "expected <component>.<vertex>, got '" + t.text + "'");
    Token name{t.text.substr(0, dot), t.line, t.column};
    Token idx{t.text.substr(dot + 1), t.line, t.column + static_cast<int>(dot) + 1};
    check_name(name);
    return {name.text, parse_int(idx, 0, 1 << 24)};
}

// <comp>[<i>]
std::pair<std::string, int> split_edge(const Token& t) {
    auto open = t.text.find('[');
    if (open == std::string::npos || open == 0 || t.text.back() != ']' || open + 2 > t.text.size())
        throw parse_error(t.line, t.column, "expected <component>[<edge>], got '" + t.text + "'");
    Token name{t.text.substr(0, open), t.line, t.column};
    Token idx{t.text.substr(open + 1, t.text.size() - open - 2), t.line,
              t.column + static_cast<int>(open) + 1};
    check_name(name);
    return {name.text, parse_int(idx, 0, 1 << 24)};
}

}  // namespace

GaussDiagram parse_diagram(const std::string& text) {
    auto lines = tokenize(text);

    std::size_t first = 0;
    while (first < lines.size() && lines[first].empty()) ++first;
    if (first == lines.size() || lines[first].size() != 2 || lines[first][0].text != "inca" ||
        lines[first][1].text != "v1") {
        int ln = first < lines.size() && !lines[first].empty() ? lines[first][0].line
                                                               : static_cast<int>(lines.size());
        throw parse_error(ln, 1, "expected header 'inca v1'");
    }

    GaussDiagram m;
    std::map<std::string, int> comp_index;

    auto lookup_comp = [&](const Token& t, const std::string& name) {
        auto it = comp_index.find(name);
        if (it == comp_index.end())
            throw parse_error(t.line, t.column, "unknown component '" + name + "'");
        return it->second;
    };
    auto vertex_ref = [&](const Token& t) {
        auto [name, pos] = split_vertex(t);
        int ci = lookup_comp(t, name);
        VertexRef v{ci, pos};
        if (!m.has_vertex(v))
            throw parse_error(t.line, t.column,
                              "vertex " + std::to_string(pos) + " out of range for component '" +
                                  name + "' of size " + std::to_string(m.component(ci).size));
        return v;
    };

    for (std::size_t li = first + 1; li < lines.size(); ++li) {
        const auto& toks = lines[li];
        if (toks.empty()) continue;
        const Token& head = toks[0];
        if (head.text == "component") {
            if (toks.size() != 4) throw parse_error(head.line, head.column, "expected: component <name> (cycle|path) <n>");
            check_name(toks[1]);
            if (comp_index.count(toks[1].text))
                throw parse_error(toks[1].line, toks[1].column, "duplicate component '" + toks[1].text + "'");
            ComponentKind kind;
            if (toks[2].text == "cycle") kind = ComponentKind::Cycle;
            else if (toks[2].text == "path") kind = ComponentKind::Path;
            else throw parse_error(toks[2].line, toks[2].column, "expected 'cycle' or 'path'");
            int size = parse_int(toks[3], 1, 1 << 20);
            comp_index[toks[1].text] = m.add_component(toks[1].text, kind, size);
        } else if (head.text == "interact") {
            if (toks.size() != 5 || toks[2].text != "by")
                throw parse_error(head.line, head.column, "expected: interact <comp>[<i>] by <comp>.<j> (+|-)");
            auto [ename, tail] = split_edge(toks[1]);
            int eci = lookup_comp(toks[1], ename);
            EdgeRef e{eci, tail};
            if (!m.has_edge(e))
                throw parse_error(toks[1].line, toks[1].column,
                                  "edge " + std::to_string(tail) + " out of range for component '" +
                                      ename + "' (" + std::to_string(m.component(eci).edge_count()) +
                                      " edges)");
            VertexRef agent = vertex_ref(toks[3]);
            Sign sign;
            if (toks[4].text == "+") sign = Sign::Pos;
            else if (toks[4].text == "-") sign = Sign::Neg;
            else throw parse_error(toks[4].line, toks[4].column, "expected '+' or '-'");
            if (m.interaction_on(e))
                throw parse_error(toks[1].line, toks[1].column,
                                  "edge " + ename + "[" + std::to_string(tail) +
                                      "] already carries an interaction");
            m.add_interaction({e, agent, sign});
        } else if (head.text == "agent") {
            if (toks.size() != 2) throw parse_error(head.line, head.column, "expected: agent <comp>.<j>");
            m.add_mark(vertex_ref(toks[1]));
        } else {
            throw parse_error(head.line, head.column, "unknown declaration '" + head.text + "'");
        }
    }
    return m;
}

std::string serialize(const GaussDiagram& m) {
    GaussDiagram c = canonical(m).diagram;
    std::ostringstream out;
    out << "inca v1\n";
    for (const auto& comp : c.components())
        out << "component " << comp.name << ' '
            << (comp.kind == ComponentKind::Cycle ? "cycle" : "path") << ' ' << comp.size << '\n';
    for (const auto& it : c.interactions())
        out << "interact " << c.component(it.edge.component).name << '[' << it.edge.tail << "] by "
            << c.component(it.agent.component).name << '.' << it.agent.position << ' '
            << sign_char(it.sign) << '\n';
    for (const auto& v : c.marks())
        out << "agent " << c.component(v.component).name << '.' << v.position << '\n';
    return out.str();
}

std::string export_dot(const GaussDiagram& m) {
    require_valid(m);
    std::ostringstream out;
    auto node = [&](VertexRef v) {
        return "\"" + m.component(v.component).name + "." + std::to_string(v.position) + "\"";
    };
    out << "digraph inca {\n  rankdir=LR;\n";
    for (int ci = 0; ci < m.component_count(); ++ci) {
        const Component& c = m.component(ci);
        for (int p = 0; p < c.size; ++p) {
            VertexRef v{ci, p};
            out << "  " << node(v) << " [shape=circle" << (m.marked(v) ? ",style=bold" : "")
                << "];\n";
        }
        for (int j = 0; j < c.edge_count(); ++j) {
            EdgeRef e{ci, j};
            out << "  " << node(m.tail_of(e)) << " -> " << node(m.head_of(e)) << ";\n";
        }
    }
    for (const auto& it : m.interactions())
        out << "  " << node(it.agent) << " -> " << node(m.tail_of(it.edge))
            << " [style=dashed,label=\"" << sign_char(it.sign) << "\",tooltip=\"acts on "
            << to_string(it.edge, m) << "\"];\n";
    out << "}\n";
    return out.str();
}

GaussDiagram random_diagram(const RandomSpec& spec) {
    GaussDiagram m;
    int i = 0;
    for (auto [kind, size] : spec.components)
        m.add_component((kind == ComponentKind::Cycle ? "q" : "p") + std::to_string(i++), kind,
                        size);

    std::vector<EdgeRef> edges;
    for (int ci = 0; ci < m.component_count(); ++ci)
        for (int j = 0; j < m.component(ci).edge_count(); ++j) edges.push_back({ci, j});
    std::vector<VertexRef> vertices;
    for (int ci = 0; ci < m.component_count(); ++ci)
        for (int p = 0; p < m.component(ci).size; ++p) vertices.push_back({ci, p});

    if (spec.interactions > static_cast<int>(edges.size()))
        throw resource_limit("requested " + std::to_string(spec.interactions) +
                             " interactions but the graph has only " +
                             std::to_string(edges.size()) + " edges");
    if (vertices.empty() && (spec.interactions > 0 || spec.marks > 0))
        throw resource_limit("empty graph cannot carry interactions or marks");

    std::mt19937_64 rng(spec.seed);
    std::shuffle(edges.begin(), edges.end(), rng);
    for (int n = 0; n < spec.interactions; ++n) {
        VertexRef agent = vertices[rng() % vertices.size()];
        Sign sign = (rng() & 1) ? Sign::Pos : Sign::Neg;
        m.add_interaction({edges[n], agent, sign});
    }
    std::shuffle(vertices.begin(), vertices.end(), rng);
    for (int n = 0; n < spec.marks && n < static_cast<int>(vertices.size()); ++n)
        m.add_mark(vertices[n]);
    return m;
}

}  // namespace inca
