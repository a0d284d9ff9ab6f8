#include "inca/quandle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "inca/errors.hpp"

namespace inca {

std::vector<std::string> validate_quandle(const MultiQuandle& q) {
    std::vector<std::string> out;
    const int n = q.size;
    if (n < 1) {
        out.push_back("size must be positive");
        return out;
    }
    if (q.ops.empty()) out.push_back("at least one operation is required");

    for (int oi = 0; oi < q.op_count(); ++oi) {
        const QuandleOp& op = q.ops[oi];
        if (static_cast<int>(op.table.size()) != n) {
            out.push_back("op " + op.name + ": table has wrong row count");
            continue;
        }
        bool shape_ok = true;
        for (const auto& row : op.table) {
            if (static_cast<int>(row.size()) != n) {
                out.push_back("op " + op.name + ": table row has wrong length");
                shape_ok = false;
                break;
            }
            for (int v : row)
                if (v < 0 || v >= n) {
                    out.push_back("op " + op.name + ": entry " + std::to_string(v) +
                                  " outside {0.." + std::to_string(n - 1) + "}");
                    shape_ok = false;
                }
        }
        if (!shape_ok) continue;

        for (int x = 0; x < n; ++x)
            if (op.table[x][x] != x)
                out.push_back("op " + op.name + ": idempotence fails at x=" + std::to_string(x));

        for (int y = 0; y < n; ++y) {
            std::vector<bool> hit(n, false);
            for (int x = 0; x < n; ++x) hit[op.table[x][y]] = true;
            if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
                out.push_back("op " + op.name + ": x -> x>" + std::to_string(y) +
                              " is not a bijection");
        }

        if (op.inverse < 0 || op.inverse >= q.op_count()) {
            out.push_back("op " + op.name + ": inverse index out of range");
        } else if (q.ops[op.inverse].inverse != oi) {
            out.push_back("op " + op.name + ": inverse op is not cross-referenced back");
        }
    }

    // Full table shapes are needed for the remaining checks.
    if (!out.empty()) return out;

    for (int oi = 0; oi < q.op_count(); ++oi) {
        const QuandleOp& op = q.ops[oi];
        const QuandleOp& inv = q.ops[op.inverse];
        for (int x = 0; x < n && out.size() < 100; ++x)
            for (int y = 0; y < n; ++y)
                if (inv.table[op.table[x][y]][y] != x) {
                    out.push_back("op " + op.name + ": " + inv.name + " is not its inverse at (" +
                                  std::to_string(x) + "," + std::to_string(y) + ")");
                    break;
                }
    }

    for (int a = 0; a < q.op_count(); ++a)
        for (int b = 0; b < q.op_count(); ++b) {
            const auto& ta = q.ops[a].table;
            const auto& tb = q.ops[b].table;
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z)
                        if (tb[ta[x][y]][z] != ta[tb[x][z]][tb[y][z]]) {
                            out.push_back("ops " + q.ops[a].name + "," + q.ops[b].name +
                                          ": distributivity fails at (" + std::to_string(x) + "," +
                                          std::to_string(y) + "," + std::to_string(z) + ")");
                            x = y = z = n;  // one report per op pair
                        }
        }

    return out;
}

void require_valid(const MultiQuandle& q) {
    auto violations = validate_quandle(q);
    if (!violations.empty())
        throw std::invalid_argument("invalid quandle " + q.name + ": " + violations.front());
}

MultiQuandle trivial_quandle(int n) {
    MultiQuandle q;
    q.name = "trivial:" + std::to_string(n);
    q.size = n;
    QuandleOp op;
    op.name = "t";
    op.inverse = 0;
    op.table.assign(n, std::vector<int>(n, 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) op.table[x][y] = x;
    q.ops.push_back(std::move(op));
    return q;
}

MultiQuandle dihedral_quandle(int n) {
    MultiQuandle q;
    q.name = "dihedral:" + std::to_string(n);
    q.size = n;
    QuandleOp op;
    op.name = "d";
    op.inverse = 0;
    op.table.assign(n, std::vector<int>(n, 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) op.table[x][y] = ((2 * y - x) % n + n) % n;
    q.ops.push_back(std::move(op));
    return q;
}

MultiQuandle parse_quandle(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_tokens = [&](std::vector<std::string>& toks) {
        toks.clear();
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            std::string t;
            while (ls >> t) toks.push_back(t);
            if (!toks.empty()) return true;
        }
        return false;
    };

    std::vector<std::string> toks;
    if (!next_tokens(toks) || toks.size() != 2 || toks[0] != "quandle" || toks[1] != "v1")
        throw parse_error(lineno, 1, "expected header 'quandle v1'");
    if (!next_tokens(toks) || toks.size() != 2 || toks[0] != "size")
        throw parse_error(lineno, 1, "expected 'size <n>'");
    int n = 0;
    try {
        n = std::stoi(toks[1]);
    } catch (...) {
        throw parse_error(lineno, 1, "bad size '" + toks[1] + "'");
    }
    if (n < 1 || n > 64) throw parse_error(lineno, 1, "size out of range (1..64)");

    MultiQuandle q;
    q.name = "file";
    q.size = n;
    std::map<std::string, std::string> declared_inverse;
    while (next_tokens(toks)) {
        if (toks.size() != 4 || toks[0] != "op" || toks[2] != "inverse")
            throw parse_error(lineno, 1, "expected 'op <name> inverse <name>'");
        QuandleOp op;
        op.name = toks[1];
        declared_inverse[op.name] = toks[3];
        op.table.assign(n, {});
        for (int x = 0; x < n; ++x) {
            std::vector<std::string> row;
            if (!next_tokens(row) || static_cast<int>(row.size()) != n)
                throw parse_error(lineno, 1, "op " + op.name + ": expected a row of " +
                                                 std::to_string(n) + " entries");
            for (const auto& cell : row) {
                int v;
                try {
                    v = std::stoi(cell);
                } catch (...) {
                    throw parse_error(lineno, 1, "bad table entry '" + cell + "'");
                }
                op.table[x].push_back(v);
            }
        }
        q.ops.push_back(std::move(op));
    }
    if (q.ops.empty()) throw parse_error(lineno, 1, "no operations declared");

    for (auto& op : q.ops) {
        const std::string& inv = declared_inverse[op.name];
        auto it = std::find_if(q.ops.begin(), q.ops.end(),
                               [&](const QuandleOp& o) { return o.name == inv; });
        if (it == q.ops.end())
            throw parse_error(lineno, 1, "op " + op.name + ": inverse '" + inv + "' not declared");
        op.inverse = static_cast<int>(it - q.ops.begin());
    }
    return q;
}

std::string serialize_quandle(const MultiQuandle& q) {
    std::ostringstream out;
    out << "quandle v1\nsize " << q.size << '\n';
    for (const auto& op : q.ops) {
        out << "op " << op.name << " inverse " << q.ops[op.inverse].name << '\n';
        for (const auto& row : op.table) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
            out << '\n';
        }
    }
    return out.str();
}

MultiQuandle quandle_from_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon != std::string::npos && spec.find('\n') == std::string::npos) {
        std::string kind = spec.substr(0, colon);
        int n;
        try {
            n = std::stoi(spec.substr(colon + 1));
        } catch (...) {
            throw std::invalid_argument("bad quandle spec '" + spec + "'");
        }
        if (n < 1 || n > 64) throw std::invalid_argument("quandle size out of range: " + spec);
        if (kind == "trivial") return trivial_quandle(n);
        if (kind == "dihedral") return dihedral_quandle(n);
        throw std::invalid_argument("unknown quandle family '" + kind + "'");
    }
    return parse_quandle(spec);
}

}  // namespace inca
