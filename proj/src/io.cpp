#include "scw/io.hpp"

#include <regex>
#include <sstream>
#include <vector>

#include "scw/error.hpp"

namespace scw {

namespace {

std::vector<std::string> lines_of(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back(line);
    }
    return out;
}

/// Parses `<kind> v1; group <name>;`.
AlgebraPtr parse_header(const std::vector<std::string>& lines, const std::string& kind) {
    static const std::regex header(R"(\s*(\w+) v1;\s*group\s+(\w+);\s*)");
    std::smatch m;
    if (lines.empty() || !std::regex_match(lines[0], m, header) || m[1] != kind)
        throw ParseError(1, "expected header '" + kind + " v1; group <name>;'");
    try {
        return LieAlgebra::make(m[2].str());
    } catch (const Error& e) {
        throw ParseError(1, e.what());
    }
}

int to_int(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw ParseError(line, "bad integer '" + s + "'");
}

}  // namespace

std::string serialize_bundle(const Bundle& p) {
    std::ostringstream out;
    out << "bundle v1; group " << p.algebra()->name() << ";\n";
    out << p.base()->serialize();
    const auto& x = *p.base();
    for (int d = 1; d <= x.max_dim(); ++d)
        for (int idx = 0; idx < x.count(d); ++idx)
            for (int i = 0; i <= d; ++i) {
                const GroupMap& phi = p.transition({d, idx}, i);
                if (!phi.is_identity()) out << "transition " << d << "." << idx << "." << i << ": " << phi.to_string() << "\n";
            }
    return out.str();
}

Bundle parse_bundle(std::string_view text) {
    const auto lines = lines_of(text);
    const AlgebraPtr g = parse_header(lines, "bundle");
    std::size_t first = 1;
    while (first < lines.size() && lines[first].rfind("transition", 0) != 0) ++first;
    std::string block;
    for (std::size_t l = 1; l < first; ++l) block += lines[l] + "\n";
    SetPtr base;
    try {
        auto x = std::make_shared<SimplicialSet>(SimplicialSet::parse(block));
        x->validate();
        base = std::move(x);
    } catch (const ParseError& e) {
        throw ParseError(e.line() + 1, std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
    } catch (const Error& e) {
        throw ParseError(2, e.what());
    }
    Bundle p(base, g);
    static const std::regex record(R"(transition\s+(\d+)\.(\d+)\.(\d+):\s*(.*))");
    for (std::size_t l = first; l < lines.size(); ++l) {
        const int line_no = static_cast<int>(l) + 1;
        if (lines[l].find_first_not_of(" \t") == std::string::npos) continue;
        std::smatch m;
        if (!std::regex_match(lines[l], m, record))
            throw ParseError(line_no, "expected 'transition <d>.<index>.<face>: <map>'");
        const SimplexId s{to_int(m[1], line_no), to_int(m[2], line_no)};
        const int i = to_int(m[3], line_no);
        if (!base->contains(s) || s.dim < 1 || i > s.dim) throw ParseError(line_no, "no such face");
        try {
            p.set_transition(s, i, GroupMap::parse(m[4].str(), g, s.dim - 1));
        } catch (const ParseError& e) {
            throw ParseError(line_no, std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
        } catch (const Error& e) {
            throw ParseError(line_no, e.what());
        }
    }
    return p;
}

std::string serialize_connection(const Connection& a) {
    std::ostringstream out;
    out << "connection v1; group " << a.algebra()->name() << ";\n";
    const auto& x = *a.base();
    for (int d = 1; d <= x.max_dim(); ++d)
        for (int idx = 0; idx < x.count(d); ++idx) {
            const LieForm& f = a.at({d, idx});
            for (int c = 0; c < static_cast<int>(f.c.size()); ++c)
                for (int v = 0; v < d; ++v) {
                    const Poly q = f.c[c].component(IndexMask{1} << v);
                    if (!q.is_zero())
                        out << "A " << d << "." << idx << " e" << c + 1 << " dx" << v + 1 << ": " << q.to_string() << "\n";
                }
        }
    return out.str();
}

Connection parse_connection(std::string_view text, const SetPtr& base) {
    const auto lines = lines_of(text);
    const AlgebraPtr g = parse_header(lines, "connection");
    Connection a(base, g);
    std::vector<std::vector<LieForm>> forms(base->max_dim() + 1);
    for (int d = 0; d <= base->max_dim(); ++d) forms[d].assign(base->count(d), LieForm::zero(g, d, 1));
    static const std::regex record(R"(A\s+(\d+)\.(\d+)\s+e(\d+)\s+dx(\d+):\s*(.*))");
    for (std::size_t l = 1; l < lines.size(); ++l) {
        const int line_no = static_cast<int>(l) + 1;
        if (lines[l].find_first_not_of(" \t") == std::string::npos) continue;
        std::smatch m;
        if (!std::regex_match(lines[l], m, record)) throw ParseError(line_no, "expected 'A <d>.<index> e<a> dx<v>: <poly>'");
        const SimplexId s{to_int(m[1], line_no), to_int(m[2], line_no)};
        const int c = to_int(m[3], line_no) - 1;
        const int v = to_int(m[4], line_no) - 1;
        if (!base->contains(s)) throw ParseError(line_no, "no such simplex");
        if (c < 0 || c >= g->dim() || v < 0 || v >= s.dim) throw ParseError(line_no, "component out of range");
        try {
            forms[s.dim][s.index].c[c].add_component(IndexMask{1} << v, Poly::parse(m[5].str(), s.dim));
        } catch (const ParseError& e) {
            throw ParseError(line_no, std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
        }
    }
    for (int d = 1; d <= base->max_dim(); ++d)
        for (int idx = 0; idx < base->count(d); ++idx) a.set({d, idx}, std::move(forms[d][idx]));
    return a;
}

}  // namespace scw
