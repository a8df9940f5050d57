#include "indfam/serialize.hpp"

#include <sstream>

namespace indfam {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

} // namespace

std::string family_to_text(const Family& f) {
    std::ostringstream out;
    out << "gamma " << f.params.n << ' ' << f.params.k << ' ' << f.params.r << '\n';
    for (const IndSet& x : f.members) {
        bool first = true;
        for (Vertex v : vertices_of(f.params, x)) {
            if (!first) out << ' ';
            out << v.clique << '.' << v.pos;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

Family family_from_text(const std::string& text) {
    auto lines = split_lines(text);
    if (lines.empty()) throw io_error("empty family file");
    std::istringstream head(lines[0]);
    std::string tag;
    int n = 0, k = 0, r = 0;
    head >> tag >> n >> k >> r;
    if (tag != "gamma" || head.fail()) throw io_error("expected header 'gamma n k r'");
    Params p = make_params(n, k, r);

    std::vector<IndSet> members;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream in(lines[i]);
        std::vector<Vertex> vs;
        std::string tok;
        while (in >> tok) {
            auto dot = tok.find('.');
            if (dot == std::string::npos) throw io_error("bad vertex token '" + tok + "'");
            vs.push_back(Vertex{std::stoi(tok.substr(0, dot)), std::stoi(tok.substr(dot + 1))});
        }
        members.push_back(make_indset(p, vs));
    }
    return make_family(p, std::move(members));
}

std::string indset_hex(IndSet x) {
    static const char* digits = "0123456789abcdef";
    if (x.bits == 0) return "0";
    std::string s;
    word b = x.bits;
    while (b != 0) {
        s.push_back(digits[static_cast<unsigned>(b & 0xf)]);
        b >>= 4;
    }
    return std::string(s.rbegin(), s.rend());
}

std::string family_hex(const Family& f) {
    std::string out;
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        if (i) out.push_back(',');
        out += indset_hex(f.members[i]);
    }
    return out;
}

Family family_from_hex(const Params& p, const std::string& csv) {
    std::vector<IndSet> members;
    std::string tok;
    std::istringstream in(csv);
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        word bits = 0;
        for (char c : tok) {
            int d;
            if (c >= '0' && c <= '9') d = c - '0';
            else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
            else throw io_error("bad hex digit in family fixture");
            bits = (bits << 4) | static_cast<word>(d);
        }
        members.push_back(IndSet{bits});
    }
    return make_family(p, std::move(members));
}

std::string ground_to_text(const GroundFamily& g) {
    std::ostringstream out;
    out << "ground " << g.n << ' ' << g.r << '\n';
    for (GroundSet s : g.members) {
        if (s.bits == 0) {
            out << "-\n";
            continue;
        }
        bool first = true;
        for (int e : elements_of(s)) {
            if (!first) out << ' ';
            out << e;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

GroundFamily ground_from_text(const std::string& text) {
    auto lines = split_lines(text);
    if (lines.empty()) throw io_error("empty ground family file");
    std::istringstream head(lines[0]);
    std::string tag;
    int n = 0, r = 0;
    head >> tag >> n >> r;
    if (tag != "ground" || head.fail()) throw io_error("expected header 'ground n r'");

    std::vector<GroundSet> members;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i] == "-") {
            members.push_back(GroundSet{});
            continue;
        }
        std::istringstream in(lines[i]);
        std::vector<int> elems;
        int e;
        while (in >> e) elems.push_back(e);
        members.push_back(make_ground_set(n, elems));
    }
    return make_ground_family(n, r, std::move(members));
}

} // namespace indfam
