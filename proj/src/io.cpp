#include "torusfront/io.hpp"

#include <sstream>
#include <vector>

namespace torusfront {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string t;
    while (is >> t) {
        if (t[0] == '#') break;
        out.push_back(t);
    }
    return out;
}

}  // namespace

TorusFront parse_front(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool header = false, have_n = false, have_h = false;
    TorusFront f;
    while (std::getline(is, line)) {
        ++lineno;
        auto tok = tokens(line);
        if (tok.empty()) continue;
        if (!header) {
            if (tok.size() != 2 || tok[0] != "front" || tok[1] != "v1")
                throw ParseError(lineno, "expected header 'front v1'");
            header = true;
            continue;
        }
        if (tok[0] == "n") {
            if (tok.size() != 2) throw ParseError(lineno, "usage: n <integer>");
            try {
                f.structure_index = std::stoi(tok[1]);
            } catch (...) {
                throw ParseError(lineno, "bad structure index");
            }
            if (f.structure_index < 1) throw ParseError(lineno, "structure index must be >= 1");
            have_n = true;
        } else if (tok[0] == "holonomy") {
            if (tok.size() != 3) throw ParseError(lineno, "usage: holonomy <int> <int>");
            try {
                f.alpha = std::stoll(tok[1]);
                f.beta = std::stoll(tok[2]);
            } catch (...) {
                throw ParseError(lineno, "bad holonomy");
            }
            have_h = true;
        } else if (tok[0] == "vertex") {
            if (tok.size() != 3 && tok.size() != 4)
                throw ParseError(lineno, "usage: vertex <p/q> <p/q> [cusp]");
            auto y = rat_from_string(tok[1]);
            auto z = rat_from_string(tok[2]);
            if (!y || !z) throw ParseError(lineno, "malformed rational");
            VertexKind k = VertexKind::Smooth;
            if (tok.size() == 4) {
                if (tok[3] != "cusp") throw ParseError(lineno, "unknown vertex flag");
                k = VertexKind::Cusp;
            }
            f.vertices.push_back({{*y, *z}, k});
        } else {
            throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
        }
    }
    if (!header) throw ParseError(lineno, "missing header 'front v1'");
    (void)have_n;
    (void)have_h;
    if (f.vertices.size() < 2) throw ParseError(lineno, "front needs at least 2 vertices");
    return f;
}

std::string serialize_front(const TorusFront& f, const std::string& name) {
    std::ostringstream os;
    os << "front v1\n";
    if (!name.empty()) os << "# " << name << "\n";
    os << "n " << f.structure_index << "\n";
    os << "holonomy " << f.alpha << " " << f.beta << "\n";
    for (const auto& v : f.vertices) {
        os << "vertex " << rat_to_string(v.p.y) << " " << rat_to_string(v.p.z);
        if (v.kind == VertexKind::Cusp) os << " cusp";
        os << "\n";
    }
    return os.str();
}

}  // namespace torusfront
