#include "opforge/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace opforge {

bool Presentation::quadratic() const {
    return std::all_of(relations.begin(), relations.end(),
                       [](const Polynomial& r) { return r.degree() == 3; });
}

void validate(const Presentation& p) {
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
        const auto& r = p.relations[i];
        const std::string where = "relation " + std::to_string(i + 1) + " of " + p.name;
        if (r.zero()) throw std::invalid_argument(where + ": zero relation");
        if (!r.homogeneous()) throw std::invalid_argument(where + ": inhomogeneous");
        if (!r.multilinear()) throw std::invalid_argument(where + ": not multilinear");
        if (r.degree() < 3 || r.degree() > 4)
            throw std::invalid_argument(where + ": degree must be 3 or 4");
    }
}

namespace {

Presentation make(std::string name, Signature sig, std::vector<std::string_view> rels) {
    Presentation p{std::move(name), std::move(sig), {}};
    p.relations.reserve(rels.size());
    for (auto text : rels) p.relations.push_back(parse_polynomial(text, p.sig));
    validate(p);
    return p;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {"novikov",     "bicommutative",
                                                   "dernov",      "dernov_dual",
                                                   "nov_s",       "bicom_s"};
    return names;
}

Presentation builtin_presentation(std::string_view name) {
    if (name == "novikov") {
        // right-commutativity and left-symmetry of the associator
        return make("novikov", one_op_signature(),
                    {"(a*b)*c - (a*c)*b",
                     "(a*b)*c - a*(b*c) - (b*a)*c + b*(a*c)"});
    }
    if (name == "bicommutative") {
        return make("bicommutative", one_op_signature(),
                    {"(a*b)*c - (a*c)*b",
                     "a*(b*c) - b*(a*c)"});
    }
    if (name == "dernov") {
        return make("dernov", two_op_signature(),
                    {"(a<b)<c - (a<c)<b",
                     "a>(b>c) + (b>c)<a - b>(a>c) - (a>c)<b",
                     "(a>b)>c - (a>c)<b - (a>c)>b + (a>b)<c",
                     "(a<b)>c - a<(c<b) + (a<c)<b + c>(a<b)"
                     " - (c<b)>a + c<(a<b) - (c<a)<b - a>(c<b)"});
    }
    if (name == "dernov_dual") {
        return make("dernov_dual", two_op_signature(),
                    {"a<(b<c) + (b<c)>a",
                     "a<(b>c)",
                     "(a<b)<c - (c<b)>a - (a<c)<b + (b<c)>a",
                     "(a>b)<c + c>(a>b) - (a>c)>b",
                     "a>(b<c) + (b<c)>a",
                     "a>(b>c) - b>(a>c)",
                     "(a<b)>c - (c<b)>a",
                     "(a>b)>c - (a>c)>b"});
    }
    if (name == "nov_s") {
        // The pure-< part of dernov_dual: a Novikov algebra in the convention
        // with right-symmetric associator and left-commutativity, which is the
        // convention the closed-form basis below lives in, plus the stated
        // degree-4 vanishing and reordering identities.
        return make("nov_s", one_op_signature(),
                    {"(a*b)*c - a*(b*c) - (a*c)*b + a*(c*b)",
                     "a*(b*c) - b*(a*c)",
                     "(a*(b*c))*d",
                     "a*(b*(c*d))",
                     "a*((b*c)*d) - a*((b*d)*c)",
                     "((a*b)*c)*d - ((a*c)*b)*d"});
    }
    if (name == "bicom_s") {
        return make("bicom_s", one_op_signature(),
                    {"(a*b)*c - (a*c)*b",
                     "a*(b*c) - b*(a*c)",
                     "((a*b)*c)*d - d*(c*(b*a))",
                     "((a*b)*c)*d - c*(b*(a*d))",
                     "((a*b)*c)*d - c*((d*a)*b)",
                     "((a*b)*c)*d - b*((d*a)*c)",
                     "((a*b)*c)*d - b*((c*a)*d)"});
    }
    throw std::invalid_argument("unknown builtin presentation: " + std::string(name));
}

namespace {

std::string op_name_for_glyph(char g, int index) {
    switch (g) {
        case '<': return "prec";
        case '>': return "succ";
        case '*': return "circ";
        default: return "op" + std::to_string(index + 1);
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Presentation parse_presentation_text(std::string_view text, std::string name) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool have_ops = false;
    Presentation p;
    p.name = std::move(name);

    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::string_view s = trim(line);
        if (s.empty() || s.front() == '#') continue;
        if (!have_ops) {
            if (!s.starts_with("ops:")) fail("expected 'ops:' header");
            s.remove_prefix(4);
            std::vector<Operation> ops;
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (std::isspace(static_cast<unsigned char>(s[i]))) continue;
                ops.push_back({op_name_for_glyph(s[i], static_cast<int>(ops.size())), s[i]});
            }
            if (ops.empty()) fail("no operation glyphs");
            try {
                p.sig = Signature(std::move(ops));
            } catch (const std::exception& e) {
                fail(e.what());
            }
            have_ops = true;
            continue;
        }
        // strip optional "= 0" suffix
        if (const auto eq = s.find('='); eq != std::string_view::npos) {
            if (trim(s.substr(eq + 1)) != "0") fail("only '= 0' right-hand sides supported");
            s = trim(s.substr(0, eq));
        }
        Polynomial rel;
        try {
            rel = parse_polynomial(s, p.sig);
        } catch (const std::exception& e) {
            fail(e.what());
        }
        const std::string where = "relation";
        if (rel.zero()) fail("zero relation");
        if (!rel.homogeneous()) fail("inhomogeneous relation");
        if (!rel.multilinear()) fail("relation is not multilinear");
        if (rel.degree() < 3 || rel.degree() > 4) fail("relation degree must be 3 or 4");
        p.relations.push_back(std::move(rel));
    }
    if (!have_ops) throw std::invalid_argument("missing 'ops:' header");
    return p;
}

Presentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open presentation file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string name = path;
    if (const auto slash = name.find_last_of('/'); slash != std::string::npos)
        name = name.substr(slash + 1);
    if (const auto dot = name.find_last_of('.'); dot != std::string::npos && dot > 0)
        name = name.substr(0, dot);
    return parse_presentation_text(buf.str(), std::move(name));
}

std::string to_text(const Presentation& p) {
    std::string out = "ops:";
    for (const auto& op : p.sig.ops()) {
        out += ' ';
        out += op.glyph;
    }
    out += '\n';
    for (const auto& r : p.relations) {
        out += to_string(r, p.sig);
        out += '\n';
    }
    return out;
}

}  // namespace opforge
