#include "opforge/term.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace opforge {

Signature::Signature(std::vector<Operation> ops) : ops_(std::move(ops)) {
    if (ops_.empty()) throw std::invalid_argument("signature needs at least one operation");
    for (std::size_t i = 0; i < ops_.size(); ++i)
        for (std::size_t j = i + 1; j < ops_.size(); ++j)
            if (ops_[i].name == ops_[j].name || ops_[i].glyph == ops_[j].glyph)
                throw std::invalid_argument("duplicate operation name or glyph");
}

int Signature::op_by_glyph(char g) const {
    for (std::size_t i = 0; i < ops_.size(); ++i)
        if (ops_[i].glyph == g) return static_cast<int>(i);
    return -1;
}

bool Signature::operator==(const Signature& o) const {
    if (ops_.size() != o.ops_.size()) return false;
    for (std::size_t i = 0; i < ops_.size(); ++i)
        if (ops_[i].name != o.ops_[i].name || ops_[i].glyph != o.ops_[i].glyph) return false;
    return true;
}

Signature one_op_signature() { return Signature({{"circ", '*'}}); }
Signature two_op_signature() { return Signature({{"prec", '<'}, {"succ", '>'}}); }

Monomial Monomial::leaf(int var) {
    if (var < 1) throw std::invalid_argument("variable index must be positive");
    Monomial m;
    m.code_ = {var};
    return m;
}

Monomial Monomial::node(int op, const Monomial& l, const Monomial& r) {
    if (op < 0) throw std::invalid_argument("bad operation index");
    Monomial m;
    m.code_.reserve(1 + l.code_.size() + r.code_.size());
    m.code_.push_back(-op - 1);
    m.code_.insert(m.code_.end(), l.code_.begin(), l.code_.end());
    m.code_.insert(m.code_.end(), r.code_.begin(), r.code_.end());
    return m;
}

namespace {
// End (exclusive) of the subtree starting at position pos.
std::size_t subtree_end(std::span<const std::int32_t> code, std::size_t pos) {
    int need = 1;
    while (need > 0) {
        need += code[pos] < 0 ? 1 : -1;
        ++pos;
    }
    return pos;
}
}  // namespace

Monomial Monomial::left() const {
    Monomial m;
    const auto end = subtree_end(code_, 1);
    m.code_.assign(code_.begin() + 1, code_.begin() + static_cast<long>(end));
    return m;
}

Monomial Monomial::right() const {
    Monomial m;
    const auto start = subtree_end(code_, 1);
    m.code_.assign(code_.begin() + static_cast<long>(start), code_.end());
    return m;
}

int Monomial::degree() const {
    return static_cast<int>(std::count_if(code_.begin(), code_.end(),
                                          [](std::int32_t t) { return t > 0; }));
}

int Monomial::max_var() const {
    int mx = 0;
    for (auto t : code_)
        if (t > 0) mx = std::max(mx, static_cast<int>(t));
    return mx;
}

bool Monomial::multilinear() const {
    const int n = degree();
    std::vector<bool> seen(n, false);
    for (auto t : code_) {
        if (t <= 0) continue;
        if (t > n || seen[t - 1]) return false;
        seen[t - 1] = true;
    }
    return true;
}

bool Monomial::mixed_ops() const {
    std::int32_t first = 0;
    for (auto t : code_) {
        if (t >= 0) continue;
        if (first == 0)
            first = t;
        else if (t != first)
            return true;
    }
    return false;
}

bool Monomial::uses_only_op(int op) const {
    for (auto t : code_)
        if (t < 0 && t != -op - 1) return false;
    return true;
}

Monomial Monomial::relabel(std::span<const int> perm) const {
    Monomial m = *this;
    for (auto& t : m.code_)
        if (t > 0) t = perm[t - 1];
    return m;
}

Monomial Monomial::substitute(std::span<const Monomial> assignment) const {
    Monomial out;
    out.code_.reserve(code_.size());
    for (auto t : code_) {
        if (t < 0) {
            out.code_.push_back(t);
        } else {
            if (t > static_cast<std::int32_t>(assignment.size()))
                throw std::invalid_argument("substitute: missing assignment for variable");
            const auto& sub = assignment[t - 1].code_;
            out.code_.insert(out.code_.end(), sub.begin(), sub.end());
        }
    }
    return out;
}

Monomial Monomial::map_ops(std::span<const int> op_map) const {
    Monomial m = *this;
    for (auto& t : m.code_)
        if (t < 0) t = -op_map[-t - 1] - 1;
    return m;
}

int compare(const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    const bool ma = a.mixed_ops(), mb = b.mixed_ops();
    if (ma != mb) return ma ? 1 : -1;
    // same length codes: complete binary trees of equal degree
    for (std::size_t i = 0; i < a.code_.size(); ++i) {
        const auto ta = a.code_[i], tb = b.code_[i];
        if (ta == tb) continue;
        const bool oa = ta < 0, ob = tb < 0;
        if (oa != ob) return oa ? 1 : -1;      // operation token above leaf token
        if (oa) return (-ta - 1) < (-tb - 1) ? -1 : 1;  // higher op rank is greater
        return ta < tb ? -1 : 1;
    }
    return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto t : m.code_) {
        h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(t));
        h *= 1099511628211ull;
    }
    return h;
}

Polynomial::Polynomial(const Monomial& m, Rational c) {
    if (c != 0) terms_.push_back({m, std::move(c)});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return compare(x.first, y.first) > 0; });
    Polynomial p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first)
            p.terms_.back().second += t.second;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
    }
    return p;
}

bool Polynomial::homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.front().first.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const Term& t) { return t.first.degree() == d; });
}

int Polynomial::degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

bool Polynomial::multilinear() const {
    if (terms_.empty()) return true;
    const int d = terms_.front().first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) {
        return t.first.degree() == d && t.first.multilinear();
    });
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        const int c = compare(a->first, b->first);
        if (c > 0) {
            merged.push_back(std::move(*a++));
        } else if (c < 0) {
            merged.push_back(*b++);
        } else {
            Rational v = a->second + b->second;
            if (v != 0) merged.push_back({a->first, std::move(v)});
            ++a;
            ++b;
        }
    }
    merged.insert(merged.end(), std::make_move_iterator(a), std::make_move_iterator(terms_.end()));
    merged.insert(merged.end(), b, o.terms_.end());
    terms_ = std::move(merged);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += o * Rational(-1); }

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& t : terms_) t.second *= c;
    }
    return *this;
}

Polynomial Polynomial::relabel(std::span<const int> perm) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.push_back({m.relabel(perm), c});
    return from_terms(std::move(out));
}

Polynomial Polynomial::substitute(std::span<const Monomial> assignment) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.push_back({m.substitute(assignment), c});
    return from_terms(std::move(out));
}

Polynomial Polynomial::map_ops(std::span<const int> op_map) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.push_back({m.map_ops(op_map), c});
    return from_terms(std::move(out));
}

namespace {

void enumerate_on(const std::vector<int>& labels, int nops, std::vector<Monomial>& out) {
    if (labels.size() == 1) {
        out.push_back(Monomial::leaf(labels[0]));
        return;
    }
    const int n = static_cast<int>(labels.size());
    // iterate nonempty proper subsets for the left subtree
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<int> lv, rv;
        for (int i = 0; i < n; ++i)
            ((mask >> i) & 1u ? lv : rv).push_back(labels[i]);
        std::vector<Monomial> ls, rs;
        enumerate_on(lv, nops, ls);
        enumerate_on(rv, nops, rs);
        for (const auto& l : ls)
            for (const auto& r : rs)
                for (int op = 0; op < nops; ++op) out.push_back(Monomial::node(op, l, r));
    }
}

}  // namespace

const std::vector<Monomial>& multilinear_basis(const Signature& sig, int n) {
    if (n < 1) throw std::invalid_argument("multilinear_basis: degree must be >= 1");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<Monomial>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(sig.size(), n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    std::vector<Monomial> out;
    enumerate_on(labels, sig.size(), out);
    std::sort(out.begin(), out.end(), MonomialLess{});
    return cache.emplace(key, std::move(out)).first->second;
}

std::string to_string(const Monomial& m, const Signature& sig) {
    if (m.is_leaf()) return "x" + std::to_string(m.leaf_var());
    const Monomial l = m.left(), r = m.right();
    std::string ls = to_string(l, sig), rs = to_string(r, sig);
    if (!l.is_leaf()) ls = "(" + ls + ")";
    if (!r.is_leaf()) rs = "(" + rs + ")";
    return ls + sig.op(m.top_op()).glyph + rs;
}

std::string to_string(const Polynomial& p, const Signature& sig) {
    if (p.zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool neg = c < 0;
        const Rational ac = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (ac != 1) out += rational_to_string(ac);
        out += to_string(m, sig);
    }
    return out;
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    const Signature& sig;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument(msg + " at offset " + std::to_string(pos));
    }

    Monomial parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        const char c = text[pos];
        if (c == '(') {
            ++pos;
            Monomial m = parse_monomial();
            skip_ws();
            if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
            ++pos;
            return m;
        }
        if (c == 'x') {
            ++pos;
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) fail("expected variable index after 'x'");
            const int v = std::stoi(std::string(text.substr(start, pos - start)));
            if (v < 1) fail("variable index must be positive");
            return Monomial::leaf(v);
        }
        if (c >= 'a' && c <= 'd') {
            ++pos;
            return Monomial::leaf(c - 'a' + 1);
        }
        fail(std::string("unknown variable token '") + c + "'");
    }

    Monomial parse_monomial() {
        Monomial first = parse_atom();
        skip_ws();
        if (pos >= text.size()) return first;
        const int op = sig.op_by_glyph(text[pos]);
        if (op < 0) return first;
        ++pos;
        Monomial second = parse_atom();
        skip_ws();
        if (pos < text.size() && sig.op_by_glyph(text[pos]) >= 0)
            fail("unparenthesized double product");
        return Monomial::node(op, first, second);
    }

    // [number ['/' number]] monomial
    std::pair<Monomial, Rational> parse_term() {
        Rational coeff(1);
        skip_ws();
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            Int num{std::string(text.substr(start, pos - start))};
            Int den{1};
            skip_ws();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                skip_ws();
                start = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    ++pos;
                if (pos == start) fail("expected denominator");
                den = Int{std::string(text.substr(start, pos - start))};
                if (den == 0) fail("zero denominator");
            }
            coeff = Rational(num, den);
        }
        return {parse_monomial(), coeff};
    }

    Polynomial parse() {
        std::vector<Polynomial::Term> terms;
        Rational sign(1);
        if (peek() == '-') {
            ++pos;
            sign = -1;
        } else if (peek() == '+') {
            ++pos;
        }
        while (true) {
            auto [m, c] = parse_term();
            terms.push_back({std::move(m), c * sign});
            if (eof()) break;
            const char s = peek();
            if (s == '+')
                sign = 1;
            else if (s == '-')
                sign = -1;
            else
                fail(std::string("unexpected token '") + s + "'");
            ++pos;
        }
        return Polynomial::from_terms(std::move(terms));
    }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Signature& sig) {
    Parser p{text, 0, sig};
    if (p.eof()) throw std::invalid_argument("empty polynomial");
    // explicit "0"
    p.skip_ws();
    if (text.substr(p.pos) == "0") return Polynomial{};
    return p.parse();
}

}  // namespace opforge
