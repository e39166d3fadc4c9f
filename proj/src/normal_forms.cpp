#include "opforge/normal_forms.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "opforge/expansion.hpp"
#include "opforge/presentation.hpp"

namespace opforge {

namespace {

Monomial ln_monomial(std::span<const int> letters) {
    Monomial m = Monomial::leaf(letters[0]);
    for (std::size_t i = 1; i < letters.size(); ++i)
        m = Monomial::node(0, m, Monomial::leaf(letters[i]));
    return m;
}

Monomial rn_monomial(std::span<const int> letters) {
    return Monomial::node(0, Monomial::leaf(letters[0]), ln_monomial(letters.subspan(1)));
}

}  // namespace

Monomial BasisWord::to_monomial() const {
    if (shape == WordShape::left_normed || letters.size() <= 2) return ln_monomial(letters);
    return rn_monomial(letters);
}

std::optional<std::vector<int>> as_left_normed(const Monomial& m) {
    std::vector<int> rev;
    Monomial cur = m;
    while (!cur.is_leaf()) {
        if (cur.top_op() != 0) return std::nullopt;
        const Monomial r = cur.right();
        if (!r.is_leaf()) return std::nullopt;
        rev.push_back(r.leaf_var());
        cur = cur.left();
    }
    rev.push_back(cur.leaf_var());
    return std::vector<int>(rev.rbegin(), rev.rend());
}

std::optional<std::vector<int>> as_right_normed(const Monomial& m) {
    if (m.degree() < 3 || m.is_leaf()) return std::nullopt;
    if (m.top_op() != 0) return std::nullopt;
    const Monomial l = m.left();
    if (!l.is_leaf()) return std::nullopt;
    auto inner = as_left_normed(m.right());
    if (!inner || inner->size() < 2) return std::nullopt;
    std::vector<int> out{l.leaf_var()};
    out.insert(out.end(), inner->begin(), inner->end());
    return out;
}

bool is_basis_N(const Monomial& m) {
    const int n = m.degree();
    if (n <= 1) return m.is_leaf();
    if (!m.uses_only_op(0)) return false;
    if (n == 2) return m.left().is_leaf() && m.right().is_leaf();
    if (auto w = as_left_normed(m)) {
        if (n == 3) return (*w)[1] <= (*w)[2];
        return std::is_sorted(w->begin() + 1, w->end());
    }
    if (auto r = as_right_normed(m)) {
        if (n == 3) return (*r)[0] >= (*r)[1];
        return (*r)[1] >= (*r)[0] && std::is_sorted(r->begin() + 2, r->end());
    }
    return false;
}

bool is_basis_B(const Monomial& m) {
    const int n = m.degree();
    if (n <= 3) return is_basis_N(m);
    if (!m.uses_only_op(0)) return false;
    if (auto w = as_left_normed(m)) return std::is_sorted(w->begin(), w->end());
    return false;
}

namespace {

enum class Variety { N, B };

const Presentation& variety_presentation(Variety v) {
    static const Presentation nov = builtin_presentation("nov_s");
    static const Presentation bic = builtin_presentation("bicom_s");
    return v == Variety::N ? nov : bic;
}

bool is_basis(Variety v, const Monomial& m) {
    return v == Variety::N ? is_basis_N(m) : is_basis_B(m);
}

void collect_letters(const Monomial& m, std::vector<int>& out) {
    for (auto t : m.code())
        if (t > 0) out.push_back(t);
}

Monomial relabel_values(const Monomial& m, const std::map<int, int>& map) {
    std::vector<int> perm;
    for (auto t : m.code())
        if (t > 0 && t > static_cast<int>(perm.size())) perm.resize(t, 0);
    for (auto& [from, to] : map)
        if (from <= static_cast<int>(perm.size())) perm[from - 1] = to;
    return m.relabel(perm);
}

Polynomial relabel_values(const Polynomial& p, const std::map<int, int>& map) {
    std::vector<Polynomial::Term> out;
    for (const auto& [m, c] : p.terms()) out.push_back({relabel_values(m, map), c});
    return Polynomial::from_terms(std::move(out));
}

// All degree-3 monomials whose letter multiset matches `letters`.
std::vector<Monomial> concrete_monomials3(const std::vector<int>& letters) {
    std::set<Monomial, MonomialGreater> out;
    std::vector<int> w = letters;
    std::sort(w.begin(), w.end());
    do {
        const Monomial x = Monomial::leaf(w[0]), y = Monomial::leaf(w[1]),
                       z = Monomial::leaf(w[2]);
        out.insert(Monomial::node(0, Monomial::node(0, x, y), z));
        out.insert(Monomial::node(0, x, Monomial::node(0, y, z)));
    } while (std::next_permutation(w.begin(), w.end()));
    return {out.begin(), out.end()};
}

// Expansion of every degree-3 monomial on a letter pattern in the basis of
// the corresponding quotient, computed by exact elimination once per pattern.
struct Degree3Table {
    std::map<Monomial, Polynomial, MonomialLess> expand;
};

const Degree3Table& degree3_table(Variety v, const std::vector<int>& pattern) {
    static std::mutex mu;
    static std::map<std::pair<int, std::vector<int>>, Degree3Table> cache;
    std::lock_guard lock(mu);
    const auto key = std::make_pair(static_cast<int>(v), pattern);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    const std::vector<Monomial> cols = concrete_monomials3(pattern);  // descending
    std::map<Monomial, int, MonomialGreater> col_of;
    for (std::size_t j = 0; j < cols.size(); ++j) col_of.emplace(cols[j], static_cast<int>(j));

    RrefBuilder builder(static_cast<int>(cols.size()));
    std::vector<int> w = pattern;
    std::sort(w.begin(), w.end());
    const auto& pres = variety_presentation(v);
    do {
        std::vector<Monomial> assign{Monomial::leaf(w[0]), Monomial::leaf(w[1]),
                                     Monomial::leaf(w[2])};
        for (const auto& rel : pres.relations) {
            if (rel.degree() != 3) continue;
            const Polynomial inst = rel.substitute(assign);
            SparseVec vec;
            for (const auto& [m, c] : inst.terms()) vec.push_back({col_of.at(m), c});
            builder.add_row(std::move(vec));
        }
    } while (std::next_permutation(w.begin(), w.end()));

    std::vector<Monomial> basis;
    for (const auto& m : cols)
        if (is_basis(v, m)) basis.push_back(m);
    const int nb = static_cast<int>(basis.size());
    const int nfree = static_cast<int>(cols.size()) - builder.rank();
    if (nb != nfree)
        throw std::logic_error("degree-3 census does not match quotient dimension");

    // dense change of basis: reduced coords of the census basis elements
    std::vector<int> free_index(cols.size(), -1);
    int k = 0;
    for (std::size_t j = 0; j < cols.size(); ++j)
        if (!builder.is_pivot(static_cast<int>(j))) free_index[j] = k++;
    auto coords = [&](const Monomial& m) {
        std::vector<Rational> out(nfree, Rational(0));
        for (const auto& e : builder.reduce({{col_of.at(m), Rational(1)}}))
            out[free_index[e.col]] = e.val;
        return out;
    };
    // invert the nb x nb matrix whose columns are coords(basis[i])
    std::vector<std::vector<Rational>> aug(nb, std::vector<Rational>(2 * nb, Rational(0)));
    for (int i = 0; i < nb; ++i) {
        const auto ci = coords(basis[i]);
        for (int r = 0; r < nb; ++r) aug[r][i] = ci[r];
        aug[i][nb + i] = 1;
    }
    for (int col = 0; col < nb; ++col) {
        int sel = -1;
        for (int r = col; r < nb; ++r)
            if (aug[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) throw std::logic_error("census basis is linearly dependent");
        std::swap(aug[col], aug[sel]);
        const Rational inv = aug[col][col];
        for (auto& x : aug[col]) x /= inv;
        for (int r = 0; r < nb; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            const Rational f = aug[r][col];
            for (int c2 = 0; c2 < 2 * nb; ++c2) aug[r][c2] -= f * aug[col][c2];
        }
    }

    Degree3Table table;
    for (const auto& m : cols) {
        const auto y = coords(m);
        std::vector<Polynomial::Term> terms;
        for (int i = 0; i < nb; ++i) {
            Rational x(0);
            for (int r = 0; r < nb; ++r) x += aug[i][nb + r] * y[r];
            if (x != 0) terms.push_back({basis[i], std::move(x)});
        }
        table.expand.emplace(m, Polynomial::from_terms(std::move(terms)));
    }
    return cache.emplace(key, std::move(table)).first->second;
}

Polynomial expand_degree3(Variety v, const Monomial& t) {
    std::vector<int> letters;
    collect_letters(t, letters);
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    std::map<int, int> to_pattern, from_pattern;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        to_pattern[letters[i]] = static_cast<int>(i) + 1;
        from_pattern[static_cast<int>(i) + 1] = letters[i];
    }
    std::vector<int> pattern;
    collect_letters(t, pattern);
    std::sort(pattern.begin(), pattern.end());
    for (auto& x : pattern) x = to_pattern[x];
    const auto& table = degree3_table(v, pattern);
    const Monomial tp = relabel_values(t, to_pattern);
    return relabel_values(table.expand.at(tp), from_pattern);
}

// --- closed-form rules for degree >= 4 ---------------------------------
//
// In the quotient the following hold (used below; each is a consequence of
// the degree-3 identities together with the degree-4 vanishing identities):
//   * any product with a right-normed factor of degree >= 3 vanishes,
//   * letters at inner positions of a left-normed word commute,
//   * (V a) b = (V b) a + a(V b) - b(V a),
//   * inside x_r(W), all letters of W after the first commute.

constexpr int kRnSwapSignBase = 1;  // sign exponent offset, validated by tests

Polynomial normalize_rn_N(std::vector<int> w);

// left-normed word of degree >= 4 expressed in the basis
Polynomial normalize_ln_N(std::vector<int> w) {
    if (std::is_sorted(w.begin() + 1, w.end())) return Polynomial(ln_monomial(w));
    const int mx = *std::max_element(w.begin() + 1, w.end());
    if (w.back() == mx) {
        std::sort(w.begin() + 1, w.end());
        return Polynomial(ln_monomial(w));
    }
    // (V a) b = (V b) a + a(V b) - b(V a) with a the maximal tail letter
    const int b = w.back();
    const auto it = std::find(w.begin() + 1, w.end() - 1, mx);
    std::vector<int> v(w.begin(), it);
    v.insert(v.end(), it + 1, w.end() - 1);  // V-word: w0 + middle minus a
    std::vector<int> vb = v;
    vb.push_back(b);
    std::vector<int> va = v;
    va.push_back(mx);

    std::vector<int> main = vb;
    main.push_back(mx);
    Polynomial out = normalize_ln_N(std::move(main));
    std::vector<int> rn1{mx};
    rn1.insert(rn1.end(), vb.begin(), vb.end());
    out += normalize_rn_N(std::move(rn1));
    std::vector<int> rn2{b};
    rn2.insert(rn2.end(), va.begin(), va.end());
    out -= normalize_rn_N(std::move(rn2));
    return out;
}

// right-normed word of degree >= 4 expressed in the basis
Polynomial normalize_rn_N(std::vector<int> w) {
    const int n = static_cast<int>(w.size());
    std::sort(w.begin() + 2, w.end());
    Rational sign(1);
    if (w[0] > w[1]) {
        std::swap(w[0], w[1]);
        if ((n - 3 + kRnSwapSignBase) % 2 == 1) sign = -1;
    }
    return Polynomial(rn_monomial(w), sign);
}

Polynomial mult_basis(Variety v, const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    const int total = da + db;
    if (total == 2) return Polynomial(Monomial::node(0, a, b));
    if (total == 3) return expand_degree3(v, Monomial::node(0, a, b));

    const auto la = as_left_normed(a);
    const auto lb = as_left_normed(b);
    if (v == Variety::B) {
        // every product merges into the fully sorted left-normed word
        std::vector<int> all;
        collect_letters(a, all);
        collect_letters(b, all);
        std::sort(all.begin(), all.end());
        return Polynomial(ln_monomial(all));
    }
    // Variety::N
    if (!la || !lb) return {};  // right-normed factor of degree >= 3
    if (db == 1) {
        std::vector<int> w = *la;
        w.push_back((*lb)[0]);
        return normalize_ln_N(std::move(w));
    }
    // left-normed times left-normed of degree >= 2: single right-normed word
    std::vector<int> w{(*la)[0], (*lb)[0]};
    std::vector<int> rest(la->begin() + 1, la->end());
    rest.insert(rest.end(), lb->begin() + 1, lb->end());
    std::sort(rest.begin(), rest.end());
    w.insert(w.end(), rest.begin(), rest.end());
    return normalize_rn_N(std::move(w));
}

Polynomial mult_poly(Variety v, const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out += mult_basis(v, ma, mb) * (ca * cb);
    return out;
}

Polynomial nf(Variety v, const Monomial& m) {
    if (m.is_leaf()) return Polynomial(m);
    if (!m.uses_only_op(0))
        throw std::invalid_argument("normal form expects a single-operation term");
    return mult_poly(v, nf(v, m.left()), nf(v, m.right()));
}

void check_basis_arg(Variety v, const Monomial& m, const char* who) {
    if (!is_basis(v, m))
        throw std::invalid_argument(std::string(who) + ": argument is not a basis monomial");
}

}  // namespace

Polynomial mult_N(const Monomial& a, const Monomial& b) {
    check_basis_arg(Variety::N, a, "mult_N");
    check_basis_arg(Variety::N, b, "mult_N");
    return mult_basis(Variety::N, a, b);
}

Polynomial mult_N(const Polynomial& a, const Polynomial& b) {
    return mult_poly(Variety::N, a, b);
}

Polynomial mult_B(const Monomial& a, const Monomial& b) {
    check_basis_arg(Variety::B, a, "mult_B");
    check_basis_arg(Variety::B, b, "mult_B");
    return mult_basis(Variety::B, a, b);
}

Polynomial mult_B(const Polynomial& a, const Polynomial& b) {
    return mult_poly(Variety::B, a, b);
}

Polynomial nf_nov_s(const Monomial& m) { return nf(Variety::N, m); }

Polynomial nf_nov_s(const Polynomial& p) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) out += nf(Variety::N, m) * c;
    return out;
}

Polynomial nf_bicom_s(const Monomial& m) { return nf(Variety::B, m); }

Polynomial nf_bicom_s(const Polynomial& p) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) out += nf(Variety::B, m) * c;
    return out;
}

Polynomial to_two_op(const Polynomial& p, int op) {
    std::vector<Polynomial::Term> out;
    const std::vector<int> op_map{op};
    for (const auto& [m, c] : p.terms()) out.push_back({m.map_ops(op_map), c});
    return Polynomial::from_terms(std::move(out));
}

Polynomial to_one_op(const Polynomial& p) {
    std::vector<Polynomial::Term> out;
    for (const auto& [m, c] : p.terms()) {
        Monomial mm = m;
        if (!mm.is_leaf()) {
            const std::vector<int> op_map(static_cast<std::size_t>(mm.top_op()) + 1, 0);
            mm = mm.map_ops(op_map);
        }
        out.push_back({std::move(mm), c});
    }
    return Polynomial::from_terms(std::move(out));
}

namespace {

constexpr int kPrec = 0;
constexpr int kSucc = 1;

Polynomial fix_pair(int op, const Polynomial& l, const Polynomial& r);

// children are pure (single-operation) monomials or leaves
Polynomial fix_node(int op, const Monomial& l, const Monomial& r) {
    const int ltop = l.is_leaf() ? -1 : l.top_op();
    const int rtop = r.is_leaf() ? -1 : r.top_op();
    if (op == kSucc && ltop == kPrec)  // (b<c)>a = -a<(b<c)
        return fix_pair(kPrec, Polynomial(r), Polynomial(l)) * Rational(-1);
    if (op == kPrec && ltop == kSucc) {
        // (A>B)<c = (A>c)>B - c>(A>B)
        const Monomial A = l.left(), B = l.right();
        const Polynomial ac = fix_pair(kSucc, Polynomial(A), Polynomial(r));
        Polynomial out = fix_pair(kSucc, ac, Polynomial(B));
        out -= fix_pair(kSucc, Polynomial(r), Polynomial(l));
        return out;
    }
    if (op == kPrec && rtop == kSucc) return {};  // a<(b>c) = 0
    if (op == kSucc && rtop == kPrec)             // a>(b<c) = a<(b<c)
        return fix_pair(kPrec, Polynomial(l), Polynomial(r));
    return Polynomial(Monomial::node(op, l, r));
}

Polynomial fix_pair(int op, const Polynomial& l, const Polynomial& r) {
    Polynomial out;
    for (const auto& [ml, cl] : l.terms())
        for (const auto& [mr, cr] : r.terms()) out += fix_node(op, ml, mr) * (cl * cr);
    return out;
}

Polynomial purify(const Monomial& m) {
    if (m.is_leaf()) return Polynomial(m);
    return fix_pair(m.top_op(), purify(m.left()), purify(m.right()));
}

}  // namespace

std::pair<Polynomial, Polynomial> split_dernov_dual(const Polynomial& q) {
    Polynomial less, greater;
    for (const auto& [m, c] : q.terms()) {
        const Polynomial pure = purify(m) * c;
        for (const auto& [pm, pc] : pure.terms()) {
            if (!pm.is_leaf() && pm.top_op() == kSucc)
                greater += Polynomial(pm, pc);
            else
                less += Polynomial(pm, pc);
        }
    }
    return {nf_nov_s(to_one_op(less)), nf_bicom_s(to_one_op(greater))};
}

namespace {

long long census(Variety v, int degree, CensusMode mode, int generators) {
    if (degree < 1) throw std::invalid_argument("census: degree must be >= 1");
    const int k = mode == CensusMode::multilinear ? degree : generators;
    if (mode == CensusMode::generators && k < 1)
        throw std::invalid_argument("census: generator count must be >= 1");

    long long count = 0;
    std::vector<int> word(degree, 1);
    auto admissible = [&](std::span<const int> w, WordShape shape) {
        if (mode == CensusMode::multilinear) {
            std::vector<bool> seen(degree, false);
            for (int x : w) {
                if (x > degree || seen[x - 1]) return false;
                seen[x - 1] = true;
            }
        }
        BasisWord bw{shape, {w.begin(), w.end()}};
        const Monomial m = bw.to_monomial();
        return v == Variety::N ? is_basis_N(m) : is_basis_B(m);
    };
    // enumerate words over 1..k for each shape; degree <= 2 has one shape
    const bool two_shapes = degree >= 3;
    while (true) {
        if (admissible(word, WordShape::left_normed)) ++count;
        if (two_shapes && admissible(word, WordShape::right_normed)) ++count;
        int i = degree - 1;
        while (i >= 0 && word[i] == k) word[i--] = 1;
        if (i < 0) break;
        ++word[i];
    }
    return count;
}

}  // namespace

long long census_N(int degree, CensusMode mode, int generators) {
    return census(Variety::N, degree, mode, generators);
}

long long census_B(int degree, CensusMode mode, int generators) {
    return census(Variety::B, degree, mode, generators);
}

}  // namespace opforge
