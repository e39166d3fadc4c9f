#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "opforge/expansion.hpp"
#include "opforge/normal_forms.hpp"

using namespace opforge;

namespace {

const Signature kOne = one_op_signature();
const Signature kTwo = two_op_signature();

Monomial mono(const std::string& s, const Signature& sig = kOne) {
    return parse_polynomial(s, sig).leading_monomial();
}

// Independent oracle: express reduce(q) in the multilinear census basis by
// solving a linear system against the reduced coordinates of the basis.
Polynomial reduce_to_census(const Polynomial& q, const Presentation& pres, bool use_N) {
    const int n = q.degree();
    const auto cb = normal_form_basis(pres, n);
    std::vector<Monomial> basis;
    for (const auto& m : multilinear_basis(kOne, n))
        if (use_N ? is_basis_N(m) : is_basis_B(m)) basis.push_back(m);
    REQUIRE(static_cast<int>(basis.size()) == cb->dim());

    const int nb = static_cast<int>(basis.size());
    std::vector<std::vector<Rational>> aug(nb, std::vector<Rational>(2 * nb, Rational(0)));
    for (int i = 0; i < nb; ++i) {
        const auto ci = cb->nf_coords(Polynomial(basis[i]));
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
        REQUIRE(sel >= 0);  // census monomials must be independent in the quotient
        std::swap(aug[col], aug[sel]);
        const Rational inv = aug[col][col];
        for (auto& x : aug[col]) x /= inv;
        for (int r = 0; r < nb; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            const Rational f = aug[r][col];
            for (int c2 = 0; c2 < 2 * nb; ++c2) aug[r][c2] -= f * aug[col][c2];
        }
    }
    const auto y = cb->nf_coords(q);
    std::vector<Polynomial::Term> terms;
    for (int i = 0; i < nb; ++i) {
        Rational x(0);
        for (int r = 0; r < nb; ++r) x += aug[i][nb + r] * y[r];
        if (x != 0) terms.push_back({basis[i], std::move(x)});
    }
    return Polynomial::from_terms(std::move(terms));
}

Monomial random_tree(std::mt19937& rng, int degree, int max_gen) {
    std::uniform_int_distribution<int> gen(1, max_gen);
    if (degree == 1) return Monomial::leaf(gen(rng));
    std::uniform_int_distribution<int> split(1, degree - 1);
    const int l = split(rng);
    return Monomial::node(0, random_tree(rng, l, max_gen), random_tree(rng, degree - l, max_gen));
}

}  // namespace

TEST_CASE("basis membership for N") {
    CHECK(is_basis_N(mono("(x1*x2)*x3")));      // k2 <= k3
    CHECK_FALSE(is_basis_N(mono("x1*(x2*x3)")));  // needs l1 >= l2
    CHECK(is_basis_N(mono("x2*(x1*x3)")));
    CHECK(is_basis_N(mono("((x1*x2)*x3)*x4")));
    CHECK_FALSE(is_basis_N(mono("(x1*(x2*x3))*x4")));
    CHECK_FALSE(is_basis_N(mono("((x1*x3)*x2)*x4")));
    CHECK(is_basis_N(mono("((x3*x1)*x2)*x4")));
    CHECK(is_basis_N(mono("x1*((x2*x3)*x4)")));   // r2 >= r1, tail sorted
    CHECK_FALSE(is_basis_N(mono("x2*((x1*x3)*x4)")));
    CHECK(is_basis_N(mono("x1*((x4*x2)*x3)")));
    CHECK_FALSE(is_basis_N(mono("x1*((x2*x4)*x3)")));
    CHECK(is_basis_N(mono("x1*x2")));
    CHECK(is_basis_N(mono("x2*x1")));
    CHECK(is_basis_N(Monomial::leaf(5)));
    CHECK_FALSE(is_basis_N(mono("x1<x2", kTwo)));  // wrong signature
}

TEST_CASE("basis membership for B") {
    CHECK(is_basis_B(mono("(x1*x2)*x3")));
    CHECK(is_basis_B(mono("x2*(x1*x3)")));
    CHECK(is_basis_B(mono("((x1*x2)*x3)*x4")));
    CHECK_FALSE(is_basis_B(mono("((x2*x1)*x3)*x4")));  // needs m1 <= m2 too
    CHECK_FALSE(is_basis_B(mono("x1*((x2*x3)*x4)")));  // no right-normed words at degree 4
    CHECK(is_basis_B(mono("((x1*x1)*x2)*x3")));
}

TEST_CASE("census counts") {
    CHECK(census_N(2, CensusMode::multilinear) == 2);
    CHECK(census_B(2, CensusMode::multilinear) == 2);
    CHECK(census_N(3, CensusMode::multilinear) == 6);
    CHECK(census_B(3, CensusMode::multilinear) == 6);
    CHECK(census_N(4, CensusMode::multilinear) == 10);
    CHECK(census_B(4, CensusMode::multilinear) == 1);
    CHECK(census_N(5, CensusMode::multilinear) == 15);
    CHECK(census_B(5, CensusMode::multilinear) == 1);
    // n + C(n,2) in general
    CHECK(census_N(6, CensusMode::multilinear) == 6 + 15);

    CHECK(census_N(1, CensusMode::generators, 4) == 4);
    CHECK(census_N(2, CensusMode::generators, 3) == 9);
    // left-normed: k * multiset(k, n-1); right-normed: C(k+1,2) * multiset(k, n-2)
    CHECK(census_N(4, CensusMode::generators, 2) == 2 * 4 + 3 * 3);
    CHECK(census_B(4, CensusMode::generators, 2) == 5);  // sorted 4-words over 2 letters
}

TEST_CASE("census equals component dimension (multilinear and multigraded)") {
    const Presentation ns = builtin_presentation("nov_s");
    const Presentation bs = builtin_presentation("bicom_s");
    for (int n = 2; n <= 4; ++n) {
        CHECK(census_N(n, CensusMode::multilinear) == component_dim(ns, n));
        CHECK(census_B(n, CensusMode::multilinear) == component_dim(bs, n));
    }
}

TEST_CASE("low-degree products agree with the oracle") {
    const Presentation ns = builtin_presentation("nov_s");
    const Presentation bs = builtin_presentation("bicom_s");
    // every multilinear product of total degree <= 3
    for (int da = 1; da <= 2; ++da) {
        const int db_max = 3 - da;
        for (int db = 1; db <= db_max; ++db) {
            for (const auto& a : multilinear_basis(kOne, da)) {
                for (const auto& bm : multilinear_basis(kOne, db)) {
                    std::vector<int> shift(db);
                    for (int i = 0; i < db; ++i) shift[i] = da + i + 1;
                    const Monomial b = bm.relabel(shift);
                    if (!is_basis_N(a) || !is_basis_N(b)) continue;
                    const Polynomial prod(Monomial::node(0, a, b));
                    CHECK(mult_N(a, b) == reduce_to_census(prod, ns, true));
                    CHECK(mult_B(a, b) == reduce_to_census(prod, bs, false));
                }
            }
        }
    }
}

TEST_CASE("multiplication agrees with linear algebra on all multilinear products up to degree 5") {
    const Presentation ns = builtin_presentation("nov_s");
    const Presentation bs = builtin_presentation("bicom_s");
    for (int total = 4; total <= 5; ++total) {
        for (int da = 1; da < total; ++da) {
            const int db = total - da;
            for (const auto& a : multilinear_basis(kOne, da)) {
                if (!is_basis_N(a) && !is_basis_B(a)) continue;
                for (const auto& bm : multilinear_basis(kOne, db)) {
                    std::vector<int> shift(db);
                    for (int i = 0; i < db; ++i) shift[i] = da + i + 1;
                    const Monomial b = bm.relabel(shift);
                    const Polynomial prod(Monomial::node(0, a, b));
                    if (is_basis_N(a) && is_basis_N(b)) {
                        const Polynomial got = mult_N(a, b);
                        const Polynomial want = reduce_to_census(prod, ns, true);
                        CHECK_MESSAGE(got == want, "N: ", to_string(Monomial::node(0, a, b), kOne),
                                      " -> ", to_string(got, kOne), " vs oracle ",
                                      to_string(want, kOne));
                    }
                    if (is_basis_B(a) && is_basis_B(b)) {
                        const Polynomial got = mult_B(a, b);
                        const Polynomial want = reduce_to_census(prod, bs, false);
                        CHECK_MESSAGE(got == want, "B: ", to_string(Monomial::node(0, a, b), kOne),
                                      " -> ", to_string(got, kOne), " vs oracle ",
                                      to_string(want, kOne));
                    }
                }
            }
        }
    }
}

TEST_CASE("normal forms against the linear-algebra reduction, multilinear degree 4..5") {
    const Presentation ns = builtin_presentation("nov_s");
    const Presentation bs = builtin_presentation("bicom_s");
    for (int n = 4; n <= 5; ++n) {
        for (const auto& m : multilinear_basis(kOne, n)) {
            const Polynomial p(m);
            CHECK(nf_nov_s(m) == reduce_to_census(p, ns, true));
            CHECK(nf_bicom_s(m) == reduce_to_census(p, bs, false));
        }
    }
}

TEST_CASE("nf examples") {
    // (a<(b<c))<d = 0 in nov_s
    CHECK(nf_nov_s(mono("(x1*(x2*x3))*x4")).zero());
    CHECK(nf_nov_s(mono("x1*(x2*(x3*x4))")).zero());
    CHECK(nf_nov_s(mono("(x1*x2)*x3")) == Polynomial(mono("(x1*x2)*x3")));
    CHECK(nf_nov_s(Monomial::leaf(1)) == Polynomial(Monomial::leaf(1)));
    // ((a>b)>c)>d = d>(c>(b>a)) in bicom_s
    CHECK(nf_bicom_s(parse_polynomial("((a*b)*c)*d - d*(c*(b*a))", kOne)).zero());
}

TEST_CASE("nf idempotence and relation vanishing on random input") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> deg(1, 6);
    const Presentation ns = builtin_presentation("nov_s");
    const Presentation bs = builtin_presentation("bicom_s");
    for (int t = 0; t < 300; ++t) {
        const Monomial m = random_tree(rng, deg(rng), 5);
        const Polynomial pn = nf_nov_s(m);
        CHECK(nf_nov_s(pn) == pn);
        const Polynomial pb = nf_bicom_s(m);
        CHECK(nf_bicom_s(pb) == pb);
    }
    // relation instances with repeated generators vanish
    std::uniform_int_distribution<int> gdeg(1, 2);
    for (int t = 0; t < 100; ++t) {
        for (const auto& rel : ns.relations) {
            std::vector<Monomial> assign;
            for (int v = 0; v < rel.degree(); ++v) assign.push_back(random_tree(rng, gdeg(rng), 4));
            CHECK(nf_nov_s(rel.substitute(assign)).zero());
        }
        for (const auto& rel : bs.relations) {
            std::vector<Monomial> assign;
            for (int v = 0; v < rel.degree(); ++v) assign.push_back(random_tree(rng, gdeg(rng), 4));
            CHECK(nf_bicom_s(rel.substitute(assign)).zero());
        }
    }
}

TEST_CASE("splitting examples") {
    const auto [l1, g1] = split_dernov_dual(parse_polynomial("x1<(x2>x3)", kTwo));
    CHECK(l1.zero());
    CHECK(g1.zero());

    const auto [l2, g2] = split_dernov_dual(parse_polynomial("(x1<x2)>x3", kTwo));
    CHECK(g2.zero());
    CHECK(l2 == parse_polynomial("-x3*(x1*x2)", kOne));

    const auto [l3, g3] = split_dernov_dual(parse_polynomial("(x1<x2)<x3", kTwo));
    CHECK(l3 == parse_polynomial("(x1*x2)*x3", kOne));
    CHECK(g3.zero());

    const auto [l4, g4] = split_dernov_dual(parse_polynomial("(x1>x2)>x3", kTwo));
    CHECK(l4.zero());
    CHECK(g4 == parse_polynomial("(x1*x2)*x3", kOne));
}

TEST_CASE("splitting lands in the ideal class of the input") {
    const Presentation dd = builtin_presentation("dernov_dual");
    for (int n = 3; n <= 4; ++n) {
        const auto cb = normal_form_basis(dd, n);
        for (const auto& m : multilinear_basis(kTwo, n)) {
            const auto [pl, pg] = split_dernov_dual(Polynomial(m));
            const Polynomial back = Polynomial(m) - to_two_op(pl, 0) - to_two_op(pg, 1);
            CHECK(cb->reduce(back).zero());
        }
    }
}

TEST_CASE("splitting additivity of dimensions") {
    const Presentation dd = builtin_presentation("dernov_dual");
    for (int n = 3; n <= 4; ++n)
        CHECK(component_dim(dd, n) ==
              census_N(n, CensusMode::multilinear) + census_B(n, CensusMode::multilinear));
}
