#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opforge/checks.hpp"
#include "opforge/koszul.hpp"

using namespace opforge;

TEST_CASE("bracket of two pairs") {
    const Signature one = one_op_signature();
    const TensorElement b = bracket(TensorElement::pair(1), TensorElement::pair(2), one);
    // (x1x2)(x)(x1x2) - (x2x1)(x)(x2x1)
    REQUIRE(b.size() == 2);
    const Monomial m12 = Monomial::node(0, Monomial::leaf(1), Monomial::leaf(2));
    const Monomial m21 = Monomial::node(0, Monomial::leaf(2), Monomial::leaf(1));
    for (const auto& t : b.terms()) {
        CHECK(t.left == t.right);
        if (t.left == m12) CHECK(t.coeff == 1);
        if (t.left == m21) CHECK(t.coeff == -1);
    }

    const Signature two = two_op_signature();
    const TensorElement b2 = bracket(TensorElement::pair(1), TensorElement::pair(2), two);
    CHECK(b2.size() == 4);

    // antisymmetry
    const TensorElement ba = bracket(TensorElement::pair(2), TensorElement::pair(1), two);
    CHECK((b2 + ba).zero());
}

TEST_CASE("jacobiator term counts") {
    CHECK(jacobiator(builtin_presentation("novikov")).size() == 12);
    CHECK(jacobiator(builtin_presentation("dernov")).size() == 48);
}

TEST_CASE("jacobiator is alternating under swapping two inputs") {
    // swapping x1 <-> x2 and y1 <-> y2 maps the jacobiator to itself up to the
    // bracket skew-symmetry; concretely J(1,2,3) = -J(2,1,3) termwise
    const Presentation p = builtin_presentation("dernov");
    const TensorElement j = jacobiator(p);
    std::vector<TensorTerm> swapped;
    const std::vector<int> perm{2, 1, 3};
    for (const auto& t : j.terms())
        swapped.push_back({t.left.relabel(perm), t.right.relabel(perm), -t.coeff});
    TensorElement sum = TensorElement::from_terms(std::move(swapped));
    sum += j;
    CHECK(sum.zero());
}

TEST_CASE("dual of novikov is novikov") {
    const Presentation nov = builtin_presentation("novikov");
    const Presentation dual = dual_presentation(nov);
    CHECK(dual.sig == nov.sig);
    // dimension identity: rank of dual relations = 12 - rank(novikov at 3)
    CHECK(rref(relations_matrix(dual, 3)).rank == 6);
    CHECK(relation_spaces_equivalent(dual, nov, {0}, 4));
}

TEST_CASE("dual of bicommutative is bicommutative") {
    const Presentation bic = builtin_presentation("bicommutative");
    const Presentation dual = dual_presentation(bic);
    CHECK(subspace_equal(relations_matrix(dual, 3), consequence_space(bic, 3)));
    CHECK(relation_spaces_equivalent(dual, bic, {0}, 4));
}

TEST_CASE("dual of dernov spans the dual identities") {
    const Presentation dernov = builtin_presentation("dernov");
    const Presentation dual = dual_presentation(dernov);
    CHECK(rref(relations_matrix(dual, 3)).rank == 36);
    CHECK(subspace_equal(relations_matrix(dual, 3),
                         consequence_space(builtin_presentation("dernov_dual"), 3)));
    CHECK(component_dim(dual, 3) == 12);
    CHECK(component_dim(dual, 4) == 11);
}

TEST_CASE("dimension complementarity for every quadratic builtin") {
    for (const std::string name : {"novikov", "bicommutative", "dernov", "dernov_dual"}) {
        const Presentation p = builtin_presentation(name);
        const Presentation dual = dual_presentation(p);
        const int B = static_cast<int>(multilinear_basis(p.sig, 3).size());
        CHECK(rref(relations_matrix(dual, 3)).rank + rref(consequence_space(p, 3)).rank == B);
    }
}

TEST_CASE("duality is involutive on relation spaces") {
    for (const std::string name : {"novikov", "bicommutative", "dernov"}) {
        const Presentation p = builtin_presentation(name);
        const Presentation ddual = dual_presentation(dual_presentation(p));
        std::vector<int> id_map(p.sig.size());
        for (int i = 0; i < p.sig.size(); ++i) id_map[i] = i;
        CHECK(relation_spaces_equivalent(ddual, p, id_map, 3));
    }
}

TEST_CASE("dual rejects non-quadratic presentations") {
    CHECK_THROWS_AS(dual_presentation(builtin_presentation("nov_s")), std::invalid_argument);
}

TEST_CASE("independence checks") {
    const Presentation dual_bicom = dual_presentation(builtin_presentation("bicommutative"));
    const Signature one = one_op_signature();
    auto mono = [&](const std::string& s) {
        return parse_polynomial(s, one).leading_monomial();
    };
    const std::vector<Monomial> four = {mono("(a*b)*c"), mono("(b*a)*c"), mono("c*(a*b)"),
                                        mono("c*(b*a)")};
    CHECK(check_independence(dual_bicom, four, 3));

    const Presentation bic = builtin_presentation("bicommutative");
    const std::vector<Monomial> dep = {mono("(a*b)*c"), mono("(a*c)*b")};
    CHECK_FALSE(check_independence(bic, dep, 3));

    const std::vector<Monomial> single = {mono("(a*b)*c")};
    CHECK(check_independence(bic, single, 3));

    CHECK_THROWS_AS(check_independence(bic, single, 4), std::invalid_argument);
}
