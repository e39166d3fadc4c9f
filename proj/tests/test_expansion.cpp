#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "opforge/expansion.hpp"

using namespace opforge;

TEST_CASE("novikov component dimensions are the central binomials") {
    const Presentation p = builtin_presentation("novikov");
    CHECK(component_dim(p, 1) == 1);
    CHECK(component_dim(p, 2) == 2);
    CHECK(component_dim(p, 3) == 6);
    CHECK(component_dim(p, 4) == 20);
}

TEST_CASE("bicommutative component dimensions are 2^n - 2") {
    const Presentation p = builtin_presentation("bicommutative");
    for (int n = 2; n <= 5; ++n) CHECK(component_dim(p, n) == (1 << n) - 2);
}

TEST_CASE("free presentations have rank zero") {
    const Presentation free2 = parse_presentation_text("ops: < >\n", "free2");
    for (int n = 1; n <= 3; ++n) {
        CHECK(rref(consequence_space(free2, n)).rank == 0);
        CHECK(component_dim(free2, n) ==
              static_cast<int>(multilinear_basis(free2.sig, n).size()));
    }
}

TEST_CASE("arity one is relation-free") {
    for (const auto& name : builtin_names()) CHECK(component_dim(builtin_presentation(name), 1) == 1);
}

TEST_CASE("dernov dimensions are squared central binomials") {
    const Presentation p = builtin_presentation("dernov");
    CHECK(component_dim(p, 2) == 4);
    CHECK(consequence_space(p, 3).rows() == 12);
    CHECK(component_dim(p, 3) == 36);
}

TEST_CASE("dernov_dual dimensions") {
    const Presentation p = builtin_presentation("dernov_dual");
    CHECK(component_dim(p, 2) == 4);  // the presentation has no arity-2 relations
    CHECK(component_dim(p, 3) == 12);
    CHECK(component_dim(p, 4) == 11);  // n(n+1)/2 + 1
}

TEST_CASE("nov_s and bicom_s dimensions") {
    CHECK(component_dim(builtin_presentation("nov_s"), 2) == 2);
    CHECK(component_dim(builtin_presentation("nov_s"), 3) == 6);
    CHECK(component_dim(builtin_presentation("nov_s"), 4) == 10);
    CHECK(component_dim(builtin_presentation("bicom_s"), 2) == 2);
    CHECK(component_dim(builtin_presentation("bicom_s"), 3) == 6);
    CHECK(component_dim(builtin_presentation("bicom_s"), 4) == 1);
}

TEST_CASE("dimension is independent of relation order and redundancy") {
    const Presentation nov = builtin_presentation("novikov");
    Presentation shuffled = nov;
    std::swap(shuffled.relations[0], shuffled.relations[1]);
    shuffled.name = "novikov_shuffled";
    for (int n = 2; n <= 4; ++n) CHECK(component_dim(shuffled, n) == component_dim(nov, n));

    // adding the redundant reordering identity (it follows from
    // right-commutativity) changes nothing
    Presentation ns = builtin_presentation("nov_s");
    Presentation without = ns;
    without.name = "nov_s_minus_redundant";
    without.relations.pop_back();
    for (int n = 3; n <= 4; ++n) CHECK(component_dim(without, n) == component_dim(ns, n));
}

TEST_CASE("normal form basis bookkeeping") {
    const Presentation nov = builtin_presentation("novikov");
    const auto cb = normal_form_basis(nov, 3);
    CHECK(cb->arity() == 3);
    CHECK(cb->columns().size() == 12);
    CHECK(cb->rank() == 6);
    CHECK(cb->dim() == 6);
    CHECK(cb->rank() + cb->dim() == 12);
    // pivots are the leading monomials: every normal form is smaller than the
    // pivot of any reduced row that contains it
    for (int i = 0; i < cb->rank(); ++i) {
        const auto& row = cb->reduced().row(i);
        CHECK(row.front().val == 1);
        for (std::size_t k = 1; k < row.size(); ++k)
            CHECK(compare(cb->columns()[row[k].col], cb->columns()[row.front().col]) < 0);
    }

    // no relations act at arity 2
    const auto cb2 = normal_form_basis(nov, 2);
    CHECK(cb2->dim() == 2);
    CHECK(cb2->normal_forms().size() == 2);
}

TEST_CASE("reduce is linear, idempotent, and kills relation instances") {
    const Presentation nov = builtin_presentation("novikov");
    const auto cb = normal_form_basis(nov, 3);

    for (const auto& rel : nov.relations) CHECK(cb->reduce(rel).zero());

    for (const auto& m : cb->normal_forms()) CHECK(cb->reduce(Polynomial(m)) == Polynomial(m));

    // (x1*x3)*x2 reduces to (x1*x2)*x3 by right-commutativity
    const Signature one = one_op_signature();
    const Polynomial lhs = parse_polynomial("(x1*x3)*x2", one);
    const Polynomial rhs = parse_polynomial("(x1*x2)*x3", one);
    CHECK(cb->reduce(lhs) == cb->reduce(rhs));

    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coef(-3, 3);
    const auto& basis = multilinear_basis(one, 3);
    for (int t = 0; t < 50; ++t) {
        std::vector<Polynomial::Term> terms;
        for (const auto& m : basis)
            if (int c = coef(rng); c != 0) terms.push_back({m, Rational(c)});
        const Polynomial q = Polynomial::from_terms(std::move(terms));
        const Polynomial r = cb->reduce(q);
        CHECK(cb->reduce(r) == r);
        CHECK(cb->reduce(q - r).zero());
    }

    CHECK_THROWS_AS((void)cb->reduce(parse_polynomial("(x1*x2)*x4", one)), std::invalid_argument);
}

TEST_CASE("random relation instances reduce to zero") {
    const Presentation nov = builtin_presentation("nov_s");
    const auto cb4 = normal_form_basis(nov, 4);
    std::mt19937 rng(7);
    const Signature one = one_op_signature();
    // substitute leaves for variables, re-mapping onto arity 4
    const auto& basis3 = multilinear_basis(one, 3);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int t = 0; t < 200; ++t) {
        for (const auto& rel : nov.relations) {
            if (rel.degree() != 4) continue;
            std::vector<int> perm{1, 2, 3, 4};
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(cb4->reduce(rel.relabel(perm)).zero());
        }
    }
    (void)basis3;
    (void)pick;
}

TEST_CASE("relation space equivalence") {
    const Presentation nov = builtin_presentation("novikov");
    CHECK(relation_spaces_equivalent(nov, nov, {0}, 4));
    CHECK_FALSE(relation_spaces_equivalent(nov, builtin_presentation("bicommutative"), {0}, 3));
    CHECK_THROWS_AS(relation_spaces_equivalent(nov, builtin_presentation("dernov"), {0}, 3),
                    std::invalid_argument);

    // swapping the two operations of dernov_dual changes the consequence space
    const Presentation dd = builtin_presentation("dernov_dual");
    CHECK(relation_spaces_equivalent(dd, dd, {0, 1}, 3));
    CHECK_FALSE(relation_spaces_equivalent(dd, dd, {1, 0}, 3));
}

TEST_CASE("arity caps") {
    CHECK(default_arity_cap(one_op_signature()) >= 6);
    CHECK(default_arity_cap(two_op_signature()) >= 5);
}
