#include "opforge/checks.hpp"

#include <map>
#include <sstream>

#include "opforge/diff_embed.hpp"
#include "opforge/normal_forms.hpp"

namespace opforge {

namespace {

std::unordered_map<Monomial, int, MonomialHash> descending_columns(const Signature& sig, int n,
                                                                   std::vector<Monomial>* out) {
    const auto& basis = multilinear_basis(sig, n);
    std::vector<Monomial> cols(basis.rbegin(), basis.rend());
    std::unordered_map<Monomial, int, MonomialHash> col_of;
    for (std::size_t j = 0; j < cols.size(); ++j) col_of.emplace(cols[j], static_cast<int>(j));
    if (out) *out = std::move(cols);
    return col_of;
}

std::vector<std::int64_t> descending_labels(int B) {
    std::vector<std::int64_t> labels(B);
    for (int j = 0; j < B; ++j) labels[j] = B - 1 - j;
    return labels;
}

}  // namespace

SparseMatrix relations_matrix(const Presentation& p, int n) {
    const auto col_of = descending_columns(p.sig, n, nullptr);
    SparseMatrix m(static_cast<int>(col_of.size()), descending_labels(static_cast<int>(col_of.size())));
    for (const auto& rel : p.relations) {
        if (rel.degree() != n) continue;
        SparseVec v;
        for (const auto& [mono, c] : rel.terms()) v.push_back({col_of.at(mono), c});
        std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
        m.add_row(std::move(v));
    }
    return m;
}

SparseMatrix dual_span_via_tau(const Presentation& p) {
    if (!p.quadratic()) throw std::invalid_argument("dual_span_via_tau: not quadratic");
    if (p.sig.size() != 2) throw std::invalid_argument("dual_span_via_tau: two-operation signature expected");
    std::map<DiffMonomial, Polynomial> lefts;
    for (const auto& t : jacobiator(p).terms()) {
        const DiffPolynomial img = tau(t.right);
        for (const auto& [dm, c] : img.terms()) lefts[dm] += Polynomial(t.left, t.coeff * c);
    }
    const auto col_of = descending_columns(p.sig, 3, nullptr);
    const int B = static_cast<int>(col_of.size());
    RrefBuilder builder(B);
    for (const auto& [dm, L] : lefts) {
        SparseVec v;
        for (const auto& [mono, c] : L.terms()) v.push_back({col_of.at(mono), c});
        std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
        builder.add_row(std::move(v));
    }
    return builder.finish(descending_labels(B)).reduced;
}

namespace {

CheckResult make_result(std::string name, bool pass, std::string detail) {
    return {std::move(name), pass, std::move(detail)};
}

CheckResult check_tau_dernov() {
    const Presentation p = builtin_presentation("dernov");
    bool ok = true;
    for (const auto& rel : p.relations) ok = ok && verify_identity_under_tau(rel, TauMap::tau);
    return make_result("tau-dernov", ok, "all 4 defining identities vanish under tau");
}

CheckResult check_tau_nov() {
    const Presentation p = builtin_presentation("novikov");
    bool ok = true;
    for (const auto& rel : p.relations) ok = ok && verify_identity_under_tau(rel, TauMap::tau_nov);
    return make_result("tau-nov", ok, "right-commutativity and left-symmetry vanish under tau_nov");
}

CheckResult check_split(int max_arity) {
    const Presentation dd = builtin_presentation("dernov_dual");
    std::ostringstream detail;
    bool ok = true;
    for (int n = 3; n <= max_arity; ++n) {
        const int dim = component_dim(dd, n);
        const long long cn = census_N(n, CensusMode::multilinear);
        const long long cb = census_B(n, CensusMode::multilinear);
        const bool additivity = dim == cn + cb;
        ok = ok && additivity;
        detail << "n=" << n << ": dim " << dim << " = " << cn << " + " << cb
               << (additivity ? "" : " MISMATCH") << "; ";
        // the split of every monomial stays in its class modulo the ideal
        const auto cbasis = normal_form_basis(dd, n);
        bool residues = true;
        for (const auto& m : multilinear_basis(dd.sig, n)) {
            const auto [pl, pg] = split_dernov_dual(Polynomial(m));
            Polynomial back = Polynomial(m) - to_two_op(pl, 0) - to_two_op(pg, 1);
            if (!cbasis->reduce(back).zero()) {
                residues = false;
                break;
            }
        }
        ok = ok && residues;
        detail << (residues ? "residues vanish" : "NONZERO residue") << "; ";
    }
    return make_result("split", ok, detail.str());
}

CheckResult check_independence_bicom_dual() {
    const Presentation dual = dual_presentation(builtin_presentation("bicommutative"));
    const Signature sig = one_op_signature();
    const std::vector<Monomial> monos = {
        parse_polynomial("(a*b)*c", sig).leading_monomial(),
        parse_polynomial("(b*a)*c", sig).leading_monomial(),
        parse_polynomial("c*(a*b)", sig).leading_monomial(),
        parse_polynomial("c*(b*a)", sig).leading_monomial(),
    };
    const bool ok = check_independence(dual, monos, 3);
    return make_result("independence-bicom-dual", ok,
                       "(ab)c, (ba)c, c(ab), c(ba) independent in dual(bicommutative)");
}

CheckResult check_self_dual(const std::string& which, int max_arity) {
    const Presentation p = builtin_presentation(which);
    const Presentation dual = dual_presentation(p);
    const std::vector<int> id_map{0};
    bool ok = relation_spaces_equivalent(dual, p, id_map, max_arity);
    std::string detail = "dual relation space matches through arity " + std::to_string(max_arity);
    if (which == "bicommutative") {
        const bool contains = subspace_equal(relations_matrix(dual, 3), consequence_space(p, 3));
        ok = ok && contains;
        detail += contains ? "; reduced relations span the degree-3 consequences"
                           : "; consequence span MISMATCH";
    }
    return make_result("self-dual-" + which, ok, detail);
}

CheckResult check_census(const std::string& variety, int max_arity) {
    const Presentation p = builtin_presentation(variety);
    bool ok = true;
    std::ostringstream detail;
    for (int n = 2; n <= max_arity; ++n) {
        const long long c = variety == "nov_s" ? census_N(n, CensusMode::multilinear)
                                               : census_B(n, CensusMode::multilinear);
        const int dim = component_dim(p, n);
        ok = ok && c == dim;
        detail << "n=" << n << ": census " << c << " vs dim " << dim << "; ";
    }
    return make_result("census-" + variety, ok, detail.str());
}

CheckResult check_dual_dernov() {
    const Presentation dernov = builtin_presentation("dernov");
    const Presentation dual = dual_presentation(dernov);
    const SparseMatrix dual_span = relations_matrix(dual, 3);
    const SparseMatrix expected = consequence_space(builtin_presentation("dernov_dual"), 3);
    const int r1 = rref(dual_span).rank;
    const int r2 = rref(consequence_space(dernov, 3)).rank;
    const bool complement = r1 + r2 == 48;
    const bool equal = subspace_equal(dual_span, expected);
    return make_result("dual-dernov", complement && equal,
                       "span rank " + std::to_string(r1) + " + " + std::to_string(r2) + " = 48: " +
                           (complement ? "yes" : "no") + "; span equality: " + (equal ? "yes" : "no"));
}

CheckResult check_cross_oracle_dual() {
    const Presentation dernov = builtin_presentation("dernov");
    const SparseMatrix via_tau = dual_span_via_tau(dernov);
    const SparseMatrix via_nf = relations_matrix(dual_presentation(dernov), 3);
    const bool ok = subspace_equal(via_tau, via_nf);
    return make_result("cross-oracle-dual", ok,
                       "tau-coordinate dual span equals normal-form dual span");
}

CheckResult check_weights(int max_degree) {
    const Signature sig = two_op_signature();
    bool ok = true;
    std::ostringstream detail;
    for (int k = 1; k <= max_degree; ++k) {
        for (const auto& m : multilinear_basis(sig, k)) {
            const WeightProfile w = weight_profile(tau(m));
            const int expect = k - 1;
            if (!w.homogeneous || w.entries.empty() ||
                w.entries.front().total_d != expect || w.entries.front().total_pd != expect) {
                ok = false;
            }
        }
        detail << "k=" << k << ": (" << k - 1 << "," << k - 1 << "); ";
    }
    detail << "paper states k+1; measured k-1 recorded";
    return make_result("weights", ok, detail.str());
}

}  // namespace

const std::vector<std::string>& check_suite_names() {
    static const std::vector<std::string> names = {
        "tau-dernov",   "tau-nov",        "split",
        "independence-bicom-dual",        "self-dual-nov",
        "self-dual-bicom",                "census-nov",
        "census-bicom", "dual-dernov",    "cross-oracle-dual",
        "weights"};
    return names;
}

std::vector<CheckResult> run_check_suite(const std::string& suite, const CheckOptions& opts) {
    std::vector<CheckResult> out;
    auto want = [&](const std::string& name) { return suite == "all" || suite == name; };
    if (want("tau-dernov")) out.push_back(check_tau_dernov());
    if (want("tau-nov")) out.push_back(check_tau_nov());
    if (want("split")) out.push_back(check_split(std::min(opts.arity, 5)));
    if (want("independence-bicom-dual")) out.push_back(check_independence_bicom_dual());
    if (want("self-dual-nov")) out.push_back(check_self_dual("novikov", std::min(opts.arity, 4)));
    if (want("self-dual-bicom"))
        out.push_back(check_self_dual("bicommutative", std::min(opts.arity, 4)));
    if (want("census-nov")) out.push_back(check_census("nov_s", std::min(opts.arity, 5)));
    if (want("census-bicom")) out.push_back(check_census("bicom_s", std::min(opts.arity, 5)));
    if (want("dual-dernov")) out.push_back(check_dual_dernov());
    if (want("cross-oracle-dual")) out.push_back(check_cross_oracle_dual());
    if (want("weights")) out.push_back(check_weights(std::min(opts.arity, 5)));
    if (out.empty()) throw std::invalid_argument("unknown check suite: " + suite);
    return out;
}

}  // namespace opforge
