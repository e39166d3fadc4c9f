#pragma once

#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

#include "opforge/presentation.hpp"
#include "opforge/sparse.hpp"

namespace opforge {

// Default hard caps on the computed arity (column counts grow like
// Catalan(n-1) * n! * k^(n-1)). OPERAD_FORGE_MAX_ARITY raises them.
int default_arity_cap(const Signature& sig);

struct ArityCapExceeded : std::runtime_error {
    ArityCapExceeded(int requested, int cap)
        : std::runtime_error("arity " + std::to_string(requested) + " exceeds cap " +
                             std::to_string(cap) + " (use --force or OPERAD_FORGE_MAX_ARITY)"),
          requested(requested),
          cap(cap) {}
    int requested;
    int cap;
};

// Multilinear degree-n component of the T-ideal generated by the relations,
// streamed one instance at a time. Instances are built by growing each
// relation degree by degree (outer products with a fresh variable and leaf
// substitutions x_i -> (x_i op fresh), (fresh op x_i)) and then relabelling
// over all variable placements at the final degree. Duplicates are dropped.
void for_each_consequence_row(const Presentation& p, int n,
                              const std::function<void(const Polynomial&)>& sink);

// RREF of the consequence rows over the multilinear basis columns in
// descending term order (column 0 is the greatest monomial).
SparseMatrix consequence_space(const Presentation& p, int n);

int component_dim(const Presentation& p, int n);

// Column context plus the reduced consequence space at one arity: the chosen
// normal-form monomials (non-pivot columns) and the induced reduction map.
class ComponentBasis {
public:
    ComponentBasis(Presentation pres, int arity);

    const Presentation& presentation() const { return pres_; }
    int arity() const { return arity_; }
    const std::vector<Monomial>& columns() const { return columns_; }  // descending
    const SparseMatrix& reduced() const { return rref_.reduced; }
    const std::vector<int>& pivots() const { return rref_.pivots; }
    int rank() const { return rref_.rank; }
    const std::vector<Monomial>& normal_forms() const { return normal_forms_; }
    int dim() const { return static_cast<int>(normal_forms_.size()); }

    int column_of(const Monomial& m) const;  // throws on arity mismatch

    SparseVec to_vec(const Polynomial& q) const;
    Polynomial from_vec(const SparseVec& v) const;

    // Canonical representative supported on the normal forms. Linear,
    // idempotent, kills every relation instance.
    Polynomial reduce(const Polynomial& q) const;
    SparseVec reduce_vec(SparseVec v) const;

    // Coordinates of reduce(q) in normal_forms() order.
    std::vector<Rational> nf_coords(const Polynomial& q) const;

private:
    Presentation pres_;
    int arity_;
    std::vector<Monomial> columns_;
    std::unordered_map<Monomial, int, MonomialHash> col_of_;
    RrefResult rref_;
    std::vector<int> row_of_lead_;
    std::vector<Monomial> normal_forms_;
};

// Shared, cached construction (pure function of presentation and arity).
std::shared_ptr<const ComponentBasis> normal_form_basis(const Presentation& p, int n);

// True iff the consequence spaces of p1 (with operations relabelled through
// op_map, a bijection p1-op-index -> p2-op-index) and p2 agree at every arity
// up to max_arity.
bool relation_spaces_equivalent(const Presentation& p1, const Presentation& p2,
                                const std::vector<int>& op_map, int max_arity);

}  // namespace opforge
