#ifndef GSTAR_ALGEBRA_HPP
#define GSTAR_ALGEBRA_HPP

#include "gstar/group.hpp"
#include "gstar/matrix.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gstar {

// Finite-dimensional algebra with a G-grading on a homogeneous basis and a
// graded involution given as a matrix (column j = coordinates of b_j^*).
// Immutable after construction; validate() before trusting one from a file.
class GStarAlgebra {
public:
    GStarAlgebra(std::string name, FiniteAbelianGroup group, int dim);

    const std::string& name() const { return name_; }
    const FiniteAbelianGroup& group() const { return group_; }
    int dim() const { return dim_; }

    const std::vector<std::string>& basis_labels() const { return labels_; }
    const std::vector<GroupElement>& grading() const { return grading_; }
    const RationalMatrix& involution() const { return involution_; }
    const std::optional<RationalVector>& unit() const { return unit_; }

    void set_label(int i, std::string label) { labels_[i] = std::move(label); }
    void set_degree(int i, GroupElement g);
    void set_involution(RationalMatrix m);
    void set_unit(RationalVector u);
    // b_i * b_j += c * b_k
    void add_product_term(int i, int j, int k, const Rational& c);

    const std::vector<std::pair<int, Rational>>& basis_product(int i, int j) const {
        return products_[static_cast<std::size_t>(i) * dim_ + j];
    }

    RationalVector multiply(const RationalVector& u, const RationalVector& v) const;
    RationalVector apply_involution(const RationalVector& v) const;
    RationalVector basis_vector(int i) const;

    std::string describe_vector(const RationalVector& v) const;

private:
    std::string name_;
    FiniteAbelianGroup group_;
    int dim_;
    std::vector<std::string> labels_;
    std::vector<GroupElement> grading_;
    RationalMatrix involution_;
    std::vector<std::vector<std::pair<int, Rational>>> products_; // [i*dim+j]
    std::optional<RationalVector> unit_;
};

struct AxiomViolation {
    std::string axiom;
    std::string witness;
};

struct ValidationReport {
    bool ok = true;
    std::vector<AxiomViolation> violations;
    std::string str() const;
};

// Exhaustive axiom check: associativity on all basis triples, grading
// multiplicativity, involution linearity/order-2/anti-multiplicativity/
// degree preservation, unit axioms when a unit is declared.
ValidationReport validate(const GStarAlgebra& a);

// Basis of A_g^sign (sign = +1 or -1), the (+-1)-eigenspace of the
// involution inside the degree-g coordinate block. Deterministic order.
std::vector<RationalVector> component_basis(const GStarAlgebra& a, const GroupElement& g,
                                            int sign);

// Degrees g with A_g != 0, in all_elements order.
std::vector<GroupElement> support(const GStarAlgebra& a);

// Block-diagonal sum. Summand units are kept as mere idempotents; the sum
// itself carries no unit designation. Throws on group mismatch.
GStarAlgebra direct_sum(const GStarAlgebra& a, const GStarAlgebra& b);

// Jacobson radical as the kernel of the trace form (x,y) -> tr(L_{xy}) of
// the left regular representation; exact over the rationals.
std::vector<RationalVector> radical(const GStarAlgebra& a);

struct PeirceDecomposition {
    std::vector<RationalVector> j00, j10, j01, j11;
};

// Split of the subspace J by the left/right action of the idempotent e.
// J defaults to radical(a). Throws if e is not idempotent or J is not
// stable under multiplication by e.
PeirceDecomposition peirce_decompose(const GStarAlgebra& a, const RationalVector& e,
                                     std::optional<std::vector<RationalVector>> j = std::nullopt);

// True when v lies in A_g^sign.
bool in_component(const GStarAlgebra& a, const RationalVector& v, const GroupElement& g,
                  int sign);

} // namespace gstar

#endif
