#ifndef GSTAR_INVARIANTS_HPP
#define GSTAR_INVARIANTS_HPP

#include "gstar/algebra.hpp"
#include "gstar/freepoly.hpp"
#include "gstar/symrep.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gstar {

struct CapPolicy {
    int degree_cap = 6;
    long long cell_budget = 200'000'000; // n! * tuples * dim guard
    int jobs = 1;
};

// The multilinear space P_<n> modulo the identities of A, materialized as
// the evaluation of all n! monomials over all component-basis assignment
// tuples, compressed onto a maximal independent column set. Row relations
// are preserved exactly, so membership, traces and solves stay valid.
class QuotientModel {
public:
    static QuotientModel build(const GStarAlgebra& a, const MultiDegree& md,
                               const CapPolicy& policy);

    const VariableFrame& frame() const { return frame_; }
    int n() const { return frame_.size(); }
    int monomial_count() const { return nfact_; }
    int codim() const { return codim_; }

    // Monomials (as permutation indices, lex order) whose evaluation rows
    // form the pivot basis of P_<n>(A). First-come, hence reproducible.
    const std::vector<int>& pivot_monomials() const { return pivot_monomials_; }

    // Compressed evaluation row of one monomial; width = codim().
    RationalVector row(int perm_index) const;
    // Compressed image of a linear combination of monomials.
    RationalVector compress(const std::map<int, Rational>& coeffs) const;
    // Coefficients of a monomial in the pivot basis.
    RationalVector express_in_pivots(int perm_index) const;

    // Trace of a blockwise variable permutation acting on P_<n>(A).
    Rational action_trace(const std::vector<int>& variable_perm) const;

    const std::vector<int>& permutation(int index) const { return perms_[index]; }
    int permutation_index(const std::vector<int>& perm) const;

private:
    QuotientModel() = default;
    VariableFrame frame_;
    int nfact_ = 0;
    int codim_ = 0;
    std::vector<std::vector<int>> perms_;
    std::vector<RationalVector> pivot_cols_; // codim columns of length n!
    std::vector<int> pivot_monomials_;
    std::optional<SpanSolver> pivot_solver_;
};

// c_<n>(A): dimension of P_<n>(A).
int multidegree_codim(const GStarAlgebra& a, const MultiDegree& md, const CapPolicy& policy);

// c_n^#(A) = sum over multidegrees of multinomial * c_<n>.
BigInt codim_total(const GStarAlgebra& a, int n, const CapPolicy& policy = {});

// Multiplicities m_<la> of the <n>-cocharacter, via class traces on the
// quotient. Every multiplicity is verified to be a non-negative integer.
std::map<Multipartition, long long> cocharacter(const GStarAlgebra& a, const MultiDegree& md,
                                                const CapPolicy& policy = {});

// l_n^#(A) = total number of irreducible constituents over all multidegrees.
long long colength(const GStarAlgebra& a, int n, const CapPolicy& policy = {});

// Independent route to m_<la>: rank of the column-antisymmetrized
// highest-weight candidates modulo the identities.
long long hwv_multiplicity(const GStarAlgebra& a, const Multipartition& mla,
                           const CapPolicy& policy = {});

struct CocharacterRow {
    MultiDegree multidegree;
    Multipartition multipartition;
    long long multiplicity;
    long long character_degree;
    int multidegree_codim;
};

struct CocharacterTable {
    int n;
    std::vector<CocharacterRow> rows; // frames in colex order, nonzero entries only
    BigInt c_n_sharp;
    long long l_n_sharp;
};

CocharacterTable cocharacter_table(const GStarAlgebra& a, int n, const CapPolicy& policy = {});

struct FrameVerification {
    MultiDegree multidegree;
    int kernel_dim;
    int consequence_rank;
    bool complete;
};

struct BasisVerification {
    bool generators_ok = true;
    std::string rejected_witness;
    std::vector<FrameVerification> frames; // all n <= n_max, colex within each n
    bool all_complete = true;
};

// Checks that the T-ideal consequences of `generators` span the full
// multilinear identity space of A at every multidegree of total <= n_max.
BasisVerification verify_generating_set(const GStarAlgebra& a,
                                        const std::vector<GStarPolynomial>& generators, int n_max,
                                        const CapPolicy& policy = {});

struct ContainmentReport {
    bool contained = true;
    std::vector<std::pair<int, bool>> per_n;
    std::optional<MultiDegree> witness; // first frame where containment fails
};

// Does Id(A) <= Id(B) hold on all multilinear parts up to n_max?
ContainmentReport variety_contains_upto(const GStarAlgebra& a, const GStarAlgebra& b, int n_max,
                                        const CapPolicy& policy = {});

// Block of (element, sign): 2*element_index + (sign < 0).
int block_index(const FiniteAbelianGroup& group, const GroupElement& g, int sign);

// Multipartition with the given nonzero blocks, empty elsewhere.
Multipartition make_multipartition(
    const FiniteAbelianGroup& group,
    const std::vector<std::tuple<GroupElement, int, Partition>>& blocks);

MultiDegree multidegree_of(const FiniteAbelianGroup& group, const Multipartition& mla);

// Compact rendering, e.g. "(4)_1+|(1)_g-"; empty blocks omitted,
// identity printed as 1, other elements named via `names` when possible.
std::string multipartition_str(const Multipartition& mla, const FiniteAbelianGroup& group,
                               const std::map<std::string, GroupElement>& names = {});

} // namespace gstar

#endif
