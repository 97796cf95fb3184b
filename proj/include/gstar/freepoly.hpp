#ifndef GSTAR_FREEPOLY_HPP
#define GSTAR_FREEPOLY_HPP

#include "gstar/algebra.hpp"
#include "gstar/group.hpp"
#include "gstar/rational.hpp"

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gstar {

// Signed graded variable x_{index,degree}^sign, sign in {+1,-1}.
struct GradedVariable {
    int index; // >= 1
    int sign;
    GroupElement degree;

    auto operator<=>(const GradedVariable&) const = default;
};

using Word = std::vector<GradedVariable>;

// Finite rational combination of words. Canonical: no zero coefficients;
// map order gives a deterministic serialization.
class GStarPolynomial {
public:
    GStarPolynomial() = default;
    static GStarPolynomial monomial(Word w, Rational c = 1);

    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    void add_term(const Word& w, const Rational& c);
    GStarPolynomial& operator+=(const GStarPolynomial& other);
    GStarPolynomial& operator-=(const GStarPolynomial& other);
    GStarPolynomial operator+(const GStarPolynomial& other) const;
    GStarPolynomial operator-(const GStarPolynomial& other) const;
    GStarPolynomial operator*(const GStarPolynomial& other) const; // concatenation
    GStarPolynomial scaled(const Rational& c) const;

    // Reversal with involution signs: (x^eps)* = eps x^eps extended
    // anti-multiplicatively.
    GStarPolynomial star() const;

    // All distinct variables, sorted.
    std::vector<GradedVariable> variables() const;
    // Multiplicity of each variable in every word; nullopt when words
    // disagree (not multihomogeneous).
    std::optional<std::map<GradedVariable, int>> multihomogeneous_multiplicities() const;

    std::string str(const FiniteAbelianGroup& group) const;

    bool operator==(const GStarPolynomial&) const = default;

private:
    std::map<Word, Rational> terms_;
};

// Multidegree <n> = (n_1,...,n_{2t}); block 2i holds symmetric variables of
// degree g_i, block 2i+1 skew ones (0-based), g_i in all_elements order.
struct MultiDegree {
    std::vector<int> counts;

    int total() const;
    bool operator==(const MultiDegree&) const = default;
    auto operator<=>(const MultiDegree&) const = default;

    std::string str() const; // semicolon-joined counts
};

// All multidegrees of total n over 2t blocks, colexicographic.
std::vector<MultiDegree> all_multidegrees(int n, int blocks);

// The concrete ordered variable set of P_<n>: slot i carries a fixed sign
// and degree, laid out block by block.
struct VariableFrame {
    FiniteAbelianGroup group = FiniteAbelianGroup::trivial();
    MultiDegree multidegree;
    struct Slot {
        int block;
        int sign;
        GroupElement degree;
    };
    std::vector<Slot> slots;

    static VariableFrame build(const FiniteAbelianGroup& group, const MultiDegree& md);
    int size() const { return static_cast<int>(slots.size()); }
    // Frame slot i as a polynomial variable (1-based index).
    GradedVariable variable(int i) const;
};

// The n! orderings of the frame variables, lexicographic by permutation.
std::vector<Word> multilinear_monomials(const VariableFrame& frame);

// Exact evaluation. Every assigned vector must lie in the component matching
// its variable; violations throw InvalidArgument.
RationalVector evaluate(const GStarPolynomial& poly, const GStarAlgebra& a,
                        const std::map<GradedVariable, RationalVector>& assignment);

struct IdentityCheck {
    bool holds = true;
    std::string witness; // evaluation showing failure, empty when holds
};

// True iff poly vanishes under all admissible evaluations. Works for any
// polynomial: splits into multihomogeneous components, polarizes, then
// ranges over component-basis tuples (complete by multilinearity).
IdentityCheck check_identity(const GStarPolynomial& poly, const GStarAlgebra& a,
                             int max_degree_check = 6);
bool is_identity(const GStarPolynomial& poly, const GStarAlgebra& a, int max_degree_check = 6);

// Full polarization of a multihomogeneous polynomial: each variable of
// multiplicity m is replaced by m fresh variables (indices assigned in
// sorted-variable order), summed over all substitution patterns.
GStarPolynomial multilinearize(const GStarPolynomial& poly);

// Spanning set of the multilinear component at `frame` of the ideal
// generated by `generators` (closed under grading-preserving,
// involution-compatible substitutions and bordered products).
std::vector<GStarPolynomial> consequences_at(const std::vector<GStarPolynomial>& generators,
                                             const VariableFrame& frame);

// Streaming form: callback returns false to stop early. Consequences are
// deduplicated up to scalar multiples.
void for_each_consequence(const std::vector<GStarPolynomial>& generators,
                          const VariableFrame& frame,
                          const std::function<bool(const GStarPolynomial&)>& callback);

// Polynomial grammar (single entry point):
//   poly   := term (('+'|'-') term)*
//   term   := [rational '*'] factor ('*' factor)*
//   factor := 'x' INT '^' ('+'|'-') '_' gelem
//   gelem  := '(' INT (',' INT)* ')' | name bound in elems ("1" = identity)
// Whitespace insignificant. Throws ParseError.
GStarPolynomial parse_polynomial(const std::string& text, const FiniteAbelianGroup& group,
                                 const std::map<std::string, GroupElement>& elems = {});

// "name=(..)" bindings separated by spaces or top-level commas.
std::map<std::string, GroupElement> parse_element_bindings(const std::string& text,
                                                           const FiniteAbelianGroup& group);

// Generators file: optional "elems name=(..) ..." header line, then one
// polynomial per line; '#' starts a comment.
struct GeneratorFile {
    std::map<std::string, GroupElement> elems;
    std::vector<GStarPolynomial> generators;
};
GeneratorFile parse_generators(const std::string& text, const FiniteAbelianGroup& group);

} // namespace gstar

#endif
