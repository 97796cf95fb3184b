#ifndef GSTAR_CATALOG_HPP
#define GSTAR_CATALOG_HPP

#include "gstar/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gstar::catalog {

enum class GrassmannInvolution { psi, tau, gamma };
enum class ChainVariant { plain, star, graded, graded_star };
enum class GroupAlgebraVariant { fc_p, fc2_star, fc2_sharp };
enum class ReflectionFamily { m, n, u, a };
enum class WInvolution { nu1, nu2, nu3 };

// Subalgebra <1, e_1, ..., e_k> of the Grassmann algebra, dim 2^k, with one
// degree per generator and the involution psi/tau/gamma extended
// anti-multiplicatively.
GStarAlgebra grassmann(const FiniteAbelianGroup& group, int k,
                       const std::vector<GroupElement>& generator_degrees,
                       GrassmannInvolution involution);

// C_k = span{I, E1, ..., E1^{k-1}} in UT_k; optional grading by powers of g
// and optional sign involution E1^i -> (-1)^i E1^i.
GStarAlgebra commutative_chain(const FiniteAbelianGroup& group, int k, ChainVariant variant,
                               const std::optional<GroupElement>& g = std::nullopt);

// FC_p graded by <h> with trivial involution, or FC_2 with the sign
// involution and either trivial grading (star) or grading by <h> (sharp).
GStarAlgebra group_algebra(const FiniteAbelianGroup& group, GroupAlgebraVariant variant,
                           const std::optional<GroupElement>& h = std::nullopt);

// M (4x4), N_k, U_k, A_k inside UT_{2k} with the reflection involution;
// graded versions use the tuple (1, g x(k-1), 1 x(k-1), g).
GStarAlgebra reflection_family(const FiniteAbelianGroup& group, int k, ReflectionFamily family,
                               bool graded, const std::optional<GroupElement>& g = std::nullopt);

// W = span{1, e12+e34, e13+e24, e14} in UT_4 with grading (1, g, h, gh).
GStarAlgebra w_algebra(const FiniteAbelianGroup& group, const GroupElement& g,
                       const GroupElement& h, WInvolution involution);

// One-dimensional unital algebra, trivial grading and involution.
GStarAlgebra trivial_unital(const FiniteAbelianGroup& group);

struct CatalogParams {
    FiniteAbelianGroup group = FiniteAbelianGroup::trivial();
    std::optional<GroupElement> g;
    std::optional<GroupElement> h;
    std::optional<int> k;
    std::vector<GroupElement> degrees; // general Grassmann generator degrees
};

// Uniform dispatcher over catalog names ("G2:tau", "C3_star", "N3g",
// "FC2_sharp", "W:nu2", ...; '+' builds direct sums). Every returned algebra
// passes validate. Throws InvalidArgument naming the violated hypothesis.
GStarAlgebra build(const std::string& spec, const CatalogParams& params);

struct CatalogEntry {
    std::string name;
    std::string parameters;
    std::string constraints;
};
std::vector<CatalogEntry> entries();

} // namespace gstar::catalog

#endif
