/**
 * Modules over the deformed wreath-product algebra A_{n,lambda,nu}.
 *
 * A module is a finitely supported I^n-graded family of spaces V_j with
 * matrices for every arrow of the double quiver acting in one position
 * and for every adjacent transposition. Tuples hold vertex indices;
 * positions and adjacent generators are 0-based in memory (the JSON
 * format is 1-based).
 */
#ifndef WREATH_MODULE_HPP
#define WREATH_MODULE_HPP

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "wreath/quiver.hpp"
#include "wreath/symg.hpp"

namespace wreath {

using Tuple = std::vector<int>;

/** Per-tuple linear maps, e.g. a candidate module homomorphism. */
using TupleMaps = std::map<Tuple, Mat>;

struct ModuleError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

struct Params
{
    Quiver quiver;
    int n = 1;
    Weight lambda;
    Scalar nu = 0;
    int cyclotomic_order = 1;
};

/** sigma(j)_k = j_{sigma^{-1}(k)}. */
Tuple act(const Perm& sigma, const Tuple& j);
Tuple swap_adjacent(const Tuple& j, int m);
Tuple replace(const Tuple& j, int position, int vertex);
std::string tuple_string(const Quiver& q, const Tuple& j);

struct EdgeKey
{
    int arrow;
    int position;
    Tuple source;
    auto operator<=>(const EdgeKey&) const = default;
};

struct SnKey
{
    int adjacent;
    Tuple source;
    auto operator<=>(const SnKey&) const = default;
};

class WreathModule
{
  public:
    WreathModule() = default;
    explicit WreathModule(Params params) : params_(std::move(params)) {}

    const Params& params() const { return params_; }
    Params& params() { return params_; }
    const Quiver& quiver() const { return params_.quiver; }
    int n() const { return params_.n; }

    const std::map<Tuple, int>& support() const { return support_; }
    const std::map<EdgeKey, Mat>& edge_actions() const { return edges_; }
    const std::map<SnKey, Mat>& sn_actions() const { return sn_; }

    int dim(const Tuple& j) const;
    int total_dim() const;
    void set_dim(const Tuple& j, int d);

    /** Stored only when nonzero. */
    void set_edge(int arrow, int position, const Tuple& source, const Mat& m);
    void set_sn(int adjacent, const Tuple& source, const Mat& m);

    /** Action of the arrow at a position on V_j; zero when absent. */
    Mat edge(int arrow, int position, const Tuple& source) const;
    /** Action of s_m on V_j; zero when absent. */
    Mat sn(int adjacent, const Tuple& source) const;
    /** Action of an arbitrary permutation V_j -> V_{sigma j}, via its adjacent word. */
    Mat perm(const Perm& sigma, const Tuple& source) const;

    /** Target tuple of an arrow at a position. */
    Tuple arrow_target(int arrow, int position, const Tuple& source) const;

    friend bool operator==(const WreathModule& a, const WreathModule& b);

  private:
    Params params_;
    std::map<Tuple, int> support_;
    std::map<EdgeKey, Mat> edges_;
    std::map<SnKey, Mat> sn_;
};

struct RelationFailure
{
    int relation;   // 1 or 2
    Tuple tuple;
    int position;
    int position2 = -1;
    int arrow = -1;
    int arrow2 = -1;
    Mat residual;
};

struct VerifyReport
{
    std::vector<std::string> structural;
    std::vector<RelationFailure> failures;
    bool ok() const { return structural.empty() && failures.empty(); }
};

/** Shapes, S_n relations and equivariance. */
std::vector<std::string> check_structure(const WreathModule& m);

/** Structural checks, then relations (i) and (ii) on every tuple of the support. */
VerifyReport verify_relations(const WreathModule& m);

std::string describe(const Quiver& q, const RelationFailure& f);

/** A module over the algebra of the quiver with `flips` reversed: a acts by old a*, a* by minus old a. */
WreathModule reorient_module(const WreathModule& m, const std::set<int>& flips);
/** Inverse of reorient_module for the same flip set. */
WreathModule unreorient_module(const WreathModule& m, const std::set<int>& flips);

/** g maps vertex v to g[v] and must carry edges to edges. */
WreathModule graph_automorphism_transport(const WreathModule& m, const std::vector<int>& g);

struct IntertwinerError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

/**
 * True iff the maps commute with every edge and S_n generator (and, when
 * requested, are invertible). Absent maps are zero. Throws on shape mismatch.
 */
bool check_intertwiner(const WreathModule& m1, const WreathModule& m2, const TupleMaps& maps,
                       bool require_bijective = true);

TupleMaps identity_maps(const WreathModule& m);

WreathModule direct_sum(const WreathModule& a, const WreathModule& b);

/** The n = 1 simple module at a vertex. */
WreathModule simple_module(const Params& params, int vertex);

struct Subquotient
{
    WreathModule sub;
    TupleMaps inclusion;    // sub_j -> V_j
    WreathModule quotient;
    TupleMaps projection;   // V_j -> quotient_j
};

/** The submodule generated by the given vectors and its quotient. */
Subquotient generated_submodule(const WreathModule& m, const TupleMaps& generators);

struct OuterBlock
{
    WreathModule y;       // an n = 1 module
    int size;             // multiplicity n_l
    RepMatrices x;        // representation of S_{n_l}
};

/** X (x) Y induced, nu must be zero; Y's must be pairwise distinct. */
WreathModule build_outer_tensor(const Params& params, const std::vector<OuterBlock>& blocks);

struct ZeroBlock
{
    int vertex;
    RepMatrices x;
};

/** X (x) N induced with all edge actions zero; vertices pairwise distinct. */
WreathModule build_induced_zero_e(const Params& params, const std::vector<ZeroBlock>& blocks);

/** Graded induction shared by the two constructors above; no parameter checks. */
WreathModule graded_induction(const Params& params, const std::vector<OuterBlock>& blocks);

}   // namespace wreath

#endif
