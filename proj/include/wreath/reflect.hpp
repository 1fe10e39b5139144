/**
 * The reflection functor F_i and the block maps it is assembled from.
 *
 * `SinkEngine` works on a module over a quiver in which i is a sink and
 * exposes the spaces V(j, D) and the maps pi, mu, sigma, tau^!, tau_!,
 * theta. Subsets D of positions are bitmasks (bit p = position p).
 * `reflection_functor` reorients, runs the engine, and undoes the
 * reorientation.
 */
#ifndef WREATH_REFLECT_HPP
#define WREATH_REFLECT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "wreath/module.hpp"

namespace wreath {

using PosSet = std::uint32_t;

struct NotGeneric : std::domain_error
{
    using std::domain_error::domain_error;
};

struct ReflectionError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::vector<int> positions(PosSet d);
inline bool contains(PosSet d, int p) { return (d >> p) & 1u; }
inline PosSet with(PosSet d, int p) { return d | (PosSet(1) << p); }
inline PosSet without(PosSet d, int p) { return d & ~(PosSet(1) << p); }

/** The summands of V(j, D): one per map xi : D -> R. */
struct BigSpace
{
    Tuple j;
    PosSet d = 0;
    std::vector<int> pos;                // elements of D ascending
    std::vector<std::vector<int>> xis;   // xi as indices into R, one entry per element of pos
    std::vector<Tuple> summands;         // t(j, xi)
    std::vector<int> offsets;
    int dim = 0;
    int radix = 0;                       // |R|

    /** Index of xi in mixed radix, first position most significant. */
    int index_of(const std::vector<int>& xi) const;
};

class SinkEngine
{
  public:
    /** `v` must be a module over a quiver where `vertex` is a sink without a loop. */
    SinkEngine(const WreathModule& v, int vertex);

    const WreathModule& module() const { return v_; }
    int vertex() const { return i_; }
    /** Edges of Q with head i, in declaration order. */
    const std::vector<int>& incoming() const { return r_; }

    PosSet delta(const Tuple& j) const;
    BigSpace space(const Tuple& j, PosSet d) const;

    Mat pi(const Tuple& j, PosSet d, int p) const;
    Mat mu(const Tuple& j, PosSet d, int p) const;
    /** sigma|_j : V(j, D) -> V(sigma j, sigma D). */
    Mat sigma(const Perm& s, const Tuple& j, PosSet d) const;
    /** Case I map for an arrow with neither end at i. */
    Mat case_one(int arrow, int l, const Tuple& j, PosSet d) const;
    /** tau^!_{r,l,j,D} : V(j, D) -> V(r*_l(j), D \ l); r an index into incoming(). */
    Mat tau_upper(int r, int l, const Tuple& j, PosSet d) const;
    /** tau_{r,l,j,D!} : V(r*_l(j), D \ l) -> V(j, D). */
    Mat tau_lower(int r, int l, const Tuple& j, PosSet d) const;
    /** theta_{a,l,j,D} for a = incoming()[r]. */
    Mat theta(int r, int l, const Tuple& j, PosSet d) const;

    /** Tuples j with some t(j, xi), xi in X(Delta(j)), in the support. */
    std::vector<Tuple> candidates() const;
    /** Tuples j with some V(j, D), D in Delta(j), nonzero. */
    std::vector<Tuple> cube_tuples() const;

    /** Basis of the intersection of the kernels of pi_{j,p}, p in Delta(j), inside V(j, Delta(j)). */
    Mat kernel(const Tuple& j) const;

    /** Index of the edge in incoming(), or -1. */
    int incoming_index(int edge) const;

  private:
    std::vector<Tuple> spread(bool keep_vertex) const;

    WreathModule v_;
    int i_;
    std::vector<int> r_;
};

struct ReflectionOutput
{
    WreathModule module;                   // over (r_i lambda, nu), original orientation
    WreathModule sink_input;               // input reoriented so that i is a sink
    WreathModule sink_output;              // output before undoing the reorientation
    std::set<int> flips;
    int vertex = -1;
    TupleMaps embedding;                   // basis of V'_j inside V(j, Delta(j))
    std::map<Tuple, int> ambient;          // dim V(j, Delta(j)) per candidate tuple
};

struct ReflectOptions
{
    bool verify_input = true;
    bool verify_output = true;
};

/** Edges of Q whose tail is i: reversing them makes i a sink. */
std::set<int> sink_flips(const Quiver& q, int i);

ReflectionOutput reflection_functor(const WreathModule& v, int i, const ReflectOptions& options = {});

/** F_i(f) for a homomorphism f : V -> W, in the embedded bases of the two outputs. */
TupleMaps reflect_morphism(const ReflectionOutput& fv, const ReflectionOutput& fw, const TupleMaps& f);

struct GenericCheck
{
    bool generic = true;
    int p = -1;       // first failing p
    int branch = 0;   // +1 for lambda_i + p nu, -1 for lambda_i - p nu
};

/** lambda_i +- p nu != 0 for p = 0, ..., n-1. */
GenericCheck genericity(const Params& params, int i);
bool is_generic(const Params& params, int i);
/** Invertibility of lambda_i +- nu (s_12 + ... + s_1r) in the group algebra for r <= min(n, 6). */
bool is_generic_oracle(const Params& params, int i);

struct InvolutionWitness
{
    ReflectionOutput once;
    ReflectionOutput twice;
    TupleMaps iso;   // V_j -> F_i F_i(V)_j
    bool verified = false;
};

InvolutionWitness involution_witness(const WreathModule& v, int i);

struct WordResult
{
    WreathModule module;
    std::vector<std::map<Tuple, int>> trace;   // dimensions before the first letter and after each letter
};

/** Applies the letters left to right: the first letter acts first. */
WordResult apply_functor_word(const WreathModule& v, const std::vector<int>& word, bool require_generic = false);

}   // namespace wreath

#endif
