/**
 * Parameters of symplectic reflection algebras for wreath products and
 * the conditions under which induced modules deform.
 */
#ifndef WREATH_SRA_HPP
#define WREATH_SRA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wreath/quiver.hpp"
#include "wreath/symg.hpp"

namespace wreath {

struct SraError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

/** Character table of a finite group: rows follow the quiver vertices, columns the group elements. */
struct GammaData
{
    long order = 0;
    std::vector<std::string> elements;          // elements[0] is the identity
    std::vector<std::vector<Scalar>> table;     // table[i][g] = chi_i(elements[g])
    int cyclotomic_order = 1;

    std::vector<Scalar> dims() const;
    int element_index(const std::string& id) const;
    /** Throws SraError unless the identity column holds positive integers summing in squares to the order. */
    void check() const;
};

/** Z/m with elements "g0", ..., "g{m-1}" and chi_j(g_s) = zeta^{js}. */
GammaData cyclic_gamma(int m);

/** The cycle with vertices "0", ..., "m-1" and edges a{i} : i -> i+1 mod m. */
Quiver mckay_quiver_cyclic(int m);

struct SraParams
{
    Scalar t;
    Scalar k;
    std::map<std::string, Scalar> c;   // nonidentity element id -> coefficient
};

struct QuiverParams
{
    Weight lambda;
    Scalar nu;
};

/** Throws SraError if c is not constant on columns with equal characters (i.e. on conjugacy classes). */
void check_class_function(const GammaData& g, const SraParams& p);

/** lambda_i = t dim N_i + sum_g c_g chi_i(g), nu = k |Gamma| / 2. */
QuiverParams translate_params(const GammaData& g, const SraParams& p);

/** Recovers c_s (s = 1..m-1) from lambda_i - t for Z/m. */
std::vector<Scalar> fourier_inverse_cyclic(int m, const Scalar& t, const Weight& lambda);

struct DeformBlock
{
    Partition diagram;   // X_l
    DimVector alpha;     // dimension vector of Y_l
};

struct DeformRequest
{
    Weight lambda0;
    Weight lambda;        // deformation direction; the full weight is lambda0 + lambda
    Scalar nu;
    std::vector<int> word;
    std::vector<DeformBlock> blocks;
};

struct DeformBlockReport
{
    bool rectangle = false;
    int a = 0;                  // height
    int b = 0;                  // width
    std::optional<int> vertex;  // i_l with w(alpha_l) = e_{i_l}
    bool base_vanishes = false; // lambda0 . alpha_l = 0
    Scalar pairing;             // lambda . alpha_l
    bool weight_ok = false;     // lambda . alpha_l = (a - b) nu
};

struct DeformReport
{
    WordReport word;
    std::vector<DeformBlockReport> blocks;
    bool condition_i = true;
    bool condition_ii = true;
    bool condition_iii = true;
    bool prefixes_generic = true;
    int generic_failure_step = -1;   // 1-based
    int generic_failure_p = -1;
    std::vector<std::string> notes;
    Weight transported;              // r_{j_h} ... r_{j_1} (lambda0 + lambda)

    bool pass() const { return word.pass && condition_i && condition_ii && condition_iii; }
};

DeformReport deformability_report(const Quiver& q, const DeformRequest& request);

}   // namespace wreath

#endif
