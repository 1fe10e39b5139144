/**
 * Quivers, their doubles, the Ringel form and the reflections s_i, r_i.
 *
 * Vertices are opaque string ids kept in declaration order and addressed
 * internally by index. Arrows of the double quiver are numbered
 * `2*e` (the edge e of Q) and `2*e + 1` (its reverse e*).
 */
#ifndef WREATH_QUIVER_HPP
#define WREATH_QUIVER_HPP

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wreath/ratmat.hpp"

namespace wreath {

struct QuiverError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

struct UnknownVertex : QuiverError
{
    using QuiverError::QuiverError;
};

struct EdgeLoop : std::domain_error
{
    using std::domain_error::domain_error;
};

/** Integer vector indexed by vertex. */
using DimVector = std::vector<long>;

/** Scalar vector indexed by vertex; an element of B. */
using Weight = std::vector<Scalar>;

struct Edge
{
    std::string name;
    int tail;
    int head;
};

struct EdgeSpec
{
    std::string name;
    std::string tail;
    std::string head;
};

class Quiver
{
  public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& vertex_id(int v) const { return vertices_.at(v); }
    int vertex_index(const std::string& id) const;
    const Edge& edge(int e) const { return edges_.at(e); }
    int edge_index(const std::string& name) const;

    // double quiver
    int num_arrows() const { return 2 * num_edges(); }
    static int star(int arrow) { return arrow ^ 1; }
    static bool in_q(int arrow) { return (arrow & 1) == 0; }
    static int edge_of(int arrow) { return arrow >> 1; }
    int arrow_tail(int arrow) const;
    int arrow_head(int arrow) const;
    std::string arrow_name(int arrow) const;
    /** Accepts `a` or `a*`. */
    int arrow_index(const std::string& name) const;

    bool has_loop(int v) const;
    bool adjacent(int u, int v) const;
    bool connected() const;

    /** Same quiver with the listed edges reversed; names are kept. */
    Quiver reoriented(const std::set<int>& flips) const;

    friend bool operator==(const Quiver& a, const Quiver& b);

  private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
};

DimVector coordinate_vector(const Quiver& q, int i);

long ringel_form(const Quiver& q, const DimVector& alpha, const DimVector& beta);
long symmetrized_form(const Quiver& q, const DimVector& alpha, const DimVector& beta);

/** The matrix of the symmetrized form in the vertex basis. */
DenseMatrix<long> cartan_matrix(const Quiver& q);

DimVector simple_reflection(const Quiver& q, int i, const DimVector& alpha);
Weight dual_reflection(const Quiver& q, int i, const Weight& lambda);

/** lambda . alpha = sum_i lambda_i alpha_i. */
Scalar pairing(const Weight& lambda, const DimVector& alpha);

/** Minimal positive generator of the radical when the form is positive semidefinite of corank one. */
std::optional<DimVector> affine_data(const Quiver& q);

struct WordStep
{
    int vertex;
    Scalar pivot;   // coordinate of the running weight at `vertex`, before reflecting
    bool nonzero;
    Weight weight;  // running weight after the reflection
};

struct WordReport
{
    std::vector<WordStep> steps;
    bool pass = true;
    int failed_at = -1;   // 1-based step, -1 if none
    Weight final_weight;
};

/** Walks the word applying r_{j_1} first and checks every pivot is nonzero. */
WordReport validate_word(const Quiver& q, const Weight& lambda, const std::vector<int>& word);

/** s_{j_h} ... s_{j_1} alpha for the word (j_1, ..., j_h). */
DimVector apply_word(const Quiver& q, const std::vector<int>& word, DimVector alpha);

}   // namespace wreath

#endif
