/**
 * Symmetric groups: permutations, Young diagrams, seminormal
 * representations, induction from Young subgroups, and the invertibility
 * test for x +- nu (s_12 + ... + s_1r) in the group algebra.
 *
 * Permutations act on {0, ..., n-1}; the adjacent generator `m` swaps
 * m and m+1.
 */
#ifndef WREATH_SYMG_HPP
#define WREATH_SYMG_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "wreath/ratmat.hpp"

namespace wreath {

struct ResourceLimit : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

class Perm
{
  public:
    Perm() = default;
    explicit Perm(int n);
    explicit Perm(std::vector<int> images);

    static Perm transposition(int n, int a, int b);
    static Perm adjacent(int n, int m);
    /** The cycle k -> k+1 -> ... -> k+len-1 -> k. */
    static Perm cycle(int n, int start, int len);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int k) const { return img_.at(k); }
    const std::vector<int>& images() const { return img_; }

    /** (a * b)(k) = a(b(k)). */
    friend Perm operator*(const Perm& a, const Perm& b);
    Perm inverse() const;
    int sign() const;
    bool is_identity() const;

    /**
     * Adjacent generators m_1, ..., m_k with this = s_{m_1} s_{m_2} ... s_{m_k};
     * of minimal length.
     */
    std::vector<int> adjacent_word() const;

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  private:
    std::vector<int> img_;
};

/** All permutations of {0..n-1} in lexicographic order of one-line notation. */
std::vector<Perm> all_perms(int n);

using Partition = std::vector<int>;

/** Throws unless weakly decreasing and positive. */
void check_partition(const Partition& mu);
int partition_size(const Partition& mu);

/** Partitions of n, from (n) down to (1,...,1) in reverse lexicographic order. */
std::vector<Partition> partitions_of(int n);

/** Representative of the conjugacy class: consecutive cycles of lengths mu_1, mu_2, .... */
Perm class_representative(const Partition& mu);

struct Cell
{
    int row;   // 1-based
    int col;   // 1-based
    int content;
};

struct ContentData
{
    std::vector<Cell> cells;     // row by row
    std::vector<Cell> corners;   // removable cells, top to bottom
    int total = 0;
    bool rectangle = false;
    int height = 0;   // a
    int width = 0;    // b
};

ContentData contents(const Partition& mu);

/** Matrices of the adjacent generators in a representation of S_n. */
struct RepMatrices
{
    int degree = 0;
    int dim = 0;
    std::vector<Mat> generators;   // index m acts as s_m = (m, m+1)
};

RepMatrices trivial_rep(int n);
RepMatrices sign_rep(int n);

/** Standard tableaux of shape mu; tableau[r][c] holds an entry in 1..n. */
std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& mu);

/** Young's seminormal form on standard tableaux in lexicographic row-reading order. */
RepMatrices seminormal_rep(const Partition& mu);

/** The matrix of an arbitrary permutation in the representation. */
Mat rep_matrix(const RepMatrices& rep, const Perm& sigma);

/** Failed relations among the generator matrices (empty if it is a representation). */
std::vector<std::string> check_rep(const RepMatrices& rep);

/** sum_{m=2}^r s_{1m} evaluated in the representation (r = degree). */
Mat corner_sum(const RepMatrices& rep);

/** Decides invertibility of x + nu C and x - nu C, C = s_12 + ... + s_1r, via the regular representation. */
bool central_sum_invertible(const Scalar& x, const Scalar& nu, int r);

/** Minimal-length representatives of S_n / (S_{n_1} x ... x S_{n_r}), lexicographic. */
std::vector<Perm> young_cosets(const std::vector<int>& sizes);

struct InducedRep
{
    RepMatrices rep;
    std::vector<Perm> cosets;
    int inner_dim = 0;   // dim of the outer tensor product of the blocks
};

struct RepBlock
{
    int size;
    RepMatrices rep;
};

/** sigma sorted increasingly inside every block: the minimal representative of sigma S_nbar. */
Perm minimal_coset_representative(const Perm& sigma, const std::vector<int>& sizes);

/** Product of the block representations evaluated at h, which must preserve every block. */
Mat young_subgroup_matrix(const std::vector<RepBlock>& blocks, const Perm& h);

/** Induction to S_n of the outer tensor product; basis ordered (coset, inner basis). */
InducedRep induce_rep(int n, const std::vector<RepBlock>& blocks);

}   // namespace wreath

#endif
