/**
 * Commutative cubes, their signed total complexes, and cohomology.
 *
 * A cube over a k-element set stores a space Z(J) for each subset J
 * (a bitmask over 0..k-1) and maps psi_{J,p} : Z(J) -> Z(J + p) for
 * p not in J.
 */
#ifndef WREATH_CUBE_HPP
#define WREATH_CUBE_HPP

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wreath/reflect.hpp"

namespace wreath {

struct CubeError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Cube
{
    int size = 0;                                      // |Delta|
    std::vector<int> labels;                           // optional names of the elements of Delta
    std::vector<int> dims;                             // indexed by subset mask
    std::map<std::pair<PosSet, int>, Mat> maps;        // (J, p) -> psi_{J,p}

    explicit Cube(int k = 0);
    Mat psi(PosSet j, int p) const;
    /** Checks shapes and psi_{J+p,q} psi_{J,p} = psi_{J+q,p} psi_{J,q}. */
    void check() const;
};

struct Complex
{
    std::vector<int> term_dims;                        // C^0, ..., C^k
    std::vector<std::vector<PosSet>> blocks;           // subsets J of each degree, lexicographic
    std::vector<Mat> d;                                // d_r : C^r -> C^{r+1}, r = 0..k-1
};

/** Subsets of {0..k-1} of size r, lexicographic as ascending sequences. */
std::vector<PosSet> subsets_of_size(int k, int r);

/** Sign of psi_{J,p} into the ascending basis of J + p: (-1)^{#{q in J : q > p}}. */
int insertion_sign(PosSet j, int p);

Complex complex_from_cube(const Cube& c);

struct Cohomology
{
    std::vector<int> dims;   // dim H^r
    Mat h0_basis;            // basis of H^0 = ker d_0 inside C^0
};

Cohomology cohomology(const Complex& x);

struct TupleCube
{
    Tuple j;
    Cube cube;
};

/** One cube per tuple with a nonzero term: Z_j(J) = V(j, Delta(j) \ J), psi_{J,p} = pi_{j,p}. */
std::vector<TupleCube> module_cube(const WreathModule& v, int i);

struct EulerData
{
    std::map<Tuple, long> per_tuple;
    std::vector<std::pair<Partition, Scalar>> character;   // class (as partition) -> value
    long total = 0;
};

EulerData euler_characteristic(const WreathModule& v, int i);

/** Values of the character of a module on the class representatives of each partition of n. */
std::vector<std::pair<Partition, Scalar>> module_character(const WreathModule& v);

}   // namespace wreath

#endif
