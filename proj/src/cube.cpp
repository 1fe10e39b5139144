#include "wreath/cube.hpp"

#include <algorithm>
#include <bit>

namespace wreath {

Cube::Cube(int k) : size(k), dims(std::size_t(1) << k, 0)
{
    for (int p = 0; p < k; ++p)
        labels.push_back(p);
}

Mat Cube::psi(PosSet j, int p) const
{
    auto it = maps.find({j, p});
    if (it != maps.end())
        return it->second;
    return Mat::Zero(dims.at(with(j, p)), dims.at(j));
}

void Cube::check() const
{
    const PosSet full = (PosSet(1) << size) - 1;
    for (const auto& [key, m] : maps)
    {
        const auto& [j, p] = key;
        if (j > full || p < 0 || p >= size || contains(j, p))
            throw CubeError("cube map indexed outside the cube");
        if (m.rows() != dims[with(j, p)] || m.cols() != dims[j])
            throw CubeError("cube map has the wrong shape");
    }
    for (PosSet j = 0; j <= full; ++j)
        for (int p = 0; p < size; ++p)
            for (int q = p + 1; q < size; ++q)
            {
                if (contains(j, p) || contains(j, q))
                    continue;
                if (mul<Scalar>(psi(with(j, p), q), psi(j, p)) != mul<Scalar>(psi(with(j, q), p), psi(j, q)))
                    throw CubeError("cube is not commutative");
            }
}

std::vector<PosSet> subsets_of_size(int k, int r)
{
    std::vector<std::vector<int>> seqs;
    for (PosSet j = 0; j < (PosSet(1) << k); ++j)
    {
        if (std::popcount(j) == r)
            seqs.push_back(positions(j));
    }
    std::sort(seqs.begin(), seqs.end());
    std::vector<PosSet> out;
    for (const auto& s : seqs)
    {
        PosSet j = 0;
        for (int p : s)
            j = with(j, p);
        out.push_back(j);
    }
    return out;
}

int insertion_sign(PosSet j, int p)
{
    return std::popcount(j >> (p + 1)) % 2 == 0 ? 1 : -1;
}

Complex complex_from_cube(const Cube& c)
{
    c.check();
    const int k = c.size;
    Complex out;
    std::vector<std::map<PosSet, int>> offsets(k + 1);
    for (int r = 0; r <= k; ++r)
    {
        out.blocks.push_back(subsets_of_size(k, r));
        int total = 0;
        for (PosSet j : out.blocks[r])
        {
            offsets[r][j] = total;
            total += c.dims[j];
        }
        out.term_dims.push_back(total);
    }
    for (int r = 0; r < k; ++r)
    {
        Mat d = Mat::Zero(out.term_dims[r + 1], out.term_dims[r]);
        for (PosSet j : out.blocks[r])
            for (int p = 0; p < k; ++p)
            {
                if (contains(j, p))
                    continue;
                const PosSet jp = with(j, p);
                const Mat m = c.psi(j, p);
                if (m.size() == 0)
                    continue;
                d.block(offsets[r + 1][jp], offsets[r][j], m.rows(), m.cols()) = m * Scalar(insertion_sign(j, p));
            }
        out.d.push_back(std::move(d));
    }
    for (int r = 0; r + 1 < k; ++r)
    {
        if (!is_zero<Scalar>(mul<Scalar>(out.d[r + 1], out.d[r])))
            throw CubeError("d^2 != 0");
    }
    return out;
}

Cohomology cohomology(const Complex& x)
{
    Cohomology out;
    const int k = static_cast<int>(x.term_dims.size()) - 1;
    std::vector<int> ranks;
    for (const auto& d : x.d)
        ranks.push_back(static_cast<int>(rank<Scalar>(d)));
    for (int r = 0; r <= k; ++r)
    {
        const int kernel = x.term_dims[r] - (r < k ? ranks[r] : 0);
        const int image = r > 0 ? ranks[r - 1] : 0;
        out.dims.push_back(kernel - image);
    }
    if (k > 0)
        out.h0_basis = kernel_basis<Scalar>(x.d[0]);
    else if (k == 0)
        out.h0_basis = Mat::Identity(x.term_dims[0], x.term_dims[0]);
    return out;
}

std::vector<TupleCube> module_cube(const WreathModule& v, int i)
{
    const WreathModule sink = reorient_module(v, sink_flips(v.quiver(), i));
    const SinkEngine engine(sink, i);
    std::vector<TupleCube> out;
    for (const Tuple& j : engine.cube_tuples())
    {
        const PosSet delta = engine.delta(j);
        const std::vector<int> pos = positions(delta);
        const int k = static_cast<int>(pos.size());
        Cube cube(k);
        cube.labels = pos;
        auto complement = [&](PosSet jmask) {
            PosSet d = delta;
            for (int t = 0; t < k; ++t)
            {
                if (contains(jmask, t))
                    d = without(d, pos[t]);
            }
            return d;
        };
        for (PosSet jmask = 0; jmask < (PosSet(1) << k); ++jmask)
            cube.dims[jmask] = engine.space(j, complement(jmask)).dim;
        for (PosSet jmask = 0; jmask < (PosSet(1) << k); ++jmask)
            for (int t = 0; t < k; ++t)
            {
                if (contains(jmask, t))
                    continue;
                Mat m = engine.pi(j, complement(jmask), pos[t]);
                if (!is_zero<Scalar>(m))
                    cube.maps[{jmask, t}] = std::move(m);
            }
        out.push_back({j, std::move(cube)});
    }
    return out;
}

namespace {

/** Sign of sigma restricted to a set it preserves. */
int restricted_sign(const Perm& sigma, const std::vector<int>& set)
{
    int inversions = 0;
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b)
            if (sigma(set[a]) > sigma(set[b]))
                ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}   // namespace

EulerData euler_characteristic(const WreathModule& v, int i)
{
    const WreathModule sink = reorient_module(v, sink_flips(v.quiver(), i));
    const SinkEngine engine(sink, i);
    const int n = v.n();
    EulerData out;
    const auto candidates = engine.cube_tuples();
    for (const Tuple& j : candidates)
    {
        const PosSet delta = engine.delta(j);
        long chi = 0;
        for (PosSet d = delta;; d = (d - 1) & delta)
        {
            const int r = std::popcount(delta & ~d);
            chi += (r % 2 == 0 ? 1 : -1) * engine.space(j, d).dim;
            if (d == 0)
                break;
        }
        if (chi != 0)
            out.per_tuple[j] = chi;
        out.total += chi;
    }
    for (const Partition& mu : partitions_of(n))
    {
        const Perm sigma = class_representative(mu);
        Scalar value = 0;
        for (const Tuple& j : candidates)
        {
            if (act(sigma, j) != j)
                continue;
            const PosSet delta = engine.delta(j);
            for (PosSet d = delta;; d = (d - 1) & delta)
            {
                const PosSet jset = delta & ~d;
                const std::vector<int> jpos = positions(jset);
                bool stable = true;
                for (int p : jpos)
                    stable &= contains(jset, sigma(p));
                if (stable)
                {
                    const int sign = (jpos.size() % 2 == 0 ? 1 : -1) * restricted_sign(sigma, jpos);
                    value += trace<Scalar>(engine.sigma(sigma, j, d)) * Scalar(sign);
                }
                if (d == 0)
                    break;
            }
        }
        out.character.emplace_back(mu, value);
    }
    return out;
}

std::vector<std::pair<Partition, Scalar>> module_character(const WreathModule& v)
{
    std::vector<std::pair<Partition, Scalar>> out;
    for (const Partition& mu : partitions_of(v.n()))
    {
        const Perm sigma = class_representative(mu);
        Scalar value = 0;
        for (const auto& [j, d] : v.support())
        {
            if (act(sigma, j) == j)
                value += trace<Scalar>(v.perm(sigma, j));
        }
        out.emplace_back(mu, value);
    }
    return out;
}

}   // namespace wreath
