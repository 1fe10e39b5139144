#include "oracles.hpp"

#include <optional>

#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace wreath::testing {

namespace {

// exact product that skips zero entries
Mat operator%(const Mat& a, const Mat& b)
{
    return mul<Scalar>(a, b);
}

Mat zero(int d)
{
    return Mat::Zero(d, d);
}

void enumerate_tuples(int num_vertices, int n, const std::function<void(const Tuple&)>& f)
{
    Tuple j(n, 0);
    while (true)
    {
        f(j);
        int k = n - 1;
        while (k >= 0 && ++j[k] == num_vertices)
            j[k--] = 0;
        if (k < 0)
            return;
    }
}

}   // namespace

Mat GlobalModule::transposition(int l, int m) const
{
    if (l > m)
        std::swap(l, m);
    Mat out = Mat::Identity(dim, dim);
    // (l m) = s_l s_{l+1} ... s_{m-2} s_{m-1} s_{m-2} ... s_l
    for (int k = l; k < m; ++k)
        out = out % generators[k];
    for (int k = m - 2; k >= l; --k)
        out = out % generators[k];
    return out;
}

GlobalModule globalize(const WreathModule& v)
{
    const Quiver& q = v.quiver();
    const int n = v.n();
    GlobalModule g;
    for (const auto& [j, d] : v.support())
    {
        g.offsets[j] = g.dim;
        g.dim += d;
    }
    g.arrows.assign(q.num_arrows(), std::vector<Mat>(n, zero(g.dim)));
    g.generators.assign(std::max(n - 1, 0), zero(g.dim));
    g.idempotents.assign(q.num_vertices(), std::vector<Mat>(n, zero(g.dim)));
    for (const auto& [j, d] : v.support())
        for (int l = 0; l < n; ++l)
            g.idempotents[j[l]][l].block(g.offsets[j], g.offsets[j], d, d) = Mat::Identity(d, d);
    for (const auto& [key, a] : v.edge_actions())
    {
        Tuple target = key.source;
        target[key.position] = q.arrow_head(key.arrow);
        if (!g.offsets.count(key.source) || !g.offsets.count(target) || key.source[key.position] != q.arrow_tail(key.arrow))
            throw std::invalid_argument("edge action outside the support");
        g.arrows[key.arrow][key.position].block(g.offsets[target], g.offsets[key.source], a.rows(), a.cols()) = a;
    }
    for (const auto& [key, s] : v.sn_actions())
    {
        Tuple target = key.source;
        std::swap(target[key.adjacent], target[key.adjacent + 1]);
        if (!g.offsets.count(key.source) || !g.offsets.count(target))
            throw std::invalid_argument("transposition outside the support");
        g.generators[key.adjacent].block(g.offsets[target], g.offsets[key.source], s.rows(), s.cols()) = s;
    }
    return g;
}

std::vector<std::string> oracle_relation_failures(const WreathModule& v)
{
    const Quiver& q = v.quiver();
    const int n = v.n();
    std::vector<std::string> out;
    GlobalModule g;
    try
    {
        g = globalize(v);
    }
    catch (const std::invalid_argument& e)
    {
        return {e.what()};
    }
    const Mat id = Mat::Identity(g.dim, g.dim);
    for (int k = 0; k + 1 < n; ++k)
    {
        if (g.generators[k] % g.generators[k] != id)
            out.push_back("s_" + std::to_string(k + 1) + " is not an involution");
        if (k + 2 < n && g.generators[k] % g.generators[k + 1] % g.generators[k] !=
                             g.generators[k + 1] % g.generators[k] % g.generators[k + 1])
            out.push_back("braid relation fails at " + std::to_string(k + 1));
        for (int m = k + 2; m + 1 < n; ++m)
            if (g.generators[k] % g.generators[m] != g.generators[m] % g.generators[k])
                out.push_back("distant generators do not commute");
        for (int l = 0; l < n; ++l)
        {
            const int sl = l == k ? k + 1 : (l == k + 1 ? k : l);
            for (int a = 0; a < q.num_arrows(); ++a)
                if (g.generators[k] % g.arrows[a][l] != g.arrows[a][sl] % g.generators[k])
                    out.push_back("transposition does not permute arrow positions");
            for (int x = 0; x < q.num_vertices(); ++x)
                if (g.generators[k] % g.idempotents[x][l] != g.idempotents[x][sl] % g.generators[k])
                    out.push_back("transposition does not permute tuples");
        }
    }
    for (int l = 0; l < n; ++l)
    {
        Mat lhs = zero(g.dim);
        for (int e = 0; e < q.num_edges(); ++e)
        {
            const Mat& a = g.arrows[2 * e][l];
            const Mat& b = g.arrows[2 * e + 1][l];
            lhs += a % b - b % a;
        }
        for (int x = 0; x < q.num_vertices(); ++x)
            lhs -= g.idempotents[x][l] * v.params().lambda[x];
        Mat rhs = zero(g.dim);
        for (int m = 0; m < n; ++m)
        {
            if (m == l)
                continue;
            Mat same = zero(g.dim);
            for (int x = 0; x < q.num_vertices(); ++x)
                same += g.idempotents[x][l] % g.idempotents[x][m];
            rhs += (g.transposition(l, m) % same) * v.params().nu;
        }
        if (lhs != rhs)
            out.push_back("relation (i) fails at position " + std::to_string(l + 1));
    }
    for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m)
        {
            if (l == m)
                continue;
            const Mat swap = g.transposition(l, m);
            for (int a = 0; a < q.num_arrows(); ++a)
                for (int b = 0; b < q.num_arrows(); ++b)
                {
                    const Mat p = g.idempotents[q.arrow_tail(a)][l] % g.idempotents[q.arrow_tail(b)][m];
                    const Mat lhs = (g.arrows[a][l] % g.arrows[b][m] - g.arrows[b][m] % g.arrows[a][l]) % p;
                    Scalar coeff = 0;
                    if (Quiver::in_q(b) && a == Quiver::star(b))
                        coeff = v.params().nu;
                    else if (Quiver::in_q(a) && b == Quiver::star(a))
                        coeff = -v.params().nu;
                    const Mat rhs = (swap % p) * coeff;
                    if (lhs != rhs)
                    {
                        std::ostringstream os;
                        os << "relation (ii) fails at positions " << l + 1 << "," << m + 1 << " arrows "
                           << q.arrow_name(a) << "," << q.arrow_name(b);
                        out.push_back(os.str());
                    }
                }
        }
    return out;
}

std::vector<TupleMaps> oracle_hom_basis(const WreathModule& v, const WreathModule& w)
{
    const GlobalModule gv = globalize(v);
    const GlobalModule gw = globalize(w);
    struct Var
    {
        Tuple j;
        int r;
        int c;
        int row;
        int col;
    };
    std::vector<Var> vars;
    for (const auto& [j, dv] : v.support())
    {
        auto it = gw.offsets.find(j);
        if (it == gw.offsets.end())
            continue;
        for (int r = 0; r < w.dim(j); ++r)
            for (int c = 0; c < dv; ++c)
                vars.push_back({j, r, c, it->second + r, gv.offsets.at(j) + c});
    }
    if (vars.empty())
        return {};
    std::vector<std::pair<const Mat*, const Mat*>> ops;
    for (std::size_t a = 0; a < gv.arrows.size(); ++a)
        for (std::size_t l = 0; l < gv.arrows[a].size(); ++l)
            ops.push_back({&gw.arrows[a][l], &gv.arrows[a][l]});
    for (std::size_t k = 0; k < gv.generators.size(); ++k)
        ops.push_back({&gw.generators[k], &gv.generators[k]});
    // W e - e V for the matrix unit e at (row, col) is W(:, row) in column col minus V(col, :) in row row
    std::map<std::tuple<std::size_t, int, int>, std::map<std::size_t, Scalar>> equations;
    for (std::size_t x = 0; x < vars.size(); ++x)
        for (std::size_t o = 0; o < ops.size(); ++o)
        {
            const Mat& wop = *ops[o].first;
            const Mat& vop = *ops[o].second;
            for (int r = 0; r < gw.dim; ++r)
                if (!wop(r, vars[x].row).is_zero())
                    equations[{o, r, vars[x].col}][x] += wop(r, vars[x].row);
            for (int c = 0; c < gv.dim; ++c)
                if (!vop(vars[x].col, c).is_zero())
                    equations[{o, vars[x].row, c}][x] -= vop(vars[x].col, c);
        }
    Mat system = Mat::Zero(static_cast<Eigen::Index>(std::max<std::size_t>(equations.size(), 1)),
                           static_cast<Eigen::Index>(vars.size()));
    Eigen::Index at = 0;
    for (const auto& [key, row] : equations)
    {
        for (const auto& [x, value] : row)
            system(at, static_cast<Eigen::Index>(x)) = value;
        ++at;
    }
    const Mat kernel = kernel_basis<Scalar>(system);
    std::vector<TupleMaps> out;
    for (Eigen::Index k = 0; k < kernel.cols(); ++k)
    {
        TupleMaps maps;
        for (const auto& [j, dv] : v.support())
            maps[j] = Mat::Zero(w.dim(j), dv);
        for (std::size_t x = 0; x < vars.size(); ++x)
            maps[vars[x].j](vars[x].r, vars[x].c) = kernel(static_cast<Eigen::Index>(x), k);
        out.push_back(std::move(maps));
    }
    return out;
}

int oracle_hom_dim(const WreathModule& v, const WreathModule& w)
{
    return static_cast<int>(oracle_hom_basis(v, w).size());
}

std::optional<TupleMaps> oracle_find_isomorphism(const WreathModule& v, const WreathModule& w)
{
    if (v.support() != w.support())
        return std::nullopt;
    const std::vector<TupleMaps> basis = oracle_hom_basis(v, w);
    for (int seed = 0; seed < 8; ++seed)
    {
        TupleMaps maps;
        for (const auto& [j, d] : v.support())
            maps[j] = Mat::Zero(d, d);
        for (std::size_t k = 0; k < basis.size(); ++k)
        {
            const long c = seed == 0 ? (k == 0 ? 1 : 0) : static_cast<long>((k + 1) * (seed + 2) % 7) - 3;
            for (const auto& [j, m] : basis[k])
                maps[j] += m * Scalar(c);
        }
        if (check_intertwiner(v, w, maps, true))
            return maps;
    }
    return std::nullopt;
}

std::map<Tuple, long> oracle_euler(const WreathModule& v, int i)
{
    const Quiver& q = v.quiver();
    std::vector<int> tails;   // tails of the incoming edges once i is a sink
    for (const Edge& e : q.edges())
    {
        if (e.head == i && e.tail != i)
            tails.push_back(e.tail);
        else if (e.tail == i && e.head != i)
            tails.push_back(e.head);
    }
    std::map<Tuple, long> out;
    enumerate_tuples(q.num_vertices(), v.n(), [&](const Tuple& j) {
        std::vector<int> delta;
        for (int p = 0; p < static_cast<int>(j.size()); ++p)
            if (j[p] == i)
                delta.push_back(p);
        long chi = 0;
        for (unsigned mask = 0; mask < (1u << delta.size()); ++mask)
        {
            std::vector<int> d;
            for (std::size_t t = 0; t < delta.size(); ++t)
                if ((mask >> t) & 1u)
                    d.push_back(delta[t]);
            long dim = 0;
            std::vector<int> xi(d.size(), 0);
            while (true)
            {
                Tuple t = j;
                for (std::size_t k = 0; k < d.size(); ++k)
                    t[d[k]] = tails[xi[k]];
                dim += v.dim(t);
                std::size_t k = 0;
                while (k < xi.size() && ++xi[k] == static_cast<int>(tails.size()))
                    xi[k++] = 0;
                if (k == xi.size())
                    break;
            }
            const int r = static_cast<int>(delta.size() - d.size());
            chi += (r % 2 == 0 ? 1 : -1) * dim;
        }
        if (chi != 0)
            out[j] = chi;
    });
    return out;
}

std::vector<long> oracle_reflect_dims(const Quiver& q, int i, const std::vector<long>& alpha)
{
    long pairing = 2 * alpha[i];
    for (const Edge& e : q.edges())
    {
        if (e.tail == i)
            pairing -= alpha[e.head];
        if (e.head == i)
            pairing -= alpha[e.tail];
    }
    std::vector<long> out = alpha;
    out[i] -= pairing;
    return out;
}

long hook_count(const std::vector<int>& mu)
{
    const int n = std::accumulate(mu.begin(), mu.end(), 0);
    std::vector<int> conjugate(mu.empty() ? 0 : mu[0], 0);
    for (int part : mu)
        for (int c = 0; c < part; ++c)
            ++conjugate[c];
    long num = 1;
    for (int k = 2; k <= n; ++k)
        num *= k;
    long den = 1;
    for (std::size_t r = 0; r < mu.size(); ++r)
        for (int c = 0; c < mu[r]; ++c)
            den *= (mu[r] - c - 1) + (conjugate[c] - static_cast<int>(r) - 1) + 1;
    return num / den;
}

std::vector<int> corner_contents(const std::vector<int>& mu)
{
    std::vector<int> out;
    for (std::size_t r = 0; r < mu.size(); ++r)
        if (r + 1 == mu.size() || mu[r + 1] < mu[r])
            out.push_back(mu[r] - 1 - static_cast<int>(r));
    return out;
}

Scalar oracle_character(const WreathModule& v, const std::vector<int>& sigma)
{
    const GlobalModule g = globalize(v);
    std::vector<int> p = sigma;
    Mat op = Mat::Identity(g.dim, g.dim);
    // sigma = sigma' s_k with sigma' = sigma s_k whenever sigma(k) > sigma(k+1)
    bool changed = true;
    while (changed)
    {
        changed = false;
        for (std::size_t k = 0; k + 1 < p.size(); ++k)
            if (p[k] > p[k + 1])
            {
                std::swap(p[k], p[k + 1]);
                op = g.generators[k] % op;
                changed = true;
            }
    }
    Scalar tr = 0;
    for (int d = 0; d < g.dim; ++d)
        tr += op(d, d);
    return tr;
}

std::vector<Scalar> oracle_cyclic_lambda(int m, const Scalar& t, const std::vector<Scalar>& c)
{
    std::vector<Scalar> out;
    for (int i = 0; i < m; ++i)
    {
        Scalar value = t;
        for (int s = 1; s < m; ++s)
            value += c[s - 1] * Scalar::zeta(m, static_cast<long>(i) * s);
        out.push_back(value);
    }
    return out;
}

Cube image_cube(const std::vector<Mat>& psi)
{
    const int k = static_cast<int>(psi.size());
    const Eigen::Index d = k ? psi[0].rows() : 0;
    std::vector<Mat> bases(std::size_t(1) << k);
    for (PosSet j = 0; j < (PosSet(1) << k); ++j)
    {
        Mat prod = Mat::Identity(d, d);
        for (int p : positions(j))
            prod = mul<Scalar>(psi[p], prod);
        const auto pivots = rref<Scalar>(prod).pivots;
        Mat basis(d, static_cast<Eigen::Index>(pivots.size()));
        for (std::size_t c = 0; c < pivots.size(); ++c)
            basis.col(static_cast<Eigen::Index>(c)) = prod.col(pivots[c]);
        bases[j] = basis;
    }
    Cube out(k);
    for (PosSet j = 0; j < (PosSet(1) << k); ++j)
    {
        out.dims[j] = static_cast<int>(bases[j].cols());
        for (int p = 0; p < k; ++p)
            if (!contains(j, p))
                out.maps[{j, p}] = solve_in_span<Scalar>(bases[with(j, p)], mul<Scalar>(psi[p], bases[j]));
    }
    return out;
}

}   // namespace wreath::testing
