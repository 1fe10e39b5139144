#include "wreath/symg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace wreath {

Perm::Perm(int n) : img_(n)
{
    std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<int> images) : img_(std::move(images))
{
    std::vector<bool> hit(img_.size(), false);
    for (int x : img_)
    {
        if (x < 0 || x >= size() || hit[x])
            throw std::invalid_argument("not a permutation");
        hit[x] = true;
    }
}

Perm Perm::transposition(int n, int a, int b)
{
    Perm p(n);
    std::swap(p.img_.at(a), p.img_.at(b));
    return p;
}

Perm Perm::adjacent(int n, int m)
{
    return transposition(n, m, m + 1);
}

Perm Perm::cycle(int n, int start, int len)
{
    Perm p(n);
    for (int k = 0; k < len; ++k)
        p.img_.at(start + k) = start + (k + 1) % len;
    return p;
}

Perm operator*(const Perm& a, const Perm& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("permutation degree mismatch");
    std::vector<int> out(a.size());
    for (int k = 0; k < a.size(); ++k)
        out[k] = a(b(k));
    return Perm(std::move(out));
}

Perm Perm::inverse() const
{
    std::vector<int> out(size());
    for (int k = 0; k < size(); ++k)
        out[img_[k]] = k;
    return Perm(std::move(out));
}

int Perm::sign() const
{
    int inversions = 0;
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (img_[a] > img_[b])
                ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

bool Perm::is_identity() const
{
    for (int k = 0; k < size(); ++k)
    {
        if (img_[k] != k)
            return false;
    }
    return true;
}

std::vector<int> Perm::adjacent_word() const
{
    // bubble sort: this * s_{c_1} * ... * s_{c_k} = id, so this = s_{c_k} ... s_{c_1}
    std::vector<int> arr = img_;
    std::vector<int> collected;
    bool swapped = true;
    while (swapped)
    {
        swapped = false;
        for (int m = 0; m + 1 < size(); ++m)
        {
            if (arr[m] > arr[m + 1])
            {
                std::swap(arr[m], arr[m + 1]);
                collected.push_back(m);
                swapped = true;
            }
        }
    }
    std::reverse(collected.begin(), collected.end());
    return collected;
}

std::vector<Perm> all_perms(int n)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do
    {
        out.emplace_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

void check_partition(const Partition& mu)
{
    for (std::size_t k = 0; k < mu.size(); ++k)
    {
        if (mu[k] <= 0 || (k > 0 && mu[k] > mu[k - 1]))
            throw std::invalid_argument("not a partition: parts must be positive and weakly decreasing");
    }
}

int partition_size(const Partition& mu)
{
    return std::accumulate(mu.begin(), mu.end(), 0);
}

namespace {

void partitions_rec(int remaining, int max_part, Partition& current, std::vector<Partition>& out)
{
    if (remaining == 0)
    {
        out.push_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part)
    {
        current.push_back(part);
        partitions_rec(remaining - part, part, current, out);
        current.pop_back();
    }
}

}   // namespace

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    Partition current;
    partitions_rec(n, n, current, out);
    return out;
}

Perm class_representative(const Partition& mu)
{
    check_partition(mu);
    const int n = partition_size(mu);
    Perm out(n);
    int start = 0;
    for (int part : mu)
    {
        out = out * Perm::cycle(n, start, part);
        start += part;
    }
    return out;
}

ContentData contents(const Partition& mu)
{
    check_partition(mu);
    ContentData out;
    for (std::size_t r = 0; r < mu.size(); ++r)
    {
        for (int c = 1; c <= mu[r]; ++c)
        {
            Cell cell{static_cast<int>(r) + 1, c, c - static_cast<int>(r) - 1};
            out.cells.push_back(cell);
            out.total += cell.content;
        }
        const bool last_row = r + 1 == mu.size();
        if (last_row || mu[r + 1] < mu[r])
        {
            int row = static_cast<int>(r) + 1;
            out.corners.push_back({row, mu[r], mu[r] - row});
        }
    }
    out.height = static_cast<int>(mu.size());
    out.width = mu.empty() ? 0 : mu.front();
    out.rectangle = !mu.empty() && mu.front() == mu.back();
    return out;
}

RepMatrices trivial_rep(int n)
{
    RepMatrices rep{n, 1, {}};
    for (int m = 0; m + 1 < n; ++m)
        rep.generators.push_back(Mat::Identity(1, 1));
    return rep;
}

RepMatrices sign_rep(int n)
{
    RepMatrices rep{n, 1, {}};
    for (int m = 0; m + 1 < n; ++m)
        rep.generators.push_back(-Mat::Identity(1, 1));
    return rep;
}

namespace {

using Tableau = std::vector<std::vector<int>>;

void fill_tableaux(const Partition& mu, Tableau& t, std::vector<int>& filled, int next, int n,
                   std::vector<Tableau>& out)
{
    if (next > n)
    {
        out.push_back(t);
        return;
    }
    for (std::size_t r = 0; r < mu.size(); ++r)
    {
        const int c = filled[r];
        if (c >= mu[r])
            continue;
        if (r > 0 && filled[r - 1] <= c)
            continue;
        t[r][c] = next;
        ++filled[r];
        fill_tableaux(mu, t, filled, next + 1, n, out);
        --filled[r];
        t[r][c] = 0;
    }
}

std::vector<int> row_reading(const Tableau& t)
{
    std::vector<int> word;
    for (const auto& row : t)
        word.insert(word.end(), row.begin(), row.end());
    return word;
}

}   // namespace

std::vector<Tableau> standard_tableaux(const Partition& mu)
{
    check_partition(mu);
    const int n = partition_size(mu);
    Tableau t(mu.size());
    for (std::size_t r = 0; r < mu.size(); ++r)
        t[r].assign(mu[r], 0);
    std::vector<int> filled(mu.size(), 0);
    std::vector<Tableau> out;
    fill_tableaux(mu, t, filled, 1, n, out);
    std::sort(out.begin(), out.end(),
              [](const Tableau& a, const Tableau& b) { return row_reading(a) < row_reading(b); });
    return out;
}

RepMatrices seminormal_rep(const Partition& mu)
{
    const int n = partition_size(mu);
    if (n < 1)
        throw std::invalid_argument("seminormal_rep: empty partition");
    const auto tableaux = standard_tableaux(mu);
    const int dim = static_cast<int>(tableaux.size());

    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> row_of(dim, std::vector<int>(n + 1));
    std::vector<std::vector<int>> col_of(dim, std::vector<int>(n + 1));
    for (int u = 0; u < dim; ++u)
    {
        index[row_reading(tableaux[u])] = u;
        for (std::size_t r = 0; r < tableaux[u].size(); ++r)
            for (std::size_t c = 0; c < tableaux[u][r].size(); ++c)
            {
                row_of[u][tableaux[u][r][c]] = static_cast<int>(r);
                col_of[u][tableaux[u][r][c]] = static_cast<int>(c);
            }
    }

    RepMatrices rep{n, dim, {}};
    for (int k = 1; k < n; ++k)
    {
        Mat g = Mat::Zero(dim, dim);
        for (int u = 0; u < dim; ++u)
        {
            const int rk = row_of[u][k], rk1 = row_of[u][k + 1];
            const int ck = col_of[u][k], ck1 = col_of[u][k + 1];
            if (rk == rk1)
            {
                g(u, u) = 1;
                continue;
            }
            if (ck == ck1)
            {
                g(u, u) = -1;
                continue;
            }
            const Scalar d = Scalar((ck1 - rk1) - (ck - rk));
            Tableau swapped = tableaux[u];
            std::swap(swapped[rk][ck], swapped[rk1][ck1]);
            const int partner = index.at(row_reading(swapped));
            g(u, u) = Scalar(1) / d;
            g(partner, u) = rk < rk1 ? Scalar(1) : Scalar(1) - Scalar(1) / (d * d);
        }
        rep.generators.push_back(std::move(g));
    }
    return rep;
}

Mat rep_matrix(const RepMatrices& rep, const Perm& sigma)
{
    if (sigma.size() != rep.degree)
        throw std::invalid_argument("rep_matrix: degree mismatch");
    Mat out = Mat::Identity(rep.dim, rep.dim);
    for (int m : sigma.adjacent_word())
        out = mul<Scalar>(out, rep.generators.at(m));
    return out;
}

std::vector<std::string> check_rep(const RepMatrices& rep)
{
    std::vector<std::string> issues;
    const Mat id = Mat::Identity(rep.dim, rep.dim);
    const int g = static_cast<int>(rep.generators.size());
    if (g != std::max(rep.degree - 1, 0))
        issues.push_back("wrong number of generators");
    for (int m = 0; m < g; ++m)
    {
        const Mat& s = rep.generators[m];
        if (s.rows() != rep.dim || s.cols() != rep.dim)
        {
            issues.push_back("generator " + std::to_string(m + 1) + " has the wrong shape");
            return issues;
        }
    }
    for (int m = 0; m < g; ++m)
    {
        const Mat& s = rep.generators[m];
        if (mul<Scalar>(s, s) != id)
            issues.push_back("s_" + std::to_string(m + 1) + " is not an involution");
        if (m + 1 < g)
        {
            const Mat& t = rep.generators[m + 1];
            if (mul<Scalar>(mul<Scalar>(s, t), s) != mul<Scalar>(mul<Scalar>(t, s), t))
                issues.push_back("braid relation fails for s_" + std::to_string(m + 1));
        }
        for (int k = m + 2; k < g; ++k)
        {
            const Mat& t = rep.generators[k];
            if (mul<Scalar>(s, t) != mul<Scalar>(t, s))
                issues.push_back("s_" + std::to_string(m + 1) + " and s_" + std::to_string(k + 1) +
                                 " do not commute");
        }
    }
    return issues;
}

Mat corner_sum(const RepMatrices& rep)
{
    Mat out = Mat::Zero(rep.dim, rep.dim);
    for (int m = 1; m < rep.degree; ++m)
        out += rep_matrix(rep, Perm::transposition(rep.degree, 0, m));
    return out;
}

bool central_sum_invertible(const Scalar& x, const Scalar& nu, int r)
{
    if (r < 1)
        throw std::invalid_argument("central_sum_invertible: r must be positive");
    if (r > 6)
        throw ResourceLimit("central_sum_invertible: regular representation limited to r <= 6");
    const auto group = all_perms(r);
    std::map<Perm, int> index;
    for (std::size_t k = 0; k < group.size(); ++k)
        index[group[k]] = static_cast<int>(k);
    const int size = static_cast<int>(group.size());
    for (int sign : {1, -1})
    {
        // left multiplication by x + sign * nu * C
        Mat m = Mat::Zero(size, size);
        for (int g = 0; g < size; ++g)
        {
            m(g, g) += x;
            for (int k = 1; k < r; ++k)
            {
                const int h = index.at(Perm::transposition(r, 0, k) * group[g]);
                m(h, g) += Scalar(sign) * nu;
            }
        }
        if (rank<Scalar>(m) != size)
            return false;
    }
    return true;
}

std::vector<Perm> young_cosets(const std::vector<int>& sizes)
{
    int n = 0;
    for (int s : sizes)
    {
        if (s < 1)
            throw std::invalid_argument("block sizes must be positive");
        n += s;
    }
    std::vector<Perm> out;
    for (const Perm& p : all_perms(n))
    {
        bool increasing = true;
        int start = 0;
        for (int s : sizes)
        {
            for (int k = start; k + 1 < start + s; ++k)
                increasing &= p(k) < p(k + 1);
            start += s;
        }
        if (increasing)
            out.push_back(p);
    }
    return out;
}

Perm minimal_coset_representative(const Perm& sigma, const std::vector<int>& sizes)
{
    std::vector<int> img = sigma.images();
    int start = 0;
    for (int s : sizes)
    {
        std::sort(img.begin() + start, img.begin() + start + s);
        start += s;
    }
    return Perm(std::move(img));
}

Mat young_subgroup_matrix(const std::vector<RepBlock>& blocks, const Perm& h)
{
    Mat out = Mat::Identity(1, 1);
    int start = 0;
    for (const auto& block : blocks)
    {
        std::vector<int> local(block.size);
        for (int k = 0; k < block.size; ++k)
        {
            local[k] = h(start + k) - start;
            if (local[k] < 0 || local[k] >= block.size)
                throw std::invalid_argument("permutation does not preserve the Young subgroup blocks");
        }
        out = kron<Scalar>(out, rep_matrix(block.rep, Perm(local)));
        start += block.size;
    }
    return out;
}

InducedRep induce_rep(int n, const std::vector<RepBlock>& blocks)
{
    std::vector<int> sizes;
    int total = 0;
    int inner = 1;
    for (const auto& b : blocks)
    {
        if (b.rep.degree != b.size)
            throw std::invalid_argument("induce_rep: block representation degree differs from block size");
        sizes.push_back(b.size);
        total += b.size;
        inner *= b.rep.dim;
    }
    if (total != n)
        throw std::invalid_argument("induce_rep: block sizes do not sum to n");

    InducedRep out;
    out.cosets = young_cosets(sizes);
    out.inner_dim = inner;
    std::map<Perm, int> where;
    for (std::size_t k = 0; k < out.cosets.size(); ++k)
        where[out.cosets[k]] = static_cast<int>(k);
    const int dim = static_cast<int>(out.cosets.size()) * inner;
    out.rep = RepMatrices{n, dim, {}};
    for (int m = 0; m + 1 < n; ++m)
    {
        const Perm g = Perm::adjacent(n, m);
        Mat big = Mat::Zero(dim, dim);
        for (std::size_t c = 0; c < out.cosets.size(); ++c)
        {
            const Perm moved = g * out.cosets[c];
            const Perm rep = minimal_coset_representative(moved, sizes);
            const Perm h = rep.inverse() * moved;
            const int target = where.at(rep);
            big.block(target * inner, static_cast<int>(c) * inner, inner, inner) = young_subgroup_matrix(blocks, h);
        }
        out.rep.generators.push_back(std::move(big));
    }
    return out;
}

}   // namespace wreath
