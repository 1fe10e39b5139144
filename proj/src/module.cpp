#include "wreath/module.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace wreath {

Tuple act(const Perm& sigma, const Tuple& j)
{
    if (sigma.size() != static_cast<int>(j.size()))
        throw std::invalid_argument("act: degree mismatch");
    Tuple out(j.size());
    for (int k = 0; k < sigma.size(); ++k)
        out[sigma(k)] = j[k];
    return out;
}

Tuple swap_adjacent(const Tuple& j, int m)
{
    Tuple out = j;
    std::swap(out.at(m), out.at(m + 1));
    return out;
}

Tuple replace(const Tuple& j, int position, int vertex)
{
    Tuple out = j;
    out.at(position) = vertex;
    return out;
}

std::string tuple_string(const Quiver& q, const Tuple& j)
{
    std::string out = "(";
    for (std::size_t k = 0; k < j.size(); ++k)
    {
        if (k > 0)
            out += ",";
        out += q.vertex_id(j[k]);
    }
    return out + ")";
}

int WreathModule::dim(const Tuple& j) const
{
    auto it = support_.find(j);
    return it == support_.end() ? 0 : it->second;
}

int WreathModule::total_dim() const
{
    int out = 0;
    for (const auto& [j, d] : support_)
        out += d;
    return out;
}

void WreathModule::set_dim(const Tuple& j, int d)
{
    if (static_cast<int>(j.size()) != params_.n)
        throw ModuleError("tuple length differs from n");
    for (int v : j)
    {
        if (v < 0 || v >= params_.quiver.num_vertices())
            throw ModuleError("tuple entry is not a vertex");
    }
    if (d < 0)
        throw ModuleError("negative dimension");
    if (d == 0)
        support_.erase(j);
    else
        support_[j] = d;
}

void WreathModule::set_edge(int arrow, int position, const Tuple& source, const Mat& m)
{
    EdgeKey key{arrow, position, source};
    if (is_zero<Scalar>(m))
        edges_.erase(key);
    else
        edges_[key] = m;
}

void WreathModule::set_sn(int adjacent, const Tuple& source, const Mat& m)
{
    SnKey key{adjacent, source};
    if (m.size() == 0)
        sn_.erase(key);
    else
        sn_[key] = m;
}

Tuple WreathModule::arrow_target(int arrow, int position, const Tuple& source) const
{
    return replace(source, position, params_.quiver.arrow_head(arrow));
}

Mat WreathModule::edge(int arrow, int position, const Tuple& source) const
{
    auto it = edges_.find(EdgeKey{arrow, position, source});
    if (it != edges_.end())
        return it->second;
    return Mat::Zero(dim(arrow_target(arrow, position, source)), dim(source));
}

Mat WreathModule::sn(int adjacent, const Tuple& source) const
{
    auto it = sn_.find(SnKey{adjacent, source});
    if (it != sn_.end())
        return it->second;
    return Mat::Zero(dim(swap_adjacent(source, adjacent)), dim(source));
}

Mat WreathModule::perm(const Perm& sigma, const Tuple& source) const
{
    const auto word = sigma.adjacent_word();
    Tuple current = source;
    Mat out = Mat::Identity(dim(source), dim(source));
    for (auto it = word.rbegin(); it != word.rend(); ++it)
    {
        out = mul<Scalar>(sn(*it, current), out);
        current = swap_adjacent(current, *it);
    }
    return out;
}

bool operator==(const WreathModule& a, const WreathModule& b)
{
    const Params& p = a.params_;
    const Params& q = b.params_;
    return p.quiver == q.quiver && p.n == q.n && p.lambda == q.lambda && p.nu == q.nu &&
           p.cyclotomic_order == q.cyclotomic_order && a.support_ == b.support_ && a.edges_ == b.edges_ &&
           a.sn_ == b.sn_;
}

namespace {

std::string pos_string(int p)
{
    return std::to_string(p + 1);
}

}   // namespace

std::vector<std::string> check_structure(const WreathModule& m)
{
    std::vector<std::string> issues;
    const Quiver& q = m.quiver();
    const int n = m.n();
    if (n < 1)
        issues.push_back("n must be positive");
    if (static_cast<int>(m.params().lambda.size()) != q.num_vertices())
        issues.push_back("lambda does not cover the vertex set");
    for (const auto& [j, d] : m.support())
    {
        if (static_cast<int>(j.size()) != n)
            issues.push_back("tuple of wrong length in support");
    }
    if (!issues.empty())
        return issues;

    for (const auto& [key, mat] : m.edge_actions())
    {
        const std::string where = "edge action at position " + pos_string(key.position);
        if (key.arrow < 0 || key.arrow >= q.num_arrows() || key.position < 0 || key.position >= n ||
            static_cast<int>(key.source.size()) != n)
        {
            issues.push_back(where + ": bad arrow, position or tuple");
            continue;
        }
        const std::string full =
            "edge " + q.arrow_name(key.arrow) + " at position " + pos_string(key.position) + " on " +
            tuple_string(q, key.source);
        if (q.arrow_tail(key.arrow) != key.source[key.position])
        {
            issues.push_back(full + ": tail does not match the tuple entry");
            continue;
        }
        const Tuple target = m.arrow_target(key.arrow, key.position, key.source);
        if (mat.rows() != m.dim(target) || mat.cols() != m.dim(key.source))
            issues.push_back(full + ": matrix shape " + std::to_string(mat.rows()) + "x" +
                             std::to_string(mat.cols()) + " does not match " + std::to_string(m.dim(target)) +
                             "x" + std::to_string(m.dim(key.source)));
    }
    for (const auto& [key, mat] : m.sn_actions())
    {
        if (key.adjacent < 0 || key.adjacent + 1 >= n || static_cast<int>(key.source.size()) != n)
        {
            issues.push_back("bad S_n generator or tuple");
            continue;
        }
        const Tuple target = swap_adjacent(key.source, key.adjacent);
        if (mat.rows() != m.dim(target) || mat.cols() != m.dim(key.source))
            issues.push_back("s_" + pos_string(key.adjacent) + " on " + tuple_string(q, key.source) +
                             ": matrix shape does not match the grading");
    }
    if (!issues.empty())
        return issues;

    for (const auto& [j, d] : m.support())
    {
        const std::string on = " on " + tuple_string(q, j);
        const Mat id = Mat::Identity(d, d);
        for (int a = 0; a + 1 < n; ++a)
        {
            const Tuple ja = swap_adjacent(j, a);
            if (mul<Scalar>(m.sn(a, ja), m.sn(a, j)) != id)
                issues.push_back("s_" + pos_string(a) + " is not an involution" + on);
            if (a + 2 < n)
            {
                const int b = a + 1;
                Mat lhs = mul<Scalar>(m.sn(a, act(Perm::adjacent(n, b) * Perm::adjacent(n, a), j)),
                                      mul<Scalar>(m.sn(b, ja), m.sn(a, j)));
                const Tuple jb = swap_adjacent(j, b);
                Mat rhs = mul<Scalar>(m.sn(b, act(Perm::adjacent(n, a) * Perm::adjacent(n, b), j)),
                                      mul<Scalar>(m.sn(a, jb), m.sn(b, j)));
                if (lhs != rhs)
                    issues.push_back("braid relation fails for s_" + pos_string(a) + on);
            }
            for (int b = a + 2; b + 1 < n; ++b)
            {
                Mat lhs = mul<Scalar>(m.sn(b, ja), m.sn(a, j));
                Mat rhs = mul<Scalar>(m.sn(a, swap_adjacent(j, b)), m.sn(b, j));
                if (lhs != rhs)
                    issues.push_back("s_" + pos_string(a) + " and s_" + pos_string(b) + " do not commute" + on);
            }
        }
        // equivariance of the edge actions
        for (int l = 0; l < n; ++l)
        {
            for (int arrow = 0; arrow < q.num_arrows(); ++arrow)
            {
                if (q.arrow_tail(arrow) != j[l])
                    continue;
                const Tuple t = m.arrow_target(arrow, l, j);
                const Mat act_here = m.edge(arrow, l, j);
                for (int s = 0; s + 1 < n; ++s)
                {
                    const int l2 = l == s ? s + 1 : (l == s + 1 ? s : l);
                    Mat lhs = mul<Scalar>(m.sn(s, t), act_here);
                    Mat rhs = mul<Scalar>(m.edge(arrow, l2, swap_adjacent(j, s)), m.sn(s, j));
                    if (lhs != rhs)
                        issues.push_back("s_" + pos_string(s) + " does not intertwine edge " + q.arrow_name(arrow) +
                                         " at position " + pos_string(l) + on);
                }
            }
        }
    }
    return issues;
}

VerifyReport verify_relations(const WreathModule& m)
{
    VerifyReport report;
    report.structural = check_structure(m);
    if (!report.structural.empty())
        return report;
    const Quiver& q = m.quiver();
    const Params& p = m.params();
    const int n = m.n();

    for (const auto& [j, d] : m.support())
    {
        // relation (i)
        for (int l = 0; l < n; ++l)
        {
            const int v = j[l];
            Mat lhs = Mat::Identity(d, d) * (-p.lambda[v]);
            for (int e = 0; e < q.num_edges(); ++e)
            {
                const int a = 2 * e, astar = 2 * e + 1;
                if (q.edge(e).head == v)
                {
                    const Tuple mid = m.arrow_target(astar, l, j);
                    lhs += mul<Scalar>(m.edge(a, l, mid), m.edge(astar, l, j));
                }
                if (q.edge(e).tail == v)
                {
                    const Tuple mid = m.arrow_target(a, l, j);
                    lhs -= mul<Scalar>(m.edge(astar, l, mid), m.edge(a, l, j));
                }
            }
            Mat rhs = Mat::Zero(d, d);
            if (!p.nu.is_zero())
            {
                for (int k = 0; k < n; ++k)
                {
                    if (k != l && j[k] == v)
                        rhs += m.perm(Perm::transposition(n, l, k), j) * p.nu;
                }
            }
            Mat residual = lhs - rhs;
            if (!is_zero<Scalar>(residual))
                report.failures.push_back({1, j, l, -1, -1, -1, residual});
        }

        // relation (ii); the pair (m, l) is the negative of (l, m)
        for (int l = 0; l < n; ++l)
        {
            for (int k = l + 1; k < n; ++k)
            {
                for (int a = 0; a < q.num_arrows(); ++a)
                {
                    if (q.arrow_tail(a) != j[l])
                        continue;
                    for (int b = 0; b < q.num_arrows(); ++b)
                    {
                        if (q.arrow_tail(b) != j[k])
                            continue;
                        const Tuple bj = m.arrow_target(b, k, j);
                        const Tuple aj = m.arrow_target(a, l, j);
                        Mat lhs = mul<Scalar>(m.edge(a, l, bj), m.edge(b, k, j)) -
                                  mul<Scalar>(m.edge(b, k, aj), m.edge(a, l, j));
                        int sign = 0;
                        if (Quiver::in_q(b) && a == Quiver::star(b))
                            sign = 1;
                        else if (Quiver::in_q(a) && b == Quiver::star(a))
                            sign = -1;
                        if (sign != 0 && !p.nu.is_zero())
                            lhs -= m.perm(Perm::transposition(n, l, k), j) * (p.nu * Scalar(sign));
                        if (!is_zero<Scalar>(lhs))
                            report.failures.push_back({2, j, l, k, a, b, lhs});
                    }
                }
            }
        }
    }
    return report;
}

std::string describe(const Quiver& q, const RelationFailure& f)
{
    std::ostringstream os;
    if (f.relation == 1)
    {
        os << "relation (i) fails at tuple " << tuple_string(q, f.tuple) << ", position " << f.position + 1;
    }
    else
    {
        os << "relation (ii) fails at tuple " << tuple_string(q, f.tuple) << ", positions " << f.position + 1
           << "," << f.position2 + 1 << ", arrows " << q.arrow_name(f.arrow) << "," << q.arrow_name(f.arrow2);
    }
    return os.str();
}

WreathModule reorient_module(const WreathModule& m, const std::set<int>& flips)
{
    Params params = m.params();
    params.quiver = m.quiver().reoriented(flips);
    WreathModule out(params);
    for (const auto& [j, d] : m.support())
        out.set_dim(j, d);
    for (const auto& [key, mat] : m.edge_actions())
    {
        const int e = Quiver::edge_of(key.arrow);
        if (!flips.count(e))
            out.set_edge(key.arrow, key.position, key.source, mat);
        else if (Quiver::in_q(key.arrow))
            out.set_edge(Quiver::star(key.arrow), key.position, key.source, -mat);
        else
            out.set_edge(Quiver::star(key.arrow), key.position, key.source, mat);
    }
    for (const auto& [key, mat] : m.sn_actions())
        out.set_sn(key.adjacent, key.source, mat);
    return out;
}

WreathModule unreorient_module(const WreathModule& m, const std::set<int>& flips)
{
    WreathModule flipped = reorient_module(m, flips);
    WreathModule out(flipped.params());
    for (const auto& [j, d] : flipped.support())
        out.set_dim(j, d);
    for (const auto& [key, mat] : flipped.edge_actions())
    {
        const bool negate = flips.count(Quiver::edge_of(key.arrow)) > 0;
        out.set_edge(key.arrow, key.position, key.source, negate ? Mat(-mat) : mat);
    }
    for (const auto& [key, mat] : flipped.sn_actions())
        out.set_sn(key.adjacent, key.source, mat);
    return out;
}

WreathModule graph_automorphism_transport(const WreathModule& m, const std::vector<int>& g)
{
    const Quiver& q = m.quiver();
    const int nv = q.num_vertices();
    if (static_cast<int>(g.size()) != nv)
        throw ModuleError("vertex map has the wrong size");
    std::vector<bool> hit(nv, false);
    for (int v : g)
    {
        if (v < 0 || v >= nv || hit[v])
            throw ModuleError("vertex map is not a bijection");
        hit[v] = true;
    }
    const int ne = q.num_edges();
    std::vector<int> image(ne, -1);
    std::vector<bool> used(ne, false);
    std::set<int> reversed;
    for (int pass = 0; pass < 2; ++pass)
    {
        for (int e = 0; e < ne; ++e)
        {
            if (image[e] >= 0)
                continue;
            const int t = g[q.edge(e).tail], h = g[q.edge(e).head];
            for (int f = 0; f < ne; ++f)
            {
                if (used[f])
                    continue;
                const bool same = q.edge(f).tail == t && q.edge(f).head == h;
                const bool flipped = q.edge(f).tail == h && q.edge(f).head == t;
                if ((pass == 0 && same) || (pass == 1 && flipped))
                {
                    image[e] = f;
                    used[f] = true;
                    if (pass == 1)
                        reversed.insert(e);
                    break;
                }
            }
        }
    }
    for (int e = 0; e < ne; ++e)
    {
        if (image[e] < 0)
            throw ModuleError("vertex map is not a quiver automorphism");
    }

    const WreathModule oriented = reorient_module(m, reversed);
    Params params = m.params();
    for (int v = 0; v < nv; ++v)
        params.lambda[g[v]] = m.params().lambda[v];
    auto relabel = [&g](const Tuple& j) {
        Tuple out = j;
        for (auto& v : out)
            v = g[v];
        return out;
    };
    WreathModule out(params);
    for (const auto& [j, d] : oriented.support())
        out.set_dim(relabel(j), d);
    for (const auto& [key, mat] : oriented.edge_actions())
    {
        const int arrow = 2 * image[Quiver::edge_of(key.arrow)] + (key.arrow & 1);
        out.set_edge(arrow, key.position, relabel(key.source), mat);
    }
    for (const auto& [key, mat] : oriented.sn_actions())
        out.set_sn(key.adjacent, relabel(key.source), mat);
    return out;
}

bool check_intertwiner(const WreathModule& m1, const WreathModule& m2, const TupleMaps& maps, bool require_bijective)
{
    if (!(m1.quiver() == m2.quiver()) || m1.n() != m2.n())
        throw IntertwinerError("modules live over different quivers or degrees");
    for (const auto& [j, f] : maps)
    {
        if (f.rows() != m2.dim(j) || f.cols() != m1.dim(j))
            throw IntertwinerError("map on " + tuple_string(m1.quiver(), j) + " has the wrong shape");
    }
    auto map_at = [&](const Tuple& j) -> Mat {
        auto it = maps.find(j);
        return it != maps.end() ? it->second : Mat::Zero(m2.dim(j), m1.dim(j));
    };
    const Quiver& q = m1.quiver();
    const int n = m1.n();
    for (const auto& [j, d] : m1.support())
    {
        const Mat fj = map_at(j);
        for (int l = 0; l < n; ++l)
        {
            for (int a = 0; a < q.num_arrows(); ++a)
            {
                if (q.arrow_tail(a) != j[l])
                    continue;
                const Tuple t = m1.arrow_target(a, l, j);
                if (mul<Scalar>(map_at(t), m1.edge(a, l, j)) != mul<Scalar>(m2.edge(a, l, j), fj))
                    return false;
            }
        }
        for (int s = 0; s + 1 < n; ++s)
        {
            const Tuple t = swap_adjacent(j, s);
            if (mul<Scalar>(map_at(t), m1.sn(s, j)) != mul<Scalar>(m2.sn(s, j), fj))
                return false;
        }
    }
    if (require_bijective)
    {
        std::set<Tuple> tuples;
        for (const auto& [j, d] : m1.support())
            tuples.insert(j);
        for (const auto& [j, d] : m2.support())
            tuples.insert(j);
        for (const Tuple& j : tuples)
        {
            if (m1.dim(j) != m2.dim(j) || rank<Scalar>(map_at(j)) != m1.dim(j))
                return false;
        }
    }
    return true;
}

TupleMaps identity_maps(const WreathModule& m)
{
    TupleMaps out;
    for (const auto& [j, d] : m.support())
        out[j] = Mat::Identity(d, d);
    return out;
}

namespace {

Mat block_diag(const Mat& a, const Mat& b)
{
    Mat out = Mat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

void require_same_params(const WreathModule& a, const WreathModule& b)
{
    const Params& p = a.params();
    const Params& q = b.params();
    if (!(p.quiver == q.quiver) || p.n != q.n || p.lambda != q.lambda || p.nu != q.nu)
        throw ModuleError("modules have different parameters");
}

}   // namespace

WreathModule direct_sum(const WreathModule& a, const WreathModule& b)
{
    require_same_params(a, b);
    WreathModule out(a.params());
    std::set<Tuple> tuples;
    for (const auto& [j, d] : a.support())
        tuples.insert(j);
    for (const auto& [j, d] : b.support())
        tuples.insert(j);
    for (const Tuple& j : tuples)
        out.set_dim(j, a.dim(j) + b.dim(j));
    std::set<EdgeKey> edge_keys;
    for (const auto& [key, mat] : a.edge_actions())
        edge_keys.insert(key);
    for (const auto& [key, mat] : b.edge_actions())
        edge_keys.insert(key);
    for (const auto& key : edge_keys)
        out.set_edge(key.arrow, key.position, key.source,
                     block_diag(a.edge(key.arrow, key.position, key.source),
                                b.edge(key.arrow, key.position, key.source)));
    for (const Tuple& j : tuples)
        for (int s = 0; s + 1 < a.n(); ++s)
            out.set_sn(s, j, block_diag(a.sn(s, j), b.sn(s, j)));
    return out;
}

WreathModule simple_module(const Params& params, int vertex)
{
    if (params.n != 1)
        throw ModuleError("simple_module needs n = 1");
    WreathModule out(params);
    out.set_dim({vertex}, 1);
    return out;
}

namespace {

/** Independent columns of m spanning its column space. */
Mat column_basis(const Mat& m)
{
    auto [reduced, pivots] = rref<Scalar>(m);
    Mat out(m.rows(), static_cast<Eigen::Index>(pivots.size()));
    for (std::size_t k = 0; k < pivots.size(); ++k)
        out.col(k) = m.col(pivots[k]);
    return out;
}

Mat hstack(const Mat& a, const Mat& b)
{
    Mat out(a.rows(), a.cols() + b.cols());
    out << a, b;
    return out;
}

}   // namespace

Subquotient generated_submodule(const WreathModule& m, const TupleMaps& generators)
{
    const Quiver& q = m.quiver();
    const int n = m.n();
    std::map<Tuple, Mat> span;
    for (const auto& [j, d] : m.support())
        span[j] = Mat::Zero(d, 0);
    std::vector<Tuple> queue;
    for (const auto& [j, g] : generators)
    {
        if (g.rows() != m.dim(j))
            throw ModuleError("generator has the wrong length");
        if (m.dim(j) == 0)
            continue;
        span[j] = column_basis(hstack(span[j], g));
        queue.push_back(j);
    }
    auto grow = [&](const Tuple& t, const Mat& images) {
        if (m.dim(t) == 0 || images.cols() == 0)
            return;
        const Eigen::Index before = span[t].cols();
        span[t] = column_basis(hstack(span[t], images));
        if (span[t].cols() > before)
            queue.push_back(t);
    };
    while (!queue.empty())
    {
        const Tuple j = queue.back();
        queue.pop_back();
        const Mat u = span[j];
        for (int l = 0; l < n; ++l)
            for (int a = 0; a < q.num_arrows(); ++a)
                if (q.arrow_tail(a) == j[l])
                    grow(m.arrow_target(a, l, j), mul<Scalar>(m.edge(a, l, j), u));
        for (int s = 0; s + 1 < n; ++s)
            grow(swap_adjacent(j, s), mul<Scalar>(m.sn(s, j), u));
    }

    // complete each span to a basis [U | C] of V_j
    std::map<Tuple, Mat> full;
    std::map<Tuple, Eigen::Index> sub_dim;
    for (const auto& [j, d] : m.support())
    {
        Mat basis = span[j];
        sub_dim[j] = basis.cols();
        for (int k = 0; k < d && basis.cols() < d; ++k)
        {
            Mat trial = hstack(basis, Mat::Identity(d, d).col(k));
            if (rank<Scalar>(trial) == trial.cols())
                basis = trial;
        }
        full[j] = basis;
    }

    Subquotient out{WreathModule(m.params()), {}, WreathModule(m.params()), {}};
    for (const auto& [j, d] : m.support())
    {
        const Eigen::Index k = sub_dim[j];
        out.sub.set_dim(j, static_cast<int>(k));
        out.quotient.set_dim(j, d - static_cast<int>(k));
        if (k > 0)
            out.inclusion[j] = span[j];
        if (d - k > 0)
            out.projection[j] = solve_in_span<Scalar>(full[j], Mat::Identity(d, d)).bottomRows(d - k);
    }
    auto transfer = [&](const Tuple& j, const Tuple& t, const Mat& action, auto&& store) {
        const Eigen::Index kj = sub_dim[j], kt = m.dim(t) > 0 ? sub_dim[t] : 0;
        const int dj = m.dim(j), dt = m.dim(t);
        Mat on_sub = Mat::Zero(kt, kj);
        Mat on_quot = Mat::Zero(dt - kt, dj - kj);
        if (dt > 0)
        {
            if (kj > 0)
                on_sub = solve_in_span<Scalar>(span[t], mul<Scalar>(action, span[j]));
            if (dj - kj > 0)
                on_quot = solve_in_span<Scalar>(full[t], mul<Scalar>(action, full[j].rightCols(dj - kj)))
                              .bottomRows(dt - kt);
        }
        store(on_sub, on_quot);
    };
    for (const auto& [j, d] : m.support())
    {
        for (int l = 0; l < n; ++l)
            for (int a = 0; a < q.num_arrows(); ++a)
            {
                if (q.arrow_tail(a) != j[l])
                    continue;
                const Tuple t = m.arrow_target(a, l, j);
                transfer(j, t, m.edge(a, l, j), [&](const Mat& s, const Mat& qm) {
                    out.sub.set_edge(a, l, j, s);
                    out.quotient.set_edge(a, l, j, qm);
                });
            }
        for (int s = 0; s + 1 < n; ++s)
            transfer(j, swap_adjacent(j, s), m.sn(s, j), [&](const Mat& sm, const Mat& qm) {
                out.sub.set_sn(s, j, sm);
                out.quotient.set_sn(s, j, qm);
            });
    }
    return out;
}

WreathModule graded_induction(const Params& params, const std::vector<OuterBlock>& blocks)
{
    const int n = params.n;
    const Quiver& q = params.quiver;
    std::vector<int> sizes;
    std::vector<RepBlock> rep_blocks;
    std::vector<int> block_of;
    int inner = 1;
    for (std::size_t b = 0; b < blocks.size(); ++b)
    {
        const auto& blk = blocks[b];
        if (blk.y.n() != 1)
            throw ModuleError("block module must have n = 1");
        if (!(blk.y.quiver() == q))
            throw ModuleError("block module lives over a different quiver");
        if (blk.x.degree != blk.size || blk.size < 1)
            throw ModuleError("block representation degree differs from block size");
        sizes.push_back(blk.size);
        rep_blocks.push_back({blk.size, blk.x});
        block_of.insert(block_of.end(), blk.size, static_cast<int>(b));
        inner *= blk.x.dim;
    }
    if (static_cast<int>(block_of.size()) != n)
        throw ModuleError("block sizes do not sum to n");

    const auto cosets = young_cosets(sizes);
    std::map<Perm, int> coset_index;
    for (std::size_t c = 0; c < cosets.size(); ++c)
        coset_index[cosets[c]] = static_cast<int>(c);

    auto ydim = [&](int slot, int vertex) { return blocks[block_of[slot]].y.dim({vertex}); };

    // tuples of the outer tensor product W, slot by slot
    std::vector<Tuple> wtuples{Tuple{}};
    for (int p = 0; p < n; ++p)
    {
        std::vector<Tuple> next;
        for (const auto& k : wtuples)
            for (const auto& [vj, d] : blocks[block_of[p]].y.support())
            {
                Tuple e = k;
                e.push_back(vj[0]);
                next.push_back(e);
            }
        wtuples = std::move(next);
    }
    auto wdim = [&](const Tuple& k) {
        int d = inner;
        for (int p = 0; p < n; ++p)
            d *= ydim(p, k[p]);
        return d;
    };

    struct Chunk
    {
        Tuple j;
        int offset;
        int size;
    };
    std::map<std::pair<int, Tuple>, Chunk> chunks;
    std::map<Tuple, int> dims;
    for (std::size_t c = 0; c < cosets.size(); ++c)
        for (const auto& k : wtuples)
        {
            const Tuple j = act(cosets[c], k);
            const int size = wdim(k);
            chunks[{static_cast<int>(c), k}] = {j, dims[j], size};
            dims[j] += size;
        }

    WreathModule out(params);
    for (const auto& [j, d] : dims)
        out.set_dim(j, d);

    std::map<EdgeKey, Mat> edges;
    std::map<SnKey, Mat> sn;
    auto slot_identity = [&](const Tuple& k, int from, int to) {
        int d = 1;
        for (int p = from; p < to; ++p)
            d *= ydim(p, k[p]);
        return Mat(Mat::Identity(d, d));
    };

    for (const auto& [ck, chunk] : chunks)
    {
        const auto& [c, k] = ck;
        const Perm& sigma = cosets[c];
        const Perm sigma_inv = sigma.inverse();
        for (int l = 0; l < n; ++l)
        {
            const int p = sigma_inv(l);
            const WreathModule& y = blocks[block_of[p]].y;
            for (int a = 0; a < q.num_arrows(); ++a)
            {
                if (q.arrow_tail(a) != k[p])
                    continue;
                const Mat ya = y.edge(a, 0, {k[p]});
                if (ya.size() == 0 || is_zero<Scalar>(ya))
                    continue;
                const Tuple k2 = replace(k, p, q.arrow_head(a));
                const Chunk& target = chunks.at({c, k2});
                Mat local = kron<Scalar>(Mat::Identity(inner, inner),
                                         kron<Scalar>(kron<Scalar>(slot_identity(k, 0, p), ya), slot_identity(k, p + 1, n)));
                EdgeKey key{a, l, chunk.j};
                auto it = edges.find(key);
                if (it == edges.end())
                    it = edges.emplace(key, Mat::Zero(dims[target.j], dims[chunk.j])).first;
                it->second.block(target.offset, chunk.offset, target.size, chunk.size) = local;
            }
        }
        for (int s = 0; s + 1 < n; ++s)
        {
            const Perm moved = Perm::adjacent(n, s) * sigma;
            const Perm rep = minimal_coset_representative(moved, sizes);
            const Perm h = rep.inverse() * moved;
            const Tuple k2 = act(h, k);
            const Chunk& target = chunks.at({coset_index.at(rep), k2});

            // slot permutation y_p -> slot h(p), slot 0 most significant
            std::vector<int> src_dims(n), dst_dims(n);
            for (int p = 0; p < n; ++p)
            {
                src_dims[p] = ydim(p, k[p]);
                dst_dims[p] = ydim(p, k2[p]);
            }
            const int ysize = chunk.size / inner;
            Mat perm_mat = Mat::Zero(ysize, ysize);
            std::vector<int> digits(n, 0), moved_digits(n, 0);
            for (int idx = 0; idx < ysize; ++idx)
            {
                int rest = idx;
                for (int p = n - 1; p >= 0; --p)
                {
                    digits[p] = rest % src_dims[p];
                    rest /= src_dims[p];
                }
                for (int p = 0; p < n; ++p)
                    moved_digits[h(p)] = digits[p];
                int target_idx = 0;
                for (int p = 0; p < n; ++p)
                    target_idx = target_idx * dst_dims[p] + moved_digits[p];
                perm_mat(target_idx, idx) = 1;
            }
            Mat local = kron<Scalar>(young_subgroup_matrix(rep_blocks, h), perm_mat);
            SnKey key{s, chunk.j};
            auto it = sn.find(key);
            if (it == sn.end())
                it = sn.emplace(key, Mat::Zero(dims[target.j], dims[chunk.j])).first;
            it->second.block(target.offset, chunk.offset, target.size, chunk.size) = local;
        }
    }
    for (const auto& [key, mat] : edges)
        out.set_edge(key.arrow, key.position, key.source, mat);
    for (const auto& [key, mat] : sn)
        out.set_sn(key.adjacent, key.source, mat);
    return out;
}

WreathModule build_outer_tensor(const Params& params, const std::vector<OuterBlock>& blocks)
{
    if (!params.nu.is_zero())
        throw ModuleError("outer tensor construction requires nu = 0");
    for (std::size_t a = 0; a < blocks.size(); ++a)
    {
        if (blocks[a].y.params().lambda != params.lambda)
            throw ModuleError("block module has a different lambda");
        for (std::size_t b = a + 1; b < blocks.size(); ++b)
        {
            if (blocks[a].y == blocks[b].y)
                throw ModuleError("block modules must be pairwise distinct");
        }
    }
    return graded_induction(params, blocks);
}

WreathModule build_induced_zero_e(const Params& params, const std::vector<ZeroBlock>& blocks)
{
    Params single = params;
    single.n = 1;
    std::vector<OuterBlock> outer;
    std::set<int> seen;
    for (const auto& b : blocks)
    {
        if (b.vertex < 0 || b.vertex >= params.quiver.num_vertices())
            throw ModuleError("unknown vertex in induction data");
        if (!seen.insert(b.vertex).second)
            throw ModuleError("induction vertices must be pairwise distinct");
        outer.push_back({simple_module(single, b.vertex), b.x.degree, b.x});
    }
    return graded_induction(params, outer);
}

}   // namespace wreath
