#include "wreath/quiver.hpp"

#include <algorithm>
#include <numeric>

namespace wreath {

Quiver::Quiver(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges) :
    vertices_(std::move(vertices))
{
    std::set<std::string> seen;
    for (const auto& v : vertices_)
    {
        if (v.empty())
            throw QuiverError("empty vertex id");
        if (!seen.insert(v).second)
            throw QuiverError("duplicate vertex '" + v + "'");
    }
    std::set<std::string> names;
    for (const auto& e : edges)
    {
        if (e.name.empty() || e.name.back() == '*')
            throw QuiverError("bad edge name '" + e.name + "' (names ending in '*' are reserved)");
        if (!names.insert(e.name).second)
            throw QuiverError("duplicate edge name '" + e.name + "'");
        edges_.push_back({e.name, vertex_index(e.tail), vertex_index(e.head)});
    }
}

int Quiver::vertex_index(const std::string& id) const
{
    auto it = std::find(vertices_.begin(), vertices_.end(), id);
    if (it == vertices_.end())
        throw UnknownVertex("unknown vertex '" + id + "'");
    return static_cast<int>(it - vertices_.begin());
}

int Quiver::edge_index(const std::string& name) const
{
    for (int e = 0; e < num_edges(); ++e)
    {
        if (edges_[e].name == name)
            return e;
    }
    throw QuiverError("unknown edge '" + name + "'");
}

int Quiver::arrow_tail(int arrow) const
{
    const Edge& e = edges_.at(edge_of(arrow));
    return in_q(arrow) ? e.tail : e.head;
}

int Quiver::arrow_head(int arrow) const
{
    const Edge& e = edges_.at(edge_of(arrow));
    return in_q(arrow) ? e.head : e.tail;
}

std::string Quiver::arrow_name(int arrow) const
{
    const Edge& e = edges_.at(edge_of(arrow));
    return in_q(arrow) ? e.name : e.name + "*";
}

int Quiver::arrow_index(const std::string& name) const
{
    if (!name.empty() && name.back() == '*')
        return 2 * edge_index(name.substr(0, name.size() - 1)) + 1;
    return 2 * edge_index(name);
}

bool Quiver::has_loop(int v) const
{
    return std::any_of(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.tail == v && e.head == v; });
}

bool Quiver::adjacent(int u, int v) const
{
    return std::any_of(edges_.begin(), edges_.end(), [u, v](const Edge& e) {
        return (e.tail == u && e.head == v) || (e.tail == v && e.head == u);
    });
}

bool Quiver::connected() const
{
    if (vertices_.empty())
        return true;
    std::vector<int> parent(num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : edges_)
        parent[find(e.tail)] = find(e.head);
    int root = find(0);
    for (int v = 1; v < num_vertices(); ++v)
    {
        if (find(v) != root)
            return false;
    }
    return true;
}

Quiver Quiver::reoriented(const std::set<int>& flips) const
{
    Quiver out = *this;
    for (int e : flips)
        std::swap(out.edges_.at(e).tail, out.edges_.at(e).head);
    return out;
}

bool operator==(const Quiver& a, const Quiver& b)
{
    if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size())
        return false;
    for (std::size_t e = 0; e < a.edges_.size(); ++e)
    {
        const Edge& x = a.edges_[e];
        const Edge& y = b.edges_[e];
        if (x.name != y.name || x.tail != y.tail || x.head != y.head)
            return false;
    }
    return true;
}

DimVector coordinate_vector(const Quiver& q, int i)
{
    DimVector out(q.num_vertices(), 0);
    out.at(i) = 1;
    return out;
}

namespace {

void check_size(const Quiver& q, std::size_t size)
{
    if (size != static_cast<std::size_t>(q.num_vertices()))
        throw UnknownVertex("vector length does not match the vertex set");
}

void check_loop_free(const Quiver& q, int i)
{
    if (i < 0 || i >= q.num_vertices())
        throw UnknownVertex("vertex index out of range");
    if (q.has_loop(i))
        throw EdgeLoop("edge-loop at vertex '" + q.vertex_id(i) + "'");
}

}   // namespace

long ringel_form(const Quiver& q, const DimVector& alpha, const DimVector& beta)
{
    check_size(q, alpha.size());
    check_size(q, beta.size());
    long out = 0;
    for (int v = 0; v < q.num_vertices(); ++v)
        out += alpha[v] * beta[v];
    for (const auto& e : q.edges())
        out -= alpha[e.tail] * beta[e.head];
    return out;
}

long symmetrized_form(const Quiver& q, const DimVector& alpha, const DimVector& beta)
{
    return ringel_form(q, alpha, beta) + ringel_form(q, beta, alpha);
}

DenseMatrix<long> cartan_matrix(const Quiver& q)
{
    const int n = q.num_vertices();
    DenseMatrix<long> c = DenseMatrix<long>::Zero(n, n);
    for (int v = 0; v < n; ++v)
        c(v, v) = 2;
    for (const auto& e : q.edges())
    {
        c(e.tail, e.head) -= 1;
        c(e.head, e.tail) -= 1;
    }
    return c;
}

DimVector simple_reflection(const Quiver& q, int i, const DimVector& alpha)
{
    check_loop_free(q, i);
    DimVector out = alpha;
    out[i] -= symmetrized_form(q, alpha, coordinate_vector(q, i));
    return out;
}

Weight dual_reflection(const Quiver& q, int i, const Weight& lambda)
{
    check_loop_free(q, i);
    check_size(q, lambda.size());
    const DimVector ei = coordinate_vector(q, i);
    Weight out = lambda;
    for (int j = 0; j < q.num_vertices(); ++j)
    {
        long c = symmetrized_form(q, ei, coordinate_vector(q, j));
        if (c != 0)
            out[j] -= Scalar(c) * lambda[i];
    }
    return out;
}

Scalar pairing(const Weight& lambda, const DimVector& alpha)
{
    if (lambda.size() != alpha.size())
        throw std::invalid_argument("pairing: size mismatch");
    Scalar out = 0;
    for (std::size_t k = 0; k < alpha.size(); ++k)
    {
        if (alpha[k] != 0)
            out += lambda[k] * Scalar(alpha[k]);
    }
    return out;
}

std::optional<DimVector> affine_data(const Quiver& q)
{
    const int n = q.num_vertices();
    if (n == 0 || !q.connected())
        return std::nullopt;
    for (int v = 0; v < n; ++v)
    {
        if (q.has_loop(v))
            return std::nullopt;
    }
    DenseMatrix<long> c = cartan_matrix(q);
    DenseMatrix<Rational> cr = c.cast<Rational>();
    DenseMatrix<Rational> radical = kernel_basis<Rational>(cr);
    if (radical.cols() != 1)
        return std::nullopt;

    // clear denominators, then divide by the content
    Integer lcm = 1;
    for (int v = 0; v < n; ++v)
    {
        Integer den = denominator(radical(v, 0));
        lcm = lcm / gcd(lcm, den) * den;
    }
    std::vector<Integer> entries(n);
    Integer content = 0;
    for (int v = 0; v < n; ++v)
    {
        Rational scaled = radical(v, 0) * Rational(lcm);
        entries[v] = numerator(scaled);
        content = gcd(content, abs(entries[v]));
    }
    bool any_pos = false, any_neg = false;
    for (auto& x : entries)
    {
        x /= content;
        any_pos |= x > 0;
        any_neg |= x < 0;
    }
    if (any_pos && any_neg)
        return std::nullopt;
    int pivot = -1;
    for (int v = 0; v < n && pivot < 0; ++v)
    {
        if (entries[v] != 0)
            pivot = v;
    }

    // positive semidefinite iff the principal submatrix avoiding `pivot` is positive definite
    DenseMatrix<Rational> sub(n - 1, n - 1);
    for (int r = 0, rr = 0; r < n; ++r)
    {
        if (r == pivot)
            continue;
        for (int s = 0, ss = 0; s < n; ++s)
        {
            if (s == pivot)
                continue;
            sub(rr, ss) = cr(r, s);
            ++ss;
        }
        ++rr;
    }
    for (int k = 0; k < n - 1; ++k)
    {
        if (sub(k, k) <= 0)
            return std::nullopt;
        for (int r = k + 1; r < n - 1; ++r)
        {
            Rational f = sub(r, k) / sub(k, k);
            for (int s = k; s < n - 1; ++s)
                sub(r, s) -= f * sub(k, s);
        }
    }

    DimVector delta(n);
    for (int v = 0; v < n; ++v)
        delta[v] = abs(entries[v]).convert_to<long>();
    return delta;
}

WordReport validate_word(const Quiver& q, const Weight& lambda, const std::vector<int>& word)
{
    check_size(q, lambda.size());
    for (int v : word)
        check_loop_free(q, v);
    WordReport report;
    Weight running = lambda;
    for (std::size_t g = 0; g < word.size(); ++g)
    {
        const int v = word[g];
        WordStep step;
        step.vertex = v;
        step.pivot = running[v];
        step.nonzero = !running[v].is_zero();
        running = dual_reflection(q, v, running);
        step.weight = running;
        if (!step.nonzero && report.pass)
        {
            report.pass = false;
            report.failed_at = static_cast<int>(g) + 1;
        }
        report.steps.push_back(std::move(step));
    }
    report.final_weight = running;
    return report;
}

DimVector apply_word(const Quiver& q, const std::vector<int>& word, DimVector alpha)
{
    for (int v : word)
        alpha = simple_reflection(q, v, alpha);
    return alpha;
}

}   // namespace wreath
