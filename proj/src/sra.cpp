#include "wreath/sra.hpp"

#include <algorithm>
#include <set>

namespace wreath {

std::vector<Scalar> GammaData::dims() const
{
    std::vector<Scalar> out;
    for (const auto& row : table)
        out.push_back(row.at(0));
    return out;
}

int GammaData::element_index(const std::string& id) const
{
    auto it = std::find(elements.begin(), elements.end(), id);
    if (it == elements.end())
        throw SraError("unknown group element '" + id + "'");
    return static_cast<int>(it - elements.begin());
}

void GammaData::check() const
{
    if (elements.empty() || table.empty())
        throw SraError("empty character table");
    if (static_cast<long>(elements.size()) != order)
        throw SraError("character table needs one column per group element");
    Scalar squares = 0;
    for (const auto& row : table)
    {
        if (row.size() != elements.size())
            throw SraError("character table row has the wrong length");
        const Scalar& d = row[0];
        if (!d.is_rational() || d.rational() <= 0 || denominator(d.rational()) != 1)
            throw SraError("identity column must hold positive integers");
        squares += d * d;
    }
    if (squares != Scalar(order))
        throw SraError("sum of squared dimensions differs from the group order");
}

GammaData cyclic_gamma(int m)
{
    if (m < 1)
        throw SraError("cyclic group order must be positive");
    GammaData g;
    g.order = m;
    g.cyclotomic_order = m;
    for (int s = 0; s < m; ++s)
        g.elements.push_back("g" + std::to_string(s));
    for (int j = 0; j < m; ++j)
    {
        std::vector<Scalar> row;
        for (int s = 0; s < m; ++s)
            row.push_back(Scalar::zeta(m, static_cast<long>(j) * s));
        g.table.push_back(std::move(row));
    }
    return g;
}

Quiver mckay_quiver_cyclic(int m)
{
    if (m < 2)
        throw SraError("the cyclic McKay quiver needs m >= 2");
    std::vector<std::string> vertices;
    std::vector<EdgeSpec> edges;
    for (int i = 0; i < m; ++i)
        vertices.push_back(std::to_string(i));
    if (m == 2)
    {
        edges.push_back({"a0", "0", "1"});
        edges.push_back({"a1", "0", "1"});
    }
    else
    {
        for (int i = 0; i < m; ++i)
            edges.push_back({"a" + std::to_string(i), std::to_string(i), std::to_string((i + 1) % m)});
    }
    return Quiver(vertices, edges);
}

void check_class_function(const GammaData& g, const SraParams& p)
{
    const int identity = 0;
    std::vector<Scalar> coeff(g.elements.size(), Scalar(0));
    for (const auto& [id, value] : p.c)
    {
        const int e = g.element_index(id);
        if (e == identity)
            throw SraError("c has no identity component");
        coeff[e] = value;
    }
    for (std::size_t a = 0; a < g.elements.size(); ++a)
        for (std::size_t b = a + 1; b < g.elements.size(); ++b)
        {
            bool same_class = true;
            for (const auto& row : g.table)
                same_class &= row[a] == row[b];
            if (same_class && coeff[a] != coeff[b])
                throw SraError("c is not constant on the class of " + g.elements[a]);
        }
}

QuiverParams translate_params(const GammaData& g, const SraParams& p)
{
    g.check();
    check_class_function(g, p);
    QuiverParams out;
    for (const auto& row : g.table)
    {
        Scalar value = p.t * row[0];
        for (const auto& [id, coeff] : p.c)
            value += coeff * row[g.element_index(id)];
        out.lambda.push_back(value);
    }
    out.nu = p.k * Scalar(g.order) / Scalar(2);
    return out;
}

std::vector<Scalar> fourier_inverse_cyclic(int m, const Scalar& t, const Weight& lambda)
{
    if (static_cast<int>(lambda.size()) != m)
        throw SraError("weight length differs from m");
    std::vector<Scalar> c(m, Scalar(0));
    for (int s = 0; s < m; ++s)
    {
        for (int i = 0; i < m; ++i)
            c[s] += (lambda[i] - t) * Scalar::zeta(m, -static_cast<long>(i) * s);
        c[s] /= Scalar(m);
    }
    if (!c[0].is_zero())
        throw SraError("weight is not of the form t + c for this t");
    c.erase(c.begin());
    return c;
}

DeformReport deformability_report(const Quiver& q, const DeformRequest& request)
{
    const int nv = q.num_vertices();
    if (static_cast<int>(request.lambda0.size()) != nv || static_cast<int>(request.lambda.size()) != nv)
        throw SraError("weight length differs from the number of vertices");
    DeformReport out;
    out.word = validate_word(q, request.lambda0, request.word);
    if (!out.word.pass)
        out.notes.push_back("word fails at step " + std::to_string(out.word.failed_at));

    int n = 0;
    std::set<int> seen;
    for (const DeformBlock& block : request.blocks)
    {
        check_partition(block.diagram);
        n += partition_size(block.diagram);
        if (static_cast<int>(block.alpha.size()) != nv)
            throw SraError("dimension vector length differs from the number of vertices");
        DeformBlockReport r;
        const ContentData cd = contents(block.diagram);
        r.rectangle = cd.rectangle;
        r.a = cd.height;
        r.b = cd.width;
        if (!r.rectangle)
            out.condition_i = false;

        const DimVector moved = apply_word(q, request.word, block.alpha);
        int support = -1;
        bool coordinate = true;
        for (int v = 0; v < nv; ++v)
        {
            if (moved[v] == 0)
                continue;
            if (moved[v] != 1 || support >= 0)
                coordinate = false;
            support = v;
        }
        if (coordinate && support >= 0)
            r.vertex = support;
        else
        {
            out.condition_ii = false;
            out.notes.push_back("w(alpha) is not a coordinate vector");
        }
        r.base_vanishes = pairing(request.lambda0, block.alpha).is_zero();
        r.pairing = pairing(request.lambda, block.alpha);
        if (r.rectangle)
            r.weight_ok = r.pairing == Scalar(r.a - r.b) * request.nu;
        if (!r.weight_ok)
            out.condition_iii = false;
        out.blocks.push_back(r);
    }

    for (std::size_t l = 0; l < out.blocks.size(); ++l)
    {
        const auto& v = out.blocks[l].vertex;
        if (!v)
            continue;
        if (q.has_loop(*v))
        {
            out.condition_ii = false;
            out.notes.push_back("vertex " + q.vertex_id(*v) + " carries a loop");
        }
        if (!seen.insert(*v).second)
        {
            out.condition_ii = false;
            out.notes.push_back("vertex " + q.vertex_id(*v) + " is repeated");
        }
        for (std::size_t m = l + 1; m < out.blocks.size(); ++m)
        {
            const auto& u = out.blocks[m].vertex;
            if (u && *u != *v && q.adjacent(*u, *v))
            {
                out.condition_ii = false;
                out.notes.push_back("vertices " + q.vertex_id(*v) + " and " + q.vertex_id(*u) + " are adjacent");
            }
        }
    }

    Weight running(nv);
    for (int v = 0; v < nv; ++v)
        running[v] = request.lambda0[v] + request.lambda[v];
    for (std::size_t g = 0; g < request.word.size(); ++g)
    {
        const int j = request.word[g];
        for (int p = 0; p < n && out.prefixes_generic; ++p)
        {
            const Scalar shift = Scalar(p) * request.nu;
            if ((running[j] + shift).is_zero() || (running[j] - shift).is_zero())
            {
                out.prefixes_generic = false;
                out.generic_failure_step = static_cast<int>(g) + 1;
                out.generic_failure_p = p;
            }
        }
        running = dual_reflection(q, j, running);
    }
    out.transported = running;
    return out;
}

}   // namespace wreath
