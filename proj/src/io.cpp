#include "wreath/io.hpp"

#include <fstream>
#include <sstream>

namespace wreath {

namespace {

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw FormatError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string text(const json& j)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_number_integer())
        return std::to_string(j.get<long long>());
    throw FormatError("expected a scalar string");
}

Scalar scalar(const json& j, int m)
{
    try
    {
        return parse_scalar(text(j), m);
    }
    catch (const ScalarParseError& e)
    {
        throw FormatError(e.what());
    }
}

int integer(const json& j, const char* what)
{
    if (!j.is_number_integer())
        throw FormatError(std::string(what) + " must be an integer");
    return j.get<int>();
}

}   // namespace

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open " + path);
    try
    {
        return json::parse(in);
    }
    catch (const json::parse_error& e)
    {
        throw FormatError(path + ": " + e.what());
    }
}

std::string dump_canonical(const json& j)
{
    return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path);
    if (!out)
        throw FormatError("cannot write " + path);
    out << content;
}

Quiver quiver_from_json(const json& j)
{
    std::vector<std::string> vertices;
    std::vector<EdgeSpec> edges;
    try
    {
        for (const auto& v : field(j, "vertices"))
            vertices.push_back(v.get<std::string>());
        for (const auto& e : field(j, "edges"))
            edges.push_back({field(e, "name").get<std::string>(), field(e, "tail").get<std::string>(),
                             field(e, "head").get<std::string>()});
    }
    catch (const json::type_error& e)
    {
        throw FormatError(e.what());
    }
    try
    {
        return Quiver(vertices, edges);
    }
    catch (const QuiverError& e)
    {
        throw FormatError(e.what());
    }
}

json quiver_to_json(const Quiver& q)
{
    json edges = json::array();
    for (const Edge& e : q.edges())
        edges.push_back({{"name", e.name}, {"tail", q.vertex_id(e.tail)}, {"head", q.vertex_id(e.head)}});
    return {{"vertices", q.vertices()}, {"edges", edges}};
}

Weight weight_from_json(const Quiver& q, const json& j, int m)
{
    if (!j.is_object())
        throw FormatError("weight must be an object");
    Weight lambda(q.num_vertices(), Scalar(0));
    std::vector<bool> seen(q.num_vertices(), false);
    for (const auto& [key, value] : j.items())
    {
        int v;
        try
        {
            v = q.vertex_index(key);
        }
        catch (const QuiverError& e)
        {
            throw FormatError(e.what());
        }
        lambda[v] = scalar(value, m);
        seen[v] = true;
    }
    for (int v = 0; v < q.num_vertices(); ++v)
    {
        if (!seen[v])
            throw FormatError("weight has no entry for vertex " + q.vertex_id(v));
    }
    return lambda;
}

json weight_to_json(const Quiver& q, const Weight& lambda)
{
    json out = json::object();
    for (int v = 0; v < q.num_vertices(); ++v)
        out[q.vertex_id(v)] = lambda.at(v).str();
    return out;
}

Params params_from_json(const Quiver& q, const json& j)
{
    Params p;
    p.quiver = q;
    p.n = integer(field(j, "n"), "n");
    if (p.n < 1)
        throw FormatError("n must be positive");
    p.cyclotomic_order = j.contains("cyclotomic_order") ? integer(j.at("cyclotomic_order"), "cyclotomic_order") : 1;
    if (p.cyclotomic_order < 1)
        throw FormatError("cyclotomic_order must be positive");
    p.lambda = weight_from_json(q, field(j, "lambda"), p.cyclotomic_order);
    p.nu = scalar(field(j, "nu"), p.cyclotomic_order);
    return p;
}

json params_to_json(const Params& p)
{
    return {{"n", p.n},
            {"lambda", weight_to_json(p.quiver, p.lambda)},
            {"nu", p.nu.str()},
            {"cyclotomic_order", p.cyclotomic_order}};
}

Tuple tuple_from_json(const Quiver& q, const json& j)
{
    if (!j.is_array())
        throw FormatError("tuple must be an array");
    Tuple t;
    for (const auto& v : j)
    {
        try
        {
            t.push_back(q.vertex_index(text(v)));
        }
        catch (const QuiverError& e)
        {
            throw FormatError(e.what());
        }
    }
    return t;
}

json tuple_to_json(const Quiver& q, const Tuple& t)
{
    json out = json::array();
    for (int v : t)
        out.push_back(q.vertex_id(v));
    return out;
}

Mat matrix_from_json(const json& j, int m)
{
    if (!j.is_array())
        throw FormatError("matrix must be an array of rows");
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    const Eigen::Index cols = rows > 0 && j[0].is_array() ? static_cast<Eigen::Index>(j[0].size()) : 0;
    Mat a(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
    {
        if (!j[r].is_array() || static_cast<Eigen::Index>(j[r].size()) != cols)
            throw FormatError("matrix rows have different lengths");
        for (Eigen::Index c = 0; c < cols; ++c)
            a(r, c) = scalar(j[r][c], m);
    }
    return a;
}

json matrix_to_json(const Mat& a)
{
    json out = json::array();
    for (Eigen::Index r = 0; r < a.rows(); ++r)
    {
        json row = json::array();
        for (Eigen::Index c = 0; c < a.cols(); ++c)
            row.push_back(a(r, c).str());
        out.push_back(row);
    }
    return out;
}

WreathModule module_from_json(const Quiver& q, const json& j)
{
    WreathModule v(params_from_json(q, field(j, "params")));
    const int m = v.params().cyclotomic_order;
    try
    {
        if (j.contains("support"))
            for (const auto& s : j.at("support"))
            {
                const Tuple t = tuple_from_json(q, field(s, "tuple"));
                const int d = integer(field(s, "dim"), "dim");
                if (v.dim(t) != 0)
                    throw FormatError("tuple " + tuple_string(q, t) + " listed twice");
                v.set_dim(t, d);
            }
        if (j.contains("edge_actions"))
            for (const auto& e : j.at("edge_actions"))
            {
                int arrow;
                try
                {
                    arrow = q.arrow_index(field(e, "edge").get<std::string>());
                }
                catch (const QuiverError& err)
                {
                    throw FormatError(err.what());
                }
                const int position = integer(field(e, "position"), "position") - 1;
                if (position < 0 || position >= v.n())
                    throw FormatError("position out of range");
                const Tuple t = tuple_from_json(q, field(e, "source_tuple"));
                v.set_edge(arrow, position, t, matrix_from_json(field(e, "matrix"), m));
            }
        if (j.contains("sn_actions"))
            for (const auto& s : j.at("sn_actions"))
            {
                const int adjacent = integer(field(s, "adjacent"), "adjacent") - 1;
                if (adjacent < 0 || adjacent + 1 >= v.n())
                    throw FormatError("adjacent generator out of range");
                const Tuple t = tuple_from_json(q, field(s, "source_tuple"));
                v.set_sn(adjacent, t, matrix_from_json(field(s, "matrix"), m));
            }
    }
    catch (const ModuleError& e)
    {
        throw FormatError(e.what());
    }
    catch (const json::type_error& e)
    {
        throw FormatError(e.what());
    }
    return v;
}

json module_to_json(const WreathModule& v)
{
    const Quiver& q = v.quiver();
    json support = json::array();
    for (const auto& [t, d] : v.support())
        support.push_back({{"tuple", tuple_to_json(q, t)}, {"dim", d}});
    json edges = json::array();
    for (const auto& [key, a] : v.edge_actions())
        edges.push_back({{"edge", q.arrow_name(key.arrow)},
                         {"position", key.position + 1},
                         {"source_tuple", tuple_to_json(q, key.source)},
                         {"matrix", matrix_to_json(a)}});
    json sn = json::array();
    for (const auto& [key, a] : v.sn_actions())
        sn.push_back({{"adjacent", key.adjacent + 1},
                      {"source_tuple", tuple_to_json(q, key.source)},
                      {"matrix", matrix_to_json(a)}});
    return {{"params", params_to_json(v.params())}, {"support", support}, {"edge_actions", edges}, {"sn_actions", sn}};
}

Partition partition_from_json(const json& j)
{
    if (!j.is_array())
        throw FormatError("partition must be an array");
    Partition mu;
    for (const auto& x : j)
        mu.push_back(integer(x, "partition part"));
    try
    {
        check_partition(mu);
    }
    catch (const std::invalid_argument& e)
    {
        throw FormatError(e.what());
    }
    return mu;
}

GammaData gamma_from_json(const json& j)
{
    const std::string type = field(j, "type").get<std::string>();
    if (type == "cyclic")
    {
        const int m = integer(field(j, "m"), "m");
        if (m < 1)
            throw FormatError("m must be positive");
        return cyclic_gamma(m);
    }
    if (type != "table")
        throw FormatError("unknown group type '" + type + "'");
    GammaData g;
    g.order = integer(field(j, "order"), "order");
    g.cyclotomic_order = j.contains("m") ? integer(j.at("m"), "m") : 1;
    const std::string identity = j.contains("identity") ? j.at("identity").get<std::string>() : "1";
    const json& table = field(j, "table");
    if (!table.is_object() || !table.contains(identity))
        throw FormatError("table has no column for the identity '" + identity + "'");
    g.elements.push_back(identity);
    for (const auto& [key, value] : table.items())
    {
        if (key != identity)
            g.elements.push_back(key);
    }
    const std::size_t rows = table.at(identity).size();
    g.table.assign(rows, {});
    for (const std::string& e : g.elements)
    {
        const json& column = table.at(e);
        if (!column.is_array() || column.size() != rows)
            throw FormatError("table column '" + e + "' has the wrong length");
        for (std::size_t r = 0; r < rows; ++r)
            g.table[r].push_back(scalar(column[r], g.cyclotomic_order));
    }
    try
    {
        g.check();
    }
    catch (const SraError& e)
    {
        throw FormatError(e.what());
    }
    return g;
}

SraParams sra_params_from_json(const GammaData& g, const json& j)
{
    SraParams p;
    p.t = scalar(field(j, "t"), g.cyclotomic_order);
    p.k = scalar(field(j, "k"), g.cyclotomic_order);
    if (j.contains("c"))
    {
        if (!j.at("c").is_object())
            throw FormatError("c must be an object");
        for (const auto& [key, value] : j.at("c").items())
        {
            try
            {
                g.element_index(key);
            }
            catch (const SraError& e)
            {
                throw FormatError(e.what());
            }
            p.c[key] = scalar(value, g.cyclotomic_order);
        }
    }
    return p;
}

}   // namespace wreath
