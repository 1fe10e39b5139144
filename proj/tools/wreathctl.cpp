// wreathctl: command-line front end for the wreath library.
//
// Exit codes: 0 pass, 1 domain failure, 2 usage or parse error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wreath/cube.hpp"
#include "wreath/io.hpp"
#include "wreath/reflect.hpp"
#include "wreath/sra.hpp"

using namespace wreath;

namespace {

struct UsageError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

struct Options
{
    std::string quiver;
    std::string params;
    std::string out;
    std::string module;
    std::string vertex;
    std::string word;
    bool has_word = false;
    bool json_output = false;
    std::string blocks;
    std::string gamma;
    std::string sra;
    std::string request;
};

Quiver load_quiver(const Options& o)
{
    if (o.quiver.empty())
        throw UsageError("--quiver is required");
    return quiver_from_json(read_json_file(o.quiver));
}

Params load_params(const Options& o, const Quiver& q)
{
    if (o.params.empty())
        throw UsageError("--params is required");
    return params_from_json(q, read_json_file(o.params));
}

WreathModule load_module(const Options& o, const Quiver& q)
{
    if (o.module.empty())
        throw UsageError("a module file is required");
    return module_from_json(q, read_json_file(o.module));
}

int vertex_arg(const Options& o, const Quiver& q)
{
    if (o.vertex.empty())
        throw UsageError("--vertex is required");
    try
    {
        return q.vertex_index(o.vertex);
    }
    catch (const QuiverError& e)
    {
        throw FormatError(e.what());
    }
}

std::vector<int> word_arg(const std::string& text, const Quiver& q)
{
    std::istringstream in(text);
    std::vector<int> word;
    std::string id;
    while (in >> id)
    {
        try
        {
            word.push_back(q.vertex_index(id));
        }
        catch (const QuiverError& e)
        {
            throw FormatError(e.what());
        }
    }
    return word;
}

std::string partition_string(const Partition& mu)
{
    std::string out = "(";
    for (std::size_t k = 0; k < mu.size(); ++k)
        out += (k ? "," : "") + std::to_string(mu[k]);
    return out + ")";
}

std::string dims_string(const Quiver& q, const std::map<Tuple, int>& dims)
{
    std::string out;
    for (const auto& [j, d] : dims)
        out += (out.empty() ? "" : " ") + tuple_string(q, j) + ":" + std::to_string(d);
    return out.empty() ? "0" : out;
}

std::string weight_string(const Weight& lambda)
{
    std::string out = "(";
    for (std::size_t v = 0; v < lambda.size(); ++v)
        out += (v ? ", " : "") + lambda[v].str();
    return out + ")";
}

void emit_module(const Options& o, const WreathModule& v)
{
    const std::string text = dump_canonical(module_to_json(v));
    if (o.out.empty())
        std::cout << text;
    else
        write_text_file(o.out, text);
}

int cmd_verify(const Options& o)
{
    const Quiver q = load_quiver(o);
    const WreathModule v = load_module(o, q);
    const VerifyReport report = verify_relations(v);
    for (const std::string& s : report.structural)
        std::cout << "structure: " << s << "\n";
    if (!report.structural.empty())
        return 2;
    for (const RelationFailure& f : report.failures)
        std::cout << describe(q, f) << "\n";
    std::cout << (report.ok() ? "PASS" : "FAIL") << "\n";
    return report.ok() ? 0 : 1;
}

int cmd_reflect(const Options& o)
{
    const Quiver q = load_quiver(o);
    const WreathModule v = load_module(o, q);
    std::ostream& log = o.out.empty() ? std::cerr : std::cout;
    if (o.has_word == !o.vertex.empty())
        throw UsageError("reflect needs exactly one of --vertex and --word");
    if (!o.vertex.empty())
    {
        const int i = vertex_arg(o, q);
        const ReflectionOutput r = reflection_functor(v, i);
        log << "start " << dims_string(q, v.support()) << "\n";
        for (const auto& [j, amb] : r.ambient)
        {
            const auto it = r.embedding.find(j);
            const long k = it == r.embedding.end() ? 0 : it->second.cols();
            log << "tuple " << tuple_string(q, j) << ": ambient " << amb << ", kernel " << k << "\n";
        }
        log << "F_" << q.vertex_id(i) << " " << dims_string(q, r.module.support()) << "\n";
        log << "lambda " << weight_string(r.module.params().lambda) << "\n";
        emit_module(o, r.module);
        return 0;
    }
    const std::vector<int> word = word_arg(o.word, q);
    const WordResult r = apply_functor_word(v, word);
    log << "start " << dims_string(q, r.trace.front()) << "\n";
    for (std::size_t g = 0; g < word.size(); ++g)
        log << "F_" << q.vertex_id(word[g]) << " " << dims_string(q, r.trace[g + 1]) << "\n";
    log << "lambda " << weight_string(r.module.params().lambda) << "\n";
    emit_module(o, r.module);
    return 0;
}

int cmd_cohomology(const Options& o)
{
    const Quiver q = load_quiver(o);
    const WreathModule v = load_module(o, q);
    const int i = vertex_arg(o, q);
    json report = json::array();
    std::vector<long> totals;
    for (const TupleCube& tc : module_cube(v, i))
    {
        const Cohomology h = cohomology(complex_from_cube(tc.cube));
        json entry = {{"tuple", tuple_to_json(q, tc.j)}, {"dims", h.dims}};
        report.push_back(entry);
        if (!o.json_output)
        {
            std::cout << "tuple " << tuple_string(q, tc.j) << ":";
            for (std::size_t r = 0; r < h.dims.size(); ++r)
                std::cout << " H^" << r << "=" << h.dims[r];
            std::cout << "\n";
        }
        if (totals.size() < h.dims.size())
            totals.resize(h.dims.size(), 0);
        for (std::size_t r = 0; r < h.dims.size(); ++r)
            totals[r] += h.dims[r];
    }
    if (o.json_output)
        std::cout << dump_canonical(json{{"tuples", report}, {"totals", totals}});
    else if (!totals.empty())
    {
        std::cout << "total:";
        for (std::size_t r = 0; r < totals.size(); ++r)
            std::cout << " H^" << r << "=" << totals[r];
        std::cout << "\n";
    }
    return 0;
}

int cmd_euler(const Options& o)
{
    const Quiver q = load_quiver(o);
    const WreathModule v = load_module(o, q);
    const int i = vertex_arg(o, q);
    const EulerData e = euler_characteristic(v, i);
    if (o.json_output)
    {
        json tuples = json::array();
        for (const auto& [j, chi] : e.per_tuple)
            tuples.push_back({{"tuple", tuple_to_json(q, j)}, {"euler", chi}});
        json classes = json::array();
        for (const auto& [mu, value] : e.character)
            classes.push_back({{"class", mu}, {"value", value.str()}});
        std::cout << dump_canonical(json{{"tuples", tuples}, {"total", e.total}, {"character", classes}});
        return 0;
    }
    for (const auto& [j, chi] : e.per_tuple)
        std::cout << "tuple " << tuple_string(q, j) << ": " << chi << "\n";
    if (e.per_tuple.empty())
        return 0;
    std::cout << "total: " << e.total << "\n";
    for (const auto& [mu, value] : e.character)
        std::cout << "class " << partition_string(mu) << ": " << value.str() << "\n";
    return 0;
}

int cmd_generic(const Options& o)
{
    const Quiver q = load_quiver(o);
    const Params p = load_params(o, q);
    const int i = vertex_arg(o, q);
    const GenericCheck g = genericity(p, i);
    if (g.generic)
    {
        std::cout << "generic\n";
        return 0;
    }
    std::cout << "fails at p=" << g.p << " (" << (g.branch > 0 ? "plus" : "minus") << " branch)\n";
    return 1;
}

int cmd_induce(const Options& o)
{
    const Quiver q = load_quiver(o);
    const Params p = load_params(o, q);
    if (o.blocks.empty())
        throw UsageError("--blocks is required");
    json spec;
    try
    {
        spec = json::parse(o.blocks);
    }
    catch (const json::parse_error& e)
    {
        throw FormatError(e.what());
    }
    if (!spec.is_array())
        throw FormatError("--blocks must be a JSON array");
    std::vector<ZeroBlock> blocks;
    for (const auto& b : spec)
    {
        if (!b.is_object() || !b.contains("vertex") || !b.contains("partition"))
            throw FormatError("each block needs a vertex and a partition");
        int vertex;
        try
        {
            vertex = q.vertex_index(b.at("vertex").get<std::string>());
        }
        catch (const QuiverError& e)
        {
            throw FormatError(e.what());
        }
        blocks.push_back({vertex, seminormal_rep(partition_from_json(b.at("partition")))});
    }
    const WreathModule v = build_induced_zero_e(p, blocks);
    emit_module(o, v);
    return 0;
}

int cmd_translate(const Options& o)
{
    if (o.gamma.empty() || o.sra.empty())
        throw UsageError("translate needs --gamma and --sra");
    const GammaData g = gamma_from_json(read_json_file(o.gamma));
    const SraParams p = sra_params_from_json(g, read_json_file(o.sra));
    const QuiverParams r = translate_params(g, p);
    json lambda = json::object();
    for (std::size_t v = 0; v < r.lambda.size(); ++v)
    {
        std::cout << "lambda_" << v << " = " << r.lambda[v].str() << "\n";
        lambda[std::to_string(v)] = r.lambda[v].str();
    }
    std::cout << "nu = " << r.nu.str() << "\n";
    if (!o.out.empty())
        write_text_file(o.out, dump_canonical(json{{"lambda", lambda}, {"nu", r.nu.str()}}));
    return 0;
}

int cmd_conditions(const Options& o)
{
    const Quiver q = load_quiver(o);
    if (o.request.empty())
        throw UsageError("--request is required");
    const json j = read_json_file(o.request);
    const int m = j.contains("cyclotomic_order") ? j.at("cyclotomic_order").get<int>() : 1;
    DeformRequest req;
    req.lambda0 = weight_from_json(q, j.at("lambda0"), m);
    req.lambda = weight_from_json(q, j.at("lambda"), m);
    req.nu = parse_scalar(j.at("nu").get<std::string>(), m);
    if (j.contains("word"))
        for (const auto& w : j.at("word"))
            req.word.push_back(q.vertex_index(w.get<std::string>()));
    for (const auto& b : j.at("blocks"))
    {
        DeformBlock block;
        block.diagram = partition_from_json(b.at("partition"));
        block.alpha.assign(q.num_vertices(), 0);
        for (const auto& [key, value] : b.at("alpha").items())
            block.alpha[q.vertex_index(key)] = value.get<long>();
        req.blocks.push_back(block);
    }
    const DeformReport r = deformability_report(q, req);
    auto flag = [](bool ok) { return ok ? "PASS" : "FAIL"; };
    std::cout << "word: " << flag(r.word.pass) << "\n";
    for (std::size_t l = 0; l < r.blocks.size(); ++l)
    {
        const DeformBlockReport& b = r.blocks[l];
        std::cout << "block " << l + 1 << ": ";
        if (b.rectangle)
            std::cout << "rectangle " << b.a << "x" << b.b;
        else
            std::cout << "not a rectangle";
        std::cout << ", vertex " << (b.vertex ? q.vertex_id(*b.vertex) : std::string("none"));
        std::cout << ", lambda.alpha = " << b.pairing.str() << "\n";
    }
    std::cout << "(i) rectangles: " << flag(r.condition_i) << "\n";
    std::cout << "(ii) separated vertices: " << flag(r.condition_ii) << "\n";
    std::cout << "(iii) weights: " << flag(r.condition_iii) << "\n";
    std::cout << "prefix genericity: " << flag(r.prefixes_generic);
    if (!r.prefixes_generic)
        std::cout << " (step " << r.generic_failure_step << ", p=" << r.generic_failure_p << ")";
    std::cout << "\n";
    for (const std::string& note : r.notes)
        std::cout << "note: " << note << "\n";
    std::cout << "overall: " << flag(r.pass()) << "\n";
    return r.pass() ? 0 : 1;
}

int cmd_word_validate(const Options& o)
{
    const Quiver q = load_quiver(o);
    const Params p = load_params(o, q);
    const std::vector<int> word = word_arg(o.word, q);
    const WordReport r = validate_word(q, p.lambda, word);
    for (std::size_t g = 0; g < r.steps.size(); ++g)
    {
        const WordStep& s = r.steps[g];
        std::cout << "step " << g + 1 << ": vertex " << q.vertex_id(s.vertex) << ", pivot " << s.pivot.str()
                  << (s.nonzero ? "" : " (zero)") << ", weight " << weight_string(s.weight) << "\n";
    }
    std::cout << "final " << weight_string(r.final_weight) << "\n";
    std::cout << (r.pass ? "PASS" : "FAIL") << "\n";
    return r.pass ? 0 : 1;
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Modules over deformed wreath-product algebras and their reflection functors"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--quiver", o.quiver, "Quiver JSON file");
    app.add_option("--params", o.params, "Parameter JSON file");
    app.add_option("--out", o.out, "Output file");

    auto* verify = app.add_subcommand("verify", "Check the defining relations");
    verify->add_option("module", o.module)->required();

    auto* reflect = app.add_subcommand("reflect", "Apply F_i or a word of reflection functors");
    reflect->add_option("module", o.module)->required();
    reflect->add_option("--vertex", o.vertex);
    reflect->add_option("--word", o.word)->expected(1)->allow_extra_args(false);

    auto* coh = app.add_subcommand("cohomology", "Cohomology of the cube complexes");
    coh->add_option("module", o.module)->required();
    coh->add_option("--vertex", o.vertex)->required();
    coh->add_flag("--json", o.json_output);

    auto* euler = app.add_subcommand("euler", "Euler characteristics and S_n character");
    euler->add_option("module", o.module)->required();
    euler->add_option("--vertex", o.vertex)->required();
    euler->add_flag("--json", o.json_output);

    auto* generic = app.add_subcommand("generic", "Check lambda_i +- p nu != 0");
    generic->add_option("--vertex", o.vertex)->required();

    auto* induce = app.add_subcommand("induce", "Induced module with zero edge actions");
    induce->add_option("--blocks", o.blocks, "JSON array of {vertex, partition}")->required();

    auto* translate = app.add_subcommand("translate", "Quiver parameters from (t, k, c)");
    translate->add_option("--gamma", o.gamma)->required();
    translate->add_option("--sra", o.sra)->required();

    auto* conditions = app.add_subcommand("conditions", "Deformation conditions report");
    conditions->add_option("--request", o.request)->required();

    auto* wv = app.add_subcommand("word-validate", "Check a reflection word against lambda");
    wv->add_option("--word", o.word)->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try
    {
        if (*verify)
            return cmd_verify(o);
        if (*reflect)
        {
            o.has_word = reflect->count("--word") > 0;
            return cmd_reflect(o);
        }
        if (*coh)
            return cmd_cohomology(o);
        if (*euler)
            return cmd_euler(o);
        if (*generic)
            return cmd_generic(o);
        if (*induce)
            return cmd_induce(o);
        if (*translate)
            return cmd_translate(o);
        if (*conditions)
            return cmd_conditions(o);
        if (*wv)
            return cmd_word_validate(o);
    }
    catch (const std::domain_error& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    catch (const ResourceLimit& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    catch (const ReflectionError& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    catch (const ModuleError& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
