#include "wreath/reflect.hpp"

#include <algorithm>

namespace wreath {

std::vector<int> positions(PosSet d)
{
    std::vector<int> out;
    for (int p = 0; d >> p; ++p)
    {
        if (contains(d, p))
            out.push_back(p);
    }
    return out;
}

int BigSpace::index_of(const std::vector<int>& xi) const
{
    int idx = 0;
    for (int x : xi)
        idx = idx * radix + x;
    return idx;
}

SinkEngine::SinkEngine(const WreathModule& v, int vertex) : v_(v), i_(vertex)
{
    const Quiver& q = v_.quiver();
    if (vertex < 0 || vertex >= q.num_vertices())
        throw UnknownVertex("vertex index out of range");
    if (q.has_loop(vertex))
        throw EdgeLoop("edge-loop at vertex '" + q.vertex_id(vertex) + "'");
    for (int e = 0; e < q.num_edges(); ++e)
    {
        if (q.edge(e).tail == vertex)
            throw ReflectionError("vertex is not a sink");
        if (q.edge(e).head == vertex)
            r_.push_back(e);
    }
}

int SinkEngine::incoming_index(int edge) const
{
    auto it = std::find(r_.begin(), r_.end(), edge);
    return it == r_.end() ? -1 : static_cast<int>(it - r_.begin());
}

PosSet SinkEngine::delta(const Tuple& j) const
{
    PosSet d = 0;
    for (std::size_t p = 0; p < j.size(); ++p)
    {
        if (j[p] == i_)
            d = with(d, static_cast<int>(p));
    }
    return d;
}

BigSpace SinkEngine::space(const Tuple& j, PosSet d) const
{
    BigSpace s;
    s.j = j;
    s.d = d;
    s.pos = positions(d);
    s.radix = static_cast<int>(r_.size());
    const int k = static_cast<int>(s.pos.size());
    int count = 1;
    for (int t = 0; t < k; ++t)
        count *= s.radix;
    const Quiver& q = v_.quiver();
    std::vector<int> xi(k, 0);
    for (int idx = 0; idx < count; ++idx)
    {
        int rest = idx;
        for (int t = k - 1; t >= 0; --t)
        {
            xi[t] = rest % s.radix;
            rest /= s.radix;
        }
        Tuple summand = j;
        for (int t = 0; t < k; ++t)
            summand[s.pos[t]] = q.edge(r_[xi[t]]).tail;
        s.xis.push_back(xi);
        s.offsets.push_back(s.dim);
        s.dim += v_.dim(summand);
        s.summands.push_back(std::move(summand));
    }
    return s;
}

namespace {

int slot(const BigSpace& s, int p)
{
    auto it = std::find(s.pos.begin(), s.pos.end(), p);
    if (it == s.pos.end())
        throw std::invalid_argument("position not in D");
    return static_cast<int>(it - s.pos.begin());
}

std::vector<int> drop(const std::vector<int>& xi, int t)
{
    std::vector<int> out = xi;
    out.erase(out.begin() + t);
    return out;
}

void put(Mat& m, const BigSpace& rows, int row_block, const BigSpace& cols, int col_block, const Mat& block)
{
    if (block.size() == 0)
        return;
    m.block(rows.offsets[row_block], cols.offsets[col_block], block.rows(), block.cols()) = block;
}

}   // namespace

Mat SinkEngine::pi(const Tuple& j, PosSet d, int p) const
{
    const BigSpace src = space(j, d);
    const BigSpace dst = space(j, without(d, p));
    const int t = slot(src, p);
    Mat out = Mat::Zero(dst.dim, src.dim);
    for (std::size_t x = 0; x < src.xis.size(); ++x)
    {
        const int r = src.xis[x][t];
        const int y = dst.index_of(drop(src.xis[x], t));
        put(out, dst, y, src, static_cast<int>(x), v_.edge(2 * r_[r], p, src.summands[x]));
    }
    return out;
}

Mat SinkEngine::mu(const Tuple& j, PosSet d, int p) const
{
    const BigSpace src = space(j, without(d, p));
    const BigSpace dst = space(j, d);
    const int t = slot(dst, p);
    Mat out = Mat::Zero(dst.dim, src.dim);
    for (std::size_t x = 0; x < dst.xis.size(); ++x)
    {
        const int r = dst.xis[x][t];
        const int y = src.index_of(drop(dst.xis[x], t));
        put(out, dst, static_cast<int>(x), src, y, v_.edge(2 * r_[r] + 1, p, src.summands[y]));
    }
    return out;
}

Mat SinkEngine::sigma(const Perm& s, const Tuple& j, PosSet d) const
{
    PosSet sd = 0;
    for (int p : positions(d))
        sd = with(sd, s(p));
    const BigSpace src = space(j, d);
    const BigSpace dst = space(act(s, j), sd);
    const Perm inv = s.inverse();
    Mat out = Mat::Zero(dst.dim, src.dim);
    for (std::size_t x = 0; x < src.xis.size(); ++x)
    {
        std::vector<int> moved(dst.pos.size());
        for (std::size_t t = 0; t < dst.pos.size(); ++t)
            moved[t] = src.xis[x][slot(src, inv(dst.pos[t]))];
        put(out, dst, dst.index_of(moved), src, static_cast<int>(x), v_.perm(s, src.summands[x]));
    }
    return out;
}

Mat SinkEngine::case_one(int arrow, int l, const Tuple& j, PosSet d) const
{
    const Quiver& q = v_.quiver();
    if (q.arrow_tail(arrow) == i_ || q.arrow_head(arrow) == i_ || j.at(l) != q.arrow_tail(arrow))
        throw std::invalid_argument("case_one: arrow does not avoid the vertex");
    const BigSpace src = space(j, d);
    const BigSpace dst = space(v_.arrow_target(arrow, l, j), d);
    Mat out = Mat::Zero(dst.dim, src.dim);
    for (std::size_t x = 0; x < src.xis.size(); ++x)
        put(out, dst, static_cast<int>(x), src, static_cast<int>(x), v_.edge(arrow, l, src.summands[x]));
    return out;
}

namespace {

std::vector<int> insert_value(const BigSpace& full, int l, int r, const std::vector<int>& eta)
{
    std::vector<int> xi;
    std::size_t k = 0;
    for (int p : full.pos)
        xi.push_back(p == l ? r : eta[k++]);
    return xi;
}

}   // namespace

Mat SinkEngine::tau_upper(int r, int l, const Tuple& j, PosSet d) const
{
    if (!contains(d, l) || j.at(l) != i_)
        throw std::invalid_argument("tau: position not in D");
    const Tuple j2 = replace(j, l, v_.quiver().edge(r_.at(r)).tail);
    const BigSpace src = space(j, d);
    const BigSpace dst = space(j2, without(d, l));
    Mat out = Mat::Zero(dst.dim, src.dim);
    for (std::size_t y = 0; y < dst.xis.size(); ++y)
    {
        const int x = src.index_of(insert_value(src, l, r, dst.xis[y]));
        const int size = v_.dim(dst.summands[y]);
        put(out, dst, static_cast<int>(y), src, x, Mat::Identity(size, size));
    }
    return out;
}

Mat SinkEngine::tau_lower(int r, int l, const Tuple& j, PosSet d) const
{
    if (!contains(d, l) || j.at(l) != i_)
        throw std::invalid_argument("tau: position not in D");
    const Tuple j2 = replace(j, l, v_.quiver().edge(r_.at(r)).tail);
    const BigSpace src = space(j2, without(d, l));
    const BigSpace dst = space(j, d);
    Mat out = Mat::Zero(dst.dim, src.dim);
    for (std::size_t y = 0; y < src.xis.size(); ++y)
    {
        const int x = dst.index_of(insert_value(dst, l, r, src.xis[y]));
        const int size = v_.dim(src.summands[y]);
        put(out, dst, x, src, static_cast<int>(y), Mat::Identity(size, size));
    }
    return out;
}

Mat SinkEngine::theta(int r, int l, const Tuple& j, PosSet d) const
{
    const Quiver& q = v_.quiver();
    if (contains(d, l) || j.at(l) != q.edge(r_.at(r)).tail)
        throw std::invalid_argument("theta: arrow tail does not match the tuple");
    const int n = v_.n();
    const Tuple j2 = replace(j, l, i_);
    const PosSet d2 = with(d, l);
    const int big = space(j2, d2).dim;
    Mat inner = Mat::Identity(big, big) * (-v_.params().lambda[i_]);
    inner += mul<Scalar>(mu(j2, d2, l), pi(j2, d2, l));
    const Scalar& nu = v_.params().nu;
    if (!nu.is_zero())
    {
        for (int m : positions(d))
            inner += sigma(Perm::transposition(n, m, l), j2, d2) * nu;
    }
    return mul<Scalar>(inner, tau_lower(r, l, j2, d2));
}

std::vector<Tuple> SinkEngine::candidates() const
{
    return spread(false);
}

std::vector<Tuple> SinkEngine::cube_tuples() const
{
    return spread(true);
}

std::vector<Tuple> SinkEngine::spread(bool keep_vertex) const
{
    const Quiver& q = v_.quiver();
    std::vector<bool> is_tail(q.num_vertices(), false);
    for (int e : r_)
        is_tail[q.edge(e).tail] = true;
    std::set<Tuple> out;
    for (const auto& [k, d] : v_.support())
    {
        if (!keep_vertex && std::find(k.begin(), k.end(), i_) != k.end())
            continue;
        std::vector<int> free;
        for (std::size_t p = 0; p < k.size(); ++p)
        {
            if (is_tail[k[p]])
                free.push_back(static_cast<int>(p));
        }
        for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask)
        {
            Tuple j = k;
            for (std::size_t t = 0; t < free.size(); ++t)
            {
                if ((mask >> t) & 1u)
                    j[free[t]] = i_;
            }
            out.insert(j);
        }
    }
    return {out.begin(), out.end()};
}

Mat SinkEngine::kernel(const Tuple& j) const
{
    const PosSet d = delta(j);
    std::vector<Mat> maps;
    for (int p : positions(d))
        maps.push_back(pi(j, d, p));
    return intersect_kernels<Scalar>(maps, space(j, d).dim);
}

std::set<int> sink_flips(const Quiver& q, int i)
{
    std::set<int> flips;
    for (int e = 0; e < q.num_edges(); ++e)
    {
        if (q.edge(e).tail == i && q.edge(e).head != i)
            flips.insert(e);
    }
    return flips;
}

namespace {

void check_vertex(const Quiver& q, int i)
{
    if (i < 0 || i >= q.num_vertices())
        throw UnknownVertex("vertex index out of range");
    if (q.has_loop(i))
        throw EdgeLoop("edge-loop at vertex '" + q.vertex_id(i) + "'");
}

std::string first_failure(const WreathModule& m, const VerifyReport& report)
{
    if (!report.structural.empty())
        return report.structural.front();
    return describe(m.quiver(), report.failures.front());
}

}   // namespace

ReflectionOutput reflection_functor(const WreathModule& v, int i, const ReflectOptions& options)
{
    const Quiver& q = v.quiver();
    check_vertex(q, i);
    if (options.verify_input)
    {
        const VerifyReport report = verify_relations(v);
        if (!report.ok())
            throw ReflectionError("input is not a module: " + first_failure(v, report));
    }
    ReflectionOutput out;
    out.vertex = i;
    out.flips = sink_flips(q, i);
    out.sink_input = reorient_module(v, out.flips);
    const SinkEngine engine(out.sink_input, i);
    const Quiver& qs = out.sink_input.quiver();
    const int n = v.n();

    Params params = out.sink_input.params();
    params.lambda = dual_reflection(q, i, v.params().lambda);
    WreathModule w(params);
    for (const Tuple& j : engine.candidates())
    {
        Mat k = engine.kernel(j);
        out.ambient[j] = static_cast<int>(k.rows());
        if (k.cols() > 0)
        {
            w.set_dim(j, static_cast<int>(k.cols()));
            out.embedding[j] = std::move(k);
        }
    }

    auto express = [&](const Tuple& target, const Mat& image, const char* what) {
        try
        {
            return solve_in_span<Scalar>(out.embedding.at(target), image);
        }
        catch (const NotInSpan&)
        {
            throw ReflectionError(std::string("image of ") + what + " escapes the kernel at " +
                                  tuple_string(q, target));
        }
    };

    for (const auto& [j, kj] : out.embedding)
    {
        const PosSet d = engine.delta(j);
        for (int l = 0; l < n; ++l)
        {
            for (int a = 0; a < qs.num_arrows(); ++a)
            {
                if (qs.arrow_tail(a) != j[l])
                    continue;
                const Tuple t = w.arrow_target(a, l, j);
                if (w.dim(t) == 0)
                    continue;
                Mat m;
                if (qs.arrow_tail(a) != i && qs.arrow_head(a) != i)
                    m = engine.case_one(a, l, j, d);
                else if (qs.arrow_tail(a) == i)
                    m = engine.tau_upper(engine.incoming_index(Quiver::edge_of(a)), l, j, d);
                else
                    m = engine.theta(engine.incoming_index(Quiver::edge_of(a)), l, j, d);
                w.set_edge(a, l, j, express(t, mul<Scalar>(m, kj), "an edge action"));
            }
        }
        for (int s = 0; s + 1 < n; ++s)
        {
            const Tuple t = swap_adjacent(j, s);
            const Mat m = engine.sigma(Perm::adjacent(n, s), j, d);
            w.set_sn(s, j, express(t, mul<Scalar>(m, kj), "a transposition"));
        }
    }
    out.sink_output = w;
    out.module = unreorient_module(w, out.flips);
    if (options.verify_output)
    {
        const VerifyReport report = verify_relations(out.module);
        if (!report.ok())
            throw ReflectionError("reflected module fails the relations: " + first_failure(out.module, report));
    }
    return out;
}

TupleMaps reflect_morphism(const ReflectionOutput& fv, const ReflectionOutput& fw, const TupleMaps& f)
{
    if (fv.vertex != fw.vertex)
        throw std::invalid_argument("reflect_morphism: outputs of different functors");
    if (!check_intertwiner(fv.sink_input, fw.sink_input, f, false))
        throw IntertwinerError("reflect_morphism: the map is not a homomorphism");
    const SinkEngine ev(fv.sink_input, fv.vertex);
    const SinkEngine ew(fw.sink_input, fw.vertex);
    const WreathModule& w = fw.sink_input;
    TupleMaps out;
    for (const auto& [j, kv] : fv.embedding)
    {
        const PosSet d = ev.delta(j);
        const BigSpace sv = ev.space(j, d);
        const BigSpace sw = ew.space(j, d);
        Mat big = Mat::Zero(sw.dim, sv.dim);
        for (std::size_t x = 0; x < sv.xis.size(); ++x)
        {
            auto it = f.find(sv.summands[x]);
            if (it != f.end() && it->second.size() > 0)
                big.block(sw.offsets[x], sv.offsets[x], w.dim(sv.summands[x]), fv.sink_input.dim(sv.summands[x])) =
                    it->second;
        }
        const Mat image = mul<Scalar>(big, kv);
        auto target = fw.embedding.find(j);
        if (target == fw.embedding.end())
        {
            if (!is_zero<Scalar>(image))
                throw ReflectionError("reflect_morphism: image escapes the kernel");
            continue;
        }
        try
        {
            out[j] = solve_in_span<Scalar>(target->second, image);
        }
        catch (const NotInSpan&)
        {
            throw ReflectionError("reflect_morphism: image escapes the kernel");
        }
    }
    return out;
}

GenericCheck genericity(const Params& params, int i)
{
    check_vertex(params.quiver, i);
    const Scalar& x = params.lambda.at(i);
    for (int p = 0; p < params.n; ++p)
    {
        for (int branch : {1, -1})
        {
            if ((x + Scalar(branch * p) * params.nu).is_zero())
                return {false, p, branch};
        }
    }
    return {};
}

bool is_generic(const Params& params, int i)
{
    return genericity(params, i).generic;
}

bool is_generic_oracle(const Params& params, int i)
{
    check_vertex(params.quiver, i);
    for (int r = 1; r <= std::min(params.n, 6); ++r)
    {
        if (!central_sum_invertible(params.lambda.at(i), params.nu, r))
            return false;
    }
    return true;
}

InvolutionWitness involution_witness(const WreathModule& v, int i)
{
    if (!is_generic(v.params(), i))
        throw NotGeneric("parameters are not generic at vertex '" + v.quiver().vertex_id(i) + "'");
    InvolutionWitness out;
    out.once = reflection_functor(v, i);
    out.twice = reflection_functor(out.once.module, i);
    const SinkEngine first(out.once.sink_input, i);
    const SinkEngine second(out.twice.sink_input, i);

    std::set<Tuple> tuples;
    for (const auto& [j, d] : v.support())
        tuples.insert(j);
    for (const auto& [j, k] : out.twice.embedding)
        tuples.insert(j);
    bool ok = true;
    for (const Tuple& j : tuples)
    {
        const PosSet d = first.delta(j);
        const BigSpace outer = first.space(j, d);
        const BigSpace inner = second.space(j, d);
        if (outer.offsets != inner.offsets || outer.dim != inner.dim)
            throw ReflectionError("involution_witness: summand dimensions disagree");
        Mat phi = Mat::Identity(v.dim(j), v.dim(j));
        PosSet grown = 0;
        for (int p : positions(d))
        {
            grown = with(grown, p);
            phi = mul<Scalar>(first.mu(j, grown, p), phi);
        }
        auto target = out.twice.embedding.find(j);
        if (target == out.twice.embedding.end())
        {
            ok = ok && v.dim(j) == 0;
            continue;
        }
        try
        {
            out.iso[j] = solve_in_span<Scalar>(target->second, phi);
        }
        catch (const NotInSpan&)
        {
            ok = false;
        }
    }
    out.verified = ok && check_intertwiner(v, out.twice.module, out.iso, true);
    return out;
}

WordResult apply_functor_word(const WreathModule& v, const std::vector<int>& word, bool require_generic)
{
    WordResult out{v, {v.support()}};
    for (int letter : word)
    {
        if (require_generic && !is_generic(out.module.params(), letter))
            throw NotGeneric("parameters are not generic at vertex '" + v.quiver().vertex_id(letter) + "'");
        out.module = reflection_functor(out.module, letter).module;
        out.trace.push_back(out.module.support());
    }
    return out;
}

}   // namespace wreath
