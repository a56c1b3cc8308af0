#include "detlab/abp.hpp"

#include <algorithm>
#include <map>

namespace detlab {

namespace {

std::map<std::string, std::pair<std::size_t, std::size_t>> index_vertices(
    const std::vector<std::vector<std::string>>& layers) {
    std::map<std::string, std::pair<std::size_t, std::size_t>> pos;
    for (std::size_t l = 0; l < layers.size(); ++l)
        for (std::size_t i = 0; i < layers[l].size(); ++i)
            if (!pos.emplace(layers[l][i], std::make_pair(l, i)).second)
                throw InputError("duplicate vertex name: " + layers[l][i]);
    return pos;
}

} // namespace

LayeredABP::LayeredABP(std::vector<std::vector<std::string>> layers, std::vector<Edge> edges)
    : layers_(std::move(layers)), edges_(std::move(edges)) {
    if (layers_.empty()) throw InputError("branching program needs at least one layer");
    for (const auto& l : layers_)
        if (l.empty()) throw InputError("branching program layers must be nonempty");
    const auto pos = index_vertices(layers_);
    for (const auto& e : edges_) {
        const auto fi = pos.find(e.from), ti = pos.find(e.to);
        if (fi == pos.end() || ti == pos.end())
            throw InputError("edge endpoint is not a declared vertex");
        if (ti->second.first != fi->second.first + 1)
            throw InputError("edges must connect consecutive layers");
        if (e.label.is_zero()) throw InputError("edge labels must be nonzero");
        if (e.label.total_degree() > 1)
            throw InputError("edge labels must be affine forms");
    }
}

int LayeredABP::vertex_count() const {
    int n = 0;
    for (const auto& l : layers_) n += static_cast<int>(l.size());
    return n;
}

std::set<VarId> LayeredABP::variables() const {
    std::set<VarId> vs;
    for (const auto& e : edges_)
        for (const auto& v : e.label.variables()) vs.insert(v);
    return vs;
}

namespace {

// Forward values: the polynomial computed at each vertex, source = 1.
std::map<std::string, Poly> forward_values(const LayeredABP& p) {
    std::map<std::string, Poly> val;
    val[p.source()] = Poly(1L);
    const auto pos = index_vertices(p.layers());
    // Process edges in layer order so sources are final before use.
    std::vector<const LayeredABP::Edge*> ordered;
    for (const auto& e : p.edges()) ordered.push_back(&e);
    std::sort(ordered.begin(), ordered.end(),
              [&](const LayeredABP::Edge* a, const LayeredABP::Edge* b) {
                  return pos.at(a->from).first < pos.at(b->from).first;
              });
    for (const auto* e : ordered) {
        auto it = val.find(e->from);
        if (it == val.end() || it->second.is_zero()) continue;
        val[e->to] += it->second * e->label;
    }
    return val;
}

std::set<std::string> coreachable(const LayeredABP& p) {
    std::set<std::string> keep{p.sink()};
    const auto pos = index_vertices(p.layers());
    std::vector<const LayeredABP::Edge*> ordered;
    for (const auto& e : p.edges()) ordered.push_back(&e);
    std::sort(ordered.begin(), ordered.end(),
              [&](const LayeredABP::Edge* a, const LayeredABP::Edge* b) {
                  return pos.at(a->from).first > pos.at(b->from).first;
              });
    for (const auto* e : ordered)
        if (keep.count(e->to)) keep.insert(e->from);
    return keep;
}

} // namespace

Poly eval_abp(const LayeredABP& p) {
    auto val = forward_values(p);
    auto it = val.find(p.sink());
    return it == val.end() ? Poly() : it->second;
}

LayeredABP prune_abp(const LayeredABP& p) {
    const auto val = forward_values(p);
    const auto reach = coreachable(p);
    auto alive = [&](const std::string& v) {
        if (v == p.source() || v == p.sink()) return true;
        auto it = val.find(v);
        return it != val.end() && !it->second.is_zero() && reach.count(v) > 0;
    };
    std::vector<std::vector<std::string>> layers;
    for (const auto& l : p.layers()) {
        std::vector<std::string> kept;
        for (const auto& v : l)
            if (alive(v)) kept.push_back(v);
        if (kept.empty())
            throw InputError("program computes the zero polynomial; nothing to keep");
        layers.push_back(std::move(kept));
    }
    std::vector<LayeredABP::Edge> edges;
    for (const auto& e : p.edges())
        if (alive(e.from) && alive(e.to)) edges.push_back(e);
    return LayeredABP(std::move(layers), std::move(edges));
}

LayeredABP homogenize_abp(const LayeredABP& p, const VarId& z) {
    if (p.variables().count(z))
        throw InputError("homogenization variable already occurs in the program");
    const LayeredABP trimmed = prune_abp(p);
    std::vector<LayeredABP::Edge> edges;
    for (const auto& e : trimmed.edges()) {
        const EpsScalar c = e.label.coefficient(Monomial());
        Poly label = e.label;
        if (!c.is_zero()) {
            label = label - Poly(c);
            label += Poly::var(z).scaled(c);
        }
        edges.push_back({e.from, e.to, label});
    }
    return LayeredABP(trimmed.layers(), std::move(edges));
}

PolyMatrix valiant_matrix(const LayeredABP& p) {
    const int path_len = static_cast<int>(p.layers().size()) - 1;
    if (path_len < 1)
        throw InputError("the cycle-cover matrix needs a program with at least two layers");
    // Topological vertex order: layer by layer; source first, sink last.
    std::vector<std::string> order;
    for (const auto& l : p.layers())
        for (const auto& v : l) order.push_back(v);
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < order.size(); ++i) idx[order[i]] = i;

    const std::size_t m = order.size();
    if (path_len % 2 == 0) {
        // Even path length: self-loops everywhere plus a unit edge sink->source.
        PolyMatrix a = mat_identity(static_cast<int>(m));
        for (const auto& e : p.edges()) a[idx[e.from]][idx[e.to]] += e.label;
        a[m - 1][0] += Poly(1L);
        return a;
    }
    // Odd path length: identify source and sink (the merged node keeps the
    // sink's position) and put an isolated self-looped vertex in front, so
    // the matrix dimension stays at the post-merge vertex count.
    PolyMatrix a = mat_identity(static_cast<int>(m));
    auto merged = [&](const std::string& v) -> std::size_t {
        const std::size_t i = idx[v];
        return i == 0 ? m - 1 : i;  // source index 0 folds onto the sink
    };
    for (const auto& e : p.edges()) a[merged(e.from)][merged(e.to)] += e.label;
    return a;
}

LayeredABP det_abp(int t) {
    if (t < 1) throw InputError("determinant size must be positive");
    const std::string src = "s", snk = "t";
    auto state = [](int h, int u, int layer) {
        return "h" + std::to_string(h) + "u" + std::to_string(u) + "L" + std::to_string(layer);
    };
    std::vector<std::vector<std::string>> layers;
    std::vector<LayeredABP::Edge> edges;
    layers.push_back({src});
    // Clow-sequence states (h, u): an open closed-walk with head h currently
    // at u >= h, after `layer` matrix entries have been consumed.  Closing a
    // walk costs a factor -1; the final close also pays the global (-1)^t.
    for (int l = 1; l <= t - 1; ++l) {
        std::vector<std::string> layer;
        for (int h = 1; h <= t; ++h)
            for (int u = h; u <= t; ++u) layer.push_back(state(h, u, l));
        layers.push_back(std::move(layer));
    }
    layers.push_back({snk});

    const Rat minus_one(-1);
    const Rat final_sign = (t + 1) % 2 == 0 ? Rat(1) : Rat(-1);
    if (t == 1) {
        edges.push_back({src, snk, Poly::var(vx(1, 1)).scaled(final_sign)});
        return prune_abp(LayeredABP(std::move(layers), std::move(edges)));
    }
    // First consumed entry: either the first step of a walk headed h, or an
    // immediately-closed self-loop walk followed by opening a new head.
    for (int h = 1; h <= t; ++h) {
        for (int v = h + 1; v <= t; ++v)
            edges.push_back({src, state(h, v, 1), Poly::var(vx(h, v))});
        for (int h2 = h + 1; h2 <= t; ++h2)
            edges.push_back({src, state(h2, h2, 1), Poly::var(vx(h, h)).scaled(minus_one)});
    }
    for (int l = 1; l <= t - 2; ++l)
        for (int h = 1; h <= t; ++h)
            for (int u = h; u <= t; ++u) {
                const std::string from = state(h, u, l);
                for (int v = h + 1; v <= t; ++v)
                    edges.push_back({from, state(h, v, l + 1), Poly::var(vx(u, v))});
                for (int h2 = h + 1; h2 <= t; ++h2)
                    edges.push_back(
                        {from, state(h2, h2, l + 1), Poly::var(vx(u, h)).scaled(minus_one)});
            }
    for (int h = 1; h <= t; ++h)
        for (int u = h; u <= t; ++u)
            edges.push_back(
                {state(h, u, t - 1), snk, Poly::var(vx(u, h)).scaled(final_sign)});
    return prune_abp(LayeredABP(std::move(layers), std::move(edges)));
}

LayeredABP imm_abp(int w, int d) {
    if (w < 1 || d < 1) throw InputError("matrix width and count must be positive");
    auto entry = [](int k, int i, int j) { return Poly::var(VarId{Family::u, {k, i, j}}); };
    auto node = [](int k, int i) { return "m" + std::to_string(k) + "_" + std::to_string(i); };
    std::vector<std::vector<std::string>> layers;
    std::vector<LayeredABP::Edge> edges;
    layers.push_back({"s"});
    for (int k = 1; k <= d - 1; ++k) {
        std::vector<std::string> layer;
        for (int i = 1; i <= w; ++i) layer.push_back(node(k, i));
        layers.push_back(std::move(layer));
    }
    layers.push_back({"t"});
    if (d == 1) {
        edges.push_back({"s", "t", entry(1, 1, 1)});
    } else {
        for (int j = 1; j <= w; ++j) edges.push_back({"s", node(1, j), entry(1, 1, j)});
        for (int k = 1; k <= d - 2; ++k)
            for (int i = 1; i <= w; ++i)
                for (int j = 1; j <= w; ++j)
                    edges.push_back({node(k, i), node(k + 1, j), entry(k + 1, i, j)});
        for (int i = 1; i <= w; ++i) edges.push_back({node(d - 1, i), "t", entry(d, i, 1)});
    }
    return LayeredABP(std::move(layers), std::move(edges));
}

} // namespace detlab
