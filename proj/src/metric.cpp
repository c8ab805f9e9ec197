#include "scflip/metric.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <queue>
#include <thread>

#include "scflip/errors.hpp"
#include "scflip/io.hpp"

namespace scflip {

Flipper::Flipper(PosetPtr p, Symmetry s)
    : p_(std::move(p)), s_(s), n_(p_->words()), V_(p_->volume()), max_(n_), tmp_(n_), J_(n_) {
    check_compatible(*p_, s_);
    if (s_ == Symmetry::sc) return;
    const Group g = s_ == Symmetry::cssc ? Group::cyclic : Group::full;
    orbit_.assign(V_ * 6, 0);
    orbit_size_.assign(V_, 0);
    for (std::size_t i = 0; i < V_; ++i) {
        auto o = p_->orbit_ranks(i, g);
        orbit_size_[i] = static_cast<std::uint8_t>(o.size());
        for (std::size_t t = 0; t < o.size(); ++t) orbit_[i * 6 + t] = static_cast<std::uint32_t>(o[t]);
    }
}

std::vector<std::pair<Ideal, int>> flip_neighbors(const Ideal& i, Symmetry cls) {
    if (!validate(i, cls)) fail(ErrorCode::Validation, std::string("input is not a ") + to_string(cls) + " ideal");
    std::vector<std::pair<Ideal, int>> out;
    Flipper f(i.poset(), cls);
    f.each(i.words().data(), [&](const bits::Word* J, int w) {
        Ideal j = Ideal::unchecked(i.poset(), bits::Words(J, J + i.words().size()));
        invariant(validate(j, cls), "flip produced an ideal outside the class");
        out.emplace_back(std::move(j), w);
    });
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::size_t distance_raw(const bits::Word* i, const bits::Word* j, std::size_t nwords, Symmetry cls) {
    std::size_t n = bits::andnot_count(i, j, nwords);
    if (cls == Symmetry::sc) return n;
    invariant(n % 3 == 0, "symmetric difference of symmetric ideals is not a multiple of 3");
    return n / 3;
}

std::size_t distance(const Ideal& i, const Ideal& j, Symmetry cls) {
    if (!(*i.poset() == *j.poset())) fail(ErrorCode::PosetMismatch, "ideals live on different posets");
    return distance_raw(i.words().data(), j.words().data(), i.words().size(), cls);
}

FlipGraph build_graph(std::shared_ptr<const EnumerationResult> e) {
    FlipGraph g;
    g.vertices = e;
    const std::size_t n = e->size();
    g.adj.assign(n, {});
    if (n == 0) return g;
    Flipper f(e->poset, *e->cls);
    bits::Words cur(e->stride);
    for (std::size_t u = 0; u < n; ++u) {
        std::copy_n(e->row(u), e->stride, cur.begin());
        f.each(cur.data(), [&](const bits::Word* J, int w) {
            auto v = e->find(J);
            invariant(v.has_value(), "flip neighbor missing from the vertex set");
            if (u < *v) g.edges.push_back({u, *v, w});
        });
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (const auto& ed : g.edges) {
        g.adj[ed.u].push_back({ed.v, ed.w});
        g.adj[ed.v].push_back({ed.u, ed.w});
    }
    return g;
}

unsigned default_workers() {
    if (const char* s = std::getenv("SCFLIP_WORKERS")) {
        int v = std::atoi(s);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

MetricReport metric_report(const EnumerationResult& e, unsigned workers) {
    MetricReport r;
    const std::size_t n = e.size(), s = e.stride;
    if (n == 0) {
        r.empty = true;
        return r;
    }
    if (workers == 0) workers = default_workers();
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    const Symmetry cls = *e.cls;

    std::vector<std::vector<std::size_t>> local(workers, std::vector<std::size_t>(n, 0));
    auto sweep = [&](unsigned t) {
        auto& ecc = local[t];
        for (std::size_t u = t; u < n; u += workers) {
            const bits::Word* a = e.row(u);
            std::size_t best = ecc[u];
            for (std::size_t v = u + 1; v < n; ++v) {
                std::size_t d = distance_raw(a, e.row(v), s, cls);
                best = std::max(best, d);
                if (d > ecc[v]) ecc[v] = d;
            }
            ecc[u] = best;
        }
    };
    if (workers == 1) {
        sweep(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(sweep, t);
        for (auto& th : pool) th.join();
    }
    r.ecc.assign(n, 0);
    for (const auto& l : local)
        for (std::size_t i = 0; i < n; ++i) r.ecc[i] = std::max(r.ecc[i], l[i]);

    r.diameter = *std::max_element(r.ecc.begin(), r.ecc.end());
    r.radius = *std::min_element(r.ecc.begin(), r.ecc.end());
    for (std::size_t i = 0; i < n; ++i) {
        if (r.ecc[i] == r.radius) r.center.push_back(i);
        if (r.ecc[i] == r.diameter) r.perimeter.push_back(i);
    }
    return r;
}

std::size_t eccentricity_of(const Ideal& i, const EnumerationResult& e) {
    std::size_t best = 0;
    for (std::size_t v = 0; v < e.size(); ++v)
        best = std::max(best, distance_raw(i.words().data(), e.row(v), e.stride, *e.cls));
    return best;
}

std::vector<std::size_t> shortest_paths_from(const FlipGraph& g, std::size_t u) {
    constexpr auto inf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(g.adj.size(), inf);
    using Item = std::pair<std::size_t, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[u] = 0;
    pq.push({0, u});
    while (!pq.empty()) {
        auto [d, x] = pq.top();
        pq.pop();
        if (d != dist[x]) continue;
        for (auto [y, w] : g.adj[x]) {
            std::size_t nd = d + static_cast<std::size_t>(w);
            if (nd < dist[y]) {
                dist[y] = nd;
                pq.push({nd, y});
            }
        }
    }
    return dist;
}

std::size_t shortest_path_oracle(const FlipGraph& g, std::size_t u, std::size_t v) {
    if (u >= g.adj.size() || v >= g.adj.size()) fail(ErrorCode::Range, "vertex id out of range");
    std::size_t d = shortest_paths_from(g, u)[v];
    invariant(d != std::numeric_limits<std::size_t>::max(), "flip graph is disconnected");
    return d;
}

namespace {
std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s;
}
}  // namespace

void export_dot(const FlipGraph& g, const MetricReport& r, std::ostream& os) {
    const auto& e = *g.vertices;
    auto m = io::meta(e.poset->dims(), e.cls ? to_string(*e.cls) : "none", to_string(e.method));
    os << "// meta: tool=" << m["tool"].get<std::string>() << " version=" << m["version"].get<std::string>()
       << " dims=" << join(e.poset->dims()) << " class=" << m["class"].get<std::string>()
       << " method=" << m["method"].get<std::string>() << "\n";
    os << "graph flip {\n";
    std::vector<int> color(e.size(), 0);
    for (auto v : r.perimeter) color[v] = 2;
    for (auto v : r.center) color[v] = 1;  // center wins when a vertex is both
    for (std::size_t v = 0; v < e.size(); ++v) {
        os << "  " << v;
        if (color[v] == 1) os << " [color=blue]";
        if (color[v] == 2) os << " [color=red]";
        os << ";\n";
    }
    for (const auto& ed : g.edges) os << "  " << ed.u << " -- " << ed.v << " [weight=" << ed.w << "];\n";
    os << "}\n";
}

void export_json(const FlipGraph& g, const MetricReport& r, std::ostream& os) {
    const auto& e = *g.vertices;
    io::json j;
    j["meta"] = io::meta(e.poset->dims(), e.cls ? to_string(*e.cls) : "none", to_string(e.method));
    j["dims"] = e.poset->dims();
    j["class"] = e.cls ? to_string(*e.cls) : "none";
    j["vertices"] = io::json::array();
    for (std::size_t v = 0; v < e.size(); ++v) j["vertices"].push_back(io::ideal_record(e.vertex(v)));
    j["edges"] = io::json::array();
    for (const auto& ed : g.edges) j["edges"].push_back({ed.u, ed.v, ed.w});
    j["report"] = {{"diameter", r.diameter}, {"radius", r.radius},     {"center", r.center},
                   {"perimeter", r.perimeter}, {"eccentricity", r.ecc}, {"empty", r.empty}};
    os << j.dump() << "\n";
}

void export_csv(const MetricReport& r, std::ostream& os) {
    os << "vertex_id,eccentricity\n";
    for (std::size_t v = 0; v < r.ecc.size(); ++v) os << v << "," << r.ecc[v] << "\n";
}

}  // namespace scflip
