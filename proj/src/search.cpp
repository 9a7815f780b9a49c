#include "torusfront/search.hpp"

#include "torusfront/invariants.hpp"

#include <deque>
#include <functional>
#include <map>

namespace torusfront {

namespace {

size_t feature_count(const InvariantReport& r) {
    return static_cast<size_t>(r.cusp_pos + r.cusp_neg + r.cross_pos + r.cross_neg);
}

struct Node {
    std::string parent;       // empty at the roots
    MoveInstance step;        // forward: applied to the parent front
                              // backward: inverse step, applied to THIS front
    size_t depth = 0;
};

struct Side {
    std::map<std::string, Node> visited;
    std::deque<std::pair<std::string, TorusFront>> frontier;
};

TorusFront rebuild_forward(const TorusFront& root, const Side& side, const std::string& key) {
    // replay instances root -> key
    std::vector<const MoveInstance*> steps;
    std::string cur = key;
    while (true) {
        const Node& n = side.visited.at(cur);
        if (n.parent.empty()) break;
        steps.push_back(&n.step);
        cur = n.parent;
    }
    TorusFront f = root;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) f = apply_move(f, **it);
    return f;
}

}  // namespace

SearchResult find_isotopy(const TorusFront& f1, const TorusFront& f2,
                          const SearchBudget& budget) {
    SearchResult out;
    InvariantReport r1 = report(f1), r2 = report(f2);
    if (r1.alpha == r2.alpha && r1.beta == r2.beta && (r1.rot != r2.rot || r1.tb != r2.tb)) {
        out.status = SearchStatus::Obstructed;
        out.note = "classical invariants differ: rot " + std::to_string(r1.rot) + " vs " +
                   std::to_string(r2.rot) + ", tb " + std::to_string(r1.tb) + " vs " +
                   std::to_string(r2.tb);
        return out;
    }

    CanonicalKey k1 = canonical_form(f1), k2 = canonical_form(f2);
    if (k1 == k2) {
        Certificate c;
        c.start_digest = key_digest(k1);
        out.status = SearchStatus::Found;
        out.certificate = c;
        out.note = "fronts share a canonical key";
        return out;
    }

    std::set<MoveKind> kinds = budget.enabled_moves;
    kinds.erase(MoveKind::Iso);  // iso fixes the key: useless as a search edge

    Side fwd, bwd;
    fwd.visited[k1.code] = Node{};
    fwd.frontier.push_back({k1.code, f1});
    bwd.visited[k2.code] = Node{};
    bwd.frontier.push_back({k2.code, f2});

    size_t states = 2;
    size_t fdepth = 0, bdepth = 0;
    std::optional<std::string> meet;

    while (!meet && (fdepth + bdepth) < budget.max_depth &&
           (!fwd.frontier.empty() || !bwd.frontier.empty())) {
        bool expand_fwd;
        if (fwd.frontier.empty())
            expand_fwd = false;
        else if (bwd.frontier.empty())
            expand_fwd = true;
        else
            expand_fwd = fwd.frontier.size() <= bwd.frontier.size();
        Side& side = expand_fwd ? fwd : bwd;
        Side& other = expand_fwd ? bwd : fwd;
        (expand_fwd ? fdepth : bdepth) += 1;

        std::deque<std::pair<std::string, TorusFront>> next;
        // deterministic order: frontier entries are inserted in key order
        std::vector<std::pair<std::string, TorusFront>> layer(side.frontier.begin(),
                                                              side.frontier.end());
        std::sort(layer.begin(), layer.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        side.frontier.clear();
        for (auto& [key, front] : layer) {
            if (meet) break;
            std::vector<AppliedMove> edges;
            try {
                edges = enumerate_applied(front, kinds);
            } catch (const FrontError&) {
                continue;
            }
            for (auto& e : edges) {
                InvariantReport rr;
                try {
                    rr = report(e.result);
                } catch (const FrontError&) {
                    continue;
                }
                if (feature_count(rr) > budget.max_features) continue;
                std::string nk = canonical_form(e.result).code;
                if (side.visited.count(nk)) continue;
                if (states >= budget.max_states) break;
                Node node;
                node.parent = key;
                node.depth = side.visited.at(key).depth + 1;
                if (expand_fwd) {
                    node.step = e.instance;
                } else {
                    if (e.inverse.ids.empty() && e.inverse.params.empty() &&
                        e.inverse.kind == MoveKind::Iso && e.inverse.variant == 0)
                        continue;  // no usable inverse
                    node.step = e.inverse;
                }
                side.visited[nk] = node;
                ++states;
                next.push_back({nk, e.result});
                if (other.visited.count(nk)) {
                    meet = nk;
                    break;
                }
            }
            if (states >= budget.max_states) break;
        }
        side.frontier = std::move(next);
        if (states >= budget.max_states) break;
    }

    out.states = states;
    if (!meet) {
        if (fwd.frontier.empty() && bwd.frontier.empty() && states < budget.max_states) {
            out.status = SearchStatus::ExhaustedNoPath;
            out.note = "both reachable sets closed without meeting at this feature budget";
        } else {
            out.status = SearchStatus::Inconclusive;
            out.note = "budget exhausted";
        }
        return out;
    }

    // assemble: forward path f1 -> meet, then inverse steps meet -> f2
    Certificate cert;
    cert.start_digest = key_digest(k1);
    std::vector<std::pair<MoveInstance, std::string>> fsteps;
    {
        std::string cur = *meet;
        while (true) {
            const Node& n = fwd.visited.at(cur);
            if (n.parent.empty()) break;
            fsteps.push_back({n.step, cur});
            cur = n.parent;
        }
        std::reverse(fsteps.begin(), fsteps.end());
    }
    TorusFront walker = f1;
    for (auto& [mi, key] : fsteps) {
        walker = apply_move(walker, mi);
        cert.steps.push_back({mi, key_digest(CanonicalKey{key})});
    }
    // backward: meet's chain toward f2 carries inverse steps on each node
    {
        std::string cur = *meet;
        while (true) {
            const Node& n = bwd.visited.at(cur);
            if (n.parent.empty()) break;
            walker = apply_move(walker, n.step);
            cert.steps.push_back({n.step, key_digest(canonical_form(walker))});
            cur = n.parent;
        }
    }
    CertCheck ck = check_certificate(cert, f1, f2);
    if (!ck.valid) {
        out.status = SearchStatus::Inconclusive;
        out.note = "assembled certificate failed replay: " + ck.reason;
        return out;
    }
    out.status = SearchStatus::Found;
    out.certificate = cert;
    out.note = "certificate of " + std::to_string(cert.steps.size()) + " moves";
    return out;
}

std::vector<CensusBucket> build_census(const SearchBudget& budget,
                                       const std::vector<TorusFront>& seeds) {
    struct Entry {
        long long alpha, beta, rot, tb;
        size_t component;
    };
    std::map<std::string, Entry> visited;
    std::deque<std::pair<std::string, TorusFront>> frontier;
    std::vector<size_t> uf;  // union-find over seed components
    std::function<size_t(size_t)> find = [&](size_t a) {
        while (uf[a] != a) a = uf[a] = uf[uf[a]];
        return a;
    };

    std::set<MoveKind> kinds = budget.enabled_moves;
    kinds.erase(MoveKind::Iso);

    for (auto& s : seeds) {
        InvariantReport r = report(s);
        if (feature_count(r) > budget.max_features) continue;
        std::string k = canonical_form(s).code;
        size_t comp = uf.size();
        uf.push_back(comp);
        auto it = visited.find(k);
        if (it != visited.end()) {
            uf[comp] = find(it->second.component);
            continue;
        }
        visited[k] = {r.alpha, r.beta, r.rot, r.tb, comp};
        frontier.push_back({k, s});
    }

    size_t depth = 0;
    while (!frontier.empty() && depth < budget.max_depth && visited.size() < budget.max_states) {
        ++depth;
        std::vector<std::pair<std::string, TorusFront>> layer(frontier.begin(), frontier.end());
        std::sort(layer.begin(), layer.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        frontier.clear();
        for (auto& [key, front] : layer) {
            size_t comp = find(visited.at(key).component);
            std::vector<AppliedMove> edges;
            try {
                edges = enumerate_applied(front, kinds);
            } catch (const FrontError&) {
                continue;
            }
            for (auto& e : edges) {
                InvariantReport rr;
                try {
                    rr = report(e.result);
                } catch (const FrontError&) {
                    continue;
                }
                if (feature_count(rr) > budget.max_features) continue;
                std::string nk = canonical_form(e.result).code;
                auto it = visited.find(nk);
                if (it != visited.end()) {
                    uf[find(it->second.component)] = comp;
                    continue;
                }
                if (visited.size() >= budget.max_states) break;
                visited[nk] = {rr.alpha, rr.beta, rr.rot, rr.tb, comp};
                frontier.push_back({nk, e.result});
            }
            if (visited.size() >= budget.max_states) break;
        }
    }

    std::map<std::tuple<long long, long long, long long, long long>, CensusBucket> buckets;
    std::map<std::tuple<long long, long long, long long, long long>,
             std::map<size_t, std::vector<CanonicalKey>>> classes;
    for (auto& [k, e] : visited) {
        auto key = std::make_tuple(e.alpha, e.beta, e.rot, e.tb);
        auto& b = buckets[key];
        b.alpha = e.alpha;
        b.beta = e.beta;
        b.rot = e.rot;
        b.tb = e.tb;
        b.members.push_back(CanonicalKey{k});
        classes[key][find(e.component)].push_back(CanonicalKey{k});
    }
    std::vector<CensusBucket> out;
    for (auto& [key, b] : buckets) {
        for (auto& [comp, ms] : classes[key]) b.merged_classes.push_back(ms);
        out.push_back(std::move(b));
    }
    return out;
}

std::vector<CensusBucket> build_census(const SearchBudget& budget) {
    std::vector<TorusFront> seeds;
    for (auto& e : catalog()) seeds.push_back(e.front);
    return build_census(budget, seeds);
}

}  // namespace torusfront
