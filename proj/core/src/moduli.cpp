#include "pmc/moduli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "pmc/error.hpp"
#include "pmc/normal_form.hpp"
#include "pmc/stability.hpp"

namespace pmc {

namespace {

int at(const IndexVector& b, int k) { return k <= 0 ? 0 : b[static_cast<std::size_t>(k - 1)]; }

long long potential(const LocalConfig& c) {
    long long phi = 0;
    for (const auto& p : c.points) phi += p.top() - 1;
    return phi;
}

void check_point(int n, const PointIndices& p) {
    if (static_cast<int>(p.b.size()) != n - 1)
        throw ShapeError("point index vector must have length n-1");
    if (!is_monotone(p.b)) throw ShapeError("point index vector must be monotone and nonnegative");
}

bool is_zero_point(const PointIndices& p) {
    return std::all_of(p.b.begin(), p.b.end(), [](int v) { return v == 0; });
}

void drop_free_points(LocalConfig& c) {
    c.points.erase(std::remove_if(c.points.begin(), c.points.end(), is_zero_point), c.points.end());
}

[[noreturn]] void not_applicable(MoveKind k, const std::string& why) {
    throw MoveNotApplicable(std::string(to_string(k)) + ": " + why);
}

}  // namespace

bool PointIndices::special() const { return single_jump(b).has_value(); }

std::optional<int> PointIndices::jump() const { return single_jump(b); }

IndexVector LocalConfig::global() const {
    IndexVector beta(static_cast<std::size_t>(std::max(n - 1, 0)), 0);
    for (const auto& p : points)
        for (std::size_t k = 0; k < beta.size() && k < p.b.size(); ++k) beta[k] += p.b[k];
    return beta;
}

bool LocalConfig::all_special() const {
    return std::all_of(points.begin(), points.end(), [](const PointIndices& p) { return p.special(); });
}

void LocalConfig::validate() const {
    if (n < 1) throw ParameterError("multiplicity n must be positive");
    for (const auto& p : points) check_point(n, p);
}

LocalConfig LocalConfig::canonical() const {
    LocalConfig c = *this;
    drop_free_points(c);
    std::sort(c.points.begin(), c.points.end());
    return c;
}

PointIndices special_point(int n, int j, int value, bool monomial) {
    if (n < 2 || j < 1 || j > n - 1) throw ParameterError("special point jump must lie in 1..n-1");
    if (value < 1) throw ParameterError("special point value must be positive");
    PointIndices p;
    p.b.assign(static_cast<std::size_t>(n - 1), 0);
    for (int k = j; k <= n - 1; ++k) p.b[static_cast<std::size_t>(k - 1)] = value;
    p.monomial = monomial;
    return p;
}

PointIndices monomial_point(const IndexVector& b) {
    if (!is_monotone(b)) throw ShapeError("point index vector must be monotone and nonnegative");
    PointIndices p;
    p.b = b;
    p.monomial = true;
    return p;
}

std::string format_indices(const IndexVector& beta) {
    std::string s = "(";
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(beta[i]);
    }
    return s + ")";
}

std::vector<IndexVector> admissible_indices(const CurveParams& cp) {
    if (cp.n < 1) throw ParameterError("multiplicity n must be positive");
    if (cp.delta <= 0) throw DomainError("no stable generalized line bundles: delta must be positive");
    std::vector<IndexVector> out;
    if (cp.n == 1) {
        out.push_back({});
        return out;
    }
    const long long n = cp.n;
    // sum(beta) < n(n-1)delta/2, doubled.
    const long long bound2 = n * (n - 1) * cp.delta;
    IndexVector cur;
    std::function<void(int, long long)> rec = [&](int prev, long long sum) {
        if (static_cast<int>(cur.size()) == cp.n - 1) {
            if (divisibility_ok(cp, cur) && check_stability(cp, cur).stable) out.push_back(cur);
            return;
        }
        const long long remaining = cp.n - 1 - static_cast<long long>(cur.size());
        for (int v = prev;; ++v) {
            // Remaining entries are all >= v.
            if (2 * (sum + remaining * v) >= bound2) break;
            cur.push_back(v);
            rec(v, sum + v);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

LocalConfig generic_config(int n, const IndexVector& beta) {
    if (static_cast<int>(beta.size()) != n - 1) throw ShapeError("index vector must have length n-1");
    if (!is_monotone(beta)) throw ShapeError("index vector must be monotone and nonnegative");
    LocalConfig c;
    c.n = n;
    for (int i = 1; i <= n - 1; ++i)
        for (int r = 0; r < at(beta, i) - at(beta, i - 1); ++r) c.points.push_back(special_point(n, i, 1, false));
    return c;
}

long long tangent_dim_generic(const CurveParams& cp, const IndexVector& beta) {
    long long t = genus(cp, cp.n);
    for (int i = 1; i <= cp.n - 1; ++i)
        t += static_cast<long long>(at(beta, i) - at(beta, i - 1)) * std::min(i, cp.n - i);
    return t;
}

std::vector<ComponentDescriptor> enumerate_components(const CurveParams& cp) {
    std::vector<ComponentDescriptor> out;
    for (auto& beta : admissible_indices(cp)) {
        ComponentDescriptor d;
        d.beta = beta;
        d.dimension = genus(cp, cp.n);
        d.tangent_dim_generic = tangent_dim_generic(cp, beta);
        d.divisibility_ok = true;
        d.generic_config = generic_config(cp.n, beta);
        out.push_back(std::move(d));
    }
    return out;
}

std::optional<long long> z_locus_dimension(const CurveParams& cp, const LocalConfig& config) {
    config.validate();
    if (!config.all_special()) throw UnsupportedCase("z_locus_dimension: every point must be special");
    IndexVector beta = config.global();
    if (!divisibility_ok(cp, beta)) return std::nullopt;
    const long long top = beta.empty() ? 0 : beta.back();
    return genus(cp, cp.n) - top + static_cast<long long>(config.canonical().points.size());
}

long long tangent_dimension(const CurveParams& cp, const LocalConfig& config) {
    config.validate();
    const int n = config.n;
    long long t = genus(cp, n);
    if (config.all_special()) {
        for (const auto& p : config.points) {
            if (is_zero_point(p)) continue;
            t += static_cast<long long>(std::min(*p.jump(), n - *p.jump())) * p.top();
        }
        return t;
    }
    if (n == 3) {
        t += config.global()[1];
        for (const auto& p : config.points) t += std::min(p.b[0], p.b[1] - p.b[0]);
        return t;
    }
    throw UnsupportedCase("tangent_dimension: no formula for non-special points when n >= 4");
}

long long tangent_dimension_vector_bundle(const CurveParams& cp, std::optional<long long> h0_end_twist) {
    if (cp.n < 2) throw DomainError("tangent_dimension_vector_bundle: requires n >= 2");
    const long long n2 = static_cast<long long>(cp.n) * cp.n;
    if (cp.delta > 2 * cp.g1 - 2) return n2 * cp.delta + 1;
    if (!h0_end_twist) throw MissingInput("tangent_dimension_vector_bundle: h0(End E (x) C^-1) required when delta <= 2g1-2");
    return n2 * (cp.g1 - 1) + 1 + *h0_end_twist;
}

BlowupFlags blowup_predicates(int n, const PointIndices& point) {
    check_point(n, point);
    BlowupFlags f;
    if (is_zero_point(point)) return {true, true};
    const IndexVector& b = point.b;
    if (n == 3) {
        f.direct_image_of_line_bundle = 2 * b[0] <= b[1];
        f.blowup_is_pmc = 2 * b[0] >= b[1];
        return f;
    }
    if (auto h = point.jump()) {
        f.direct_image_of_line_bundle = 2 * *h >= n;
        f.blowup_is_pmc = *h == 1 || b.front() == b.back();
        return f;
    }
    if (point.monomial) {
        f.direct_image_of_line_bundle = true;
        for (int j = 1; j <= n - 1; ++j)
            for (int i = 1; i + j <= n - 1; ++i)
                if (at(b, j) + at(b, i) > at(b, i + j)) f.direct_image_of_line_bundle = false;
        f.blowup_is_pmc = true;
        for (int i = 1; i <= n - 1; ++i)
            if (static_cast<long long>(i) * b[0] < at(b, i)) f.blowup_is_pmc = false;
        return f;
    }
    throw UnsupportedCase("blowup_predicates: point must be monomial or special when n >= 4");
}

long long blowup_genus(const CurveParams& cp, const LocalConfig& config) {
    config.validate();
    if (!config.all_special()) throw UnsupportedCase("blowup_genus: every point must be special");
    long long g = genus(cp, config.n);
    for (const auto& p : config.points)
        if (!is_zero_point(p)) g -= static_cast<long long>(std::min(*p.jump(), config.n - *p.jump())) * p.top();
    return g;
}

const char* to_string(MoveKind k) {
    switch (k) {
        case MoveKind::split: return "split";
        case MoveKind::shrink: return "shrink";
        case MoveKind::absorb: return "absorb";
        case MoveKind::subtract: return "subtract";
        case MoveKind::pair: return "pair";
        case MoveKind::dual_pair: return "dual_pair";
    }
    return "?";
}

namespace {

bool subtract_vector_ok(const PointIndices& p, const IndexVector& j) {
    if (j.size() != p.b.size()) return false;
    long long sum = 0;
    int prev_j = 0, prev_c = 0;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i] < prev_j) return false;
        const int c = p.b[i] - j[i];
        if (c < prev_c) return false;
        prev_j = j[i];
        prev_c = c;
        sum += j[i];
    }
    const long long n = static_cast<long long>(p.b.size()) + 1;
    return sum > 0 && sum % n == 0;
}

}  // namespace

// Moves follow the deformation lemmas. Jumps there are written through the
// local form (x^b, y^{n-h}); here a jump is the first position j with b_j > 0,
// so h = n - j. The k of the absorb move only depends on gcd(n, h) = gcd(n, j).
LocalConfig apply_move(const LocalConfig& config, const MoveSpec& move) {
    config.validate();
    const int n = config.n;
    if (move.point >= config.points.size()) throw MoveNotApplicable("no such point");
    const PointIndices& P = config.points[move.point];
    if (is_zero_point(P)) not_applicable(move.kind, "point is locally free");
    LocalConfig out = config;
    out.points.erase(out.points.begin() + static_cast<std::ptrdiff_t>(move.point));
    const int top = P.top();

    switch (move.kind) {
        case MoveKind::split: {
            if (P.special()) not_applicable(move.kind, "point is special");
            if (top < 2) not_applicable(move.kind, "b_{n-1} < 2");
            const int last = top - at(P.b, n - 2);
            if (last > 0) out.points.push_back(special_point(n, n - 1, last, P.monomial));
            for (int j = 1; j <= n - 2; ++j) {
                const int v = at(P.b, j) - at(P.b, j - 1);
                if (v > 0) out.points.push_back(special_point(n, j, v, P.monomial));
            }
            break;
        }
        case MoveKind::shrink: {
            if (!P.special()) not_applicable(move.kind, "point is not special");
            if (top < 2) not_applicable(move.kind, "b_{n-1} < 2");
            const int j = *P.jump();
            out.points.push_back(special_point(n, j, top - 1, P.monomial));
            out.points.push_back(special_point(n, j, 1, P.monomial));
            break;
        }
        case MoveKind::absorb: {
            if (!P.special() || !P.monomial) not_applicable(move.kind, "point is not a monomial special point");
            const int j = *P.jump();
            const int k = n / std::gcd(n, n - j);
            if (top < k) not_applicable(move.kind, "b_{n-1} < n/gcd(n,h)");
            if (top > k) out.points.push_back(special_point(n, j, top - k, true));
            break;
        }
        case MoveKind::subtract: {
            if (!P.monomial) not_applicable(move.kind, "point is not monomial");
            if (!subtract_vector_ok(P, move.subtract)) not_applicable(move.kind, "invalid subtraction vector");
            PointIndices q = P;
            for (std::size_t i = 0; i < q.b.size(); ++i) q.b[i] -= move.subtract[i];
            out.points.push_back(q);
            break;
        }
        case MoveKind::pair: {
            if (!P.monomial) not_applicable(move.kind, "point is not monomial");
            if (n < 3) not_applicable(move.kind, "requires n >= 3");
            if (P.b[0] < 2) not_applicable(move.kind, "b_1 < 2");
            PointIndices q = P;
            for (auto& v : q.b) v -= 2;
            out.points.push_back(q);
            out.points.push_back(special_point(n, 2, 1, true));
            break;
        }
        case MoveKind::dual_pair: {
            if (!P.monomial) not_applicable(move.kind, "point is not monomial");
            if (n < 3) not_applicable(move.kind, "requires n >= 3");
            if (top - at(P.b, n - 2) < 2) not_applicable(move.kind, "b_{n-1} - b_{n-2} < 2");
            PointIndices q = P;
            q.b.back() -= 2;
            out.points.push_back(q);
            out.points.push_back(special_point(n, n - 2, 1, true));
            break;
        }
    }
    drop_free_points(out);
    return out;
}

std::vector<MoveSpec> applicable_moves(const LocalConfig& config) {
    config.validate();
    const int n = config.n;
    std::vector<MoveSpec> out;
    for (std::size_t idx = 0; idx < config.points.size(); ++idx) {
        const PointIndices& P = config.points[idx];
        if (is_zero_point(P)) continue;
        const int top = P.top();
        if (P.special()) {
            if (top >= 2) out.push_back({MoveKind::shrink, idx, {}});
            if (P.monomial && top >= n / std::gcd(n, n - *P.jump())) out.push_back({MoveKind::absorb, idx, {}});
        } else if (top >= 2) {
            out.push_back({MoveKind::split, idx, {}});
        }
        if (!P.monomial) continue;
        if (n >= 3 && P.b[0] >= 2) out.push_back({MoveKind::pair, idx, {}});
        if (n >= 3 && top - at(P.b, n - 2) >= 2) out.push_back({MoveKind::dual_pair, idx, {}});
        // j_i - j_{i-1} ranges over [0, b_i - b_{i-1}].
        IndexVector j(P.b.size(), 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int prev) {
            if (i == j.size()) {
                if (subtract_vector_ok(P, j)) out.push_back({MoveKind::subtract, idx, j});
                return;
            }
            const int room = P.b[i] - (i ? P.b[i - 1] : 0);
            for (int d = 0; d <= room; ++d) {
                j[i] = prev + d;
                rec(i + 1, j[i]);
            }
        };
        rec(0, 0);
    }
    return out;
}

LocalConfig dual_config(const LocalConfig& config) {
    config.validate();
    LocalConfig out = config;
    for (auto& p : out.points) p.b = dual_indices(p.b);
    return out;
}

namespace {

using Key = std::vector<int>;

Key key_of(const LocalConfig& c) {
    Key k;
    for (const auto& p : c.points) {
        k.insert(k.end(), p.b.begin(), p.b.end());
        k.push_back(p.monomial ? -1 : -2);
    }
    return k;
}

std::vector<LocalConfig> successors(const LocalConfig& c) {
    std::vector<LocalConfig> out;
    for (const auto& m : applicable_moves(c)) out.push_back(apply_move(c, m).canonical());
    LocalConfig d = dual_config(c);
    for (const auto& m : applicable_moves(d)) out.push_back(dual_config(apply_move(d, m)).canonical());
    return out;
}

class Explorer {
public:
    explicit Explorer(const std::map<IndexVector, std::size_t>& ids) : ids_(ids) {}

    // Admissible labels of all configurations reachable in one or more moves.
    const std::set<std::size_t>& descendants(const LocalConfig& c) {
        Key k = key_of(c);
        if (auto it = memo_.find(k); it != memo_.end()) return it->second;
        std::set<std::size_t> acc;
        const long long phi = potential(c);
        for (const auto& s : successors(c)) {
            if (potential(s) >= phi) throw InvariantViolation("move did not decrease the potential");
            if (auto it = ids_.find(s.global()); it != ids_.end()) acc.insert(it->second);
            const auto& sub = descendants(s);
            acc.insert(sub.begin(), sub.end());
        }
        return memo_.emplace(std::move(k), std::move(acc)).first->second;
    }

    std::set<std::size_t> bounded(const LocalConfig& c, int depth) {
        std::set<std::size_t> acc;
        std::set<Key> seen{key_of(c)};
        std::vector<LocalConfig> layer{c};
        for (int d = 0; d < depth && !layer.empty(); ++d) {
            std::vector<LocalConfig> next;
            for (const auto& x : layer)
                for (auto& s : successors(x)) {
                    if (!seen.insert(key_of(s)).second) continue;
                    if (auto it = ids_.find(s.global()); it != ids_.end()) acc.insert(it->second);
                    next.push_back(std::move(s));
                }
            layer = std::move(next);
        }
        return acc;
    }

private:
    const std::map<IndexVector, std::size_t>& ids_;
    std::map<Key, std::set<std::size_t>> memo_;
};

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

ConnectivityResult connectivity(const CurveParams& cp, const ConnectivityOptions& opts) {
    ConnectivityResult r;
    r.labels = admissible_indices(cp);
    std::map<IndexVector, std::size_t> ids;
    for (std::size_t i = 0; i < r.labels.size(); ++i) ids[r.labels[i]] = i;

    int beta_max = 0;
    for (const auto& b : r.labels)
        if (!b.empty()) beta_max = std::max(beta_max, b.back());
    const int depth = opts.depth > 0 ? opts.depth : std::max(1, beta_max * cp.n);

    Explorer ex(ids);
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < r.labels.size(); ++i) {
        const IndexVector& beta = r.labels[i];
        if (cp.n == 1) break;
        std::vector<LocalConfig> seeds;
        seeds.push_back(generic_config(cp.n, beta).canonical());
        if (!beta.empty() && beta.back() > 0) {
            LocalConfig single;
            single.n = cp.n;
            single.points.push_back(monomial_point(beta));
            seeds.push_back(single);
            if (single_jump(beta)) {
                single.points[0].monomial = false;
                seeds.push_back(single);
            }
        }
        for (const auto& seed : seeds) {
            std::set<std::size_t> reach =
                depth >= potential(seed) ? ex.descendants(seed) : ex.bounded(seed, depth);
            for (std::size_t j : reach)
                if (j != i) edges.insert({std::min(i, j), std::max(i, j)});
        }
    }
    r.edges.assign(edges.begin(), edges.end());

    UnionFind uf(r.labels.size());
    for (auto [a, b] : r.edges) uf.unite(a, b);
    std::map<std::size_t, int> comp;
    r.component_of.resize(r.labels.size());
    for (std::size_t i = 0; i < r.labels.size(); ++i) {
        auto root = uf.find(i);
        auto [it, fresh] = comp.emplace(root, static_cast<int>(comp.size()));
        r.component_of[i] = it->second;
    }
    r.count = static_cast<int>(comp.size());
    return r;
}

std::string to_dot(const ConnectivityResult& result, const CurveParams& cp) {
    std::ostringstream os;
    os << "graph components {\n";
    os << "  label=\"n=" << cp.n << " g1=" << cp.g1 << " delta=" << cp.delta << " D=" << cp.D
       << " components=" << result.count << "\";\n";
    for (std::size_t i = 0; i < result.labels.size(); ++i)
        os << "  n" << i << " [label=\"" << format_indices(result.labels[i]) << "\", component="
           << result.component_of[i] << "];\n";
    for (auto [a, b] : result.edges) os << "  n" << a << " -- n" << b << ";\n";
    os << "}\n";
    return os.str();
}

ConjectureReport conjecture_report_n3(const CurveParams& cp) {
    if (cp.n != 3) throw DomainError("conjecture report requires n = 3");
    if (cp.g1 < 2) throw DomainError("conjecture report requires g1 >= 2");
    if (cp.delta <= 0) throw DomainError("conjecture report requires delta > 0");
    ConjectureReport rep;
    rep.components = enumerate_components(cp);
    if (cp.delta > 2 * (cp.g1 - 1)) return rep;
    rep.bundle_component_dimension = 9 * (cp.g1 - 1) + 1;
    // (D - 3 delta)/3 < d1 < D/3, with d0 = D - d1.
    auto floor_div = [](long long a, long long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); };
    const long long lo = floor_div(cp.D - 3 * cp.delta, 3) + 1;
    const long long hi = floor_div(cp.D - 1, 3);
    for (long long d1 = lo; d1 <= hi; ++d1) {
        const long long d0 = cp.D - d1;
        if (!(d0 - 3 * cp.delta < 2 * d1 && 2 * d1 < d0)) continue;
        rep.rigid_loci.push_back({d0, d1, 1 + 2 * cp.delta + 5 * (cp.g1 - 1)});
    }
    return rep;
}

}  // namespace pmc
