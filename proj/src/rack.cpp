#include "braidstat/rack.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace braidstat {

namespace {

std::vector<std::vector<int>> build_inverse_table(const std::vector<std::vector<int>>& table) {
    int n = (int)table.size();
    std::vector<std::vector<int>> inv(n, std::vector<int>(n, -1));
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) inv[table[x][y]][y] = x;
    return inv;
}

}  // namespace

nlohmann::json Rack::to_json() const {
    nlohmann::json j = {{"size", size}, {"table", table}};
    if (!labels.empty()) j["labels"] = labels;
    return j;
}

Rack Rack::from_json(const nlohmann::json& j) {
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    Rack r = rack_validate(table, labels);
    if (j.contains("size") && j["size"].get<int>() != r.size)
        throw validation_error("BadRack", "size field disagrees with table");
    return r;
}

Rack rack_validate(const std::vector<std::vector<int>>& table, std::vector<std::string> labels) {
    int n = (int)table.size();
    for (const auto& row : table)
        if ((int)row.size() != n) throw validation_error("BadRack", "table is not square");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (table[x][y] < 0 || table[x][y] >= n)
                throw validation_error("BadRack", "entry out of range");
    for (int y = 0; y < n; ++y) {
        std::vector<bool> seen(n, false);
        for (int x = 0; x < n; ++x) {
            if (seen[table[x][y]])
                throw validation_error("NotBijectiveColumn",
                                       "column " + std::to_string(y) + " is not a bijection");
            seen[table[x][y]] = true;
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (table[table[x][y]][z] != table[table[x][z]][table[y][z]])
                    throw validation_error(
                        "SelfDistributivityFails",
                        "witness (" + std::to_string(x) + "," + std::to_string(y) + "," +
                            std::to_string(z) + ")");
    Rack r;
    r.size = n;
    r.table = table;
    r.labels = std::move(labels);
    r.inverse_table = build_inverse_table(table);
    return r;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& mul,
                                    std::vector<std::string> labels) {
    int n = (int)mul.size();
    FiniteGroup g;
    g.size = n;
    g.mul = mul;
    g.labels = std::move(labels);
    // locate the identity
    g.id = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = mul[e][a] == a && mul[a][e] == a;
        if (ok) {
            g.id = e;
            break;
        }
    }
    if (g.id < 0) throw validation_error("BadGroup", "no identity element");
    g.inv.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul[a][b] == g.id && mul[b][a] == g.id) g.inv[a] = b;
        if (g.inv[a] < 0) throw validation_error("BadGroup", "missing inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw validation_error("BadGroup", "associativity fails");
    return g;
}

FiniteGroup FiniteGroup::from_permutations(int degree, const std::vector<std::vector<int>>& gens) {
    // closure of the generated permutation group, elements as one-line maps
    std::vector<std::vector<int>> elems;
    std::set<std::vector<int>> seen;
    std::vector<int> idp(degree);
    std::iota(idp.begin(), idp.end(), 0);
    elems.push_back(idp);
    seen.insert(idp);
    for (size_t i = 0; i < elems.size(); ++i) {
        for (const auto& g : gens) {
            std::vector<int> comp(degree);
            for (int x = 0; x < degree; ++x) comp[x] = g[elems[i][x]];
            if (seen.insert(comp).second) elems.push_back(comp);
        }
        if (elems.size() > 100000) throw cap_error("GroupTooLarge", "permutation closure too large");
    }
    std::sort(elems.begin(), elems.end());
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = (int)i;
    int n = (int)elems.size();
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> comp(degree);
            for (int x = 0; x < degree; ++x) comp[x] = elems[b][elems[a][x]];  // apply a then b
            mul[a][b] = index[comp];
        }
    return from_table(mul);
}

FiniteGroup FiniteGroup::symmetric(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = (int)i;
    int sz = (int)perms.size();
    std::vector<std::vector<int>> mul(sz, std::vector<int>(sz));
    for (int a = 0; a < sz; ++a)
        for (int b = 0; b < sz; ++b) {
            std::vector<int> comp(n);
            for (int x = 0; x < n; ++x) comp[x] = perms[b][perms[a][x]];
            mul[a][b] = index[comp];
        }
    return from_table(mul);
}

FiniteGroup FiniteGroup::cyclic(int n) {
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
    return from_table(mul);
}

FiniteGroup FiniteGroup::dihedral(int n) {
    // elements (r, f): index r + n*f ; (r1,f1)*(r2,f2) with reflections acting
    auto idx = [n](int r, int f) { return ((r % n) + n) % n + n * f; };
    int sz = 2 * n;
    std::vector<std::vector<int>> mul(sz, std::vector<int>(sz));
    for (int r1 = 0; r1 < n; ++r1)
        for (int f1 = 0; f1 < 2; ++f1)
            for (int r2 = 0; r2 < n; ++r2)
                for (int f2 = 0; f2 < 2; ++f2) {
                    int r = f2 == 0 ? r1 + r2 : r2 - r1;
                    mul[idx(r1, f1)][idx(r2, f2)] = idx(r, f1 ^ f2);
                }
    return from_table(mul);
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int sz = a.size * b.size;
    std::vector<std::vector<int>> mul(sz, std::vector<int>(sz));
    for (int x1 = 0; x1 < a.size; ++x1)
        for (int y1 = 0; y1 < b.size; ++y1)
            for (int x2 = 0; x2 < a.size; ++x2)
                for (int y2 = 0; y2 < b.size; ++y2)
                    mul[x1 * b.size + y1][x2 * b.size + y2] =
                        a.mul[x1][x2] * b.size + b.mul[y1][y2];
    return from_table(mul);
}

std::vector<int> FiniteGroup::closure(std::vector<int> gens) const {
    std::vector<bool> in(size, false);
    std::vector<int> frontier;
    auto push = [&](int x) {
        if (!in[x]) {
            in[x] = true;
            frontier.push_back(x);
        }
    };
    push(id);
    for (int g : gens) push(g);
    for (size_t i = 0; i < frontier.size(); ++i)
        for (int g : gens) {
            push(mul[frontier[i]][g]);
            push(mul[frontier[i]][inv[g]]);
        }
    // ensure subgroup: close under products of members
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> members;
        for (int x = 0; x < size; ++x)
            if (in[x]) members.push_back(x);
        for (int a : members)
            for (int b : members)
                if (!in[mul[a][b]]) {
                    in[mul[a][b]] = true;
                    changed = true;
                }
    }
    std::vector<int> out;
    for (int x = 0; x < size; ++x)
        if (in[x]) out.push_back(x);
    return out;
}

std::vector<std::vector<int>> FiniteGroup::all_subgroups(long cap) const {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    std::vector<int> triv = {id};
    seen.insert(triv);
    queue.push_back(triv);
    for (size_t i = 0; i < queue.size(); ++i) {
        std::vector<int> H = queue[i];
        for (int g = 0; g < size; ++g) {
            if (std::binary_search(H.begin(), H.end(), g)) continue;
            std::vector<int> gens = H;
            gens.push_back(g);
            std::vector<int> K = closure(gens);
            if (seen.insert(K).second) {
                queue.push_back(K);
                if ((long)queue.size() > cap)
                    throw cap_error("SubgroupCapExceeded", "too many subgroups");
            }
        }
    }
    std::vector<std::vector<int>> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<int> FiniteGroup::conjugacy_class(int x) const {
    std::set<int> cls;
    for (int g = 0; g < size; ++g) cls.insert(conj(x, g));
    return std::vector<int>(cls.begin(), cls.end());
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
    std::vector<bool> seen(size, false);
    std::vector<std::vector<int>> out;
    for (int x = 0; x < size; ++x) {
        if (seen[x]) continue;
        auto cls = conjugacy_class(x);
        for (int y : cls) seen[y] = true;
        out.push_back(cls);
    }
    return out;
}

bool FiniteGroup::is_conjugacy_closed(const std::vector<int>& subset) const {
    std::set<int> s(subset.begin(), subset.end());
    for (int x : subset)
        for (int g = 0; g < size; ++g)
            if (!s.count(conj(x, g))) return false;
    return true;
}

int FiniteGroup::element_order(int x) const {
    int ord = 1, y = x;
    while (y != id) {
        y = mul[y][x];
        ord++;
    }
    return ord;
}

long FiniteGroup::exponent() const {
    long e = 1;
    for (int x = 0; x < size; ++x) e = std::lcm(e, (long)element_order(x));
    return e;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < size; ++a)
        for (int b = a + 1; b < size; ++b)
            if (mul[a][b] != mul[b][a]) return false;
    return true;
}

nlohmann::json FiniteGroup::to_json() const {
    nlohmann::json j = {{"size", size}, {"mul", mul}, {"identity", id}};
    if (!labels.empty()) j["labels"] = labels;
    return j;
}

FiniteGroup FiniteGroup::from_json(const nlohmann::json& j) {
    if (j.contains("mul")) {
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
        return from_table(j.at("mul").get<std::vector<std::vector<int>>>(), labels);
    }
    if (j.contains("generators"))
        return from_permutations(j.at("degree").get<int>(),
                                 j.at("generators").get<std::vector<std::vector<int>>>());
    throw validation_error("BadGroup", "expected a multiplication table or permutation generators");
}

// ---- rack constructions ----

Rack trivial_rack(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = x;
    return rack_validate(t);
}

Rack cyclic_rack(int m) {
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) t[x][y] = (x + 1) % m;
    return rack_validate(t);
}

Rack joyce_quandle() {
    // J1^J3 = J2, J2^J3 = J1, all other actions trivial
    std::vector<std::vector<int>> t = {{0, 0, 1}, {1, 1, 0}, {2, 2, 2}};
    return rack_validate(t, {"J1", "J2", "J3"});
}

Rack wedge_rack() { return disjoint_union(trivial_rack(1), cyclic_rack(2)); }

Rack conjugation_rack(const FiniteGroup& G, const std::vector<int>& subset) {
    if (!G.is_conjugacy_closed(subset))
        throw validation_error("NotConjugacyClosed", "subset is not closed under conjugation");
    int n = (int)subset.size();
    std::map<int, int> index;
    for (int i = 0; i < n; ++i) index[subset[i]] = i;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = index.at(G.conj(subset[i], subset[j]));
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        labels.push_back(G.labels.empty() ? "g" + std::to_string(subset[i])
                                          : G.labels[subset[i]]);
    return rack_validate(t, labels);
}

namespace {
std::vector<int> transpositions_of_sym(const FiniteGroup& S) {
    std::vector<int> out;
    for (int x = 0; x < S.size; ++x)
        if (x != S.id && S.mul[x][x] == S.id) out.push_back(x);
    return out;
}
}  // namespace

Rack s3_transposition_quandle() {
    FiniteGroup S3 = FiniteGroup::symmetric(3);
    return conjugation_rack(S3, transpositions_of_sym(S3));
}

Rack s4_transposition_quandle() {
    FiniteGroup S4 = FiniteGroup::symmetric(4);
    // involutions split into transpositions and double transpositions; keep
    // the conjugacy class of a single 2-cycle (class size 6).
    std::vector<int> invs = transpositions_of_sym(S4);
    for (int x : invs) {
        auto cls = S4.conjugacy_class(x);
        if (cls.size() == 6) return conjugation_rack(S4, cls);
    }
    throw validation_error("BadGroup", "transposition class not found");
}

Rack disjoint_union(const Rack& a, const Rack& b) {
    int n = a.size + b.size;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            bool xa = x < a.size, ya = y < a.size;
            if (xa && ya)
                t[x][y] = a.table[x][y];
            else if (!xa && !ya)
                t[x][y] = a.size + b.table[x - a.size][y - a.size];
            else
                t[x][y] = x;
        }
    return rack_validate(t);
}

Rack product_rack(const Rack& a, const Rack& b) {
    int n = a.size * b.size;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x1 = 0; x1 < a.size; ++x1)
        for (int y1 = 0; y1 < b.size; ++y1)
            for (int x2 = 0; x2 < a.size; ++x2)
                for (int y2 = 0; y2 < b.size; ++y2)
                    t[x1 * b.size + y1][x2 * b.size + y2] =
                        a.table[x1][x2] * b.size + b.table[y1][y2];
    return rack_validate(t);
}

Rack quotient_rack(const Rack& r, const std::vector<int>& ideal, std::vector<int>* projection) {
    if (!is_ideal(r, ideal)) throw validation_error("NotAnIdeal", "subset is not an ideal");
    // orbits of the group generated by the translations by ideal elements
    std::vector<int> cls(r.size);
    std::iota(cls.begin(), cls.end(), 0);
    std::function<int(int)> find = [&](int x) { return cls[x] == x ? x : cls[x] = find(cls[x]); };
    auto unite = [&](int a, int b) { cls[find(a)] = find(b); };
    for (int s : ideal)
        for (int x = 0; x < r.size; ++x) unite(x, r.act(x, s));
    std::map<int, int> index;
    std::vector<int> proj(r.size);
    for (int x = 0; x < r.size; ++x) {
        int root = find(x);
        if (!index.count(root)) index[root] = (int)index.size();
        proj[x] = index[root];
    }
    int n = (int)index.size();
    std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
    for (int x = 0; x < r.size; ++x)
        for (int y = 0; y < r.size; ++y) {
            int cx = proj[x], cy = proj[y], cz = proj[r.act(x, y)];
            if (t[cx][cy] == -1)
                t[cx][cy] = cz;
            else if (t[cx][cy] != cz)
                throw validation_error("NotAnIdeal", "quotient operation is not well-defined");
        }
    if (projection) *projection = proj;
    return rack_validate(t);
}

// ---- structure ----

InnData inner_group(const Rack& r) {
    InnData d;
    int n = r.size;
    for (int y = 0; y < n; ++y) {
        std::vector<int> perm(n);
        for (int x = 0; x < n; ++x) perm[x] = r.act(x, y);
        d.generators.push_back(perm);
    }
    std::set<std::vector<int>> seen;
    std::vector<int> idp(n);
    std::iota(idp.begin(), idp.end(), 0);
    std::vector<std::vector<int>> elems = {idp};
    seen.insert(idp);
    for (size_t i = 0; i < elems.size(); ++i)
        for (const auto& g : d.generators) {
            std::vector<int> comp(n);
            for (int x = 0; x < n; ++x) comp[x] = g[elems[i][x]];
            if (seen.insert(comp).second) elems.push_back(comp);
        }
    d.elements.assign(seen.begin(), seen.end());
    d.abelian = true;
    for (size_t i = 0; i < d.generators.size() && d.abelian; ++i)
        for (size_t j = i + 1; j < d.generators.size() && d.abelian; ++j) {
            for (int x = 0; x < n; ++x)
                if (d.generators[i][d.generators[j][x]] != d.generators[j][d.generators[i][x]]) {
                    d.abelian = false;
                    break;
                }
        }
    // components = orbits
    d.component_of.assign(n, -1);
    int comp = 0;
    for (int x = 0; x < n; ++x) {
        if (d.component_of[x] >= 0) continue;
        std::vector<int> stack = {x};
        d.component_of[x] = comp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int y = 0; y < n; ++y) {
                for (int w : {r.act(v, y), r.unact(v, y)}) {
                    if (d.component_of[w] < 0) {
                        d.component_of[w] = comp;
                        stack.push_back(w);
                    }
                }
            }
        }
        comp++;
    }
    d.num_components = comp;
    return d;
}

std::vector<int> subrack_closure(const Rack& r, std::vector<int> seed) {
    std::vector<bool> in(r.size, false);
    std::vector<int> frontier;
    for (int x : seed)
        if (!in[x]) {
            in[x] = true;
            frontier.push_back(x);
        }
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> members;
        for (int x = 0; x < r.size; ++x)
            if (in[x]) members.push_back(x);
        for (int a : members)
            for (int b : members) {
                int c = r.act(a, b);
                if (!in[c]) {
                    in[c] = true;
                    changed = true;
                }
            }
    }
    std::vector<int> out;
    for (int x = 0; x < r.size; ++x)
        if (in[x]) out.push_back(x);
    return out;
}

bool rack_generates(const Rack& r, const std::vector<int>& subset) {
    return (int)subrack_closure(r, subset).size() == r.size;
}

bool is_quandle(const Rack& r) {
    for (int x = 0; x < r.size; ++x)
        if (r.act(x, x) != x) return false;
    return true;
}

bool is_connected(const Rack& r) {
    if (r.size == 0) return false;
    return inner_group(r).num_components == 1;
}

Rack subrack(const Rack& r, const std::vector<int>& elements) {
    std::map<int, int> index;
    for (size_t i = 0; i < elements.size(); ++i) index[elements[i]] = (int)i;
    int n = (int)elements.size();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto it = index.find(r.act(elements[i], elements[j]));
            if (it == index.end())
                throw validation_error("NotASubrack", "subset is not closed");
            t[i][j] = it->second;
        }
    return rack_validate(t);
}

bool hereditarily_connected(const Rack& r) {
    long cap = cap_value(kDefaultHereditaryCap);
    if (r.size > cap)
        throw cap_error("TooLargeForHereditaryTest",
                        "subrack enumeration capped at size " + std::to_string(cap));
    std::set<std::vector<int>> subracks;
    for (unsigned mask = 1; mask < (1u << r.size); ++mask) {
        std::vector<int> seed;
        for (int x = 0; x < r.size; ++x)
            if (mask >> x & 1) seed.push_back(x);
        subracks.insert(subrack_closure(r, seed));
    }
    for (const auto& s : subracks)
        if (!is_connected(subrack(r, s))) return false;
    return true;
}

bool is_ideal(const Rack& r, const std::vector<int>& subset) {
    std::set<int> s(subset.begin(), subset.end());
    for (int x : subset)
        for (int y = 0; y < r.size; ++y)
            if (!s.count(r.act(x, y))) return false;
    return true;
}

nlohmann::json RackReport::to_json() const {
    nlohmann::json j = {{"quandle", quandle},
                        {"connected", connected},
                        {"hereditarily_connected",
                         hereditarily_conn ? nlohmann::json(*hereditarily_conn)
                                           : nlohmann::json(nullptr)},
                        {"components", num_components},
                        {"inn_abelian", inn_abelian},
                        {"inn_order", inn_order},
                        {"ideals", ideals}};
    if (subset_generates) j["subset_generates"] = *subset_generates;
    return j;
}

RackReport rack_predicates(const Rack& r, const std::vector<int>* probe_subset) {
    RackReport rep;
    rep.quandle = is_quandle(r);
    InnData inn = inner_group(r);
    rep.connected = r.size > 0 && inn.num_components == 1;
    rep.num_components = inn.num_components;
    rep.inn_abelian = inn.abelian;
    rep.inn_order = (long)inn.elements.size();
    if (r.size <= cap_value(kDefaultHereditaryCap))
        rep.hereditarily_conn = hereditarily_connected(r);
    // ideals are exactly the unions of connected components
    if (inn.num_components <= 20) {
        for (unsigned mask = 0; mask < (1u << inn.num_components); ++mask) {
            std::vector<int> ideal;
            for (int x = 0; x < r.size; ++x)
                if (mask >> inn.component_of[x] & 1) ideal.push_back(x);
            if (!is_ideal(r, ideal))
                throw validation_error("IdealSelfCheck", "component union is not an ideal");
            rep.ideals.push_back(ideal);
        }
    }
    if (probe_subset) {
        bool by_closure = rack_generates(r, *probe_subset);
        // generation criterion: meets every component and the image generates Inn
        std::vector<bool> met(inn.num_components, false);
        for (int x : *probe_subset) met[inn.component_of[x]] = true;
        bool meets_all = std::all_of(met.begin(), met.end(), [](bool b) { return b; });
        std::set<std::vector<int>> gen_closure;
        std::vector<int> idp(r.size);
        std::iota(idp.begin(), idp.end(), 0);
        std::vector<std::vector<int>> elems = {idp};
        gen_closure.insert(idp);
        for (size_t i = 0; i < elems.size(); ++i)
            for (int y : *probe_subset) {
                std::vector<int> comp(r.size);
                for (int x = 0; x < r.size; ++x) comp[x] = inn.generators[y][elems[i][x]];
                if (gen_closure.insert(comp).second) elems.push_back(comp);
            }
        bool by_criterion = meets_all && gen_closure.size() == inn.elements.size();
        if (by_closure != by_criterion)
            throw validation_error("GenerationCriterionMismatch",
                                   "closure and criterion disagree");
        rep.subset_generates = by_closure;
    }
    return rep;
}

bool nonsplitting_check(const FiniteGroup& G, const std::vector<int>& R) {
    if (!G.is_conjugacy_closed(R))
        throw validation_error("NotConjugacyClosed", "R must be conjugacy-closed");
    if ((int)G.closure(R).size() != G.size)
        throw validation_error("NotGenerating", "R must generate G");
    for (const auto& H : G.all_subgroups()) {
        std::set<int> h(H.begin(), H.end());
        std::vector<int> meet;
        for (int x : R)
            if (h.count(x)) meet.push_back(x);
        if (meet.empty()) continue;
        // single H-conjugacy class?
        std::set<int> orbit;
        std::vector<int> stack = {meet[0]};
        orbit.insert(meet[0]);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int g : H) {
                int y = G.conj(x, g);
                if (orbit.insert(y).second) stack.push_back(y);
            }
        }
        for (int x : meet)
            if (!orbit.count(x)) return false;
    }
    return true;
}

bool goursat_generates(const Rack& R, const Rack& S, const std::vector<std::pair<int, int>>& X) {
    if (!is_connected(R))
        throw validation_error("HypothesisFails", "first factor must be connected");
    InnData innS = inner_group(S);
    if (!innS.abelian)
        throw validation_error("HypothesisFails", "Inn of second factor must be abelian");
    bool has_trivial_actor = false;
    for (int s = 0; s < S.size && !has_trivial_actor; ++s) {
        bool triv = true;
        for (int x = 0; x < S.size; ++x)
            if (S.act(x, s) != x) triv = false;
        has_trivial_actor = triv;
    }
    if (!has_trivial_actor)
        throw validation_error("HypothesisFails",
                               "second factor needs an element acting trivially");
    std::vector<int> projR, projS;
    for (auto& [a, b] : X) {
        projR.push_back(a);
        projS.push_back(b);
    }
    bool result = rack_generates(R, projR) && rack_generates(S, projS);
    // cross-check against the closure in the product
    if ((long)R.size * S.size <= 4096) {
        Rack prod = product_rack(R, S);
        std::vector<int> seed;
        for (auto& [a, b] : X) seed.push_back(a * S.size + b);
        bool direct = rack_generates(prod, seed);
        if (direct != result)
            throw validation_error("GoursatSelfCheck", "criterion and closure disagree");
    }
    return result;
}

bool synchronized(const Rack& R, const Rack& S) {
    InnData ir = inner_group(R), is = inner_group(S);
    Rack prod = product_rack(R, S);
    InnData ip = inner_group(prod);
    for (int cr = 0; cr < ir.num_components; ++cr)
        for (int cs = 0; cs < is.num_components; ++cs) {
            int witness_comp = -1;
            for (int x = 0; x < R.size; ++x)
                for (int y = 0; y < S.size; ++y) {
                    if (ir.component_of[x] != cr || is.component_of[y] != cs) continue;
                    int pc = ip.component_of[x * S.size + y];
                    if (witness_comp < 0) witness_comp = pc;
                    if (pc != witness_comp) return false;
                }
        }
    return true;
}

bool racks_isomorphic(const Rack& a, const Rack& b) {
    if (a.size != b.size) return false;
    int n = a.size;
    if (n > 8) throw cap_error("IsomorphismCapExceeded", "exhaustive search capped at size 8");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y)
                if (perm[a.table[x][y]] != b.table[perm[x]][perm[y]]) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// ---- cocycles ----

nlohmann::json Cocycle2::to_json() const {
    nlohmann::json vals = nlohmann::json::array();
    for (int x = 0; x < rack_size; ++x) {
        nlohmann::json row = nlohmann::json::array();
        for (int y = 0; y < rack_size; ++y) row.push_back(field->scalar_to_json(value(x, y)));
        vals.push_back(row);
    }
    return {{"field", field->spec().to_json()},
            {"values", vals},
            {"cyclotomic_order", cyclotomic_order}};
}

Cocycle2 cocycle_validate(const Rack& r, FieldPtr F, std::vector<Scalar> values) {
    int n = r.size;
    if ((int)values.size() != n * n)
        throw validation_error("BadCocycle", "value table has wrong shape");
    for (const Scalar& v : values)
        if (F->is_zero(v)) throw validation_error("ZeroValue", "cocycle values must be nonzero");
    auto val = [&](int x, int y) -> const Scalar& { return values[x * n + y]; };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                Scalar lhs = F->mul(val(x, y), val(r.act(x, y), z));
                Scalar rhs = F->mul(val(x, z), val(r.act(x, z), r.act(y, z)));
                if (!F->eq(lhs, rhs))
                    throw validation_error(
                        "CocycleIdentityFails",
                        "witness (" + std::to_string(x) + "," + std::to_string(y) + "," +
                            std::to_string(z) + ")");
            }
    Cocycle2 c;
    c.field = std::move(F);
    c.rack_size = n;
    c.values = std::move(values);
    long order = 1;
    for (const Scalar& v : c.values) {
        long o = c.field->torsion_order(v);
        if (o == 0) {
            order = 0;
            break;
        }
        order = std::lcm(order, o);
    }
    c.cyclotomic_order = order;
    if (order > 0) {
        c.zeta = c.field->root_of_unity(order);
        c.exps.assign(n * n, 0);
        // match each value to a power of zeta
        std::vector<Scalar> powers(order);
        Scalar acc = c.field->one();
        for (long e = 0; e < order; ++e) {
            powers[e] = acc;
            acc = c.field->mul(acc, c.zeta);
        }
        for (int i = 0; i < n * n; ++i) {
            int found = -1;
            for (long e = 0; e < order; ++e)
                if (c.field->eq(c.values[i], powers[e])) {
                    found = (int)e;
                    break;
                }
            if (found < 0)
                throw validation_error("BadCocycle", "torsion value outside the cyclic group");
            c.exps[i] = found;
        }
    }
    return c;
}

Cocycle2 constant_cocycle(const Rack& r, FieldPtr F, const Scalar& lambda) {
    std::vector<Scalar> vals(r.size * r.size, lambda);
    return cocycle_validate(r, std::move(F), std::move(vals));
}

namespace {
Cocycle2 two_color_cocycle(const Rack& rt2, FieldPtr F, bool wedge) {
    int n = rt2.size;
    if (n % 2 != 0)
        throw validation_error("BadCocycle", "expected a rack of the form R x T2");
    Scalar one = F->one(), minus = F->neg(F->one());
    std::vector<Scalar> vals(n * n, one);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int cx = x % 2, cy = y % 2;  // 0 = phi, 1 = psi
            bool flip = wedge ? (cx == 1 && cy == 1) : (cx == 1 && cy == 0);
            if (flip) vals[x * n + y] = minus;
        }
    return cocycle_validate(rt2, std::move(F), std::move(vals));
}
}  // namespace

Cocycle2 wedge_cocycle(const Rack& r_times_t2, FieldPtr F) {
    return two_color_cocycle(r_times_t2, std::move(F), true);
}

Cocycle2 pm_cocycle(const Rack& r_times_t2, FieldPtr F) {
    return two_color_cocycle(r_times_t2, std::move(F), false);
}

Rack rackify(const Rack& r, const Cocycle2& c) {
    if (c.cyclotomic_order <= 0)
        throw validation_error("CocycleNotValuedInA", "rackification needs torsion values");
    long d = c.cyclotomic_order;
    int n = r.size;
    int sz = (int)(n * d);
    std::vector<std::vector<int>> t(sz, std::vector<int>(sz));
    for (int x = 0; x < n; ++x)
        for (long a = 0; a < d; ++a)
            for (int y = 0; y < n; ++y)
                for (long b = 0; b < d; ++b) {
                    int e = c.exponent(x, y);
                    t[x * d + a][y * d + b] = r.act(x, y) * d + (int)((a + e) % d);
                }
    return rack_validate(t);
}

}  // namespace braidstat
