#include "hgw/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hgw {

Perm compose(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree())
        fail(errc::invalid_argument, "composing permutations of different degrees");
    Perm c;
    c.img.resize(a.degree());
    for (int i = 0; i < a.degree(); i++) c.img[i] = a.img[b.img[i]];
    return c;
}

Perm inverse(const Perm& a) {
    Perm b;
    b.img.resize(a.degree());
    for (int i = 0; i < a.degree(); i++) b.img[a.img[i]] = i;
    return b;
}

Perm conjugate(const Perm& g, const Perm& x) {
    return compose(compose(g, x), inverse(g));
}

int perm_order(const Perm& a) {
    int ord = 1;
    Perm p = a;
    while (!p.is_identity()) {
        p = compose(p, a);
        ord++;
        if (ord > 1 && (size_t)ord > (size_t)1 << 20)
            fail(errc::internal_inconsistency, "runaway permutation order");
    }
    return ord;
}

std::string cycle_string(const Perm& a) {
    std::ostringstream os;
    std::vector<bool> seen(a.degree(), false);
    bool any = false;
    for (int i = 0; i < a.degree(); i++) {
        if (seen[i] || a.img[i] == i) { seen[i] = true; continue; }
        any = true;
        os << '(';
        int j = i;
        bool first = true;
        do {
            if (!first) os << ' ';
            os << j;
            seen[j] = true;
            j = a.img[j];
            first = false;
        } while (j != i);
        os << ')';
    }
    if (!any) os << "()";
    return os.str();
}

bool PermGroup::contains(const Perm& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

int PermGroup::element_index(const Perm& p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || *it != p) return -1;
    return (int)(it - elements.begin());
}

PermGroup generate(int n, const std::vector<Perm>& gens) {
    for (const Perm& g : gens)
        if (g.degree() != n) fail(errc::invalid_argument, "generator degree mismatch");
    std::set<Perm> closure;
    closure.insert(Perm::identity(n));
    std::vector<Perm> work(closure.begin(), closure.end());
    while (!work.empty()) {
        Perm p = work.back();
        work.pop_back();
        for (const Perm& g : gens) {
            Perm q = compose(g, p);
            if (closure.insert(q).second) work.push_back(q);
        }
    }
    PermGroup G;
    G.n = n;
    G.gens = gens;
    G.elements.assign(closure.begin(), closure.end());
    return G;
}

bool is_abelian(const PermGroup& G) {
    for (size_t i = 0; i < G.elements.size(); i++)
        for (size_t j = i + 1; j < G.elements.size(); j++)
            if (compose(G.elements[i], G.elements[j]) != compose(G.elements[j], G.elements[i]))
                return false;
    return true;
}

GroupFingerprint group_fingerprint(const PermGroup& G) {
    GroupFingerprint f;
    f.order = G.order();
    f.abelian = is_abelian(G);
    for (const Perm& p : G.elements) f.element_orders.push_back(perm_order(p));
    std::sort(f.element_orders.begin(), f.element_orders.end());
    return f;
}

std::string GroupFingerprint::to_string() const {
    std::ostringstream os;
    os << "order=" << order << (abelian ? " abelian" : " nonabelian") << " element-orders=[";
    for (size_t i = 0; i < element_orders.size(); i++)
        os << (i ? " " : "") << element_orders[i];
    os << "]";
    return os.str();
}

int GroupTable::inv(int i) const {
    for (int j = 0; j < m; j++)
        if (mul(i, j) == id) return j;
    fail(errc::internal_inconsistency, "group table has an element without inverse");
}

GroupTable GroupTable::from_perms(const std::vector<Perm>& sorted_elements) {
    GroupTable T;
    T.m = (int)sorted_elements.size();
    T.t.resize((size_t)T.m * T.m);
    auto index_of = [&](const Perm& p) {
        auto it = std::lower_bound(sorted_elements.begin(), sorted_elements.end(), p);
        if (it == sorted_elements.end() || *it != p)
            fail(errc::invalid_argument, "element list not closed under composition");
        return (int)(it - sorted_elements.begin());
    };
    for (int i = 0; i < T.m; i++) {
        if (sorted_elements[i].is_identity()) T.id = i;
        for (int j = 0; j < T.m; j++)
            T.t[(size_t)i * T.m + j] = index_of(compose(sorted_elements[i], sorted_elements[j]));
    }
    if (T.id < 0) fail(errc::invalid_argument, "element list lacks the identity");
    return T;
}

std::vector<int> CosetSpace::alternate_reps() const {
    std::vector<int> alt(npoints, -1);
    for (int g = 0; g < (int)coset_of.size(); g++) alt[coset_of[g]] = g;  // last wins = max
    return alt;
}

CosetSpace coset_space(const GroupTable& G, const std::vector<int>& subgroup) {
    std::vector<int> sub = subgroup;
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    if (sub.empty()) fail(errc::invalid_subgroup, "empty subgroup");
    for (int s : sub)
        if (s < 0 || s >= G.m) fail(errc::invalid_subgroup, "subgroup index out of range");
    auto member = [&](int x) { return std::binary_search(sub.begin(), sub.end(), x); };
    if (!member(G.id)) fail(errc::invalid_subgroup, "subgroup misses the identity");
    for (int a : sub)
        for (int b : sub)
            if (!member(G.mul(a, b)))
                fail(errc::invalid_subgroup, "subgroup not closed under multiplication");

    CosetSpace X;
    X.subgroup = sub;
    X.coset_of.assign(G.m, -1);
    for (int g = 0; g < G.m; g++) {
        if (X.coset_of[g] >= 0) continue;
        int point = X.npoints++;
        X.reps.push_back(g);
        for (int s : sub) X.coset_of[G.mul(g, s)] = point;
    }
    return X;
}

std::vector<Perm> lambda_embedding(const GroupTable& G, const CosetSpace& X) {
    std::vector<Perm> lam(G.m);
    for (int g = 0; g < G.m; g++) {
        lam[g].img.resize(X.npoints);
        for (int x = 0; x < X.npoints; x++)
            lam[g].img[x] = X.coset_of[G.mul(g, X.reps[x])];
    }
    return lam;
}

bool is_regular(const PermGroup& N) {
    if (N.order() != N.n) return false;
    // transitivity: the orbit of 0 must be the whole point set
    std::vector<bool> hit(N.n, false);
    int count = 0;
    for (const Perm& p : N.elements)
        if (!hit[p.img[0]]) { hit[p.img[0]] = true; count++; }
    return count == N.n;
}

bool is_normalized(const PermGroup& N, const std::vector<Perm>& lambdaG) {
    for (const Perm& g : lambdaG)
        for (const Perm& x : N.elements)
            if (!N.contains(conjugate(g, x))) return false;
    return true;
}

namespace {

/* Close a sorted element set under composition.  Returns false (and stops
 * early) if the closure grows past `cap` or produces a non-identity element
 * with a fixed point, which can never happen inside a regular subgroup. */
bool close_under_composition(std::set<Perm>& S, int cap) {
    std::vector<Perm> work(S.begin(), S.end());
    while (!work.empty()) {
        Perm p = work.back();
        work.pop_back();
        std::vector<Perm> snapshot(S.begin(), S.end());
        for (const Perm& q : snapshot) {
            for (const Perm& r : {compose(p, q), compose(q, p)}) {
                if (S.count(r)) continue;
                if (!r.is_identity() && !r.is_fixed_point_free()) return false;
                S.insert(r);
                if ((int)S.size() > cap) return false;
                work.push_back(r);
            }
        }
    }
    return true;
}

std::vector<Perm> small_generating_set(int n, const std::vector<Perm>& elements) {
    std::vector<Perm> gens;
    PermGroup sofar = generate(n, {});
    for (const Perm& p : elements) {
        if (sofar.contains(p)) continue;
        gens.push_back(p);
        sofar = generate(n, gens);
        if (sofar.order() == (int)elements.size()) break;
    }
    return gens;
}

}  // namespace

std::vector<PermGroup> enumerate_regular_normalized(const std::vector<Perm>& lambdaG,
                                                    int max_points) {
    if (lambdaG.empty()) fail(errc::invalid_argument, "empty translation image");
    int n = lambdaG[0].degree();
    if (n > max_points)
        fail(errc::resource_limit,
             "point count " + std::to_string(n) + " exceeds the ceiling " +
                 std::to_string(max_points) + "; raise --max-points to search anyway");
    if (n == 1) return {generate(1, {})};

    // Pool: every fixed-point-free permutation of n points.
    std::vector<Perm> pool;
    {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 0);
        do {
            Perm p;
            p.img = v;
            if (p.is_fixed_point_free()) pool.push_back(p);
        } while (std::next_permutation(v.begin(), v.end()));
    }
    std::sort(pool.begin(), pool.end());
    auto pool_index = [&](const Perm& p) -> int {
        auto it = std::lower_bound(pool.begin(), pool.end(), p);
        if (it == pool.end() || *it != p) return -1;
        return (int)(it - pool.begin());
    };

    // Partition the pool into orbits of conjugation by the translation image.
    // Any candidate subgroup is normalized by it, hence a union of orbits.
    std::vector<int> orbit_of(pool.size(), -1);
    std::vector<std::vector<int>> orbits;
    for (size_t s = 0; s < pool.size(); s++) {
        if (orbit_of[s] >= 0) continue;
        std::vector<int> orbit, work{(int)s};
        orbit_of[s] = (int)orbits.size();
        while (!work.empty()) {
            int i = work.back();
            work.pop_back();
            orbit.push_back(i);
            for (const Perm& g : lambdaG) {
                int j = pool_index(conjugate(g, pool[i]));
                if (j < 0) fail(errc::internal_inconsistency, "conjugate left the pool");
                if (orbit_of[j] < 0) {
                    orbit_of[j] = (int)orbits.size();
                    work.push_back(j);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(orbit);
    }

    std::set<std::vector<Perm>> found;
    Perm id = Perm::identity(n);

    /* Depth-first over orbit indices in increasing order.  The closure of a
     * union of conjugation-closed sets is conjugation-closed, so membership
     * of whole orbits is preserved, and any regular normalized subgroup is
     * reached by picking its orbits smallest-first. */
    auto record_or_descend = [&](auto&& self, const std::set<Perm>& S, size_t next_orbit) -> void {
        if ((int)S.size() == n) {
            std::vector<Perm> elems(S.begin(), S.end());
            found.insert(elems);
            return;
        }
        for (size_t oi = next_orbit; oi < orbits.size(); oi++) {
            const Perm& head = pool[orbits[oi][0]];
            if (S.count(head)) continue;  // orbit already inside the closure
            if ((int)(S.size() + orbits[oi].size()) > n) continue;
            std::set<Perm> T = S;
            for (int pi : orbits[oi]) T.insert(pool[pi]);
            if (!close_under_composition(T, n)) continue;
            self(self, T, oi + 1);
        }
    };
    record_or_descend(record_or_descend, {id}, 0);

    std::vector<PermGroup> out;
    for (const auto& elems : found) {
        PermGroup N;
        N.n = n;
        N.elements = elems;
        N.gens = small_generating_set(n, elems);
        if (!is_regular(N) || !is_normalized(N, lambdaG))
            fail(errc::internal_inconsistency, "enumerated subgroup failed its own invariants");
        out.push_back(std::move(N));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hgw
