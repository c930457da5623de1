#ifndef HGW_TEST_HELPERS_HPP
#define HGW_TEST_HELPERS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hgw/instance.hpp"
#include "hgw/pipeline.hpp"

namespace hgwtest {

/* Realized catalog instances, built once per process. */
inline const hgw::InstanceData& data(const std::string& name) {
    static std::map<std::string, hgw::InstanceData> cache;
    auto it = cache.find(name);
    if (it == cache.end())
        it = cache.emplace(name, hgw::realize_instance(hgw::catalog_instance(name))).first;
    return it->second;
}

inline hgw::CosetSpace cosets(const hgw::InstanceData& d) {
    return hgw::coset_space(d.G.table, d.spec.gprime);
}

/* Independent brute-force oracle for the structure enumeration: close every
 * pair of fixed-point-free permutations, keep closures of order n whose
 * non-identity elements are all fixed-point-free (regular subgroups), and
 * filter by conjugation-stability under the translation image. */
inline std::set<std::vector<hgw::Perm>> brute_force_structures(
    const std::vector<hgw::Perm>& lambda) {
    using namespace hgw;
    int n = (int)lambda[0].img.size();
    std::vector<Perm> all;
    {
        Perm p = Perm::identity(n);
        std::vector<int> v = p.img;
        do {
            Perm q;
            q.img = v;
            all.push_back(q);
        } while (std::next_permutation(v.begin(), v.end()));
    }
    std::vector<Perm> fpf;
    for (const Perm& p : all)
        if (p.is_fixed_point_free()) fpf.push_back(p);

    auto close = [&](const Perm& a, const Perm& b) {
        std::set<Perm> els{Perm::identity(n), a, b};
        bool grew = true;
        while (grew && (int)els.size() <= n) {
            grew = false;
            for (const Perm& x : els)
                for (const Perm& y : els) {
                    Perm z = compose(x, y);
                    if (!els.count(z)) {
                        els.insert(z);
                        grew = true;
                        if ((int)els.size() > n) return std::vector<Perm>{};
                    }
                }
        }
        return std::vector<Perm>(els.begin(), els.end());
    };

    std::set<std::vector<Perm>> hits;
    for (const Perm& a : fpf)
        for (const Perm& b : fpf) {
            std::vector<Perm> els = close(a, b);
            if ((int)els.size() != n) continue;
            bool reg = true;
            for (const Perm& p : els)
                if (!p.is_identity() && !p.is_fixed_point_free()) reg = false;
            if (!reg) continue;
            bool norm = true;
            for (const Perm& g : lambda)
                for (const Perm& p : els)
                    if (!std::binary_search(els.begin(), els.end(), conjugate(g, p))) norm = false;
            if (!norm) continue;
            hits.insert(els);
        }
    return hits;
}

/* Group algebra Q[N] assembled directly from the multiplication table (the
 * ambient field is Q itself), for order-arithmetic tests that do not need a
 * field extension. */
inline hgw::HopfAlgebra make_group_algebra(const hgw::PermGroup& N) {
    using namespace hgw;
    int n = N.order();
    HopfAlgebra H;
    H.n = n;
    H.d = 1;
    H.N = N;
    H.nmul.resize((size_t)n * n);
    H.ninv.resize(n);
    for (int i = 0; i < n; i++) {
        H.ninv[i] = N.element_index(inverse(N.elements[i]));
        for (int j = 0; j < n; j++)
            H.nmul[(size_t)i * n + j] = N.element_index(compose(N.elements[i], N.elements[j]));
    }
    H.basis = QMat::identity(n);
    H.mult_t.assign((size_t)n * n * n, Rat(0));
    H.comult_t.assign((size_t)n * n * n, Rat(0));
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            H.mult_t[((size_t)i * n + j) * n + H.nmul[(size_t)i * n + j]] = 1;
    for (int i = 0; i < n; i++)
        H.comult_t[((size_t)i * n + i) * n + i] = 1;
    H.counit.assign(n, Rat(1));
    H.antipode = QMat(n, n);
    for (int i = 0; i < n; i++) H.antipode.at(i, H.ninv[i]) = 1;
    H.unit.assign(n, Rat(0));
    H.unit[N.element_index(Perm::identity(N.n))] = 1;
    H.commutative = is_abelian(N);
    return H;
}

inline hgw::PermGroup cyclic_group(int n) {
    hgw::Perm c;
    c.img.resize(n);
    for (int i = 0; i < n; i++) c.img[i] = (i + 1) % n;
    return hgw::generate(n, {c});
}

template <typename F>
std::optional<hgw::errc> thrown_kind(F&& f) {
    try {
        f();
    } catch (const hgw::error& e) {
        return e.kind;
    }
    return std::nullopt;
}

} // namespace hgwtest

#endif
