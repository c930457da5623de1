#include "hgw/numfield.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hgw {

NumberField NumberField::create(std::vector<Int> min_poly) {
    if (min_poly.size() < 2) fail(errc::validation, "minimal polynomial must have degree >= 1");
    if (min_poly.back() != 1) fail(errc::validation, "minimal polynomial must be monic");
    NumberField E;
    E.min_poly = std::move(min_poly);
    E.deg = (int)E.min_poly.size() - 1;
    // x^deg = -(c_0 + c_1 x + ... + c_{deg-1} x^{deg-1}), then shift-reduce.
    std::vector<Rat> xd(E.deg);
    for (int k = 0; k < E.deg; k++) xd[k] = -Rat(E.min_poly[k]);
    E.red.push_back(xd);
    for (int k = 1; k <= E.deg - 2; k++) {
        const std::vector<Rat>& prev = E.red.back();
        std::vector<Rat> cur(E.deg);
        // multiply by x: shift, then fold the overflow coefficient back in
        Rat top = prev[E.deg - 1];
        for (int j = E.deg - 1; j >= 1; j--) cur[j] = prev[j - 1];
        cur[0] = 0;
        if (!is_zero(top))
            for (int j = 0; j < E.deg; j++) cur[j] += top * E.red[0][j];
        E.red.push_back(cur);
    }
    return E;
}

Elem NumberField::one() const {
    Elem e(deg);
    e[0] = 1;
    return e;
}

Elem NumberField::gen() const {
    Elem e(deg);
    if (deg == 1) {
        e[0] = -Rat(min_poly[0]);  // x ≡ -c_0 in a degree-1 quotient
    } else {
        e[1] = 1;
    }
    return e;
}

Elem NumberField::from_rat(const Rat& c) const {
    Elem e(deg);
    e[0] = c;
    return e;
}

Elem NumberField::add(const Elem& a, const Elem& b) const {
    Elem c(deg);
    for (int i = 0; i < deg; i++) c[i] = a[i] + b[i];
    return c;
}

Elem NumberField::sub(const Elem& a, const Elem& b) const {
    Elem c(deg);
    for (int i = 0; i < deg; i++) c[i] = a[i] - b[i];
    return c;
}

Elem NumberField::neg(const Elem& a) const {
    Elem c(deg);
    for (int i = 0; i < deg; i++) c[i] = -a[i];
    return c;
}

Elem NumberField::scale(const Rat& c, const Elem& a) const {
    Elem b(deg);
    for (int i = 0; i < deg; i++) b[i] = c * a[i];
    return b;
}

Elem NumberField::mul(const Elem& a, const Elem& b) const {
    if ((int)a.size() != deg || (int)b.size() != deg)
        fail(errc::invalid_argument, "element has wrong coordinate length");
    std::vector<Rat> conv(2 * deg - 1);
    for (int i = 0; i < deg; i++) {
        if (is_zero(a[i])) continue;
        for (int j = 0; j < deg; j++) conv[i + j] += a[i] * b[j];
    }
    Elem c(conv.begin(), conv.begin() + deg);
    for (int k = deg; k < 2 * deg - 1; k++) {
        if (is_zero(conv[k])) continue;
        const std::vector<Rat>& r = red[k - deg];
        for (int j = 0; j < deg; j++) c[j] += conv[k] * r[j];
    }
    return c;
}

bool NumberField::is_zero_elem(const Elem& a) const {
    for (const Rat& x : a)
        if (!is_zero(x)) return false;
    return true;
}

bool NumberField::is_rational(const Elem& a) const {
    for (int i = 1; i < deg; i++)
        if (!is_zero(a[i])) return false;
    return true;
}

namespace {

// dense polynomial helpers over Q, constant first, for the extended gcd
int poly_deg(const std::vector<Rat>& p) {
    for (int i = (int)p.size() - 1; i >= 0; i--)
        if (!is_zero(p[i])) return i;
    return -1;
}

std::vector<Rat> poly_submul(std::vector<Rat> r, const std::vector<Rat>& q,
                             const std::vector<Rat>& d) {
    // r -= q*d
    if (r.size() < q.size() + d.size()) r.resize(q.size() + d.size());
    for (size_t i = 0; i < q.size(); i++) {
        if (is_zero(q[i])) continue;
        for (size_t j = 0; j < d.size(); j++) r[i + j] -= q[i] * d[j];
    }
    return r;
}

// returns quotient of r by d (d nonzero), r becomes the remainder
std::vector<Rat> poly_divmod(std::vector<Rat>& r, const std::vector<Rat>& d) {
    int dd = poly_deg(d);
    std::vector<Rat> q;
    int dr = poly_deg(r);
    if (dr >= dd) q.resize(dr - dd + 1);
    while ((dr = poly_deg(r)) >= dd) {
        Rat f = r[dr] / d[dd];
        q[dr - dd] = f;
        for (int j = 0; j <= dd; j++) r[dr - dd + j] -= f * d[j];
    }
    return q;
}

}  // namespace

Elem NumberField::inv(const Elem& a) const {
    if (is_zero_elem(a)) fail(errc::division_by_zero, "inverse of zero");
    // extended Euclid: maintain u with u·a ≡ r (mod f)
    std::vector<Rat> r0(min_poly.size()), r1(a.begin(), a.end());
    for (size_t i = 0; i < min_poly.size(); i++) r0[i] = Rat(min_poly[i]);
    std::vector<Rat> u0{Rat(0)}, u1{Rat(1)};
    while (poly_deg(r1) >= 0) {
        std::vector<Rat> q = poly_divmod(r0, r1);
        std::swap(r0, r1);  // r0 is now the remainder, promote r1
        u0 = poly_submul(u0, q, u1);
        std::swap(u0, u1);
    }
    int dg = poly_deg(r0);
    if (dg > 0)
        fail(errc::reducibility,
             "modulus is reducible: found a zero divisor with nontrivial gcd of degree " +
                 std::to_string(dg));
    // r0 is a nonzero constant c, and u0·a ≡ c (mod f)
    Rat cinv = 1 / r0[0];
    std::vector<Rat> u(deg);
    // reduce u0 mod f (its degree is < deg f already when deg a < deg f)
    std::vector<Rat> rem = u0;
    if (poly_deg(rem) >= deg) {
        std::vector<Rat> f(min_poly.size());
        for (size_t i = 0; i < min_poly.size(); i++) f[i] = Rat(min_poly[i]);
        poly_divmod(rem, f);
    }
    for (int i = 0; i <= poly_deg(rem) && i < deg; i++) u[i] = rem[i] * cinv;
    return u;
}

Elem NumberField::div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

Elem NumberField::eval_poly(const std::vector<Rat>& coeffs, const Elem& at) const {
    Elem acc = zero();
    for (int i = (int)coeffs.size() - 1; i >= 0; i--) {
        acc = mul(acc, at);
        acc[0] += coeffs[i];
    }
    return acc;
}

Elem NumberField::eval_int_poly(const std::vector<Int>& coeffs, const Elem& at) const {
    std::vector<Rat> c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); i++) c[i] = Rat(coeffs[i]);
    return eval_poly(c, at);
}

QMat NumberField::mult_matrix(const Elem& a) const {
    QMat M(deg, deg);
    Elem cur = a;
    M.set_row(0, cur);
    for (int k = 1; k < deg; k++) {
        cur = mul(cur, gen());
        M.set_row(k, cur);
    }
    return M;
}

Rat NumberField::trace(const Elem& a) const {
    QMat M = mult_matrix(a);
    Rat t = 0;
    for (int k = 0; k < deg; k++) t += M.at(k, k);
    return t;
}

std::string elem_to_string(const Elem& a) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < a.size(); i++) os << (i ? " " : "") << rat_to_string(a[i]);
    os << "]";
    return os.str();
}

Elem apply(const NumberField& E, const Automorphism& s, const Elem& a) {
    return E.eval_poly(a, s.gen_image);
}

QMat aut_matrix(const NumberField& E, const Automorphism& s) {
    QMat M(E.deg, E.deg);
    Elem cur = E.one();
    M.set_row(0, cur);
    for (int k = 1; k < E.deg; k++) {
        cur = E.mul(cur, s.gen_image);
        M.set_row(k, cur);
    }
    return M;
}

GaloisGroup build_galois_group(const NumberField& E, const std::vector<Automorphism>& gens) {
    for (size_t i = 0; i < gens.size(); i++) {
        Elem v = E.eval_int_poly(E.min_poly, gens[i].gen_image);
        if (!E.is_zero_elem(v))
            fail(errc::invalid_automorphism,
                 "generator image " + std::to_string(i) + " is not a root of the minimal polynomial");
    }
    std::set<Elem> closure;
    closure.insert(E.gen());  // identity
    std::vector<Elem> work(closure.begin(), closure.end());
    while (!work.empty()) {
        Elem cur = work.back();
        work.pop_back();
        for (const Automorphism& g : gens) {
            // (g ∘ current) sends the generator to current's image evaluated at g
            Elem nxt = apply(E, g, cur);
            if (closure.insert(nxt).second) {
                if ((int)closure.size() > E.deg)
                    fail(errc::not_galois, "automorphism closure exceeds the degree");
                work.push_back(nxt);
            }
        }
    }
    if ((int)closure.size() != E.deg)
        fail(errc::not_galois, "automorphism closure has size " +
                                   std::to_string(closure.size()) + " but the degree is " +
                                   std::to_string(E.deg) + "; extension is not Galois over Q");

    GaloisGroup G;
    for (const Elem& im : closure) G.elements.push_back(Automorphism{im});
    std::sort(G.elements.begin(), G.elements.end());
    for (const Automorphism& s : G.elements) G.mats.push_back(aut_matrix(E, s));

    auto index_of = [&](const Elem& im) {
        Automorphism probe{im};
        auto it = std::lower_bound(G.elements.begin(), G.elements.end(), probe);
        if (it == G.elements.end() || !(*it == probe))
            fail(errc::internal_inconsistency, "composition left the automorphism set");
        return (int)(it - G.elements.begin());
    };
    G.table.m = (int)G.elements.size();
    G.table.t.resize((size_t)G.table.m * G.table.m);
    for (int i = 0; i < G.table.m; i++) {
        if (G.elements[i].gen_image == E.gen()) G.id = i;
        for (int j = 0; j < G.table.m; j++) {
            Elem comp = apply(E, G.elements[i], G.elements[j].gen_image);
            G.table.t[(size_t)i * G.table.m + j] = index_of(comp);
        }
    }
    G.table.id = G.id;
    return G;
}

Int trace_form_disc(const NumberField& E, const Lattice& B) {
    if (B.rank() != E.deg || B.dim != E.deg)
        fail(errc::rank_deficient, "trace-form discriminant needs a full-rank lattice");
    QMat gram(E.deg, E.deg);
    QMat rows = B.qrows();
    for (int i = 0; i < E.deg; i++)
        for (int j = i; j < E.deg; j++) {
            Rat t = E.trace(E.mul(rows.row(i), rows.row(j)));
            gram.at(i, j) = t;
            gram.at(j, i) = t;
        }
    Rat d = det(gram);
    if (!is_integer(d))
        fail(errc::internal_inconsistency, "trace form of an integral lattice must be integral");
    return d.get_num();
}

SubfieldData fixed_field(const NumberField& E, const GaloisGroup& G,
                         const std::vector<int>& gprime, const Lattice& OE) {
    std::vector<int> subg = gprime;
    std::sort(subg.begin(), subg.end());
    subg.erase(std::unique(subg.begin(), subg.end()), subg.end());
    for (int s : subg)
        if (s < 0 || s >= G.order()) fail(errc::invalid_subgroup, "subgroup index out of range");
    if (subg.empty() || !std::binary_search(subg.begin(), subg.end(), G.id))
        fail(errc::invalid_subgroup, "subgroup must contain the identity");
    for (int a : subg)
        for (int b : subg)
            if (!std::binary_search(subg.begin(), subg.end(), G.table.mul(a, b)))
                fail(errc::invalid_subgroup, "subgroup not closed under composition");

    SubfieldData L;
    L.gprime = subg;
    int m = E.deg / (int)subg.size();
    L.degree = m;

    // fixed space: z·(M_s - I) = 0 for every s in the subgroup
    QMat stacked(E.deg, E.deg * (int)subg.size());
    for (size_t k = 0; k < subg.size(); k++) {
        QMat D = sub(G.mats[subg[k]], QMat::identity(E.deg));
        for (int i = 0; i < E.deg; i++)
            for (int j = 0; j < E.deg; j++) stacked.at(i, (int)k * E.deg + j) = D.at(i, j);
    }
    QMat K = left_nullspace(stacked);
    if (K.m != m) fail(errc::internal_inconsistency, "fixed field has unexpected dimension");
    L.qbasis = Lattice::from_rows(K).qrows();  // canonical basis of the subspace

    L.OL = intersect_with_subspace(OE, L.qbasis);
    if (L.OL.rank() != m)
        fail(errc::internal_inconsistency, "integral basis of the subfield has wrong rank");

    // disc via Tr_{L/Q} = Tr_{E/Q} / [E:L] on the subfield
    QMat gram(m, m);
    Rat fdeg = Rat((int)subg.size());
    for (int i = 0; i < m; i++)
        for (int j = i; j < m; j++) {
            Rat t = E.trace(E.mul(L.OL.qrow(i), L.OL.qrow(j))) / fdeg;
            gram.at(i, j) = t;
            gram.at(j, i) = t;
        }
    Rat d = det(gram);
    if (!is_integer(d) || is_zero(d))
        fail(errc::internal_inconsistency, "subfield trace form must have nonzero integer determinant");
    L.disc = d.get_num();
    return L;
}

Rat subfield_trace(const NumberField& E, const SubfieldData& L, const Elem& z) {
    if (!solve_in_rowspace(L.qbasis, z))
        fail(errc::invalid_argument, "element is not in the subfield");
    return E.trace(z) / Rat((int)L.gprime.size());
}

bool is_domestic(int degree_L, const Int& disc_L) {
    for (auto& [p, e] : factor(Int(degree_L)))
        if (!is_unramified(p, disc_L)) return false;
    return true;
}

} // namespace hgw
