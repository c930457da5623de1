#include "hgw/freeness.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hgw {

std::vector<ZMat> integral_action_matrices(const HopfAlgebra& H, const ActionTable& T,
                                           const Lattice& order) {
    if (order.dim != H.n || order.rank() != H.n)
        fail(errc::invalid_argument, "order must have full rank in H");
    int m = T.m;
    std::vector<ZMat> out;
    out.reserve(H.n);
    for (int r = 0; r < order.rank(); r++) {
        std::vector<Rat> u = order.qrow(r);
        ZMat M(m, m);
        for (int a = 0; a < m; a++)
            for (int b = 0; b < m; b++) {
                Rat s = 0;
                for (int i = 0; i < H.n; i++)
                    if (sgn(u[i]) != 0) s += u[i] * T.flat.at(i, a * m + b);
                if (!is_integer(s))
                    fail(errc::invalid_argument,
                         "order does not act integrally on the integral basis");
                M.at(a, b) = s.get_num();
            }
        out.push_back(std::move(M));
    }
    return out;
}

Int generator_index(const std::vector<ZMat>& action, const std::vector<Int>& theta) {
    int m = (int)action.size();
    QMat rows(m, m);
    for (int r = 0; r < m; r++)
        for (int b = 0; b < m; b++) {
            Int s = 0;
            for (int a = 0; a < m; a++) s += theta[a] * action[r].at(a, b);
            rows.at(r, b) = s;
        }
    Lattice span = Lattice::from_rows(rows);
    if (span.rank() < m) return 0;
    return index_in(span, Lattice::standard(m));
}

std::vector<std::vector<Int>> sweep_vectors(int len, int bound) {
    if (len <= 0 || bound < 0) fail(errc::invalid_argument, "bad sweep dimensions");
    double count = 1;
    for (int i = 0; i < len; i++) count *= (2.0 * bound + 1.0);
    if (count > 2.0e6) fail(errc::resource_limit, "sweep region too large");
    std::vector<std::vector<Int>> all;
    std::vector<Int> cur(len, -bound);
    while (true) {
        bool zero = true;
        for (const Int& x : cur)
            if (sgn(x) != 0) zero = false;
        if (!zero) all.push_back(cur);
        int i = len - 1;
        while (i >= 0 && cur[i] == bound) cur[i--] = -bound;
        if (i < 0) break;
        cur[i] += 1;
    }
    std::sort(all.begin(), all.end(),
              [](const std::vector<Int>& a, const std::vector<Int>& b) {
                  Int la = 0, lb = 0;
                  for (const Int& x : a) la += abs(x);
                  for (const Int& x : b) lb += abs(x);
                  if (la != lb) return la < lb;
                  return a > b;  // descending within a shell
              });
    return all;
}

CriticalSet critical_primes(const HopfAlgebra& H, const ActionTable& T, const Lattice& order,
                            int degree_L, const Int& disc_L, int sweep_bound) {
    std::vector<ZMat> action = integral_action_matrices(H, T, order);
    CriticalSet cs;
    for (const auto& theta : sweep_vectors(T.m, sweep_bound)) {
        Int idx = generator_index(action, theta);
        if (sgn(idx) != 0) {
            cs.conclusive = true;
            cs.theta0 = theta;
            cs.theta0_index = idx;
            break;
        }
    }
    if (!cs.conclusive) return cs;
    std::map<Int, std::set<std::string>> reasons;
    for (const auto& [p, e] : factor(cs.theta0_index)) reasons[p].insert("divides-index");
    for (const auto& [p, e] : factor(Int(degree_L))) reasons[p].insert("divides-degree");
    for (const auto& [p, e] : factor(abs(disc_L))) reasons[p].insert("divides-disc");
    for (auto& [p, rs] : reasons)
        cs.primes.push_back({p, std::vector<std::string>(rs.begin(), rs.end())});
    return cs;
}

LocalFreeResult local_free(const HopfAlgebra& H, const ActionTable& T, const Lattice& order,
                           const Int& p, const Int& scan_budget) {
    if (!is_prime(p)) fail(errc::invalid_argument, "local freeness needs a prime");
    std::vector<ZMat> action = integral_action_matrices(H, T, order);
    int m = T.m;
    Int total = 1;
    for (int i = 0; i < m; i++) {
        total *= p;
        if (total > scan_budget)
            fail(errc::resource_limit, "residue scan p^" + std::to_string(m) +
                                           " exceeds the budget at p=" + p.get_str());
    }
    std::vector<FpMat> bars;
    bars.reserve(m);
    for (const ZMat& M : action) {
        FpMat B(m, m, p);
        for (int a = 0; a < m; a++)
            for (int b = 0; b < m; b++) B.at(a, b) = fp_reduce(M.at(a, b), p);
        bars.push_back(std::move(B));
    }
    std::vector<Int> cur(m, 0);
    while (true) {
        // lexicographic odometer, least significant digit last
        int i = m - 1;
        while (i >= 0 && cur[i] == p - 1) cur[i--] = 0;
        if (i < 0) break;
        cur[i] += 1;
        FpMat rows(m, m, p);
        for (int r = 0; r < m; r++)
            for (int b = 0; b < m; b++) {
                Int s = 0;
                for (int a = 0; a < m; a++) s += cur[a] * bars[r].at(a, b);
                rows.at(r, b) = fp_reduce(s, p);
            }
        if (fp_rank(rows) == m) return {true, cur};
    }
    return {false, {}};
}

LeftIntegralCertificate left_integral(const HopfAlgebra& H) {
    std::vector<Rat> amb((size_t)H.n * H.d);
    for (int i = 0; i < H.n; i++) amb[(size_t)i * H.d] = 1;  // Σ over N of 1·ν
    auto c = H.coords(amb);
    if (!c) fail(errc::internal_inconsistency, "trace element left the descended algebra");
    LeftIntegralCertificate cert;
    cert.theta = *c;
    cert.identity_holds = true;
    for (int i = 0; i < H.n; i++) {
        std::vector<Rat> e(H.n);
        e[i] = 1;
        std::vector<Rat> lhs = H.product(e, cert.theta);
        for (int j = 0; j < H.n; j++)
            if (lhs[j] != H.counit[i] * cert.theta[j]) cert.identity_holds = false;
    }
    return cert;
}

TamenessRecord tameness(const NumberField& E, const SubfieldData& L, const HopfAlgebra& H,
                        const ActionTable& T, const Lattice& order, const Int& p) {
    TamenessRecord rec;
    int m = T.m;

    // (1) the joint eigenspace {s : u·s = ε(u)·s for all rows u} is Q·1.
    QMat big(m, H.n * m);
    for (int r = 0; r < order.rank(); r++) {
        std::vector<Rat> u = order.qrow(r);
        Rat eps = H.apply_counit(u);
        for (int a = 0; a < m; a++)
            for (int b = 0; b < m; b++) {
                Rat s = 0;
                for (int i = 0; i < H.n; i++)
                    if (sgn(u[i]) != 0) s += u[i] * T.flat.at(i, a * m + b);
                if (a == b) s -= eps;
                big.at(a, r * m + b) = s;
            }
    }
    QMat inv = left_nullspace(big);
    rec.invariants_are_base = (inv.m == 1);

    // (2) rank of the module equals the dimension of the algebra.
    rec.rank_equal = (m == H.n);

    // (3) faithfulness: the n action matrices are linearly independent.
    rec.faithful = (rank(T.flat) == H.n);

    // (4) the image ideal θ·O_L is generated by the gcd of the traces of the
    // integral basis; tameness at p asks that gcd to be prime to p.
    std::vector<Int> traces(m);
    for (int a = 0; a < m; a++) {
        Elem w(E.deg);
        for (int j = 0; j < E.deg; j++) w[j] = L.OL.qrow(a)[j];
        Rat t = subfield_trace(E, L, w);
        if (!is_integer(t))
            fail(errc::internal_inconsistency, "integral basis element with fractional trace");
        traces[a] = t.get_num();
    }
    Int g = 0;
    std::vector<Int> coeff(m, 0);
    for (int a = 0; a < m; a++) {
        Int s, t, ng;
        mpz_gcdext(ng.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(),
                   traces[a].get_mpz_t());
        for (int b = 0; b < a; b++) coeff[b] *= s;
        coeff[a] = t;
        g = ng;
    }
    rec.trace_gcd = g;
    rec.trace_ideal_p_unit = (sgn(g) != 0 && !divides(p, g));
    if (rec.trace_ideal_p_unit) {
        rec.t_witness = coeff;
        Int check = 0;
        for (int a = 0; a < m; a++) check += coeff[a] * traces[a];
        if (check != g) fail(errc::internal_inconsistency, "trace gcd witness failed");
    }
    return rec;
}

std::optional<std::vector<Int>> global_generator_search(const HopfAlgebra& H,
                                                        const ActionTable& T,
                                                        const Lattice& order, int bound) {
    std::vector<ZMat> action = integral_action_matrices(H, T, order);
    for (const auto& theta : sweep_vectors(T.m, bound))
        if (generator_index(action, theta) == 1) return theta;
    return std::nullopt;
}

} // namespace hgw
