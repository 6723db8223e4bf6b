#include <algorithm>

#include "semistar/errors.hpp"
#include "semistar/ideal.hpp"

namespace semistar {

// Maximize sum(lambda) subject to sum_i lambda_i a_i <= m, sum(lambda) <= 1,
// lambda >= 0.  The point lies in the Newton polyhedron iff the optimum is 1.
// Dense tableau simplex over the rationals with Bland's rule.
bool in_newton_polyhedron(const std::vector<std::vector<long>>& points, const std::vector<long>& m)
{
    if (points.empty()) return false;
    std::size_t const n = m.size();
    std::size_t const k = points.size();
    std::size_t const rows = n + 1;
    std::size_t const cols = k + rows;  // lambdas then slacks
    for (auto v : m)
        if (v < 0) return false;

    std::vector<std::vector<mpq_class>> tab(rows, std::vector<mpq_class>(cols + 1));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < k; ++i) tab[j][i] = points[i][j];
        tab[j][k + j] = 1;
        tab[j][cols] = m[j];
    }
    for (std::size_t i = 0; i < k; ++i) tab[n][i] = 1;
    tab[n][k + n] = 1;
    tab[n][cols] = 1;

    std::vector<mpq_class> obj(cols + 1);  // reduced costs; obj[cols] = -value
    for (std::size_t i = 0; i < k; ++i) obj[i] = -1;
    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) basis[r] = k + r;

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t c = 0; c < cols; ++c)
            if (obj[c] < 0) {
                enter = c;
                break;
            }
        if (enter == cols) break;
        std::size_t leave = rows;
        mpq_class best;
        for (std::size_t r = 0; r < rows; ++r) {
            if (tab[r][enter] <= 0) continue;
            mpq_class ratio = tab[r][cols] / tab[r][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == rows) break;  // unbounded cannot happen: sum(lambda) <= 1
        mpq_class const piv = tab[leave][enter];
        for (auto& x : tab[leave]) x /= piv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave || tab[r][enter] == 0) continue;
            mpq_class const f = tab[r][enter];
            for (std::size_t c = 0; c <= cols; ++c) tab[r][c] -= f * tab[leave][c];
        }
        if (obj[enter] != 0) {
            mpq_class const f = obj[enter];
            for (std::size_t c = 0; c <= cols; ++c) obj[c] -= f * tab[leave][c];
        }
        basis[leave] = enter;
    }
    return obj[cols] == 1;
}

Ideal monomial_integral_closure(const Ideal& I)
{
    if (I.is_zero()) throw DomainError("integral closure of the zero ideal");
    if (!I.is_monomial()) throw Unsupported("integral closure is only available for monomial ideals; got " + I.to_string());
    std::size_t const n = I.ring()->nvars();
    std::vector<std::vector<long>> pts;
    std::vector<long> box(n, 0);
    for (const auto& g : I.generators()) {
        const Monomial& mono = g.leading().mono;
        if (mono.is_one()) return Ideal::unit(I.ring());
        std::vector<long> p(n);
        for (std::size_t j = 0; j < n; ++j) {
            p[j] = mono[j];
            box[j] = std::max(box[j], p[j]);
        }
        pts.push_back(std::move(p));
    }
    // every minimal generator of the closure lies in the exponent box
    std::vector<std::vector<long>> members;
    std::vector<long> cur(n, 0);
    for (;;) {
        if (in_newton_polyhedron(pts, cur)) members.push_back(cur);
        std::size_t j = 0;
        while (j < n && cur[j] == box[j]) cur[j++] = 0;
        if (j == n) break;
        ++cur[j];
    }
    std::vector<Poly> gens;
    for (const auto& a : members) {
        bool minimal = true;
        for (const auto& b : members) {
            if (&a == &b) continue;
            bool le = true;
            for (std::size_t j = 0; j < n && le; ++j) le = b[j] <= a[j];
            if (le && b != a) minimal = false;
        }
        if (!minimal) continue;
        Monomial m(n);
        for (std::size_t j = 0; j < n; ++j) m[j] = static_cast<std::uint32_t>(a[j]);
        gens.push_back(Poly::monomial(I.ring(), m));
    }
    return Ideal(I.ring(), std::move(gens)).canonical();
}

}  // namespace semistar
