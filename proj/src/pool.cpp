#include "semistar/pool.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

#include "semistar/errors.hpp"
#include "semistar/verdict.hpp"

namespace semistar {

const char* status_name(Verdict::Status s)
{
    switch (s) {
    case Verdict::Status::Holds:
        return "Holds";
    case Verdict::Status::Fails:
        return "Fails";
    default:
        return "UnknownAtBound";
    }
}

unsigned default_pool_bound()
{
    if (const char* env = std::getenv("SEMISTAR_POOL_BOUND")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 6) return static_cast<unsigned>(v);
        throw InvalidInput(std::string("SEMISTAR_POOL_BOUND must be an integer in [1, 6], got '") + env + "'");
    }
    return 2;
}

namespace {

bool divides(const Monomial& a, const Monomial& b) { return a.divides(b); }

void antichains(const std::vector<Monomial>& box, std::size_t from, std::vector<Monomial>& cur,
                std::vector<std::vector<Monomial>>& out, std::size_t cap)
{
    if (out.size() >= cap) return;
    if (!cur.empty()) out.push_back(cur);
    for (std::size_t i = from; i < box.size(); ++i) {
        bool ok = std::none_of(cur.begin(), cur.end(),
                               [&](const Monomial& m) { return divides(m, box[i]) || divides(box[i], m); });
        if (!ok) continue;
        cur.push_back(box[i]);
        antichains(box, i + 1, cur, out, cap);
        cur.pop_back();
    }
}

}  // namespace

ProbePool default_pool(const BaseDomain& D, unsigned bound, std::size_t limit)
{
    std::size_t const n = D.ring->nvars();
    std::vector<Monomial> box;
    Monomial m(n);
    for (;;) {
        box.push_back(m);
        std::size_t j = 0;
        while (j < n && m[j] == bound) m[j++] = 0;
        if (j == n) break;
        ++m[j];
    }
    std::vector<std::vector<Monomial>> sets;
    std::vector<Monomial> cur;
    // enumerate generously, then sort and truncate deterministically
    antichains(box, 0, cur, sets, limit * 8);

    struct Entry {
        std::size_t ngens;
        std::uint64_t degree;
        std::string text;
        FracIdeal ideal;
    };
    std::vector<Entry> entries;
    for (const auto& s : sets) {
        std::vector<Poly> gens;
        std::uint64_t deg = 0;
        for (const auto& x : s) {
            gens.push_back(Poly::monomial(D.ring, x));
            deg += x.degree();
        }
        Ideal I = Ideal(D.ring, std::move(gens)).canonical();
        std::string text = I.to_string();
        entries.push_back({s.size(), deg, std::move(text), FracIdeal(std::move(I))});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.ngens, a.degree, a.text) < std::tie(b.ngens, b.degree, b.text);
    });
    ProbePool pool{"default-" + std::to_string(bound), {}};
    for (auto& e : entries) {
        if (pool.ideals.size() >= limit) break;
        pool.ideals.push_back(std::move(e.ideal));
    }
    return with_unit_first(std::move(pool), D.ring);
}

ProbePool with_unit_first(ProbePool pool, const RingPtr& ring)
{
    Localization const L{ring, std::nullopt};
    FracIdeal const one = FracIdeal::unit(ring);
    std::vector<FracIdeal> out{one};
    for (auto& F : pool.ideals)
        if (!frac_equal(F, one, L)) out.push_back(std::move(F));
    pool.ideals = std::move(out);
    return pool;
}

}  // namespace semistar
