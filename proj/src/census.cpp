#include "frobalg/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <numeric>
#include <thread>

namespace frobalg {

namespace {

std::uint32_t apply_perm(std::uint32_t mask, const std::vector<int>& perm) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (mask & (1u << i)) out |= 1u << perm[i];
    return out;
}

void require_antichain(const std::vector<std::uint32_t>& comps) {
    for (std::uint32_t a : comps)
        for (std::uint32_t b : comps)
            if (a != b && (a & b) == a)
                throw PreconditionError("components do not form an antichain");
}

// Visits permuted sorted component lists; returns false early when a
// permutation strictly below the input is found and `stop_below` is set.
bool scan_orbit(int n, const std::vector<std::uint32_t>& sorted,
                std::vector<std::uint32_t>* best, bool stop_below) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint32_t> image(sorted.size());
    do {
        for (std::size_t i = 0; i < sorted.size(); ++i)
            image[i] = apply_perm(sorted[i], perm);
        std::sort(image.begin(), image.end());
        if (best && image < *best) *best = image;
        if (stop_below && image < sorted) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

}  // namespace

CanonicalIdeal canonical_form(const Decomposition& D) {
    // 10! permutations is the largest brute-force orbit scan worth doing
    if (D.n < 1 || D.n > 10) throw PreconditionError("canonical form needs 1 <= n <= 10");
    if (D.components.empty()) throw PreconditionError("empty decomposition");
    require_antichain(D.components);
    std::vector<std::uint32_t> sorted = D.components;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::uint32_t> best = sorted;
    scan_orbit(D.n, sorted, &best, false);
    return CanonicalIdeal{D.n, std::move(best)};
}

bool is_canonical(int n, const std::vector<std::uint32_t>& sorted_components) {
    return scan_orbit(n, sorted_components, nullptr, true);
}

MonomialIdeal ideal_of(const CanonicalIdeal& c) {
    return intersection_ideal(Decomposition{c.n, c.components});
}

std::vector<CanonicalIdeal> enumerate_ideals(int n, int height, bool pure,
                                             bool covering) {
    if (n < 1 || n > 7) throw PreconditionError("enumeration supports 1 <= n <= 7");
    if (height < 1 || height > n) throw PreconditionError("height out of range");
    const std::uint32_t full = (1u << n) - 1;
    std::vector<CanonicalIdeal> out;

    if (pure) {
        std::vector<std::uint32_t> masks;
        for (std::uint32_t m = 1; m <= full; ++m)
            if (std::popcount(m) == height) masks.push_back(m);
        if (masks.size() > 26)
            throw PreconditionError("pure enumeration infeasible at this (n, height)");
        const std::uint64_t families = 1ull << masks.size();
        std::vector<std::uint32_t> comps;
        for (std::uint64_t f = 1; f < families; ++f) {
            comps.clear();
            std::uint32_t covered = 0;
            for (std::size_t i = 0; i < masks.size(); ++i)
                if (f & (1ull << i)) {
                    comps.push_back(masks[i]);
                    covered |= masks[i];
                }
            if (covering && covered != full) continue;
            if (!is_canonical(n, comps)) continue;
            out.push_back(CanonicalIdeal{n, comps});
        }
    } else {
        if (n > 6)
            throw PreconditionError("mixed-height enumeration supports n <= 6");
        // grow antichains over masks in increasing order
        std::vector<std::uint32_t> comps;
        auto recurse = [&](auto&& self, std::uint32_t next) -> void {
            if (!comps.empty()) {
                int minh = n + 1;
                std::uint32_t covered = 0;
                for (std::uint32_t c : comps) {
                    minh = std::min(minh, std::popcount(c));
                    covered |= c;
                }
                if (minh == height && (!covering || covered == full) &&
                    is_canonical(n, comps))
                    out.push_back(CanonicalIdeal{n, comps});
            }
            for (std::uint32_t m = next; m <= full; ++m) {
                bool comparable = false;
                for (std::uint32_t c : comps)
                    if ((c & m) == c || (c & m) == m) {
                        comparable = true;
                        break;
                    }
                if (comparable) continue;
                if (std::popcount(m) < height) continue;  // height is the minimum
                comps.push_back(m);
                self(self, m + 1);
                comps.pop_back();
            }
        };
        recurse(recurse, 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CensusRow> census(int n, int p, int jobs) {
    if (jobs < 1) throw PreconditionError("jobs must be >= 1");
    std::vector<CensusRow> rows;
    for (int h = 1; h <= n; ++h) {
        std::vector<CanonicalIdeal> ideals = enumerate_ideals(n, h, true, true);
        std::vector<ClassificationReport> reports(ideals.size());

        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto classify_range = [&] {
            try {
                for (std::size_t i = next.fetch_add(1); i < ideals.size();
                     i = next.fetch_add(1))
                    reports[i] = classify(ideal_of(ideals[i]), p);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        };
        if (jobs == 1 || ideals.size() < 2) {
            classify_range();
        } else {
            std::vector<std::thread> pool;
            int workers = std::min<int>(jobs, static_cast<int>(ideals.size()));
            pool.reserve(workers);
            for (int w = 0; w < workers; ++w) pool.emplace_back(classify_range);
            for (std::thread& t : pool) t.join();
        }
        if (failure) std::rethrow_exception(failure);

        CensusRow row{n, h, 0, 0, 0};
        for (const ClassificationReport& r : reports) {
            if (r.finitely_generated)
                ++row.pg;
            else
                ++row.ig;
            if (r.gorenstein) {
                ++row.gor;
                if (!r.finitely_generated)
                    throw InternalError("Gorenstein entry classified infinitely generated");
            }
        }
        rows.push_back(row);
    }
    return rows;
}

MonomialIdeal build_Ikn(int k, int n) {
    if (n < 1 || n > 20) throw PreconditionError("build_Ikn supports 1 <= n <= 20");
    if (k < 1 || k > n) throw PreconditionError("need 1 <= k <= n");
    const std::uint32_t full = (1u << n) - 1;
    MonomialIdeal acc = MonomialIdeal::unit(n);
    for (std::uint32_t m = 1; m <= full; ++m)
        if (std::popcount(m) == k) acc = intersect(acc, face_ideal_of(n, m));
    return acc;
}

MonomialIdeal build_family_4_2(int n, int r, const std::vector<int>& cuts) {
    if (n < 2 || n > 31) throw PreconditionError("family needs 2 <= n <= 31");
    if (r < 1 || r >= n) throw PreconditionError("need 1 <= r < n");
    int prev = r;
    for (int c : cuts) {
        if (c <= prev || c > n) throw PreconditionError("cut points must satisfy r < r_1 < ... <= n");
        prev = c;
    }

    std::vector<Monomial> first;
    for (int i = 0; i < r; ++i) first.push_back(Monomial::variable(n, i));
    std::vector<int> bounds = cuts;
    bounds.push_back(n);
    int lo = r;
    for (int hi : bounds) {
        if (hi <= lo) {
            lo = hi;
            continue;  // empty block contributes nothing
        }
        std::vector<int> e(n, 0);
        for (int i = lo; i < hi; ++i) e[i] = 1;
        first.emplace_back(std::move(e));
        lo = hi;
    }

    std::uint32_t tail = 0;
    for (int i = r; i < n; ++i) tail |= 1u << i;
    return intersect(make_ideal(n, std::move(first)), face_ideal_of(n, tail));
}

}  // namespace frobalg
