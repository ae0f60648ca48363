#include "frobalg/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace frobalg {

namespace {

constexpr int kMaxSubsetScanVars = 20;

void require_prime_field(int p) {
    if (p < 2) throw PreconditionError("field characteristic must be a prime >= 2");
}

void require_squarefree_proper(const MonomialIdeal& I) {
    if (!is_squarefree(I)) throw PreconditionError("ideal is not squarefree");
    if (I.is_unit()) throw PreconditionError("ideal is not proper");
    if (I.n < 1 || I.n > kMaxSubsetScanVars)
        throw PreconditionError("subset scan supports 1 <= n <= 20 variables");
}

int mod_pow(long long base, long long exp, long long m) {
    long long r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = r * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return static_cast<int>(r);
}

int mod_inverse(int a, int p) { return mod_pow(a, p - 2, p); }

// Rank over F_p by Gaussian elimination; rows are modified in place.
int rank_mod_p(std::vector<std::vector<int>>& rows, int p) {
    int rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r][col] % p != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        int inv = mod_inverse(((rows[rank][col] % p) + p) % p, p);
        for (std::size_t c = col; c < cols; ++c)
            rows[rank][c] = static_cast<int>(static_cast<long long>(rows[rank][c]) * inv % p);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank)) continue;
            int f = ((rows[r][col] % p) + p) % p;
            if (f == 0) continue;
            for (std::size_t c = col; c < cols; ++c) {
                long long v = rows[r][c] - static_cast<long long>(f) * rows[rank][c];
                rows[r][c] = static_cast<int>(((v % p) + p) % p);
            }
        }
        ++rank;
    }
    return rank;
}

std::vector<std::uint32_t> maximal_masks(std::vector<std::uint32_t> masks) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t a : masks) {
        bool maximal = true;
        for (std::uint32_t b : masks)
            if (a != b && (a & b) == a) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

int FaceIdeal::height() const { return std::popcount(support); }

int SimplicialComplex::dim() const {
    if (is_void()) return -2;
    int d = -1;
    for (std::uint32_t f : facets) d = std::max(d, std::popcount(f) - 1);
    return d;
}

int HomologyProfile::dim_at(int i) const {
    auto it = dims.find(i);
    return it == dims.end() ? 0 : it->second;
}

SimplicialComplex complex_of(const MonomialIdeal& I) {
    require_squarefree_proper(I);
    std::vector<std::uint32_t> gen_supports;
    gen_supports.reserve(I.gens.size());
    for (const Monomial& g : I.gens) gen_supports.push_back(g.support());

    const std::uint32_t full = (I.n == 32) ? ~0u : ((1u << I.n) - 1);
    std::vector<std::uint32_t> faces;
    for (std::uint32_t sigma = 0; sigma <= full; ++sigma) {
        bool in_ideal = std::any_of(gen_supports.begin(), gen_supports.end(),
                                    [&](std::uint32_t s) { return (s & sigma) == s; });
        if (!in_ideal) faces.push_back(sigma);
    }
    return SimplicialComplex{I.n, maximal_masks(std::move(faces))};
}

Decomposition primary_decomposition(const MonomialIdeal& I) {
    require_squarefree_proper(I);
    if (I.is_zero()) throw PreconditionError("the zero ideal has no face decomposition");
    SimplicialComplex c = complex_of(I);
    const std::uint32_t full = (1u << I.n) - 1;
    std::vector<std::uint32_t> comps;
    comps.reserve(c.facets.size());
    for (std::uint32_t f : c.facets) comps.push_back(full & ~f);
    std::sort(comps.begin(), comps.end());
    return Decomposition{I.n, std::move(comps)};
}

MonomialIdeal intersection_ideal(const Decomposition& D) {
    if (D.components.empty())
        throw PreconditionError("decomposition needs at least one component");
    MonomialIdeal acc = MonomialIdeal::unit(D.n);
    for (std::uint32_t comp : D.components)
        acc = intersect(acc, face_ideal_of(D.n, comp));
    return acc;
}

MonomialIdeal alexander_dual(const MonomialIdeal& I) {
    Decomposition D = primary_decomposition(I);
    std::vector<Monomial> gens;
    gens.reserve(D.components.size());
    for (std::uint32_t comp : D.components) {
        std::vector<int> e(D.n, 0);
        for (int i = 0; i < D.n; ++i)
            if (comp & (1u << i)) e[i] = 1;
        gens.emplace_back(std::move(e));
    }
    return make_ideal(D.n, std::move(gens));
}

bool is_face(const SimplicialComplex& c, std::uint32_t sigma) {
    return std::any_of(c.facets.begin(), c.facets.end(),
                       [&](std::uint32_t f) { return (sigma & f) == sigma; });
}

SimplicialComplex link(const SimplicialComplex& c, std::uint32_t sigma) {
    if (!is_face(c, sigma)) throw PreconditionError("sigma is not a face of the complex");
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t f : c.facets)
        if ((sigma & f) == sigma) candidates.push_back(f & ~sigma);
    return SimplicialComplex{c.n, maximal_masks(std::move(candidates))};
}

std::vector<std::uint32_t> faces_of(const SimplicialComplex& c) {
    if (c.is_void()) return {};
    if (c.n > kMaxSubsetScanVars)
        throw PreconditionError("subset scan supports n <= 20 vertices");
    std::vector<std::uint32_t> out;
    const std::uint32_t full = (1u << c.n) - 1;
    for (std::uint32_t sigma = 0; sigma <= full; ++sigma)
        if (is_face(c, sigma)) out.push_back(sigma);
    return out;
}

HomologyProfile reduced_homology(const SimplicialComplex& c, int p) {
    require_prime_field(p);
    HomologyProfile profile;
    profile.p = p;
    if (c.is_void()) {
        profile.void_complex = true;
        return profile;
    }
    profile.top_dim = c.dim();

    // faces grouped by dimension, empty face included at dimension -1
    std::vector<std::vector<std::uint32_t>> faces(profile.top_dim + 2);
    std::vector<std::unordered_map<std::uint32_t, int>> index(profile.top_dim + 2);
    for (std::uint32_t sigma : faces_of(c)) {
        int d = std::popcount(sigma) - 1;
        index[d + 1][sigma] = static_cast<int>(faces[d + 1].size());
        faces[d + 1].push_back(sigma);
    }

    // rank of the boundary map from dimension d to d-1, for d = 0..top_dim
    std::vector<int> boundary_rank(profile.top_dim + 2, 0);
    for (int d = 0; d <= profile.top_dim; ++d) {
        const auto& src = faces[d + 1];
        const auto& dst_index = index[d];
        if (src.empty() || dst_index.empty()) continue;
        std::vector<std::vector<int>> rows(src.size(),
                                           std::vector<int>(dst_index.size(), 0));
        for (std::size_t r = 0; r < src.size(); ++r) {
            std::uint32_t sigma = src[r];
            int pos = 0;
            for (int v = 0; v < c.n; ++v) {
                if (!(sigma & (1u << v))) continue;
                std::uint32_t tau = sigma & ~(1u << v);
                int sign = (pos % 2 == 0) ? 1 : p - 1;
                rows[r][dst_index.at(tau)] = sign;
                ++pos;
            }
        }
        boundary_rank[d + 1] = rank_mod_p(rows, p);
    }

    for (int d = -1; d <= profile.top_dim; ++d) {
        int cycles = static_cast<int>(faces[d + 1].size()) - boundary_rank[d + 1];
        int boundaries = (d + 2 < static_cast<int>(boundary_rank.size()))
                             ? boundary_rank[d + 2]
                             : 0;
        int h = cycles - boundaries;
        if (h < 0) throw InternalError("negative homology dimension");
        if (h > 0) profile.dims[d] = h;
    }
    return profile;
}

SimplicialComplex core_complex(const SimplicialComplex& c) {
    if (c.is_void()) return c;
    std::uint32_t cone = c.facets.front();
    for (std::uint32_t f : c.facets) cone &= f;
    if (cone == 0) return c;
    std::vector<std::uint32_t> stripped;
    stripped.reserve(c.facets.size());
    for (std::uint32_t f : c.facets) stripped.push_back(f & ~cone);
    return SimplicialComplex{c.n, maximal_masks(std::move(stripped))};
}

namespace {

// i = dim(link): homology must be k there and 0 below when `sphere`, or just
// 0 below the top when checking Cohen-Macaulayness.
bool links_pass(const SimplicialComplex& c, int p, bool sphere) {
    for (std::uint32_t sigma : faces_of(c)) {
        SimplicialComplex lk = link(c, sigma);
        HomologyProfile h = reduced_homology(lk, p);
        int d = lk.dim();
        for (int i = -1; i < d; ++i)
            if (h.dim_at(i) != 0) return false;
        if (sphere && h.dim_at(d) != 1) return false;
    }
    return true;
}

}  // namespace

bool is_gorenstein(const MonomialIdeal& I, int p) {
    require_prime_field(p);
    SimplicialComplex core = core_complex(complex_of(I));
    return links_pass(core, p, /*sphere=*/true);
}

bool is_cohen_macaulay(const MonomialIdeal& I, int p) {
    require_prime_field(p);
    return links_pass(complex_of(I), p, /*sphere=*/false);
}

HeightProfile height_profile(const Decomposition& D) {
    if (D.components.empty())
        throw PreconditionError("decomposition needs at least one component");
    HeightProfile hp;
    hp.height = std::popcount(D.components.front());
    hp.pure = true;
    std::uint32_t covered = 0;
    for (std::uint32_t comp : D.components) {
        int h = std::popcount(comp);
        hp.height = std::min(hp.height, h);
        covered |= comp;
    }
    for (std::uint32_t comp : D.components)
        if (std::popcount(comp) != hp.height) hp.pure = false;
    hp.covering = covered == (1u << D.n) - 1;
    return hp;
}

int hochster_piece(const MonomialIdeal& I, std::uint32_t alpha, int p) {
    Decomposition D = primary_decomposition(I);
    int r = height_profile(D).height;
    SimplicialComplex c = complex_of(I);
    const std::uint32_t full = (1u << I.n) - 1;
    std::uint32_t sigma = full & ~alpha;
    if (!is_face(c, sigma)) return 0;
    HomologyProfile h = reduced_homology(link(c, sigma), p);
    return h.dim_at(std::popcount(alpha) - r - 1);
}

}  // namespace frobalg
