#include "tau_atlas/homological.hpp"

#include <stdexcept>

namespace tau_atlas {

namespace {

std::size_t vidx(int v) { return static_cast<std::size_t>(v - 1); }

// Basis indices of e_i A e_v in ascending order (the vertex basis of P_i at v).
std::vector<std::size_t> path_indices(const Algebra& a, int i, int v) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < a.dim(); ++k)
        if (a.basis(k).src == i && a.basis(k).tgt == v) out.push_back(k);
    return out;
}

std::size_t rank_or_zero(const Matrix& m) { return m.rows() && m.cols() ? rank(m) : 0; }

}  // namespace

const std::vector<int>& ProjectiveResolution::term(std::size_t k) const {
    static const std::vector<int> none;
    return k < terms.size() ? terms[k] : none;
}

Vec projective_coordinates(const Algebra& a, int i, int v, const Vec& x) {
    Vec out;
    for (auto k : path_indices(a, i, v)) out.push_back(x[k]);
    return out;
}

Vec projective_element(const Algebra& a, int i, int v, const Vec& coords) {
    Vec out(a.dim(), 0);
    auto idx = path_indices(a, i, v);
    if (idx.size() != coords.size()) throw std::invalid_argument("projective_element: coordinate length mismatch");
    for (std::size_t k = 0; k < idx.size(); ++k) out[idx[k]] = coords[k];
    return out;
}

Module free_module(const AlgebraPtr& a, const std::vector<int>& generators) {
    std::vector<Module> parts;
    for (int u : generators) parts.push_back(projective(a, u));
    return direct_sum(a, parts);
}

ModuleMap free_map_as_module_map(const AlgebraPtr& a, const FreeMap& d) {
    const Field& f = a->field();
    ModuleMap out;
    for (int v = 1; v <= a->n(); ++v) {
        std::size_t rows = 0, cols = 0;
        std::vector<std::size_t> col_off;
        for (int u : d.src) rows += a->dim_between(u, v);
        for (int u : d.dst) {
            col_off.push_back(cols);
            cols += a->dim_between(u, v);
        }
        Matrix m(rows, cols, f);
        std::size_t row = 0;
        for (std::size_t c = 0; c < d.src.size(); ++c)
            for (auto y : path_indices(*a, d.src[c], v)) {
                Vec yv = a->unit(y);
                for (std::size_t r = 0; r < d.dst.size(); ++r) {
                    Vec img = a->multiply(d.entry[c][r], yv);
                    Vec coords = projective_coordinates(*a, d.dst[r], v, img);
                    for (std::size_t j = 0; j < coords.size(); ++j) m(row, col_off[r] + j) = coords[j];
                }
                ++row;
            }
        out.blocks.push_back(std::move(m));
    }
    return out;
}

ProjectiveResolution resolution(const Module& m, std::size_t max_terms) {
    const AlgebraPtr& a = m.algebra_ptr();
    ProjectiveResolution res;
    Module x = m;
    ModuleMap incl;          // x -> previous free term
    bool have_incl = false;  // false for the first step (x = m)
    for (std::size_t k = 0; k < max_terms; ++k) {
        if (x.is_zero()) {
            res.complete = true;
            break;
        }
        // lift a basis of the top
        VertexSpaces rad = radical_spaces(x);
        std::vector<int> gens;
        std::vector<std::pair<int, std::size_t>> lifts;  // (vertex, coordinate index in x)
        for (int v = 1; v <= a->n(); ++v)
            for (auto c : rad[vidx(v)].free_columns()) {
                gens.push_back(v);
                lifts.emplace_back(v, c);
            }
        if (have_incl) {
            FreeMap d;
            d.src = gens;
            d.dst = res.terms.back();
            for (auto [v, c] : lifts) {
                Vec in_free = incl.blocks[vidx(v)].row_vec(c);
                std::vector<Vec> row;
                std::size_t off = 0;
                for (int u : d.dst) {
                    std::size_t len = a->dim_between(u, v);
                    Vec piece(in_free.begin() + static_cast<std::ptrdiff_t>(off), in_free.begin() + static_cast<std::ptrdiff_t>(off + len));
                    row.push_back(projective_element(*a, u, v, piece));
                    off += len;
                }
                d.entry.push_back(std::move(row));
            }
            res.differentials.push_back(std::move(d));
        }
        res.terms.push_back(gens);
        if (k + 1 == max_terms) break;
        // kernel of P_k -> x
        Module p = free_module(a, gens);
        ModuleMap phi;
        for (int v = 1; v <= a->n(); ++v) {
            Matrix blk(p.dim(v), x.dim(v), a->field());
            std::size_t row = 0;
            for (std::size_t g = 0; g < gens.size(); ++g)
                for (auto y : path_indices(*a, gens[g], v)) {
                    Matrix act = x.act(y);
                    auto src_row = act.row(lifts[g].second);
                    std::copy(src_row.begin(), src_row.end(), blk.row(row).begin());
                    ++row;
                }
            phi.blocks.push_back(std::move(blk));
        }
        auto ker = kernel(phi, p);
        x = std::move(ker.module);
        incl = std::move(ker.inclusion);
        have_incl = true;
    }
    if (!res.complete && x.is_zero() && res.terms.size() < max_terms) res.complete = true;
    return res;
}

ProjectiveResolution presentation(const Module& m) { return resolution(m, 2); }

std::size_t projective_dimension(const Module& m, std::size_t bound) {
    if (m.is_zero()) return 0;
    auto res = resolution(m, bound + 2);
    if (!res.complete) return bound + 1;
    return res.length();
}

namespace {

// Hom(P_{k-1}, N) -> Hom(P_k, N) induced by differentials[k-1].
Matrix hom_differential(const ProjectiveResolution& res, const Module& n, std::size_t k) {
    const Field& f = n.field();
    if (k == 0 || k > res.differentials.size()) return Matrix(0, 0, f);
    const FreeMap& d = res.differentials[k - 1];
    std::size_t rows = 0, cols = 0;
    std::vector<std::size_t> roff, coff;
    for (int u : d.dst) {
        roff.push_back(rows);
        rows += n.dim(u);
    }
    for (int u : d.src) {
        coff.push_back(cols);
        cols += n.dim(u);
    }
    Matrix out(rows, cols, f);
    for (std::size_t c = 0; c < d.src.size(); ++c)
        for (std::size_t r = 0; r < d.dst.size(); ++r) out.set_block(roff[r], coff[c], n.act(d.entry[c][r], d.dst[r], d.src[c]));
    return out;
}

}  // namespace

std::size_t ext_dim(const Module& m, const Module& n, int k) {
    if (k < 0 || k > 2) throw std::out_of_range("ext_dim: degree must be 0, 1 or 2");
    if (m.algebra_ptr() != n.algebra_ptr()) throw std::invalid_argument("ext_dim: modules over different algebras");
    auto res = resolution(m, static_cast<std::size_t>(k) + 2);
    const auto uk = static_cast<std::size_t>(k);
    std::size_t hom_pk = 0;
    for (int u : res.term(uk)) hom_pk += n.dim(u);
    return hom_pk - rank_or_zero(hom_differential(res, n, uk + 1)) - rank_or_zero(hom_differential(res, n, uk));
}

std::size_t tor_dim(const Module& m, const TwoSidedIdeal& j, int k) {
    if (k < 0 || k > 2) throw std::out_of_range("tor_dim: degree must be 0, 1 or 2");
    const AlgebraPtr& a = m.algebra_ptr();
    if (j.algebra_ptr() != a) throw std::invalid_argument("tor_dim: ideal of another algebra");
    auto res = resolution(m, static_cast<std::size_t>(k) + 2);
    // e_u A / e_u J for every vertex u
    std::vector<Echelon> ej;
    std::vector<std::vector<std::size_t>> qbasis;
    for (int u = 1; u <= a->n(); ++u) {
        Echelon e(a->dim(), a->field());
        for (const auto& row : j.space().basis()) e.insert(a->left_idempotent(u, row));
        std::vector<std::size_t> q;
        for (auto c : e.free_columns())
            if (a->basis(c).src == u) q.push_back(c);
        ej.push_back(std::move(e));
        qbasis.push_back(std::move(q));
    }
    auto chain_dim = [&](std::size_t t) {
        std::size_t d = 0;
        for (int u : res.term(t)) d += qbasis[vidx(u)].size();
        return d;
    };
    auto differential_rank = [&](std::size_t t) -> std::size_t {  // C_t -> C_{t-1}
        if (t == 0 || t > res.differentials.size()) return 0;
        const FreeMap& d = res.differentials[t - 1];
        std::size_t rows = chain_dim(t), cols = chain_dim(t - 1);
        if (!rows || !cols) return 0;
        Matrix mat(rows, cols, a->field());
        std::size_t row = 0;
        for (std::size_t c = 0; c < d.src.size(); ++c)
            for (auto y : qbasis[vidx(d.src[c])]) {
                std::size_t col = 0;
                for (std::size_t r = 0; r < d.dst.size(); ++r) {
                    int u = d.dst[r];
                    Vec img = ej[vidx(u)].reduce(a->multiply(d.entry[c][r], a->unit(y)));
                    for (auto q : qbasis[vidx(u)]) mat(row, col++) = img[q];
                }
                ++row;
            }
        return rank(mat);
    };
    const auto uk = static_cast<std::size_t>(k);
    return chain_dim(uk) - differential_rank(uk) - differential_rank(uk + 1);
}

std::size_t tor_dim(const Module& m, int i, int k) { return tor_dim(m, maximal_ideal(m.algebra_ptr(), i), k); }

Module transpose(const Module& m) {
    AlgebraPtr op = m.algebra().opposite();
    auto pres = presentation(m);
    if (pres.differentials.empty()) return zero_module(op);
    const FreeMap& d = pres.differentials[0];
    // Hom(-, A) turns e_{src c} -> sum_r entry[c][r] into a map of left
    // projectives A e_{dst r} -> (+)_c A e_{src c}, i.e. of right A^op projectives.
    FreeMap dual_map;
    dual_map.src = d.dst;
    dual_map.dst = d.src;
    dual_map.entry.assign(d.dst.size(), std::vector<Vec>(d.src.size()));
    for (std::size_t c = 0; c < d.src.size(); ++c)
        for (std::size_t r = 0; r < d.dst.size(); ++r) dual_map.entry[r][c] = d.entry[c][r];
    Module target = free_module(op, dual_map.dst);
    Module tr = cokernel(free_map_as_module_map(op, dual_map), target).module;
    tr.set_provenance("Tr(" + m.provenance() + ")");
    return tr;
}

Module tau(const Module& m) {
    Module t = dual(transpose(m));
    t.set_provenance("tau(" + m.provenance() + ")");
    return t;
}

bool is_tau_rigid(const Module& m) { return hom_dim(m, tau(m)) == 0; }

}  // namespace tau_atlas
