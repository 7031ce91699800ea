#include "tau_atlas/module.hpp"

#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tau_atlas {

namespace {

std::size_t vidx(int v) { return static_cast<std::size_t>(v - 1); }

void check_same_algebra(const Module& m, const Module& n, const char* what) {
    if (m.algebra_ptr() != n.algebra_ptr()) throw std::invalid_argument(std::string(what) + ": modules over different algebras");
}

// Rows of m, reduced modulo `e` row by row (the linear map v -> reduce(v)).
Matrix reduce_rows(const Matrix& m, const Echelon& e) {
    Matrix out(m.rows(), m.cols(), m.field());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Vec red = e.reduce(m.row(r));
        std::copy(red.begin(), red.end(), out.row(r).begin());
    }
    return out;
}

Matrix hconcat(const std::vector<Matrix>& parts, std::size_t rows, const Field& f) {
    std::size_t cols = 0;
    for (const auto& p : parts) cols += p.cols();
    Matrix out(rows, cols, f);
    std::size_t c = 0;
    for (const auto& p : parts) {
        out.set_block(0, c, p);
        c += p.cols();
    }
    return out;
}

}  // namespace

Module::Module(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrow_actions, std::string provenance)
    : alg_(std::move(algebra)), dims_(std::move(dims)), arrows_(std::move(arrow_actions)), provenance_(std::move(provenance)) {
    if (!alg_) throw std::invalid_argument("module: null algebra");
    if (dims_.size() != static_cast<std::size_t>(alg_->n())) throw std::invalid_argument("module: wrong number of vertices");
    if (arrows_.size() != alg_->arrows().size()) throw std::invalid_argument("module: wrong number of arrow matrices");
    for (int v = 1; v <= alg_->n(); ++v)
        if (!alg_->vertex_alive(v) && dims_[vidx(v)] != 0) throw std::invalid_argument("module: support on a vanishing vertex");
    for (std::size_t k = 0; k < arrows_.size(); ++k) {
        const auto& ar = alg_->arrows()[k];
        if (arrows_[k].rows() != dims_[vidx(ar.src)] || arrows_[k].cols() != dims_[vidx(ar.tgt)])
            throw std::invalid_argument("module: arrow matrix " + ar.name + " has the wrong shape");
        if (!(arrows_[k].field() == alg_->field())) throw std::invalid_argument("module: field mismatch");
    }
}

std::size_t Module::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

Matrix Module::act(std::size_t basis_index) const {
    const auto& b = alg_->basis(basis_index);
    Matrix acc = Matrix::identity(dim(b.src), field());
    for (auto a : b.word) acc = acc * arrows_[a];
    return acc;
}

Matrix Module::act(const Vec& x, int u, int v) const {
    Matrix out(dim(u), dim(v), field());
    for (std::size_t k = 0; k < alg_->dim(); ++k) {
        if (!x[k]) continue;
        const auto& b = alg_->basis(k);
        if (b.src != u || b.tgt != v) continue;
        out = out + act(k).scaled(x[k]);
    }
    return out;
}

Module Module::rewrap(AlgebraPtr other) const {
    if (other->n() != n() || other->arrows().size() != alg_->arrows().size())
        throw std::invalid_argument("rewrap: incompatible algebra");
    for (std::size_t k = 0; k < arrows_.size(); ++k)
        if (other->arrows()[k].src != alg_->arrows()[k].src || other->arrows()[k].tgt != alg_->arrows()[k].tgt)
            throw std::invalid_argument("rewrap: arrow lists differ");
    return Module(std::move(other), dims_, arrows_, provenance_);
}

bool ModuleMap::is_zero() const {
    for (const auto& b : blocks)
        if (!b.is_zero()) return false;
    return true;
}

bool ModuleMap::is_isomorphism() const {
    for (const auto& b : blocks) {
        if (b.rows() != b.cols()) return false;
        if (b.rows() && !is_invertible(b)) return false;
    }
    return true;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    if (g.blocks.size() != f.blocks.size()) throw std::invalid_argument("compose: vertex count mismatch");
    ModuleMap out;
    for (std::size_t v = 0; v < f.blocks.size(); ++v) out.blocks.push_back(f.blocks[v] * g.blocks[v]);
    return out;
}

ModuleMap zero_map(const Module& m, const Module& n) {
    ModuleMap out;
    for (int v = 1; v <= m.n(); ++v) out.blocks.emplace_back(m.dim(v), n.dim(v), m.field());
    return out;
}

ModuleMap identity_map(const Module& m) {
    ModuleMap out;
    for (int v = 1; v <= m.n(); ++v) out.blocks.push_back(Matrix::identity(m.dim(v), m.field()));
    return out;
}

ModuleMap linear_combination(const Field& f, const std::vector<ModuleMap>& maps, const Vec& coeffs) {
    if (maps.empty()) throw std::invalid_argument("linear_combination: no maps");
    ModuleMap out;
    for (const auto& b : maps[0].blocks) out.blocks.emplace_back(b.rows(), b.cols(), f);
    for (std::size_t k = 0; k < maps.size(); ++k) {
        if (!coeffs[k]) continue;
        for (std::size_t v = 0; v < out.blocks.size(); ++v) out.blocks[v] = out.blocks[v] + maps[k].blocks[v].scaled(coeffs[k]);
    }
    return out;
}

ModuleMap inverse_map(const ModuleMap& f) {
    ModuleMap out;
    for (const auto& b : f.blocks) out.blocks.push_back(b.rows() ? inverse(b) : b);
    return out;
}

bool is_module_map(const Module& m, const Module& n, const ModuleMap& f) {
    if (f.blocks.size() != static_cast<std::size_t>(m.n())) return false;
    for (int v = 1; v <= m.n(); ++v)
        if (f.blocks[vidx(v)].rows() != m.dim(v) || f.blocks[vidx(v)].cols() != n.dim(v)) return false;
    const auto& arrows = m.algebra().arrows();
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        const auto& ar = arrows[k];
        if (!(m.arrow(k) * f.blocks[vidx(ar.tgt)] == f.blocks[vidx(ar.src)] * n.arrow(k))) return false;
    }
    return true;
}

Vec flatten(const ModuleMap& f) {
    Vec out;
    for (const auto& b : f.blocks) out.insert(out.end(), b.data().begin(), b.data().end());
    return out;
}

Module zero_module(const AlgebraPtr& a) {
    std::vector<Matrix> arrows;
    for (std::size_t k = 0; k < a->arrows().size(); ++k) arrows.emplace_back(0, 0, a->field());
    return Module(a, std::vector<std::size_t>(static_cast<std::size_t>(a->n()), 0), std::move(arrows), "0");
}

VertexSpaces right_ideal_bases(const Algebra& a, const Echelon& r) {
    VertexSpaces out;
    for (int v = 1; v <= a.n(); ++v) {
        Echelon e(a.dim(), a.field());
        for (const auto& row : r.basis()) e.insert(a.right_idempotent(row, v));
        out.push_back(std::move(e));
    }
    return out;
}

Module right_ideal_module(const AlgebraPtr& a, const Echelon& r, std::string provenance) {
    VertexSpaces bases = right_ideal_bases(*a, r);
    std::vector<std::size_t> dims;
    for (const auto& e : bases) dims.push_back(e.rank());
    std::vector<Matrix> arrows;
    for (const auto& ar : a->arrows()) {
        const Echelon& from = bases[vidx(ar.src)];
        const Echelon& to = bases[vidx(ar.tgt)];
        Matrix m(from.rank(), to.rank(), a->field());
        Vec alpha = a->unit(ar.element);
        for (std::size_t i = 0; i < from.rank(); ++i) {
            Vec img = a->multiply(from.basis()[i], alpha);
            if (!to.contains(img)) throw std::invalid_argument("right_ideal_module: subspace not closed under right multiplication");
            Vec c = to.coordinates(img);
            std::copy(c.begin(), c.end(), m.row(i).begin());
        }
        arrows.push_back(std::move(m));
    }
    return Module(a, std::move(dims), std::move(arrows), std::move(provenance));
}

Module projective(const AlgebraPtr& a, int i) {
    if (i < 1 || i > a->n()) throw std::out_of_range("projective: vertex out of range");
    Echelon r(a->dim(), a->field());
    for (std::size_t k = 0; k < a->dim(); ++k)
        if (a->basis(k).src == i) r.insert(a->unit(k));
    return right_ideal_module(a, r, "P" + std::to_string(i));
}

Module simple(const AlgebraPtr& a, int i) {
    if (i < 1 || i > a->n()) throw std::out_of_range("simple: vertex out of range");
    if (!a->vertex_alive(i)) throw std::invalid_argument("simple: vertex vanishes in this algebra");
    std::vector<std::size_t> dims(static_cast<std::size_t>(a->n()), 0);
    dims[vidx(i)] = 1;
    std::vector<Matrix> arrows;
    for (const auto& ar : a->arrows()) arrows.emplace_back(dims[vidx(ar.src)], dims[vidx(ar.tgt)], a->field());
    return Module(a, std::move(dims), std::move(arrows), "S" + std::to_string(i));
}

Module regular_module(const AlgebraPtr& a) {
    std::vector<Module> parts;
    for (int i = 1; i <= a->n(); ++i)
        if (a->vertex_alive(i)) parts.push_back(projective(a, i));
    Module m = direct_sum(a, parts);
    m.set_provenance("A");
    return m;
}

Module direct_sum(const AlgebraPtr& a, const std::vector<Module>& parts) {
    std::vector<std::size_t> dims(static_cast<std::size_t>(a->n()), 0);
    for (const auto& p : parts) {
        if (p.algebra_ptr() != a) throw std::invalid_argument("direct_sum: modules over different algebras");
        for (int v = 1; v <= a->n(); ++v) dims[vidx(v)] += p.dim(v);
    }
    std::vector<Matrix> arrows;
    for (std::size_t k = 0; k < a->arrows().size(); ++k) {
        const auto& ar = a->arrows()[k];
        Matrix m(dims[vidx(ar.src)], dims[vidx(ar.tgt)], a->field());
        std::size_t r = 0, c = 0;
        for (const auto& p : parts) {
            m.set_block(r, c, p.arrow(k));
            r += p.dim(ar.src);
            c += p.dim(ar.tgt);
        }
        arrows.push_back(std::move(m));
    }
    std::string prov;
    for (std::size_t k = 0; k < parts.size(); ++k) prov += (k ? " + " : "") + parts[k].provenance();
    return Module(a, std::move(dims), std::move(arrows), prov);
}

ModuleMap sum_injection(const std::vector<Module>& parts, std::size_t k) {
    const auto& a = parts.at(k).algebra();
    ModuleMap out;
    for (int v = 1; v <= a.n(); ++v) {
        std::size_t total = 0, offset = 0;
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (j == k) offset = total;
            total += parts[j].dim(v);
        }
        Matrix m(parts[k].dim(v), total, a.field());
        for (std::size_t i = 0; i < parts[k].dim(v); ++i) m(i, offset + i) = 1;
        out.blocks.push_back(std::move(m));
    }
    return out;
}

ModuleMap sum_projection(const std::vector<Module>& parts, std::size_t k) {
    ModuleMap inj = sum_injection(parts, k);
    for (auto& b : inj.blocks) b = b.transpose();
    return inj;
}

ModuleMap map_from_sum(const std::vector<ModuleMap>& maps) {
    if (maps.empty()) throw std::invalid_argument("map_from_sum: empty");
    ModuleMap out;
    for (std::size_t v = 0; v < maps[0].blocks.size(); ++v) {
        std::size_t rows = 0;
        for (const auto& f : maps) rows += f.blocks[v].rows();
        Matrix m(rows, maps[0].blocks[v].cols(), maps[0].blocks[v].field());
        std::size_t r = 0;
        for (const auto& f : maps) {
            m.set_block(r, 0, f.blocks[v]);
            r += f.blocks[v].rows();
        }
        out.blocks.push_back(std::move(m));
    }
    return out;
}

ModuleMap map_into_sum(const std::vector<ModuleMap>& maps) {
    if (maps.empty()) throw std::invalid_argument("map_into_sum: empty");
    ModuleMap out;
    for (std::size_t v = 0; v < maps[0].blocks.size(); ++v) {
        std::vector<Matrix> parts;
        for (const auto& f : maps) parts.push_back(f.blocks[v]);
        out.blocks.push_back(hconcat(parts, maps[0].blocks[v].rows(), maps[0].blocks[v].field()));
    }
    return out;
}

Module ideal_component(const TwoSidedIdeal& t, int i) {
    const Algebra& a = t.algebra();
    Echelon r(a.dim(), a.field());
    for (const auto& row : t.space().basis()) r.insert(a.left_idempotent(i, row));
    return right_ideal_module(t.algebra_ptr(), r, "e" + std::to_string(i) + "*T");
}

Module ideal_module(const TwoSidedIdeal& t) { return right_ideal_module(t.algebra_ptr(), t.space(), "T"); }

VertexSpaces zero_spaces(const Module& m) {
    VertexSpaces out;
    for (int v = 1; v <= m.n(); ++v) out.emplace_back(m.dim(v), m.field());
    return out;
}

VertexSpaces full_spaces(const Module& m) {
    VertexSpaces out = zero_spaces(m);
    for (int v = 1; v <= m.n(); ++v)
        for (std::size_t i = 0; i < m.dim(v); ++i) {
            Vec e(m.dim(v), 0);
            e[i] = 1;
            out[vidx(v)].insert(e);
        }
    return out;
}

VertexSpaces sum_spaces(const VertexSpaces& a, const VertexSpaces& b) {
    VertexSpaces out = a;
    for (std::size_t v = 0; v < a.size(); ++v)
        for (const auto& row : b[v].basis()) out[v].insert(row);
    return out;
}

std::vector<std::size_t> space_dims(const VertexSpaces& s) {
    std::vector<std::size_t> out;
    for (const auto& e : s) out.push_back(e.rank());
    return out;
}

std::size_t total_rank(const VertexSpaces& s) {
    std::size_t t = 0;
    for (const auto& e : s) t += e.rank();
    return t;
}

VertexSpaces generate_submodule(const Module& m, const VertexSpaces& generators) {
    VertexSpaces out = zero_spaces(m);
    std::deque<std::pair<int, Vec>> todo;
    for (int v = 1; v <= m.n(); ++v)
        for (const auto& row : generators[vidx(v)].basis())
            if (out[vidx(v)].insert(row)) todo.emplace_back(v, row);
    const auto& arrows = m.algebra().arrows();
    while (!todo.empty()) {
        auto [u, x] = std::move(todo.front());
        todo.pop_front();
        for (std::size_t k = 0; k < arrows.size(); ++k) {
            if (arrows[k].src != u) continue;
            Vec y = vec_times(x, m.arrow(k));
            if (out[vidx(arrows[k].tgt)].insert(y)) todo.emplace_back(arrows[k].tgt, std::move(y));
        }
    }
    return out;
}

SubmoduleResult submodule(const Module& m, const VertexSpaces& spaces) {
    std::vector<std::size_t> dims = space_dims(spaces);
    std::vector<Matrix> arrows;
    const auto& alist = m.algebra().arrows();
    for (std::size_t k = 0; k < alist.size(); ++k) {
        const Echelon& from = spaces[vidx(alist[k].src)];
        const Echelon& to = spaces[vidx(alist[k].tgt)];
        Matrix a(from.rank(), to.rank(), m.field());
        for (std::size_t i = 0; i < from.rank(); ++i) {
            Vec img = vec_times(from.basis()[i], m.arrow(k));
            if (!to.contains(img)) throw std::invalid_argument("submodule: subspaces not closed under the action");
            Vec c = to.coordinates(img);
            std::copy(c.begin(), c.end(), a.row(i).begin());
        }
        arrows.push_back(std::move(a));
    }
    ModuleMap inc;
    for (int v = 1; v <= m.n(); ++v) {
        const Echelon& e = spaces[vidx(v)];
        inc.blocks.push_back(e.rank() ? e.matrix() : Matrix(0, m.dim(v), m.field()));
    }
    return {Module(m.algebra_ptr(), std::move(dims), std::move(arrows), "sub(" + m.provenance() + ")"), std::move(inc)};
}

QuotientResult quotient(const Module& m, const VertexSpaces& spaces) {
    std::vector<std::vector<std::size_t>> free(static_cast<std::size_t>(m.n()));
    std::vector<std::size_t> dims;
    for (int v = 1; v <= m.n(); ++v) {
        free[vidx(v)] = spaces[vidx(v)].free_columns();
        dims.push_back(free[vidx(v)].size());
    }
    auto project = [&](int v, std::span<const Scalar> x) {
        Vec red = spaces[vidx(v)].reduce(x);
        Vec out;
        for (auto c : free[vidx(v)]) out.push_back(red[c]);
        return out;
    };
    std::vector<Matrix> arrows;
    const auto& alist = m.algebra().arrows();
    for (std::size_t k = 0; k < alist.size(); ++k) {
        int u = alist[k].src, v = alist[k].tgt;
        Matrix a(dims[vidx(u)], dims[vidx(v)], m.field());
        for (std::size_t i = 0; i < free[vidx(u)].size(); ++i) {
            Vec img = project(v, m.arrow(k).row(free[vidx(u)][i]));
            std::copy(img.begin(), img.end(), a.row(i).begin());
        }
        arrows.push_back(std::move(a));
    }
    ModuleMap proj;
    for (int v = 1; v <= m.n(); ++v) {
        Matrix p(m.dim(v), dims[vidx(v)], m.field());
        for (std::size_t i = 0; i < m.dim(v); ++i) {
            Vec e(m.dim(v), 0);
            e[i] = 1;
            Vec img = project(v, e);
            std::copy(img.begin(), img.end(), p.row(i).begin());
        }
        proj.blocks.push_back(std::move(p));
    }
    return {Module(m.algebra_ptr(), std::move(dims), std::move(arrows), "quot(" + m.provenance() + ")"), std::move(proj)};
}

VertexSpaces image_spaces(const ModuleMap& f, const Module& target) {
    VertexSpaces out = zero_spaces(target);
    for (int v = 1; v <= target.n(); ++v) {
        const Matrix& b = f.blocks[vidx(v)];
        for (std::size_t r = 0; r < b.rows(); ++r) out[vidx(v)].insert(b.row(r));
    }
    return out;
}

VertexSpaces kernel_spaces(const ModuleMap& f, const Module& source) {
    VertexSpaces out = zero_spaces(source);
    for (int v = 1; v <= source.n(); ++v) {
        const Matrix& b = f.blocks[vidx(v)];
        if (b.rows() == 0) continue;
        if (b.cols() == 0) {
            out[vidx(v)] = full_spaces(source)[vidx(v)];
            continue;
        }
        Matrix k = left_nullspace(b);
        for (std::size_t r = 0; r < k.rows(); ++r) out[vidx(v)].insert(k.row(r));
    }
    return out;
}

SubmoduleResult kernel(const ModuleMap& f, const Module& source) { return submodule(source, kernel_spaces(f, source)); }
SubmoduleResult image(const ModuleMap& f, const Module& target) { return submodule(target, image_spaces(f, target)); }
QuotientResult cokernel(const ModuleMap& f, const Module& target) { return quotient(target, image_spaces(f, target)); }

VertexSpaces radical_spaces(const Module& m) {
    VertexSpaces out = zero_spaces(m);
    const auto& alist = m.algebra().arrows();
    for (std::size_t k = 0; k < alist.size(); ++k)
        for (std::size_t r = 0; r < m.arrow(k).rows(); ++r) out[vidx(alist[k].tgt)].insert(m.arrow(k).row(r));
    return out;
}

namespace {

// { x in M e_u : x * alpha in inner e_v for every arrow alpha: u -> v }
VertexSpaces preimage_under_arrows(const Module& m, const VertexSpaces& inner) {
    VertexSpaces out = zero_spaces(m);
    const auto& alist = m.algebra().arrows();
    for (int u = 1; u <= m.n(); ++u) {
        if (m.dim(u) == 0) continue;
        std::vector<Matrix> parts;
        for (std::size_t k = 0; k < alist.size(); ++k)
            if (alist[k].src == u && m.dim(alist[k].tgt)) parts.push_back(reduce_rows(m.arrow(k), inner[vidx(alist[k].tgt)]));
        Matrix stacked = hconcat(parts, m.dim(u), m.field());
        if (stacked.cols() == 0) {
            out[vidx(u)] = full_spaces(m)[vidx(u)];
            continue;
        }
        Matrix k = left_nullspace(stacked);
        for (std::size_t r = 0; r < k.rows(); ++r) out[vidx(u)].insert(k.row(r));
    }
    return out;
}

}  // namespace

VertexSpaces socle_spaces(const Module& m) { return preimage_under_arrows(m, zero_spaces(m)); }

Module radical(const Module& m) { return submodule(m, radical_spaces(m)).module; }
Module socle(const Module& m) { return submodule(m, socle_spaces(m)).module; }
Module top(const Module& m) { return quotient(m, radical_spaces(m)).module; }

std::vector<std::vector<std::size_t>> radical_layers(const Module& m) {
    std::vector<std::vector<std::size_t>> out;
    VertexSpaces cur = full_spaces(m);
    const auto& alist = m.algebra().arrows();
    while (total_rank(cur) > 0) {
        VertexSpaces next = zero_spaces(m);
        for (std::size_t k = 0; k < alist.size(); ++k)
            for (const auto& row : cur[vidx(alist[k].src)].basis()) next[vidx(alist[k].tgt)].insert(vec_times(row, m.arrow(k)));
        std::vector<std::size_t> layer;
        for (std::size_t v = 0; v < cur.size(); ++v) layer.push_back(cur[v].rank() - next[v].rank());
        out.push_back(std::move(layer));
        if (total_rank(next) == total_rank(cur)) throw std::logic_error("radical_layers: radical series does not terminate");
        cur = std::move(next);
    }
    return out;
}

std::vector<std::vector<std::size_t>> socle_layers(const Module& m) {
    std::vector<std::vector<std::size_t>> out;
    VertexSpaces cur = zero_spaces(m);
    while (total_rank(cur) < m.total_dim()) {
        VertexSpaces next = preimage_under_arrows(m, cur);
        std::vector<std::size_t> layer;
        for (std::size_t v = 0; v < cur.size(); ++v) layer.push_back(next[v].rank() - cur[v].rank());
        if (total_rank(next) == total_rank(cur)) throw std::logic_error("socle_layers: socle series does not terminate");
        out.push_back(std::move(layer));
        cur = std::move(next);
    }
    return out;
}

bool has_simple_socle(const Module& m) { return total_rank(socle_spaces(m)) == 1; }
bool has_simple_top(const Module& m) { return m.total_dim() - total_rank(radical_spaces(m)) == 1; }

std::vector<ModuleMap> hom_basis(const Module& m, const Module& n) {
    check_same_algebra(m, n, "hom_basis");
    const int nv = m.n();
    std::vector<std::size_t> offset(static_cast<std::size_t>(nv) + 1, 0);
    for (int v = 1; v <= nv; ++v) offset[static_cast<std::size_t>(v)] = offset[vidx(v)] + m.dim(v) * n.dim(v);
    const std::size_t unknowns = offset.back();
    if (unknowns == 0) return {};
    const auto& alist = m.algebra().arrows();
    std::size_t rows = 0;
    for (const auto& ar : alist) rows += m.dim(ar.src) * n.dim(ar.tgt);
    const Field& f = m.field();
    Matrix c(rows, unknowns, f);
    std::size_t row = 0;
    for (std::size_t k = 0; k < alist.size(); ++k) {
        const int u = alist[k].src, v = alist[k].tgt;
        const Matrix& am = m.arrow(k);
        const Matrix& an = n.arrow(k);
        const std::size_t du = m.dim(u), dv = m.dim(v), eu = n.dim(u), ev = n.dim(v);
        // (A^M f_v - f_u A^N)[r][col] = 0
        for (std::size_t r = 0; r < du; ++r)
            for (std::size_t col = 0; col < ev; ++col, ++row) {
                for (std::size_t j = 0; j < dv; ++j)
                    if (am(r, j)) c(row, offset[vidx(v)] + j * ev + col) = f.add(c(row, offset[vidx(v)] + j * ev + col), am(r, j));
                for (std::size_t j = 0; j < eu; ++j)
                    if (an(j, col))
                        c(row, offset[vidx(u)] + r * eu + j) = f.sub(c(row, offset[vidx(u)] + r * eu + j), an(j, col));
            }
    }
    Matrix ns = rows ? right_nullspace(c) : Matrix::identity(unknowns, f);
    std::vector<ModuleMap> out;
    for (std::size_t b = 0; b < ns.rows(); ++b) {
        ModuleMap map;
        for (int v = 1; v <= nv; ++v) {
            Matrix blk(m.dim(v), n.dim(v), f);
            for (std::size_t i = 0; i < m.dim(v); ++i)
                for (std::size_t j = 0; j < n.dim(v); ++j) blk(i, j) = ns(b, offset[vidx(v)] + i * n.dim(v) + j);
            map.blocks.push_back(std::move(blk));
        }
        out.push_back(std::move(map));
    }
    return out;
}

std::size_t hom_dim(const Module& m, const Module& n) { return hom_basis(m, n).size(); }

VertexSpaces trace(const Module& t, const Module& x) {
    VertexSpaces out = zero_spaces(x);
    for (const auto& f : hom_basis(t, x)) out = sum_spaces(out, image_spaces(f, x));
    return out;
}

bool in_fac(const Module& x, const Module& t) { return total_rank(trace(t, x)) == x.total_dim(); }

QuotientResult act_quotient(const Module& m, const TwoSidedIdeal& j) {
    if (j.algebra_ptr() != m.algebra_ptr()) throw std::invalid_argument("act_quotient: ideal of another algebra");
    VertexSpaces mj = zero_spaces(m);
    for (const auto& row : j.space().basis())
        for (int u = 1; u <= m.n(); ++u) {
            if (m.dim(u) == 0) continue;
            for (int v = 1; v <= m.n(); ++v) {
                if (m.dim(v) == 0) continue;
                Matrix act = m.act(row, u, v);
                for (std::size_t r = 0; r < act.rows(); ++r) mj[vidx(v)].insert(act.row(r));
            }
        }
    return quotient(m, mj);
}

Module dual(const Module& m) {
    AlgebraPtr op = m.algebra().opposite();
    std::vector<Matrix> arrows;
    for (const auto& x : m.arrow_actions()) arrows.push_back(x.transpose());
    return Module(op, m.dims(), std::move(arrows), "D(" + m.provenance() + ")");
}

std::string Fingerprint::str() const {
    std::ostringstream os;
    auto vec = [&](const std::vector<std::size_t>& v) {
        os << '(';
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << ')';
    };
    vec(dims);
    os << " rad";
    for (const auto& l : radical) vec(l);
    os << " soc";
    for (const auto& l : socle) vec(l);
    return os.str();
}

Fingerprint fingerprint(const Module& m) { return {m.dims(), radical_layers(m), socle_layers(m)}; }

std::string radical_layer_string(const Module& m) {
    std::string out;
    auto layers = radical_layers(m);
    for (std::size_t k = 0; k < layers.size(); ++k) {
        if (k) out += '/';
        for (std::size_t v = 0; v < layers[k].size(); ++v) out += std::string(layers[k][v], static_cast<char>('1' + v));
    }
    return out.empty() ? "0" : out;
}

}  // namespace tau_atlas
