#include "gentle/rep_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gentle {

namespace {

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

std::uint32_t inv_mod(std::uint32_t x, std::uint32_t p) { return mod_pow(x, p - 2, p); }

/// Row echelon form in place; returns pivot columns.
std::vector<int> echelonize(FpMatrix& m, const FieldSpec& field) {
    const std::uint64_t p = field.p;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows(); ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
        std::uint64_t inv = inv_mod(m.at(row, col), field.p);
        for (int c = 0; c < m.cols(); ++c)
            m.at(row, c) = static_cast<std::uint32_t>(m.at(row, c) * inv % p);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            std::uint64_t f = m.at(r, col);
            for (int c = 0; c < m.cols(); ++c)
                m.at(r, c) = static_cast<std::uint32_t>(
                    (m.at(r, c) + p - f * m.at(row, c) % p) % p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

FpMatrix FpMatrix::identity(int n) {
    FpMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::multiply(const FpMatrix& other, const FieldSpec& field) const {
    if (cols_ != other.rows_) throw std::invalid_argument("FpMatrix::multiply: shape mismatch");
    FpMatrix out(rows_, other.cols_);
    const std::uint64_t p = field.p;
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            std::uint64_t x = at(i, k);
            if (!x) continue;
            for (int j = 0; j < other.cols_; ++j)
                out.at(i, j) = static_cast<std::uint32_t>((out.at(i, j) + x * other.at(k, j)) % p);
        }
    return out;
}

bool FpMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint32_t x) { return x == 0; });
}

int FpMatrix::rank(const FieldSpec& field) const {
    FpMatrix copy = *this;
    return static_cast<int>(echelonize(copy, field).size());
}

FpMatrix FpMatrix::left_nullspace(const FieldSpec& field) const {
    // Solve x·M = 0: echelonize Mᵀ and read off the free-variable basis of
    // its right null space.
    FpMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    std::vector<int> pivots = echelonize(t, field);
    std::vector<bool> is_pivot(rows_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < rows_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    FpMatrix basis(static_cast<int>(free_cols.size()), rows_);
    const std::uint32_t p = field.p;
    for (int i = 0; i < basis.rows(); ++i) {
        int fc = free_cols[i];
        basis.at(i, fc) = 1;
        for (int pr = 0; pr < static_cast<int>(pivots.size()); ++pr) {
            // pivot row pr has leading 1 in column pivots[pr]
            std::uint32_t coeff = t.at(pr, fc);
            if (coeff) basis.at(i, pivots[pr]) = p - coeff;
        }
    }
    return basis;
}

FpMatrix FpMatrix::solve_left(const FpMatrix& rhs, const FieldSpec& field) const {
    // Solve x·M = rhs row-wise, i.e. Mᵀ xᵀ = rhsᵀ.
    FpMatrix aug(cols_, rows_ + rhs.rows());
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) aug.at(c, r) = at(r, c);
    for (int r = 0; r < rhs.rows(); ++r) {
        if (rhs.cols() != cols_) throw std::invalid_argument("solve_left: shape mismatch");
        for (int c = 0; c < cols_; ++c) aug.at(c, rows_ + r) = rhs.at(r, c);
    }
    std::vector<int> pivots = echelonize(aug, field);
    FpMatrix x(rhs.rows(), rows_);
    for (int pr = 0; pr < static_cast<int>(pivots.size()); ++pr) {
        int col = pivots[pr];
        if (col >= rows_) throw std::runtime_error("solve_left: inconsistent system");
        for (int r = 0; r < rhs.rows(); ++r) x.at(r, col) = aug.at(pr, rows_ + r);
    }
    return x;
}

int Representation::total_dim() const {
    return std::accumulate(dims.begin(), dims.end(), 0);
}

void check_relations(const BoundQuiver& bq, const Representation& rep, const FieldSpec& field) {
    for (auto [a, b] : bq.relations())
        if (!rep.mats[a].multiply(rep.mats[b], field).is_zero())
            throw std::runtime_error("representation does not annihilate relation (" +
                                     bq.quiver().arrow(a).name + ", " +
                                     bq.quiver().arrow(b).name + ")");
}

namespace {

Representation zero_rep(const BoundQuiver& bq) {
    Representation rep;
    rep.dims.assign(bq.num_vertices(), 0);
    rep.mats.resize(bq.num_arrows());
    for (int a = 0; a < bq.num_arrows(); ++a)
        rep.mats[a] = FpMatrix(0, 0);
    return rep;
}

void shape_mats(const BoundQuiver& bq, Representation& rep) {
    rep.mats.assign(bq.num_arrows(), {});
    for (int a = 0; a < bq.num_arrows(); ++a)
        rep.mats[a] = FpMatrix(rep.dims[bq.source(a)], rep.dims[bq.target(a)]);
}

}  // namespace

Representation string_rep(const BoundQuiver& bq, const StringWord& w, const FieldSpec& field) {
    Representation rep = zero_rep(bq);
    std::size_t positions = w.length() + 1;
    std::vector<int> pos_vertex(positions), pos_index(positions);
    for (std::size_t i = 0; i < positions; ++i) {
        pos_vertex[i] = word_vertex_at(bq, w, i);
        pos_index[i] = rep.dims[pos_vertex[i]]++;
    }
    shape_mats(bq, rep);
    if (!w.is_trivial()) {
        for (std::size_t k = 0; k < w.length(); ++k) {
            Letter l = w.letters()[k];
            std::size_t from = l.inverse ? k + 1 : k;
            std::size_t to = l.inverse ? k : k + 1;
            rep.mats[l.arrow].at(pos_index[from], pos_index[to]) = 1;
        }
    }
    check_relations(bq, rep, field);
    return rep;
}

Representation band_rep(const BoundQuiver& bq, const StringWord& band, int n,
                        std::uint32_t lambda, const FieldSpec& field) {
    if (n < 1) throw std::invalid_argument("band_rep: n >= 1 required");
    lambda %= field.p;
    if (lambda == 0) throw std::invalid_argument("band_rep: lambda must be nonzero");
    std::size_t k = band.length();
    if (k == 0) throw std::invalid_argument("band_rep: band must be nonempty");
    Representation rep = zero_rep(bq);
    std::vector<int> pos_vertex(k), pos_base(k);
    for (std::size_t i = 0; i < k; ++i) {
        pos_vertex[i] = word_vertex_at(bq, band, i);
        pos_base[i] = rep.dims[pos_vertex[i]];
        rep.dims[pos_vertex[i]] += n;
    }
    shape_mats(bq, rep);
    // Jordan block J_n(lambda): lambda on the diagonal, 1 on the
    // superdiagonal (equivalent to the eigenvalue-lambda block).
    auto put_block = [&](int arrow, int from_base, int to_base, bool jordan) {
        for (int i = 0; i < n; ++i) {
            rep.mats[arrow].at(from_base + i, to_base + i) = jordan ? lambda : 1;
            if (jordan && i + 1 < n) rep.mats[arrow].at(from_base + i, to_base + i + 1) = 1;
        }
    };
    for (std::size_t i = 0; i < k; ++i) {
        Letter l = band.letters()[i];
        std::size_t from_pos = l.inverse ? (i + 1) % k : i;
        std::size_t to_pos = l.inverse ? i : (i + 1) % k;
        put_block(l.arrow, pos_base[from_pos], pos_base[to_pos], i + 1 == k);
    }
    check_relations(bq, rep, field);
    return rep;
}

namespace {

struct PathBasis {
    std::vector<std::vector<int>> paths;  // arrow sequences, [0] = {} (the idempotent)
};

/// All relation-free paths starting at v (for projectives) or, reversed,
/// ending at v (handled by the caller via opposite data).
PathBasis relation_free_paths_from(const BoundQuiver& bq, int v) {
    PathBasis basis;
    basis.paths.push_back({});
    std::size_t head = 0;
    while (head < basis.paths.size()) {
        std::vector<int> path = basis.paths[head++];
        int end = path.empty() ? v : bq.target(path.back());
        for (int a : bq.quiver().out_arrows(end)) {
            if (!path.empty() && bq.has_relation(path.back(), a)) continue;
            if (static_cast<int>(path.size()) > bq.num_arrows())
                throw std::runtime_error("relation-free paths unbounded (FD violation)");
            auto ext = path;
            ext.push_back(a);
            basis.paths.push_back(std::move(ext));
        }
    }
    return basis;
}

}  // namespace

Representation projective_rep(const BoundQuiver& bq, int v, const FieldSpec& field) {
    PathBasis basis = relation_free_paths_from(bq, v);
    Representation rep = zero_rep(bq);
    std::vector<int> end_vertex(basis.paths.size()), index(basis.paths.size());
    for (std::size_t i = 0; i < basis.paths.size(); ++i) {
        end_vertex[i] = basis.paths[i].empty() ? v : bq.target(basis.paths[i].back());
        index[i] = rep.dims[end_vertex[i]]++;
    }
    shape_mats(bq, rep);
    for (std::size_t i = 0; i < basis.paths.size(); ++i) {
        for (int a : bq.quiver().out_arrows(end_vertex[i])) {
            if (!basis.paths[i].empty() && bq.has_relation(basis.paths[i].back(), a)) continue;
            auto ext = basis.paths[i];
            ext.push_back(a);
            auto it = std::find(basis.paths.begin(), basis.paths.end(), ext);
            rep.mats[a].at(index[i], index[it - basis.paths.begin()]) = 1;
        }
    }
    check_relations(bq, rep, field);
    return rep;
}

Representation injective_rep(const BoundQuiver& bq, int v, const FieldSpec& field) {
    // Basis: relation-free paths into v; arrows act by prefix stripping.
    BoundQuiver op = opposite(bq);
    PathBasis basis = relation_free_paths_from(op, v);  // op-paths from v = paths into v
    Representation rep = zero_rep(bq);
    std::vector<int> start_vertex(basis.paths.size()), index(basis.paths.size());
    for (std::size_t i = 0; i < basis.paths.size(); ++i) {
        start_vertex[i] = basis.paths[i].empty() ? v : op.target(basis.paths[i].back());
        index[i] = rep.dims[start_vertex[i]]++;
    }
    shape_mats(bq, rep);
    // op-path [a1_op, a2_op, ...] from v corresponds to the bq-path
    // ... a2 a1 ending at v, starting at op.target(last).
    for (std::size_t i = 0; i < basis.paths.size(); ++i) {
        // acting by bq-arrow a on the dual basis vector of path q: the result
        // is the dual basis vector of the path aq, i.e. we need paths whose
        // op-extension by a gives path i.
        for (int a_op : op.quiver().out_arrows(start_vertex[i])) {
            if (!basis.paths[i].empty() && op.has_relation(basis.paths[i].back(), a_op)) continue;
            auto ext = basis.paths[i];
            ext.push_back(a_op);
            auto it = std::find(basis.paths.begin(), basis.paths.end(), ext);
            // ext = op-path i extended by a_op = bq-path (a · path_i);
            // the right action of a maps δ_{a·q} to δ_q: from ext to i.
            rep.mats[a_op].at(index[it - basis.paths.begin()], index[i]) = 1;
        }
    }
    check_relations(bq, rep, field);
    return rep;
}

namespace {

/// Rows spanning rad(rep) at each vertex.
std::vector<FpMatrix> radical_rows(const BoundQuiver& bq, const Representation& rep) {
    std::vector<FpMatrix> rad;
    for (int v = 0; v < bq.num_vertices(); ++v) {
        int total_rows = 0;
        for (int a : bq.quiver().in_arrows(v)) total_rows += rep.mats[a].rows();
        FpMatrix m(total_rows, rep.dims[v]);
        int r0 = 0;
        for (int a : bq.quiver().in_arrows(v)) {
            const FpMatrix& ma = rep.mats[a];
            for (int r = 0; r < ma.rows(); ++r)
                for (int c = 0; c < ma.cols(); ++c) m.at(r0 + r, c) = ma.at(r, c);
            r0 += ma.rows();
        }
        rad.push_back(std::move(m));
    }
    return rad;
}

}  // namespace

std::vector<int> top_of(const BoundQuiver& bq, const Representation& rep,
                        const FieldSpec& field) {
    std::vector<int> top(bq.num_vertices(), 0);
    std::vector<FpMatrix> rad = radical_rows(bq, rep);
    for (int v = 0; v < bq.num_vertices(); ++v)
        top[v] = rep.dims[v] - rad[v].rank(field);
    return top;
}

std::vector<int> socle_of(const BoundQuiver& bq, const Representation& rep,
                          const FieldSpec& field) {
    // socle at v: vectors killed by every outgoing arrow
    std::vector<int> soc(bq.num_vertices(), 0);
    for (int v = 0; v < bq.num_vertices(); ++v) {
        int total_cols = 0;
        for (int a : bq.quiver().out_arrows(v)) total_cols += rep.mats[a].cols();
        FpMatrix m(rep.dims[v], total_cols);
        int c0 = 0;
        for (int a : bq.quiver().out_arrows(v)) {
            const FpMatrix& ma = rep.mats[a];
            for (int r = 0; r < ma.rows(); ++r)
                for (int c = 0; c < ma.cols(); ++c) m.at(r, c0 + c) = ma.at(r, c);
            c0 += ma.cols();
        }
        soc[v] = rep.dims[v] - m.rank(field);
    }
    return soc;
}

CoverResult minimal_cover(const BoundQuiver& bq, const Representation& rep,
                          const FieldSpec& field) {
    const int nv = bq.num_vertices();
    std::vector<FpMatrix> rad = radical_rows(bq, rep);

    // Choose top generators: rows of rep extending a basis of rad at each
    // vertex, found by rank growth.
    std::vector<std::vector<FpMatrix>> generators(nv);  // 1×dim row vectors
    for (int v = 0; v < nv; ++v) {
        FpMatrix work = rad[v];
        int base_rank = work.rank(field);
        for (int i = 0; i < rep.dims[v]; ++i) {
            FpMatrix cand(work.rows() + 1, rep.dims[v]);
            for (int r = 0; r < work.rows(); ++r)
                for (int c = 0; c < work.cols(); ++c) cand.at(r, c) = work.at(r, c);
            cand.at(work.rows(), i) = 1;
            if (cand.rank(field) > base_rank) {
                FpMatrix g(1, rep.dims[v]);
                g.at(0, i) = 1;
                generators[v].push_back(g);
                work = cand;
                ++base_rank;
            }
        }
    }

    // Assemble the cover ⊕ P(v)^{mult} and the map to rep.
    CoverResult result;
    result.cover_multiplicities.assign(nv, 0);
    Representation cover = zero_rep(bq);
    struct Slot {
        int vertex;        // cover vertex of this basis element
        FpMatrix image;    // 1×dims[vertex] row in rep
    };
    std::vector<std::vector<Slot>> slots(nv);  // by cover vertex
    for (int v = 0; v < nv; ++v) {
        result.cover_multiplicities[v] = static_cast<int>(generators[v].size());
        for (const FpMatrix& g : generators[v]) {
            PathBasis basis = relation_free_paths_from(bq, v);
            // map each path-basis slot to g acted by the path
            std::vector<int> slot_ids;
            for (const auto& path : basis.paths) {
                FpMatrix img = g;
                int at_vertex = v;
                for (int a : path) {
                    img = img.multiply(rep.mats[a], field);
                    at_vertex = bq.target(a);
                }
                slots[at_vertex].push_back({at_vertex, img});
                slot_ids.push_back(static_cast<int>(slots[at_vertex].size()) - 1);
            }
            (void)slot_ids;
        }
    }
    // cover dims
    cover.dims.assign(nv, 0);
    for (int v = 0; v < nv; ++v) cover.dims[v] = static_cast<int>(slots[v].size());
    // Rebuild cover arrow matrices and the per-vertex map in one pass by
    // re-walking the path bases in the same order.
    shape_mats(bq, cover);
    std::vector<FpMatrix> phi(nv);
    for (int v = 0; v < nv; ++v) {
        phi[v] = FpMatrix(cover.dims[v], rep.dims[v]);
        for (int i = 0; i < cover.dims[v]; ++i)
            for (int c = 0; c < rep.dims[v]; ++c) phi[v].at(i, c) = slots[v][i].image.at(0, c);
    }
    {
        std::vector<int> fill(nv, 0);
        for (int v = 0; v < nv; ++v) {
            for (int g = 0; g < result.cover_multiplicities[v]; ++g) {
                PathBasis basis = relation_free_paths_from(bq, v);
                std::vector<int> slot_of_path(basis.paths.size());
                for (std::size_t i = 0; i < basis.paths.size(); ++i) {
                    int end = basis.paths[i].empty() ? v : bq.target(basis.paths[i].back());
                    slot_of_path[i] = fill[end]++;
                }
                for (std::size_t i = 0; i < basis.paths.size(); ++i) {
                    int end = basis.paths[i].empty() ? v : bq.target(basis.paths[i].back());
                    for (int a : bq.quiver().out_arrows(end)) {
                        if (!basis.paths[i].empty() && bq.has_relation(basis.paths[i].back(), a))
                            continue;
                        auto ext = basis.paths[i];
                        ext.push_back(a);
                        auto it = std::find(basis.paths.begin(), basis.paths.end(), ext);
                        cover.mats[a].at(slot_of_path[i],
                                         slot_of_path[it - basis.paths.begin()]) = 1;
                    }
                }
            }
        }
    }
    result.cover_dim = cover.total_dim();

    // Minimality: the cover's top must equal the module's top.
    {
        std::vector<int> cover_top = top_of(bq, cover, field);
        std::vector<int> rep_top = top_of(bq, rep, field);
        if (cover_top != rep_top) throw std::runtime_error("minimal_cover: cover is not minimal");
    }

    // Kernel as a subrepresentation: basis rows per vertex, induced actions.
    Representation kernel = zero_rep(bq);
    std::vector<FpMatrix> ker_rows(nv);
    for (int v = 0; v < nv; ++v) {
        ker_rows[v] = phi[v].left_nullspace(field);
        kernel.dims[v] = ker_rows[v].rows();
    }
    shape_mats(bq, kernel);
    for (int a = 0; a < bq.num_arrows(); ++a) {
        int s = bq.source(a), t = bq.target(a);
        if (kernel.dims[s] == 0 || cover.dims[t] == 0) continue;
        FpMatrix moved = ker_rows[s].multiply(cover.mats[a], field);  // rows in cover_t coords
        kernel.mats[a] = ker_rows[t].rows() == 0 && moved.is_zero()
                             ? FpMatrix(kernel.dims[s], 0)
                             : ker_rows[t].solve_left(moved, field);
        // solve_left returns coefficients x with x·ker_rows[t] = moved
    }
    check_relations(bq, kernel, field);
    result.kernel = std::move(kernel);
    return result;
}

OracleDim pd_oracle(const BoundQuiver& bq, const Representation& rep, int depth_cap,
                    const FieldSpec& field, ResolutionTrace* trace) {
    if (depth_cap < 1) throw std::invalid_argument("pd_oracle: depth_cap >= 1 required");
    OracleDim out;
    out.depth_cap = depth_cap;
    if (trace) {
        trace->steps.clear();
        trace->terminated = false;
        trace->depth_cap = depth_cap;
    }
    Representation current = rep;
    for (int depth = 0; depth <= depth_cap; ++depth) {
        if (current.total_dim() == 0) {
            out.value = Dim(std::max(0, depth - 1));
            if (trace) trace->terminated = true;
            return out;
        }
        CoverResult cover = minimal_cover(bq, current, field);
        if (trace) trace->steps.push_back({cover.cover_multiplicities, cover.kernel.dims});
        if (cover.kernel.total_dim() == 0) {
            out.value = Dim(depth);
            if (trace) trace->terminated = true;
            return out;
        }
        current = std::move(cover.kernel);
    }
    out.at_least = true;
    out.value = Dim::infinite();
    return out;
}

Representation dual_rep(const BoundQuiver& bq, const Representation& rep) {
    // Same arrow indices over opposite(bq); matrices transposed.
    Representation dual;
    dual.dims = rep.dims;
    dual.mats.resize(rep.mats.size());
    for (std::size_t a = 0; a < rep.mats.size(); ++a) {
        const FpMatrix& m = rep.mats[a];
        FpMatrix t(m.cols(), m.rows());
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
        dual.mats[a] = std::move(t);
    }
    (void)bq;
    return dual;
}

OracleDim id_oracle(const BoundQuiver& bq, const Representation& rep, int depth_cap,
                    const FieldSpec& field, ResolutionTrace* trace) {
    return pd_oracle(opposite(bq), dual_rep(bq, rep), depth_cap, field, trace);
}

LambdaIndependenceReport lambda_independence(const BoundQuiver& bq, const StringWord& band,
                                             const FieldSpec& field) {
    LambdaIndependenceReport report;
    if (field.p < 5) throw std::invalid_argument("lambda_independence: need three nonzero lambdas");
    std::vector<std::uint32_t> lambdas{1, 2, field.p - 1};
    for (int n : {1, 2}) {
        for (std::uint32_t lambda : lambdas) {
            Representation rep = band_rep(bq, band, n, lambda, field);
            OracleDim pd = pd_oracle(bq, rep, 6, field);
            OracleDim id = id_oracle(bq, rep, 6, field);
            if (!(pd.value == Dim(1)) || !(id.value == Dim(1))) {
                report.all_one = false;
                report.failures.push_back("n=" + std::to_string(n) +
                                          " lambda=" + std::to_string(lambda) +
                                          " pd=" + pd.value.str() + " id=" + id.value.str());
            }
        }
    }
    return report;
}

}  // namespace gentle
