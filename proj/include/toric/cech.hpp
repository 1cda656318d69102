#pragma once

#include "toric/piecewise.hpp"

namespace toric {

namespace detail {

/// Intersection of a set of maximal cones of a valid fan is the cone spanned
/// by their common rays.
inline std::size_t tuple_intersection_cone(const Fan& f, const std::vector<std::size_t>& tuple) {
    std::vector<std::size_t> meet = f.cones()[tuple.front()].ray_ids;
    for (std::size_t i = 1; i < tuple.size(); ++i) {
        std::vector<std::size_t> next;
        const auto& other = f.cones()[tuple[i]].ray_ids;
        std::set_intersection(meet.begin(), meet.end(), other.begin(), other.end(),
                              std::back_inserter(next));
        meet = std::move(next);
    }
    return f.cone_id(meet);
}

inline std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) break;
            if (i == 0) return out;
        }
        if (idx[i] == i + n - k) return out;
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

/// Graded dimensions of the equivariant cohomology of the toric variety of a
/// well-formed fan, through degree N_max: cohomology of the alternating
/// covering complex on tuples of maximal cones with polynomial coefficients on
/// the spans of their intersections. The page-two dimensions are summed along
/// the antidiagonals.
inline std::vector<std::size_t> cech_cohomology_dims(const Fan& f, int n_max) {
    if (!f.is_well_formed())
        throw std::invalid_argument("cohomology dimensions require a well-formed fan");
    std::size_t d = f.rank();
    std::size_t nmax_cones = f.maximal_cones().size();

    // span bases per cone id, and substitution data per (bigger, smaller) pair
    std::vector<Mat> span_basis(f.cones().size());
    for (std::size_t c = 0; c < f.cones().size(); ++c)
        span_basis[c] = saturation_basis(f.cone_geometry(c).rays(), d);

    std::vector<std::size_t> dims(static_cast<std::size_t>(n_max) + 1, 0);

    for (int q = 0; q <= n_max; q += 2) {
        int deg = q / 2;
        // bases of the complex at each p
        struct Level {
            std::vector<std::vector<std::size_t>> tuples;      // index tuples into maximal list
            std::vector<std::size_t> cone_of_tuple;            // intersection cone id
            std::vector<std::size_t> offset;                   // column offset per tuple
            std::size_t total = 0;
        };
        std::vector<Level> levels;
        for (std::size_t p1 = 1; p1 <= nmax_cones; ++p1) {
            Level lv;
            lv.tuples = detail::subsets_of_size(nmax_cones, p1);
            for (auto& t : lv.tuples) {
                std::vector<std::size_t> ids;
                for (std::size_t i : t) ids.push_back(f.maximal_cones()[i]);
                lv.cone_of_tuple.push_back(detail::tuple_intersection_cone(f, ids));
            }
            for (std::size_t t = 0; t < lv.tuples.size(); ++t) {
                lv.offset.push_back(lv.total);
                lv.total += monomials_of_degree(span_basis[lv.cone_of_tuple[t]].size(), deg).size();
            }
            levels.push_back(std::move(lv));
        }

        // differential matrices d_p: level p -> level p+1 (0-indexed levels)
        std::vector<std::size_t> ranks(levels.size(), 0);
        for (std::size_t p = 0; p + 1 < levels.size(); ++p) {
            const Level& src = levels[p];
            const Level& dst = levels[p + 1];
            if (src.total == 0 || dst.total == 0) continue;
            QMat mat(dst.total, QVec(src.total, Rat(0)));
            for (std::size_t tt = 0; tt < dst.tuples.size(); ++tt) {
                const auto& tuple = dst.tuples[tt];
                std::size_t tgt_cone = dst.cone_of_tuple[tt];
                auto tgt_monos = monomials_of_degree(span_basis[tgt_cone].size(), deg);
                std::map<Poly::Exp, std::size_t> tgt_index;
                for (std::size_t i = 0; i < tgt_monos.size(); ++i) tgt_index[tgt_monos[i]] = i;
                for (std::size_t omit = 0; omit < tuple.size(); ++omit) {
                    std::vector<std::size_t> sub;
                    for (std::size_t i = 0; i < tuple.size(); ++i)
                        if (i != omit) sub.push_back(tuple[i]);
                    auto it = std::find(src.tuples.begin(), src.tuples.end(), sub);
                    std::size_t st = static_cast<std::size_t>(it - src.tuples.begin());
                    std::size_t src_cone = src.cone_of_tuple[st];
                    const Mat& src_basis = span_basis[src_cone];
                    const Mat& tgt_basis = span_basis[tgt_cone];
                    // coordinates of the target span basis inside the source one
                    QMat subst(src_basis.size(), QVec(tgt_basis.size(), Rat(0)));
                    for (std::size_t i = 0; i < tgt_basis.size(); ++i) {
                        auto coords = lattice_coordinates(src_basis, tgt_basis[i]);
                        if (!coords)
                            throw std::logic_error("cech: face lattice not contained in span");
                        for (std::size_t j = 0; j < src_basis.size(); ++j)
                            subst[j][i] = Rat((*coords)[j]);
                    }
                    Rat sign = (omit % 2) ? Rat(-1) : Rat(1);
                    auto src_monos = monomials_of_degree(src_basis.size(), deg);
                    for (std::size_t mi = 0; mi < src_monos.size(); ++mi) {
                        Poly mono(src_basis.size());
                        mono.add_term(src_monos[mi], Rat(1));
                        Poly res = mono.substitute_linear(subst, tgt_basis.size());
                        for (const auto& [e, c] : res.terms())
                            mat[dst.offset[tt] + tgt_index.at(e)][src.offset[st] + mi] += sign * c;
                    }
                }
            }
            ranks[p] = row_reduce(mat);
        }
        // E2 dims: kernel / image at each p, summed into total degrees
        for (std::size_t p = 0; p < levels.size(); ++p) {
            std::size_t ker = levels[p].total - (p + 1 < levels.size() ? ranks[p] : 0);
            std::size_t im = (p == 0) ? 0 : ranks[p - 1];
            std::size_t e2 = ker - im;
            int n = static_cast<int>(p) + q;
            if (n <= n_max) dims[static_cast<std::size_t>(n)] += e2;
        }
    }
    return dims;
}

}  // namespace toric
