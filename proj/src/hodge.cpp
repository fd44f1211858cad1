#include "snchodge/hodge.hpp"

#include <algorithm>

namespace snchodge {

std::string Dim::str() const {
    if (sym == 0) return std::to_string(fixed);
    std::string s;
    if (fixed != 0) s = std::to_string(fixed);
    if (sym > 0 && fixed != 0) s += "+";
    if (sym == -1)
        s += "-";
    else if (sym != 1)
        s += std::to_string(sym) + "*";
    s += "g";
    return s;
}

Dim HodgeGrading::total_dim() const {
    Dim d;
    for (const auto& b : blocks) d += b.dim();
    return d;
}

long HodgeGrading::explicit_total() const {
    long d = 0;
    for (const auto& b : blocks) d += b.explicit_dim();
    return d;
}

bool HodgeGrading::all_explicit() const {
    return std::none_of(blocks.begin(), blocks.end(),
                        [](const HodgeBlock& b) { return b.has_free(); });
}

Dim HodgeGrading::block_dim(int p, int q) const {
    const HodgeBlock* b = find(p, q);
    return b ? b->dim() : Dim(0);
}

const HodgeBlock* HodgeGrading::find(int p, int q) const {
    for (const auto& b : blocks)
        if (b.p == p && b.q == q) return &b;
    return nullptr;
}

HodgeBlock& HodgeGrading::find_or_add(int p, int q) {
    for (auto& b : blocks)
        if (b.p == p && b.q == q) return b;
    blocks.push_back(HodgeBlock{p, q, std::nullopt, Dim(0), FreeSig::unknown});
    return blocks.back();
}

HodgeGrading HodgeGrading::single(int weight, int p, int q, const Subspace& s) {
    HodgeGrading g;
    g.weight = weight;
    g.ambient_dim = s.ambient_dim;
    g.blocks.push_back(HodgeBlock{p, q, s, Dim(0), FreeSig::unknown});
    return g;
}

std::vector<std::string> HodgeGrading::consistency_findings() const {
    std::vector<std::string> out;
    long explicit_sum = 0;
    for (const auto& b : blocks) {
        if (b.p + b.q != weight)
            out.push_back("block (" + std::to_string(b.p) + "," + std::to_string(b.q) +
                          ") does not match weight " + std::to_string(weight));
        if (b.space && b.space->ambient_dim != ambient_dim)
            out.push_back("block ambient mismatch");
        explicit_sum += b.explicit_dim();
    }
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            if (blocks[i].p == blocks[j].p && blocks[i].q == blocks[j].q)
                out.push_back("duplicate block label");
            if (!blocks[i].space || !blocks[j].space) continue;
            if (blocks[i].space->dim() == 0 || blocks[j].space->dim() == 0) continue;
            if (intersect(*blocks[i].space, *blocks[j].space).dim() != 0)
                out.push_back("distinct blocks intersect nontrivially");
        }
    if (explicit_sum != ambient_dim)
        out.push_back("explicit block dimensions do not fill the coordinate space");
    return out;
}

HodgeGrading twist(const HodgeGrading& h, int m) {
    HodgeGrading out = h;
    out.weight += 2 * m;
    for (auto& b : out.blocks) {
        b.p += m;
        b.q += m;
    }
    return out;
}

HodgeGrading direct_sum(const std::vector<const HodgeGrading*>& parts) {
    HodgeGrading out;
    int total = 0;
    for (const auto* g : parts) total += g->ambient_dim;
    out.ambient_dim = total;
    out.weight = parts.empty() ? 0 : parts.front()->weight;

    int offset = 0;
    for (const auto* g : parts) {
        for (const auto& b : g->blocks) {
            HodgeBlock& dst = out.find_or_add(b.p, b.q);
            if (b.space) {
                Mat embedded(total, b.space->dim());
                embedded.put(offset, 0, b.space->basis);
                Subspace emb(total, std::move(embedded));
                if (dst.space)
                    dst.space = Subspace(total, dst.space->basis.hstack(emb.basis));
                else
                    dst.space = emb;
            }
            if (b.has_free()) {
                FreeSig merged = b.free_sig;
                if (dst.has_free() && dst.free_sig != b.free_sig) merged = FreeSig::unknown;
                dst.free_sig = merged;
                dst.free_dim += b.free_dim;
            }
        }
        offset += g->ambient_dim;
    }
    return out;
}

namespace {

const BlockMap* find_block_map(const std::vector<BlockMap>& maps, int p, int q) {
    for (const auto& bm : maps)
        if (bm.p == p && bm.q == q) return &bm;
    return nullptr;
}

}  // namespace

HodgeGrading induced_hodge(const Mat& map, const HodgeGrading& source,
                           const HodgeGrading& target, Part part,
                           const std::vector<BlockMap>& block_maps) {
    HodgeGrading out;
    out.weight = (part == Part::cokernel) ? target.weight : source.weight;
    out.ambient_dim = (part == Part::cokernel) ? target.ambient_dim : source.ambient_dim;

    if (part != Part::cokernel) {
        for (const auto& sb : source.blocks) {
            if (sb.dim().is_zero()) continue;
            const HodgeBlock* tb = target.find(sb.p, sb.q);
            HodgeBlock res{sb.p, sb.q, std::nullopt, Dim(0), FreeSig::unknown};

            if (sb.space && sb.space->dim() > 0) {
                Mat image_vectors = map * sb.space->basis;
                if (tb && tb->space) {
                    auto x = solve(tb->space->basis, image_vectors);
                    if (!x)
                        throw TypeViolation("map does not preserve block (" +
                                            std::to_string(sb.p) + "," +
                                            std::to_string(sb.q) + ")");
                    RankKernelImage rki = rank_kernel_image(*x);
                    if (part == Part::kernel)
                        res.space = Subspace(source.ambient_dim,
                                             sb.space->basis * rki.kernel.basis);
                    else
                        res.space = Subspace(target.ambient_dim,
                                             tb->space->basis * rki.image.basis);
                } else if (image_vectors.is_zero()) {
                    res.space = (part == Part::kernel) ? *sb.space
                                                       : Subspace::zero(target.ambient_dim);
                } else {
                    throw TypeViolation("map sends block (" + std::to_string(sb.p) + "," +
                                        std::to_string(sb.q) +
                                        ") outside the matching target block");
                }
            } else if (part == Part::kernel) {
                res.space = Subspace::zero(source.ambient_dim);
            }

            if (sb.has_free()) {
                const BlockMap* bm = find_block_map(block_maps, sb.p, sb.q);
                if (bm) {
                    RankKernelImage rki = rank_kernel_image(bm->m);
                    res.free_dim = (part == Part::kernel) ? Dim(rki.kernel.dim()) : Dim(rki.rank);
                    res.free_sig = (part == Part::kernel) ? sb.free_sig : FreeSig::unknown;
                } else if (!tb || tb->dim().is_zero()) {
                    // no matching target block: the map vanishes here
                    res.free_dim = (part == Part::kernel) ? sb.free_dim : Dim(0);
                    res.free_sig = sb.free_sig;
                } else {
                    // basis-free parts are unreachable through explicit
                    // coordinates; they sit inside every kernel
                    if (part == Part::kernel) {
                        res.free_dim = sb.free_dim;
                        res.free_sig = sb.free_sig;
                    }
                }
            }
            if (!res.dim().is_zero() || res.space) out.blocks.push_back(std::move(res));
        }
        return out;
    }

    for (const auto& tb : target.blocks) {
        if (tb.dim().is_zero()) continue;
        const HodgeBlock* sb = source.find(tb.p, tb.q);
        HodgeBlock res{tb.p, tb.q, std::nullopt, tb.free_dim, tb.free_sig};

        Dim free_image(0);
        if (sb && sb->has_free()) {
            const BlockMap* bm = find_block_map(block_maps, tb.p, tb.q);
            if (bm) free_image = Dim(rank(bm->m));
        }
        res.free_dim = tb.free_dim - free_image;

        if (tb.space) {
            if (sb && sb->space && sb->space->dim() > 0) {
                Mat image_vectors = map * sb->space->basis;
                auto x = solve(tb.space->basis, image_vectors);
                if (!x)
                    throw TypeViolation("map does not preserve block (" +
                                        std::to_string(tb.p) + "," + std::to_string(tb.q) +
                                        ")");
                RankKernelImage rki = rank_kernel_image(*x);
                Subspace img_in_block(tb.space->dim(), rki.image.basis);
                Subspace reps = quotient_basis(Subspace::full(tb.space->dim()), img_in_block);
                res.space = Subspace(target.ambient_dim, tb.space->basis * reps.basis);
            } else {
                res.space = *tb.space;
            }
        }
        out.blocks.push_back(std::move(res));
    }
    return out;
}

bool check_conjugation_symmetry(const HodgeGrading& h) {
    for (const auto& b : h.blocks) {
        const HodgeBlock* partner = h.find(b.q, b.p);
        Dim partner_free = partner ? partner->free_dim : Dim(0);
        if (!(b.free_dim == partner_free)) return false;
        if (!b.space) {
            if (partner && partner->space && partner->space->dim() > 0) return false;
            continue;
        }
        std::vector<std::vector<Scalar>> conj_cols;
        Mat c = b.space->basis.conj();
        for (int j = 0; j < c.cols(); ++j) conj_cols.push_back(c.col(j));
        Subspace conj_span = conj_cols.empty()
                                 ? Subspace::zero(b.space->ambient_dim)
                                 : Subspace::span_of(b.space->ambient_dim, conj_cols);
        Subspace partner_space = (partner && partner->space)
                                     ? *partner->space
                                     : Subspace::zero(b.space->ambient_dim);
        if (!same_span(conj_span, partner_space)) return false;
    }
    return true;
}

bool k_opposed(const HodgeGrading& h) {
    if (!h.all_explicit()) throw MissingBasis("k-opposedness needs explicit bases");
    const int k = h.weight;
    auto filtration = [&](int p) {
        Subspace f = Subspace::zero(h.ambient_dim);
        for (const auto& b : h.blocks)
            if (b.p >= p && b.space) f = span_sum(f, *b.space);
        return f;
    };
    if (h.explicit_total() != h.ambient_dim) return false;
    for (int p = 0; p <= k + 1; ++p) {
        Subspace fp = filtration(p);
        Subspace fc = filtration(k - p + 1);
        Subspace conj_fc = fc.dim() ? Subspace(h.ambient_dim, fc.basis.conj())
                                    : Subspace::zero(h.ambient_dim);
        if (intersect(fp, conj_fc).dim() != 0) return false;
        if (span_sum(fp, conj_fc).dim() != h.ambient_dim) return false;
    }
    return true;
}

}  // namespace snchodge
