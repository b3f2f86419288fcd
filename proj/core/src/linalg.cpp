#include "qcartan/linalg.hpp"

namespace qc {

SparseVec sv_axpy(const SparseVec& y, const QRat& a, const SparseVec& x) {
    if (a.is_zero()) return y;
    SparseVec r;
    r.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            r.push_back(y[i++]);
        } else if (i == y.size() || x[j].first < y[i].first) {
            r.emplace_back(x[j].first, a * x[j].second);
            ++j;
        } else {
            QRat s = y[i].second + a * x[j].second;
            if (!s.is_zero()) r.emplace_back(y[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return r;
}

SparseVec sv_scale(const SparseVec& x, const QRat& a) {
    SparseVec r;
    if (a.is_zero()) return r;
    r.reserve(x.size());
    for (const auto& [k, c] : x) r.emplace_back(k, c * a);
    return r;
}

SparseVec Echelon::reduce(SparseVec v, SparseVec* combo) const {
    if (combo) combo->clear();
    std::size_t pos = 0;
    while (pos < v.size()) {
        auto it = by_pivot_.find(v[pos].first);
        if (it == by_pivot_.end()) {
            ++pos;
            continue;
        }
        const Row& row = rows_[it->second];
        QRat c = v[pos].second;
        int idx = v[pos].first;
        v = sv_axpy(v, -c, row.v);
        if (combo && track_) *combo = sv_axpy(*combo, c, row.combo);
        // entries before idx are untouched; resume at the first index > idx
        pos = 0;
        while (pos < v.size() && v[pos].first <= idx) ++pos;
    }
    return v;
}

bool Echelon::insert(const SparseVec& v, int tag) {
    SparseVec combo;
    SparseVec r = reduce(v, track_ ? &combo : nullptr);
    if (r.empty()) return false;
    QRat inv = r.front().second.inverse();
    Row row;
    row.pivot = r.front().first;
    row.v = sv_scale(r, inv);
    if (track_) {
        // row = (v - combo) * inv, expressed in inserted vectors
        SparseVec c = sv_scale(combo, QRat(-1));
        c = sv_axpy(c, QRat(1), SparseVec{{tag, QRat(1)}});
        row.combo = sv_scale(c, inv);
    }
    by_pivot_[row.pivot] = rows_.size();
    rows_.push_back(std::move(row));
    return true;
}

std::vector<SparseVec> null_space(const std::vector<SparseVec>& columns, int ncols) {
    Echelon ech(true);
    std::vector<SparseVec> out;
    for (int j = 0; j < ncols; ++j) {
        const SparseVec& col = columns[static_cast<std::size_t>(j)];
        SparseVec combo;
        SparseVec r = ech.reduce(col, &combo);
        if (r.empty()) {
            SparseVec nv = sv_scale(combo, QRat(-1));
            nv = sv_axpy(nv, QRat(1), SparseVec{{j, QRat(1)}});
            out.push_back(std::move(nv));
        } else {
            ech.insert(col, j);
        }
    }
    return out;
}

std::optional<SparseVec> solve_in_span(const std::vector<SparseVec>& columns, const SparseVec& target) {
    Echelon ech(true);
    for (std::size_t j = 0; j < columns.size(); ++j) ech.insert(columns[j], static_cast<int>(j));
    SparseVec combo;
    SparseVec r = ech.reduce(target, &combo);
    if (!r.empty()) return std::nullopt;
    return combo;
}

std::size_t rank_of(const std::vector<SparseVec>& vecs) {
    Echelon ech(false);
    for (const auto& v : vecs) ech.insert(v);
    return ech.rank();
}

}  // namespace qc
