#pragma once

#include "qcartan/qrat.hpp"

#include <map>
#include <optional>
#include <vector>

namespace qc {

// Sparse vector over Q(v), sorted by index, no zero entries.
using SparseVec = std::vector<std::pair<int, QRat>>;

SparseVec sv_axpy(const SparseVec& y, const QRat& a, const SparseVec& x);  // y + a x
SparseVec sv_scale(const SparseVec& x, const QRat& a);

// Incremental row echelon form. Rows are kept with pivot entry 1 and
// every row reduced against earlier pivots, so membership is a single sweep.
class Echelon {
public:
    explicit Echelon(bool track = false) : track_(track) {}

    // Reduce v against the stored rows; returns the residue and, when tracking,
    // the combination of inserted vectors that was subtracted.
    SparseVec reduce(SparseVec v, SparseVec* combo = nullptr) const;

    // Insert v; returns true if it was independent. `tag` is the label of v in
    // the tracked combination space.
    bool insert(const SparseVec& v, int tag = -1);

    std::size_t rank() const { return rows_.size(); }

private:
    struct Row {
        int pivot;
        SparseVec v;
        SparseVec combo;  // row = sum combo[k] * inserted_k
    };
    bool track_;
    std::vector<Row> rows_;
    std::map<int, std::size_t> by_pivot_;
};

// Null space of the linear map whose columns are given (column j = image of basis vector j).
// Returned vectors are in reduced form: each has a distinct free column with coefficient 1.
std::vector<SparseVec> null_space(const std::vector<SparseVec>& columns, int ncols);

// Express target as a combination of the columns; nullopt if not in the span.
std::optional<SparseVec> solve_in_span(const std::vector<SparseVec>& columns, const SparseVec& target);

std::size_t rank_of(const std::vector<SparseVec>& vecs);

}  // namespace qc
