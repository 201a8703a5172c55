#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pmc {

using Vec = std::vector<std::uint32_t>;

// Subspace of F_p^d kept in reduced row echelon form. The pivot of a row is
// its first nonzero coordinate and is normalized to 1.
class Subspace {
public:
    Subspace() = default;
    Subspace(std::size_t ambient_dim, std::uint32_t p);

    std::size_t ambient_dim() const { return dim_; }
    std::size_t dim() const { return rows_.size(); }
    std::uint32_t prime() const { return p_; }

    // Canonical remainder of v modulo the subspace.
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    // Returns true when v was independent of the current rows.
    bool add(const Vec& v);
    void add_all(const Subspace& other);

    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    // Rows ordered by pivot position.
    std::vector<Vec> sorted_rows() const;

    bool same_span(const Subspace& other) const { return dim() == other.dim() && contains(other); }

private:
    std::size_t dim_ = 0;
    std::uint32_t p_ = 2;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<int> row_of_pivot_;
};

// Basis of {c : sum_j c_j images[j] = 0}, as coefficient vectors of length images.size().
std::vector<Vec> kernel_of(const std::vector<Vec>& images, std::size_t target_dim, std::uint32_t p);

bool is_zero_vec(const Vec& v);

}  // namespace pmc
