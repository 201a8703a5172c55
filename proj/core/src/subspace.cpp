#include "pmc/subspace.hpp"

#include <algorithm>
#include <numeric>

#include "pmc/error.hpp"
#include "pmc/field.hpp"

namespace pmc {

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](std::uint32_t c) { return c == 0; });
}

Subspace::Subspace(std::size_t ambient_dim, std::uint32_t p)
    : dim_(ambient_dim), p_(p), row_of_pivot_(ambient_dim, -1) {}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != dim_) throw ParameterError("vector length does not match subspace ambient dimension");
    // Rows are fully reduced, so the multiplier of each row is read off v directly.
    std::vector<std::uint64_t> acc(v.begin(), v.end());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::uint32_t c = v[pivots_[r]];
        if (!c) continue;
        std::uint64_t f = p_ - c;
        const Vec& row = rows_[r];
        for (std::size_t k = pivots_[r]; k < dim_; ++k) acc[k] += f * row[k];
    }
    Vec out(dim_);
    for (std::size_t k = 0; k < dim_; ++k) out[k] = static_cast<std::uint32_t>(acc[k] % p_);
    return out;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    for (const auto& r : other.rows_)
        if (!contains(r)) return false;
    return true;
}

bool Subspace::add(const Vec& v) {
    Vec rem = reduce(v);
    std::size_t q = 0;
    while (q < dim_ && rem[q] == 0) ++q;
    if (q == dim_) return false;
    Fp f{p_};
    std::uint32_t s = f.inv(rem[q]);
    if (s != 1)
        for (std::size_t k = q; k < dim_; ++k) rem[k] = f.mul(rem[k], s);
    for (auto& row : rows_) {
        std::uint32_t c = row[q];
        if (!c) continue;
        std::uint64_t m = p_ - c;
        for (std::size_t k = q; k < dim_; ++k)
            if (rem[k]) row[k] = static_cast<std::uint32_t>((row[k] + m * rem[k]) % p_);
    }
    row_of_pivot_[q] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(rem));
    pivots_.push_back(q);
    return true;
}

void Subspace::add_all(const Subspace& other) {
    for (const auto& r : other.rows_) add(r);
}

std::vector<Vec> Subspace::sorted_rows() const {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<Vec> out;
    out.reserve(rows_.size());
    for (auto i : order) out.push_back(rows_[i]);
    return out;
}

std::vector<Vec> kernel_of(const std::vector<Vec>& images, std::size_t target_dim, std::uint32_t p) {
    const std::size_t m = images.size();
    Subspace aug(target_dim + m, p);
    for (std::size_t j = 0; j < m; ++j) {
        Vec row(target_dim + m, 0);
        std::copy(images[j].begin(), images[j].end(), row.begin());
        row[target_dim + j] = 1;
        aug.add(row);
    }
    std::vector<Vec> ker;
    for (std::size_t r = 0; r < aug.dim(); ++r) {
        if (aug.pivots()[r] < target_dim) continue;
        const Vec& row = aug.rows()[r];
        ker.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(target_dim), row.end());
    }
    return ker;
}

}  // namespace pmc
