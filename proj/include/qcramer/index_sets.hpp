#pragma once

#include "qcramer/matrix.hpp"

#include <cstddef>
#include <iterator>
#include <optional>
#include <span>
#include <vector>

namespace qcramer {

/// Strictly increasing k-subset of {1..n}. Indices are 1-based.
class IndexSubset {
public:
    IndexSubset(std::vector<std::size_t> elements, std::size_t universe);

    static IndexSubset full(std::size_t n);

    std::span<const std::size_t> elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    std::size_t universe() const noexcept { return universe_; }
    std::size_t operator[](std::size_t pos) const { return elements_[pos]; }

    bool contains(std::size_t index) const;
    /// 1-based rank of `index` among the elements, or nullopt if absent.
    std::optional<std::size_t> position_of(std::size_t index) const;

    friend bool operator==(const IndexSubset&, const IndexSubset&) = default;

private:
    std::vector<std::size_t> elements_;
    std::size_t universe_ = 0;
};

/// The k-subsets of {1..n} in lexicographic order, optionally restricted to
/// those containing `anchor`. Enumeration is lazy.
class SubsetFamily {
public:
    SubsetFamily(std::size_t k, std::size_t n, std::optional<std::size_t> anchor = std::nullopt);

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = IndexSubset;
        using difference_type = std::ptrdiff_t;
        using pointer = const IndexSubset*;
        using reference = IndexSubset;

        iterator() = default;
        IndexSubset operator*() const { return IndexSubset(current_, family_->n_); }
        iterator& operator++();
        iterator operator++(int) {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_); }

    private:
        friend class SubsetFamily;
        explicit iterator(const SubsetFamily* family);
        bool advance();

        const SubsetFamily* family_ = nullptr;
        std::vector<std::size_t> current_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(this); }
    iterator end() const { return iterator(); }

    std::size_t k() const noexcept { return k_; }
    std::size_t n() const noexcept { return n_; }
    std::optional<std::size_t> anchor() const noexcept { return anchor_; }
    /// C(n,k), or C(n-1,k-1) when anchored.
    std::size_t size() const;

    std::vector<IndexSubset> to_vector() const;

private:
    std::size_t k_;
    std::size_t n_;
    std::optional<std::size_t> anchor_;
};

std::size_t binomial(std::size_t n, std::size_t k);

inline SubsetFamily enumerate(std::size_t k, std::size_t n, std::optional<std::size_t> anchor = std::nullopt) {
    return SubsetFamily(k, n, anchor);
}

/// H restricted to the rows and columns in `beta`.
template <Coefficient T>
QMatrix<T> principal_submatrix(const QMatrix<T>& h, const IndexSubset& beta);

/// Replace column i of H by v, then restrict to beta. The replaced column ends
/// up at i's position within beta. Requires i in beta.
template <Coefficient T>
QMatrix<T> replace_col_then_restrict(const QMatrix<T>& h, std::size_t i, std::span<const Quaternion<T>> v,
                                     const IndexSubset& beta);

/// Row counterpart of replace_col_then_restrict.
template <Coefficient T>
QMatrix<T> replace_row_then_restrict(const QMatrix<T>& h, std::size_t i, std::span<const Quaternion<T>> v,
                                     const IndexSubset& alpha);

#define QCRAMER_EXTERN_SUBSETS(T)                                                                       \
    extern template QMatrix<T> principal_submatrix(const QMatrix<T>&, const IndexSubset&);              \
    extern template QMatrix<T> replace_col_then_restrict(const QMatrix<T>&, std::size_t,                \
                                                         std::span<const Quaternion<T>>, const IndexSubset&); \
    extern template QMatrix<T> replace_row_then_restrict(const QMatrix<T>&, std::size_t,                \
                                                         std::span<const Quaternion<T>>, const IndexSubset&);

QCRAMER_EXTERN_SUBSETS(Rational)
QCRAMER_EXTERN_SUBSETS(double)
#undef QCRAMER_EXTERN_SUBSETS

}  // namespace qcramer
