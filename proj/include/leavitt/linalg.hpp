// Exact sparse linear algebra over an ordered coordinate set.
//
// Vectors are ordered maps from coordinate keys to nonzero scalars.  The
// leading coordinate of a vector is its smallest key.  An Echelon keeps one
// row per pivot, normalised so that the pivot entry is 1 and every other
// entry of the row sits at a larger key.  Reducing a vector against it
// yields the unique representative of its coset that avoids all pivots.

#ifndef LEAVITT_LINALG_HPP_
#define LEAVITT_LINALG_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace leavitt {

  template <typename Key, typename K>
  using SparseVector = std::map<Key, K>;

  namespace detail {
    // v -= s * w
    template <typename Key, typename K>
    void axpy(SparseVector<Key, K>& v, K const& s, SparseVector<Key, K> const& w) {
      for (auto const& [k, c] : w) {
        K    delta = s * c;
        auto it    = v.find(k);
        if (it == v.end()) {
          v.emplace(k, K(-delta));
        } else {
          it->second -= delta;
          if (is_zero(it->second)) {
            v.erase(it);
          }
        }
      }
    }

    template <typename Key, typename K>
    void scale(SparseVector<Key, K>& v, K const& s) {
      for (auto& [k, c] : v) {
        c *= s;
      }
    }
  }  // namespace detail

  template <typename Key, typename K>
  class Echelon {
   public:
    using vector_type = SparseVector<Key, K>;

    std::size_t rank() const noexcept {
      return _rows.size();
    }

    std::map<Key, vector_type> const& rows() const noexcept {
      return _rows;
    }

    vector_type reduce(vector_type v) const {
      auto it = v.begin();
      while (it != v.end()) {
        auto row = _rows.find(it->first);
        if (row == _rows.end()) {
          ++it;
          continue;
        }
        Key key = it->first;
        K   s   = it->second;
        detail::axpy(v, s, row->second);
        it = v.upper_bound(key);
      }
      return v;
    }

    bool contains(vector_type const& v) const {
      return reduce(v).empty();
    }

    // Returns true when v was independent of the rows already present.
    bool insert(vector_type const& v) {
      auto r = reduce(v);
      if (r.empty()) {
        return false;
      }
      K inv = K(1) / r.begin()->second;
      detail::scale(r, inv);
      Key pivot = r.begin()->first;
      _rows.emplace(pivot, std::move(r));
      return true;
    }

    bool contains_all(Echelon const& other) const {
      for (auto const& [p, row] : other._rows) {
        if (!contains(row)) {
          return false;
        }
      }
      return true;
    }

    // Rows of other that are not in this span; empty when other is
    // contained in this span.
    std::optional<vector_type> first_missing(Echelon const& other) const {
      for (auto const& [p, row] : other._rows) {
        if (!contains(row)) {
          return row;
        }
      }
      return std::nullopt;
    }

    friend bool operator==(Echelon const& a, Echelon const& b) {
      return a.rank() == b.rank() && a.contains_all(b);
    }

   private:
    std::map<Key, vector_type> _rows;
  };

  // Kernel of a linear map given column by column.  Each source vector is
  // added with its image; whenever an image reduces to zero, the tracked
  // combination of sources is a kernel vector.
  template <typename SourceKey, typename ImageKey, typename K>
  class KernelTracker {
   public:
    using source_vector = SparseVector<SourceKey, K>;
    using image_vector  = SparseVector<ImageKey, K>;

    // Returns the new kernel vector, if any.
    std::optional<source_vector> add(source_vector src, image_vector img) {
      auto it = img.begin();
      while (it != img.end()) {
        auto row = _rows.find(it->first);
        if (row == _rows.end()) {
          ++it;
          continue;
        }
        ImageKey key = it->first;
        K        s   = it->second;
        detail::axpy(img, s, row->second.first);
        detail::axpy(src, s, row->second.second);
        it = img.upper_bound(key);
      }
      if (img.empty()) {
        if (src.empty()) {
          return std::nullopt;
        }
        _kernel.push_back(src);
        return src;
      }
      K inv = K(1) / img.begin()->second;
      detail::scale(img, inv);
      detail::scale(src, inv);
      ImageKey pivot = img.begin()->first;
      _rows.emplace(pivot, std::make_pair(std::move(img), std::move(src)));
      return std::nullopt;
    }

    std::vector<source_vector> const& kernel() const noexcept {
      return _kernel;
    }

    std::size_t image_rank() const noexcept {
      return _rows.size();
    }

   private:
    std::map<ImageKey, std::pair<image_vector, source_vector>> _rows;
    std::vector<source_vector>                                 _kernel;
  };

}  // namespace leavitt

#endif  // LEAVITT_LINALG_HPP_
