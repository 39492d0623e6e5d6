#include <algorithm>
#include <numeric>
#include <set>

#include "eat/eat_format.hpp"
#include "eat/gen.hpp"
#include "eat/lattice.hpp"

namespace eat {

namespace {

constexpr Element kUnknown = kUndefined - 1;

// Backtracking over the cells x (+) y with x, y strictly between 0 and 1.
// Cells with 0 and 1 are forced by the axioms; everything else is pruned
// only by consequences of the axioms, and every leaf is validated.
class TableSearch {
 public:
  explicit TableSearch(std::size_t n) : n_(static_cast<Element>(n)), cells_(n * n, kUnknown) {
    const Element unit = n_ - 1;
    for (Element x = 0; x < n_; ++x) {
      set(0, x, x);
      if (x != 0) set(unit, x, kUndefined);
    }
    for (Element i = 1; i < unit; ++i) {
      for (Element j = i; j < unit; ++j) pending_.emplace_back(i, j);
    }
  }

  template <typename Emit>
  void run(Emit&& emit) {
    search(0, emit);
  }

 private:
  Element& at(Element x, Element y) { return cells_[x * n_ + y]; }
  void set(Element x, Element y, Element v) {
    at(x, y) = v;
    at(y, x) = v;
  }

  // Cancellation: defined values in a row are distinct.
  bool row_injective(Element row, Element skip, Element v) {
    for (Element c = 0; c < n_; ++c) {
      if (c != skip && at(row, c) == v) return false;
    }
    return true;
  }

  bool row_has_complement(Element row) {
    bool complete = true;
    for (Element c = 0; c < n_; ++c) {
      if (at(row, c) == n_ - 1) return true;
      if (at(row, c) == kUnknown) complete = false;
    }
    return !complete;
  }

  bool associative_so_far() {
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) {
        const Element xy = at(x, y);
        if (xy == kUnknown) continue;
        for (Element z = 0; z < n_; ++z) {
          const Element yz = at(y, z);
          if (yz == kUnknown) continue;
          const Element lhs = xy == kUndefined ? kUndefined : at(xy, z);
          const Element rhs = yz == kUndefined ? kUndefined : at(x, yz);
          if (lhs == kUnknown || rhs == kUnknown) continue;
          if (lhs != rhs) return false;
        }
      }
    }
    return true;
  }

  template <typename Emit>
  void search(std::size_t k, Emit& emit) {
    if (k == pending_.size()) {
      emit(cells_);
      return;
    }
    const auto [i, j] = pending_[k];
    std::vector<Element> candidates{kUndefined};
    for (Element v = 1; v < n_; ++v) {
      if (v != i && v != j) candidates.push_back(v);
    }
    for (Element v : candidates) {
      if (v != kUndefined && (!row_injective(i, j, v) || !row_injective(j, i, v))) continue;
      set(i, j, v);
      if (row_has_complement(i) && row_has_complement(j) && associative_so_far()) search(k + 1, emit);
      set(i, j, kUnknown);
    }
  }

  Element n_;
  std::vector<Element> cells_;
  std::vector<std::pair<Element, Element>> pending_;
};

// Lexicographically least relabelling of the table over permutations of
// the elements strictly between 0 and 1.
std::vector<Element> canonical_cells(const std::vector<Element>& cells, Element n) {
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Element> best;
  std::vector<Element> relabelled(cells.size());
  do {
    // perm maps old label -> new label.
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        const Element v = cells[x * n + y];
        relabelled[perm[x] * n + perm[y]] = v == kUndefined ? kUndefined : perm[v];
      }
    }
    if (best.empty() || relabelled < best) best = relabelled;
  } while (std::next_permutation(perm.begin() + 1, perm.end() - 1));
  return best;
}

std::vector<std::string> enumeration_names(std::size_t n) {
  std::vector<std::string> names{"0"};
  for (std::size_t i = 1; i + 1 < n; ++i) names.push_back("e" + std::to_string(i));
  names.push_back("1");
  return names;
}

}  // namespace

std::vector<EnumeratedAlgebra> enumerate_small(std::size_t max_order, std::size_t cap) {
  if (max_order < 2) throw std::invalid_argument("max order must be at least 2");
  if (max_order > cap) {
    throw std::invalid_argument("max order " + std::to_string(max_order) + " exceeds the cap of " +
                                std::to_string(cap));
  }
  std::vector<EnumeratedAlgebra> out;
  for (std::size_t n = 2; n <= max_order; ++n) {
    std::set<std::vector<Element>> classes;
    TableSearch search(n);
    search.run([&](const std::vector<Element>& cells) {
      SumTable t(enumeration_names(n), 0, static_cast<Element>(n - 1));
      t.cells = cells;
      if (!validate(t).algebra) return;
      classes.insert(canonical_cells(cells, static_cast<Element>(n)));
    });
    for (const auto& cells : classes) {
      SumTable t(enumeration_names(n), 0, static_cast<Element>(n - 1));
      t.cells = cells;
      EffectAlgebra e = EffectAlgebra::from_table(std::move(t));
      const bool lattice = is_lattice(e).is_lattice;
      out.push_back({std::move(e), lattice});
    }
  }
  return out;
}

std::string canonical_stream(const std::vector<EnumeratedAlgebra>& algebras) {
  std::string out;
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    const auto& a = algebras[i];
    out += "# class " + std::to_string(i + 1) + " order " + std::to_string(a.algebra.size()) +
           (a.is_lattice ? " lattice" : " non-lattice") + "\n";
    out += serialize_eat(a.algebra);
  }
  return out;
}

}  // namespace eat
