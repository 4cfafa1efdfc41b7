#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "soergel/coxeter_matrix.hpp"
#include "soergel/laurent.hpp"

namespace soergel {

/// Index of an element in an enumerated group. Indices are dense and ordered
/// by (length, lexicographic normal word); 0 is the identity.
struct ElementRef {
  std::uint32_t id = 0;

  constexpr ElementRef() = default;
  constexpr explicit ElementRef(std::uint32_t i) : id(i) {}
  constexpr std::size_t index() const { return id; }

  friend constexpr auto operator<=>(ElementRef, ElementRef) = default;
};

inline constexpr ElementRef kIdentity{0};

constexpr std::size_t kDefaultMaxElements = 20000;

/// A finite Coxeter group, fully enumerated. Normal words are the ShortLex
/// minimal reduced expressions. Immutable once built.
class CoxeterSystem {
 public:
  /// Enumerates W by breadth-first search over ShortLex words, deciding
  /// element equality by the exact action on the geometric representation.
  /// Throws GroupTooLarge once more than max_elements elements appear.
  static CoxeterSystem build(const CoxeterMatrix& matrix,
                             std::size_t max_elements = kDefaultMaxElements);

  const CoxeterMatrix& matrix() const { return matrix_; }
  int rank() const { return matrix_.rank(); }
  std::size_t size() const { return words_.size(); }

  const Word& normal_word(ElementRef w) const { return words_[w.index()]; }
  int length(ElementRef w) const { return lengths_[w.index()]; }

  ElementRef right_mult(ElementRef w, Generator s) const {
    return ElementRef(right_[w.index() * static_cast<std::size_t>(rank()) + static_cast<std::size_t>(s)]);
  }
  ElementRef left_mult(Generator s, ElementRef w) const {
    return ElementRef(left_[w.index() * static_cast<std::size_t>(rank()) + static_cast<std::size_t>(s)]);
  }
  bool is_right_descent(ElementRef w, Generator s) const { return (right_descents_[w.index()] >> s) & 1U; }
  bool is_left_descent(ElementRef w, Generator s) const { return (left_descents_[w.index()] >> s) & 1U; }
  std::uint64_t right_descent_set(ElementRef w) const { return right_descents_[w.index()]; }
  std::uint64_t left_descent_set(ElementRef w) const { return left_descents_[w.index()]; }

  /// The last letter of the normal word; a right descent of w != e.
  Generator last_letter(ElementRef w) const { return words_[w.index()].back(); }

  ElementRef generator(Generator s) const { return right_mult(kIdentity, s); }
  /// Product a*b by walking b's normal word through the transition table.
  ElementRef mult(ElementRef a, ElementRef b) const;
  ElementRef inverse(ElementRef w) const;
  /// The element represented by any word (not necessarily reduced).
  ElementRef element_of(const Word& word) const;

  /// Bruhat order via the descent recursion.
  bool bruhat_leq(ElementRef y, ElementRef x) const;
  /// All y <= x, in index order.
  std::vector<ElementRef> lower_interval(ElementRef x) const;

  ElementRef longest_element() const { return longest_; }
  int max_length() const { return length(longest_); }

  /// Indices of the elements of each length, in index order.
  const std::vector<std::size_t>& stratum_starts() const { return stratum_starts_; }

  std::string word_string(ElementRef w) const { return format_word(normal_word(w)); }

 private:
  CoxeterMatrix matrix_;
  std::vector<Word> words_;
  std::vector<int> lengths_;
  std::vector<std::uint32_t> right_;
  std::vector<std::uint32_t> left_;
  std::vector<std::uint64_t> right_descents_;
  std::vector<std::uint64_t> left_descents_;
  std::vector<std::size_t> stratum_starts_;  // size max_length + 2
  ElementRef longest_;
};

/// sum over w of q^l(w), returned as a Laurent polynomial whose variable is
/// read as q.
LaurentPoly length_gen_poly(const CoxeterSystem& sys);

}  // namespace soergel

template <>
struct std::hash<soergel::ElementRef> {
  std::size_t operator()(soergel::ElementRef w) const noexcept { return std::hash<std::uint32_t>{}(w.id); }
};
