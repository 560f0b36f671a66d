#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coxbruhat/errors.hpp"

namespace coxbruhat {

/// Index of a simple generator, 0-based. Printed with the system's names.
using Gen = int;

/// A finite sequence of generator indices, not necessarily reduced.
using Word = std::vector<Gen>;

enum class Side { Left, Right };

/// Coxeter matrix entry meaning m(s,t) = infinity.
inline constexpr int kInfinity = 0;

inline constexpr int kDefaultLengthCap = 64;

/// Subset of the simple generators, stored as a bitmask (rank <= 64).
class GenSet {
public:
    GenSet() = default;
    GenSet(std::initializer_list<Gen> gens) {
        for (Gen g : gens) insert(g);
    }
    static GenSet from_mask(std::uint64_t mask) {
        GenSet s;
        s.mask_ = mask;
        return s;
    }
    /// {0, ..., rank-1}
    static GenSet all(int rank) {
        return from_mask(rank >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank) - 1);
    }

    bool contains(Gen g) const { return (mask_ >> g) & 1U; }
    void insert(Gen g) { mask_ |= std::uint64_t{1} << g; }
    void erase(Gen g) { mask_ &= ~(std::uint64_t{1} << g); }
    bool empty() const { return mask_ == 0; }
    int size() const { return std::popcount(mask_); }
    std::uint64_t mask() const { return mask_; }

    bool is_subset_of(GenSet other) const { return (mask_ & ~other.mask_) == 0; }
    GenSet operator|(GenSet o) const { return from_mask(mask_ | o.mask_); }
    GenSet operator&(GenSet o) const { return from_mask(mask_ & o.mask_); }
    /// Set difference.
    GenSet operator-(GenSet o) const { return from_mask(mask_ & ~o.mask_); }

    /// Members in increasing index order.
    std::vector<Gen> members() const;
    /// Smallest member; the set must be nonempty.
    Gen front() const { return std::countr_zero(mask_); }

    friend bool operator==(GenSet, GenSet) = default;

private:
    std::uint64_t mask_ = 0;
};

/// A group element, held as its ShortLex-least reduced word. Only a
/// CoxeterSystem produces Elements, so two Elements of the same system are
/// equal exactly when their canonical words agree.
class Element {
public:
    Element() = default;

    const Word& word() const { return word_; }
    int length() const { return static_cast<int>(word_.size()); }
    bool is_identity() const { return word_.empty(); }

    friend bool operator==(const Element&, const Element&) = default;
    /// ShortLex: by length, then lexicographically by generator index.
    friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
        if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
        return a.word_ <=> b.word_;
    }

private:
    friend class CoxeterSystem;
    explicit Element(Word w) : word_(std::move(w)) {}
    Word word_;
};

struct ElementHash {
    std::size_t operator()(const Element& e) const noexcept;
};

/// A Coxeter system (W, S) given by its Coxeter matrix. Element arithmetic
/// goes through the geometric representation: a generator s is a right
/// descent of w exactly when w sends the simple root of s to a negative root.
/// Immutable after construction.
class CoxeterSystem {
public:
    /// `matrix` is row-major rank x rank, kInfinity (0) for infinite order.
    CoxeterSystem(std::vector<std::string> names, std::vector<std::vector<int>> matrix,
                  int length_cap = kDefaultLengthCap);

    int rank() const { return rank_; }
    int m(Gen s, Gen t) const { return matrix_[s][t]; }
    const std::vector<std::vector<int>>& matrix() const { return matrix_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(Gen s) const { return names_.at(s); }
    int length_cap() const { return length_cap_; }
    GenSet all_generators() const { return GenSet::all(rank_); }

    /// Index of a generator name; -1 when unknown.
    Gen index_of(std::string_view name) const;

    Element identity() const { return Element{}; }
    Element generator(Gen s) const;

    /// Element represented by an arbitrary word.
    /// Throws LengthCapExceeded if the result is longer than length_cap().
    Element normalize(std::span<const Gen> word) const;

    Element multiply(const Element& a, const Element& b) const;
    Element inverse(const Element& w) const;
    /// s * w
    Element left_multiply(Gen s, const Element& w) const;
    /// w * s
    Element right_multiply(const Element& w, Gen s) const;

    bool is_left_descent(Gen s, const Element& w) const;
    bool is_right_descent(const Element& w, Gen s) const;
    GenSet descents(const Element& w, Side side) const;
    GenSet left_descents(const Element& w) const { return descents(w, Side::Left); }
    GenSet right_descents(const Element& w) const { return descents(w, Side::Right); }

    /// Generators occurring in a (any) reduced word of w.
    GenSet support(const Element& w) const;

    /// Coxeter-monoid (0-Hecke) product: fold b's letters into a, absorbing a
    /// letter that is already a right descent.
    Element demazure_star(const Element& a, const Element& b) const;
    /// s_1 * s_2 * ... * s_k in the Coxeter monoid.
    Element demazure_fold(std::span<const Gen> word) const;

    /// Whitespace- or comma-separated generator names; "e" and "∅" stand for
    /// the identity. A token that is not a name is split greedily into names
    /// ("s1s2s1"). Throws InvalidWord.
    Word parse_word(std::string_view text) const;
    Element parse_element(std::string_view text) const { return normalize(parse_word(text)); }
    /// Comma-separated generator names; empty, "{}" or "∅" for the empty set.
    GenSet parse_genset(std::string_view text) const;

    /// Canonical word with names concatenated, "e" for the identity.
    std::string format(const Element& w) const;
    std::string format_word(std::span<const Gen> word) const;
    /// "{s1,s2}"
    std::string format(GenSet set) const;

private:
    // Applies the reflection of s to a vector in root coordinates.
    void reflect(Gen s, std::span<double> v) const;
    // Columns are w^{-1}(alpha_t) for the element w spelled by `word`.
    std::vector<double> inverse_action(std::span<const Gen> word) const;
    // Columns are w(alpha_t).
    std::vector<double> action(std::span<const Gen> word) const;
    bool column_negative(const std::vector<double>& mat, Gen col) const;

    int rank_;
    std::vector<std::string> names_;
    std::vector<std::vector<int>> matrix_;
    int length_cap_;
    // form_[s * rank + t] = 2 B(alpha_s, alpha_t) = -2 cos(pi / m(s,t)).
    std::vector<double> form_;
};

/// All elements of length <= max_length, ShortLex sorted. For finite groups
/// with max_length >= the longest element this is the whole group.
std::vector<Element> enumerate_elements(const CoxeterSystem& sys, int max_length);

} // namespace coxbruhat
