#ifndef MINORVOL_WEIGHTS_HPP
#define MINORVOL_WEIGHTS_HPP

#include "minorvol/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace minorvol {

/**
 * Finite-support vector of non-negative rationals indexed by positive
 * integers.  Only strictly positive entries are stored.
 *
 * |w|  = sum of entries,
 * ||w|| = sum over ordered pairs i != j of w_i w_j  =  |w|^2 - sum w_i^2,
 * d(w) = ||w|| / (2 |w|),  the density of the complete weighted graph on
 * the support of w.
 */
class WeightVector {
  public:
    WeightVector() = default;
    explicit WeightVector(const std::vector<Rational>& dense_from_1);

    const Rational& get(int index) const;
    void set(int index, const Rational& value);  // value >= 0; 0 erases
    bool empty() const { return entries_.empty(); }
    int support_size() const { return static_cast<int>(entries_.size()); }
    int max_index() const { return entries_.empty() ? 0 : entries_.rbegin()->first; }
    const std::map<int, Rational>& entries() const { return entries_; }

    Rational total() const;       // |w|
    Rational norm() const;        // ||w||
    Rational density() const;     // d(w); requires |w| > 0
    bool is_matchable() const;    // every entry <= |w| / 2

    WeightVector operator+(const WeightVector& o) const;
    WeightVector scaled(const Rational& q) const;

    bool operator==(const WeightVector& o) const { return entries_ == o.entries_; }

    /// Values sorted non-increasingly, plus the original indices in that order.
    std::pair<std::vector<Rational>, std::vector<int>> canonical() const;

    /// characteristic vector of a set of indices
    static WeightVector indicator(const std::vector<int>& indices);

    /// text format: lines "i <index> <num>/<den>", any order; emitted sorted
    static WeightVector parse(const std::string& text);
    std::string to_text() const;

  private:
    std::map<int, Rational> entries_;
    static const Rational zero_;
};

}  // namespace minorvol

#endif  // MINORVOL_WEIGHTS_HPP
