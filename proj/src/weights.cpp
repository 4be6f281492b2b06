#include "minorvol/weights.hpp"

#include <algorithm>
#include <sstream>

namespace minorvol {

const Rational WeightVector::zero_ = 0;

WeightVector::WeightVector(const std::vector<Rational>& dense_from_1) {
    for (size_t i = 0; i < dense_from_1.size(); ++i)
        set(static_cast<int>(i) + 1, dense_from_1[i]);
}

const Rational& WeightVector::get(int index) const {
    auto it = entries_.find(index);
    return it == entries_.end() ? zero_ : it->second;
}

void WeightVector::set(int index, const Rational& value) {
    if (index < 1) throw PreconditionError("weight index must be >= 1");
    if (value < 0) throw PreconditionError("negative weight");
    if (value == 0)
        entries_.erase(index);
    else
        entries_[index] = value;
}

Rational WeightVector::total() const {
    Rational s = 0;
    for (const auto& [i, v] : entries_) s += v;
    return s;
}

Rational WeightVector::norm() const {
    Rational s = total(), sq = 0;
    for (const auto& [i, v] : entries_) sq += v * v;
    return s * s - sq;
}

Rational WeightVector::density() const {
    Rational s = total();
    if (s == 0) throw PreconditionError("density of zero vector");
    return norm() / (2 * s);
}

bool WeightVector::is_matchable() const {
    Rational half = total() / 2;
    for (const auto& [i, v] : entries_)
        if (v > half) return false;
    return true;
}

WeightVector WeightVector::operator+(const WeightVector& o) const {
    WeightVector r = *this;
    for (const auto& [i, v] : o.entries_) r.set(i, r.get(i) + v);
    return r;
}

WeightVector WeightVector::scaled(const Rational& q) const {
    if (q < 0) throw PreconditionError("negative scale");
    WeightVector r;
    for (const auto& [i, v] : entries_) r.set(i, v * q);
    return r;
}

std::pair<std::vector<Rational>, std::vector<int>> WeightVector::canonical() const {
    std::vector<std::pair<Rational, int>> items;
    for (const auto& [i, v] : entries_) items.emplace_back(v, i);
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    std::vector<Rational> vals;
    std::vector<int> idx;
    for (auto& [v, i] : items) {
        vals.push_back(v);
        idx.push_back(i);
    }
    return {vals, idx};
}

WeightVector WeightVector::indicator(const std::vector<int>& indices) {
    WeightVector w;
    for (int i : indices) w.set(i, 1);
    return w;
}

WeightVector WeightVector::parse(const std::string& text) {
    WeightVector w;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag != "i")
            throw ParseError("line " + std::to_string(lineno) + ": expected 'i'");
        int index;
        std::string value;
        if (!(ls >> index >> value))
            throw ParseError("line " + std::to_string(lineno) + ": malformed entry");
        if (index < 1)
            throw ParseError("line " + std::to_string(lineno) + ": index must be >= 1");
        if (w.get(index) != 0)
            throw ParseError("line " + std::to_string(lineno) + ": duplicate index");
        w.set(index, parse_rational(value));
    }
    return w;
}

std::string WeightVector::to_text() const {
    std::ostringstream out;
    for (const auto& [i, v] : entries_) out << "i " << i << " " << rational_str(v) << "\n";
    return out.str();
}

}  // namespace minorvol
