#include "addenergy/int_set.hpp"

#include <algorithm>
#include <sstream>

namespace addenergy {

namespace {

void sort_unique(std::vector<BigInt>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

const BigInt kSmallLimit = BigInt(1) << 62;

} // namespace

IntSet::IntSet(std::initializer_list<long> values)
{
    elems_.reserve(values.size());
    for (long v : values) {
        elems_.emplace_back(v);
    }
    sort_unique(elems_);
}

IntSet::IntSet(std::vector<BigInt> values)
    : elems_(std::move(values))
{
    sort_unique(elems_);
}

IntSet IntSet::range(long first, long last)
{
    std::vector<BigInt> v;
    for (long x = first; x <= last; ++x) {
        v.emplace_back(x);
    }
    return IntSet(std::move(v));
}

BigInt IntSet::diameter() const
{
    if (elems_.empty()) {
        return 0;
    }
    return BigInt(elems_.back() - elems_.front());
}

bool IntSet::contains(const BigInt& x) const
{
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool fits_small(const BigInt& x)
{
    return abs(x) < kSmallLimit;
}

Rational make_ratio(const BigInt& num, const BigInt& den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::optional<std::vector<std::int64_t>> IntSet::to_small() const
{
    std::vector<std::int64_t> out;
    out.reserve(elems_.size());
    for (const auto& x : elems_) {
        if (!fits_small(x)) {
            return std::nullopt;
        }
        out.push_back(x.get_si());
    }
    return out;
}

std::string IntSet::to_string() const
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) {
            os << ", ";
        }
        os << elems_[i].get_str();
    }
    os << '}';
    return os.str();
}

bool operator<(const IntSet& a, const IntSet& b)
{
    return std::lexicographical_compare(a.elems_.begin(), a.elems_.end(), b.elems_.begin(), b.elems_.end());
}

} // namespace addenergy
