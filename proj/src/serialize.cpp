#include "addenergy/serialize.hpp"

#include <sstream>

#include "addenergy/errors.hpp"

namespace addenergy {

namespace {

BigInt parse_big(const std::string& s)
{
    BigInt v;
    if (s.empty() || v.set_str(s, 10) != 0) {
        throw PreconditionError("not a decimal integer: '" + s + "'");
    }
    return v;
}

} // namespace

nlohmann::json to_json(const IntSet& a)
{
    auto j = nlohmann::json::array();
    for (const auto& x : a) {
        j.push_back(x.get_str());
    }
    return j;
}

IntSet int_set_from_json(const nlohmann::json& j)
{
    require(j.is_array(), "IntSet JSON must be an array");
    std::vector<BigInt> v;
    for (const auto& item : j) {
        if (item.is_string()) {
            v.push_back(parse_big(item.get<std::string>()));
        } else if (item.is_number_integer()) {
            v.emplace_back(item.get<long>());
        } else {
            throw PreconditionError("IntSet JSON entries must be decimal strings");
        }
    }
    const std::size_t given = v.size();
    IntSet out(std::move(v));
    require(out.size() == given, "IntSet JSON contains repeated elements");
    return out;
}

nlohmann::json to_json(const DifferenceProfile& p)
{
    nlohmann::json positive = nlohmann::json::object();
    for (const auto& [x, count] : p.positive) {
        positive[x.get_str()] = count;
    }
    return {{"n", p.n}, {"positive", positive}};
}

DifferenceProfile profile_from_json(const nlohmann::json& j)
{
    DifferenceProfile p;
    p.n = j.at("n").get<std::size_t>();
    for (const auto& [key, count] : j.at("positive").items()) {
        const BigInt x = parse_big(key);
        require(x > 0, "profile keys must be positive");
        require(count.get<std::uint64_t>() > 0, "profile counts must be positive");
        p.positive[x] = count.get<std::uint64_t>();
    }
    return p;
}

nlohmann::json to_json(const Rational& q)
{
    return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

IntSet parse_int_list(const std::string& text)
{
    std::string cleaned = text;
    for (auto& c : cleaned) {
        if (c == ',') {
            c = ' ';
        }
    }
    std::istringstream is(cleaned);
    std::vector<BigInt> v;
    std::string token;
    while (is >> token) {
        v.push_back(parse_big(token));
    }
    const std::size_t given = v.size();
    IntSet out(std::move(v));
    require(out.size() == given, "integer list contains repeated elements");
    return out;
}

} // namespace addenergy
