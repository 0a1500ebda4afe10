#include <autograph/realize.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace autograph
{
    namespace
    {
        auto abs_diff(Value a, Value b) -> Value
        {
            return a > b ? a - b : b - a;
        }
    }

    auto realize(const Signature &signature) -> Realization
    {
        auto n = static_cast<int>(signature.size());
        if (n > max_graph_vertices)
            throw std::invalid_argument("signature has more than 64 values");

        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (signature.contains(abs_diff(signature[i], signature[j])))
                    g.add_edge(i, j);
        return Realization{signature, std::move(g)};
    }

    auto realization_consistent(const Realization &r) -> bool
    {
        const auto &s = r.signature;
        auto n = static_cast<int>(s.size());
        if (r.graph.size() != n)
            return false;
        for (int i = 0; i < n; ++i) {
            if (r.graph.has_edge(i, i))
                return false;
            for (int j = 0; j < n; ++j) {
                if (i == j)
                    continue;
                bool expected = std::find(s.values().begin(), s.values().end(), abs_diff(s[i], s[j])) != s.values().end();
                if (r.graph.has_edge(i, j) != expected)
                    return false;
            }
        }
        return true;
    }

    auto difference_multiset(const Signature &signature, std::size_t index) -> DifferenceMultiset
    {
        if (index >= signature.size())
            throw std::out_of_range("difference multiset index " + std::to_string(index) + " out of range");

        DifferenceMultiset d{signature[index], {}, {}, 0};
        for (std::size_t t = 0; t < signature.size(); ++t) {
            if (t == index)
                continue;
            auto diff = abs_diff(signature[index], signature[t]);
            d.diffs.push_back(diff);
            if (signature.contains(diff))
                ++d.in_signature;
        }
        d.distinct = d.diffs;
        std::sort(d.distinct.begin(), d.distinct.end());
        d.distinct.erase(std::unique(d.distinct.begin(), d.distinct.end()), d.distinct.end());
        return d;
    }
}
