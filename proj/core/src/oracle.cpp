#include "rleacs/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rleacs::oracle {

namespace {

void check_length(std::uint64_t n, const OracleBudget& budget) {
    if (n > budget.max_length) throw DataError("oracle budget exceeded: decoded length " + std::to_string(n));
}

}  // namespace

std::vector<std::uint64_t> brute_L(std::string_view x, std::string_view y, const OracleBudget& budget) {
    check_length(x.size(), budget);
    check_length(y.size(), budget);
    if (static_cast<std::uint64_t>(x.size()) * y.size() > budget.max_product)
        throw DataError("oracle budget exceeded: x*y");

    // row[j] = lcp(X[i..], Y[j..]), filled from the last i upwards.
    std::vector<std::uint64_t> row(y.size() + 1, 0);
    std::vector<std::uint64_t> next(y.size() + 1, 0);
    std::vector<std::uint64_t> out(x.size(), 0);
    for (std::size_t i = x.size(); i-- > 0;) {
        std::uint64_t best = 0;
        for (std::size_t j = 0; j < y.size(); ++j) {
            row[j] = x[i] == y[j] ? 1 + next[j + 1] : 0;
            best = std::max(best, row[j]);
        }
        out[i] = best;
        row.swap(next);
    }
    return out;
}

Rational brute_acs(std::string_view x, std::string_view y, const OracleBudget& budget) {
    if (x.empty()) throw DataError("empty sequence");
    const auto l = brute_L(x, y, budget);
    u128 sum = 0;
    for (const auto v : l) sum += v;
    return {sum, x.size()};
}

SuffixOrder brute_suffix_sort(const RleSeq& x, const RleSeq& y, const OracleBudget& budget) {
    check_length(x.decoded_length(), budget);
    check_length(y.decoded_length(), budget);
    const std::string dx = decode(x.with_sentinel(Alphabet::sentinel(0)), true);
    const std::string dy = decode(y.with_sentinel(Alphabet::sentinel(1)), true);

    struct Suffix {
        std::uint32_t pos;
        std::string_view text;
    };
    std::vector<Suffix> all;
    std::uint32_t pos = 0;
    for (const auto* s : {&dx, &dy}) {
        for (std::size_t i = 0; i < s->size(); ++i)
            if (i == 0 || (*s)[i] != (*s)[i - 1]) all.push_back({pos++, std::string_view(*s).substr(i)});
    }
    std::sort(all.begin(), all.end(), [](const Suffix& a, const Suffix& b) { return a.text < b.text; });

    SuffixOrder out;
    for (const auto& s : all) out.order.push_back(s.pos);
    for (std::size_t k = 0; k + 1 < all.size(); ++k) {
        const auto a = all[k].text;
        const auto b = all[k + 1].text;
        std::uint64_t l = 0;
        while (l < a.size() && l < b.size() && a[l] == b[l]) ++l;
        out.dlcp.push_back(l);
    }
    return out;
}

}  // namespace rleacs::oracle
