#include "satkit/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace satkit {

namespace {

std::int64_t choose2(std::int64_t m) { return m * (m - 1) / 2; }

std::int64_t ceil_div8(std::int64_t num) {
    return num >= 0 ? (num + 7) / 8 : -((-num) / 8);
}

void check_pattern(const MultipartitePattern& p) {
    if (p.r() < 1) throw std::invalid_argument("empty pattern");
}

}  // namespace

std::int64_t bfp_upper(int n, const MultipartitePattern& p) {
    check_pattern(p);
    if (p.r() < 2) throw std::invalid_argument("bfp_upper: needs at least two parts");
    std::int64_t pp = std::accumulate(p.parts.begin(), p.parts.end() - 1, std::int64_t{0}) - 1;
    if (n <= pp) throw std::invalid_argument("bfp_upper: n must exceed s_1+...+s_{r-1}-1");
    const std::int64_t sr = p.parts.back();
    const std::int64_t rest = n - pp;
    return choose2(pp) + pp * rest + ceil_div8(4 * (sr - 1) * rest - sr * sr);
}

SatFormulaAnswer bfp_leading(int n, const MultipartitePattern& p) {
    check_pattern(p);
    if (p.r() < 2) throw std::invalid_argument("bfp_leading: needs at least two parts");
    if (n < 1) throw std::invalid_argument("bfp_leading: n must be positive");
    std::int64_t pp = std::accumulate(p.parts.begin(), p.parts.end() - 1, std::int64_t{0}) - 1;
    SatFormulaAnswer a;
    a.kind = SatFormulaAnswer::Kind::AsymptoticOnly;
    a.leading = HalfInt::halves((2 * pp + p.parts.back() - 1) * n);
    a.validity = "leading term only; the sublinear slack is not computable";
    a.source = "general multipartite bound, leading coefficient p + (s_r-1)/2";
    return a;
}

SatFormulaAnswer known_sat(int n, const MultipartitePattern& p) {
    check_pattern(p);
    if (n < 1) throw std::invalid_argument("known_sat: n must be positive");

    SatFormulaAnswer a;
    auto exact = [&](std::int64_t v, std::string validity, std::string source) {
        a.kind = SatFormulaAnswer::Kind::Exact;
        a.value = v;
        a.validity = std::move(validity);
        a.source = std::move(source);
        return a;
    };

    if (p.total() > n)
        return exact(choose2(n), "n < s_1+...+s_r",
                     "pattern larger than the host graph; K_n is the unique saturated graph");
    if (p.r() == 1)
        throw std::invalid_argument(
            "known_sat: a one-part pattern is a subgraph of every graph that can hold it; "
            "saturation is undefined");

    const bool all_ones = std::all_of(p.parts.begin(), p.parts.end(), [](int s) { return s == 1; });
    if (all_ones) {
        const std::int64_t r = p.r();  // pattern is K_r, n >= r holds here
        return exact((r - 2) * n - choose2(r - 1), "n >= r", "Erdos-Hajnal-Moon");
    }
    if (p == MultipartitePattern({2, 2}) && n >= 5)
        return exact((3 * static_cast<std::int64_t>(n) - 5) / 2, "n >= 5", "Ollmann; Tuza");
    if (p == MultipartitePattern({2, 3}) && n >= 5)
        return exact(2 * static_cast<std::int64_t>(n) - 3, "n >= 5", "Chen");
    if (p == MultipartitePattern({3, 3}) && n >= 6) {
        if (n <= 8)
            return exact(2 * static_cast<std::int64_t>(n), "6 <= n <= 8", "exhaustive search");
        return exact(3 * static_cast<std::int64_t>(n) - 9, "n >= 9",
                     "the 3n-9 saturated family, matched by search from below");
    }

    a.kind = SatFormulaAnswer::Kind::Bounds;
    a.upper = bfp_upper(n, p);
    a.validity = "n >= s_1+...+s_r";
    a.source = "general multipartite upper bound; no certified lower bound";
    return a;
}

std::string sat_table(const MultipartitePattern& p, int from, int to, bool csv) {
    if (from < 1 || to < from) throw std::invalid_argument("sat_table: bad range");
    std::ostringstream out;
    if (csv) {
        out << "n,pattern,kind,value,lower,upper\n";
        for (int n = from; n <= to; ++n) {
            SatFormulaAnswer a = known_sat(n, p);
            out << n << ",\"" << p.to_string() << "\",";
            if (a.kind == SatFormulaAnswer::Kind::Exact) {
                out << "exact," << a.value << ",,";
            } else {
                out << "bounds,,";
                if (a.lower) out << *a.lower;
                out << ',';
                if (a.upper) out << *a.upper;
            }
            out << '\n';
        }
        return out.str();
    }
    out << "  n  sat(n, " << p.to_string() << ")\n";
    for (int n = from; n <= to; ++n) {
        SatFormulaAnswer a = known_sat(n, p);
        out.width(3);
        out << n << "  ";
        if (a.kind == SatFormulaAnswer::Kind::Exact) {
            out << a.value;
        } else {
            if (a.lower) out << *a.lower << " <= ";
            out << "sat <= " << (a.upper ? std::to_string(*a.upper) : std::string("?"));
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace satkit
