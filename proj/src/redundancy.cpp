#include "injwords/redundancy.hpp"

#include <algorithm>
#include <stdexcept>

#include "injwords/certificate.hpp"

namespace injwords {

std::string to_string(OrderRelation r)
{
    switch (r) {
    case OrderRelation::less: return "less";
    case OrderRelation::greater: return "greater";
    case OrderRelation::equal: return "equal";
    case OrderRelation::incomparable: return "incomparable";
    }
    return {};
}

OrderRelation omega_compare(const GapPair& a, const GapPair& b)
{
    const auto l = a.left <=> b.left;
    const auto r = a.right <=> b.right;
    if (l == 0 && r == 0) return OrderRelation::equal;
    if (l <= 0 && r <= 0) return OrderRelation::less;
    if (l >= 0 && r >= 0) return OrderRelation::greater;
    return OrderRelation::incomparable;
}

GapWord delta_left(std::span<const int> positions)
{
    std::vector<int> j(positions.begin(), positions.end());
    if (std::any_of(j.begin(), j.end(), [](int x) { return x < 1; }))
        throw std::invalid_argument("delta_left: positions must be positive");
    std::sort(j.begin(), j.end(), std::greater<>());
    j.erase(std::unique(j.begin(), j.end()), j.end());
    j.push_back(0);
    GapWord out;
    for (std::size_t q = 0; q + 1 < j.size(); ++q) out.push_back(j[q] - j[q + 1]);
    return out;
}

GapWord delta_right(std::span<const int> positions, int n)
{
    std::vector<int> j(positions.begin(), positions.end());
    if (std::any_of(j.begin(), j.end(), [n](int x) { return x < 1 || x > n - 1; }))
        throw std::invalid_argument("delta_right: positions must lie in [1, n-1]");
    std::sort(j.begin(), j.end());
    j.erase(std::unique(j.begin(), j.end()), j.end());
    j.push_back(n);
    GapWord out;
    for (std::size_t q = 0; q + 1 < j.size(); ++q) out.push_back(j[q + 1] - j[q]);
    return out;
}

Profile profile(const InjWord& t)
{
    const int n = t.alphabet();
    Profile p;
    p.t = t;
    p.k = missing_letter(t);
    for (int j = 1; j <= n - 1; ++j) {
        if (t[j] == j) p.fixed.push_back(j);
        if (t[j] == j + 1) p.shifted.push_back(j);
    }
    p.lambda = p.shifted.empty() ? 0 : p.shifted.back();
    p.rho = p.fixed.empty() ? n : p.fixed.front();
    p.excess = p.lambda - p.rho;
    p.omega = {delta_left(p.shifted), delta_right(p.fixed, n)};
    return p;
}

std::vector<int> m_set(const InjWord& t)
{
    const auto p = profile(t);
    const int n = t.alphabet();
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
        if (i <= p.lambda || i >= p.rho + 1 || i == p.k) out.push_back(i);
    return out;
}

std::vector<int> m_set_brute_force(const InjWord& t)
{
    std::vector<int> out;
    for (int i = 1; i <= t.alphabet(); ++i)
        if (has_fixed_point(insert_missing(t, i))) out.push_back(i);
    return out;
}

namespace {

bool in_interval(int x, int lo, int hi) { return lo <= x && x <= hi; }

std::vector<int> intersect_two_intervals(const std::vector<int>& j, int a_lo, int a_hi, int b_lo,
                                         int b_hi)
{
    std::vector<int> out;
    for (int x : j)
        if (in_interval(x, a_lo, a_hi) || in_interval(x, b_lo, b_hi)) out.push_back(x);
    return out;
}

[[noreturn]] void fail(const InjWord& t, int i, const std::string& what)
{
    throw CertificateError("witness for t=" + t.str() + ", i=" + std::to_string(i) + ": " + what);
}

} // namespace

WitnessRecord witness(const InjWord& t, int i)
{
    const int n = t.alphabet();
    const auto pt = profile(t);
    if (i < 1 || i > n) throw std::invalid_argument("witness: position outside [1, n]");
    if (i == pt.k) throw std::invalid_argument("witness: i equals the missing letter");
    const bool left = i <= pt.lambda;
    if (!left && i < pt.rho + 1) throw std::invalid_argument("witness: i is not in M(t)");

    const auto s = insert_missing(t, i);
    WitnessRecord rec;
    rec.t = t;
    rec.i = i;
    rec.side = left ? WitnessSide::left : WitnessSide::right;

    if (left) {
        auto it = std::lower_bound(pt.shifted.begin(), pt.shifted.end(), i);
        if (it == pt.shifted.end()) fail(t, i, "shifted set misses [i, n-1]");
        rec.b = *it;
        rec.t_prime = delete_at(s, rec.b + 1);
    } else {
        auto it = std::lower_bound(pt.fixed.begin(), pt.fixed.end(), i);
        if (it == pt.fixed.begin()) fail(t, i, "fixed set misses [1, i-1]");
        rec.b = *std::prev(it);
        rec.t_prime = delete_at(s, rec.b);
    }

    const auto pp = profile(rec.t_prime);
    if (left) {
        if (!(i <= rec.b && rec.b <= pt.lambda)) fail(t, i, "b outside [i, lambda]");
        if (pp.k != rec.b + 1) fail(t, i, "t' does not miss b+1");
        const auto expect = intersect_two_intervals(pt.fixed, pt.rho, i - 1,
                                                    std::max(pt.rho, rec.b + 1), n - 1);
        if (pp.fixed != expect) fail(t, i, "fixed set of t' disagrees with the intersection law");
        if (rec.b == pt.lambda && !(pp.lambda < pt.lambda)) fail(t, i, "lambda did not drop");
        if (rec.b < pt.lambda && !(pp.lambda == pt.lambda && pt.omega.left < pp.omega.left))
            fail(t, i, "left gap-word did not rise");
    } else {
        if (!(pt.rho <= rec.b && rec.b <= i - 1)) fail(t, i, "b outside [rho, i-1]");
        if (pp.k != rec.b) fail(t, i, "t' does not miss b");
        const auto expect = intersect_two_intervals(pt.shifted, 1, std::min(pt.lambda, rec.b - 1), i,
                                                    pt.lambda);
        if (pp.shifted != expect) fail(t, i, "shifted set of t' disagrees with the intersection law");
        if (rec.b == pt.rho && !(pp.rho > pt.rho)) fail(t, i, "rho did not rise");
        if (rec.b > pt.rho && !(pp.rho == pt.rho && pt.omega.right < pp.omega.right))
            fail(t, i, "right gap-word did not rise");
    }

    if (pp.excess < pt.excess)
        rec.progress = Progress::excess;
    else if (pp.excess == pt.excess && omega_compare(pt.omega, pp.omega) == OrderRelation::less)
        rec.progress = Progress::omega;
    else
        fail(t, i, "no progress: excess " + std::to_string(pt.excess) + " -> " +
                       std::to_string(pp.excess));
    return rec;
}

} // namespace injwords
