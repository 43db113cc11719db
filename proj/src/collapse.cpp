#include "injwords/collapse.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace injwords {

CollapsePolicy parse_policy(std::string_view text)
{
    if (text == "lex") return CollapsePolicy::lexicographic;
    if (text == "topdim") return CollapsePolicy::highest_dimension_first;
    throw std::invalid_argument("unknown policy '" + std::string(text) + "' (expected lex or topdim)");
}

std::string to_string(CollapsePolicy p)
{
    return p == CollapsePolicy::lexicographic ? "lex" : "topdim";
}

namespace {

/**
 * Mutable collapse state. Keeps live coface counts and the set of eligible
 * free pairs; after removing (t, s) only the faces of s and of t change
 * their counts, so only those are re-examined.
 */
class CollapseState {
public:
    using Eligible = std::function<bool(const CollapsePair&)>;

    CollapseState(const GeneratedComplex& c, CollapsePolicy policy, Eligible eligible)
        : n_(c.alphabet()), policy_(policy), eligible_(std::move(eligible))
    {
        for (int l = 1; l <= n_; ++l)
            for (const auto& w : c.level(l)) count_.emplace(w.code(), c.coface_count(w));
        for (const auto& [code, count] : count_)
            if (count == 1) refresh(InjWord::from_code(n_, code));
    }

    bool empty() const { return candidates_.empty(); }

    CollapsePair next() const
    {
        const auto& [rank, face, coface] = *candidates_.begin();
        return {face, coface};
    }

    void remove(const CollapsePair& p)
    {
        drop_candidate(p.face);
        count_.erase(p.face.code());
        count_.erase(p.coface.code());
        for (int j = 1; j <= p.coface.size() && p.coface.size() >= 2; ++j) {
            const auto f = delete_at(p.coface, j);
            if (f != p.face) decrement(f);
        }
        for (int j = 1; j <= p.face.size() && p.face.size() >= 2; ++j) decrement(delete_at(p.face, j));
    }

    std::vector<InjWord> alive() const
    {
        std::vector<InjWord> out;
        out.reserve(count_.size());
        for (const auto& [code, count] : count_) out.push_back(InjWord::from_code(n_, code));
        return out;
    }

private:
    using Key = std::tuple<int, InjWord, InjWord>;

    Key key(const CollapsePair& p) const
    {
        const int rank = policy_ == CollapsePolicy::highest_dimension_first ? -p.coface.size() : 0;
        return {rank, p.face, p.coface};
    }

    bool alive(const InjWord& w) const { return count_.contains(w.code()); }

    InjWord unique_coface(const InjWord& t) const
    {
        const auto mask = t.letter_mask();
        for (int a = 1; a <= n_; ++a) {
            if (mask & (1u << a)) continue;
            for (int pos = 1; pos <= t.size() + 1; ++pos) {
                auto s = insert_at(t, pos, a);
                if (alive(s)) return s;
            }
        }
        throw std::logic_error("coface count out of sync at " + t.str());
    }

    void refresh(const InjWord& t)
    {
        drop_candidate(t);
        if (count_.at(t.code()) != 1) return;
        CollapsePair p{t, unique_coface(t)};
        if (eligible_ && !eligible_(p)) return;
        candidates_.insert(key(p));
        coface_of_.emplace(t.code(), p.coface);
    }

    void drop_candidate(const InjWord& t)
    {
        auto it = coface_of_.find(t.code());
        if (it == coface_of_.end()) return;
        candidates_.erase(key({t, it->second}));
        coface_of_.erase(it);
    }

    void decrement(const InjWord& f)
    {
        auto it = count_.find(f.code());
        if (it == count_.end()) throw std::logic_error("collapse broke closure at " + f.str());
        --it->second;
        refresh(f);
    }

    int n_;
    CollapsePolicy policy_;
    Eligible eligible_;
    std::unordered_map<std::uint64_t, std::uint32_t> count_;
    std::unordered_map<std::uint64_t, InjWord> coface_of_;
    std::set<Key> candidates_;
};

bool is_free(const GeneratedComplex& c, const CollapsePair& p)
{
    return p.face.alphabet() == c.alphabet() && p.coface.alphabet() == c.alphabet() &&
           p.face.size() + 1 == p.coface.size() && c.contains(p.face) && c.contains(p.coface) &&
           is_subword(p.face, p.coface) && c.coface_count(p.face) == 1;
}

} // namespace

std::vector<CollapsePair> free_faces(const GeneratedComplex& c)
{
    std::vector<CollapsePair> out;
    for (int l = 1; l < c.alphabet(); ++l)
        for (const auto& t : c.level(l))
            if (c.coface_count(t) == 1) out.push_back({t, coface_list(c, t).front().word});
    std::sort(out.begin(), out.end());
    return out;
}

GeneratedComplex collapse_step(const GeneratedComplex& c, const CollapsePair& p)
{
    if (!is_free(c, p))
        throw std::invalid_argument("pair (" + p.face.str() + ", " + p.coface.str() + ") is not free");
    auto cells = c.cells();
    std::erase_if(cells, [&](const InjWord& w) { return w == p.face || w == p.coface; });
    return GeneratedComplex::from_cells(c.alphabet(), std::move(cells));
}

CollapseTrace greedy_collapse(const GeneratedComplex& c, CollapsePolicy policy)
{
    CollapseState state(c, policy, nullptr);
    CollapseTrace trace{{}, GeneratedComplex(c.alphabet()), false};
    while (!state.empty()) {
        const auto p = state.next();
        state.remove(p);
        trace.pairs.push_back(p);
    }
    trace.residual = GeneratedComplex::from_cells(c.alphabet(), state.alive());
    trace.success = trace.residual.cell_count() == 1;
    return trace;
}

TopCollapseReport top_collapse_experiment(int n, CollapsePolicy policy)
{
    if (n < 2 || n > 8) throw std::invalid_argument("top_collapse_experiment: n outside [2, 8]");
    const auto start = generate_complex(non_derangements(n), n);
    CollapseState state(start, policy,
                        [n](const CollapsePair& p) { return p.coface.size() == n; });
    TopCollapseReport report;
    report.n = n;
    report.policy = policy;
    report.initial_top_cells = start.level_size(n);
    while (!state.empty()) {
        state.remove(state.next());
        ++report.steps;
    }
    const auto residual = GeneratedComplex::from_cells(n, state.alive());
    report.residual_sizes = residual.level_sizes();
    report.success = residual.level_size(n) == 0;
    return report;
}

nlohmann::json to_json(const CollapseTrace& trace)
{
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& p : trace.pairs) pairs.push_back({{"face", p.face.str()}, {"coface", p.coface.str()}});
    return {{"trace", std::move(pairs)},
            {"success", trace.success},
            {"residual_sizes", trace.residual.level_sizes()}};
}

nlohmann::json to_json(const TopCollapseReport& r)
{
    return {{"n", r.n},
            {"policy", to_string(r.policy)},
            {"initial_top_cells", r.initial_top_cells},
            {"steps", r.steps},
            {"success", r.success},
            {"residual_sizes", r.residual_sizes}};
}

namespace {

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ", ";
        out += parts[i];
    }
    return out;
}

std::string stage_name(int stage, bool named)
{
    if (named && stage < 3) return stage == 0 ? "X(P)" : (stage == 1 ? "Y" : "Z");
    return "stage " + std::to_string(stage);
}

void print_stage(std::ostringstream& out, const GeneratedComplex& c, const std::string& name,
                 const std::unordered_map<std::uint64_t, std::string>& labels)
{
    const int n = c.alphabet();
    auto label = [&](const InjWord& w) {
        if (w.size() == n) return labels.at(w.code());
        return w.str();
    };
    // one block per level, top level first, padded into columns
    std::vector<std::vector<std::string>> columns;
    std::vector<std::string> headers;
    for (int l = n; l >= 1; --l) {
        headers.push_back(name + " level " + std::to_string(l) +
                          (l < n ? " | incident with" : ""));
        std::vector<std::string> rows;
        for (const auto& w : c.level(l)) {
            if (l == n) {
                rows.push_back(label(w) + "=" + w.str());
                continue;
            }
            std::vector<std::string> inc;
            for (const auto& cf : coface_list(c, w)) inc.push_back(label(cf.word));
            rows.push_back(w.str() + " | " + join(inc));
        }
        columns.push_back(std::move(rows));
    }
    std::vector<std::size_t> width(columns.size());
    std::size_t height = 0;
    for (std::size_t k = 0; k < columns.size(); ++k) {
        width[k] = headers[k].size();
        for (const auto& s : columns[k]) width[k] = std::max(width[k], s.size());
        height = std::max(height, columns[k].size());
    }
    auto emit_row = [&](auto cell) {
        std::string line;
        for (std::size_t k = 0; k < columns.size(); ++k) {
            std::string s = cell(k);
            if (k + 1 < columns.size()) s.resize(width[k], ' ');
            line += (k ? " || " : "") + s;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    };
    emit_row([&](std::size_t k) { return headers[k]; });
    emit_row([&](std::size_t k) { return std::string(width[k], '-'); });
    for (std::size_t r = 0; r < height; ++r)
        emit_row([&](std::size_t k) { return r < columns[k].size() ? columns[k][r] : std::string(); });
}

} // namespace

std::string incidence_tables(int n)
{
    if (n < 2 || n > 4) throw std::invalid_argument("incidence_tables: n outside [2, 4]");
    auto c = generate_complex(non_derangements(n), n);
    std::unordered_map<std::uint64_t, std::string> labels;
    {
        int j = 0;
        for (const auto& s : c.level(n)) labels.emplace(s.code(), "s" + std::to_string(++j));
    }
    std::ostringstream out;
    for (int stage = 0;; ++stage) {
        if (stage) out << '\n';
        print_stage(out, c, stage_name(stage, n == 3), labels);
        if (c.level_size(n) <= 1) break;
        // one free face per top cell, the smallest
        std::vector<CollapsePair> batch;
        for (const auto& p : free_faces(c))
            if (p.coface.size() == n &&
                std::none_of(batch.begin(), batch.end(),
                             [&](const CollapsePair& q) { return q.coface == p.coface; }))
                batch.push_back(p);
        if (batch.empty()) break;
        for (const auto& p : batch) c = collapse_step(c, p);
    }
    return out.str();
}

} // namespace injwords
