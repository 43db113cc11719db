#include "injwords/certificate.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <string>
#include <tuple>
#include <unordered_map>

#include "injwords/parallel.hpp"

namespace injwords {

namespace {

void check_range(int n, const char* what)
{
    if (n < 3 || n > 8) throw std::invalid_argument(std::string(what) + ": n outside [3, 8]");
}

// excess ascending, then omega descending (left gap-word first), then t
std::vector<InjWord> induction_order(std::vector<InjWord> faces)
{
    std::vector<std::tuple<int, GapWord, GapWord, InjWord>> keyed;
    keyed.reserve(faces.size());
    for (const auto& t : faces) {
        auto p = profile(t);
        keyed.emplace_back(p.excess, std::move(p.omega.left), std::move(p.omega.right), t);
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) > std::get<1>(b);
        if (std::get<2>(a) != std::get<2>(b)) return std::get<2>(a) > std::get<2>(b);
        return std::get<3>(a) < std::get<3>(b);
    });
    faces.clear();
    for (auto& k : keyed) faces.push_back(std::get<3>(k));
    return faces;
}

const char* side_name(WitnessSide s) { return s == WitnessSide::left ? "L" : "R"; }
const char* progress_name(Progress p) { return p == Progress::excess ? "excess" : "omega"; }

// Plain scans for the checker; deliberately not routed through profile().
struct Scan {
    int k = 0;
    std::vector<int> fixed, shifted;
    int lambda = 0, rho = 0;
};

Scan scan(const InjWord& t)
{
    const int n = t.alphabet();
    Scan s;
    std::uint32_t seen = 0;
    for (int j = 1; j <= t.size(); ++j) {
        seen |= 1u << t[j];
        if (t[j] == j) s.fixed.push_back(j);
        if (t[j] == j + 1) s.shifted.push_back(j);
    }
    for (int a = 1; a <= n; ++a)
        if (!(seen & (1u << a))) s.k = a;
    s.lambda = s.shifted.empty() ? 0 : s.shifted.back();
    s.rho = s.fixed.empty() ? n : s.fixed.front();
    return s;
}

} // namespace

Certificate build_certificate(int n)
{
    check_range(n, "build_certificate");
    const auto faces = injective_words(n, n - 1);
    std::vector<std::vector<WitnessRecord>> per_face(faces.size());
    parallel_for(faces.size(), [&](std::size_t f) {
        const auto& t = faces[f];
        const int k = missing_letter(t);
        for (int i : m_set(t))
            if (i != k) per_face[f].push_back(witness(t, i));
    });
    Certificate cert;
    cert.n = n;
    for (auto& recs : per_face)
        for (auto& r : recs) cert.records.push_back(std::move(r));
    cert.order = induction_order(faces);
    verify_certificate(cert);
    return cert;
}

void verify_certificate(const Certificate& cert)
{
    const int n = cert.n;
    check_range(n, "verify_certificate");
    auto fail = [](const std::string& what) { throw CertificateError("certificate rejected: " + what); };

    const auto faces = injective_words(n, n - 1);
    if (cert.order.size() != faces.size())
        fail("order lists " + std::to_string(cert.order.size()) + " faces, expected " +
             std::to_string(faces.size()));
    std::unordered_map<std::uint64_t, std::size_t> position;
    for (std::size_t p = 0; p < cert.order.size(); ++p) {
        const auto& t = cert.order[p];
        if (t.alphabet() != n || t.size() != n - 1) fail("order holds a non-face " + t.str());
        if (!position.emplace(t.code(), p).second) fail("order repeats " + t.str());
    }

    // every (t, i) with sigma_i(t) fixing a point and i != k must be discharged once
    std::unordered_map<std::uint64_t, std::uint32_t> pending;
    std::size_t required = 0;
    for (const auto& t : faces) {
        const int k = scan(t).k;
        std::uint32_t mask = 0;
        for (int i = 1; i <= n; ++i)
            if (i != k && has_fixed_point(insert_at(t, i, k))) mask |= 1u << i;
        pending.emplace(t.code(), mask);
        required += static_cast<std::size_t>(std::popcount(mask));
    }

    for (const auto& r : cert.records) {
        const std::string where = "record (t=" + r.t.str() + ", i=" + std::to_string(r.i) + ")";
        if (r.t.alphabet() != n || r.t.size() != n - 1) fail(where + " has a bad face");
        auto it = pending.find(r.t.code());
        if (r.i < 1 || r.i > n || !(it->second & (1u << r.i)))
            fail(where + " is not required or already discharged");
        it->second &= ~(1u << r.i);

        const Scan st = scan(r.t);
        const auto s = insert_at(r.t, r.i, st.k);
        const bool left = r.i <= st.lambda;
        if ((r.side == WitnessSide::left) != left) fail(where + " uses the wrong side");
        int b = 0;
        if (left) {
            b = n;
            for (int j : st.shifted)
                if (j >= r.i) b = std::min(b, j);
            if (b == n) fail(where + ": no shifted position at or after i");
        } else {
            for (int j : st.fixed)
                if (j <= r.i - 1) b = std::max(b, j);
            if (b == 0) fail(where + ": no fixed position before i");
        }
        if (r.b != b) fail(where + ": pivot b=" + std::to_string(r.b) + ", expected " + std::to_string(b));
        const auto expected = delete_at(s, left ? b + 1 : b);
        if (r.t_prime != expected) fail(where + ": t' is " + r.t_prime.str() + ", expected " + expected.str());
        if (!is_subword(r.t_prime, s)) fail(where + ": t' is not a face of sigma_i(t)");

        const Scan sp = scan(r.t_prime);
        const int e = st.lambda - st.rho, e2 = sp.lambda - sp.rho;
        Progress actual;
        if (e2 < e) {
            actual = Progress::excess;
        } else if (e2 == e &&
                   omega_compare({delta_left(st.shifted), delta_right(st.fixed, n)},
                                 {delta_left(sp.shifted), delta_right(sp.fixed, n)}) ==
                       OrderRelation::less) {
            actual = Progress::omega;
        } else {
            fail(where + ": neither excess drop nor omega rise");
        }
        if (actual != r.progress) fail(where + ": progress label mismatch");
        if (position.at(r.t_prime.code()) >= position.at(r.t.code()))
            fail(where + ": edge to " + r.t_prime.str() + " points forward in the order");
    }

    for (const auto& [code, mask] : pending)
        if (mask) fail("face " + InjWord::from_code(n, code).str() + " has undischarged insertions");
    if (cert.records.size() != required) fail("record count mismatch");
}

nlohmann::json to_json(const WitnessRecord& r)
{
    return {{"t", r.t.str()},       {"i", r.i},
            {"case", side_name(r.side)}, {"b", r.b},
            {"t_prime", r.t_prime.str()}, {"progress", progress_name(r.progress)}};
}

void write_certificate_jsonl(std::ostream& out, const Certificate& cert)
{
    for (const auto& r : cert.records) out << to_json(r).dump() << '\n';
    out << nlohmann::json{{"n", cert.n}, {"faces", cert.face_count()}, {"acyclic", true}}.dump() << '\n';
}

Certificate read_certificate_jsonl(std::istream& in)
{
    std::vector<nlohmann::json> lines;
    nlohmann::json footer;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object())
            throw std::invalid_argument("certificate line " + std::to_string(lineno) + " is not a JSON object");
        if (j.contains("faces"))
            footer = std::move(j);
        else
            lines.push_back(std::move(j));
    }
    if (footer.is_null()) throw std::invalid_argument("certificate has no footer");
    Certificate cert;
    cert.n = footer.at("n").get<int>();
    check_range(cert.n, "read_certificate_jsonl");
    for (const auto& j : lines) {
        WitnessRecord r;
        r.t = InjWord::parse(j.at("t").get<std::string>(), cert.n);
        r.i = j.at("i").get<int>();
        const auto side = j.at("case").get<std::string>();
        if (side != "L" && side != "R") throw std::invalid_argument("bad case '" + side + "'");
        r.side = side == "L" ? WitnessSide::left : WitnessSide::right;
        r.b = j.at("b").get<int>();
        r.t_prime = InjWord::parse(j.at("t_prime").get<std::string>(), cert.n);
        const auto prog = j.at("progress").get<std::string>();
        if (prog != "excess" && prog != "omega") throw std::invalid_argument("bad progress '" + prog + "'");
        r.progress = prog == "excess" ? Progress::excess : Progress::omega;
        cert.records.push_back(std::move(r));
    }
    cert.order = induction_order(injective_words(cert.n, cert.n - 1));
    if (footer.at("faces").get<std::size_t>() != cert.order.size())
        throw std::invalid_argument("footer face count disagrees with n");
    return cert;
}

FixedPointResult fred_fixed_point(int n)
{
    check_range(n, "fred_fixed_point");
    const auto faces = injective_words(n, n - 1);
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    for (std::uint32_t f = 0; f < faces.size(); ++f) index.emplace(faces[f].code(), f);

    // for each face: the face indices of every sigma_i(t) with i in M(t)
    std::vector<std::vector<std::vector<std::uint32_t>>> sigma_faces(faces.size());
    parallel_for(faces.size(), [&](std::size_t f) {
        const auto& t = faces[f];
        const int k = missing_letter(t);
        for (int i = 1; i <= n; ++i) {
            const auto s = insert_at(t, i, k);
            if (!has_fixed_point(s)) continue;
            std::vector<std::uint32_t> fs;
            for (int j = 1; j <= n; ++j) fs.push_back(index.at(delete_at(s, j).code()));
            sigma_faces[f].push_back(std::move(fs));
        }
    });

    FixedPointResult result;
    result.n = n;
    result.faces = faces.size();
    std::vector<char> marked(faces.size(), 0);
    while (true) {
        std::vector<std::uint32_t> fresh;
        for (std::uint32_t f = 0; f < faces.size(); ++f) {
            if (marked[f]) continue;
            // t qualifies when at most one sigma_i(t) lacks a marked face;
            // that one (or any, if none) serves as the exempt index
            std::size_t unsettled = 0;
            for (const auto& fs : sigma_faces[f])
                if (std::none_of(fs.begin(), fs.end(), [&](std::uint32_t g) { return marked[g] != 0; }))
                    ++unsettled;
            if (unsettled <= 1) fresh.push_back(f);
        }
        if (fresh.empty()) break;
        for (auto f : fresh) marked[f] = 1;
        result.marked_per_round.push_back(fresh.size());
    }
    for (std::uint32_t f = 0; f < faces.size(); ++f)
        if (marked[f]) result.marked.push_back(faces[f]);
    return result;
}

} // namespace injwords
