#include "wicks/surface.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace wicks {

std::vector<int> EmbeddedGraph::degrees() const {
    std::vector<int> d;
    d.reserve(rotations.size());
    for (const auto& r : rotations) d.push_back(static_cast<int>(r.size()));
    return d;
}

bool EmbeddedGraph::loop_free() const {
    for (const auto& e : edges)
        if (vertex_of[e.dart_pos] == vertex_of[e.dart_neg]) return false;
    return true;
}

bool EmbeddedGraph::cubic() const {
    for (const auto& r : rotations)
        if (r.size() != 3) return false;
    return true;
}

std::string EmbeddedGraph::describe() const {
    std::ostringstream out;
    out << "v=" << vertex_count() << " e=" << edge_count() << " degrees=";
    auto d = degrees();
    for (std::size_t i = 0; i < d.size(); ++i) out << (i ? "," : "") << d[i];
    out << '\n';
    for (const auto& r : rotations) {
        out << "rotation";
        for (int32_t p : r) out << ' ' << p;
        out << '\n';
    }
    return out.str();
}

std::string ValidationReport::to_line() const {
    if (pass) return "PASS";
    static const char* names[] = {"", "i", "ii", "iii"};
    return std::string("FAIL ") + names[static_cast<int>(condition)] + " " +
           std::to_string(position);
}

bool letter_pairs_ok(const CyclicWord& w) {
    std::map<int32_t, std::pair<int, int>> counts; // base -> (+count, -count)
    for (const Letter& x : w.representative()) {
        auto& c = counts[x.base()];
        (x.positive() ? c.first : c.second)++;
    }
    for (const auto& [base, c] : counts)
        if (c.first != 1 || c.second != 1) return false;
    return true;
}

ValidationReport validate_wicks(const CyclicWord& w) {
    const Word& rep = w.representative();
    const std::size_t n = rep.size();

    // (i): each occurring base occurs exactly once with each sign
    std::map<int32_t, std::pair<int, int>> counts;
    for (const Letter& x : rep) {
        auto& c = counts[x.base()];
        (x.positive() ? c.first : c.second)++;
    }
    for (std::size_t i = 0; i < n; ++i) {
        auto& c = counts[rep[i].base()];
        if (c.first != 1 || c.second != 1) {
            return {false, WicksCondition::LetterPairs, i,
                    "base " + std::to_string(rep[i].base()) + " occurs " +
                        std::to_string(c.first) + " times positively and " +
                        std::to_string(c.second) + " negatively"};
        }
    }

    // (ii): cyclically reduced
    for (std::size_t i = 0; i < n; ++i) {
        if (n >= 2 && rep[(i + 1) % n] == rep[i].inverse())
            return {false, WicksCondition::CyclicallyReduced, i,
                    "inverse pair at positions " + std::to_string(i) + "," +
                        std::to_string((i + 1) % n)};
    }

    // (iii): no length-2 factor whose inverse is also a factor
    if (n >= 2) {
        std::map<std::pair<int32_t, int32_t>, std::size_t> factors;
        for (std::size_t i = 0; i < n; ++i)
            factors[{rep[i].value, rep[(i + 1) % n].value}] = i;
        for (std::size_t i = 0; i < n; ++i) {
            const Letter a = rep[i];
            const Letter b = rep[(i + 1) % n];
            auto it = factors.find({-b.value, -a.value});
            if (it != factors.end())
                return {false, WicksCondition::MirrorFactor, i,
                        "factor at " + std::to_string(it->second) +
                            " is the inverse of the factor at " + std::to_string(i)};
        }
    }
    return {};
}

GluingStructure glue_structure(const CyclicWord& w) {
    if (w.empty()) throw std::invalid_argument("glue: empty word");
    if (!letter_pairs_ok(w))
        throw std::invalid_argument("glue: each base must occur exactly once with each sign");
    const Word& rep = w.representative();
    const std::size_t n = rep.size();

    GluingStructure gs;
    gs.n = n;
    gs.pairing.assign(n, -1);
    std::map<int32_t, int32_t> open; // base -> earlier position
    for (std::size_t i = 0; i < n; ++i) {
        auto it = open.find(rep[i].base());
        if (it == open.end()) {
            open[rep[i].base()] = static_cast<int32_t>(i);
        } else {
            gs.pairing[i] = it->second;
            gs.pairing[it->second] = static_cast<int32_t>(i);
            open.erase(it);
        }
    }

    gs.orbit_of.assign(n, -1);
    for (std::size_t start = 0; start < n; ++start) {
        if (gs.orbit_of[start] >= 0) continue;
        std::vector<int32_t> orbit;
        int32_t i = static_cast<int32_t>(start);
        while (gs.orbit_of[i] < 0) {
            gs.orbit_of[i] = static_cast<int32_t>(gs.corner_orbits.size());
            orbit.push_back(i);
            i = (gs.pairing[i] + 1) % static_cast<int32_t>(n);
        }
        gs.corner_orbits.push_back(std::move(orbit));
    }
    return gs;
}

EmbeddedGraph glue(const CyclicWord& w) {
    GluingStructure gs = glue_structure(w);
    const Word& rep = w.representative();

    EmbeddedGraph g;
    g.rotations = gs.corner_orbits; // each orbit already starts at its least position
    g.vertex_of = gs.orbit_of;
    g.dart_letter = rep;
    std::map<int32_t, EdgeRecord> edges;
    for (std::size_t i = 0; i < gs.n; ++i) {
        EdgeRecord& e = edges[rep[i].base()];
        e.base = rep[i].base();
        (rep[i].positive() ? e.dart_pos : e.dart_neg) = static_cast<int32_t>(i);
    }
    g.edges.reserve(edges.size());
    for (auto& [base, e] : edges) g.edges.push_back(e);
    return g;
}

int topological_genus(const CyclicWord& w) {
    GluingStructure gs = glue_structure(w);
    const long e = static_cast<long>(gs.n) / 2;
    const long v = static_cast<long>(gs.corner_orbits.size());
    const long twice = 1 + e - v;
    if (twice % 2 != 0)
        throw std::logic_error("topological_genus: 1+e-v is odd");
    return static_cast<int>(twice / 2);
}

CyclicWord face_trace(const EmbeddedGraph& g) {
    const std::size_t n = g.dart_letter.size();
    if (n == 0) return CyclicWord();

    // sigma from the rotation lists, alpha from the edge records
    std::vector<int32_t> sigma(n, -1), alpha(n, -1);
    for (const auto& rot : g.rotations)
        for (std::size_t k = 0; k < rot.size(); ++k)
            sigma[rot[k]] = rot[(k + 1) % rot.size()];
    for (const auto& e : g.edges) {
        alpha[e.dart_pos] = e.dart_neg;
        alpha[e.dart_neg] = e.dart_pos;
    }

    Word out;
    out.reserve(n);
    int32_t d = 0;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(g.dart_letter[d]);
        d = sigma[alpha[d]];
    }
    if (d != 0 || out.size() != n)
        throw std::logic_error("face_trace: rotation system is not one-faced");
    return CyclicWord(out);
}

static Word relabel_first_occurrence(const Word& w) {
    Word out;
    out.reserve(w.size());
    std::map<int32_t, int32_t> id;     // base -> new id
    std::map<int32_t, bool> first_pos; // base -> first occurrence was positive
    int32_t next = 1;
    for (const Letter& x : w) {
        auto it = id.find(x.base());
        if (it == id.end()) {
            id[x.base()] = next;
            first_pos[x.base()] = x.positive();
            out.push_back(Letter(next));
            ++next;
        } else {
            const int32_t k = it->second;
            out.push_back(Letter(x.positive() == first_pos[x.base()] ? k : -k));
        }
    }
    return out;
}

CyclicWord canonical_form(const CyclicWord& w) {
    if (!letter_pairs_ok(w))
        throw std::invalid_argument("canonical_form: each base must occur exactly once with each sign");
    const std::size_t n = w.size();
    if (n == 0) return w;
    Word best;
    for (std::size_t r = 0; r < n; ++r) {
        Word cand = relabel_first_occurrence(w.rotation(r));
        if (best.empty() || std::lexicographical_compare(cand.begin(), cand.end(),
                                                         best.begin(), best.end()))
            best = std::move(cand);
    }
    return CyclicWord(best);
}

WicksForm WicksForm::build(const CyclicWord& w) {
    ValidationReport report = validate_wicks(w);
    if (!report.pass)
        throw std::invalid_argument("not a Wicks form: " + report.to_line() +
                                    (report.detail.empty() ? "" : " (" + report.detail + ")"));
    WicksForm f;
    f.word = w;
    f.graph = glue(w);
    const long e = static_cast<long>(w.size()) / 2;
    const long v = static_cast<long>(f.graph.vertex_count());
    f.genus = static_cast<int>((1 + e - v) / 2);
    f.maximal = static_cast<long>(w.size()) == 12L * f.genus - 6;
    return f;
}

} // namespace wicks
