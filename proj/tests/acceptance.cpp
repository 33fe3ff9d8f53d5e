// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria pin exact counts, the published C(7,4) tables, agreement
// of the facet rules, the tilting and green-sequence correspondences, order
// coincidence and lattice structure, and the structural invariants, each
// within a fixed time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hst/hst.hpp"

using namespace hst;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;
};

void require(Outcome& o, bool cond, const std::string& msg) {
    if (!cond && o.pass) {
        o.pass = false;
        o.note = msg;
    }
}

VertexTuple parse_tuple(const std::string& digits) {
    std::vector<int> v;
    for (char c : digits) v.push_back(c - '0');
    return VertexTuple(v);
}

std::vector<VertexTuple> parse_tuples(std::initializer_list<const char*> xs) {
    std::vector<VertexTuple> out;
    for (const char* x : xs) out.push_back(parse_tuple(x));
    std::sort(out.begin(), out.end());
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- criterion 1: exact triangulation counts, each enumeration under 1 s ---

Outcome criterion_counts() {
    Outcome o;
    auto count = [&](int m, int delta, int want) {
        const auto t0 = std::chrono::steady_clock::now();
        const int got = TriangulationPoset::enumerate(PolytopeSpec(m, delta)).size();
        const double dt = seconds_since(t0);
        require(o, got == want,
                "C(" + std::to_string(m) + "," + std::to_string(delta) + ") gave " +
                    std::to_string(got) + ", wanted " + std::to_string(want));
        require(o, dt < 1.0,
                "C(" + std::to_string(m) + "," + std::to_string(delta) + ") took " +
                    std::to_string(dt) + " s");
    };
    count(5, 2, 5);
    count(7, 4, 7);
    for (int delta = 1; delta <= 6; ++delta) count(delta + 2, delta, 2);
    count(5, 3, 2);
    count(6, 2, 14);
    return o;
}

// --- criterion 2: the seven C(7,4) rows of both published tables ---

Outcome criterion_tables() {
    Outcome o;
    struct Row {
        std::vector<VertexTuple> tri, e, internal;
    };
    const std::vector<Row> rows = {
        {parse_tuples({"12345", "12356", "13456", "12367", "13467", "14567"}),
         parse_tuples({"135", "136", "146", "137", "147", "157"}),
         parse_tuples({"135", "136", "146"})},
        {parse_tuples({"12346", "12456", "23456", "12367", "13467", "14567"}),
         parse_tuples({"246", "136", "146", "137", "147", "157"}),
         parse_tuples({"246", "136", "146"})},
        {parse_tuples({"12347", "12456", "23456", "12467", "23467", "14567"}),
         parse_tuples({"246", "247", "146", "137", "147", "157"}),
         parse_tuples({"246", "247", "146"})},
        {parse_tuples({"12347", "12457", "23456", "12567", "23467", "24567"}),
         parse_tuples({"246", "247", "257", "137", "147", "157"}),
         parse_tuples({"246", "247", "257"})},
        {parse_tuples({"12345", "12356", "13457", "12367", "13567", "34567"}),
         parse_tuples({"135", "136", "357", "137", "147", "157"}),
         parse_tuples({"135", "136", "357"})},
        {parse_tuples({"12345", "12357", "13457", "12567", "23567", "34567"}),
         parse_tuples({"135", "257", "357", "137", "147", "157"}),
         parse_tuples({"135", "257", "357"})},
        {parse_tuples({"12347", "12457", "23457", "12567", "23567", "34567"}),
         parse_tuples({"357", "247", "257", "137", "147", "157"}),
         parse_tuples({"357", "247", "257"})},
    };

    const TriangulationPoset poset = TriangulationPoset::enumerate(PolytopeSpec(7, 4));
    require(o, poset.size() == 7, "expected 7 triangulations of C(7,4)");
    std::vector<bool> hit(static_cast<std::size_t>(poset.size()), false);
    for (const Row& r : rows) {
        const std::optional<int> at = poset.find(r.tri);
        if (!at) {
            require(o, false, "a table row is not an enumerated triangulation");
            continue;
        }
        hit[static_cast<std::size_t>(*at)] = true;
        require(o, upper_set_tuples(poset.element(*at)) == r.e,
                "e-set column mismatch at T" + std::to_string(*at));
        require(o, internal_faces(poset.element(*at), 2) == r.internal,
                "internal-simplex column mismatch at T" + std::to_string(*at));
    }
    for (bool h : hit) require(o, h, "an enumerated triangulation is missing from the table");
    return o;
}

// --- criterion 3: parity rule vs geometric oracle, m <= 10, delta <= 6 ---

Outcome criterion_facet_oracle() {
    Outcome o;
    for (int delta = 1; delta <= 6; ++delta)
        for (int m = delta + 1; m <= 10; ++m) {
            const PolytopeSpec p(m, delta);
            detail::for_each_combination(m, delta, [&](const std::vector<int>& labels) {
                const VertexTuple y(labels);
                require(o, classify_facet(y, p) == geometric_facet_oracle(y, p),
                        "facet rules disagree on " + y.str() + " in C(" + std::to_string(m) +
                            "," + std::to_string(delta) + ")");
            });
        }
    return o;
}

// --- criterion 4: tilting correspondences, n + 2d <= 8 ---

Outcome criterion_tilting_correspondence() {
    Outcome o;
    for (int d = 1; 2 * d + 1 <= 8; ++d)
        for (int n = 1; n + 2 * d <= 8; ++n) {
            const PolytopeSpec p(n + 2 * d, 2 * d);
            const TriangulationPoset poset = TriangulationPoset::enumerate(p);
            const std::string where =
                " on C(" + std::to_string(p.m) + "," + std::to_string(p.delta) + ")";
            require(o, check_covers_are_left_mutations(poset).pass,
                    "covers differ from left mutations" + where);
            require(o, check_hst2_is_perp_inclusion(poset).pass,
                    "hst2 differs from perp inclusion" + where);
            require(o, check_submersion_is_perp(poset).pass,
                    "submersion differs from perp membership" + where);
        }
    return o;
}

// --- criterion 5: order coincidence m <= 9, delta <= 4; lattices delta 2,3 ---

Outcome criterion_coincidence() {
    Outcome o;
    for (int delta = 1; delta <= 4; ++delta)
        for (int m = delta + 1; m <= 9; ++m) {
            const TriangulationPoset poset =
                TriangulationPoset::enumerate(PolytopeSpec(m, delta));
            const CoincidenceResult r = orders_coincide(poset);
            const std::string where =
                " on C(" + std::to_string(m) + "," + std::to_string(delta) + ")";
            require(o, r.leq1_implies_leq2, "leq1 does not imply leq2" + where);
            require(o, r.coincide, "orders differ" + where);
            if (delta == 2 || delta == 3) {
                require(o, is_lattice(poset.leq1_matrix()).is_lattice,
                        "hst1 not a lattice" + where);
                require(o, is_lattice(poset.leq2_matrix()).is_lattice,
                        "hst2 not a lattice" + where);
            }
        }
    return o;
}

const std::vector<std::pair<int, int>> kGreenGrid = {{1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}};

// --- criterion 6: green class counts on the grid ---

Outcome criterion_green_class_counts() {
    Outcome o;
    for (const auto& [d, n] : kGreenGrid) {
        const std::size_t classes = green_classes(d, n).size();
        const int triangs =
            TriangulationPoset::enumerate(PolytopeSpec(n + 2 * d + 1, 2 * d + 1)).size();
        require(o, static_cast<int>(classes) == triangs,
                "(" + std::to_string(d) + "," + std::to_string(n) + "): " +
                    std::to_string(classes) + " classes vs " + std::to_string(triangs) +
                    " triangulations");
    }
    return o;
}

// --- criterion 7: the worked A_2 example ---

Outcome criterion_a2_example() {
    Outcome o;
    const std::vector<GreenSequence> seqs = enumerate_green_sequences(1, 2);
    require(o, seqs.size() == 2, "A_2 should have exactly 2 green sequences");
    if (!o.pass) return o;
    const GreenSequence& longer = seqs[0];
    const GreenSequence& shorter = seqs[1];
    require(o, summand_set(longer) == parse_tuples({"13", "14", "24", "25", "35"}),
            "sigma of the longer sequence is wrong");
    require(o, summand_set(shorter) == parse_tuples({"13", "14", "25", "35"}),
            "sigma of the shorter sequence is wrong");
    require(o, is_increasing_polygonal_deformation(longer, shorter),
            "longer should deform onto shorter");
    require(o, !is_increasing_polygonal_deformation(shorter, longer),
            "deformation must be oriented");
    require(o, detail::sorted_includes(summand_set(longer), summand_set(shorter)),
            "sigma containment fails");
    int deformations = 0;
    for (const GreenSequence& a : seqs)
        for (const GreenSequence& b : seqs)
            if (a.states.size() != b.states.size() &&
                a.states.size() == b.states.size() + 1 &&
                is_increasing_polygonal_deformation(a, b))
                ++deformations;
    require(o, deformations == 1, "exactly one increasing deformation expected");
    return o;
}

// --- criterion 8: green order correspondence; lattices for d = 1, n <= 4 ---

Outcome criterion_green_order_correspondence() {
    Outcome o;
    for (const auto& [d, n] : kGreenGrid) {
        const GreenClassOrders go(d, n);
        const TriangulationPoset odd =
            TriangulationPoset::enumerate(PolytopeSpec(n + 2 * d + 1, 2 * d + 1));
        const std::string where = " at (" + std::to_string(d) + "," + std::to_string(n) + ")";
        require(o, check_green_class_count(go, odd).pass, "class count mismatch" + where);
        require(o, check_green_order_match(go, odd).pass, "transported orders differ" + where);
    }
    for (int n = 1; n <= 4; ++n) {
        const GreenClassOrders go(1, n);
        require(o, check_green_lattice(go).pass,
                "class orders not an equal lattice at (1," + std::to_string(n) + ")");
    }
    return o;
}

// --- criterion 9: structural invariants over the test grid ---

Outcome criterion_structural() {
    Outcome o;
    for (int d = 1; 2 * d + 1 <= 8; ++d)
        for (int n = 1; n + 2 * d <= 8; ++n) {
            const PolytopeSpec p(n + 2 * d, 2 * d);
            const TriangulationPoset poset = TriangulationPoset::enumerate(p);
            const std::string where =
                " on C(" + std::to_string(p.m) + "," + std::to_string(p.delta) + ")";
            const std::uint64_t want = detail::binomial(n + d - 1, d);
            for (int i = 0; i < poset.size(); ++i) {
                require(o, upper_set_tuples(poset.element(i)).size() == want,
                        "e-set size off" + where);
                require(o, poset.element(i).size() == poset.element(0).size(),
                        "cell counts differ" + where);
            }
            require(o, check_flip_involution(poset).pass, "flip involution fails" + where);
        }
    for (const auto& [d, n] : kGreenGrid) {
        const PolytopeSpec p(n + 2 * d + 1, 2 * d + 1);
        require(o, check_flip_involution(TriangulationPoset::enumerate(p)).pass,
                "flip involution fails on C(" + std::to_string(p.m) + "," +
                    std::to_string(p.delta) + ")");
    }
    return o;
}

struct Criterion {
    int id;
    const char* label;
    double budget_seconds;
    std::function<Outcome()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "triangulation counts", 10.0, criterion_counts},
        {2, "C(7,4) table reproduction", 1.0, criterion_tables},
        {3, "facet criterion vs oracle", 30.0, criterion_facet_oracle},
        {4, "tilting correspondence suite", 120.0, criterion_tilting_correspondence},
        {5, "order coincidence and lattices", 300.0, criterion_coincidence},
        {6, "green class counts", 120.0, criterion_green_class_counts},
        {7, "A_2 worked example", 1.0, criterion_a2_example},
        {8, "green order correspondence", 300.0, criterion_green_order_correspondence},
        {9, "structural invariants", 120.0, criterion_structural},
    };

    bool all = true;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double dt = seconds_since(t0);
        if (dt >= c.budget_seconds && o.pass) {
            o.pass = false;
            o.note = "time budget exceeded";
        }
        std::printf("criterion %d (%s): %s [%.2f s]%s%s\n", c.id, c.label,
                    o.pass ? "pass" : "FAIL", dt, o.note.empty() ? "" : " -- ",
                    o.note.c_str());
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
