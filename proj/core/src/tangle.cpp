#include "thetaq/tangle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "thetaq/zmod.hpp"

namespace thetaq {

namespace {

long floor_mod(long v, long m) {
    long r = v % m;
    return r < 0 ? r + m : r;
}

struct Strand {
    long color = 0;
    bool down = true;
    size_t node = 0;  // component node for the tracer
    long weight(long twoN) const {
        return down ? color : floor_mod(-color, twoN);
    }
};

bool is_cup(EventKind k) { return k == EventKind::Cup || k == EventKind::CupRev; }

// Shared structural walk.  Calls the event hooks with resolved strands;
// throws the validation errors.  Crossing/twist hooks see the strands
// before the swap.
template <typename OnCup, typename OnCap, typename OnCross, typename OnTwist>
void walk(const SliceDiagram& d, OnCup on_cup, OnCap on_cap, OnCross on_cross,
          OnTwist on_twist) {
    if (d.N <= 0 || d.N % 2 != 0) throw BadN("diagram requires even N");
    std::vector<Strand> strands;
    size_t next_node = 0;
    for (size_t ev = 0; ev < d.events.size(); ++ev) {
        const SliceEvent& e = d.events[ev];
        const size_t count = strands.size();
        switch (e.kind) {
            case EventKind::Cup:
            case EventKind::CupRev: {
                if (e.position > count) {
                    throw BadPosition("cup at position " +
                                      std::to_string(e.position) + " of " +
                                      std::to_string(count) + " strands");
                }
                const long color = floor_mod(e.color, 2 * d.N);
                const bool left_down = (e.kind == EventKind::Cup);
                const size_t node = next_node++;
                Strand left{color, left_down, node};
                Strand right{color, !left_down, node};
                strands.insert(strands.begin() + e.position, {left, right});
                on_cup(e, node, color);
                break;
            }
            case EventKind::Cap:
            case EventKind::CapRev: {
                if (count < 2 || e.position > count - 2) {
                    throw BadPosition("cap at position " +
                                      std::to_string(e.position) + " of " +
                                      std::to_string(count) + " strands");
                }
                Strand& a = strands[e.position];
                Strand& b = strands[e.position + 1];
                if (a.color != b.color) {
                    throw ColorMismatch("cap joins colors " +
                                        std::to_string(a.color) + " and " +
                                        std::to_string(b.color));
                }
                const bool want_left_down = (e.kind == EventKind::Cap);
                if (a.down != want_left_down || b.down == want_left_down) {
                    throw ColorMismatch("cap orientation mismatch");
                }
                on_cap(e, a, b);
                strands.erase(strands.begin() + e.position,
                              strands.begin() + e.position + 2);
                break;
            }
            case EventKind::CrossPos:
            case EventKind::CrossNeg: {
                if (count < 2 || e.position > count - 2) {
                    throw BadPosition("crossing at position " +
                                      std::to_string(e.position) + " of " +
                                      std::to_string(count) + " strands");
                }
                on_cross(e, strands[e.position], strands[e.position + 1]);
                std::swap(strands[e.position], strands[e.position + 1]);
                break;
            }
            case EventKind::TwistPos:
            case EventKind::TwistNeg: {
                if (e.position >= count) {
                    throw BadPosition("twist at position " +
                                      std::to_string(e.position) + " of " +
                                      std::to_string(count) + " strands");
                }
                on_twist(e, strands[e.position]);
                break;
            }
        }
    }
    if (!strands.empty()) {
        throw OpenStrands("diagram ends with " + std::to_string(strands.size()) +
                          " open strands");
    }
}

struct UnionFind {
    std::vector<size_t> parent;
    size_t find(size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
    size_t make() {
        parent.push_back(parent.size());
        return parent.size() - 1;
    }
};

}  // namespace

void validate_diagram(const SliceDiagram& d) {
    walk(
        d, [](const SliceEvent&, size_t, long) {},
        [](const SliceEvent&, const Strand&, const Strand&) {},
        [](const SliceEvent&, const Strand&, const Strand&) {},
        [](const SliceEvent&, const Strand&) {});
}

CycloScalar evaluate(const SliceDiagram& d) {
    const int Ni = static_cast<int>(d.N);
    long exponent = 0;
    walk(
        d, [](const SliceEvent&, size_t, long) {},
        [](const SliceEvent&, const Strand&, const Strand&) {},
        [&](const SliceEvent& e, const Strand& a, const Strand& b) {
            const long sign = (e.kind == EventKind::CrossPos) ? 1 : -1;
            exponent += sign * a.weight(2 * d.N) * b.weight(2 * d.N);
        },
        [&](const SliceEvent& e, const Strand& a) {
            const long sign = (e.kind == EventKind::TwistPos) ? 1 : -1;
            const long w = a.weight(2 * d.N);
            exponent += sign * w * w;
        });
    return t_power(Ni, exponent);
}

LinkData trace_strands(const SliceDiagram& d) {
    UnionFind uf;
    std::vector<long> node_color;
    struct CrossRecord {
        size_t a, b;
        long sign;
    };
    std::vector<CrossRecord> crossings;
    std::vector<std::pair<size_t, long>> twists;

    walk(
        d,
        [&](const SliceEvent&, size_t node, long color) {
            const size_t made = uf.make();
            (void)made;
            node_color.push_back(color);
            if (node + 1 != uf.parent.size()) {
                throw Error("trace_strands: node bookkeeping out of step");
            }
        },
        [&](const SliceEvent&, const Strand& a, const Strand& b) {
            uf.unite(a.node, b.node);
        },
        [&](const SliceEvent& e, const Strand& a, const Strand& b) {
            // Crossing sign flips once per upward strand.
            long s = (e.kind == EventKind::CrossPos) ? 1 : -1;
            if (!a.down) s = -s;
            if (!b.down) s = -s;
            crossings.push_back({a.node, b.node, s});
        },
        [&](const SliceEvent& e, const Strand& a) {
            twists.emplace_back(a.node, (e.kind == EventKind::TwistPos) ? 1 : -1);
        });

    // Components ordered by their smallest node.
    std::map<size_t, size_t> root_to_comp;
    std::vector<size_t> comp_root;
    for (size_t n = 0; n < uf.parent.size(); ++n) {
        const size_t r = uf.find(n);
        if (!root_to_comp.count(r)) {
            root_to_comp[r] = comp_root.size();
            comp_root.push_back(r);
        }
    }
    const size_t m = comp_root.size();
    LinkData ld;
    ld.N = d.N;
    ld.components.resize(m);
    ld.lk = IntMat(m, m);
    for (size_t n = 0; n < uf.parent.size(); ++n) {
        const size_t c = root_to_comp[uf.find(n)];
        ld.components[c].color = node_color[n];
    }
    IntMat raw(m, m);
    for (const auto& cr : crossings) {
        const size_t a = root_to_comp[uf.find(cr.a)];
        const size_t b = root_to_comp[uf.find(cr.b)];
        if (a == b) {
            ld.components[a].framing += cr.sign;
        } else {
            raw.at(a, b) += cr.sign;
            raw.at(b, a) += cr.sign;
        }
    }
    for (const auto& [node, sign] : twists) {
        ld.components[root_to_comp[uf.find(node)]].framing += sign;
    }
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            if (raw.at(i, j) % 2 != 0) {
                throw Error("trace_strands: odd inter-component crossing sum");
            }
            ld.lk.at(i, j) = raw.at(i, j) / 2;
        }
    }
    return ld;
}

CycloScalar linking_oracle(const LinkData& ld, long N) {
    long exponent = 0;
    const size_t m = ld.components.size();
    for (size_t i = 0; i < m; ++i) {
        const long w = ld.components[i].color;
        exponent += ld.components[i].framing * w * w;
    }
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            exponent += 2 * ld.lk.at(i, j) * ld.components[i].color *
                        ld.components[j].color;
        }
    }
    return t_power(static_cast<int>(N), exponent);
}

LinkData color_reduce(const LinkData& ld, long N) {
    LinkData out = ld;
    for (auto& c : out.components) c.color = floor_mod(c.color, N);
    return out;
}

HandlebodyVector cable_to_skein(const std::vector<long>& core_colors, long N) {
    const size_t g = core_colors.size();
    std::vector<long> mu(g);
    for (size_t i = 0; i < g; ++i) mu[i] = floor_mod(core_colors[i], N);
    return HandlebodyVector::basis_vector(N, g, mu);
}

ColoredGram colored_gram(long N, size_t g,
                         const std::vector<std::vector<long>>& color_family) {
    const int Ni = static_cast<int>(N);
    const size_t m = color_family.size();
    ColoredGram out{CycloMatrix(m, m, Ni), 0};
    for (size_t a = 0; a < m; ++a) {
        if (color_family[a].size() != g) {
            throw DimensionMismatch("colored_gram: coloring size");
        }
        for (size_t b = 0; b < m; ++b) {
            // Union of the two colored core systems in the Heegaard
            // splitting; the gluing links core i of one side with core i
            // of the other, with the sign that reproduces the theta
            // pairing.
            LinkData ld;
            ld.N = N;
            ld.components.resize(2 * g);
            ld.lk = IntMat(2 * g, 2 * g);
            for (size_t i = 0; i < g; ++i) {
                ld.components[i] = {color_family[a][i], 0};
                ld.components[g + i] = {color_family[b][i], 0};
                ld.lk.at(i, g + i) = -1;
                ld.lk.at(g + i, i) = -1;
            }
            out.gram.at(a, b) = linking_oracle(ld, N);
        }
    }
    out.rank = out.gram.rank();
    return out;
}

SliceDiagram parse_diagram(const std::string& text) {
    SliceDiagram d;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_n = false;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        auto expect_at = [&](const char* what) {
            std::string at;
            if (!(ls >> at) || at != "at") {
                throw SyntaxError(std::string("expected 'at' after ") + what,
                                  lineno, 1);
            }
        };
        auto read_number = [&](const char* what) {
            long v;
            if (!(ls >> v)) {
                throw SyntaxError(std::string("expected ") + what, lineno, 1);
            }
            return v;
        };
        auto read_position = [&](const char* what) {
            const long v = read_number(what);
            if (v < 0) {
                throw SyntaxError(std::string("negative position for ") + what,
                                  lineno, 1);
            }
            return static_cast<size_t>(v);
        };
        if (!have_n) {
            if (tok != "N") {
                throw SyntaxError("diagram must start with 'N <even>'", lineno, 1);
            }
            d.N = read_number("the value of N");
            if (d.N <= 0 || d.N % 2 != 0) {
                throw BadN("N must be a positive even integer");
            }
            have_n = true;
            continue;
        }
        SliceEvent e;
        if (tok == "cup" || tok == "cup*") {
            e.kind = (tok == "cup") ? EventKind::Cup : EventKind::CupRev;
            e.color = read_number("a cup color");
            expect_at(tok.c_str());
            e.position = read_position("a cup position");
        } else if (tok == "cap" || tok == "cap*") {
            e.kind = (tok == "cap") ? EventKind::Cap : EventKind::CapRev;
            expect_at(tok.c_str());
            e.position = read_position("a cap position");
        } else if (tok == "x+" || tok == "x-") {
            e.kind = (tok == "x+") ? EventKind::CrossPos : EventKind::CrossNeg;
            expect_at(tok.c_str());
            e.position = read_position("a crossing position");
        } else if (tok == "tw+" || tok == "tw-") {
            e.kind = (tok == "tw+") ? EventKind::TwistPos : EventKind::TwistNeg;
            expect_at(tok.c_str());
            e.position = read_position("a twist position");
        } else {
            throw SyntaxError("unknown event '" + tok + "'", lineno, 1);
        }
        std::string extra;
        if (ls >> extra) {
            throw SyntaxError("trailing input '" + extra + "'", lineno, 1);
        }
        d.events.push_back(e);
    }
    if (!have_n) throw SyntaxError("empty diagram: missing 'N <even>'", 1, 1);
    validate_diagram(d);
    return d;
}

SliceDiagram random_diagram(long N, std::mt19937_64& rng, size_t event_budget) {
    SliceDiagram d;
    d.N = N;
    struct S {
        long color;
        bool down;
    };
    std::vector<S> strands;
    auto rnd = [&rng](size_t m) { return static_cast<size_t>(rng() % m); };

    auto valid_caps = [&]() {
        std::vector<size_t> out;
        for (size_t i = 0; i + 1 < strands.size(); ++i) {
            if (strands[i].color == strands[i + 1].color &&
                strands[i].down != strands[i + 1].down) {
                out.push_back(i);
            }
        }
        return out;
    };
    auto do_cup = [&]() {
        const long color = static_cast<long>(rnd(static_cast<size_t>(2 * N)));
        const bool rev = rnd(2) == 1;
        const size_t pos = rnd(strands.size() + 1);
        d.events.push_back(
            {rev ? EventKind::CupRev : EventKind::Cup, pos, color});
        strands.insert(strands.begin() + pos,
                       {S{color, !rev}, S{color, rev}});
    };
    auto do_cap_at = [&](size_t pos) {
        const bool left_down = strands[pos].down;
        d.events.push_back(
            {left_down ? EventKind::Cap : EventKind::CapRev, pos, 0});
        strands.erase(strands.begin() + pos, strands.begin() + pos + 2);
    };
    auto do_cross = [&](size_t pos, bool positive) {
        d.events.push_back(
            {positive ? EventKind::CrossPos : EventKind::CrossNeg, pos, 0});
        std::swap(strands[pos], strands[pos + 1]);
    };

    for (size_t step = 0; step < event_budget; ++step) {
        const size_t kind = rnd(10);
        if (kind < 3 || strands.empty()) {
            if (strands.size() < 12) do_cup();
            continue;
        }
        if (kind < 5) {
            d.events.push_back({rnd(2) ? EventKind::TwistPos : EventKind::TwistNeg,
                                rnd(strands.size()), 0});
            continue;
        }
        if (kind < 7 && strands.size() >= 2) {
            do_cross(rnd(strands.size() - 1), rnd(2) == 0);
            continue;
        }
        const auto caps = valid_caps();
        if (!caps.empty()) {
            do_cap_at(caps[rnd(caps.size())]);
        } else if (strands.size() >= 2) {
            do_cross(rnd(strands.size() - 1), rnd(2) == 0);
        }
    }
    // Closure: walk the leftmost strand's partner over and cap.
    while (!strands.empty()) {
        size_t partner = 0;
        for (size_t j = 1; j < strands.size(); ++j) {
            if (strands[j].color == strands[0].color &&
                strands[j].down != strands[0].down) {
                partner = j;
                break;
            }
        }
        if (partner == 0) throw Error("random_diagram: no matching strand");
        while (partner > 1) {
            do_cross(partner - 1, rnd(2) == 0);
            --partner;
        }
        do_cap_at(0);
    }
    validate_diagram(d);
    return d;
}

SliceDiagram arrow_reversed(const SliceDiagram& d) {
    SliceDiagram out = d;
    for (auto& e : out.events) {
        switch (e.kind) {
            case EventKind::Cup: e.kind = EventKind::CupRev; break;
            case EventKind::CupRev: e.kind = EventKind::Cup; break;
            case EventKind::Cap: e.kind = EventKind::CapRev; break;
            case EventKind::CapRev: e.kind = EventKind::Cap; break;
            default: break;
        }
    }
    return out;
}

SliceDiagram color_shifted(const SliceDiagram& d, long shift) {
    SliceDiagram out = d;
    for (auto& e : out.events) {
        if (is_cup(e.kind)) e.color = floor_mod(e.color + shift, 2 * d.N);
    }
    return out;
}

}  // namespace thetaq
