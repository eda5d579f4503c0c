#include "aspen/solver.hpp"

#include <algorithm>
#include <unordered_map>

#include "aspen/errors.hpp"

namespace aspen {

bool is_model(const std::vector<GroundRule>& g, const Interpretation& i) {
    for (const GroundRule& r : g) {
        if (r.head && i.contains(*r.head)) continue;
        bool neg_hit = std::any_of(r.body_neg.begin(), r.body_neg.end(),
                                   [&](const Atom& a) { return i.contains(a); });
        if (neg_hit) continue;
        bool pos_miss = std::any_of(r.body_pos.begin(), r.body_pos.end(),
                                    [&](const Atom& a) { return !i.contains(a); });
        if (!pos_miss) return false;
    }
    return true;
}

AnswerSetCheck check_answer_set(const std::vector<GroundRule>& g, const Interpretation& i) {
    AnswerSetCheck out;
    if (!is_model(g, i)) return out;

    // Constraints prove nothing; rules blocked by their negative body or with
    // a head outside I never participate.
    std::vector<const GroundRule*> provers;
    for (const GroundRule& r : g) {
        if (!r.head || !i.contains(*r.head)) continue;
        bool blocked = std::any_of(r.body_neg.begin(), r.body_neg.end(),
                                   [&](const Atom& a) { return i.contains(a); });
        if (!blocked) provers.push_back(&r);
    }

    Interpretation proven;
    std::size_t stage = 0;
    bool grew = true;
    while (grew) {
        grew = false;
        ++stage;
        std::vector<Atom> wave;
        for (const GroundRule* r : provers) {
            if (proven.contains(*r->head)) continue;
            bool ready = std::all_of(r->body_pos.begin(), r->body_pos.end(),
                                     [&](const Atom& a) { return proven.contains(a); });
            if (ready) wave.push_back(*r->head);
        }
        for (Atom& a : wave) {
            if (proven.insert(a)) {
                out.witness.emplace(std::move(a), stage);
                grew = true;
            }
        }
    }
    if (proven == i) {
        out.accepted = true;
    } else {
        out.witness.clear();
    }
    return out;
}

bool is_answer_set(const std::vector<GroundRule>& g, const Interpretation& i) {
    return check_answer_set(g, i).accepted;
}

namespace {

enum class Val : unsigned char { Undef, True, False };

struct SearchRule {
    int head = -1;  // -1 for constraints
    std::vector<int> pos;
    std::vector<int> neg;
};

struct Search {
    std::vector<Atom> atoms;  // canonical order, index = atom id
    std::vector<SearchRule> rules;
    std::vector<std::vector<int>> head_rules;  // atom id -> rules with that head
    const std::vector<GroundRule>* ground = nullptr;
    const std::function<bool(const Interpretation&)>* visit = nullptr;
    std::size_t max_nodes = 0;
    std::size_t nodes = 0;
    bool stopped = false;

    bool body_false(const SearchRule& r, const std::vector<Val>& v) const {
        for (int a : r.pos)
            if (v[a] == Val::False) return true;
        for (int a : r.neg)
            if (v[a] == Val::True) return true;
        return false;
    }

    bool body_true(const SearchRule& r, const std::vector<Val>& v) const {
        for (int a : r.pos)
            if (v[a] != Val::True) return false;
        for (int a : r.neg)
            if (v[a] != Val::False) return false;
        return true;
    }

    // Returns false on conflict.
    bool propagate(std::vector<Val>& v) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const SearchRule& r : rules) {
                if (!body_true(r, v)) continue;
                if (r.head < 0) return false;
                if (v[r.head] == Val::False) return false;
                if (v[r.head] == Val::Undef) {
                    v[r.head] = Val::True;
                    changed = true;
                }
            }
            for (std::size_t a = 0; a < atoms.size(); ++a) {
                bool supportable = std::any_of(
                    head_rules[a].begin(), head_rules[a].end(),
                    [&](int ri) { return !body_false(rules[ri], v); });
                if (supportable) continue;
                if (v[a] == Val::True) return false;
                if (v[a] == Val::Undef) {
                    v[a] = Val::False;
                    changed = true;
                }
            }
        }
        return true;
    }

    void descend(std::vector<Val> v) {
        if (stopped) return;
        if (++nodes > max_nodes) throw ResourceExceeded("solver node budget exceeded");
        if (!propagate(v)) return;
        int pick = -1;
        for (std::size_t a = 0; a < atoms.size() && pick < 0; ++a) {
            if (v[a] != Val::Undef) continue;
            for (int ri : head_rules[a]) {
                if (!body_false(rules[ri], v)) {
                    pick = static_cast<int>(a);
                    break;
                }
            }
        }
        if (pick < 0) {
            for (std::size_t a = 0; a < atoms.size(); ++a)
                if (v[a] == Val::Undef) v[a] = Val::False;
            Interpretation candidate;
            for (std::size_t a = 0; a < atoms.size(); ++a)
                if (v[a] == Val::True) candidate.insert(atoms[a]);
            if (is_answer_set(*ground, candidate) && (*visit)(candidate)) stopped = true;
            return;
        }
        std::vector<Val> tv = v;
        tv[pick] = Val::True;
        descend(std::move(tv));
        if (stopped) return;
        v[pick] = Val::False;
        descend(std::move(v));
    }
};

}  // namespace

void visit_answer_sets(const std::vector<GroundRule>& g,
                       const std::function<bool(const Interpretation&)>& visit,
                       const SolveLimits& limits) {
    Search s;
    s.ground = &g;
    s.visit = &visit;
    s.max_nodes = limits.max_nodes;

    std::set<Atom> universe;
    for (const GroundRule& r : g) {
        if (r.head) universe.insert(*r.head);
        universe.insert(r.body_pos.begin(), r.body_pos.end());
        universe.insert(r.body_neg.begin(), r.body_neg.end());
    }
    s.atoms.assign(universe.begin(), universe.end());
    std::unordered_map<Atom, int, AtomHash> ids;
    for (std::size_t k = 0; k < s.atoms.size(); ++k) ids[s.atoms[k]] = static_cast<int>(k);
    s.head_rules.resize(s.atoms.size());
    for (const GroundRule& r : g) {
        SearchRule sr;
        if (r.head) sr.head = ids[*r.head];
        for (const Atom& a : r.body_pos) sr.pos.push_back(ids[a]);
        for (const Atom& a : r.body_neg) sr.neg.push_back(ids[a]);
        if (sr.head >= 0) s.head_rules[sr.head].push_back(static_cast<int>(s.rules.size()));
        s.rules.push_back(std::move(sr));
    }

    s.descend(std::vector<Val>(s.atoms.size(), Val::Undef));
}

std::vector<Interpretation> enumerate_answer_sets(const std::vector<GroundRule>& g,
                                                  std::optional<std::size_t> limit,
                                                  const SolveLimits& limits) {
    std::vector<Interpretation> found;
    visit_answer_sets(
        g,
        [&](const Interpretation& i) {
            found.push_back(i);
            return limit && found.size() >= *limit;
        },
        limits);
    std::sort(found.begin(), found.end(),
              [](const Interpretation& a, const Interpretation& b) {
                  std::vector<Atom> sa = a.sorted(), sb = b.sorted();
                  if (sa.size() != sb.size()) return sa.size() < sb.size();
                  for (std::size_t k = 0; k < sa.size(); ++k)
                      if (int c = compare(sa[k], sb[k]); c != 0) return c < 0;
                  return false;
              });
    return found;
}

}  // namespace aspen
