"""Dev probe #3: parent-bound sensitivity of premise dominance."""
from fractions import Fraction
from itertools import combinations, permutations

import oracles as o
from _probe import languages, projections_of, enumerate_tasks_variant


def sweep_bounds(langs, parent_bounds, strict_d=False):
    violations = []
    checked = 0
    for n, vectors in langs:
        width = len(vectors)
        lv = o.valid_statements(projections_of(n, vectors), width)
        parent_pool_all = enumerate_tasks_variant(lv, *parent_bounds, strict_d)
        # cache model sets per parent lazily
        mcache = {}

        def mods(s, d):
            key = (s, d)
            if key not in mcache:
                mcache[key] = o.models(lv, s, d)
            return mcache[key]

        for s_set, d_set in enumerate_tasks_variant(lv, 1, 1, strict_d):
            M = o.models(lv, s_set, d_set)
            if not M:
                continue
            pool = [(ps, pd) for ps, pd in parent_pool_all if o.is_child(s_set, d_set, ps, pd)]
            if not pool:
                continue
            checked += 1
            probs = {m: Fraction(sum(1 for ps, pd in pool if m in mods(ps, pd)), len(pool)) for m in M}
            weakmax = max(o.weakness(lv, m) for m in M)
            chosen = min(m for m in M if o.weakness(lv, m) == weakmax)
            if probs[chosen] < max(probs.values()):
                violations.append((n, vectors, tuple(sorted(s_set)), tuple(sorted(d_set))))
    return checked, violations


langs = languages(3, 3)

for pb in [(2, 2), (2, 3), (2, 4), (2, 8), (3, 3), (3, 8), (8, 8)]:
    checked, v = sweep_bounds(langs, pb)
    print(f"parent bounds {pb}: checked={checked} violations={len(v)}", v[:4] if v else "")
