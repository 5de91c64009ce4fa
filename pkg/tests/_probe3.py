"""Dev probe #4: exact-size parent bounds; W1 example check under variants."""
from fractions import Fraction
from itertools import combinations

import oracles as o
from _probe import languages, projections_of, enumerate_tasks_variant


def enumerate_tasks_exact(valid, n_s, n_d, strict_d):
    stmts = sorted(valid)
    out = []
    for s in combinations(stmts, n_s):
        zs = sorted(o.decision_space(valid, s))
        for d in combinations(zs, n_d):
            if strict_d and len(d) == len(zs):
                continue
            out.append((frozenset(s), frozenset(d)))
    return out


def sweep(langs, parent_tasks_fn, child_strict):
    violations = []
    checked = 0
    for n, vectors in langs:
        width = len(vectors)
        lv = o.valid_statements(projections_of(n, vectors), width)
        parent_pool_all = parent_tasks_fn(lv)
        for s_set, d_set in enumerate_tasks_variant(lv, 1, 1, child_strict):
            M = o.models(lv, s_set, d_set)
            if not M:
                continue
            pool = [(ps, pd) for ps, pd in parent_pool_all if o.is_child(s_set, d_set, ps, pd)]
            if not pool:
                continue
            checked += 1
            probs = {m: Fraction(sum(1 for ps, pd in pool if m in o.models(lv, ps, pd)), len(pool)) for m in M}
            weakmax = max(o.weakness(lv, m) for m in M)
            chosen = min(m for m in M if o.weakness(lv, m) == weakmax)
            if probs[chosen] < max(probs.values()):
                violations.append((n, vectors, tuple(sorted(s_set)), tuple(sorted(d_set))))
    return checked, violations


langs = languages(3, 3)

for label, fn, cs in [
    ("exact (2,2), child D<=Z_S", lambda lv: enumerate_tasks_exact(lv, 2, 2, False), False),
    ("exact (2,2), strict everywhere", lambda lv: enumerate_tasks_exact(lv, 2, 2, True), True),
]:
    checked, v = sweep(langs, fn, cs)
    print(f"{label}: checked={checked} violations={len(v)}", v[:6] if v else "")

# W1 check under paper-strict D at <= (2,2): dominance per spec example?
w1 = [(3, (3, 6))]
checked, v = sweep(w1, lambda lv: enumerate_tasks_variant(lv, 2, 2, True), True)
print("W1 strict-D <=(2,2):", checked, "children checked, violations:", len(v))
checked, v = sweep(w1, lambda lv: enumerate_tasks_variant(lv, 2, 2, False), False)
print("W1 spec-literal <=(2,2):", checked, "children checked, violations:", len(v), v)
