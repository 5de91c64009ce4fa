"""Dev probe #5: premise dominance over the FULL finite task space."""
from fractions import Fraction
from itertools import combinations

import oracles as o
from _probe import languages, projections_of


def all_tasks(valid, strict_d, strict_s):
    stmts = sorted(valid)
    max_s = len(stmts) - 1 if strict_s else len(stmts)
    for ns in range(1, max_s + 1):
        for s in combinations(stmts, ns):
            zs = sorted(o.decision_space(valid, s))
            max_d = len(zs) - 1 if strict_d else len(zs)
            for nd in range(1, max_d + 1):
                for d in combinations(zs, nd):
                    yield frozenset(s), frozenset(d)


def sweep_full(langs, strict_d, strict_s):
    total_children = 0
    violations = []
    for n, vectors in langs:
        width = len(vectors)
        lv = o.valid_statements(projections_of(n, vectors), width)
        children = [
            (s, d) for s, d in all_tasks(lv, strict_d, strict_s)
            if len(s) == 1 and len(d) == 1
        ]
        cm = {c: o.models(lv, *c) for c in children}
        children = [c for c in children if cm[c]]
        num = {c: {m: 0 for m in cm[c]} for c in children}
        den = {c: 0 for c in children}
        for ps, pd in all_tasks(lv, strict_d, strict_s):
            mset = None
            for c in children:
                cs, cd = c
                if cs < ps and cd <= pd:
                    den[c] += 1
                    if mset is None:
                        mset = o.models(lv, ps, pd)
                    for m in num[c]:
                        if m in mset:
                            num[c][m] += 1
        for c in children:
            if den[c] == 0:
                continue
            total_children += 1
            M = cm[c]
            weakmax = max(o.weakness(lv, m) for m in M)
            argmax = [m for m in M if o.weakness(lv, m) == weakmax]
            best = max(num[c].values())
            for chosen in argmax:
                if num[c][chosen] < best:
                    violations.append((n, vectors, tuple(sorted(c[0])), tuple(sorted(c[1])), chosen,
                                       num[c][chosen], best, den[c]))
    return total_children, violations


langs = languages(3, 3)
for sd, ss, label in [(False, False, "permissive D<=Z_S, S<=L"),
                      (True, True, "paper-strict D<Z_S, S<L")]:
    checked, v = sweep_full(langs, sd, ss)
    print(f"FULL GAMMA [{label}]: children={checked} violations={len(v)}")
    for item in v[:8]:
        print("   ", item)
