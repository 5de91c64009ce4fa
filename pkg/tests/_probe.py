"""Dev probe #2: which task-space convention makes premise 1 hold at bounds?"""
from fractions import Fraction
from itertools import combinations, permutations

import oracles as o


def languages(max_states, max_vocab):
    seen = set()
    out = []
    for n in range(1, max_states + 1):
        vecs = list(range(1, 1 << n))
        for k in range(1, max_vocab + 1):
            for combo in combinations(vecs, k):
                canon = min(
                    tuple(sorted(sum(((v >> i) & 1) << perm[i] for i in range(n)) for v in combo))
                    for perm in permutations(range(n))
                )
                key = (n, canon)
                if key in seen:
                    continue
                seen.add(key)
                out.append((n, combo))
    return out


def projections_of(n, vectors):
    projs = set()
    for s in range(n):
        mask = 0
        for j, v in enumerate(vectors):
            if (v >> s) & 1:
                mask |= 1 << j
        projs.add(mask)
    return tuple(sorted(projs))


def enumerate_tasks_variant(valid, max_s, max_d, strict_d):
    stmts = sorted(valid)
    out = []
    for ns in range(1, max_s + 1):
        for s in combinations(stmts, ns):
            zs = sorted(o.decision_space(valid, s))
            for nd in range(1, max_d + 1):
                for d in combinations(zs, nd):
                    if strict_d and len(d) == len(zs):
                        continue
                    out.append((frozenset(s), frozenset(d)))
    return out


def sweep(langs, child_strict, parent_strict, max_parent=(2, 2), child=(1, 1)):
    violations = []
    checked = 0
    for n, vectors in langs:
        width = len(vectors)
        lv = o.valid_statements(projections_of(n, vectors), width)
        for s_set, d_set in enumerate_tasks_variant(lv, *child, child_strict):
            M = o.models(lv, s_set, d_set)
            if not M:
                continue
            pool = [
                (ps, pd)
                for ps, pd in enumerate_tasks_variant(lv, *max_parent, parent_strict)
                if o.is_child(s_set, d_set, ps, pd)
            ]
            if not pool:
                continue
            checked += 1
            probs = {m: Fraction(sum(1 for ps, pd in pool if m in o.models(lv, ps, pd)), len(pool)) for m in M}
            weakmax = max(o.weakness(lv, m) for m in M)
            chosen = min(m for m in M if o.weakness(lv, m) == weakmax)
            if probs[chosen] < max(probs.values()):
                violations.append((n, vectors, tuple(sorted(s_set)), tuple(sorted(d_set)),
                                   len(o.decision_space(lv, s_set)), len(d_set)))
    return checked, violations


langs = languages(3, 3)
print("languages:", len(langs))

for cs, ps, label in [
    (False, False, "A: D<=Z_S everywhere (spec literal)"),
    (True, True, "B: D<Z_S strict everywhere (paper literal)"),
    (True, False, "B'': strict child only"),
]:
    checked, v = sweep(langs, cs, ps)
    print(f"{label}: checked={checked} violations={len(v)}")
    for item in v[:10]:
        print("   ", item)

# Full unbounded task space on 2-state languages only (cheap), spec-literal D<=Z_S
small = [(n, vecs) for n, vecs in langs if n <= 2]
checked, v = sweep(small, False, False, max_parent=(8, 8), child=(1, 1))
print(f"FULL-GAMMA (2-state langs, D<=Z_S): checked={checked} violations={len(v)}")
for item in v[:10]:
    print("   ", item)
