"""Dev probe #6: direction of weakest-model weakness as D grows (S fixed)."""
from itertools import combinations

import oracles as o
from _probe import languages, projections_of

langs = languages(3, 3)
incr = decr = equal = 0
decr_example = None
for n, vectors in langs:
    width = len(vectors)
    lv = o.valid_statements(projections_of(n, vectors), width)
    stmts = sorted(lv)
    for ns in (1, 2):
        for s in combinations(stmts, ns):
            s_set = frozenset(s)
            zs = sorted(o.decision_space(lv, s_set))
            subsets = [frozenset(c) for k in range(1, len(zs) + 1) for c in combinations(zs, k)]
            weak = {}
            for d in subsets:
                m = o.models(lv, s_set, d)
                if m:
                    weak[d] = max(o.weakness(lv, mm) for mm in m)
            ds = sorted(weak, key=sorted)
            for d1 in ds:
                for d2 in ds:
                    if d1 < d2:
                        if weak[d2] > weak[d1]:
                            incr += 1
                        elif weak[d2] < weak[d1]:
                            decr += 1
                            decr_example = decr_example or (n, vectors, sorted(s_set), sorted(d1), sorted(d2))
                        else:
                            equal += 1
print("weakest-model weakness as D grows: increased", incr, "decreased", decr, "equal", equal)
print("decrease example:", decr_example)
