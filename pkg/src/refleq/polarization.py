"""Consistency of half-space choices for torus weights on wall-fixed loci.

The instances built here encode the following finite combinatorial problem.
Fixed points are pairs (s, t) with s, t in 1..l.  At each point a list of
dual pairs of cohomology summands is present; each pair consists of two
labels C(a, b) with opposite torus weights, and a choice selects one label
per pair (a "polarization" of that summand pair).  Four walls in the torus
Lie algebra impose consistency: on each wall the points group into the
connected components of the corresponding fixed locus, and for the selected
labels the multiset of weight restrictions to the wall (ignoring pairs whose
restriction vanishes) must be the same at every point of a component.

solve decides whether a globally consistent choice exists.  The minus-sign
instances are satisfiable exactly at l = 2; from l = 3 on, the forced chain
of selections around a row/column cycle contradicts itself, and solve emits
that chain as a replayable UNSAT certificate.  The plus-sign instances have
no multi-point components on the axis walls, so every choice works.

Weights live in the two torus coordinates u1, u2 only; label C(a, b) has
weight u_b - u_a with u_{-k} = -u_k, and C(a, b) is identified with
C(-b, -a), so every label is stored in a normal form.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

SIGNS = ("+", "-")

# selectable label pairs, keyed by what their weights are
PAIR_LABELS = {
    "u1Axis": ("C(1,-1)", "C(-1,1)"),  # weights -2u1 / +2u1
    "u2Axis": ("C(2,-2)", "C(-2,2)"),  # weights -2u2 / +2u2
    "difference": ("C(1,2)", "C(2,1)"),  # weights u2-u1 / u1-u2
    "sum": ("C(1,-2)", "C(-2,1)"),  # weights -u1-u2 / u1+u2
}

PAIR_NAMES = tuple(PAIR_LABELS)

# wall name -> linear functional on a weight (a, b) = a*u1 + b*u2, giving the
# restriction of the weight to the wall
WALL_PHI = {
    "u1EqualsU2": lambda a, b: a + b,
    "u1PlusU2Zero": lambda a, b: a - b,
    "u1Zero": lambda a, b: b,
    "u2Zero": lambda a, b: a,
}

WALL_NAMES = tuple(WALL_PHI)

_LABEL_RE = re.compile(r"^C\((-?[12]),(-?[12])\)$")


def label_weight(label):
    """Weight coefficients (a, b) in (u1, u2) of a summand label."""
    i, j = _parse_label(label)
    return (_coeff(j, 1) - _coeff(i, 1), _coeff(j, 2) - _coeff(i, 2))


def _parse_label(label):
    m = _LABEL_RE.match(label.replace(" ", ""))
    if not m:
        raise ValueError(f"malformed summand label {label!r}")
    return int(m.group(1)), int(m.group(2))


def _coeff(index, k):
    if abs(index) != k:
        return 0
    return 1 if index > 0 else -1


def normalize_label(label):
    """Normal form under the identification C(a, b) = C(-b, -a)."""
    i, j = _parse_label(label)
    for name, labels in PAIR_LABELS.items():
        for cand in labels:
            ci, cj = _parse_label(cand)
            if (i, j) in ((ci, cj), (-cj, -ci)):
                return cand
    raise ValueError(f"label {label!r} does not belong to any known pair")


def pair_of_label(label):
    norm = normalize_label(label)
    for name, labels in PAIR_LABELS.items():
        if norm in labels:
            return name
    raise AssertionError("normalize_label returned an unknown label")


@dataclass(frozen=True)
class PolarizationInstance:
    """Immutable description of one consistency problem.

    pairs_at maps each point to the names of the pairs present there;
    components maps each wall name to the partition of the points into the
    wall's fixed-locus components (only components with at least two points
    constrain anything, but singletons are kept for completeness).
    """

    sign: str
    l: int
    points: tuple
    pairs_at: dict
    components: dict

    def pair_labels(self, name):
        return PAIR_LABELS[name]

    def tangent_dimension(self, point):
        return 2 * len(self.pairs_at[point])


def build_instance(sign, l):
    """Instance for the given torus type sign at the fixed value w1 = 2.

    Minus-sign points carry both axis pairs plus the difference pair off the
    diagonal and the sum pair on it; plus-sign points carry only the
    difference or sum pair.  The axis walls u1 = 0 and u2 = 0 have
    column/row components for the minus sign but only isolated points for
    the plus sign, which is what makes the plus instances unconstrained.
    """
    if sign not in SIGNS:
        raise ValueError(f"sign must be one of {SIGNS}, got {sign!r}")
    if l < 2:
        raise ValueError("need l >= 2")
    points = tuple((s, t) for s in range(1, l + 1) for t in range(1, l + 1))
    pairs_at = {}
    for s, t in points:
        face = "sum" if s == t else "difference"
        if sign == "-":
            pairs_at[(s, t)] = ("u1Axis", "u2Axis", face)
        else:
            pairs_at[(s, t)] = (face,)

    def singletons():
        return [(p,) for p in points]

    components = {}
    swap_pairs = [((s, t), (t, s)) for s in range(1, l + 1) for t in range(s + 1, l + 1)]
    components["u1EqualsU2"] = tuple(
        [tuple(sorted(c)) for c in swap_pairs] + [((s, s),) for s in range(1, l + 1)]
    )
    diag = tuple((i, i) for i in range(1, l + 1))
    off_diag = [((s, t),) for (s, t) in points if s != t]
    components["u1PlusU2Zero"] = tuple([diag] + off_diag)
    if sign == "-":
        components["u1Zero"] = tuple(
            tuple((s, t) for s in range(1, l + 1)) for t in range(1, l + 1)
        )
        components["u2Zero"] = tuple(
            tuple((s, t) for t in range(1, l + 1)) for s in range(1, l + 1)
        )
    else:
        components["u1Zero"] = tuple(singletons())
        components["u2Zero"] = tuple(singletons())
    return PolarizationInstance(
        sign=sign, l=l, points=points, pairs_at=pairs_at, components=components
    )


def instance_summary(inst):
    dims = {inst.tangent_dimension(p) for p in inst.points}
    return {
        "sign": inst.sign,
        "l": inst.l,
        "points": len(inst.points),
        "pairsPerPoint": len(inst.pairs_at[inst.points[0]]),
        "tangentDimension": sorted(dims),
        "componentCounts": {
            wall: sorted((len(c) for c in comps), reverse=True)
            for wall, comps in inst.components.items()
        },
    }


# ---------------------------------------------------------------------------
# choices and the consistency predicate


def _qualifying_vars(inst, wall, component):
    """(point, pair) slots whose weight restricts nontrivially to the wall."""
    phi = WALL_PHI[wall]
    out = []
    for p in component:
        for name in inst.pairs_at[p]:
            a, b = label_weight(PAIR_LABELS[name][0])
            if phi(a, b) != 0:
                out.append((p, name))
    return out


def _point_multiset(inst, wall, point, choice):
    phi = WALL_PHI[wall]
    values = []
    for name in inst.pairs_at[point]:
        a, b = label_weight(choice[(point, name)])
        v = phi(a, b)
        if v != 0:
            values.append(v)
    return sorted(values)


def _validate_choice(inst, choice):
    expected = {(p, name) for p in inst.points for name in inst.pairs_at[p]}
    got = set(choice)
    if got != expected:
        missing = sorted(expected - got)
        extra = sorted(got - expected)
        raise ValueError(
            f"choice must select exactly the present pairs; missing {missing[:3]},"
            f" extra {extra[:3]}"
        )
    normalized = {}
    for (p, name), label in choice.items():
        norm = normalize_label(label)
        if norm not in PAIR_LABELS[name]:
            raise ValueError(f"label {label!r} does not belong to pair {name} at {p}")
        normalized[(p, name)] = norm
    return normalized


def check_choice(inst, choice):
    """Wall-component consistency of a total choice.

    Returns {"ok": bool, "violations": [...]}: every violation names the
    wall, the component and the differing per-point restriction multisets.
    Partial or ill-formed choices are rejected with ValueError.
    """
    choice = _validate_choice(inst, choice)
    violations = []
    for wall in WALL_NAMES:
        for component in inst.components[wall]:
            if len(component) < 2:
                continue
            multisets = {p: _point_multiset(inst, wall, p, choice) for p in component}
            reference = multisets[component[0]]
            if any(m != reference for m in multisets.values()):
                violations.append(
                    {
                        "wall": wall,
                        "component": [list(p) for p in component],
                        "multisets": [
                            {"point": list(p), "values": multisets[p]} for p in component
                        ],
                    }
                )
    return {"ok": not violations, "violations": violations}


def choice_to_json(choice):
    return [
        {"point": list(point), "pair": pair, "selected": label}
        for (point, pair), label in sorted(choice.items())
    ]


def choice_from_json(rows):
    return {(tuple(row["point"]), row["pair"]): row["selected"] for row in rows}


# ---------------------------------------------------------------------------
# solving

# Both solver modes are complete.  The exhaustive mode backtracks over the
# per-point selections directly, pruning as soon as a finished point
# disagrees with an earlier point of a shared component.  The propagation
# mode interleaves decisions with generalized arc consistency per
# wall-component (components are small, so consistency is decided by
# enumeration) and doubles as the certificate builder for UNSAT instances.


def _components_with_vars(inst):
    out = []
    for wall in WALL_NAMES:
        for component in inst.components[wall]:
            if len(component) < 2:
                continue
            qvars = _qualifying_vars(inst, wall, component)
            if qvars:
                out.append((wall, component, tuple(qvars)))
    return out


def _complete_ok(inst, wall, component, assignment):
    phi = WALL_PHI[wall]
    reference = None
    for p in component:
        values = []
        for name in inst.pairs_at[p]:
            a, b = label_weight(assignment[(p, name)])
            v = phi(a, b)
            if v != 0:
                values.append(v)
        values.sort()
        if reference is None:
            reference = values
        elif values != reference:
            return False
    return True


def _gac(inst, wall, component, qvars, fixed):
    """Generalized arc consistency for one wall-component by enumeration.

    fixed maps some of the qualifying vars to labels.  Returns
    (satisfiable, forced) where forced maps free vars that take the same
    label in every satisfying completion to that label.
    """
    free = [v for v in qvars if v not in fixed]
    support = {v: set() for v in free}
    satisfiable = False
    for combo in itertools.product(*(PAIR_LABELS[name] for (_, name) in free)):
        assignment = dict(fixed)
        assignment.update(dict(zip(free, combo)))
        # vars outside qvars have vanishing restriction; fill arbitrarily
        for p in component:
            for name in inst.pairs_at[p]:
                assignment.setdefault((p, name), PAIR_LABELS[name][0])
        if _complete_ok(inst, wall, component, assignment):
            satisfiable = True
            for v, label in zip(free, combo):
                support[v].add(label)
            if all(len(s) == 2 for s in support.values()):
                break
    if not satisfiable:
        return False, {}
    forced = {v: next(iter(s)) for v, s in support.items() if len(s) == 1}
    return True, forced


class _Contradiction(Exception):
    def __init__(self, wall, component):
        self.wall = wall
        self.component = component


def _propagate(inst, constraints, state, trail):
    """Run GAC to fixpoint, appending forced assignments to the trail.

    Each trail entry is (var, label, wall, component, reference) with
    reference the earliest same-component var already fixed whose labels pin
    the forced one down (kept for certificate readability; the replayer
    rechecks every step independently).  Raises _Contradiction when some
    component admits no completion.
    """
    changed = True
    while changed:
        changed = False
        for wall, component, qvars in constraints:
            fixed = {v: state[v] for v in qvars if v in state}
            if not fixed:
                continue
            satisfiable, forced = _gac(inst, wall, component, qvars, fixed)
            if not satisfiable:
                raise _Contradiction(wall, component)
            for var, label in forced.items():
                reference = _first_reference(inst, wall, var, fixed, state, trail)
                state[var] = label
                trail.append(
                    {
                        "kind": "forced",
                        "var": var,
                        "label": label,
                        "wall": wall,
                        "component": component,
                        "reference": reference,
                    }
                )
                changed = True


def _first_reference(inst, wall, var, fixed, state, trail):
    phi = WALL_PHI[wall]
    (_, name) = var
    a, b = label_weight(PAIR_LABELS[name][0])
    magnitude = abs(phi(a, b))
    order = {entry["var"]: i for i, entry in enumerate(trail)}
    best = None
    for other, label in fixed.items():
        oa, ob = label_weight(PAIR_LABELS[other[1]][0])
        if abs(phi(oa, ob)) != magnitude:
            continue
        rank = order.get(other, -1)
        if best is None or rank < best[0]:
            best = (rank, other, label)
    if best is None:
        return None
    return {"point": list(best[1][0]), "pair": best[1][1], "label": best[2]}


def _all_vars(inst):
    face_first = sorted(
        ((p, name) for p in inst.points for name in inst.pairs_at[p]),
        key=lambda v: (v[1] not in ("sum", "difference"), v[0]),
    )
    return face_first


def _solve_propagation(inst):
    constraints = _components_with_vars(inst)
    variables = _all_vars(inst)

    def dfs(state, trail):
        undecided = [v for v in variables if v not in state]
        if not undecided:
            return dict(state), None
        var = undecided[0]
        failures = []
        for label in PAIR_LABELS[var[1]]:
            branch_state = dict(state)
            branch_trail = list(trail)
            branch_state[var] = label
            branch_trail.append({"kind": "assume", "var": var, "label": label})
            try:
                _propagate(inst, constraints, branch_state, branch_trail)
            except _Contradiction as c:
                failures.append((branch_trail, c))
                continue
            result, cert = dfs(branch_state, branch_trail)
            if result is not None:
                return result, None
            failures.append((cert, None))
        # both labels refuted; surface the first refutation trace
        first = failures[0]
        if first[1] is not None:
            return None, _certificate_from(inst, first[0], first[1])
        return None, first[0]

    witness, certificate = dfs({}, [])
    if witness is not None:
        return {"verdict": "SAT", "witness": witness, "certificate": None}
    return {"verdict": "UNSAT", "witness": None, "certificate": certificate}


def _certificate_from(inst, trail, contradiction):
    """Minimal replayable refutation chain extracted from a propagation trail.

    Keeps only the assignments the contradiction transitively rests on: the
    fixed qualifying vars of the contradicted component, their recorded
    references, and so on back to the assumption.  The closing step records
    the component that admits no completion; a final mirror step notes that
    flipping every selected label refutes the opposite assumption, so both
    branches of the assumption are covered.
    """
    by_var = {entry["var"]: entry for entry in trail if "var" in entry}
    state = {entry["var"]: entry["label"] for entry in trail if "var" in entry}
    qvars = _qualifying_vars(inst, contradiction.wall, contradiction.component)
    needed = set(v for v in qvars if v in state)
    frontier = list(needed)
    while frontier:
        var = frontier.pop()
        entry = by_var[var]
        ref = entry.get("reference")
        if ref is not None:
            ref_var = (tuple(ref["point"]), ref["pair"])
            if ref_var not in needed:
                needed.add(ref_var)
                frontier.append(ref_var)
    steps = []
    for entry in trail:
        if "var" not in entry or entry["var"] not in needed:
            continue
        step = {
            "kind": entry["kind"],
            "point": list(entry["var"][0]),
            "pair": entry["var"][1],
            "selected": entry["label"],
        }
        if entry["kind"] == "forced":
            step["wall"] = entry["wall"]
            step["component"] = [list(p) for p in entry["component"]]
            if entry.get("reference"):
                step["reference"] = entry["reference"]
        steps.append(step)
    steps.append(
        {
            "kind": "contradiction",
            "wall": contradiction.wall,
            "component": [list(p) for p in contradiction.component],
        }
    )
    steps.append(
        {
            "kind": "mirror",
            "note": (
                "flipping every selected label above refutes the opposite "
                "assumption by the same chain"
            ),
        }
    )
    return steps


def _solve_exhaustive(inst):
    """Complete backtracking over whole points with component pruning."""
    order = list(inst.points)
    # precompute, per point, the multi-point components it belongs to
    memberships = {p: [] for p in order}
    for wall in WALL_NAMES:
        for component in inst.components[wall]:
            if len(component) < 2:
                continue
            for p in component:
                memberships[p].append((wall, component))
    position = {p: i for i, p in enumerate(order)}
    choice = {}

    def point_ok(idx):
        p = order[idx]
        for wall, component in memberships[p]:
            mine = _point_multiset(inst, wall, p, choice)
            for q in component:
                if position[q] < idx:
                    if _point_multiset(inst, wall, q, choice) != mine:
                        return False
                    break  # earlier points of the component already agree
        return True

    def dfs(idx):
        if idx == len(order):
            return True
        p = order[idx]
        names = inst.pairs_at[p]
        for combo in itertools.product(*(PAIR_LABELS[n] for n in names)):
            for name, label in zip(names, combo):
                choice[(p, name)] = label
            if point_ok(idx) and dfs(idx + 1):
                return True
        for name in names:
            choice.pop((p, name), None)
        return False

    if dfs(0):
        return dict(choice)
    return None


def solve(inst, method=None):
    """Decide whether a consistent choice exists.

    method defaults to "exhaustive" for l <= 4 and "propagation" above;
    both are complete.  SAT results carry a witness that check_choice
    accepts; UNSAT results carry a certificate replay_certificate accepts.
    The exhaustive mode confirms UNSAT by complete enumeration and then
    calls the propagation engine for the certificate chain.
    """
    if method is None:
        method = "exhaustive" if inst.l <= 4 else "propagation"
    if method == "exhaustive":
        if inst.l > 4:
            raise ValueError("exhaustive search is limited to l <= 4")
        witness = _solve_exhaustive(inst)
        if witness is not None:
            result = {"verdict": "SAT", "witness": witness, "certificate": None}
        else:
            result = _solve_propagation(inst)
            assert result["verdict"] == "UNSAT"
    elif method == "propagation":
        result = _solve_propagation(inst)
    else:
        raise ValueError(f"unknown method {method!r}")
    result["method"] = method
    result["sign"] = inst.sign
    result["l"] = inst.l
    if result["witness"] is not None:
        verdict = check_choice(inst, result["witness"])
        assert verdict["ok"], "solver produced an inconsistent witness"
    return result


# ---------------------------------------------------------------------------
# certificate replay


def _refuted(inst, constraints_index, wall, component, state):
    qvars = constraints_index[(wall, component)]
    fixed = {v: state[v] for v in qvars if v in state}
    satisfiable, _ = _gac(inst, wall, component, qvars, fixed)
    return not satisfiable


def replay_certificate(inst, certificate):
    """Independent check of an UNSAT certificate.

    Walks the chain twice, once as recorded and once with every selected
    label flipped to its pair partner (covering the mirrored assumption).
    Each forced step must be genuinely forced: the opposite label, together
    with the selections made so far, must leave the step's wall-component
    without any satisfying completion.  The final step must exhibit a
    component with no completion at all.  Returns True only if every step
    verifies in both passes.
    """
    constraints_index = {
        (wall, component): tuple(qvars)
        for wall, component, qvars in _components_with_vars(inst)
    }

    def partner(name, label):
        a, b = PAIR_LABELS[name]
        return b if label == a else a

    def run(flip):
        state = {}
        saw_contradiction = False
        for step in certificate:
            kind = step["kind"]
            if kind == "mirror":
                continue
            if kind == "contradiction":
                wall = step["wall"]
                component = tuple(tuple(p) for p in step["component"])
                if (wall, component) not in constraints_index:
                    return False
                if not _refuted(inst, constraints_index, wall, component, state):
                    return False
                saw_contradiction = True
                continue
            var = (tuple(step["point"]), step["pair"])
            label = step["selected"]
            if flip:
                label = partner(step["pair"], label)
            if var[1] not in inst.pairs_at.get(var[0], ()):
                return False
            if kind == "forced":
                wall = step["wall"]
                component = tuple(tuple(p) for p in step["component"])
                if (wall, component) not in constraints_index:
                    return False
                trial = dict(state)
                trial[var] = partner(var[1], label)
                if not _refuted(inst, constraints_index, wall, component, trial):
                    return False
            elif kind != "assume":
                return False
            state[var] = label
        return saw_contradiction

    return run(flip=False) and run(flip=True)


def solve_table(l_values=(2, 3, 4, 5, 6)):
    """(sign, l, verdict) rows for both signs over a range of sizes."""
    rows = []
    for sign in SIGNS:
        for l in l_values:
            res = solve(build_instance(sign, l))
            rows.append({"sign": sign, "l": l, "verdict": res["verdict"]})
    return rows
