"""GKM conditions on the moment graph of X(k, n) and the X(1,3) Knutson-Tao fixture."""
from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field

from .momentgraph import Character, MomentGraph, build
from .necklace import Necklace, necklace_leq, parse_necklace
from .polynomial import MultiPoly, parse_poly


def character_poly(alpha: Character) -> MultiPoly:
    return MultiPoly.linear(alpha.eps, alpha.delta)


def divides_linear(alpha: Character, p: MultiPoly) -> bool:
    """
    Whether eps_j - eps_j' - m*delta divides p, tested by substituting
    eps_j := eps_j' + m*delta and checking for zero.
    """
    try:
        j, jp = alpha.indices()
    except ValueError as exc:
        raise ValueError(f"not an edge label: {exc}") from None
    n = len(alpha.eps)
    if p.nvars != n + 1:
        raise ValueError(f"polynomial has {p.nvars} variables, label needs {n + 1}")
    value = MultiPoly.var(n + 1, jp - 1) - MultiPoly.var(n + 1, n).scale(alpha.delta)
    return p.substitute(j - 1, value).is_zero()


@dataclass
class GkmTuple:
    k: int
    n: int
    values: dict[Necklace, MultiPoly]

    def to_dict(self) -> dict:
        return {"k": self.k, "n": self.n,
                "values": {N.to_json(): str(p) for N, p in self.values.items()}}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "GkmTuple":
        k, n = d["k"], d["n"]
        values = {parse_necklace(key, k, n): parse_poly(str(v), n) for key, v in d["values"].items()}
        return cls(k, n, values)

    @classmethod
    def from_json(cls, text: str) -> "GkmTuple":
        return cls.from_dict(json.loads(text))

    def degree(self) -> int:
        """Largest cohomological degree among the entries."""
        return max(p.degree() for p in self.values.values())

    def support(self) -> list[Necklace]:
        return [N for N, p in self.values.items() if p]


def _check_keys(t: GkmTuple, g: MomentGraph) -> None:
    if set(t.values) != set(g.vertices) or len(t.values) != len(g.vertices):
        missing = [str(v) for v in g.vertices if v not in t.values]
        extra = [str(v) for v in t.values if v not in g.index]
        raise ValueError(f"tuple keys do not match the vertices (missing {missing}, unexpected {extra})")


def gkm_violations(t: GkmTuple, g: MomentGraph) -> list[tuple[Necklace, Necklace, Character]]:
    """Edges src -> dst whose label does not divide z_src - z_dst."""
    _check_keys(t, g)
    bad = []
    for e in g.edges:
        src, dst = g.vertices[e.src], g.vertices[e.dst]
        if not divides_linear(e.label, t.values[src] - t.values[dst]):
            bad.append((src, dst, e.label))
    return bad


def is_gkm_class(t: GkmTuple, g: MomentGraph) -> bool:
    return not gkm_violations(t, g)


def euler_class(g: MomentGraph, N: Necklace) -> MultiPoly:
    """Product of the labels of the edges leaving N."""
    out = MultiPoly.const(g.n + 1, 1)
    for e in g.out_edges(N):
        out = out * character_poly(e.label)
    return out


# Entries in the order z_123, z_121, z_133, z_223, z_111, z_222, z_333;
# a<i><j> stands for eps_i - eps_j.
KT_ORDER = ("123", "121", "133", "223", "111", "222", "333")
KT_TUPLES = (
    ("1", "1", "1", "1", "1", "1", "1"),
    ("0", "0", "a32-d", "0", "a12-2d", "0", "a32-d"),
    ("0", "a13-d", "0", "0", "a13-d", "a23-2d", "0"),
    ("0", "0", "0", "a21-d", "0", "a21-d", "a31-2d"),
    ("0", "0", "0", "0", "(a12-2d)(a13-d)", "0", "0"),
    ("0", "0", "0", "0", "0", "(a21-d)(a23-2d)", "0"),
    ("0", "0", "0", "0", "0", "0", "(a21-d)(a32-d)"),
)


def _expand_alpha(text: str) -> str:
    return re.sub(r"a(\d)(\d)", r"(e\1-e\2)", text)


def kt_tuples(rows=KT_TUPLES) -> list[GkmTuple]:
    """The X(1,3) fixture as GkmTuples (``rows`` may be replaced for negative tests)."""
    keys = [parse_necklace(s, 1, 3) for s in KT_ORDER]
    return [GkmTuple(1, 3, {N: parse_poly(_expand_alpha(x), 3) for N, x in zip(keys, row)})
            for row in rows]


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class KtReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def render(self) -> str:
        return "\n".join(f"{'PASS' if c.passed else 'FAIL'} {c.name}" + (f": {c.detail}" if c.detail else "")
                         for c in self.checks) + "\n"


def support_minimum(t: GkmTuple) -> Necklace | None:
    """The unique minimal vertex of the support, or None if there is none."""
    supp = t.support()
    mins = [x for x in supp if not any(y != x and necklace_leq(y, x) for y in supp)]
    return mins[0] if len(mins) == 1 else None


def verify_kt_example(rows=KT_TUPLES) -> KtReport:
    g = build(1, 3)
    tuples = kt_tuples(rows)
    report = KtReport()
    for idx, t in enumerate(tuples, start=1):
        bad = gkm_violations(t, g)
        report.checks.append(Check(
            f"tuple {idx} is a GKM class", not bad,
            "; ".join(f"label {a.render()} of {s}->{d} does not divide z_{s} - z_{d}" for s, d, a in bad),
        ))
    hist = Counter(t.degree() for t in tuples)
    want = {0: 1, 2: 3, 4: 3}
    report.checks.append(Check("degree histogram {0:1, 2:3, 4:3}", dict(hist) == want,
                               "" if dict(hist) == want else f"got {dict(sorted(hist.items()))}"))
    for idx, t in enumerate(tuples, start=1):
        low = support_minimum(t)
        if low is None:
            report.checks.append(Check(f"tuple {idx} leading entry", False, "support has no unique minimum"))
            continue
        e = euler_class(g, low)
        ok = t.values[low] == e
        report.checks.append(Check(
            f"tuple {idx} entry at {low} is its euler class", ok,
            "" if ok else f"entry {t.values[low]} but euler class {e}",
        ))
    return report
