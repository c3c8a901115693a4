"""Bell-type pairs (g, zg) over Z_3: i1-decomposability and last-row formulas.

An order-n graph only sees g_0..g_{n-2}, so the derivative and A-sequence
criteria are evaluated on the window of coefficients that order n fixes:
``g' = +-g^2`` (resp. the A-sequence triple pattern) through index
``3*floor((n-2)/3) - 1``. When ``n = 1 (mod 3)`` the last vertex of V_1 adds
one more visible constraint, the next coefficient of ``g'' = -g(z^3)``:
``g_{n-2} = g_{(n-4)/3}``; on the A side this is
``a_{t+2} = s*a_{t+1} - a_t`` with ``t = n-4`` and s the pattern sign
(``a_2 = 1 - a_1^2`` at n = 4, where no sign is visible yet).
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from . import series as ps
from .graph import induced_skew, skew_from_pair
from .riordan import RiordanPair, a_sequence, bell_pair, f_from_a_sequence
from .structure import parts

__all__ = [
    "I1Report",
    "is_bell",
    "v3_is_null",
    "visible_window",
    "i1_by_definition",
    "i1_by_derivative",
    "i1_by_a_pattern",
    "i1_report",
    "bell_from_a_sequence",
    "admissible_row_order",
    "last_row_formula",
]


def is_bell(pair: RiordanPair) -> bool:
    """f == z*g on the common truncation."""
    n = pair.order
    if n == 0:
        return True
    zg = ps.shift(pair.g, 1).truncate(n)
    return zg == pair.f.truncate(n)


def _require_bell(pair: RiordanPair) -> None:
    if not is_bell(pair):
        raise ValueError("pair is not of Bell type (f != z*g)")


def _require_ternary(pair: RiordanPair) -> None:
    if pair.p != 3:
        raise ValueError("i1-decomposability is defined for p = 3")


def v3_is_null(pair: RiordanPair, n: int) -> bool:
    """Direct check that the last residue class V_p (V_3 for p = 3) spans no arcs."""
    _require_bell(pair)
    if not pair.proper:
        raise ValueError("pair must be proper")
    vp = parts(n, pair.p)[-1]
    if not vp:
        return True
    return induced_skew(skew_from_pair(pair, n), vp).is_null()


def visible_window(n: int) -> int:
    """Last coefficient index checked by the order-n derivative and A tests."""
    return 3 * ((n - 2) // 3) - 1


def _graph_order(pair: RiordanPair, n: int | None) -> int:
    m = pair.order + 1
    if n is None:
        return m
    if n > m:
        raise ValueError(f"truncation {pair.order} only determines graphs of order <= {m}")
    return n


def i1_by_definition(pair: RiordanPair, n: int) -> bool:
    """<V_1> equals G_{|V_1|}(g, f) (labelled) and V_2, ..., V_p are null."""
    _require_ternary(pair)
    if not pair.proper:
        raise ValueError("i1-decomposability needs a proper pair")
    s = skew_from_pair(pair, n)
    v = parts(n, pair.p)
    if induced_skew(s, v[0]) != skew_from_pair(pair, len(v[0])):
        return False
    return all(induced_skew(s, part).is_null() for part in v[1:] if part)


@dataclass(frozen=True)
class Verdict:
    holds: bool
    sign: int | None


def i1_by_derivative(pair: RiordanPair, n: int | None = None) -> Verdict:
    """Test g' = g^2 and g' = -g^2 on the window an order-n graph sees.

    ``n`` defaults to the largest order the truncation determines. The sign
    is None when the window is empty (n <= 4).
    """
    _require_ternary(pair)
    _require_bell(pair)
    n = _graph_order(pair, n)
    g = pair.g.truncate(max(n - 1, 1)).tolist()
    k_max = visible_window(n)
    d = ps.derivative(ps.make(g, 3, len(g))).tolist() if len(g) > 1 else []
    sq = ps.mul(ps.make(g, 3, len(g)), ps.make(g, 3, len(g))).tolist()
    signs = [
        s for s in (1, -1)
        if all((d[k] - s * sq[k]) % 3 == 0 for k in range(k_max + 1))
    ]
    if n % 3 == 1 and n >= 4 and (g[n - 2] - g[(n - 4) // 3]) % 3:
        signs = []
    if not signs:
        return Verdict(False, None)
    return Verdict(True, signs[0] if len(signs) == 1 else None)


def _a_pattern_signs(a: list[int], upto: int) -> list[int]:
    out = []
    for s in (1, -1):
        ok = a[0] == 1
        for t in range(0, upto + 1, 3):
            if t + 1 <= upto and (a[t + 1] - s * a[t]) % 3:
                ok = False
            if t + 2 <= upto and a[t + 2] % 3:
                ok = False
        if ok:
            out.append(s)
    return out


def _visible_a(pair: RiordanPair, n: int) -> list[int]:
    # f = zg is known one index past g, so a_0..a_{n-2} are all visible
    if pair.g.order == 0 or pair.g[0] != 1:
        raise ValueError("A-sequence tests need f'(0) = g(0) = 1")
    g = pair.g.truncate(min(pair.g.order, max(n - 1, 2)))
    a = a_sequence(RiordanPair(g, ps.shift(g, 1))).tolist()
    return a + [0] * (max(n - 1, 3) - len(a))


def i1_by_a_pattern(pair: RiordanPair, n: int | None = None) -> Verdict:
    """Match (1, s, 0, a_3, s*a_3, 0, ...) on the window an order-n graph sees."""
    _require_ternary(pair)
    _require_bell(pair)
    n = _graph_order(pair, n)
    a = _visible_a(pair, n)
    signs = _a_pattern_signs(a, visible_window(n))
    if n % 3 == 1 and n >= 4:
        t = n - 4
        if t == 0:
            keep = (a[2] - 1 + a[1] ** 2) % 3 == 0
            signs = signs if keep else []
        else:
            signs = [s for s in signs if (a[t + 2] - s * a[t + 1] + a[t]) % 3 == 0]
    if not signs:
        return Verdict(False, None)
    return Verdict(True, signs[0] if len(signs) == 1 else None)


@dataclass(frozen=True)
class I1Report:
    n: int
    by_definition: bool
    by_derivative: bool
    derivative_sign: int | None
    by_a_pattern: bool
    pattern_sign: int | None
    a_prefix: tuple[int, ...]

    @property
    def consistent(self) -> bool:
        return self.by_definition == self.by_derivative == self.by_a_pattern

    def to_json(self) -> str:
        d = asdict(self)
        d["a_prefix"] = list(self.a_prefix)
        d["consistent"] = self.consistent
        return json.dumps(d)


def i1_report(pair: RiordanPair, n: int) -> I1Report:
    """All three i1 verdicts for the order-n graph."""
    d = i1_by_derivative(pair, n)
    a = i1_by_a_pattern(pair, n)
    prefix = _visible_a(pair, n)[: max(n - 1, 1)]
    return I1Report(
        n=n,
        by_definition=i1_by_definition(pair, n),
        by_derivative=d.holds,
        derivative_sign=d.sign,
        by_a_pattern=a.holds,
        pattern_sign=a.sign,
        a_prefix=tuple(prefix),
    )


def bell_from_a_sequence(a: ps.TruncatedSeries, order: int | None = None) -> RiordanPair:
    """The Bell pair (g, zg) whose A-sequence is ``a`` (g = A(zg))."""
    order = a.order if order is None else order
    f = f_from_a_sequence(a, order + 1)
    return bell_pair(ps.unshift(f, 1))


def admissible_row_order(n: int) -> tuple[str, int] | None:
    """('3^i+1', i) for n = 3^i + 1 (i >= 1), ('2*3^i+1', i) for n = 2*3^i + 1 (i >= 0)."""
    m, i = n - 1, 0
    if m < 1:
        return None
    while m % 3 == 0:
        m //= 3
        i += 1
    if m == 1 and i >= 1:
        return ("3^i+1", i)
    if m == 2:
        return ("2*3^i+1", i)
    return None


def last_row_formula(pair: RiordanPair, n: int, check: bool = True) -> list[int]:
    """Closed form of row n for an i1-decomposable Bell pair.

    The sign of g' = +-g^2 is read off the pair's whole truncation. With
    ``check`` the result is compared to row n of the skew matrix.
    """
    kind = admissible_row_order(n)
    if kind is None:
        raise ValueError(f"n = {n} is neither 3^i+1 (i >= 1) nor 2*3^i+1")
    verdict = i1_by_derivative(pair)
    if not verdict.holds or verdict.sign is None:
        raise ValueError("pair is not i1-decomposable with a known derivative sign")
    form, i = kind
    q = 3**i
    alt = [(-1) ** k for k in range(q)]
    if verdict.sign == 1:
        body = alt if form == "3^i+1" else alt + alt
    else:
        body = [1] * q if form == "3^i+1" else [-1] * q + [1] * q
    row = body + [0]
    if check:
        actual = skew_from_pair(pair, n).row(n)
        if actual != row:
            raise AssertionError(f"row {n} is {actual}, closed form gives {row}")
    return row
